/**
 * @file uq_hopf.cpp
 * @brief Coproduct, counit, antipode, adjoint action, weights, the Hopf
 *        pairing of the F/K part, and graded slices of the Borel part.
 *
 * The coproduct and antipode are computed letter by letter: Delta is an
 * algebra map, so Delta(w) is the ordered product of the generator
 * coproducts, and S is an anti-homomorphism, so S(w) is the reversed product
 * of the generator antipodes.
 *
 * The pairing is extended from the generator values by
 *     <xy, z> = sum <x, z_(2)> <y, z_(1)>
 *     <x, yz> = sum <x_(2), y> <x_(1), z>
 * (both laws read the decomposed argument against the flipped coproduct;
 * this is the unique orientation compatible with Delta F = F x H^{-1} + 1 x F,
 * as the K/F commutation scalar otherwise breaks well-definedness).
 *
 * Evaluation peels the left letter F_i of x using the first law: the terms
 * of Delta(z) whose second factor has exactly one F letter are indexed by a
 * position p of z, contribute <F_i, F_{z_p} K_*> = -delta/(q_i - q_i^{-1})
 * times q^{sum_{t<p} (i . z_t)} over the letters still present before p
 * (the scalar from moving their H^{-1} factors across F_{z_p}), and leave
 * the first factor F_{z minus p} K_nu with the K part untouched.  The
 * recursion therefore only needs the set of unconsumed z positions, which
 * is memoized as a bitmask.  An independent evaluation through full
 * coproducts is kept as a cross-check.
 */
#include "qnichols/uq.hpp"

#include <algorithm>
#include <functional>

namespace qnichols {

namespace {

NormalWord nw_one(std::size_t rank) { return NormalWord{{}, KVec(rank, 0), {}}; }

NormalWord nw_f(std::size_t rank, std::uint8_t i) {
    return NormalWord{{i}, KVec(rank, 0), {}};
}

NormalWord nw_e(std::size_t rank, std::uint8_t i) {
    return NormalWord{{}, KVec(rank, 0), {i}};
}

NormalWord nw_k(KVec mu) { return NormalWord{{}, std::move(mu), {}}; }

bool k_nonzero(const KVec& k) {
    return std::any_of(k.begin(), k.end(), [](long v) { return v != 0; });
}

} // namespace

// ---------------------------------------------------------------------------
// Coproduct, counit, antipode, adjoint
// ---------------------------------------------------------------------------

TensorElement UqEngine::coproduct(const UElement& x) const {
    TensorElement result;
    for (const auto& [w, c] : x.terms()) {
        TensorElement acc;
        acc.add(nw_one(rank()), nw_one(rank()), c);
        auto step = [&](const TensorElement& letter) {
            acc = tensor_multiply(acc, letter);
        };
        for (auto i : w.f) {
            // Delta F_i = F_i x H_i^{-1} + 1 x F_i
            TensorElement d;
            KVec hinv(rank(), 0);
            hinv[i] = -datum_.c(i);
            d.add(nw_f(rank(), i), nw_k(std::move(hinv)), RatQ(1));
            d.add(nw_one(rank()), nw_f(rank(), i), RatQ(1));
            step(d);
        }
        if (k_nonzero(w.k)) {
            TensorElement d;
            d.add(nw_k(w.k), nw_k(w.k), RatQ(1));
            step(d);
        }
        for (auto i : w.e) {
            // Delta E_i = E_i x 1 + H_i x E_i
            TensorElement d;
            KVec h(rank(), 0);
            h[i] = datum_.c(i);
            d.add(nw_e(rank(), i), nw_one(rank()), RatQ(1));
            d.add(nw_k(std::move(h)), nw_e(rank(), i), RatQ(1));
            step(d);
        }
        result += acc;
    }
    return result;
}

RatQ UqEngine::counit(const UElement& x) const {
    RatQ r;
    for (const auto& [w, c] : x.terms())
        if (w.f.empty() && w.e.empty()) r += c;
    return r;
}

UElement UqEngine::antipode(const UElement& x) const {
    UElement result;
    for (const auto& [w, c] : x.terms()) {
        // Letter antipodes, multiplied in reverse order of the word.
        std::vector<UElement> parts;
        for (auto it = w.e.rbegin(); it != w.e.rend(); ++it) {
            // S(E_i) = -H_i^{-1} E_i
            UElement s;
            KVec hinv(rank(), 0);
            hinv[*it] = -datum_.c(*it);
            s.add(NormalWord{{}, std::move(hinv), {*it}}, RatQ(-1));
            parts.push_back(std::move(s));
        }
        if (k_nonzero(w.k)) {
            KVec neg = w.k;
            for (auto& v : neg) v = -v;
            parts.push_back(K(neg));
        }
        for (auto it = w.f.rbegin(); it != w.f.rend(); ++it) {
            // S(F_i) = -F_i H_i
            UElement s;
            KVec h(rank(), 0);
            h[*it] = datum_.c(*it);
            s.add(NormalWord{{*it}, std::move(h), {}}, RatQ(-1));
            parts.push_back(std::move(s));
        }
        UElement prod = multiply(parts);
        result += prod * c;
    }
    return result;
}

UElement UqEngine::adjoint(const UElement& u, const UElement& v) const {
    UElement result;
    const TensorElement du = coproduct(u);
    for (const auto& [p, c] : du.terms()) {
        UElement left;
        left.add(p.first, c);
        UElement right;
        right.add(p.second, RatQ(1));
        result += multiply(multiply(left, v), antipode(right));
    }
    return result;
}

std::optional<KVec> UqEngine::weight(const UElement& x) const {
    if (x.is_zero()) return KVec(rank(), 0);
    std::optional<KVec> w;
    for (const auto& [nw, c] : x.terms()) {
        (void)c;
        KVec cur(rank(), 0);
        for (auto i : nw.f) --cur[i];
        for (auto i : nw.e) ++cur[i];
        if (!w)
            w = std::move(cur);
        else if (*w != cur)
            return std::nullopt;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Pairing of the F/K part
// ---------------------------------------------------------------------------

RatQ UqEngine::pair_words(const NormalWord& x, const NormalWord& z) const {
    if (x.f.size() != z.f.size()) return RatQ();
    const std::size_t m = z.f.size();
    if (m >= 31) throw BoundError("pairing words longer than 30 letters");

    long base_exp = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x.k[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j)
            base_exp += x.k[i] * cartan_[i][j] * z.k[j];
    }

    std::vector<std::optional<RatQ>> memo(std::size_t(1) << m);
    std::function<const RatQ&(std::uint32_t)> rec =
        [&](std::uint32_t mask) -> const RatQ& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        if (mask == 0) {
            slot = RatQ::q_power(base_exp);
            return *slot;
        }
        std::size_t pos = m;
        for (std::uint32_t b = mask; b; b >>= 1) pos -= (b & 1u);
        const std::uint8_t i = x.f[pos];
        RatQ sum;
        for (std::size_t p = 0; p < m; ++p) {
            if (!(mask & (1u << p)) || z.f[p] != i) continue;
            long ex = 0;
            for (std::size_t t = 0; t < p; ++t)
                if (mask & (1u << t))
                    ex += datum_.c(i) * cartan_[i][z.f[t]];
            sum += RatQ::q_power(ex) * rec(mask & ~(1u << p));
        }
        slot = sum * RatQ(LaurentQ(-1), q_gap(datum_.c(i)));
        return *slot;
    };
    return rec((std::uint32_t(1) << m) - 1);
}

RatQ UqEngine::pair_borel(const UElement& x, const UElement& z) const {
    for (const auto& [w, c] : x.terms())
        if (!w.e.empty()) throw InputError("pairing is defined on the F/K part");
    for (const auto& [w, c] : z.terms())
        if (!w.e.empty()) throw InputError("pairing is defined on the F/K part");
    RatQ r;
    for (const auto& [xw, xc] : x.terms())
        for (const auto& [zw, zc] : z.terms())
            r += xc * zc * pair_words(xw, zw);
    return r;
}

RatQ UqEngine::pair_borel_alt(const UElement& x, const UElement& z) const {
    for (const auto& [w, c] : x.terms())
        if (!w.e.empty()) throw InputError("pairing is defined on the F/K part");
    for (const auto& [w, c] : z.terms())
        if (!w.e.empty()) throw InputError("pairing is defined on the F/K part");

    // <F_i, w> against a single normal word.
    auto pair_letter = [&](std::uint8_t i, const NormalWord& w) -> RatQ {
        if (w.f.size() != 1 || !w.e.empty() || w.f[0] != i) return RatQ();
        return RatQ(LaurentQ(-1), q_gap(datum_.c(i)));
    };

    std::function<RatQ(const NormalWord&, const NormalWord&)> rec =
        [&](const NormalWord& xw, const NormalWord& zw) -> RatQ {
        if (xw.f.empty()) {
            if (!zw.f.empty()) return RatQ();
            long e = 0;
            for (std::size_t i = 0; i < rank(); ++i)
                for (std::size_t j = 0; j < rank(); ++j)
                    e += xw.k[i] * cartan_[i][j] * zw.k[j];
            return RatQ::q_power(e);
        }
        UElement zelt;
        zelt.add(zw, RatQ(1));
        NormalWord xrest{Word(xw.f.begin() + 1, xw.f.end()), xw.k, {}};
        RatQ sum;
        const TensorElement dz = coproduct(zelt);
        for (const auto& [p, c] : dz.terms()) {
            // <xy, z> = sum <x, z_(2)> <y, z_(1)> with x the leading letter.
            RatQ head = pair_letter(xw.f[0], p.second);
            if (head.is_zero()) continue;
            sum += c * head * rec(xrest, p.first);
        }
        return sum;
    };

    RatQ r;
    for (const auto& [xw, xc] : x.terms())
        for (const auto& [zw, zc] : z.terms())
            r += xc * zc * rec(xw, zw);
    return r;
}

// ---------------------------------------------------------------------------
// Graded slices of the Borel part
// ---------------------------------------------------------------------------

BorelSlice borel_slice(const UqEngine& engine, const SubRootDatum& s,
                       unsigned n, const std::optional<KVec>& weight,
                       std::size_t max_flen, const std::vector<KVec>& kbox) {
    const std::size_t r = engine.rank();
    if (s.ambient() != engine.datum())
        throw InputError("sub-root datum does not match the engine's datum");

    std::vector<KVec> degs;
    if (weight) {
        if (weight->size() != r)
            throw InputError("weight vector must have length |I|");
        KVec m(r);
        bool ok = true;
        long chi = 0;
        for (std::size_t i = 0; i < r; ++i) {
            m[i] = -(*weight)[i];
            if (m[i] < 0) ok = false;
            if (!s.in_iota_image(i)) chi += m[i];
        }
        if (ok && chi == static_cast<long>(n)) degs.push_back(std::move(m));
    } else {
        if (max_flen < n) max_flen = n;
        // All multidegrees with chi-degree exactly n and total <= max_flen.
        KVec m(r, 0);
        std::function<void(std::size_t, long, long)> walk =
            [&](std::size_t i, long chi_left, long total_left) {
            if (i == r) {
                if (chi_left == 0) degs.push_back(m);
                return;
            }
            long cap = s.in_iota_image(i) ? total_left - chi_left : chi_left;
            for (long v = 0; v <= cap; ++v) {
                m[i] = v;
                walk(i + 1, s.in_iota_image(i) ? chi_left : chi_left - v,
                     total_left - v);
            }
            m[i] = 0;
        };
        walk(0, static_cast<long>(n), static_cast<long>(max_flen));
        std::sort(degs.begin(), degs.end());
    }

    std::vector<KVec> ks = kbox;
    if (ks.empty()) ks.push_back(KVec(r, 0));
    for (const KVec& mu : ks)
        if (mu.size() != r)
            throw InputError("K exponent vector must have length |I|");

    BorelSlice out;
    for (const KVec& m : degs)
        for (const Word& w : engine.standard_words(m))
            for (const KVec& mu : ks)
                out.words.push_back(NormalWord{w, mu, {}});
    return out;
}

} // namespace qnichols
