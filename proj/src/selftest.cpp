#include "qnichols/selftest.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "qnichols/errors.hpp"
#include "qnichols/linalg.hpp"

namespace qnichols {

namespace {

UElement elem(const NormalWord& w) {
    UElement x;
    x.add(w, RatQ(1));
    return x;
}

/// Random small element: up to three words made of random letters.
UElement random_element(const UqEngine& eng, std::mt19937& rng,
                        std::size_t max_letters, bool allow_e) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> nlet(0, static_cast<int>(max_letters));
    std::uniform_int_distribution<int> letter(0, static_cast<int>(eng.rank()) - 1);
    std::uniform_int_distribution<int> kv(-1, 1);
    std::uniform_int_distribution<int> cf(-2, 2);
    std::uniform_int_distribution<int> ce(-1, 1);
    UElement x;
    const int t = nterms(rng);
    for (int a = 0; a < t; ++a) {
        std::vector<UElement> parts{eng.one()};
        const int nf = nlet(rng);
        for (int b = 0; b < nf; ++b) parts.push_back(eng.F(letter(rng)));
        KVec mu(eng.rank());
        for (auto& v : mu) v = kv(rng);
        parts.push_back(eng.K(mu));
        if (allow_e) {
            const int ne = nlet(rng);
            for (int b = 0; b < ne; ++b) parts.push_back(eng.E(letter(rng)));
        }
        long c = cf(rng);
        if (c == 0) c = 1;
        x += eng.multiply(parts) * (RatQ(c) * RatQ::q_power(ce(rng)));
    }
    return x;
}

using Tensor3 = std::map<std::tuple<NormalWord, NormalWord, NormalWord>, RatQ>;

void t3_add(Tensor3& t, const NormalWord& a, const NormalWord& b,
            const NormalWord& c, const RatQ& v) {
    if (v.is_zero()) return;
    const auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

/// All residues of the defining relations on the engine's datum.
std::string defining_relations(const UqEngine& eng) {
    const RootDatum& d = eng.datum();
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        KVec mu(n, 0);
        mu[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const long kexp = eng.k_exponent(mu, j);
            if (eng.multiply(eng.K(mu), eng.F(j)) !=
                eng.multiply(eng.F(j), eng.K(mu)) * RatQ::q_power(-kexp))
                return "K[" + std::to_string(i + 1) + "]-F[" +
                       std::to_string(j + 1) + "] commutation residue";
            if (eng.multiply(eng.K(mu), eng.E(j)) !=
                eng.multiply(eng.E(j), eng.K(mu)) * RatQ::q_power(kexp))
                return "K[" + std::to_string(i + 1) + "]-E[" +
                       std::to_string(j + 1) + "] commutation residue";
            UElement comm = eng.multiply(eng.E(i), eng.F(j)) -
                            eng.multiply(eng.F(j), eng.E(i));
            if (i == j)
                comm -= (eng.H(i) - eng.Hinv(i)) *
                        RatQ(LaurentQ::one(), q_gap(d.c(i)));
            if (!comm.is_zero())
                return "E[" + std::to_string(i + 1) + "]-F[" +
                       std::to_string(j + 1) + "] commutation residue";
            if (i == j) continue;
            const long m = 1 - d.cartan(i, j);
            UElement fserre, eserre;
            for (long s = 0; s <= m; ++s) {
                std::vector<UElement> fparts, eparts;
                for (long t = 0; t < m - s; ++t) {
                    fparts.push_back(eng.F(i));
                    eparts.push_back(eng.E(i));
                }
                fparts.push_back(eng.F(j));
                eparts.push_back(eng.E(j));
                for (long t = 0; t < s; ++t) {
                    fparts.push_back(eng.F(i));
                    eparts.push_back(eng.E(i));
                }
                const RatQ coeff = RatQ(q_binom(m, s, d.c(i))) *
                                   RatQ(s % 2 ? -1 : 1);
                fserre += eng.multiply(fparts) * coeff;
                eserre += eng.multiply(eparts) * coeff;
            }
            if (!fserre.is_zero())
                return "F-Serre residue nonzero at (" + std::to_string(i + 1) +
                       "," + std::to_string(j + 1) + "): " + fserre.str();
            if (!eserre.is_zero())
                return "E-Serre residue nonzero at (" + std::to_string(i + 1) +
                       "," + std::to_string(j + 1) + "): " + eserre.str();
        }
    }
    return "";
}

std::string hopf_axioms(const UqEngine& eng, std::mt19937& rng, int count) {
    for (int t = 0; t < count; ++t) {
        const UElement x = random_element(eng, rng, 2, true);
        const UElement y = random_element(eng, rng, 1, true);
        if (eng.coproduct(eng.multiply(x, y)) !=
            eng.tensor_multiply(eng.coproduct(x), eng.coproduct(y)))
            return "coproduct not multiplicative on sample " + std::to_string(t);
        if (eng.counit(eng.multiply(x, y)) != eng.counit(x) * eng.counit(y))
            return "counit not multiplicative on sample " + std::to_string(t);
        const TensorElement dx = eng.coproduct(x);
        // coassociativity
        Tensor3 lhs, rhs;
        for (const auto& [p, c] : dx.terms()) {
            const TensorElement da = eng.coproduct(elem(p.first));
            for (const auto& [pa, ca] : da.terms())
                t3_add(lhs, pa.first, pa.second, p.second, c * ca);
            const TensorElement db = eng.coproduct(elem(p.second));
            for (const auto& [pb, cb] : db.terms())
                t3_add(rhs, p.first, pb.first, pb.second, c * cb);
        }
        if (lhs != rhs)
            return "coproduct not coassociative on sample " + std::to_string(t);
        // counit laws
        UElement left, right;
        for (const auto& [p, c] : dx.terms()) {
            UElement a = elem(p.second);
            a *= c * eng.counit(elem(p.first));
            left += a;
            UElement b = elem(p.first);
            b *= c * eng.counit(elem(p.second));
            right += b;
        }
        if (left != x || right != x)
            return "counit law failed on sample " + std::to_string(t);
        // antipode convolution identities
        UElement conv1, conv2;
        for (const auto& [p, c] : dx.terms()) {
            UElement a = eng.multiply(eng.antipode(elem(p.first)), elem(p.second));
            a *= c;
            conv1 += a;
            UElement b = eng.multiply(elem(p.first), eng.antipode(elem(p.second)));
            b *= c;
            conv2 += b;
        }
        const UElement target = eng.scalar(eng.counit(x));
        if (conv1 != target || conv2 != target)
            return "antipode convolution failed on sample " + std::to_string(t);
        if (eng.antipode(eng.multiply(x, y)) !=
            eng.multiply(eng.antipode(y), eng.antipode(x)))
            return "antipode not an anti-homomorphism on sample " +
                   std::to_string(t);
    }
    return "";
}

std::string pairing_agreement(const UqEngine& eng, std::mt19937& rng,
                              int count) {
    for (int t = 0; t < count; ++t) {
        const UElement x = random_element(eng, rng, 2, false);
        const UElement z = random_element(eng, rng, 2, false);
        const RatQ direct = eng.pair_borel(x, z);
        const RatQ viacop = eng.pair_borel_alt(x, z);
        if (direct != viacop)
            return "pairing evaluations disagree on sample " +
                   std::to_string(t) + ": " + direct.str() + " vs " +
                   viacop.str();
    }
    return "";
}

std::string braid_equation() {
    const UqEngine eng(builtin_datum("A", 3), 10);
    const BraidedEngine b(eng, levi_subdatum(builtin_datum("A", 3), {0, 1}));
    const BraidingMatrix bm = b.braiding_matrix(1, 1);
    const RatMat& m = bm.entries;
    if (rat_det(m) == RatQ()) return "degree-1 braiding is singular";
    const RatMat id(rat_identity(bm.dim_left));
    const RatMat m23 = rat_kron(m, id);
    const RatMat m12 = rat_kron(id, m);
    if (rat_mul(rat_mul(m23, m12), m23) != rat_mul(rat_mul(m12, m23), m12))
        return "braid equation failed on the degree-1 braiding";
    return "";
}

std::string graded_double(unsigned max_degree) {
    {
        const UqEngine eng(builtin_datum("A", 3),
                           std::max<std::size_t>(4, 3 * max_degree));
        const BraidedEngine b(eng,
                              levi_subdatum(builtin_datum("A", 3), {0, 1}));
        const std::vector<std::size_t> golden = {1, 3, 6, 10};
        for (unsigned n = 0; n <= max_degree; ++n) {
            const BnResult& bn = b.compute_bn(n);
            if (!bn.certificate.agreed)
                return "graded routes disagree at degree " + std::to_string(n);
            if (n < golden.size() && bn.basis.dim() != golden[n])
                return "unexpected graded dimension " +
                       std::to_string(bn.basis.dim()) + " at degree " +
                       std::to_string(n);
        }
    }
    {
        const UqEngine eng(builtin_datum("A", 1),
                           std::max<std::size_t>(2, max_degree + 1));
        const BraidedEngine b(eng, levi_subdatum(builtin_datum("A", 1), {}));
        for (unsigned n = 0; n <= max_degree; ++n) {
            const BnResult& bn = b.compute_bn(n);
            if (!bn.certificate.agreed)
                return "graded routes disagree at degree " + std::to_string(n);
            if (bn.basis.dim() != 1)
                return "unexpected graded dimension " +
                       std::to_string(bn.basis.dim()) + " at degree " +
                       std::to_string(n);
        }
    }
    return "";
}

std::string bosonisation(std::mt19937& rng, int count) {
    const UqEngine eng(builtin_datum("A", 3), 8);
    const BraidedEngine b(eng, levi_subdatum(builtin_datum("A", 3), {0, 1}));
    std::vector<UElement> pool;
    for (int t = 0; t < count; ++t)
        pool.push_back(random_element(eng, rng, 2, false));
    for (int t = 0; t < count; ++t) {
        const TensorElement ux = b.upsilon(pool[t]);
        if (b.upsilon_inv(ux) != pool[t])
            return "bosonisation round-trip failed on sample " +
                   std::to_string(t);
        const UElement& y = pool[(t + 1) % count];
        if (b.upsilon(eng.multiply(pool[t], y)) !=
            b.smash_multiply(ux, b.upsilon(y)))
            return "smash multiplication mismatch on sample " +
                   std::to_string(t);
    }
    return "";
}

} // namespace

SelfTestResult run_selftest(const SelfTestOptions& opts) {
    SelfTestResult res;
    if (opts.max_degree == 0) return res;

    std::mt19937 rng(static_cast<std::mt19937::result_type>(opts.seed));
    auto guard = [&](const std::string& name,
                     const std::function<std::string()>& f) {
        std::string w;
        try {
            w = f();
        } catch (const Error& e) {
            w = std::string("exception: ") + e.what();
        }
        res.checks.push_back({name, w.empty(), w});
        if (!w.empty() && res.ok) {
            res.ok = false;
            res.witness = name + ": " + w;
        }
    };

    UqEngine eng(builtin_datum("A", 3), 8);
    if (opts.corrupt_serre) eng.corrupt_serre_coefficient();

    guard("defining-relations", [&] { return defining_relations(eng); });
    guard("hopf-axioms", [&] { return hopf_axioms(eng, rng, 24); });
    guard("pairing-agreement", [&] { return pairing_agreement(eng, rng, 24); });
    guard("braid-equation", [&] { return braid_equation(); });
    guard("graded-double-computation",
          [&] { return graded_double(opts.max_degree); });
    guard("bosonisation", [&] { return bosonisation(rng, 12); });
    return res;
}

} // namespace qnichols
