/**
 * @file braided.cpp
 * @brief Coinvariant algebra of a sub-root datum: projection, bosonisation,
 *        graded bases via two independent routes, braiding, and the derived
 *        structure reports.
 */
#include "qnichols/braided.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qnichols/errors.hpp"

namespace qnichols {

namespace {

NormalWord unit_word(const UqEngine& eng) {
    return eng.one().terms().begin()->first;
}

std::string kvec_label(const char* head, const KVec& v) {
    std::string s(head);
    s += "[";
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(v[t]);
    }
    s += "]";
    return s;
}

/// Index tuple of a flat column index, leftmost position most significant.
std::vector<std::size_t> decode_tuple(std::size_t col, unsigned n,
                                      std::size_t base) {
    std::vector<std::size_t> tup(n, 0);
    for (unsigned t = n; t-- > 0;) {
        tup[t] = col % base;
        col /= base;
    }
    return tup;
}

/// Sign of the lowest-exponent numerator coefficient; 0 for zero.
int lowest_sign(const RatQ& x) {
    if (x.is_zero()) return 0;
    return sgn(x.num().coeffs().begin()->second);
}

} // namespace

/**
 * Fully reduced echelon set of Borel elements with the deterministic pivot
 * rule "smallest normal word".  Rows are kept pivot-normalized (pivot
 * coefficient 1) and mutually reduced (no row contains another row's pivot),
 * which makes the row map unique for the spanned subspace.
 */
class BraidedEngine::Echelon {
public:
    /// Eliminate every pivot word of the current rows from x.
    UElement reduce(UElement x) const {
        for (;;) {
            std::vector<std::pair<NormalWord, RatQ>> hits;
            for (const auto& [w, c] : x.terms())
                if (rows_.count(w)) hits.emplace_back(w, c);
            if (hits.empty()) return x;
            for (const auto& [w, c] : hits) {
                UElement sub = rows_.at(w);
                sub *= c;
                x -= sub;
            }
        }
    }

    /// Reduce and, if nonzero, adjoin as a new row; back-substitutes into the
    /// existing rows.  Returns the pivot and the stored row when adjoined.
    std::optional<std::pair<NormalWord, UElement>> insert(UElement x) {
        x = reduce(std::move(x));
        if (x.is_zero()) return std::nullopt;
        const NormalWord pivot = x.terms().begin()->first;
        x *= x.coeff(pivot).inverse();
        for (auto& [pw, row] : rows_) {
            (void)pw;
            RatQ c = row.coeff(pivot);
            if (!c.is_zero()) {
                UElement sub = x;
                sub *= c;
                row -= sub;
            }
        }
        auto it = rows_.emplace(pivot, std::move(x)).first;
        return std::make_pair(pivot, it->second);
    }

    const std::map<NormalWord, UElement>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

private:
    std::map<NormalWord, UElement> rows_;
};

/// Result of a breadth-first adjoint closure, with per-seed attribution.
struct BraidedEngine::Closure {
    Echelon ech;
    bool complete = true;
    std::string note;
    /// Pivots contributed by each seed, in insertion order.
    std::vector<std::vector<NormalWord>> seed_pivots;
};

BraidedEngine::BraidedEngine(const UqEngine& engine, SubRootDatum sub,
                             std::size_t orbit_cap)
    : eng_(engine), sub_(std::move(sub)), cap_(orbit_cap) {
    if (cap_ == 0) throw InputError("BraidedEngine: orbit cap must be positive");
    if (!(eng_.datum() == sub_.ambient()))
        throw InputError(
            "BraidedEngine: the engine datum differs from the ambient datum "
            "of the embedding");
    sub_.require_valid();
    in_d_.assign(eng_.rank(), false);
    for (std::size_t d : sub_.complement()) in_d_[d] = true;
    iota_ambient_ = sub_.iota();
}

// ---------------------------------------------------------------------------
// grading

unsigned BraidedEngine::chi(const NormalWord& w) const {
    if (!w.e.empty())
        throw InputError("chi: raising letters outside the Borel part");
    unsigned n = 0;
    for (auto i : w.f)
        if (in_d_[i]) ++n;
    return n;
}

std::optional<unsigned> BraidedEngine::chi(const UElement& x) const {
    if (x.is_zero()) return 0u;
    std::optional<unsigned> deg;
    for (const auto& [w, c] : x.terms()) {
        (void)c;
        unsigned n = chi(w);
        if (!deg)
            deg = n;
        else if (*deg != n)
            return std::nullopt;
    }
    return deg;
}

void BraidedEngine::require_borel(const UElement& x, const char* who) const {
    for (const auto& [w, c] : x.terms()) {
        (void)c;
        if (!w.e.empty())
            throw InputError(std::string(who) +
                             ": element has raising letters outside the "
                             "Borel part");
    }
}

// ---------------------------------------------------------------------------
// projections and coinvariance

UElement BraidedEngine::pi0(const UElement& x) const {
    require_borel(x, "pi0");
    UElement out;
    for (const auto& [w, c] : x.terms())
        if (chi(w) == 0) out.add(w, c);
    return out;
}

/*
 * Pi(F_i u) peels the left letter: with Delta(F_i) = F_i (x) H_i^-1 + 1 (x) F_i
 * and pi an algebra map that kills F_d for deleted d,
 *
 *   Pi(F_i u) = F_i Pi(u) H_i - [i not deleted] Pi(u) F_i H_i.
 *
 * K-parts wash out of Pi entirely (Pi(h K_mu) = Pi(h)), so the cache is keyed
 * by the lowering letters alone.
 */
const UElement& BraidedEngine::pi_word(const Word& f) const {
    std::lock_guard<std::recursive_mutex> lk(mutex_);
    auto it = pi_cache_.find(f);
    if (it != pi_cache_.end()) return it->second;
    UElement out;
    if (f.empty()) {
        out = eng_.one();
    } else {
        const std::size_t i = f.front();
        Word rest(f.begin() + 1, f.end());
        const UElement& pr = pi_word(rest);
        out = eng_.multiply({eng_.F(i), pr, eng_.H(i)});
        if (!in_d_[i]) out -= eng_.multiply({pr, eng_.F(i), eng_.H(i)});
    }
    return pi_cache_.emplace(f, std::move(out)).first->second;
}

UElement BraidedEngine::pi(const UElement& x) const {
    require_borel(x, "pi");
    UElement out;
    for (const auto& [w, c] : x.terms()) {
        UElement p = pi_word(w.f);
        p *= c;
        out += p;
    }
    return out;
}

bool BraidedEngine::is_coinvariant(const UElement& x) const {
    require_borel(x, "is_coinvariant");
    if (x.is_zero()) return true;
    const TensorElement dx = coproduct_of(x);
    TensorElement lhs;
    for (const auto& [p, c] : dx.terms())
        if (chi(p.second) == 0) lhs.add(p.first, p.second, c);
    TensorElement rhs;
    const NormalWord unit = unit_word(eng_);
    for (const auto& [w, c] : x.terms()) rhs.add(w, unit, c);
    return lhs == rhs;
}

BElement BraidedEngine::make_element(const UElement& x) const {
    if (x.is_zero()) throw InputError("make_element: zero element");
    require_borel(x, "make_element");
    auto deg = chi(x);
    if (!deg) throw InputError("make_element: element mixes grading degrees");
    auto w = eng_.weight(x);
    if (!w) throw InputError("make_element: element mixes weights");
    if (!is_coinvariant(x))
        throw InputError("make_element: element is not right coinvariant");
    if (pi(x) != x)
        throw InputError(
            "make_element: element is not fixed by the coinvariant "
            "projection");
    BElement be;
    be.value = x;
    be.degree = *deg;
    be.weight = *w;
    return be;
}

// ---------------------------------------------------------------------------
// cached coproducts

const TensorElement& BraidedEngine::coproduct_word(const NormalWord& w) const {
    std::lock_guard<std::recursive_mutex> lk(mutex_);
    auto it = cop_cache_.find(w);
    if (it != cop_cache_.end()) return it->second;
    TensorElement dx = eng_.coproduct(word_elem(w));
    return cop_cache_.emplace(w, std::move(dx)).first->second;
}

TensorElement BraidedEngine::coproduct_of(const UElement& x) const {
    TensorElement out;
    for (const auto& [w, c] : x.terms()) {
        const TensorElement& dw = coproduct_word(w);
        for (const auto& [p, cc] : dw.terms()) out.add(p.first, p.second, c * cc);
    }
    return out;
}

UElement BraidedEngine::word_elem(const NormalWord& w) const {
    UElement x;
    x.add(w, RatQ(1));
    return x;
}

// ---------------------------------------------------------------------------
// bosonisation

TensorElement BraidedEngine::upsilon(const UElement& x) const {
    require_borel(x, "upsilon");
    const TensorElement dx = coproduct_of(x);
    TensorElement out;
    for (const auto& [p, c] : dx.terms()) {
        if (chi(p.second) != 0) continue;
        const UElement& pia = pi_word(p.first.f);
        for (const auto& [wa, ca] : pia.terms()) out.add(wa, p.second, c * ca);
    }
    return out;
}

UElement BraidedEngine::upsilon_inv(const TensorElement& t) const {
    UElement out;
    for (const auto& [p, c] : t.terms()) {
        UElement prod = eng_.multiply(word_elem(p.first), word_elem(p.second));
        prod *= c;
        out += prod;
    }
    return out;
}

TensorElement BraidedEngine::smash_multiply(const TensorElement& x,
                                            const TensorElement& y) const {
    TensorElement out;
    for (const auto& [px, cx] : x.terms()) {
        const TensorElement& dh = coproduct_word(px.second);
        for (const auto& [py, cy] : y.terms()) {
            for (const auto& [ph, ch] : dh.terms()) {
                UElement act =
                    eng_.adjoint(word_elem(ph.first), word_elem(py.first));
                if (act.is_zero()) continue;
                UElement left = eng_.multiply(word_elem(px.first), act);
                UElement right =
                    eng_.multiply(word_elem(ph.second), word_elem(py.second));
                RatQ c = cx * cy * ch;
                for (const auto& [wl, cl] : left.terms())
                    for (const auto& [wr, cr] : right.terms())
                        out.add(wl, wr, c * cl * cr);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// braided Hopf structure

TensorElement BraidedEngine::braided_coproduct(const UElement& b) const {
    require_borel(b, "braided_coproduct");
    const TensorElement db = coproduct_of(b);
    TensorElement out;
    for (const auto& [p, c] : db.terms()) {
        const UElement& pia = pi_word(p.first.f);
        for (const auto& [wa, ca] : pia.terms()) out.add(wa, p.second, c * ca);
    }
    return out;
}

std::vector<BraidedTensorCoord>
BraidedEngine::braided_coproduct_coords(const BElement& b) const {
    const unsigned n = b.degree;
    const TensorElement t = braided_coproduct(b.value);
    std::vector<const GradedBasis*> bases(n + 1);
    std::vector<std::vector<const NormalWord*>> pivot_of(n + 1);
    for (unsigned a = 0; a <= n; ++a) {
        bases[a] = &compute_bn(a).basis;
        pivot_of[a].resize(bases[a]->dim());
        for (const auto& [w, idx] : bases[a]->pivots) pivot_of[a][idx] = &w;
    }
    std::vector<BraidedTensorCoord> coords;
    TensorElement rec;
    for (unsigned a = 0; a <= n; ++a) {
        const GradedBasis& left = *bases[a];
        const GradedBasis& right = *bases[n - a];
        for (std::size_t i = 0; i < left.dim(); ++i) {
            for (std::size_t j = 0; j < right.dim(); ++j) {
                auto it = t.terms().find(
                    std::make_pair(*pivot_of[a][i], *pivot_of[n - a][j]));
                if (it == t.terms().end() || it->second.is_zero()) continue;
                const RatQ c = it->second;
                coords.push_back({a, i, j, c});
                for (const auto& [wl, cl] : left.vectors[i].value.terms())
                    for (const auto& [wr, cr] : right.vectors[j].value.terms())
                        rec.add(wl, wr, c * cl * cr);
            }
        }
    }
    if (rec != t)
        throw ConsistencyError(
            "braided coproduct does not lie in the computed graded bases");
    return coords;
}

UElement BraidedEngine::braided_antipode(const UElement& b) const {
    require_borel(b, "braided_antipode");
    const TensorElement db = coproduct_of(b);
    UElement out;
    for (const auto& [p, c] : db.terms()) {
        if (chi(p.first) != 0) continue;
        UElement prod =
            eng_.multiply(word_elem(p.first), eng_.antipode(word_elem(p.second)));
        prod *= c;
        out += prod;
    }
    return out;
}

RatQ BraidedEngine::braided_counit(const UElement& b) const {
    require_borel(b, "braided_counit");
    return eng_.counit(b);
}

TensorElement BraidedEngine::braiding(const UElement& b,
                                      const UElement& c) const {
    require_borel(b, "braiding");
    require_borel(c, "braiding");
    const TensorElement db = coproduct_of(b);
    TensorElement out;
    for (const auto& [p, co] : db.terms()) {
        if (chi(p.first) != 0) continue;
        UElement act = eng_.adjoint(word_elem(p.first), c);
        for (const auto& [wa, ca] : act.terms()) out.add(wa, p.second, co * ca);
    }
    return out;
}

TensorElement
BraidedEngine::braided_tensor_multiply(const TensorElement& x,
                                       const TensorElement& y) const {
    TensorElement out;
    for (const auto& [px, cx] : x.terms()) {
        for (const auto& [py, cy] : y.terms()) {
            const TensorElement ps =
                braiding(word_elem(px.second), word_elem(py.first));
            for (const auto& [pp, cp] : ps.terms()) {
                UElement left = eng_.multiply(word_elem(px.first), word_elem(pp.first));
                UElement right =
                    eng_.multiply(word_elem(pp.second), word_elem(py.second));
                RatQ c = cx * cy * cp;
                for (const auto& [wl, cl] : left.terms())
                    for (const auto& [wr, cr] : right.terms())
                        out.add(wl, wr, c * cl * cr);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// graded bases

std::vector<std::pair<std::string, UElement>>
BraidedEngine::acting_generators() const {
    std::vector<std::pair<std::string, UElement>> gens;
    for (std::size_t a : iota_ambient_)
        gens.emplace_back("F[" + std::to_string(a + 1) + "]", eng_.F(a));
    for (std::size_t a : iota_ambient_)
        gens.emplace_back("E[" + std::to_string(a + 1) + "]", eng_.E(a));
    for (std::size_t i = 0; i < eng_.rank(); ++i) {
        KVec mu(eng_.rank(), 0);
        mu[i] = 1;
        gens.emplace_back(kvec_label("K", mu), eng_.K(mu));
    }
    return gens;
}

BraidedEngine::Closure
BraidedEngine::ad_closure(const std::vector<UElement>& seeds,
                          std::size_t cap) const {
    Closure cl;
    cl.seed_pivots.resize(seeds.size());
    const auto gens = acting_generators();
    for (std::size_t s = 0; s < seeds.size() && cl.complete; ++s) {
        std::vector<UElement> frontier;
        auto adjoin = [&](UElement x) {
            auto got = cl.ech.insert(std::move(x));
            if (!got) return;
            cl.seed_pivots[s].push_back(got->first);
            frontier.push_back(got->second);
            if (cl.ech.size() > cap) {
                cl.complete = false;
                cl.note = "orbit cap " + std::to_string(cap) +
                          " exceeded during the adjoint closure";
            }
        };
        adjoin(seeds[s]);
        while (!frontier.empty() && cl.complete) {
            std::vector<UElement> wave = std::move(frontier);
            frontier.clear();
            for (const UElement& v : wave) {
                for (const auto& [label, g] : gens) {
                    (void)label;
                    UElement img;
                    try {
                        img = eng_.adjoint(g, v);
                    } catch (const BoundError& e) {
                        cl.complete = false;
                        cl.note =
                            std::string(
                                "word-length bound hit during the adjoint "
                                "closure: ") +
                            e.what();
                        break;
                    }
                    adjoin(std::move(img));
                    if (!cl.complete) break;
                }
                if (!cl.complete) break;
            }
        }
    }
    return cl;
}

GradedBasis
BraidedEngine::basis_from_rows(const std::map<NormalWord, UElement>& rows,
                               std::optional<unsigned> expect_degree) const {
    GradedBasis g;
    if (expect_degree) g.degree = *expect_degree;
    std::size_t idx = 0;
    for (const auto& [pivot, row] : rows) {
        if (row.terms().begin()->first != pivot)
            throw ConsistencyError("echelon row lost its pivot");
        BElement be;
        try {
            be = make_element(row);
        } catch (const InputError& e) {
            throw ConsistencyError(
                std::string("echelon row failed the coinvariant checks: ") +
                e.what());
        }
        if (expect_degree && be.degree != *expect_degree)
            throw ConsistencyError("echelon row has unexpected grading degree");
        if (!expect_degree) {
            if (idx == 0)
                g.degree = be.degree;
            else if (be.degree != g.degree)
                throw ConsistencyError("echelon rows span mixed degrees");
        }
        g.pivots[pivot] = idx++;
        g.vectors.push_back(std::move(be));
    }
    return g;
}

const B1Result& BraidedEngine::compute_b1() const {
    std::lock_guard<std::recursive_mutex> lk(mutex_);
    if (b1_) return *b1_;
    const auto& D = sub_.complement();
    std::vector<UElement> seeds;
    seeds.reserve(D.size());
    for (std::size_t d : D)
        seeds.push_back(eng_.multiply(eng_.F(d), eng_.H(d)));
    Closure cl = ad_closure(seeds, cap_);
    B1Result res;
    res.complete = cl.complete;
    res.note = cl.note;
    res.basis = basis_from_rows(cl.ech.rows(), 1u);
    for (std::size_t s = 0; s < D.size(); ++s) {
        if (cl.seed_pivots[s].empty()) {
            if (res.complete)
                throw ConsistencyError(
                    "a degree-1 seed vanished in the adjoint closure");
            continue;
        }
        B1Component comp;
        comp.d = D[s];
        for (const NormalWord& p : cl.seed_pivots[s])
            comp.members.push_back(res.basis.pivots.at(p));
        std::sort(comp.members.begin(), comp.members.end());
        comp.top_index = res.basis.pivots.at(cl.seed_pivots[s].front());
        // Highest weight two ways: from the top vector's Z[I] weight pushed
        // into X and restricted, and directly as the restriction of -i2(d).
        const BElement& top = res.basis.vectors[comp.top_index];
        Vec wz(top.weight.size());
        for (std::size_t i = 0; i < top.weight.size(); ++i)
            wz[i] = top.weight[i];
        Vec hw_top = sub_.restrict_weight(weight_in_x(eng_.datum(), wz));
        Vec mi2 = eng_.datum().i2_col(D[s]);
        for (auto& v : mi2) v = -v;
        Vec hw_direct = sub_.restrict_weight(mi2);
        if (hw_top != hw_direct)
            throw ConsistencyError(
                "highest weight of a degree-1 component disagrees with the "
                "restricted lattice column");
        comp.highest_weight = std::move(hw_direct);
        res.components.push_back(std::move(comp));
    }
    for (std::size_t idx = 0; idx < res.basis.vectors.size(); ++idx) {
        bool prim = true;
        for (std::size_t a : iota_ambient_) {
            if (!eng_.adjoint(eng_.E(a), res.basis.vectors[idx].value)
                     .is_zero()) {
                prim = false;
                break;
            }
        }
        if (prim) res.primitive_indices.push_back(idx);
    }
    for (const B1Component& comp : res.components) {
        if (std::find(res.primitive_indices.begin(),
                      res.primitive_indices.end(),
                      comp.top_index) == res.primitive_indices.end())
            throw ConsistencyError(
                "a component top vector is not annihilated by the raising "
                "operators");
    }
    b1_ = std::move(res);
    return *b1_;
}

std::vector<KVec> BraidedEngine::weight_windows(unsigned n) const {
    const B1Result& b1 = compute_b1();
    std::set<KVec> wts;
    for (const BElement& v : b1.basis.vectors) wts.insert(v.weight);
    const std::vector<KVec> W(wts.begin(), wts.end());
    std::set<KVec> sums;
    if (n == 0) {
        sums.insert(KVec(eng_.rank(), 0));
    } else if (!W.empty()) {
        std::vector<std::size_t> idx(n, 0);
        bool done = false;
        while (!done) {
            KVec s(eng_.rank(), 0);
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += W[idx[t]][i];
            sums.insert(std::move(s));
            std::size_t pos = n;
            for (;;) {
                if (pos == 0) {
                    done = true;
                    break;
                }
                --pos;
                if (idx[pos] + 1 < W.size()) {
                    const std::size_t v = idx[pos] + 1;
                    for (std::size_t t = pos; t < n; ++t) idx[t] = v;
                    break;
                }
            }
        }
    }
    std::vector<KVec> out;
    out.reserve(sums.size());
    for (const KVec& w : sums) {
        KVec m(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            m[i] = -w[i];
            if (m[i] < 0)
                throw ConsistencyError(
                    "degree-1 weight with a positive entry");
        }
        out.push_back(std::move(m));
    }
    return out;
}

const BnResult& BraidedEngine::compute_bn(unsigned n) const {
    std::lock_guard<std::recursive_mutex> lk(mutex_);
    auto found = bn_.find(n);
    if (found != bn_.end()) return found->second;
    BnResult res;
    if (n == 0) {
        Echelon e;
        e.insert(eng_.one());
        res.basis = basis_from_rows(e.rows(), 0u);
        res.certificate = {1, 1, 0, true};
    } else {
        const B1Result& b1 = compute_b1();
        if (!b1.complete)
            throw CapError("degree-" + std::to_string(n) +
                           " slice needs the complete degree-1 module: " +
                           b1.note);
        // Route 1: products of the degree-1 basis with the previous slice.
        const BnResult& prev = compute_bn(n - 1);
        Echelon r1;
        for (const BElement& u : b1.basis.vectors)
            for (const BElement& v : prev.basis.vectors)
                r1.insert(eng_.multiply(u.value, v.value));
        // Route 2: the coinvariant projection of the degree-n Borel slices
        // over every weight window reachable by n-fold degree-1 sums.
        Echelon r2;
        const std::vector<KVec> windows = weight_windows(n);
        for (const KVec& m : windows) {
            long csum = 0;
            for (std::size_t d : sub_.complement()) csum += m[d];
            if (csum != static_cast<long>(n))
                throw ConsistencyError("weight window with wrong grading degree");
            for (const Word& w : eng_.standard_words(m)) r2.insert(pi_word(w));
        }
        res.certificate.product_dim = r1.rows().size();
        res.certificate.coinvariant_dim = r2.rows().size();
        res.certificate.window_count = windows.size();
        res.certificate.agreed = (r1.rows() == r2.rows());
        if (!res.certificate.agreed)
            throw ConsistencyError(
                "degree-" + std::to_string(n) +
                " slice differs between the product route (dim " +
                std::to_string(res.certificate.product_dim) +
                ") and the coinvariant-projection route (dim " +
                std::to_string(res.certificate.coinvariant_dim) + ")");
        res.basis = basis_from_rows(r1.rows(), n);
    }
    return bn_.emplace(n, std::move(res)).first->second;
}

GradedBasis
BraidedEngine::module_closure(const std::vector<UElement>& seeds) const {
    std::optional<unsigned> deg;
    for (const UElement& s : seeds) {
        BElement b = make_element(s);
        if (!deg)
            deg = b.degree;
        else if (*deg != b.degree)
            throw InputError("module_closure: seeds mix grading degrees");
    }
    Closure cl = ad_closure(seeds, cap_);
    if (!cl.complete) throw CapError("module_closure: " + cl.note);
    return basis_from_rows(cl.ech.rows(), deg);
}

std::vector<RatQ> BraidedEngine::coordinates(const GradedBasis& basis,
                                             const UElement& x) const {
    std::vector<const NormalWord*> pivot_of(basis.dim());
    for (const auto& [w, idx] : basis.pivots) pivot_of[idx] = &w;
    std::vector<RatQ> coords(basis.dim());
    UElement rec;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        coords[i] = x.coeff(*pivot_of[i]);
        if (coords[i].is_zero()) continue;
        UElement t = basis.vectors[i].value;
        t *= coords[i];
        rec += t;
    }
    if (rec != x)
        throw ConsistencyError(
            "element lies outside the span of the given basis");
    return coords;
}

// ---------------------------------------------------------------------------
// derived structure

ActionTable BraidedEngine::action_table(const GradedBasis& basis) const {
    ActionTable tab;
    const std::size_t dim = basis.dim();
    for (const auto& [label, g] : acting_generators()) {
        tab.labels.push_back(label);
        RatMat m = rat_zeros(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            UElement img = eng_.adjoint(g, basis.vectors[j].value);
            std::vector<RatQ> col = coordinates(basis, img);
            for (std::size_t i = 0; i < dim; ++i) m[i][j] = col[i];
        }
        tab.matrices.push_back(std::move(m));
    }
    return tab;
}

BraidingMatrix BraidedEngine::braiding_matrix(unsigned left_degree,
                                              unsigned right_degree) const {
    const GradedBasis& A = compute_bn(left_degree).basis;
    const GradedBasis& B = compute_bn(right_degree).basis;
    BraidingMatrix M;
    M.left_degree = left_degree;
    M.right_degree = right_degree;
    M.dim_left = A.dim();
    M.dim_right = B.dim();
    M.entries = rat_zeros(M.dim_right * M.dim_left, M.dim_left * M.dim_right);
    std::vector<const NormalWord*> pa(A.dim()), pb(B.dim());
    for (const auto& [w, i] : A.pivots) pa[i] = &w;
    for (const auto& [w, i] : B.pivots) pb[i] = &w;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < B.dim(); ++j) {
            const TensorElement t =
                braiding(A.vectors[i].value, B.vectors[j].value);
            TensorElement rec;
            for (std::size_t k = 0; k < B.dim(); ++k) {
                for (std::size_t l = 0; l < A.dim(); ++l) {
                    auto it = t.terms().find(std::make_pair(*pb[k], *pa[l]));
                    if (it == t.terms().end() || it->second.is_zero()) continue;
                    const RatQ c = it->second;
                    M.entries[k * M.dim_left + l][i * M.dim_right + j] = c;
                    for (const auto& [wl, cl] : B.vectors[k].value.terms())
                        for (const auto& [wr, cr] : A.vectors[l].value.terms())
                            rec.add(wl, wr, c * cl * cr);
                }
            }
            if (rec != t)
                throw ConsistencyError(
                    "braiding image does not lie in the computed graded "
                    "bases");
        }
    }
    return M;
}

RelationsResult BraidedEngine::relations_at_degree(unsigned n) const {
    RelationsResult res;
    res.degree = n;
    if (n == 0) {
        res.tensor_dim = 1;
        return res;
    }
    const GradedBasis& b1 = compute_bn(1).basis;
    const BnResult& bn = compute_bn(n);
    const std::size_t d1 = b1.dim();
    std::size_t td = 1;
    for (unsigned t = 0; t < n; ++t) {
        if (d1 != 0 && td > 100000 / d1)
            throw CapError("relations_at_degree: tensor power too large");
        td *= d1;
    }
    res.tensor_dim = td;
    if (td == 0) return res;
    const std::size_t dn = bn.basis.dim();
    std::vector<std::vector<RatQ>> ker;
    if (dn == 0) {
        // Everything multiplies to zero: the kernel is the full tensor power.
        ker.assign(td, std::vector<RatQ>(td));
        for (std::size_t c = 0; c < td; ++c) ker[c][c] = RatQ(1);
    } else {
        RatMat m = rat_zeros(dn, td);
        for (std::size_t col = 0; col < td; ++col) {
            const std::vector<std::size_t> tup = decode_tuple(col, n, d1);
            std::vector<UElement> factors;
            factors.reserve(n);
            for (std::size_t t : tup) factors.push_back(b1.vectors[t].value);
            UElement prod = eng_.multiply(factors);
            std::vector<RatQ> coords = coordinates(bn.basis, prod);
            for (std::size_t r = 0; r < dn; ++r) m[r][col] = coords[r];
        }
        ker = rat_kernel(m);
    }
    for (const auto& kv : ker) {
        std::map<std::vector<std::size_t>, RatQ> rel;
        for (std::size_t col = 0; col < td; ++col)
            if (!kv[col].is_zero()) rel.emplace(decode_tuple(col, n, d1), kv[col]);
        res.kernel.push_back(std::move(rel));
    }
    return res;
}

PrimitivesResult BraidedEngine::primitives_at_degree(unsigned n) const {
    PrimitivesResult res;
    res.degree = n;
    if (n == 0) return res;
    const BnResult& bn = compute_bn(n);
    const std::size_t dn = bn.basis.dim();
    if (dn == 0) return res;
    std::vector<const GradedBasis*> bases(n + 1);
    for (unsigned a = 0; a <= n; ++a) bases[a] = &compute_bn(a).basis;
    std::vector<std::size_t> offset(n, 0);
    std::size_t rows = 0;
    for (unsigned a = 1; a < n; ++a) {
        offset[a] = rows;
        rows += bases[a]->dim() * bases[n - a]->dim();
    }
    if (rows == 0) {
        for (const BElement& v : bn.basis.vectors) res.vectors.push_back(v.value);
        return res;
    }
    RatMat m = rat_zeros(rows, dn);
    for (std::size_t j = 0; j < dn; ++j) {
        const std::vector<BraidedTensorCoord> coords =
            braided_coproduct_coords(bn.basis.vectors[j]);
        for (const BraidedTensorCoord& c : coords) {
            if (c.left_degree == 0 || c.left_degree == n) continue;
            const std::size_t r = offset[c.left_degree] +
                                  c.left_index * bases[n - c.left_degree]->dim() +
                                  c.right_index;
            m[r][j] = c.coeff;
        }
    }
    for (const auto& kv : rat_kernel(m)) {
        UElement v;
        for (std::size_t j = 0; j < dn; ++j) {
            if (kv[j].is_zero()) continue;
            UElement t = bn.basis.vectors[j].value;
            t *= kv[j];
            v += t;
        }
        res.vectors.push_back(std::move(v));
    }
    return res;
}

NicholsReport BraidedEngine::nichols_check(unsigned max_degree) const {
    NicholsReport r;
    r.max_degree = max_degree;
    const BnResult& b0 = compute_bn(0);
    r.degree_zero_ok =
        (b0.basis.dim() == 1 && b0.basis.vectors[0].value == eng_.one());
    if (!r.degree_zero_ok) r.witness = "degree-0 slice is not the scalars";
    r.generation_ok = true;
    try {
        for (unsigned n = 1; n <= max_degree; ++n) compute_bn(n);
    } catch (const ConsistencyError& e) {
        r.generation_ok = false;
        if (r.witness.empty()) r.witness = e.what();
    }
    r.primitives_ok = r.generation_ok;
    if (r.generation_ok) {
        for (unsigned n = 2; n <= max_degree; ++n) {
            const PrimitivesResult p = primitives_at_degree(n);
            r.primitive_dims.push_back(p.vectors.size());
            if (!p.vectors.empty()) {
                r.primitives_ok = false;
                if (r.witness.empty())
                    r.witness = "degree-" + std::to_string(n) +
                                " primitive: " + p.vectors.front().str();
            }
        }
    }
    r.ok = r.degree_zero_ok && r.primitives_ok && r.generation_ok;
    return r;
}

IntegrabilityReport
BraidedEngine::integrability_check(const GradedBasis& basis,
                                   unsigned nilbound) const {
    IntegrabilityReport rep;
    rep.nilbound = nilbound;
    rep.ok = true;
    for (std::size_t vi = 0; vi < basis.dim(); ++vi) {
        for (std::size_t a : iota_ambient_) {
            IntegrabilityEntry ent;
            ent.vector_index = vi;
            ent.ambient_j = a;
            UElement w = basis.vectors[vi].value;
            for (unsigned k = 1; k <= nilbound && ent.e_power == 0; ++k) {
                w = eng_.adjoint(eng_.E(a), w);
                if (w.is_zero()) ent.e_power = k;
            }
            w = basis.vectors[vi].value;
            try {
                for (unsigned k = 1; k <= nilbound && ent.f_power == 0; ++k) {
                    w = eng_.adjoint(eng_.F(a), w);
                    if (w.is_zero()) ent.f_power = k;
                }
            } catch (const BoundError&) {
                // Word growth outran the engine bound: leave the power
                // unestablished so the entry reports a failure.
            }
            ent.ok = (ent.e_power != 0 && ent.f_power != 0);
            if (!ent.ok) rep.ok = false;
            rep.entries.push_back(ent);
        }
    }
    return rep;
}

IndexCorank BraidedEngine::index_and_corank() const {
    IndexCorank ic;
    ic.corank = sub_.complement().size();
    const B1Result& b1 = compute_b1();
    ic.index_known = b1.complete;
    ic.index = b1.basis.dim();
    return ic;
}

std::vector<HilbertEntry>
BraidedEngine::hilbert_series(unsigned max_degree) const {
    std::vector<HilbertEntry> hs;
    hs.reserve(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n) {
        const BnResult& bn = compute_bn(n);
        hs.push_back({n, bn.basis.dim(), bn.certificate});
    }
    return hs;
}

std::vector<ModuleGenerator>
BraidedEngine::module_generators(unsigned maxlen) const {
    std::vector<ModuleGenerator> gens;
    const auto& D = sub_.complement();
    for (unsigned l = 0; l <= maxlen; ++l) {
        if (l > 0 && D.empty()) break;
        std::vector<std::size_t> digits(l, 0);
        for (;;) {
            ModuleGenerator g;
            g.gamma.reserve(l);
            for (unsigned t = 0; t < l; ++t) g.gamma.push_back(D[digits[t]]);
            std::vector<UElement> factors;
            KVec kv(eng_.rank(), 0);
            KVec expect_w(eng_.rank(), 0);
            for (std::size_t amb : g.gamma) {
                factors.push_back(eng_.F(amb));
                kv[amb] += eng_.datum().c(amb);
                expect_w[amb] -= 1;
            }
            factors.push_back(eng_.K(kv));
            const UElement x = eng_.multiply(factors);
            try {
                g.element = make_element(x);
            } catch (const InputError& e) {
                throw ConsistencyError(
                    std::string("module generator failed verification: ") +
                    e.what());
            }
            if (g.element.weight != expect_w)
                throw ConsistencyError("module generator has unexpected weight");
            for (std::size_t a : iota_ambient_)
                if (!eng_.adjoint(eng_.E(a), x).is_zero())
                    throw ConsistencyError(
                        "module generator is not annihilated by the raising "
                        "operators");
            gens.push_back(std::move(g));
            if (l == 0) break;
            std::size_t pos = l;
            bool rolled = false;
            for (;;) {
                if (pos == 0) {
                    rolled = true;
                    break;
                }
                --pos;
                if (++digits[pos] < D.size()) break;
                digits[pos] = 0;
            }
            if (rolled) break;
        }
    }
    return gens;
}

ZeroComponentReport BraidedEngine::verify_zero_component() const {
    ZeroComponentReport rep;
    rep.ok = true;
    const RootDatum& dat = eng_.datum();
    // K_{e_d} F_{iota(j)} K_{e_d}^{-1} must scale F by q^{-<i1(d), i2(iota(j))>};
    // the left side uses the straightening rules, the right the lattice pairing.
    for (std::size_t d : sub_.complement()) {
        for (std::size_t a : iota_ambient_) {
            KVec mu(eng_.rank(), 0), nmu(eng_.rank(), 0);
            mu[d] = 1;
            nmu[d] = -1;
            const UElement lhs =
                eng_.multiply({eng_.K(mu), eng_.F(a), eng_.K(nmu)});
            const mpz_class exp = -dat.pair(dat.i1_col(d), dat.i2_col(a));
            UElement rhs = eng_.F(a);
            rhs *= RatQ::q_power(exp.get_si());
            const bool ok = (lhs == rhs);
            rep.ok = rep.ok && ok;
            rep.checks.push_back(
                std::string(ok ? "ok" : "FAILED") + ": K[e" +
                std::to_string(d + 1) + "] F[" + std::to_string(a + 1) +
                "] K[e" + std::to_string(d + 1) + "]^-1 = q^" + exp.get_str() +
                " F[" + std::to_string(a + 1) + "]");
        }
    }
    // The degree-0 slice must match the lowering part of the algebra built
    // from the sub datum alone: compare standard-word counts at every sub
    // multidegree of total at most 3.
    UqEngine sub_eng(sub_.sub(), 4);
    const std::size_t nj = iota_ambient_.size();
    std::vector<KVec> mds;
    KVec cur(nj, 0);
    std::function<void(std::size_t, long)> enumerate = [&](std::size_t pos,
                                                           long left) {
        if (pos == nj) {
            mds.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[pos] = v;
            enumerate(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    enumerate(0, 3);
    bool dims_ok = true;
    for (const KVec& mj : mds) {
        KVec mi(eng_.rank(), 0);
        for (std::size_t j = 0; j < nj; ++j) mi[iota_ambient_[j]] = mj[j];
        const std::size_t ambient_count = eng_.standard_words(mi).size();
        const std::size_t sub_count = sub_eng.standard_words(mj).size();
        if (ambient_count != sub_count) {
            dims_ok = false;
            rep.ok = false;
            rep.checks.push_back(
                "FAILED: degree-0 slice dimension at " + kvec_label("m", mj) +
                " is " + std::to_string(ambient_count) +
                " in the ambient algebra but " + std::to_string(sub_count) +
                " in the sub-datum algebra");
        }
    }
    if (dims_ok)
        rep.checks.push_back(
            "ok: degree-0 slice dimensions match the sub-datum algebra at " +
            std::to_string(mds.size()) + " multidegrees");
    return rep;
}

HeckeReport BraidedEngine::hecke_diagnostic() const {
    HeckeReport h;
    const BraidingMatrix bm = braiding_matrix(1, 1);
    const std::size_t n = bm.entries.size();
    if (n == 0) {
        h.applies = false;
        h.detail = "empty degree-1 module";
        return h;
    }
    const RatMat& m = bm.entries;
    const RatMat m2 = rat_mul(m, m);
    std::optional<RatQ> s, p;
    for (std::size_t i = 0; i < n && !s; ++i)
        for (std::size_t j = 0; j < n && !s; ++j)
            if (i != j && !m[i][j].is_zero()) s = m2[i][j] / m[i][j];
    if (!s) {
        std::vector<RatQ> distinct;
        for (std::size_t i = 0; i < n; ++i) {
            bool seen = false;
            for (const RatQ& d : distinct)
                if (d == m[i][i]) {
                    seen = true;
                    break;
                }
            if (!seen) distinct.push_back(m[i][i]);
        }
        if (distinct.size() == 1) {
            h.applies = true;
            h.alpha = distinct[0];
            h.beta = RatQ();
            h.detail = "scalar braiding: (Psi - (" + h.alpha.str() +
                       ")) = 0; beta set to 0";
            return h;
        }
        if (distinct.size() > 2) {
            h.applies = false;
            h.detail = "diagonal braiding with more than two eigenvalues";
            return h;
        }
        s = distinct[0] + distinct[1];
        p = -(distinct[0] * distinct[1]);
    }
    if (!p) p = m2[0][0] - *s * m[0][0];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatQ want = *s * m[i][j];
            if (i == j) want += *p;
            if (m2[i][j] != want) {
                h.applies = false;
                h.detail = "no quadratic relation for the degree-1 braiding";
                return h;
            }
        }
    const RatQ disc = *s * *s + RatQ(4) * *p;
    const std::optional<RatQ> rt = ratq_sqrt(disc);
    if (!rt) {
        h.applies = false;
        h.detail = "quadratic relation with irrational eigenvalues (s = " +
                   s->str() + ", p = " + p->str() + ")";
        return h;
    }
    RatQ alpha = (*s + *rt) / RatQ(2);
    RatQ beta = (*rt - *s) / RatQ(2);
    if (lowest_sign(beta) < 0) {
        const RatQ a2 = -beta, b2 = -alpha;
        alpha = a2;
        beta = b2;
    }
    h.applies = true;
    h.alpha = alpha;
    h.beta = beta;
    h.detail =
        "(Psi - (" + alpha.str() + "))(Psi + (" + beta.str() + ")) = 0";
    return h;
}

RatMat BraidedEngine::pairing_gram(const GradedBasis& a,
                                   const GradedBasis& b) const {
    RatMat g = rat_zeros(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            g[i][j] = eng_.pair_borel(a.vectors[i].value, b.vectors[j].value);
    return g;
}

} // namespace qnichols
