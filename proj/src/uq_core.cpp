/**
 * @file uq_core.cpp
 * @brief Normal words, elements, straightening to normal form, and the
 *        lazily-built echelon components of the quantum Serre ideal.
 *
 * Strategy for normal forms: a product is first flattened to a token
 * sequence of F/K/E generators, then rewritten with R1-R4 until the shape
 * F* K E* is reached (each rewrite either shortens the sequence or moves an
 * inversion strictly left, so this terminates), and finally the F-word and
 * E-word are standardized modulo the Serre ideal by exact linear algebra.
 *
 * The Serre ideal is graded by multidegree in Z[I].  Its component at
 * multidegree m is spanned by
 *     F_i * (component at m - e_i)        for every i with m_i > 0, and
 *     r_ij * w                            for Serre generators r_ij of
 *                                         multidegree m_ij <= m and raw
 *                                         words w at m - m_ij,
 * which is complete by induction on the left factor of a spanning element
 * u r_ij v.  Components are echelonized with pivot = largest word in
 * lexicographic order and kept fully back-substituted, so reducing a raw
 * word is a single table lookup.
 */
#include "qnichols/uq.hpp"

#include <algorithm>
#include <sstream>

namespace qnichols {

// ---------------------------------------------------------------------------
// NormalWord
// ---------------------------------------------------------------------------

bool NormalWord::is_one() const {
    if (!f.empty() || !e.empty()) return false;
    return std::all_of(k.begin(), k.end(), [](long v) { return v == 0; });
}

bool NormalWord::operator<(const NormalWord& o) const {
    if (f.size() != o.f.size()) return f.size() < o.f.size();
    if (f != o.f) return f < o.f;
    if (k != o.k) return k < o.k;
    if (e.size() != o.e.size()) return e.size() < o.e.size();
    return e < o.e;
}

std::string NormalWord::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << "*";
        os << s;
        first = false;
    };
    for (auto i : f) emit("F[" + std::to_string(i + 1) + "]");
    if (std::any_of(k.begin(), k.end(), [](long v) { return v != 0; })) {
        std::string s = "K[";
        for (std::size_t t = 0; t < k.size(); ++t)
            s += (t ? "," : "") + std::to_string(k[t]);
        emit(s + "]");
    }
    for (auto i : e) emit("E[" + std::to_string(i + 1) + "]");
    if (first) return "1";
    return os.str();
}

// ---------------------------------------------------------------------------
// UElement / TensorElement
// ---------------------------------------------------------------------------

void UElement::add(const NormalWord& w, const RatQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

UElement& UElement::operator*=(const RatQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

UElement UElement::operator+(const UElement& o) const {
    UElement r = *this;
    r += o;
    return r;
}

UElement UElement::operator-(const UElement& o) const {
    UElement r = *this;
    r -= o;
    return r;
}

UElement UElement::operator*(const RatQ& c) const {
    UElement r = *this;
    r *= c;
    return r;
}

UElement UElement::operator-() const {
    UElement r = *this;
    for (auto& [w, v] : r.terms_) v = -v;
    return r;
}

RatQ UElement::coeff(const NormalWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatQ() : it->second;
}

namespace {

/// Splits a coefficient into a sign and a printable magnitude factor.
/// The magnitude is rendered so that "<mag>*<word>" re-parses exactly.
std::pair<bool, std::string> coeff_factor(const RatQ& c, bool word_is_one) {
    // The numerator's leading coefficient carries the sign (denominators are
    // normalized monic).
    bool neg = c.num().leading_coeff() < 0;
    RatQ a = neg ? -c : c;
    if (a.is_one() && !word_is_one) return {neg, ""};
    std::string s = a.str();
    bool multi_term = a.is_laurent() && a.num().min_exp() != a.num().max_exp();
    if (multi_term) s = "(" + s + ")";
    return {neg, s};
}

} // namespace

std::string UElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [neg, mag] = coeff_factor(it->second, it->first.is_one());
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (!mag.empty()) os << mag;
        if (!it->first.is_one()) {
            if (!mag.empty()) os << "*";
            os << it->first.str();
        }
    }
    return os.str();
}

void TensorElement::add(const NormalWord& a, const NormalWord& b, const RatQ& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [p, c] : o.terms_) add(p.first, p.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [p, c] : o.terms_) add(p.first, p.second, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const RatQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

std::vector<std::pair<UElement, UElement>> TensorElement::factors() const {
    std::vector<std::pair<UElement, UElement>> out;
    for (const auto& [p, c] : terms_) {
        UElement a, b;
        a.add(p.first, c);
        b.add(p.second, RatQ(1));
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << p.first.str() << " (x) "
           << p.second.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Engine: construction and generators
// ---------------------------------------------------------------------------

UqEngine::UqEngine(RootDatum datum, std::size_t max_word_len)
    : datum_(std::move(datum)), max_len_(max_word_len) {
    cartan_.assign(datum_.size(), std::vector<long>(datum_.size()));
    for (std::size_t i = 0; i < datum_.size(); ++i)
        for (std::size_t j = 0; j < datum_.size(); ++j)
            cartan_[i][j] = datum_.cartan(i, j);
}

void UqEngine::corrupt_serre_coefficient() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (components_built_)
        throw InputError("corruption hook must be enabled before use");
    corrupt_ = true;
}

UElement UqEngine::one() const { return scalar(RatQ(1)); }

UElement UqEngine::scalar(const RatQ& c) const {
    UElement x;
    x.add(NormalWord{{}, KVec(rank(), 0), {}}, c);
    return x;
}

UElement UqEngine::F(std::size_t i) const {
    if (i >= rank()) throw InputError("generator index out of range");
    UElement x;
    x.add(NormalWord{{static_cast<std::uint8_t>(i)}, KVec(rank(), 0), {}},
          RatQ(1));
    return x;
}

UElement UqEngine::E(std::size_t i) const {
    if (i >= rank()) throw InputError("generator index out of range");
    UElement x;
    x.add(NormalWord{{}, KVec(rank(), 0), {static_cast<std::uint8_t>(i)}},
          RatQ(1));
    return x;
}

UElement UqEngine::K(const KVec& mu) const {
    if (mu.size() != rank())
        throw InputError("K exponent vector must have length |I|");
    UElement x;
    x.add(NormalWord{{}, mu, {}}, RatQ(1));
    return x;
}

UElement UqEngine::H(std::size_t i) const {
    KVec mu(rank(), 0);
    mu[i] = datum_.c(i);
    return K(mu);
}

UElement UqEngine::Hinv(std::size_t i) const {
    KVec mu(rank(), 0);
    mu[i] = -datum_.c(i);
    return K(mu);
}

long UqEngine::k_exponent(const KVec& mu, std::size_t i) const {
    long s = 0;
    for (std::size_t t = 0; t < mu.size(); ++t) s += mu[t] * cartan_[t][i];
    return s;
}

KVec UqEngine::multideg(const Word& w) const {
    KVec m(rank(), 0);
    for (auto i : w) ++m[i];
    return m;
}

// ---------------------------------------------------------------------------
// Serre ideal components
// ---------------------------------------------------------------------------

namespace {

/// Incremental reduced echelon over words of one multidegree.
struct WordEchelon {
    std::map<Word, std::map<Word, RatQ>> rows;  ///< pivot -> tail
    std::map<Word, std::set<Word>> occurs;      ///< word -> pivots using it

    void insert(const std::map<Word, RatQ>& row) {
        // One substitution pass: tails never contain pivot words.
        std::map<Word, RatQ> red;
        auto bump = [&](const Word& w, const RatQ& c) {
            auto it = red.find(w);
            if (it == red.end()) {
                if (!c.is_zero()) red.emplace(w, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) red.erase(it);
            }
        };
        for (const auto& [w, c] : row) {
            auto p = rows.find(w);
            if (p == rows.end()) {
                bump(w, c);
            } else {
                for (const auto& [t, ct] : p->second) bump(t, c * ct);
            }
        }
        if (red.empty()) return;

        Word pivot = red.rbegin()->first;
        RatQ cp = red.rbegin()->second;
        std::map<Word, RatQ> tail;
        for (const auto& [w, c] : red)
            if (w != pivot) tail.emplace(w, -(c / cp));

        // Back-substitute the new pivot out of existing tails.
        auto occ = occurs.find(pivot);
        if (occ != occurs.end()) {
            for (const Word& p : std::set<Word>(occ->second)) {
                auto& tp = rows[p];
                RatQ c0 = tp[pivot];
                tp.erase(pivot);
                for (const auto& [w, c] : tail) {
                    auto it = tp.find(w);
                    if (it == tp.end()) {
                        RatQ v = c0 * c;
                        if (!v.is_zero()) {
                            tp.emplace(w, std::move(v));
                            occurs[w].insert(p);
                        }
                    } else {
                        it->second += c0 * c;
                        if (it->second.is_zero()) {
                            tp.erase(it);
                            occurs[w].erase(p);
                        }
                    }
                }
            }
            occurs.erase(occ);
        }
        for (const auto& [w, c] : tail) occurs[w].insert(pivot);
        rows.emplace(std::move(pivot), std::move(tail));
    }
};

/// All words with the given multidegree, lexicographically ascending.
std::vector<Word> words_at(const KVec& m) {
    Word base;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long t = 0; t < m[i]; ++t)
            base.push_back(static_cast<std::uint8_t>(i));
    std::vector<Word> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

const SerreComponent& UqEngine::serre_component(const KVec& m) const {
    if (m.size() != rank()) throw InputError("multidegree has wrong length");
    long total = 0;
    for (long v : m) {
        if (v < 0) throw InputError("multidegree entries must be >= 0");
        total += v;
    }
    if (total > static_cast<long>(max_len_))
        throw BoundError("word length " + std::to_string(total) +
                         " exceeds the engine bound " +
                         std::to_string(max_len_));
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = components_.find(m);
    if (it != components_.end()) return *it->second;
    auto comp = std::make_unique<SerreComponent>();
    components_built_ = true;
    build_component(m, *comp);
    const SerreComponent& ref = *comp;
    components_.emplace(m, std::move(comp));
    return ref;
}

void UqEngine::build_component(const KVec& m, SerreComponent& out) const {
    WordEchelon ech;
    long total = 0;
    for (long v : m) total += v;

    if (total >= 2) {
        // F_i * (ideal component one letter shorter).
        for (std::size_t i = 0; i < rank(); ++i) {
            if (m[i] == 0) continue;
            KVec child = m;
            --child[i];
            const SerreComponent& sub = serre_component(child);
            for (const auto& [pivot, tail] : sub.reduce) {
                std::map<Word, RatQ> row;
                Word w{static_cast<std::uint8_t>(i)};
                w.insert(w.end(), pivot.begin(), pivot.end());
                row.emplace(std::move(w), RatQ(1));
                for (const auto& [tw, tc] : tail) {
                    Word v{static_cast<std::uint8_t>(i)};
                    v.insert(v.end(), tw.begin(), tw.end());
                    row.emplace(std::move(v), -tc);
                }
                ech.insert(row);
            }
        }

        // Locate the corruption target once: first adjacent ordered pair.
        std::size_t ci = rank(), cj = rank();
        if (corrupt_) {
            for (std::size_t i = 0; i < rank() && ci == rank(); ++i)
                for (std::size_t j = 0; j < rank(); ++j)
                    if (i != j && cartan_[i][j] <= -1) {
                        ci = i;
                        cj = j;
                        break;
                    }
        }

        // Serre generators r_ij times raw words of the complement degree.
        for (std::size_t i = 0; i < rank(); ++i) {
            for (std::size_t j = 0; j < rank(); ++j) {
                if (i == j) continue;
                long a = 1 - cartan_[i][j];
                KVec rest = m;
                rest[i] -= a;
                rest[j] -= 1;
                if (std::any_of(rest.begin(), rest.end(),
                                [](long v) { return v < 0; }))
                    continue;
                std::vector<std::pair<Word, RatQ>> gen;
                for (long s = 0; s <= a; ++s) {
                    Word w;
                    for (long t = 0; t < a - s; ++t)
                        w.push_back(static_cast<std::uint8_t>(i));
                    w.push_back(static_cast<std::uint8_t>(j));
                    for (long t = 0; t < s; ++t)
                        w.push_back(static_cast<std::uint8_t>(i));
                    RatQ c = RatQ(q_binom(a, s, datum_.c(i)));
                    if (s % 2 == 1) c = -c;
                    if (corrupt_ && i == ci && j == cj && s == 1)
                        c *= RatQ::q_power(1);
                    gen.emplace_back(std::move(w), std::move(c));
                }
                for (const Word& w : words_at(rest)) {
                    std::map<Word, RatQ> row;
                    for (const auto& [gw, gc] : gen) {
                        Word full = gw;
                        full.insert(full.end(), w.begin(), w.end());
                        row[std::move(full)] += gc;
                    }
                    ech.insert(row);
                }
            }
        }
    }

    for (const Word& w : words_at(m))
        if (!ech.rows.count(w)) out.standard.push_back(w);
    out.reduce = std::move(ech.rows);
}

const std::vector<Word>& UqEngine::standard_words(const KVec& m) const {
    return serre_component(m).standard;
}

std::map<Word, RatQ> UqEngine::reduce_word(const Word& w) const {
    const SerreComponent& comp = serre_component(multideg(w));
    auto it = comp.reduce.find(w);
    if (it != comp.reduce.end()) return it->second;
    return {{w, RatQ(1)}};
}

// ---------------------------------------------------------------------------
// Straightening and multiplication
// ---------------------------------------------------------------------------

namespace {

/// Flattened generator token: F_i, K_v, or E_i.
struct Tok {
    enum Kind { TF, TK, TE } kind;
    std::uint8_t idx = 0;
    KVec kv;
};

void push_word_tokens(std::vector<Tok>& seq, const NormalWord& w) {
    for (auto i : w.f) seq.push_back({Tok::TF, i, {}});
    if (std::any_of(w.k.begin(), w.k.end(), [](long v) { return v != 0; }))
        seq.push_back({Tok::TK, 0, w.k});
    for (auto i : w.e) seq.push_back({Tok::TE, i, {}});
}

} // namespace

UElement UqEngine::word_product(const NormalWord& a, const NormalWord& b,
                                const RatQ& coeff) const {
    if (a.f.size() + b.f.size() > max_len_ || a.e.size() + b.e.size() > max_len_)
        throw BoundError("word length " +
                         std::to_string(std::max(a.f.size() + b.f.size(),
                                                 a.e.size() + b.e.size())) +
                         " exceeds the engine bound " +
                         std::to_string(max_len_));

    std::vector<Tok> init;
    push_word_tokens(init, a);
    push_word_tokens(init, b);

    UElement result;
    std::vector<std::pair<RatQ, std::vector<Tok>>> work;
    work.emplace_back(coeff, std::move(init));

    while (!work.empty()) {
        auto [c, seq] = std::move(work.back());
        work.pop_back();

        // Find the leftmost inversion and rewrite it.
        bool rewritten = false;
        for (std::size_t p = 0; p + 1 < seq.size() && !rewritten; ++p) {
            Tok& x = seq[p];
            Tok& y = seq[p + 1];
            if (x.kind == Tok::TK && y.kind == Tok::TK) {
                for (std::size_t t = 0; t < rank(); ++t) x.kv[t] += y.kv[t];
                seq.erase(seq.begin() + p + 1);
                if (std::all_of(x.kv.begin(), x.kv.end(),
                                [](long v) { return v == 0; }))
                    seq.erase(seq.begin() + p);
                work.emplace_back(std::move(c), std::move(seq));
                rewritten = true;
            } else if (x.kind == Tok::TK && y.kind == Tok::TF) {
                // K_v F_j = q^{-<v, i2(j)>} F_j K_v
                RatQ cc = c * RatQ::q_power(-k_exponent(x.kv, y.idx));
                std::swap(seq[p], seq[p + 1]);
                work.emplace_back(std::move(cc), std::move(seq));
                rewritten = true;
            } else if (x.kind == Tok::TE && y.kind == Tok::TK) {
                // E_i K_v = q^{-<v, i2(i)>} K_v E_i
                RatQ cc = c * RatQ::q_power(-k_exponent(y.kv, x.idx));
                std::swap(seq[p], seq[p + 1]);
                work.emplace_back(std::move(cc), std::move(seq));
                rewritten = true;
            } else if (x.kind == Tok::TE && y.kind == Tok::TF) {
                // E_i F_j = F_j E_i + delta_ij (H_i - H_i^{-1})/(q_i - q_i^{-1})
                std::size_t i = x.idx, j = y.idx;
                if (i == j) {
                    RatQ gap(LaurentQ::one(), q_gap(datum_.c(i)));
                    KVec hv(rank(), 0);
                    hv[i] = datum_.c(i);
                    std::vector<Tok> plus(seq.begin(), seq.begin() + p);
                    plus.push_back({Tok::TK, 0, hv});
                    plus.insert(plus.end(), seq.begin() + p + 2, seq.end());
                    std::vector<Tok> minus(seq.begin(), seq.begin() + p);
                    KVec hneg(rank(), 0);
                    hneg[i] = -datum_.c(i);
                    minus.push_back({Tok::TK, 0, hneg});
                    minus.insert(minus.end(), seq.begin() + p + 2, seq.end());
                    work.emplace_back(c * gap, std::move(plus));
                    work.emplace_back(-(c * gap), std::move(minus));
                }
                std::swap(seq[p], seq[p + 1]);
                work.emplace_back(std::move(c), std::move(seq));
                rewritten = true;
            }
        }
        if (rewritten) continue;

        // Normal shape reached: collect, standardize, accumulate.
        NormalWord w;
        w.k.assign(rank(), 0);
        for (const Tok& t : seq) {
            if (t.kind == Tok::TF) w.f.push_back(t.idx);
            else if (t.kind == Tok::TE) w.e.push_back(t.idx);
            else
                for (std::size_t r = 0; r < rank(); ++r) w.k[r] += t.kv[r];
        }
        auto fred = reduce_word(w.f);
        auto ered = reduce_word(w.e);
        for (const auto& [fw, fc] : fred)
            for (const auto& [ew, ec] : ered)
                result.add(NormalWord{fw, w.k, ew}, c * fc * ec);
    }
    return result;
}

UElement UqEngine::multiply(const UElement& x, const UElement& y) const {
    UElement r;
    for (const auto& [xw, xc] : x.terms())
        for (const auto& [yw, yc] : y.terms())
            r += word_product(xw, yw, xc * yc);
    return r;
}

UElement UqEngine::multiply(const std::vector<UElement>& xs) const {
    UElement r = one();
    for (const auto& x : xs) r = multiply(r, x);
    return r;
}

TensorElement UqEngine::tensor_multiply(const TensorElement& x,
                                        const TensorElement& y) const {
    TensorElement r;
    for (const auto& [xp, xc] : x.terms()) {
        for (const auto& [yp, yc] : y.terms()) {
            UElement left = word_product(xp.first, yp.first, RatQ(1));
            UElement right = word_product(xp.second, yp.second, RatQ(1));
            RatQ c = xc * yc;
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms())
                    r.add(lw, rw, c * lc * rc);
        }
    }
    return r;
}

} // namespace qnichols
