/**
 * @file uq.hpp
 * @brief The quantized enveloping algebra U_q of a root datum as a computable
 *        object: normal forms, Hopf structure, adjoint action, and the
 *        self-duality pairing of the non-positive Borel part.
 *
 * U_q is generated by E_i, F_i (i in I) and K_mu (mu in Z = Z[i1(I)],
 * represented as integer vectors over I) subject to
 *   R1  K_0 = 1,  K_mu K_nu = K_{mu+nu}
 *   R2  K_mu E_i = q^{<mu, i2(i)>} E_i K_mu
 *   R3  K_mu F_i = q^{-<mu, i2(i)>} F_i K_mu
 *   R4  E_i F_j - F_j E_i = delta_ij (H_i - H_i^{-1})/(q_i - q_i^{-1}),
 *       H_i = K_{c_i e_i}, q_i = q^{c_i}
 *   R5/R6  quantum Serre relations for E and F with coefficients
 *       (-1)^s [1 - C_ij choose s]_{q_i}.
 * Here <mu, i2(j)> = sum_t mu_t C_tj for mu in Z[I].
 *
 * Normal form: every element is a combination of words F_alpha K_mu E_beta
 * where the F-word and E-word are canonical ("standard") representatives of
 * their multidegree component modulo the Serre ideal.  Standardization uses
 * lazily-built echelon bases of the graded components of the two-sided Serre
 * ideal, with the deterministic pivot rule "largest word in the
 * length-then-lexicographic order".
 *
 * Hopf structure:
 *   Delta E_i = E_i x 1 + H_i x E_i      S E_i = -H_i^{-1} E_i   eps = 0
 *   Delta F_i = F_i x H_i^{-1} + 1 x F_i S F_i = -F_i H_i       eps = 0
 *   Delta K_mu = K_mu x K_mu             S K_mu = K_{-mu}       eps = 1
 * and Ad_u(v) = sum u_(1) v S(u_(2)).
 *
 * The pairing on the F/K part is the Hopf pairing fixed by
 *   <K_mu, K_nu> = q^{mu^T C nu},  <F_i, F_j K_nu> = -delta_ij/(q_i-q_i^{-1}),
 *   <K, F..> = <F.., K> = 0,
 * extended by <xy, z> = sum <x, z_(2)><y, z_(1)> and
 * <x, yz> = sum <x_(2), y><x_(1), z> (both laws read the decomposed side
 * against the flipped coproduct; this is the unique orientation that is
 * well-defined for the coproduct above).
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qnichols/ratq.hpp"
#include "qnichols/rootdata.hpp"

namespace qnichols {

/// Letter sequence over the index set I (0-based indices).
using Word = std::vector<std::uint8_t>;
/// Exponent vector of a K generator, or a multidegree, over I.
using KVec = std::vector<long>;

/// Normal-form basis word F_{f[0]}...F_{f[.]} K_k E_{e[0]}...E_{e[.]}.
struct NormalWord {
    Word f;
    KVec k;  ///< always of length |I|
    Word e;

    bool is_one() const;
    /// Length-then-lexicographic on f, then k, then e; total and deterministic.
    bool operator<(const NormalWord& o) const;
    bool operator==(const NormalWord& o) const {
        return f == o.f && k == o.k && e == o.e;
    }
    /// Expression text, e.g. "F[1]*F[3]*K[0,1,-1]*E[2]"; "1" for the unit.
    std::string str() const;
};

/// Finitely supported RatQ-combination of normal words.
class UElement {
public:
    UElement() = default;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<NormalWord, RatQ>& terms() const { return terms_; }

    void add(const NormalWord& w, const RatQ& c);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement& operator*=(const RatQ& c);
    UElement operator+(const UElement& o) const;
    UElement operator-(const UElement& o) const;
    UElement operator*(const RatQ& c) const;
    UElement operator-() const;
    bool operator==(const UElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const UElement& o) const { return !(*this == o); }

    /// Coefficient of a word (zero if absent).
    RatQ coeff(const NormalWord& w) const;

    /// Terms joined with explicit signs, largest word first; "0" if zero.
    std::string str() const;

private:
    std::map<NormalWord, RatQ> terms_;
};

/// Finitely supported combination of pure tensors of normal words.
class TensorElement {
public:
    TensorElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<NormalWord, NormalWord>, RatQ>& terms() const {
        return terms_;
    }
    void add(const NormalWord& a, const NormalWord& b, const RatQ& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const RatQ& c);
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    /// Sweedler-style expansion sum (c * a) (x) b over stored terms.
    std::vector<std::pair<UElement, UElement>> factors() const;

    std::string str() const;

private:
    std::map<std::pair<NormalWord, NormalWord>, RatQ> terms_;
};

/// Reduction data for one multidegree component of the Serre ideal.
struct SerreComponent {
    /// pivot word -> equivalent combination of standard words.
    std::map<Word, std::map<Word, RatQ>> reduce;
    /// non-pivot words at this multidegree, ascending.
    std::vector<Word> standard;
};

class UqEngine {
public:
    /**
     * @param datum        the root datum
     * @param max_word_len guard on the F-length and E-length of any word the
     *                     engine will construct; exceeding it raises
     *                     BoundError rather than silently truncating
     */
    explicit UqEngine(RootDatum datum, std::size_t max_word_len = 6);

    const RootDatum& datum() const { return datum_; }
    std::size_t max_word_len() const { return max_len_; }
    std::size_t rank() const { return datum_.size(); }

    /**
     * Corrupt one quantum Serre coefficient (the s = 1 term of the first
     * adjacent ordered pair gets an extra factor q).  Testing hook for
     * mutation coverage of the self-test suites; must be called before any
     * component is built.
     */
    void corrupt_serre_coefficient();

    // -- element builders ---------------------------------------------------
    UElement zero() const { return UElement(); }
    UElement one() const;
    UElement scalar(const RatQ& c) const;
    UElement F(std::size_t i) const;
    UElement E(std::size_t i) const;
    UElement K(const KVec& mu) const;
    /// H_i = K_{c_i e_i} and its inverse.
    UElement H(std::size_t i) const;
    UElement Hinv(std::size_t i) const;

    // -- algebra ------------------------------------------------------------
    UElement multiply(const UElement& x, const UElement& y) const;
    UElement multiply(const std::vector<UElement>& xs) const;
    TensorElement tensor_multiply(const TensorElement& x,
                                  const TensorElement& y) const;

    // -- Hopf structure -----------------------------------------------------
    TensorElement coproduct(const UElement& x) const;
    UElement antipode(const UElement& x) const;
    RatQ counit(const UElement& x) const;
    /// Ad_u(v) = sum u_(1) v S(u_(2)).
    UElement adjoint(const UElement& u, const UElement& v) const;

    /// Z[I]-weight: -multideg(F-part) + multideg(E-part); nullopt if the
    /// terms disagree ("mixed"); the zero element reports weight 0.
    std::optional<KVec> weight(const UElement& x) const;

    // -- pairing of the F/K part ---------------------------------------------
    /// Throws InputError if an argument has E-letters.
    RatQ pair_borel(const UElement& x, const UElement& z) const;
    /// Same value through full coproduct expansion; used as a cross-check.
    RatQ pair_borel_alt(const UElement& x, const UElement& z) const;

    // -- Serre normalization internals (exposed for slices and diagnostics) --
    /// Component for a multidegree (entries >= 0, total <= max_word_len).
    const SerreComponent& serre_component(const KVec& multideg) const;
    /// Standard words at the multidegree, ascending (a PBW-sized basis).
    const std::vector<Word>& standard_words(const KVec& multideg) const;
    /// Express a raw letter word in standard words (identity on standards).
    std::map<Word, RatQ> reduce_word(const Word& w) const;

    KVec multideg(const Word& w) const;

    /// sum_t mu_t C_{t,i} = <mu, i2(i)>; the exponent in R2/R3.
    long k_exponent(const KVec& mu, std::size_t i) const;

private:
    RootDatum datum_;
    std::size_t max_len_;
    std::vector<std::vector<long>> cartan_;  ///< C rows for quick access
    mutable std::map<KVec, std::unique_ptr<SerreComponent>> components_;
    mutable std::recursive_mutex mutex_;
    bool corrupt_ = false;
    mutable bool components_built_ = false;

    void build_component(const KVec& m, SerreComponent& out) const;
    UElement word_product(const NormalWord& a, const NormalWord& b,
                          const RatQ& coeff) const;
    RatQ pair_words(const NormalWord& x, const NormalWord& z) const;
};

/// Basis of a finite window of a graded slice of the F/K Borel part.
struct BorelSlice {
    std::vector<NormalWord> words;
};

/**
 * Basis words F_alpha K_mu of the chi_D-degree-n slice of the Borel part of
 * U_q(ambient), within the finite window |alpha| <= max_flen and mu in kbox.
 * When a Z[I]-weight w is given, alpha is pinned to the multidegree -w and
 * max_flen is ignored.  Words are standard and deterministically ordered.
 */
BorelSlice borel_slice(const UqEngine& engine, const SubRootDatum& s,
                       unsigned n, const std::optional<KVec>& weight,
                       std::size_t max_flen, const std::vector<KVec>& kbox);

} // namespace qnichols
