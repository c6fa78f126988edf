/**
 * @file braided.hpp
 * @brief The graded braided Hopf algebra of coinvariants attached to a
 *        sub-root datum: projection, bosonisation, graded bases computed two
 *        independent ways, braiding, relations, primitives, and the
 *        Nichols-algebra verification.
 *
 * Everything lives inside H = U_q^{<=0}, the F/K part of U_q of the ambient
 * datum.  The deleted node set D = I \ iota(J) induces the N-grading chi_D
 * that counts D-letters of a word; pi denotes the projection onto the
 * degree-0 part (an algebra map because the grading sits in non-negative
 * degrees).  With S the antipode and Sweedler sums implicit:
 *
 *   Pi(h)      = h_(1) S(pi(h_(2)))                 projection of H onto B
 *   B          = { b : b_(1) (x) pi(b_(2)) = b (x) 1 }   right coinvariants
 *   Upsilon(h) = Pi(h_(1)) (x) pi(h_(2))            iso onto the bosonisation
 *
 * B is an N-graded braided Hopf algebra in the module category of the
 * degree-0 part, with
 *
 *   braided coproduct  Pi(b_(1)) (x) b_(2)
 *   braided antipode   pi(b_(1)) S(b_(2))
 *   braiding           Psi(b (x) c) = (pi(b_(1)) |> c) (x) b_(2)
 *
 * where |> is the adjoint action.  B_1 is the module closure of
 * { F_d H_d : d in D } under the adjoint action of the degree-0 generators,
 * and every graded slice B_n is computed twice — as the span of n-fold
 * products of B_1 and as the image of Pi on degree-n Borel slices — and the
 * two canonical reduced echelon bases must coincide exactly.
 */
#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qnichols/linalg.hpp"
#include "qnichols/rootdata.hpp"
#include "qnichols/uq.hpp"

namespace qnichols {

/// An element of the coinvariant algebra B, tagged with its grading data.
struct BElement {
    UElement value;
    unsigned degree = 0;  ///< chi_D degree (the value is chi-homogeneous)
    KVec weight;          ///< Z[I] weight (the value is weight-homogeneous)
};

/**
 * Canonical basis of one graded slice: rows of a fully reduced echelon form
 * with the pivot rule "smallest word", listed in ascending pivot order.  The
 * form is unique for the spanned subspace, so bases obtained from different
 * spanning sets of the same space agree verbatim.
 */
struct GradedBasis {
    unsigned degree = 0;
    std::vector<BElement> vectors;
    std::map<NormalWord, std::size_t> pivots;  ///< pivot word -> index
    std::size_t dim() const { return vectors.size(); }
};

/// One irreducible-module slice of B_1: the orbit grown from F_d H_d.
struct B1Component {
    std::size_t d = 0;                 ///< deleted ambient index (0-based)
    std::vector<std::size_t> members;  ///< indices into the B_1 basis
    std::size_t top_index = 0;         ///< index of the seed vector F_d H_d
    Vec highest_weight;                ///< rho(-i2(d)) in X' coordinates
};

struct B1Result {
    GradedBasis basis;
    std::vector<B1Component> components;
    std::vector<std::size_t> primitive_indices;  ///< killed by every Ad_{E_j}
    bool complete = true;  ///< false when the orbit cap or word bound cut off
    std::string note;      ///< reason when !complete
};

/// Agreement certificate of the two independent slice computations.
struct BnCertificate {
    std::size_t product_dim = 0;      ///< dim from n-fold B_1 products
    std::size_t coinvariant_dim = 0;  ///< dim from Pi on Borel slices
    std::size_t window_count = 0;     ///< weight windows scanned by route 2
    bool agreed = false;
};

struct BnResult {
    GradedBasis basis;
    BnCertificate certificate;
};

/**
 * Psi on B_a (x) B_b in the stored bases {u_i} of B_a and {v_j} of B_b:
 * column i*dim_right + j holds the coordinates of Psi(u_i (x) v_j) over the
 * target basis {v_k (x) u_l}, row k*dim_left + l.
 */
struct BraidingMatrix {
    unsigned left_degree = 0, right_degree = 0;
    std::size_t dim_left = 0, dim_right = 0;
    RatMat entries;
};

/// Matrices of the adjoint action on a graded basis, one per generator.
struct ActionTable {
    std::vector<std::string> labels;  ///< generator expressions, e.g. "F[2]"
    std::vector<RatMat> matrices;     ///< matrices[g][i][j]: v_j |-> sum_i m_ij v_i
};

/// Kernel of the n-fold multiplication map T^n(B_1) -> B_n.
struct RelationsResult {
    unsigned degree = 0;
    std::size_t tensor_dim = 0;  ///< dim(B_1)^n
    /// Canonical kernel basis; keys are index tuples into the B_1 basis.
    std::vector<std::map<std::vector<std::size_t>, RatQ>> kernel;
};

/// Braided-primitive subspace of B_n.
struct PrimitivesResult {
    unsigned degree = 0;
    std::vector<UElement> vectors;
};

struct NicholsReport {
    unsigned max_degree = 0;
    bool degree_zero_ok = false;  ///< B_0 = k
    bool primitives_ok = false;   ///< no primitives in degrees 2..N
    bool generation_ok = false;   ///< B_n = span of n-fold B_1 products
    bool ok = false;
    std::string witness;                     ///< set on failure
    std::vector<std::size_t> primitive_dims; ///< dims at degrees 2..N
};

struct IntegrabilityEntry {
    std::size_t vector_index = 0;
    std::size_t ambient_j = 0;  ///< acting node iota(j), 0-based ambient
    unsigned e_power = 0;       ///< least k with Ad_{E_j}^k = 0 (0 if none found)
    unsigned f_power = 0;       ///< least k with Ad_{F_j}^k = 0 (0 if none found)
    bool ok = false;
};

struct IntegrabilityReport {
    unsigned nilbound = 0;
    bool ok = false;
    std::vector<IntegrabilityEntry> entries;
};

struct IndexCorank {
    std::size_t corank = 0;
    bool index_known = false;  ///< false when the orbit closure was cut off
    std::size_t index = 0;     ///< dim B_1 when known
};

struct HilbertEntry {
    unsigned degree = 0;
    std::size_t dim = 0;
    BnCertificate certificate;
};

struct ModuleGenerator {
    std::vector<std::size_t> gamma;  ///< word over D (0-based ambient indices)
    BElement element;                ///< F_gamma K_{sum c_t e_t}, normalized
};

struct ZeroComponentReport {
    bool ok = false;
    std::vector<std::string> checks;  ///< one line per verified fact
};

/// Diagnostic: does Psi on B_1 (x) B_1 satisfy (Psi - alpha)(Psi + beta) = 0?
struct HeckeReport {
    bool applies = false;  ///< quadratic law found with alpha, beta in Q(q)
    RatQ alpha, beta;
    std::string detail;
};

/// One coordinate of a braided coproduct over the graded bases.
struct BraidedTensorCoord {
    unsigned left_degree = 0;      ///< split (left_degree, n - left_degree)
    std::size_t left_index = 0;    ///< index into the B_{left_degree} basis
    std::size_t right_index = 0;   ///< index into the B_{n-left_degree} basis
    RatQ coeff;
};

/**
 * Driver for the coinvariant algebra of one sub-root datum.  Holds a
 * reference to the ambient-datum engine (which must outlive it) and caches
 * the graded bases, the projection, and word coproducts.  All methods are
 * const and internally synchronized, matching the engine's compute-once
 * cache discipline.
 */
class BraidedEngine {
public:
    /**
     * @param engine    engine of the ambient datum (s.ambient())
     * @param sub       the embedding; all six conditions must hold
     * @param orbit_cap cap on dim B_1 during the module closure
     *
     * Throws InputError when the engine datum differs from s.ambient(), when
     * a condition fails, or when orbit_cap is zero.
     */
    BraidedEngine(const UqEngine& engine, SubRootDatum sub,
                  std::size_t orbit_cap = 512);

    const UqEngine& uq() const { return eng_; }
    const SubRootDatum& sub() const { return sub_; }
    std::size_t orbit_cap() const { return cap_; }

    // -- grading --------------------------------------------------------------
    /// chi_D of a Borel word (throws InputError on E-letters).
    unsigned chi(const NormalWord& w) const;
    /// Common chi_D degree of all terms; nullopt if mixed; 0 for the zero element.
    std::optional<unsigned> chi(const UElement& x) const;

    // -- projections and coinvariance -----------------------------------------
    /// Keep the chi-degree-0 terms (the Hopf projection pi).
    UElement pi0(const UElement& x) const;
    /// Pi(h) = h_(1) S(pi(h_(2))): the projection of the Borel part onto B.
    UElement pi(const UElement& x) const;
    bool is_coinvariant(const UElement& x) const;
    /**
     * Wrap a verified element of B: checks Borel shape, chi-homogeneity,
     * weight-homogeneity, coinvariance, and Pi-fixedness; throws InputError
     * with the violated property otherwise.
     */
    BElement make_element(const UElement& x) const;

    // -- bosonisation ----------------------------------------------------------
    /// Upsilon(h) = Pi(h_(1)) (x) pi(h_(2)) in B (x) H_0.
    TensorElement upsilon(const UElement& x) const;
    /// Upsilon^{-1}(b (x) h) = b h, extended linearly.
    UElement upsilon_inv(const TensorElement& t) const;
    /// Semidirect product law (b (x) h)(c (x) g) = b (h_(1) |> c) (x) h_(2) g.
    TensorElement smash_multiply(const TensorElement& x,
                                 const TensorElement& y) const;

    // -- braided Hopf structure -------------------------------------------------
    /// Pi(b_(1)) (x) b_(2); lands in B (x) B for b in B.
    TensorElement braided_coproduct(const UElement& b) const;
    /// Coordinates of the braided coproduct over all splits (a, degree - a).
    std::vector<BraidedTensorCoord>
    braided_coproduct_coords(const BElement& b) const;
    /// pi(b_(1)) S(b_(2)).
    UElement braided_antipode(const UElement& b) const;
    /// The counit restricted to B.
    RatQ braided_counit(const UElement& b) const;
    /// Psi(b (x) c) = (pi(b_(1)) |> c) (x) b_(2).
    TensorElement braiding(const UElement& b, const UElement& c) const;
    /// Product on B (x) B twisted by Psi in the middle.
    TensorElement braided_tensor_multiply(const TensorElement& x,
                                          const TensorElement& y) const;

    // -- graded bases ------------------------------------------------------------
    /**
     * B_1 as the module closure of { F_d H_d : d in D } under the adjoint
     * action, applied breadth-first in the fixed generator order (F_j
     * ascending, then E_j ascending, then K_{e_i}), echelonizing after each
     * wave.  Exceeding the orbit cap or the engine word bound yields a
     * partial result flagged incomplete rather than an exception.
     */
    const B1Result& compute_b1() const;
    /**
     * B_n computed twice (products of B_1, and Pi on Borel slices over the
     * weight windows reachable by n-fold sums of B_1 weights).  Throws
     * ConsistencyError when the two canonical bases differ and CapError when
     * B_1 is incomplete.
     */
    const BnResult& compute_bn(unsigned n) const;
    /// Ad-module closure of arbitrary seed vectors (all in B, one degree).
    GradedBasis module_closure(const std::vector<UElement>& seeds) const;
    /// Coordinates over a basis; throws ConsistencyError if x is outside it.
    std::vector<RatQ> coordinates(const GradedBasis& basis,
                                  const UElement& x) const;

    // -- derived structure ---------------------------------------------------------
    ActionTable action_table(const GradedBasis& basis) const;
    BraidingMatrix braiding_matrix(unsigned left_degree,
                                   unsigned right_degree) const;
    RelationsResult relations_at_degree(unsigned n) const;
    PrimitivesResult primitives_at_degree(unsigned n) const;
    NicholsReport nichols_check(unsigned max_degree) const;
    IntegrabilityReport integrability_check(const GradedBasis& basis,
                                            unsigned nilbound = 6) const;
    IndexCorank index_and_corank() const;
    std::vector<HilbertEntry> hilbert_series(unsigned max_degree) const;
    /// F_gamma K_{sum_t c_{gamma_t} e_{gamma_t}} for words gamma over D.
    std::vector<ModuleGenerator> module_generators(unsigned maxlen) const;
    ZeroComponentReport verify_zero_component() const;
    HeckeReport hecke_diagnostic() const;
    /// Gram matrix of the Borel pairing on two graded bases.
    RatMat pairing_gram(const GradedBasis& a, const GradedBasis& b) const;

private:
    class Echelon;
    struct Closure;

    const UqEngine& eng_;
    SubRootDatum sub_;
    std::size_t cap_;
    std::vector<bool> in_d_;                 ///< ambient index lies in D
    std::vector<std::size_t> iota_ambient_;  ///< iota(j), ascending in j

    mutable std::recursive_mutex mutex_;
    mutable std::map<Word, UElement> pi_cache_;
    mutable std::map<NormalWord, TensorElement> cop_cache_;
    mutable std::optional<B1Result> b1_;
    mutable std::map<unsigned, BnResult> bn_;

    const UElement& pi_word(const Word& f) const;
    const TensorElement& coproduct_word(const NormalWord& w) const;
    TensorElement coproduct_of(const UElement& x) const;
    UElement word_elem(const NormalWord& w) const;
    /// Adjoint-action generators in the fixed closure order, with labels.
    std::vector<std::pair<std::string, UElement>> acting_generators() const;
    Closure ad_closure(const std::vector<UElement>& seeds,
                       std::size_t cap) const;
    GradedBasis basis_from_rows(const std::map<NormalWord, UElement>& rows,
                                std::optional<unsigned> expect_degree) const;
    std::vector<KVec> weight_windows(unsigned n) const;
    void require_borel(const UElement& x, const char* who) const;
};

} // namespace qnichols
