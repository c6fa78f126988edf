#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qnichols/braided.hpp"
#include "qnichols/errors.hpp"
#include "qnichols/linalg.hpp"

using namespace qnichols;

namespace {

RatQ qp(long e) { return RatQ::q_power(e); }

UElement elem(const NormalWord& w) {
    UElement x;
    x.add(w, RatQ(1));
    return x;
}

KVec kv3(long a, long b, long c) { return KVec{a, b, c}; }

const UqEngine& a3() {
    static UqEngine e(builtin_datum("A", 3), 10);
    return e;
}

const BraidedEngine& a3a2() {
    static BraidedEngine b(a3(), levi_subdatum(builtin_datum("A", 3), {0, 1}));
    return b;
}

/// F3 K3
UElement golden_b1() { return a3().multiply(a3().F(2), a3().H(2)); }

/// F2 F3 K2 K3 - q F3 F2 K2 K3
UElement golden_b2() {
    const UqEngine& e = a3();
    const UElement k = e.K(kv3(0, 1, 1));
    UElement x = e.multiply({e.F(1), e.F(2), k});
    UElement y = e.multiply({e.F(2), e.F(1), k});
    y *= qp(1);
    return x - y;
}

/// F1F2F3 K - q F1F3F2 K - q F2F1F3 K + q^2 F3F2F1 K with K = K1K2K3
UElement golden_b3() {
    const UqEngine& e = a3();
    const UElement k = e.K(kv3(1, 1, 1));
    UElement t1 = e.multiply({e.F(0), e.F(1), e.F(2), k});
    UElement t2 = e.multiply({e.F(0), e.F(2), e.F(1), k});
    UElement t3 = e.multiply({e.F(1), e.F(0), e.F(2), k});
    UElement t4 = e.multiply({e.F(2), e.F(1), e.F(0), k});
    t2 *= qp(1);
    t3 *= qp(1);
    t4 *= qp(2);
    return t1 - t2 - t3 + t4;
}

TensorElement tensor_of(const UElement& a, const UElement& b, const RatQ& c) {
    TensorElement t;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, c * ca * cb);
    return t;
}

std::vector<std::size_t> dims_of(const std::vector<HilbertEntry>& hs) {
    std::vector<std::size_t> dims;
    for (const auto& h : hs) dims.push_back(h.dim);
    return dims;
}

} // namespace

TEST_CASE("exact linear algebra helpers") {
    RatMat m = {{RatQ(1), qp(1), RatQ(0)},
                {RatQ(2), qp(1) * RatQ(2), RatQ(0)},
                {RatQ(0), RatQ(0), RatQ(1)}};
    CHECK(rat_rank(m) == 2);
    auto ker = rat_kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == -qp(1));
    CHECK(ker[0][1] == RatQ(1));
    CHECK(ker[0][2] == RatQ(0));
    RatMat a = {{RatQ(0), RatQ(1)}, {RatQ(1), RatQ(0)}};
    CHECK(rat_det(a) == RatQ(-1));
    RatMat k = rat_kron(a, rat_identity(2));
    CHECK(k.size() == 4);
    CHECK(k[0][2] == RatQ(1));
    CHECK(k[1][3] == RatQ(1));
    CHECK(k[0][0] == RatQ(0));
    CHECK(rat_is_zero(rat_sub(rat_mul(a, a), rat_identity(2))));
}

TEST_CASE("chi grading and the degree-0 projection") {
    const UqEngine& e = a3();
    const BraidedEngine& b = a3a2();
    const UElement kmu = e.K(kv3(1, -1, 2));
    CHECK(b.chi(kmu) == 0u);
    CHECK(b.pi0(kmu) == kmu);
    const UElement f3k3 = golden_b1();
    CHECK(b.chi(f3k3) == 1u);
    CHECK(b.pi0(f3k3).is_zero());
    const UElement f1f3 = e.multiply(e.F(0), e.F(2));
    CHECK(b.chi(f1f3) == 1u);
    CHECK(b.pi0(f1f3).is_zero());
    const UElement f1k = e.multiply(e.F(0), kmu);
    CHECK(b.chi(f1k) == 0u);
    CHECK(b.pi0(f1k) == f1k);
    const UElement mixed = e.F(0) + f3k3;
    CHECK(!b.chi(mixed).has_value());
    CHECK(b.pi0(mixed) == e.F(0));
    CHECK_THROWS_AS(b.pi0(e.E(0)), InputError);
    CHECK(b.chi(e.zero()) == 0u);
}

TEST_CASE("coinvariant projection: values, idempotence, Sweedler form") {
    const UqEngine& e = a3();
    const BraidedEngine& b = a3a2();
    CHECK(b.pi(e.one()) == e.one());
    CHECK(b.pi(e.K(kv3(2, 0, -1))) == e.one());
    CHECK(b.pi(e.F(0)).is_zero());
    CHECK(b.pi(e.F(1)).is_zero());
    CHECK(b.pi(e.F(2)) == golden_b1());
    CHECK(b.pi(e.multiply(e.F(2), e.K(kv3(1, 2, 3)))) == golden_b1());
    const std::vector<UElement> samples = {
        e.F(2),
        e.multiply(e.F(0), e.F(2)),
        e.multiply(e.F(2), e.F(1)),
        e.multiply({e.F(1), e.F(2), e.F(1)}),
        e.multiply({e.F(2), e.F(1), e.F(0)}),
        e.multiply({e.F(0), e.F(1), e.F(2), e.K(kv3(0, 1, -1))}),
        e.multiply({e.F(1), e.F(2), e.F(1), e.F(2)}),
    };
    for (const UElement& x : samples) {
        const UElement px = b.pi(x);
        CHECK(b.pi(px) == px);
        if (!px.is_zero()) CHECK(b.chi(px) == b.chi(x));
        CHECK(b.is_coinvariant(px));
        // h_(1) S(pi(h_(2))) evaluated directly from the coproduct
        const TensorElement dx = e.coproduct(x);
        UElement direct;
        for (const auto& [p, c] : dx.terms()) {
            const UElement z = b.pi0(elem(p.second));
            if (z.is_zero()) continue;
            UElement t = e.multiply(elem(p.first), e.antipode(z));
            t *= c;
            direct += t;
        }
        CHECK(direct == px);
    }
}

TEST_CASE("degree-1 module of A2 in A3: golden basis") {
    const BraidedEngine& b = a3a2();
    const B1Result& b1 = b.compute_b1();
    CHECK(b1.complete);
    REQUIRE(b1.basis.dim() == 3);
    CHECK(b1.basis.degree == 1u);
    CHECK(b1.basis.vectors[0].value == golden_b1());
    CHECK(b1.basis.vectors[1].value == golden_b2());
    CHECK(b1.basis.vectors[2].value == golden_b3());
    CHECK(b1.basis.vectors[0].weight == kv3(0, 0, -1));
    CHECK(b1.basis.vectors[1].weight == kv3(0, -1, -1));
    CHECK(b1.basis.vectors[2].weight == kv3(-1, -1, -1));
    for (const BElement& v : b1.basis.vectors) CHECK(v.degree == 1u);
    REQUIRE(b1.components.size() == 1);
    const B1Component& comp = b1.components[0];
    CHECK(comp.d == 2);
    CHECK(comp.members == std::vector<std::size_t>{0, 1, 2});
    CHECK(comp.top_index == 0);
    CHECK(comp.highest_weight == Vec{0, 1, -2});
    CHECK(b1.primitive_indices == std::vector<std::size_t>{0});
}

TEST_CASE("degree-1 action table matches the golden table") {
    const BraidedEngine& b = a3a2();
    const ActionTable tab = b.action_table(b.compute_b1().basis);
    REQUIRE(tab.labels.size() == 7);
    CHECK(tab.labels ==
          std::vector<std::string>{"F[1]", "F[2]", "E[1]", "E[2]", "K[1,0,0]",
                                   "K[0,1,0]", "K[0,0,1]"});
    const RatMat zero3 = rat_zeros(3, 3);
    RatMat f1 = zero3;
    f1[2][1] = RatQ(1);  // b2 -> b3
    CHECK(tab.matrices[0] == f1);
    RatMat f2 = zero3;
    f2[1][0] = RatQ(1);  // b1 -> b2
    CHECK(tab.matrices[1] == f2);
    RatMat e1 = zero3;
    e1[1][2] = RatQ(1);  // b3 -> b2
    CHECK(tab.matrices[2] == e1);
    RatMat e2 = zero3;
    e2[0][1] = RatQ(1);  // b2 -> b1
    CHECK(tab.matrices[3] == e2);
    RatMat k1 = zero3;
    k1[0][0] = RatQ(1);
    k1[1][1] = qp(1);
    k1[2][2] = qp(-1);
    CHECK(tab.matrices[4] == k1);
    RatMat k2 = zero3;
    k2[0][0] = qp(1);
    k2[1][1] = qp(-1);
    k2[2][2] = RatQ(1);
    CHECK(tab.matrices[5] == k2);
    RatMat k3 = zero3;
    k3[0][0] = qp(-2);
    k3[1][1] = qp(-1);
    k3[2][2] = qp(-1);
    CHECK(tab.matrices[6] == k3);
}

TEST_CASE("the nine degree-1 braiding values") {
    const BraidedEngine& b = a3a2();
    const B1Result& b1 = b.compute_b1();
    std::vector<UElement> v;
    for (const BElement& x : b1.basis.vectors) v.push_back(x.value);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(b.braiding(v[i], v[i]) == tensor_of(v[i], v[i], qp(-2)));
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK(b.braiding(v[i], v[j]) == tensor_of(v[j], v[i], qp(-1)));
            TensorElement expect = tensor_of(v[j], v[i], qp(-2) - RatQ(1));
            expect += tensor_of(v[i], v[j], qp(-1));
            CHECK(b.braiding(v[j], v[i]) == expect);
        }
    }
}

TEST_CASE("braiding matrix: braid equation, invertibility, quadratic relation") {
    const BraidedEngine& b = a3a2();
    const BraidingMatrix bm = b.braiding_matrix(1, 1);
    REQUIRE(bm.dim_left == 3);
    REQUIRE(bm.dim_right == 3);
    const RatMat& m = bm.entries;
    CHECK(m[0][0] == qp(-2));
    CHECK(m[3][1] == qp(-1));
    CHECK(rat_det(m) != RatQ());
    const RatMat id3 = rat_identity(3);
    const RatMat m23 = rat_kron(m, id3);
    const RatMat m12 = rat_kron(id3, m);
    CHECK(rat_mul(rat_mul(m23, m12), m23) == rat_mul(rat_mul(m12, m23), m12));
    const HeckeReport h = b.hecke_diagnostic();
    CHECK(h.applies);
    CHECK(h.alpha == qp(-2));
    CHECK(h.beta == RatQ(1));
    const RatMat id9 = rat_identity(9);
    CHECK(rat_is_zero(rat_mul(rat_sub(m, rat_scale(id9, h.alpha)),
                              rat_add(m, rat_scale(id9, h.beta)))));
}

TEST_CASE("graded dimensions 1,3,6,10 with agreeing double computation") {
    const BraidedEngine& b = a3a2();
    const auto hs = b.hilbert_series(3);
    REQUIRE(hs.size() == 4);
    for (const auto& h : hs) {
        CHECK(h.certificate.agreed);
        CHECK(h.certificate.product_dim == h.certificate.coinvariant_dim);
    }
    CHECK(dims_of(hs) == std::vector<std::size_t>{1, 3, 6, 10});
    CHECK(hs[2].certificate.window_count == 6);
    CHECK(hs[3].certificate.window_count == 10);
}

TEST_CASE("degree-2 relations are the three q-commutators") {
    const BraidedEngine& b = a3a2();
    const UqEngine& e = a3();
    const RelationsResult rel = b.relations_at_degree(2);
    CHECK(rel.degree == 2u);
    CHECK(rel.tensor_dim == 9);
    REQUIRE(rel.kernel.size() == 3);
    const B1Result& b1 = b.compute_b1();
    std::vector<UElement> v;
    for (const BElement& x : b1.basis.vectors) v.push_back(x.value);
    for (const auto& r : rel.kernel) {
        UElement s;
        for (const auto& [tup, c] : r) {
            UElement p = e.multiply(v[tup[0]], v[tup[1]]);
            p *= c;
            s += p;
        }
        CHECK(s.is_zero());
    }
    using Rel = std::map<std::vector<std::size_t>, RatQ>;
    CHECK(rel.kernel[0] == Rel{{{0, 1}, -qp(-1)}, {{1, 0}, RatQ(1)}});
    CHECK(rel.kernel[1] == Rel{{{0, 2}, -qp(-1)}, {{2, 0}, RatQ(1)}});
    CHECK(rel.kernel[2] == Rel{{{1, 2}, -qp(-1)}, {{2, 1}, RatQ(1)}});
    // the q-commutation b_i b_j = q b_j b_i holds in the algebra
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK(e.multiply(v[i], v[j]) == e.multiply(v[j], v[i]) * qp(1));
}

TEST_CASE("primitives vanish in degrees 2 and 3; the Nichols check passes") {
    const BraidedEngine& b = a3a2();
    CHECK(b.primitives_at_degree(1).vectors.size() == 3);
    CHECK(b.primitives_at_degree(2).vectors.empty());
    CHECK(b.primitives_at_degree(3).vectors.empty());
    const NicholsReport r = b.nichols_check(3);
    CHECK(r.ok);
    CHECK(r.degree_zero_ok);
    CHECK(r.primitives_ok);
    CHECK(r.generation_ok);
    CHECK(r.primitive_dims == std::vector<std::size_t>{0, 0});
    CHECK(r.witness.empty());
}

TEST_CASE("braided coproduct, antipode, and counit") {
    const BraidedEngine& b = a3a2();
    const UqEngine& e = a3();
    const B1Result& b1 = b.compute_b1();
    CHECK(b.braided_coproduct(e.one()) ==
          tensor_of(e.one(), e.one(), RatQ(1)));
    for (const BElement& v : b1.basis.vectors) {
        TensorElement expect = tensor_of(v.value, e.one(), RatQ(1));
        expect += tensor_of(e.one(), v.value, RatQ(1));
        CHECK(b.braided_coproduct(v.value) == expect);
        CHECK(b.braided_antipode(v.value) == -v.value);
        CHECK(b.braided_counit(v.value) == RatQ());
    }
    CHECK(b.braided_counit(e.one()) == RatQ(1));
    // multiplicativity against the twisted tensor product
    const UElement& x = b1.basis.vectors[0].value;
    const UElement& y = b1.basis.vectors[2].value;
    CHECK(b.braided_coproduct(e.multiply(x, y)) ==
          b.braided_tensor_multiply(b.braided_coproduct(x),
                                    b.braided_coproduct(y)));
    const UElement x2 =
        e.multiply(b1.basis.vectors[1].value, b1.basis.vectors[1].value);
    CHECK(b.braided_coproduct(e.multiply(x2, y)) ==
          b.braided_tensor_multiply(b.braided_coproduct(x2),
                                    b.braided_coproduct(y)));
}

TEST_CASE("braided coproduct coordinates over the graded bases") {
    const BraidedEngine& b = a3a2();
    const BnResult& b2 = b.compute_bn(2);
    for (std::size_t i = 0; i < b2.basis.dim(); ++i) {
        const auto coords = b.braided_coproduct_coords(b2.basis.vectors[i]);
        bool saw_left_unit = false, saw_right_unit = false;
        for (const auto& c : coords) {
            if (c.left_degree == 0) {
                CHECK(c.left_index == 0);
                CHECK(c.right_index == i);
                CHECK(c.coeff == RatQ(1));
                saw_left_unit = true;
            }
            if (c.left_degree == 2) {
                CHECK(c.left_index == i);
                CHECK(c.right_index == 0);
                CHECK(c.coeff == RatQ(1));
                saw_right_unit = true;
            }
        }
        CHECK(saw_left_unit);
        CHECK(saw_right_unit);
    }
}

TEST_CASE("bosonisation isomorphism") {
    const BraidedEngine& b = a3a2();
    const UqEngine& e = a3();
    const UElement kmu = e.K(kv3(1, 0, -1));
    CHECK(b.upsilon(kmu) == tensor_of(e.one(), kmu, RatQ(1)));
    CHECK(b.upsilon(e.F(0)) == tensor_of(e.one(), e.F(0), RatQ(1)));
    CHECK(b.upsilon(e.F(1)) == tensor_of(e.one(), e.F(1), RatQ(1)));
    CHECK(b.upsilon(e.F(2)) ==
          tensor_of(e.multiply(e.F(2), e.H(2)), e.Hinv(2), RatQ(1)));
    const std::vector<UElement> samples = {
        e.one(),
        e.F(2),
        e.multiply(e.F(0), e.F(2)),
        e.multiply({e.F(2), e.F(1), e.K(kv3(0, 0, 1))}),
        e.multiply({e.F(1), e.F(2), e.F(1)}),
        golden_b2(),
        e.multiply({e.F(0), e.F(1), e.F(2)}) -
            e.multiply(e.F(2), e.K(kv3(1, 1, 0))),
    };
    for (const UElement& x : samples) CHECK(b.upsilon_inv(b.upsilon(x)) == x);
    for (const UElement& x : samples)
        for (const UElement& y : samples)
            CHECK(b.upsilon(e.multiply(x, y)) ==
                  b.smash_multiply(b.upsilon(x), b.upsilon(y)));
}

TEST_CASE("the braiding commutes with the degree-0 action") {
    const BraidedEngine& b = a3a2();
    const UqEngine& e = a3();
    const B1Result& b1 = b.compute_b1();
    auto act = [&](const UElement& g, const TensorElement& t) {
        const TensorElement dg = e.coproduct(g);
        TensorElement out;
        for (const auto& [pg, cg] : dg.terms()) {
            for (const auto& [pt, ct] : t.terms()) {
                const UElement ax = e.adjoint(elem(pg.first), elem(pt.first));
                const UElement ay = e.adjoint(elem(pg.second), elem(pt.second));
                for (const auto& [wx, cx] : ax.terms())
                    for (const auto& [wy, cy] : ay.terms())
                        out.add(wx, wy, cg * ct * cx * cy);
            }
        }
        return out;
    };
    auto psi = [&](const TensorElement& t) {
        TensorElement out;
        for (const auto& [p, c] : t.terms()) {
            TensorElement px = b.braiding(elem(p.first), elem(p.second));
            px *= c;
            out += px;
        }
        return out;
    };
    const std::vector<UElement> gens = {e.F(0), e.F(1), e.E(0), e.E(1),
                                        e.K(kv3(1, 0, 0))};
    for (const UElement& g : gens)
        for (std::size_t i : {0u, 1u})
            for (std::size_t j : {1u, 2u}) {
                const TensorElement t0 = tensor_of(
                    b1.basis.vectors[i].value, b1.basis.vectors[j].value,
                    RatQ(1));
                CHECK(psi(act(g, t0)) == act(g, psi(t0)));
            }
}

TEST_CASE("module generators F_gamma K_gamma") {
    const BraidedEngine& b = a3a2();
    const UqEngine& e = a3();
    const auto gens = b.module_generators(2);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].gamma.empty());
    CHECK(gens[0].element.value == e.one());
    CHECK(gens[1].gamma == std::vector<std::size_t>{2});
    CHECK(gens[1].element.value == golden_b1());
    CHECK(gens[2].gamma == std::vector<std::size_t>{2, 2});
    CHECK(gens[2].element.value ==
          e.multiply({e.F(2), e.F(2), e.K(kv3(0, 0, 2))}));
    CHECK(gens[2].element.degree == 2u);
    CHECK(gens[2].element.weight == kv3(0, 0, -2));
}

TEST_CASE("the closure of each module generator fills its graded slice") {
    const BraidedEngine& b = a3a2();
    const UqEngine& e = a3();
    for (unsigned n = 1; n <= 3; ++n) {
        std::vector<UElement> fs(n, e.F(2));
        fs.push_back(e.K(kv3(0, 0, static_cast<long>(n))));
        const GradedBasis closure = b.module_closure({e.multiply(fs)});
        const GradedBasis& slice = b.compute_bn(n).basis;
        REQUIRE(closure.dim() == slice.dim());
        CHECK(closure.pivots == slice.pivots);
        for (std::size_t i = 0; i < closure.dim(); ++i)
            CHECK(closure.vectors[i].value == slice.vectors[i].value);
    }
}

TEST_CASE("the pairing is nondegenerate on each graded slice") {
    const BraidedEngine& b = a3a2();
    for (unsigned n = 1; n <= 3; ++n) {
        const GradedBasis& bn = b.compute_bn(n).basis;
        CHECK(rat_rank(b.pairing_gram(bn, bn)) == bn.dim());
    }
}

TEST_CASE("degree-0 component checks") {
    const BraidedEngine& b = a3a2();
    const ZeroComponentReport rep = b.verify_zero_component();
    CHECK(rep.ok);
    bool found = false;
    for (const std::string& line : rep.checks)
        if (line == "ok: K[e3] F[1] K[e3]^-1 = q^0 F[1]") found = true;
    CHECK(found);
}

TEST_CASE("index, corank, and integrable nilpotence") {
    const BraidedEngine& b = a3a2();
    const IndexCorank ic = b.index_and_corank();
    CHECK(ic.corank == 1);
    CHECK(ic.index_known);
    CHECK(ic.index == 3);
    const IntegrabilityReport rep =
        b.integrability_check(b.compute_b1().basis, 6);
    CHECK(rep.ok);
    REQUIRE(rep.entries.size() == 6);
    CHECK(rep.entries[0].ambient_j == 0);
    CHECK(rep.entries[0].e_power == 1);
    CHECK(rep.entries[0].f_power == 1);
    CHECK(rep.entries[1].ambient_j == 1);
    CHECK(rep.entries[1].e_power == 1);
    CHECK(rep.entries[1].f_power == 2);
}

TEST_CASE("single-node datum with nothing embedded: scalar braiding") {
    static UqEngine e1(builtin_datum("A", 1), 8);
    const BraidedEngine b(e1, levi_subdatum(builtin_datum("A", 1), {}));
    CHECK(dims_of(b.hilbert_series(3)) == std::vector<std::size_t>{1, 1, 1, 1});
    const BraidingMatrix bm = b.braiding_matrix(1, 1);
    REQUIRE(bm.entries.size() == 1);
    CHECK(bm.entries[0][0] == qp(-2));
    const HeckeReport h = b.hecke_diagnostic();
    CHECK(h.applies);
    CHECK(h.alpha == qp(-2));
}

TEST_CASE("both nodes of A2 deleted: cubic relations only") {
    static UqEngine e2(builtin_datum("A", 2), 8);
    const BraidedEngine b(e2, levi_subdatum(builtin_datum("A", 2), {}));
    CHECK(dims_of(b.hilbert_series(3)) == std::vector<std::size_t>{1, 2, 4, 6});
    CHECK(b.relations_at_degree(2).kernel.empty());
    const RelationsResult r3 = b.relations_at_degree(3);
    CHECK(r3.tensor_dim == 8);
    REQUIRE(r3.kernel.size() == 2);
    const GradedBasis& b1 = b.compute_bn(1).basis;
    std::multiset<std::multiset<std::size_t>> kinds;
    for (const auto& rel : r3.kernel) {
        REQUIRE(!rel.empty());
        const std::multiset<std::size_t> letters(rel.begin()->first.begin(),
                                                 rel.begin()->first.end());
        for (const auto& [tup, c] : rel) {
            (void)c;
            CHECK(std::multiset<std::size_t>(tup.begin(), tup.end()) ==
                  letters);
        }
        kinds.insert(letters);
        UElement s;
        for (const auto& [tup, c] : rel) {
            UElement p = e2.multiply({b1.vectors[tup[0]].value,
                                      b1.vectors[tup[1]].value,
                                      b1.vectors[tup[2]].value});
            p *= c;
            s += p;
        }
        CHECK(s.is_zero());
    }
    CHECK(kinds.count(std::multiset<std::size_t>{0, 0, 1}) == 1);
    CHECK(kinds.count(std::multiset<std::size_t>{0, 1, 1}) == 1);
    CHECK(b.nichols_check(3).ok);
}

TEST_CASE("degree-0 checks with nothing embedded") {
    static UqEngine e2b(builtin_datum("A", 2), 8);
    const BraidedEngine b(e2b, levi_subdatum(builtin_datum("A", 2), {}));
    const ZeroComponentReport rep = b.verify_zero_component();
    CHECK(rep.ok);
}

TEST_CASE("direct-sum embeddings reduce to the complement algebra") {
    static UqEngine e11(
        direct_sum(builtin_datum("A", 1), builtin_datum("A", 1)), 8);
    const BraidedEngine b11(
        e11, left_summand_subdatum(builtin_datum("A", 1), builtin_datum("A", 1)));
    const IndexCorank ic = b11.index_and_corank();
    CHECK(ic.index == 1);
    CHECK(ic.corank == 1);
    CHECK(dims_of(b11.hilbert_series(3)) ==
          std::vector<std::size_t>{1, 1, 1, 1});

    static UqEngine e21(
        direct_sum(builtin_datum("A", 2), builtin_datum("A", 1)), 8);
    const BraidedEngine b21(
        e21, left_summand_subdatum(builtin_datum("A", 2), builtin_datum("A", 1)));
    CHECK(dims_of(b21.hilbert_series(3)) ==
          std::vector<std::size_t>{1, 1, 1, 1});
    const ActionTable tab = b21.action_table(b21.compute_b1().basis);
    REQUIRE(tab.matrices.size() == 7);
    for (int g : {0, 1, 2, 3}) CHECK(rat_is_zero(tab.matrices[g]));
    CHECK(tab.matrices[4][0][0] == RatQ(1));
    CHECK(tab.matrices[5][0][0] == RatQ(1));
    CHECK(tab.matrices[6][0][0] == qp(-2));
}

TEST_CASE("the identity embedding leaves only the scalars") {
    const UqEngine& e = a3();
    const BraidedEngine b(e, levi_subdatum(builtin_datum("A", 3), {0, 1, 2}));
    const IndexCorank ic = b.index_and_corank();
    CHECK(ic.corank == 0);
    CHECK(ic.index == 0);
    CHECK(dims_of(b.hilbert_series(3)) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(b.nichols_check(3).ok);
    CHECK(b.verify_zero_component().ok);
}

TEST_CASE("an unbounded orbit hits the cap and is reported incomplete") {
    const IntMat dot = IntMat::from_rows({{2, -2, -1}, {-2, 2, 0}, {-1, 0, 2}});
    const RootDatum wild({"1", "2", "3"}, dot, 3, 3, IntMat::identity(3),
                         IntMat::identity(3), dot);
    const UqEngine eng(wild, 16);
    const BraidedEngine b(eng, levi_subdatum(wild, {0, 1}), 8);
    const B1Result& b1 = b.compute_b1();
    CHECK(!b1.complete);
    CHECK(b1.basis.dim() >= 8);
    CHECK(b1.note.find("orbit cap") != std::string::npos);
    const IndexCorank ic = b.index_and_corank();
    CHECK(!ic.index_known);
    CHECK_THROWS_AS(b.compute_bn(1), CapError);
}

TEST_CASE("constructor and element wrapping reject invalid input") {
    const UqEngine& e = a3();
    CHECK_THROWS_AS(
        BraidedEngine(e, levi_subdatum(builtin_datum("A", 2), {0}), 16),
        InputError);
    CHECK_THROWS_AS(
        BraidedEngine(e, levi_subdatum(builtin_datum("A", 3), {0, 1}), 0),
        InputError);
    const BraidedEngine& b = a3a2();
    CHECK_THROWS_AS(b.make_element(e.zero()), InputError);
    CHECK_THROWS_AS(b.make_element(e.E(0)), InputError);
    CHECK_THROWS_AS(b.make_element(e.F(2)), InputError);
    CHECK_THROWS_AS(b.make_element(e.F(0) + golden_b1()), InputError);
    const BElement ok = b.make_element(golden_b2());
    CHECK(ok.degree == 1u);
    CHECK(ok.weight == kv3(0, -1, -1));
}
