#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "qnichols/uq.hpp"

using namespace qnichols;

namespace {

RatQ qp(long e) { return RatQ::q_power(e); }

UElement elem(const UqEngine& eng, const NormalWord& w) {
    (void)eng;
    UElement x;
    x.add(w, RatQ(1));
    return x;
}

/// Random small element: up to three words made of random letters.
UElement random_element(const UqEngine& eng, std::mt19937& rng,
                        std::size_t max_letters = 2, bool allow_e = true) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> nlet(0, static_cast<int>(max_letters));
    std::uniform_int_distribution<int> letter(0, static_cast<int>(eng.rank()) - 1);
    std::uniform_int_distribution<int> kv(-1, 1);
    std::uniform_int_distribution<int> cf(-2, 2);
    std::uniform_int_distribution<int> ce(-1, 1);
    UElement x;
    int t = nterms(rng);
    for (int a = 0; a < t; ++a) {
        std::vector<UElement> parts{eng.one()};
        int nf = nlet(rng);
        for (int b = 0; b < nf; ++b) parts.push_back(eng.F(letter(rng)));
        KVec mu(eng.rank());
        for (auto& v : mu) v = kv(rng);
        parts.push_back(eng.K(mu));
        if (allow_e) {
            int neL = nlet(rng);
            for (int b = 0; b < neL; ++b) parts.push_back(eng.E(letter(rng)));
        }
        long c = cf(rng);
        if (c == 0) c = 1;
        x += eng.multiply(parts) * (RatQ(c) * qp(ce(rng)));
    }
    return x;
}

using Tensor3 = std::map<std::tuple<NormalWord, NormalWord, NormalWord>, RatQ>;

void t3_add(Tensor3& t, const NormalWord& a, const NormalWord& b,
            const NormalWord& c, const RatQ& v) {
    if (v.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(std::move(key), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

} // namespace

TEST_SUITE("defining relations") {
    TEST_CASE("K group law and the unit") {
        UqEngine eng(builtin_datum("A", 3));
        CHECK(eng.K(KVec{0, 0, 0}) == eng.one());
        KVec a{1, -2, 0}, b{0, 3, -1}, s{1, 1, -1};
        CHECK(eng.multiply(eng.K(a), eng.K(b)) == eng.K(s));
        CHECK(eng.multiply(eng.K(a), eng.K(KVec{-1, 2, 0})) == eng.one());
    }

    TEST_CASE("K moves across E and F with the Cartan exponent") {
        UqEngine eng(builtin_datum("A", 3));
        KVec mu{1, 0, -2};
        for (std::size_t j = 0; j < 3; ++j) {
            long ex = eng.k_exponent(mu, j);
            CHECK(eng.multiply(eng.K(mu), eng.E(j)) ==
                  eng.multiply(eng.E(j), eng.K(mu)) * qp(ex));
            CHECK(eng.multiply(eng.K(mu), eng.F(j)) ==
                  eng.multiply(eng.F(j), eng.K(mu)) * qp(-ex));
        }
        // With mu = c_i e_i the exponent is the symmetrized Cartan number i.j.
        const RootDatum& d = eng.datum();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                long dij = d.c(i) * d.cartan(i, j);
                CHECK(eng.multiply(eng.H(i), eng.E(j)) ==
                      eng.multiply(eng.E(j), eng.H(i)) * qp(dij));
                CHECK(eng.multiply(eng.H(i), eng.F(j)) ==
                      eng.multiply(eng.F(j), eng.H(i)) * qp(-dij));
            }
    }

    TEST_CASE("E and F commutator") {
        UqEngine eng(builtin_datum("A", 3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                UElement lhs = eng.multiply(eng.E(i), eng.F(j)) -
                               eng.multiply(eng.F(j), eng.E(i));
                if (i != j) {
                    CHECK(lhs.is_zero());
                } else {
                    RatQ gap(LaurentQ::one(), q_gap(eng.datum().c(i)));
                    UElement rhs = (eng.H(i) - eng.Hinv(i)) * gap;
                    CHECK(lhs == rhs);
                }
            }
    }

    TEST_CASE("quantum Serre relations vanish") {
        UqEngine eng(builtin_datum("A", 3));
        const RootDatum& d = eng.datum();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                long a = 1 - d.cartan(i, j);
                UElement sf, se;
                for (long s = 0; s <= a; ++s) {
                    RatQ c = RatQ(q_binom(a, s, d.c(i)));
                    if (s % 2 == 1) c = -c;
                    std::vector<UElement> pf, pe;
                    for (long t = 0; t < a - s; ++t) {
                        pf.push_back(eng.F(i));
                        pe.push_back(eng.E(i));
                    }
                    pf.push_back(eng.F(j));
                    pe.push_back(eng.E(j));
                    for (long t = 0; t < s; ++t) {
                        pf.push_back(eng.F(i));
                        pe.push_back(eng.E(i));
                    }
                    sf += eng.multiply(pf) * c;
                    se += eng.multiply(pe) * c;
                }
                CHECK(sf.is_zero());
                CHECK(se.is_zero());
            }
    }

    TEST_CASE("rank-two Serre relation written out") {
        UqEngine eng(builtin_datum("A", 2));
        UElement r = eng.multiply({eng.F(0), eng.F(0), eng.F(1)}) -
                     eng.multiply({eng.F(0), eng.F(1), eng.F(0)}) *
                         RatQ(q_int(2, 1)) +
                     eng.multiply({eng.F(1), eng.F(0), eng.F(0)});
        CHECK(r.is_zero());
    }

    TEST_CASE("associativity on random elements") {
        UqEngine eng(builtin_datum("A", 2));
        std::mt19937 rng(12345);
        for (int rep = 0; rep < 12; ++rep) {
            UElement x = random_element(eng, rng);
            UElement y = random_element(eng, rng);
            UElement z = random_element(eng, rng);
            CHECK(eng.multiply(eng.multiply(x, y), z) ==
                  eng.multiply(x, eng.multiply(y, z)));
        }
    }
}

TEST_SUITE("normal form") {
    TEST_CASE("standard word counts match the PBW root count") {
        UqEngine eng2(builtin_datum("A", 2));
        // Rank two: dim at multidegree (a, b) is min(a, b) + 1.
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                if (a + b > 6) continue;
                CHECK(eng2.standard_words(KVec{a, b}).size() ==
                      static_cast<std::size_t>(std::min(a, b) + 1));
            }
        UqEngine eng3(builtin_datum("A", 3));
        CHECK(eng3.standard_words(KVec{1, 1, 1}).size() == 4);
        CHECK(eng3.standard_words(KVec{2, 1, 1}).size() == 4);
        CHECK(eng3.standard_words(KVec{1, 2, 1}).size() == 5);
        CHECK(eng3.standard_words(KVec{1, 0, 1}).size() == 1);
    }

    TEST_CASE("explicit rank-two reduction") {
        UqEngine eng(builtin_datum("A", 2));
        auto std21 = eng.standard_words(KVec{2, 1});
        REQUIRE(std21.size() == 2);
        CHECK(std21[0] == Word{0, 0, 1});
        CHECK(std21[1] == Word{0, 1, 0});
        auto red = eng.reduce_word(Word{1, 0, 0});
        REQUIRE(red.size() == 2);
        CHECK(red.at(Word{0, 0, 1}) == RatQ(-1));
        CHECK(red.at(Word{0, 1, 0}) == RatQ(q_int(2, 1)));
        // Standard words reduce to themselves.
        auto self = eng.reduce_word(Word{0, 1, 0});
        REQUIRE(self.size() == 1);
        CHECK(self.at(Word{0, 1, 0}) == RatQ(1));
    }

    TEST_CASE("multidegree bounds") {
        UqEngine eng(builtin_datum("A", 2), 3);
        CHECK_THROWS_AS(eng.standard_words(KVec{2, 2}), BoundError);
        CHECK_THROWS_AS(eng.multiply(eng.multiply({eng.F(0), eng.F(1)}),
                                     eng.multiply({eng.F(0), eng.F(1)})),
                        BoundError);
        CHECK_THROWS_AS(eng.standard_words(KVec{-1, 1}), InputError);
        CHECK_THROWS_AS(eng.standard_words(KVec{1}), InputError);
    }

    TEST_CASE("corrupted Serre coefficient changes the quotient") {
        UqEngine eng(builtin_datum("A", 2));
        eng.corrupt_serre_coefficient();
        UElement r = eng.multiply({eng.F(0), eng.F(0), eng.F(1)}) -
                     eng.multiply({eng.F(0), eng.F(1), eng.F(0)}) *
                         RatQ(q_int(2, 1)) +
                     eng.multiply({eng.F(1), eng.F(0), eng.F(0)});
        CHECK_FALSE(r.is_zero());
        CHECK_THROWS_AS(eng.corrupt_serre_coefficient(), InputError);
    }

    TEST_CASE("element rendering") {
        UqEngine eng(builtin_datum("A", 3));
        CHECK(eng.one().str() == "1");
        CHECK(eng.zero().str() == "0");
        UElement w = eng.multiply(
            {eng.F(0), eng.F(1), eng.K(KVec{1, 0, -1}), eng.E(1)});
        CHECK(w.str() == "F[1]*F[2]*K[1,0,-1]*E[2]");
        UElement x = eng.F(0) - eng.F(1) * qp(1);
        CHECK(x.str() == "-q*F[2] + F[1]");
        UElement y = eng.F(0) * RatQ(LaurentQ(-1), q_gap(1));
        CHECK(y.str() == "-(q)/(q^2 - 1)*F[1]");
    }
}

TEST_SUITE("Hopf structure") {
    TEST_CASE("coproduct and antipode of generators") {
        UqEngine eng(builtin_datum("A", 2));
        TensorElement dF;
        dF.add(NormalWord{{0}, {0, 0}, {}}, NormalWord{{}, {-1, 0}, {}}, RatQ(1));
        dF.add(NormalWord{{}, {0, 0}, {}}, NormalWord{{0}, {0, 0}, {}}, RatQ(1));
        CHECK(eng.coproduct(eng.F(0)) == dF);
        TensorElement dE;
        dE.add(NormalWord{{}, {0, 0}, {0}}, NormalWord{{}, {0, 0}, {}}, RatQ(1));
        dE.add(NormalWord{{}, {1, 0}, {}}, NormalWord{{}, {0, 0}, {0}}, RatQ(1));
        CHECK(eng.coproduct(eng.E(0)) == dE);
        KVec mu{2, -1};
        TensorElement dK;
        dK.add(NormalWord{{}, mu, {}}, NormalWord{{}, mu, {}}, RatQ(1));
        CHECK(eng.coproduct(eng.K(mu)) == dK);

        CHECK(eng.antipode(eng.F(0)) == -eng.multiply(eng.F(0), eng.H(0)));
        CHECK(eng.antipode(eng.E(0)) == -eng.multiply(eng.Hinv(0), eng.E(0)));
        CHECK(eng.antipode(eng.K(mu)) == eng.K(KVec{-2, 1}));
        CHECK(eng.counit(eng.F(0)).is_zero());
        CHECK(eng.counit(eng.E(0)).is_zero());
        CHECK(eng.counit(eng.K(mu)) == RatQ(1));
    }

    TEST_CASE("coproduct of F times H") {
        UqEngine eng(builtin_datum("A", 1));
        UElement fh = eng.multiply(eng.F(0), eng.H(0));
        TensorElement expect;
        expect.add(NormalWord{{0}, {1}, {}}, NormalWord{{}, {0}, {}}, RatQ(1));
        expect.add(NormalWord{{}, {1}, {}}, NormalWord{{0}, {1}, {}}, RatQ(1));
        CHECK(eng.coproduct(fh) == expect);
    }

    TEST_CASE("coassociativity on sampled elements") {
        UqEngine eng(builtin_datum("A", 2));
        std::mt19937 rng(777);
        for (int rep = 0; rep < 8; ++rep) {
            UElement x = random_element(eng, rng);
            Tensor3 lhs, rhs;
            const TensorElement dx = eng.coproduct(x);
            for (const auto& [p, c] : dx.terms()) {
                const TensorElement d1 = eng.coproduct(elem(eng, p.first));
                for (const auto& [p2, c2] : d1.terms())
                    t3_add(lhs, p2.first, p2.second, p.second, c * c2);
                const TensorElement d2 = eng.coproduct(elem(eng, p.second));
                for (const auto& [p2, c2] : d2.terms())
                    t3_add(rhs, p.first, p2.first, p2.second, c * c2);
            }
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("counit and antipode axioms on sampled elements") {
        UqEngine eng(builtin_datum("A", 2));
        std::mt19937 rng(4242);
        for (int rep = 0; rep < 8; ++rep) {
            UElement x = random_element(eng, rng);
            UElement left, right, sleft, sright;
            const TensorElement dx = eng.coproduct(x);
            for (const auto& [p, c] : dx.terms()) {
                left += elem(eng, p.second) * (c * eng.counit(elem(eng, p.first)));
                right += elem(eng, p.first) * (c * eng.counit(elem(eng, p.second)));
                sleft += eng.multiply(eng.antipode(elem(eng, p.first)),
                                      elem(eng, p.second)) * c;
                sright += eng.multiply(elem(eng, p.first),
                                       eng.antipode(elem(eng, p.second))) * c;
            }
            CHECK(left == x);
            CHECK(right == x);
            CHECK(sleft == eng.one() * eng.counit(x));
            CHECK(sright == eng.one() * eng.counit(x));
        }
    }

    TEST_CASE("coproduct and counit are algebra maps, antipode reverses") {
        UqEngine eng(builtin_datum("A", 2));
        std::mt19937 rng(99);
        for (int rep = 0; rep < 8; ++rep) {
            UElement x = random_element(eng, rng);
            UElement y = random_element(eng, rng);
            CHECK(eng.coproduct(eng.multiply(x, y)) ==
                  eng.tensor_multiply(eng.coproduct(x), eng.coproduct(y)));
            CHECK(eng.counit(eng.multiply(x, y)) ==
                  eng.counit(x) * eng.counit(y));
            CHECK(eng.antipode(eng.multiply(x, y)) ==
                  eng.multiply(eng.antipode(y), eng.antipode(x)));
        }
    }

    TEST_CASE("antipode squared is conjugation by the K part") {
        UqEngine eng(builtin_datum("A", 2));
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(eng.antipode(eng.antipode(eng.F(i))) ==
                  eng.F(i) * qp(2 * eng.datum().c(i)));
            CHECK(eng.antipode(eng.antipode(eng.E(i))) ==
                  eng.E(i) * qp(-2 * eng.datum().c(i)));
        }
    }

    TEST_CASE("adjoint action formulas") {
        UqEngine eng(builtin_datum("A", 3));
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> kv(-2, 2);
        for (int rep = 0; rep < 6; ++rep) {
            UElement v = random_element(eng, rng);
            KVec mu(3);
            for (auto& t : mu) t = kv(rng);
            // Ad_K is conjugation.
            CHECK(eng.adjoint(eng.K(mu), v) ==
                  eng.multiply({eng.K(mu), v,
                                eng.K(KVec{-mu[0], -mu[1], -mu[2]})}));
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(eng.adjoint(eng.F(i), v) ==
                      eng.multiply({eng.F(i), v, eng.H(i)}) -
                          eng.multiply({v, eng.F(i), eng.H(i)}));
                CHECK(eng.adjoint(eng.E(i), v) ==
                      eng.multiply(eng.E(i), v) -
                          eng.multiply({eng.H(i), v, eng.Hinv(i), eng.E(i)}));
            }
        }
        // Ad of K on a weight vector is a q-power scaling.
        KVec mu{1, -1, 2};
        CHECK(eng.adjoint(eng.K(mu), eng.F(1)) ==
              eng.F(1) * qp(-eng.k_exponent(mu, 1)));
        // Ad_u(1) = counit(u) 1.
        for (int rep = 0; rep < 4; ++rep) {
            UElement u = random_element(eng, rng);
            CHECK(eng.adjoint(u, eng.one()) == eng.one() * eng.counit(u));
        }
        // Ad is multiplicative in the acting variable.
        for (int rep = 0; rep < 4; ++rep) {
            UElement u = random_element(eng, rng, 1);
            UElement w = random_element(eng, rng, 1);
            UElement v = random_element(eng, rng, 1);
            CHECK(eng.adjoint(eng.multiply(u, w), v) ==
                  eng.adjoint(u, eng.adjoint(w, v)));
        }
    }

    TEST_CASE("weights") {
        UqEngine eng(builtin_datum("A", 3));
        CHECK(eng.weight(eng.K(KVec{3, -1, 0})) == KVec{0, 0, 0});
        CHECK(eng.weight(eng.zero()) == KVec{0, 0, 0});
        UElement b1 = eng.multiply(eng.F(2), eng.H(2));
        CHECK(eng.weight(b1) == KVec{0, 0, -1});
        CHECK_FALSE(eng.weight(eng.F(0) + eng.F(1)).has_value());
        UElement fe = eng.multiply(eng.F(0), eng.E(1));
        CHECK(eng.weight(fe) == KVec{-1, 1, 0});
        // Additive on products of weight vectors.
        UElement x = eng.multiply(eng.F(0), eng.F(1));
        UElement y = eng.multiply(eng.E(2), eng.K(KVec{1, 0, 0}));
        auto wx = eng.weight(x), wy = eng.weight(y);
        REQUIRE(wx.has_value());
        REQUIRE(wy.has_value());
        KVec sum(3);
        for (int i = 0; i < 3; ++i) sum[i] = (*wx)[i] + (*wy)[i];
        CHECK(eng.weight(eng.multiply(x, y)) == sum);
    }
}

TEST_SUITE("Borel pairing") {
    TEST_CASE("generator values") {
        UqEngine eng(builtin_datum("A", 2));
        // <K_mu, K_nu> = q^{mu^T C nu}
        KVec e1{1, 0}, e2{0, 1};
        CHECK(eng.pair_borel(eng.K(e1), eng.K(e2)) == qp(-1));
        CHECK(eng.pair_borel(eng.K(e1), eng.K(e1)) == qp(2));
        CHECK(eng.pair_borel(eng.K(KVec{1, 1}), eng.K(KVec{1, 1})) == qp(2));
        // <F_i, F_j K_nu> = -delta_ij / (q_i - q_i^{-1}), independent of nu.
        RatQ gap = RatQ(LaurentQ(-1), q_gap(1));
        CHECK(eng.pair_borel(eng.F(0), eng.F(0)) == gap);
        CHECK(eng.pair_borel(eng.F(0), eng.multiply(eng.F(0), eng.K(e2))) == gap);
        CHECK(eng.pair_borel(eng.F(0), eng.F(1)).is_zero());
        CHECK(eng.pair_borel(eng.F(0), eng.K(e1)).is_zero());
        CHECK(eng.pair_borel(eng.K(e1), eng.F(0)).is_zero());
        // Canonical rendering of the diagonal value.
        CHECK(gap.str() == "(-q)/(q^2 - 1)");
    }

    TEST_CASE("two-letter values") {
        UqEngine eng(builtin_datum("A", 2));
        UElement f12 = eng.multiply(eng.F(0), eng.F(1));
        UElement f21 = eng.multiply(eng.F(1), eng.F(0));
        RatQ g2 = RatQ(LaurentQ(1), q_gap(1) * q_gap(1));
        CHECK(eng.pair_borel(f12, f21) == g2 * qp(-1));
        CHECK(eng.pair_borel(f21, f12) == g2 * qp(-1));
        CHECK(eng.pair_borel(f12, f12) == g2);
        CHECK(eng.pair_borel(f21, f21) == g2);
        CHECK(eng.pair_borel(f12, eng.multiply(eng.F(0), eng.F(0))).is_zero());
    }

    TEST_CASE("agrees with the coproduct-expansion evaluation") {
        UqEngine eng(builtin_datum("A", 2));
        std::mt19937 rng(31415);
        for (int rep = 0; rep < 10; ++rep) {
            UElement x = random_element(eng, rng, 2, false);
            UElement z = random_element(eng, rng, 2, false);
            CHECK(eng.pair_borel(x, z) == eng.pair_borel_alt(x, z));
        }
    }

    TEST_CASE("Hopf pairing laws") {
        UqEngine eng(builtin_datum("A", 2));
        std::mt19937 rng(2718);
        for (int rep = 0; rep < 6; ++rep) {
            UElement x = random_element(eng, rng, 2, false);
            UElement y = random_element(eng, rng, 1, false);
            UElement z = random_element(eng, rng, 1, false);
            // <x, yz> = sum <x_(2), y> <x_(1), z>
            RatQ lhs = eng.pair_borel(x, eng.multiply(y, z));
            RatQ rhs;
            const TensorElement dx = eng.coproduct(x);
            for (const auto& [p, c] : dx.terms())
                rhs += c * eng.pair_borel(elem(eng, p.second), y) *
                       eng.pair_borel(elem(eng, p.first), z);
            CHECK(lhs == rhs);
            // <xy, z> = sum <x, z_(2)> <y, z_(1)>
            RatQ lhs2 = eng.pair_borel(eng.multiply(x, y), z);
            RatQ rhs2;
            const TensorElement dz = eng.coproduct(z);
            for (const auto& [p, c] : dz.terms())
                rhs2 += c * eng.pair_borel(x, elem(eng, p.second)) *
                        eng.pair_borel(y, elem(eng, p.first));
            CHECK(lhs2 == rhs2);
        }
    }

    TEST_CASE("rejects arguments outside the F/K part") {
        UqEngine eng(builtin_datum("A", 2));
        CHECK_THROWS_AS(eng.pair_borel(eng.E(0), eng.F(0)), InputError);
        CHECK_THROWS_AS(eng.pair_borel(eng.F(0), eng.E(0)), InputError);
        CHECK_THROWS_AS(eng.pair_borel_alt(eng.E(0), eng.F(0)), InputError);
    }
}

TEST_SUITE("Borel slices") {
    TEST_CASE("windowed slices over the Levi embedding") {
        RootDatum a3 = builtin_datum("A", 3);
        UqEngine eng(a3);
        SubRootDatum s = levi_subdatum(a3, {0, 1});
        BorelSlice w1 = borel_slice(eng, s, 1, std::nullopt, 2, {});
        REQUIRE(w1.words.size() == 4);
        CHECK(w1.words[0] == NormalWord{{2}, {0, 0, 0}, {}});
        CHECK(w1.words[1] == NormalWord{{1, 2}, {0, 0, 0}, {}});
        CHECK(w1.words[2] == NormalWord{{2, 1}, {0, 0, 0}, {}});
        CHECK(w1.words[3] == NormalWord{{0, 2}, {0, 0, 0}, {}});

        // Weight pins the multidegree.
        BorelSlice pinned =
            borel_slice(eng, s, 1, KVec{0, -1, -1}, 99, {});
        REQUIRE(pinned.words.size() == 2);
        CHECK(pinned.words[0] == NormalWord{{1, 2}, {0, 0, 0}, {}});
        CHECK(pinned.words[1] == NormalWord{{2, 1}, {0, 0, 0}, {}});
        // A weight whose chi-degree disagrees gives the empty window.
        CHECK(borel_slice(eng, s, 2, KVec{0, -1, -1}, 99, {}).words.empty());
        CHECK(borel_slice(eng, s, 1, KVec{0, 1, -1}, 99, {}).words.empty());

        // The K box multiplies the word count.
        BorelSlice boxed = borel_slice(eng, s, 1, KVec{0, 0, -1}, 9,
                                       {KVec{0, 0, 0}, KVec{1, 1, 1}});
        REQUIRE(boxed.words.size() == 2);
        CHECK(boxed.words[0] == NormalWord{{2}, {0, 0, 0}, {}});
        CHECK(boxed.words[1] == NormalWord{{2}, {1, 1, 1}, {}});

        // Degree zero with no window is the lone empty word.
        BorelSlice z = borel_slice(eng, s, 0, std::nullopt, 0, {});
        REQUIRE(z.words.size() == 1);
        CHECK(z.words[0].is_one());
    }
}
