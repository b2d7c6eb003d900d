#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffeq/ore.hpp"
#include "test_util.hpp"

using namespace ffeq;
using namespace ffeq::testutil;

namespace {

TauPoly tau_monomial(const RationalFn& c, int i) {
    std::vector<RationalFn> v(static_cast<std::size_t>(i) + 1);
    v.back() = c;
    return TauPoly{std::move(v)};
}

}  // namespace

TEST_CASE("tau_mul") {
    SUBCASE("single twist rule: tau * (t tau^0) = t^q tau") {
        for (std::uint32_t qv : {2u, 3u, 5u}) {
            Fq F(qv);
            const TauPoly lhs = tau_mul(F, tau_monomial(ratfn_one(), 1), tau_monomial(ratfn_t(), 0));
            CHECK(lhs == tau_monomial(ratfn_from_poly(Poly::t_power(static_cast<int>(qv))), 1));
        }
    }
    SUBCASE("(t + tau)^2 = t^2 + (t + t^q) tau + tau^2") {
        for (std::uint32_t qv : {2u, 3u}) {
            Fq F(qv);
            const TauPoly f{{ratfn_t(), ratfn_one()}};
            const TauPoly sq = tau_mul(F, f, f);
            REQUIRE(sq.deg_tau() == 2);
            CHECK(sq.coeff(0) == ratfn_from_poly(Poly::t_power(2)));
            CHECK(sq.coeff(1) ==
                  ratfn_from_poly(poly_add(F, Poly::t(), Poly::t_power(static_cast<int>(qv)))));
            CHECK(sq.coeff(2) == ratfn_one());
        }
    }
    SUBCASE("identity") {
        Fq F(3);
        const TauPoly f{{ratfn_t(), ratfn_from_poly(P(F, "t^2+2")), ratfn_one()}};
        CHECK(tau_mul(F, f, TauPoly::one()) == f);
        CHECK(tau_mul(F, TauPoly::one(), f) == f);
    }
    SUBCASE("rational-coefficient path agrees with polynomial fast path") {
        Fq F(2);
        const TauPoly f{{ratfn_t(), ratfn_one()}};
        // divide all coefficients by (t+1), multiply the product back
        const RationalFn s = ratfn_make(F, Poly::one(), P(F, "t+1"));
        TauPoly fs = f;
        for (auto& c : fs.c) c = ratfn_mul(F, c, s);
        const TauPoly direct = tau_mul(F, f, f);
        TauPoly scaled = tau_mul(F, fs, f);
        for (auto& c : scaled.c) c = ratfn_mul(F, c, ratfn_from_poly(P(F, "t+1")));
        CHECK(scaled == direct);
    }
}

TEST_CASE("DrinfeldModule construction") {
    Fq F(2);
    SUBCASE("validation") {
        CHECK_THROWS_AS(make_drinfeld_module(F, TauPoly{{ratfn_t()}}), std::invalid_argument);
        CHECK_THROWS_AS(make_drinfeld_module(F, TauPoly{{ratfn_one(), ratfn_one()}}),
                        std::invalid_argument);
        CHECK(carlitz_module(F).rank == 1);
        CHECK(plain_module(F, 2).rank == 2);
    }
    SUBCASE("metadata stays unverified and optional") {
        DrinfeldModule m = plain_module(F, 2);
        CHECK_FALSE(m.modular_transcendence_degree.has_value());
        m.modular_transcendence_degree = 2;
        CHECK(m.rank == 2);
    }
}

TEST_CASE("phi_of") {
    SUBCASE("generator and unit") {
        Fq F(3);
        const DrinfeldModule m = plain_module(F, 2);
        CHECK(phi_of(F, m, Poly::t()) == m.phi_t);
        CHECK(phi_of(F, m, Poly::one()) == TauPoly::one());
        CHECK(phi_of(F, m, Poly::zero()).is_zero());
    }
    SUBCASE("Carlitz at t^2") {
        for (std::uint32_t qv : {2u, 3u}) {
            Fq F(qv);
            const DrinfeldModule m = carlitz_module(F);
            const TauPoly img = phi_of(F, m, Poly::t_power(2));
            REQUIRE(img.deg_tau() == 2);
            CHECK(img.coeff(0) == ratfn_from_poly(Poly::t_power(2)));
            CHECK(img.coeff(1) ==
                  ratfn_from_poly(poly_add(F, Poly::t(), Poly::t_power(static_cast<int>(qv)))));
            CHECK(img.coeff(2) == ratfn_one());
        }
    }
    SUBCASE("morphism laws, exhaustive a,b of deg <= 2 for q in {2,3}, r in {1,2}") {
        for (std::uint32_t qv : {2u, 3u}) {
            Fq F(qv);
            for (int r = 1; r <= 2; ++r) {
                const DrinfeldModule m = plain_module(F, r);
                std::uint64_t count = 1;
                for (int i = 0; i < 3; ++i) count *= F.q();
                for (std::uint64_t ca = 0; ca < count; ++ca) {
                    const Poly a = poly_of_width(F, 3, ca);
                    const TauPoly pa = phi_of(F, m, a);
                    if (!a.is_zero()) {
                        CHECK(pa.deg_tau() == r * a.deg());     // degree law
                        CHECK(pa.coeff(0) == ratfn_from_poly(a));  // constant-term law
                    }
                    for (std::uint64_t cb = 0; cb < count; ++cb) {
                        const Poly b = poly_of_width(F, 3, cb);
                        const TauPoly pb = phi_of(F, m, b);
                        CHECK(tau_add(F, pa, pb) == phi_of(F, m, poly_add(F, a, b)));
                        const TauPoly prod = tau_mul(F, pa, pb);
                        CHECK(prod == phi_of(F, m, poly_mul(F, a, b)));
                        CHECK(prod == tau_mul(F, pb, pa));  // commutative image
                    }
                }
            }
        }
    }
}

TEST_CASE("torsion_cardinality") {
    Fq F2(2);
    SUBCASE("examples") {
        CHECK(torsion_cardinality(F2, carlitz_module(F2), Poly::t()) == 2);
        CHECK(torsion_cardinality(F2, plain_module(F2, 2), P(F2, "t^3+t+1")) == 64);
        CHECK(torsion_cardinality(F2, plain_module(F2, 2), Poly::one()) == 1);
        CHECK_THROWS_AS(torsion_cardinality(F2, carlitz_module(F2), Poly::zero()),
                        std::domain_error);
    }
    SUBCASE("matches q^(r deg a)") {
        Fq F3(3);
        for (int r = 1; r <= 3; ++r)
            for (int d = 1; d <= 4; ++d)
                CHECK(torsion_cardinality(F3, plain_module(F3, r), Poly::t_power(d)) ==
                      q_pow(F3, r * d));
    }
}
