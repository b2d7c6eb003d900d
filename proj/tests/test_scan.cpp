#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffeq/counting.hpp"
#include "ffeq/scan.hpp"
#include "test_util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ffeq;
using namespace ffeq::testutil;

TEST_CASE("parallel kernel agrees with the serial reference") {
    SUBCASE("exhaustive grid: q in {2,3}, r in {1,2}, deg b <= 3, both modes") {
        for (std::uint32_t qv : {2u, 3u}) {
            Fq F(qv);
            const std::vector<GaloisImageModel> models = {
                GaloisImageModel{{}, 1, GaloisMode::minimal},
                GaloisImageModel{{Poly::t()}, 1, GaloisMode::minimal},
                GaloisImageModel{{Poly::t()}, 2, GaloisMode::minimal},
                GaloisImageModel{{Poly::t()}, 1, GaloisMode::full},
            };
            for (int r = 1; r <= 2; ++r) {
                const auto family = ball_family_sum_at_most(F, r, 3);
                for (const auto& model : models) {
                    for_all_monic(F, 1, 3, [&](const Poly& b) {
                        // scan the orbit of the first exact-order point
                        const auto first = exact_order_points(F, b, r).candidate(
                            b.deg() >= 1 ? 1 : 0);  // position 1 is (0,..,0,1)
                        REQUIRE(first.has_value());
                        const Orbit O = orbit(F, *first, model);
                        const ScanResult s = scan_orbit_serial(F, O, family);
                        const ScanResult p = scan_orbit_parallel(F, O, family);
                        CHECK(s == p);
                    });
                }
            }
        }
    }
    SUBCASE("empty ball family still counts the orbit") {
        Fq F(2);
        const Orbit O = exact_order_points(F, Poly::t_power(3), 2);
        const ScanResult s = scan_orbit_serial(F, O, {});
        const ScanResult p = scan_orbit_parallel(F, O, {});
        CHECK(s == p);
        CHECK(s.orbit_size == 48);  // q^6 (1 - q^{-2})
    }
    SUBCASE("thread count does not change the result") {
#ifdef _OPENMP
        Fq F(2);
        const Orbit O = exact_order_points(F, Poly::t_power(6), 2);
        const auto family = ball_family_sum_at_most(F, 2, 3);
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        const ScanResult one = scan_orbit_parallel(F, O, family);
        omp_set_num_threads(saved);
        const ScanResult many = scan_orbit_parallel(F, O, family);
        CHECK(one == many);
#endif
    }
}

TEST_CASE("scan counts match the closed forms") {
    Fq F(2);
    const auto family = ball_family_sum_at_most(F, 2, 2);
    SUBCASE("full orbit size: q^{r deg b} euler_product") {
        for_all_monic(F, 1, 4, [&](const Poly& b) {
            const Orbit O = exact_order_points(F, b, 2);
            const ScanResult p = scan_orbit_parallel(F, O, family);
            CHECK(BigRat(p.orbit_size) == BigRat(q_pow(F, 2 * b.deg())) * euler_product(F, b, 2));
        });
    }
    SUBCASE("per-coset size and certified in-ball bound in minimal mode") {
        const GaloisImageModel model{{Poly::t()}, 1, GaloisMode::minimal};
        for_all_monic(F, 1, 4, [&](const Poly& b) {
            exact_order_points(F, b, 2).for_each([&](const TorsionPoint& x) {
                const ScanResult p = scan_orbit_parallel(F, orbit(F, x, model), family);
                CHECK(BigRat(p.orbit_size) == orbit_size_closed(F, b, 2, model));
                for (std::size_t i = 0; i < family.size(); ++i) {
                    const BigRat gap = boost::multiprecision::abs(
                        BigRat(p.in_ball[i]) - ball_count_main_term(F, b, 2, model, family[i]));
                    CHECK(gap <= ball_count_error_bound(F, b, 2, model, family[i]));
                }
            });
        });
    }
    SUBCASE("rank mismatch between orbit and ball rejected") {
        const Orbit O = exact_order_points(F, Poly::t_power(2), 2);
        Ball bad;
        bad.centers = {{0}};
        CHECK_THROWS_AS(scan_orbit_parallel(F, O, {bad}), std::invalid_argument);
    }
}
