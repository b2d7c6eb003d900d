#pragma once

#include <optional>
#include <string>

#include "ffeq/bigint.hpp"
#include "ffeq/laurent.hpp"
#include "ffeq/torsion.hpp"

namespace ffeq {

// prod over distinct monic irreducible c | b0 of (1 - q^{-r deg c}),
// which equals sum over monic d | b0 of mu(d) q^{-r deg d}.
// Throws std::domain_error when b0 = 0; constants give the empty product 1.
BigRat euler_product(const Fq& F, const Poly& b0, int r);

// Per-coset orbit cardinality in minimal mode (independent of the coset):
// q^{r(deg b - deg b')} * sum_{d | b, (d, b') = 1} mu(d) q^{-r deg d}.
// Integer-valued.  Only the model's congruence datum P enters, not its mode;
// pass an empty model for the full bracket.
BigRat orbit_size_closed(const Fq& F, const Poly& b, int r, const GaloisImageModel& model);

// Main term of the per-coset count of orbit elements inside the ball:
// orbit_size_closed * haar(ball).
BigRat ball_count_main_term(const Fq& F, const Poly& b, int r, const GaloisImageModel& model,
                            const Ball& ball);

// Certified bound on |exact per-coset in-ball count - main term|:
// 2 D q^{r(L + n_0)} with n_0 = max(n_i) + 1, L = deg P and
// D = #{monic d | b : (d, b') = 1, deg d > deg b - L - n_0}.
// Each divisor past the degree split contributes at most q^{r(L+n_0)} to the
// exact count and at most as much to the discarded main-term piece.
BigRat ball_count_error_bound(const Fq& F, const Poly& b, int r, const GaloisImageModel& model,
                              const Ball& ball);

// The factorization-driven lower bound for r >= 2:
//   value = prod q^{r(e_i - 1) deg c_i} (q^{r deg c_i} - 1)  over b = prod c_i^{e_i}
// compared against q^{r deg b / 2}.  The fractional exponent is never formed:
// holds <=> value^2 >= q^{r deg b}, checked in exact integers.
struct LowerBoundCheck {
    BigInt value;
    BigInt value_squared;
    BigInt threshold_squared;  // q^{r deg b}
    bool holds = false;
};

// Throws std::domain_error when r < 2 or b is not monic of degree >= 1.
LowerBoundCheck lower_bound_check(const Fq& F, const Poly& b, int r);

// One closed-form evaluation next to its brute-force witness.
struct CountReport {
    BigRat closed_form;
    std::optional<BigInt> brute_force;
    std::optional<BigRat> error_bound;
    std::string inputs;  // echo of (b, r, model, ball)

    // exact equality without an error bound, certified inequality with one
    bool consistent() const {
        if (!brute_force) return true;
        const BigRat diff = closed_form - BigRat(*brute_force);
        if (!error_bound) return diff == 0;
        return boost::multiprecision::abs(diff) <= *error_bound;
    }
};

}  // namespace ffeq
