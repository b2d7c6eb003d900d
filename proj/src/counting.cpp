#include "ffeq/counting.hpp"

#include <stdexcept>

namespace ffeq {

BigRat euler_product(const Fq& F, const Poly& b0, int r) {
    if (b0.is_zero()) throw std::domain_error("euler_product: zero input");
    if (r < 1) throw std::domain_error("euler_product: rank must be >= 1");
    BigRat out = 1;
    if (b0.deg() == 0) return out;
    for (const auto& [c, e] : factor(F, b0).factors)
        out *= BigRat(1) - q_pow_rat(F, -r * c.deg());
    return out;
}

BigRat orbit_size_closed(const Fq& F, const Poly& b, int r, const GaloisImageModel& model) {
    if (b.is_zero() || b.deg() < 1 || b.lead() != 1)
        throw std::domain_error("orbit_size_closed: b must be monic of degree >= 1");
    if (r < 1) throw std::domain_error("orbit_size_closed: rank must be >= 1");
    const Poly bp = b_prime(F, b, model);
    BigRat sum = 0;
    for (const Poly& d : monic_divisors(F, b)) {
        if (d.deg() >= 1 && !poly_gcd(F, d, bp).is_one()) continue;
        const int mu = moebius(F, d);
        if (mu == 0) continue;
        sum += mu * q_pow_rat(F, r * (b.deg() - bp.deg() - d.deg()));
    }
    return sum;
}

BigRat ball_count_main_term(const Fq& F, const Poly& b, int r, const GaloisImageModel& model,
                            const Ball& ball) {
    return orbit_size_closed(F, b, r, model) * haar(F, ball);
}

BigRat ball_count_error_bound(const Fq& F, const Poly& b, int r, const GaloisImageModel& model,
                              const Ball& ball) {
    validate_ball(F, ball);
    const Poly bp = b_prime(F, b, model);
    const int L = model_L(F, model);
    const int n0 = ball.max_radius() + 1;
    BigInt above_split = 0;
    for (const Poly& d : monic_divisors(F, b)) {
        if (d.deg() >= 1 && !poly_gcd(F, d, bp).is_one()) continue;
        if (d.deg() > b.deg() - L - n0) ++above_split;
    }
    return BigRat(2 * above_split * q_pow(F, r * (L + n0)));
}

LowerBoundCheck lower_bound_check(const Fq& F, const Poly& b, int r) {
    if (r < 2) throw std::domain_error("lower_bound_check: the inequality requires r >= 2");
    if (b.is_zero() || b.deg() < 1 || b.lead() != 1)
        throw std::domain_error("lower_bound_check: b must be monic of degree >= 1");
    LowerBoundCheck out;
    out.value = 1;
    for (const auto& [c, e] : factor(F, b).factors) {
        out.value *= q_pow(F, r * (e - 1) * c.deg());
        out.value *= q_pow(F, r * c.deg()) - 1;
    }
    out.value_squared = out.value * out.value;
    out.threshold_squared = q_pow(F, r * b.deg());
    out.holds = out.value_squared >= out.threshold_squared;
    return out;
}

}  // namespace ffeq
