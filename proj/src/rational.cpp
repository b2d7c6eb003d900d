#include "ffeq/rational.hpp"

#include <stdexcept>

namespace ffeq {

RationalFn ratfn_make(const Fq& F, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("ratfn_make: zero denominator");
    if (num.is_zero()) return RationalFn{Poly::zero(), Poly::one()};
    Poly g = poly_gcd(F, num, den);
    Poly n = poly_quo(F, num, g);
    Poly d = poly_quo(F, den, g);
    const FqElem lead_inv = F.inv(d.lead());
    return RationalFn{poly_scale(F, n, lead_inv), poly_scale(F, d, lead_inv)};
}

RationalFn ratfn_t() { return ratfn_from_poly(Poly::t()); }
RationalFn ratfn_one() { return ratfn_from_poly(Poly::one()); }

RationalFn ratfn_add(const Fq& F, const RationalFn& a, const RationalFn& b) {
    const Poly num =
        poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    return ratfn_make(F, num, poly_mul(F, a.den, b.den));
}

RationalFn ratfn_neg(const Fq& F, const RationalFn& a) { return RationalFn{poly_neg(F, a.num), a.den}; }

RationalFn ratfn_sub(const Fq& F, const RationalFn& a, const RationalFn& b) {
    return ratfn_add(F, a, ratfn_neg(F, b));
}

RationalFn ratfn_mul(const Fq& F, const RationalFn& a, const RationalFn& b) {
    return ratfn_make(F, poly_mul(F, a.num, b.num), poly_mul(F, a.den, b.den));
}

RationalFn ratfn_div(const Fq& F, const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("ratfn_div: division by zero");
    return ratfn_make(F, poly_mul(F, a.num, b.den), poly_mul(F, a.den, b.num));
}

RationalFn ratfn_subst_tpow(const Fq& F, const RationalFn& a, std::uint64_t k) {
    if (a.is_zero()) return a;
    return ratfn_make(F, poly_subst_tpow(F, a.num, k), poly_subst_tpow(F, a.den, k));
}

std::string ratfn_to_string(const Fq& F, const RationalFn& a) {
    if (a.is_poly()) return poly_to_string(F, a.num);
    return poly_to_string(F, a.num) + "/" + poly_to_string(F, a.den);
}

RationalFn ratfn_parse(const Fq& F, const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return ratfn_from_poly(poly_parse(F, text));
    return ratfn_make(F, poly_parse(F, text.substr(0, slash)),
                      poly_parse(F, text.substr(slash + 1)));
}

}  // namespace ffeq
