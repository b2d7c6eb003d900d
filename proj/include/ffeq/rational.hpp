#pragma once

#include <string>

#include "ffeq/poly.hpp"

namespace ffeq {

// Element of F_q(t) in canonical form: monic nonzero denominator coprime to
// the numerator.  Construct through ratfn_make (or the helpers below) so the
// canonical form is the unique representative of the fraction.
struct RationalFn {
    Poly num;
    Poly den = Poly::one();

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.is_one(); }

    bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }
};

// Canonicalize num/den.  Throws std::domain_error when den = 0.
RationalFn ratfn_make(const Fq& F, const Poly& num, const Poly& den);

inline RationalFn ratfn_from_poly(const Poly& p) { return RationalFn{p, Poly::one()}; }
RationalFn ratfn_t();
RationalFn ratfn_one();

RationalFn ratfn_add(const Fq& F, const RationalFn& a, const RationalFn& b);
RationalFn ratfn_sub(const Fq& F, const RationalFn& a, const RationalFn& b);
RationalFn ratfn_neg(const Fq& F, const RationalFn& a);
RationalFn ratfn_mul(const Fq& F, const RationalFn& a, const RationalFn& b);
RationalFn ratfn_div(const Fq& F, const RationalFn& a, const RationalFn& b);

// t -> t^k in numerator and denominator, recanonicalized.  Because F_q
// coefficients are fixed by the Frobenius, this is exactly x -> x^{q^i}
// on F_q(t) when k = q^i.
RationalFn ratfn_subst_tpow(const Fq& F, const RationalFn& a, std::uint64_t k);

// "<num>/<den>", or just "<num>" when the denominator is 1 (prime q only).
std::string ratfn_to_string(const Fq& F, const RationalFn& a);
RationalFn ratfn_parse(const Fq& F, const std::string& text);

}  // namespace ffeq
