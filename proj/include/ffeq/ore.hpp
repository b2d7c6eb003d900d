#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffeq/bigint.hpp"
#include "ffeq/rational.hpp"

namespace ffeq {

// Twisted polynomial over K = F_q(t): coefficient i belongs to tau^i, where
// tau is the q-power Frobenius.  Addition is coefficientwise; multiplication
// is composition, so tau * c = c^q * tau.
struct TauPoly {
    std::vector<RationalFn> c;

    TauPoly() = default;
    explicit TauPoly(std::vector<RationalFn> coeffs) : c(std::move(coeffs)) { normalize(); }

    static TauPoly zero() { return TauPoly{}; }
    static TauPoly one() { return TauPoly{{ratfn_one()}}; }

    bool is_zero() const { return c.empty(); }
    int deg_tau() const { return static_cast<int>(c.size()) - 1; }
    RationalFn coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)]
                                                          : RationalFn{};
    }

    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool operator==(const TauPoly& o) const { return c == o.c; }
    bool operator!=(const TauPoly& o) const { return !(*this == o); }
};

TauPoly tau_add(const Fq& F, const TauPoly& f, const TauPoly& g);
TauPoly tau_sub(const Fq& F, const TauPoly& f, const TauPoly& g);

// Composition product: (a tau^i)(b tau^j) = a * b^{q^i} * tau^{i+j}, the
// Frobenius power acting on b by t -> t^{q^i}.
TauPoly tau_mul(const Fq& F, const TauPoly& f, const TauPoly& g);

// "(<rationalfn>)*tau^i" terms joined by '+' (prime q only).
std::string tau_to_string(const Fq& F, const TauPoly& f);

// Drinfeld module of generic characteristic over K = F_q(t), given by the
// image of t.  The tau^0 coefficient of phi_t must be t itself and the
// tau-degree (the rank) must be at least 1.
struct DrinfeldModule {
    TauPoly phi_t;
    int rank = 0;

    // Unverified bookkeeping only: nothing here computes or checks it, but
    // callers may carry the hypothesis along with the module.
    std::optional<int> modular_transcendence_degree;
};

// Validates the shape of phi_t.  Throws std::invalid_argument otherwise.
DrinfeldModule make_drinfeld_module(const Fq& F, const TauPoly& phi_t);

// The Carlitz module phi_t = t + tau.
DrinfeldModule carlitz_module(const Fq& F);

// A rank-r module phi_t = t + tau + ... + tau^r (unit upper coefficients).
DrinfeldModule plain_module(const Fq& F, int rank);

// Ring-morphism image of a in K{tau}: Horner-free sum over monomials of a
// against the memoized ladder phi_{t^i} = phi_t * phi_{t^{i-1}}.
TauPoly phi_of(const Fq& F, const DrinfeldModule& m, const Poly& a);

// |phi[a]| = q^{r deg a}: phi_a is separable in generic characteristic since
// its tau^0 coefficient a is nonzero.  Throws std::domain_error on a = 0.
BigInt torsion_cardinality(const Fq& F, const DrinfeldModule& m, const Poly& a);

}  // namespace ffeq
