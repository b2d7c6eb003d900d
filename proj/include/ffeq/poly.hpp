#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffeq/fq.hpp"

namespace ffeq {

// Polynomial over F_q, coefficients stored low degree to high with no
// trailing zeros.  The zero polynomial is the empty sequence.
//
// deg() returns -1 for zero; that value stands for the -infinity sentinel:
// it compares below every true degree and is never serialized.  Operations
// that would feed it into arithmetic guard for zero first.
struct Poly {
    std::vector<FqElem> c;

    Poly() = default;
    explicit Poly(std::vector<FqElem> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{{1}}; }
    static Poly t() { return Poly{{0, 1}}; }
    static Poly t_power(int k) {
        std::vector<FqElem> v(static_cast<std::size_t>(k) + 1, 0);
        v.back() = 1;
        return Poly{std::move(v)};
    }
    static Poly constant(FqElem a) { return a == 0 ? Poly{} : Poly{{a}}; }

    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    FqElem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : 0;
    }
    FqElem lead() const { return c.empty() ? 0 : c.back(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
};

// Deterministic order: by degree, then by coefficients compared from the
// highest degree down (zero sorts first overall).
bool poly_less(const Poly& a, const Poly& b);

Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_neg(const Fq& F, const Poly& a);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, const Poly& a, FqElem s);

// a = quotient*b + remainder with deg(remainder) < deg(b).
// Throws std::domain_error when b = 0.
std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_quo(const Fq& F, const Poly& a, const Poly& b);
Poly poly_rem(const Fq& F, const Poly& a, const Poly& b);

Poly make_monic(const Fq& F, const Poly& a);

// Monic gcd.  Throws std::domain_error when both arguments are zero.
Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b);

// Largest monic divisor of a coprime to d (strips shared prime factors).
Poly coprime_part(const Fq& F, const Poly& a, const Poly& d);

// f(t^k); the q^i-power Frobenius on F_q(t) acts this way on polynomials
// because coefficients in F_q are fixed by x -> x^q.
Poly poly_subst_tpow(const Fq& F, const Poly& f, std::uint64_t k);

// f ordered factorization into monic irreducibles: unit * prod c_i^{e_i} = f,
// factors sorted by (degree, lexicographic coefficients).
struct Factorization {
    FqElem unit = 1;
    std::vector<std::pair<Poly, int>> factors;
};

// True iff f is a non-constant polynomial with no monic divisor of degree
// strictly between 0 and deg(f).  Constants are units, never irreducible.
// Throws std::domain_error on zero input.
bool is_irreducible(const Fq& F, const Poly& f);

// Deterministic trial division against the cached irreducible table by
// increasing degree; intended for deg(f) up to ~16 at desk-scale q.
// Throws std::domain_error on zero or constant input.
Factorization factor(const Fq& F, const Poly& f);

// All monic divisors of f, each once, ordered by (degree, lex coefficients).
// Throws std::domain_error on zero input.
std::vector<Poly> monic_divisors(const Fq& F, const Poly& f);

// Polynomial Moebius function: 1 on constants, (-1)^n on products of n
// distinct monic irreducibles, 0 on non-squarefree inputs.  Non-monic input
// is normalized to monic first.  Throws std::domain_error on zero.
int moebius(const Fq& F, const Poly& f);

// Monic irreducibles of exactly degree d in lexicographic order, served from
// a per-field cache.  The cache is grown under a lock; precompute before
// entering parallel sections or rely on the single-writer contract.
const std::vector<Poly>& irreducibles_of_degree(const Fq& F, int d);
Poly first_irreducible_of_degree(const Fq& F, int d);

// Enumeration encoding: code = sum c[i] q^i over i < width, so ascending
// codes of fixed width enumerate polynomials of degree < width in the
// (degree-last coefficient first) lexicographic order used everywhere here.
std::uint64_t poly_code(const Fq& F, const Poly& a);
Poly poly_from_code(const Fq& F, std::uint64_t code);

// Text format, prime q only: terms "c*t^k" joined by '+', highest degree
// first, coefficients 0..p-1, zero written "0" (e.g. "t^3+2*t+1" over F_3).
// Throws std::invalid_argument for non-prime q or malformed text.
std::string poly_to_string(const Fq& F, const Poly& a);
Poly poly_parse(const Fq& F, const std::string& text);

}  // namespace ffeq
