#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace ffeq {

// Element of F_q in the fixed F_p-basis determined by the field's modulus,
// encoded as sum digit_i * p^i where digit_i is the coefficient of x^i.
// For a prime field this is just the residue 0..p-1.
using FqElem = std::uint32_t;

namespace detail {
struct FqTables;
}

// The finite field F_q, q = p^e.  For e > 1 elements live in
// F_p[x]/(modulus) where the modulus is the lexicographically smallest monic
// irreducible of degree e over F_p (highest-degree coefficient compared
// first), so encodings are identical across runs and machines.
//
// Copies share immutable internal tables; all operations are const and safe
// to call concurrently.
class Fq {
public:
    explicit Fq(std::uint32_t p, std::uint32_t e = 1);

    std::uint32_t p() const { return p_; }
    std::uint32_t ext_degree() const { return e_; }
    std::uint32_t q() const { return q_; }
    bool prime_field() const { return e_ == 1; }

    // F_p coefficients of the modulus, low degree first, size e+1.
    // Empty for e = 1 (the representation map is the identity).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;  // throws std::domain_error on 0
    FqElem div(FqElem a, FqElem b) const;
    FqElem pow(FqElem a, std::uint64_t k) const;

    // Residue of an integer in the prime subfield.
    FqElem from_int(std::int64_t v) const;

    bool operator==(const Fq& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

private:
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const detail::FqTables> tables_;  // e > 1 only
};

}  // namespace ffeq
