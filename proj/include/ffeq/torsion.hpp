#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffeq/poly.hpp"

namespace ffeq {

// Torsion point of exact order b in coordinates (b_1/b, ..., b_r/b):
// b monic of degree >= 1, deg(b_i) < deg(b), gcd(b_1, ..., b_r, b) = 1.
struct TorsionPoint {
    Poly b;
    std::vector<Poly> nums;

    int rank() const { return static_cast<int>(nums.size()); }

    bool operator==(const TorsionPoint& o) const { return b == o.b && nums == o.nums; }
    bool operator!=(const TorsionPoint& o) const { return !(*this == o); }
};

// Validates the exact-order invariants.  Throws std::invalid_argument.
TorsionPoint make_torsion_point(const Fq& F, const Poly& b, std::vector<Poly> nums);

// Exact order of a (possibly non-primitive) tuple: b / gcd(b_1,...,b_r,b).
Poly point_order(const Fq& F, const std::vector<Poly>& nums, const Poly& b);

// How much of the Galois image the model assumes.  `minimal` keeps exactly
// the guaranteed congruence subgroup, so orbits are single cosets modulo
// b' = gcd(b, P); `full` assumes the whole linear group, so orbits are all
// exact-order points.  The two bracket every admissible intermediate image.
enum class GaloisMode { minimal, full };

// The congruence datum (P_1, ..., P_l; m): P = (prod P_i)^m, L = deg P.
// An empty prime list means P = 1; minimal mode then coincides with full.
struct GaloisImageModel {
    std::vector<Poly> primes;
    int m = 1;
    GaloisMode mode = GaloisMode::full;
};

// Throws std::invalid_argument unless the primes are distinct monic
// irreducibles and m >= 1.
void validate_model(const Fq& F, const GaloisImageModel& model);

Poly model_P(const Fq& F, const GaloisImageModel& model);
int model_L(const Fq& F, const GaloisImageModel& model);

// b' = monic gcd(b, P); 1 when the prime list is empty.
Poly b_prime(const Fq& F, const Poly& b, const GaloisImageModel& model);

// Coordinatewise residue alpha_i = b_i mod b'.
std::vector<Poly> coset_of(const Fq& F, const TorsionPoint& x, const GaloisImageModel& model);

// A Galois orbit described by (order, coset modulus b', coset residue):
// the elements are the tuples (alpha_i + b' q_i)/b of exact order b, streamed
// lazily in lexicographic order of the q_i coefficient blocks (coordinate 1
// most significant).  Enumeration is a pure function of (descriptor,
// position), so disjoint index ranges can be scanned concurrently.
class Orbit {
public:
    static constexpr std::size_t kDefaultMaterializeCap = std::size_t(1) << 22;

    Orbit(Fq field, Poly order, int rank, Poly coset_modulus, std::vector<Poly> coset_residue,
          GaloisMode mode, std::optional<TorsionPoint> base);

    const Fq& field() const { return field_; }
    const Poly& order() const { return b_; }
    int rank() const { return rank_; }
    GaloisMode mode() const { return mode_; }
    const Poly& coset_modulus() const { return bp_; }
    const std::vector<Poly>& coset_residue() const { return alpha_; }
    const std::optional<TorsionPoint>& base() const { return base_; }

    // digit slots per coordinate: deg(b) - deg(b')
    int slots() const { return slots_; }

    // number of candidate positions, q^{r * slots}
    std::uint64_t index_space() const { return space_; }

    // the candidate tuple at a position, or nullopt when the gcd condition
    // fails (the position does not carry an exact-order point)
    std::optional<TorsionPoint> candidate(std::uint64_t pos) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t i = 0; i < space_; ++i)
            if (auto x = candidate(i)) fn(*x);
    }

    // Collects the elements; throws std::length_error past the cap, at which
    // point callers fall back to streaming via for_each.
    std::vector<TorsionPoint> materialize(std::size_t cap = kDefaultMaterializeCap) const;

    std::uint64_t brute_size() const;

private:
    Fq field_;
    Poly b_;
    int rank_;
    Poly bp_;
    std::vector<Poly> alpha_;
    GaloisMode mode_;
    std::optional<TorsionPoint> base_;
    int slots_ = 0;
    std::uint64_t space_ = 0;
};

// Orbit of x under the model: one coset in minimal mode, all exact-order-b
// points in full mode (or whenever b' = 1).
Orbit orbit(const Fq& F, const TorsionPoint& x, const GaloisImageModel& model);

// All exact-order-b points, streamed in deterministic lexicographic order.
// Throws std::invalid_argument for constant b or r < 1.
Orbit exact_order_points(const Fq& F, const Poly& b, int r);

// Distinct coset residues realized by exact-order-b points of the given
// rank, found by brute-force reduction of every point; sorted
// lexicographically coordinate by coordinate.
std::vector<std::vector<Poly>> realized_cosets(const Fq& F, const Poly& b, int r,
                                               const GaloisImageModel& model);

// "(<b_1>,...,<b_r>)/<b>" in the polynomial text format.
std::string torsion_point_to_string(const Fq& F, const TorsionPoint& x);
TorsionPoint torsion_point_parse(const Fq& F, const std::string& text);

// "P=<poly>,<poly>;m=<int>;mode=minimal|full"; P= part may be empty.
std::string model_to_string(const Fq& F, const GaloisImageModel& model);
GaloisImageModel model_parse(const Fq& F, const std::string& text);

}  // namespace ffeq
