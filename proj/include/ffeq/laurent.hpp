#pragma once

#include <string>
#include <vector>

#include "ffeq/bigint.hpp"
#include "ffeq/rational.hpp"
#include "ffeq/torsion.hpp"

namespace ffeq {

// v_infty(f/g) = deg(g) - deg(f); the valuation at 1/t on F_q(t).
// Throws std::domain_error on zero (its valuation is +infinity).
int v_infty(const RationalFn& x);

// Truncated element of (1/t) F_q[[1/t]]: a[j] is the coefficient of
// (1/t)^{j+1}, known up to precision N = a.size(), i.e. modulo (1/t)^{N+1}.
struct LaurentTail {
    std::vector<FqElem> a;

    int precision() const { return static_cast<int>(a.size()); }
    FqElem coeff(int i) const {  // coefficient of (1/t)^i, 1-based
        return (i >= 1 && i <= precision()) ? a[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool operator==(const LaurentTail& o) const { return a == o.a; }
    bool operator!=(const LaurentTail& o) const { return !(*this == o); }
};

// The class of num/den in F_q((1/t)) / F_q[t]: long division drops the
// polynomial part and keeps the coefficients of (1/t)^1 .. (1/t)^N.
// Throws std::domain_error when den = 0.
LaurentTail sigma_expand(const Fq& F, const Poly& num, const Poly& den, int N);

// Coefficientwise sum at the minimum of the two precisions.
LaurentTail tail_add(const Fq& F, const LaurentTail& x, const LaurentTail& y);

std::string tail_to_string(const Fq& F, const LaurentTail& x);

// Point of G = ((1/t) F_q[[1/t]])^r; all coordinates share one precision.
struct GPoint {
    std::vector<LaurentTail> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    int precision() const { return coords.empty() ? 0 : coords[0].precision(); }
};

// Coordinate i is sigma_expand(b_i, b, N); deg(b_i) < deg(b) means the
// expansion already lies in (1/t) F_q[[1/t]].
GPoint torsion_to_G(const Fq& F, const TorsionPoint& x, int N);

// Cylinder ball: the set of points whose coordinate i agrees with the given
// center on the first n_i tail coefficients.  centers[i] lists those n_i
// coefficients (of (1/t)^1 .. (1/t)^{n_i}); n_i >= 1.  Haar mass q^{-sum n_i}.
struct Ball {
    std::vector<std::vector<FqElem>> centers;

    int rank() const { return static_cast<int>(centers.size()); }
    int radius(int i) const { return static_cast<int>(centers[static_cast<std::size_t>(i)].size()); }
    int sum_radii() const {
        int s = 0;
        for (const auto& c : centers) s += static_cast<int>(c.size());
        return s;
    }
    int max_radius() const {
        std::size_t m = 0;
        for (const auto& c : centers) m = std::max(m, c.size());
        return static_cast<int>(m);
    }

    bool operator==(const Ball& o) const { return centers == o.centers; }
    bool operator!=(const Ball& o) const { return !(*this == o); }
};

// Throws std::invalid_argument unless every radius is >= 1 and every center
// coefficient is an element code < q.
void validate_ball(const Fq& F, const Ball& ball);

// Exact membership by the degree test: for every coordinate,
// deg(t^{n_i} b_i - b a'_i) <= deg(b) - 1 with a'_i(t) = t^{n_i} a_i(1/t),
// equivalent to v_infty(b_i/b - a_i) >= n_i + 1.
bool ball_contains_exact(const Fq& F, const TorsionPoint& x, const Ball& ball);

// Membership by tail-prefix comparison.  Throws std::invalid_argument when
// the point's precision is below some radius.
bool ball_contains_tail(const GPoint& x, const Ball& ball);

// mu(U) = q^{-(n_1 + ... + n_r)} exactly.
BigRat haar(const Fq& F, const Ball& ball);

// All q^{sum n_i} balls with the given radii, in lexicographic center order
// (coordinate 1 most significant, within a coordinate the (1/t)^1
// coefficient most significant).  For fixed radii these partition G.
std::vector<Ball> balls_with_radii(const Fq& F, const std::vector<int>& radii);

// Every ball with r coordinates, all radii >= 1 and sum of radii <= max_sum,
// ordered by (radii vector, center) lexicographically.
std::vector<Ball> ball_family_sum_at_most(const Fq& F, int r, int max_sum);

// "n=<n_1,..,n_r>;c=<coeffs coordinate lists joined by '|', entries by ','>"
std::string ball_to_string(const Fq& F, const Ball& ball);
Ball ball_parse(const Fq& F, const std::string& text);

}  // namespace ffeq
