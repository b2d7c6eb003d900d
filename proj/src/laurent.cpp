#include "ffeq/laurent.hpp"

#include <stdexcept>

namespace ffeq {

int v_infty(const RationalFn& x) {
    if (x.is_zero()) throw std::domain_error("v_infty: valuation of zero is +infinity");
    return x.den.deg() - x.num.deg();
}

LaurentTail sigma_expand(const Fq& F, const Poly& num, const Poly& den, int N) {
    if (den.is_zero()) throw std::domain_error("sigma_expand: zero denominator");
    if (N < 0) throw std::invalid_argument("sigma_expand: negative precision");
    LaurentTail out;
    out.a.assign(static_cast<std::size_t>(N), 0);
    if (num.is_zero() || N == 0) return out;
    // quotient of num * t^N by den carries the Laurent coefficients:
    // coefficient of t^{N-j} in the quotient is the coefficient of (1/t)^j
    Poly shifted = num;
    shifted.c.insert(shifted.c.begin(), static_cast<std::size_t>(N), 0);
    const Poly quo = poly_quo(F, shifted, den);
    for (int j = 1; j <= N; ++j) out.a[static_cast<std::size_t>(j - 1)] = quo.coeff(N - j);
    return out;
}

LaurentTail tail_add(const Fq& F, const LaurentTail& x, const LaurentTail& y) {
    LaurentTail out;
    out.a.resize(std::min(x.a.size(), y.a.size()));
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.add(x.a[i], y.a[i]);
    return out;
}

std::string tail_to_string(const Fq& F, const LaurentTail& x) {
    (void)F;
    std::string out;
    for (int i = 1; i <= x.precision(); ++i) {
        const FqElem c = x.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "/t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    out += "O(1/t^" + std::to_string(x.precision() + 1) + ")";
    return out;
}

GPoint torsion_to_G(const Fq& F, const TorsionPoint& x, int N) {
    GPoint out;
    out.coords.reserve(x.nums.size());
    for (const Poly& n : x.nums) out.coords.push_back(sigma_expand(F, n, x.b, N));
    return out;
}

void validate_ball(const Fq& F, const Ball& ball) {
    if (ball.centers.empty()) throw std::invalid_argument("ball: needs at least one coordinate");
    for (const auto& c : ball.centers) {
        if (c.empty()) throw std::invalid_argument("ball: every radius must be >= 1");
        for (FqElem e : c)
            if (e >= F.q()) throw std::invalid_argument("ball: center coefficient out of range");
    }
}

bool ball_contains_exact(const Fq& F, const TorsionPoint& x, const Ball& ball) {
    if (ball.rank() != x.rank())
        throw std::invalid_argument("ball_contains_exact: rank mismatch");
    for (int i = 0; i < ball.rank(); ++i) {
        const int n = ball.radius(i);
        // a'_i(t) = t^{n_i} a_i(1/t): center coefficient j lands on t^{n_i - j}
        std::vector<FqElem> ap(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= n; ++j)
            ap[static_cast<std::size_t>(n - j)] =
                ball.centers[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
        Poly aprime{std::move(ap)};
        Poly lhs = x.nums[static_cast<std::size_t>(i)];
        lhs.c.insert(lhs.c.begin(), static_cast<std::size_t>(n), 0);  // t^{n_i} b_i
        lhs.normalize();
        const Poly u = poly_sub(F, lhs, poly_mul(F, x.b, aprime));
        if (u.deg() > x.b.deg() - 1) return false;  // deg(0) = -1 sentinel passes
    }
    return true;
}

bool ball_contains_tail(const GPoint& x, const Ball& ball) {
    if (ball.rank() != x.rank())
        throw std::invalid_argument("ball_contains_tail: rank mismatch");
    for (int i = 0; i < ball.rank(); ++i) {
        const LaurentTail& tail = x.coords[static_cast<std::size_t>(i)];
        const int n = ball.radius(i);
        if (tail.precision() < n)
            throw std::invalid_argument("ball_contains_tail: insufficient tail precision");
        for (int j = 1; j <= n; ++j)
            if (tail.coeff(j) != ball.centers[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)])
                return false;
    }
    return true;
}

BigRat haar(const Fq& F, const Ball& ball) {
    validate_ball(F, ball);
    return q_pow_rat(F, -ball.sum_radii());
}

std::vector<Ball> balls_with_radii(const Fq& F, const std::vector<int>& radii) {
    std::size_t total = 0;
    for (int n : radii) {
        if (n < 1) throw std::invalid_argument("balls_with_radii: radii must be >= 1");
        total += static_cast<std::size_t>(n);
    }
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < total; ++i) {
        count *= F.q();
        if (count > (std::uint64_t(1) << 32))
            throw std::overflow_error("balls_with_radii: family too large");
    }
    std::vector<Ball> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        Ball ball;
        ball.centers.resize(radii.size());
        // coordinate 1, coefficient (1/t)^1 takes the most significant digit
        std::uint64_t rest = code;
        std::uint64_t place = count;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            auto& c = ball.centers[i];
            c.resize(static_cast<std::size_t>(radii[i]));
            for (int j = 0; j < radii[i]; ++j) {
                place /= F.q();
                c[static_cast<std::size_t>(j)] = static_cast<FqElem>(rest / place);
                rest %= place;
            }
        }
        out.push_back(std::move(ball));
    }
    return out;
}

namespace {

void radii_vectors(int r, int max_sum, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == r) {
        out.push_back(prefix);
        return;
    }
    const int used = [&] {
        int s = 0;
        for (int n : prefix) s += n;
        return s;
    }();
    const int slots_left = r - static_cast<int>(prefix.size());
    for (int n = 1; used + n + (slots_left - 1) <= max_sum; ++n) {
        prefix.push_back(n);
        radii_vectors(r, max_sum, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Ball> ball_family_sum_at_most(const Fq& F, int r, int max_sum) {
    if (r < 1 || max_sum < r)
        throw std::invalid_argument("ball_family_sum_at_most: need r >= 1 and max_sum >= r");
    std::vector<std::vector<int>> radii;
    std::vector<int> prefix;
    radii_vectors(r, max_sum, prefix, radii);
    std::vector<Ball> out;
    for (const auto& rv : radii) {
        auto balls = balls_with_radii(F, rv);
        out.insert(out.end(), std::make_move_iterator(balls.begin()),
                   std::make_move_iterator(balls.end()));
    }
    return out;
}

std::string ball_to_string(const Fq& F, const Ball& ball) {
    (void)F;
    std::string out = "n=";
    for (int i = 0; i < ball.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(ball.radius(i));
    }
    out += ";c=";
    for (int i = 0; i < ball.rank(); ++i) {
        if (i) out += "|";
        const auto& c = ball.centers[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(c[j]);
        }
    }
    return out;
}

Ball ball_parse(const Fq& F, const std::string& text) {
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("ball_parse: bad ball \"" + text + "\": " + why);
    };
    if (text.rfind("n=", 0) != 0) fail("expected n=...");
    const std::size_t semi = text.find(";c=");
    if (semi == std::string::npos) fail("expected ;c=...");
    std::vector<int> radii;
    {
        std::string rs = text.substr(2, semi - 2);
        std::size_t pos = 0;
        while (pos <= rs.size()) {
            std::size_t comma = rs.find(',', pos);
            radii.push_back(std::stoi(rs.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    Ball ball;
    ball.centers.resize(radii.size());
    {
        std::string cs = text.substr(semi + 3);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            std::size_t bar = cs.find('|', pos);
            std::string coord = cs.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
            std::size_t p2 = 0;
            auto& c = ball.centers[i];
            while (p2 <= coord.size() && !coord.empty()) {
                std::size_t comma = coord.find(',', p2);
                c.push_back(static_cast<FqElem>(std::stoul(coord.substr(p2, comma - p2))));
                if (comma == std::string::npos) break;
                p2 = comma + 1;
            }
            if (static_cast<int>(c.size()) != radii[i]) fail("center length does not match radius");
            if (i + 1 < radii.size()) {
                if (bar == std::string::npos) fail("missing coordinate list");
                pos = bar + 1;
            }
        }
    }
    validate_ball(F, ball);
    return ball;
}

}  // namespace ffeq
