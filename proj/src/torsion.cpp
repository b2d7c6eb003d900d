#include "ffeq/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ffeq {

TorsionPoint make_torsion_point(const Fq& F, const Poly& b, std::vector<Poly> nums) {
    if (b.is_zero() || b.deg() < 1 || b.lead() != 1)
        throw std::invalid_argument("make_torsion_point: order must be monic of degree >= 1");
    if (nums.empty()) throw std::invalid_argument("make_torsion_point: rank must be >= 1");
    Poly g = b;
    for (const Poly& n : nums) {
        if (n.deg() >= b.deg())
            throw std::invalid_argument("make_torsion_point: deg(b_i) must be < deg(b)");
        if (!n.is_zero()) g = poly_gcd(F, g, n);
    }
    if (!g.is_one())
        throw std::invalid_argument("make_torsion_point: gcd(b_1,...,b_r,b) != 1 (not exact order)");
    return TorsionPoint{b, std::move(nums)};
}

Poly point_order(const Fq& F, const std::vector<Poly>& nums, const Poly& b) {
    if (b.is_zero() || b.deg() < 1 || b.lead() != 1)
        throw std::invalid_argument("point_order: order modulus must be monic of degree >= 1");
    Poly g = b;
    for (const Poly& n : nums)
        if (!n.is_zero()) g = poly_gcd(F, g, n);
    return poly_quo(F, b, g);
}

void validate_model(const Fq& F, const GaloisImageModel& model) {
    if (model.m < 1) throw std::invalid_argument("model: m must be >= 1");
    for (const Poly& P : model.primes) {
        if (P.is_zero() || P.lead() != 1 || !is_irreducible(F, P))
            throw std::invalid_argument("model: primes must be monic irreducible");
    }
    for (std::size_t i = 0; i < model.primes.size(); ++i)
        for (std::size_t j = i + 1; j < model.primes.size(); ++j)
            if (model.primes[i] == model.primes[j])
                throw std::invalid_argument("model: primes must be distinct");
}

Poly model_P(const Fq& F, const GaloisImageModel& model) {
    Poly prod = Poly::one();
    for (const Poly& P : model.primes) prod = poly_mul(F, prod, P);
    Poly out = Poly::one();
    for (int i = 0; i < model.m; ++i) out = poly_mul(F, out, prod);
    return out;
}

int model_L(const Fq& F, const GaloisImageModel& model) { return model_P(F, model).deg(); }

Poly b_prime(const Fq& F, const Poly& b, const GaloisImageModel& model) {
    if (model.primes.empty()) return Poly::one();
    return poly_gcd(F, b, model_P(F, model));
}

std::vector<Poly> coset_of(const Fq& F, const TorsionPoint& x, const GaloisImageModel& model) {
    const Poly bp = b_prime(F, x.b, model);
    std::vector<Poly> alpha;
    alpha.reserve(x.nums.size());
    for (const Poly& n : x.nums) alpha.push_back(poly_rem(F, n, bp));
    return alpha;
}

Orbit::Orbit(Fq field, Poly order, int rank, Poly coset_modulus, std::vector<Poly> coset_residue,
             GaloisMode mode, std::optional<TorsionPoint> base)
    : field_(std::move(field)),
      b_(std::move(order)),
      rank_(rank),
      bp_(std::move(coset_modulus)),
      alpha_(std::move(coset_residue)),
      mode_(mode),
      base_(std::move(base)) {
    slots_ = b_.deg() - bp_.deg();
    if (slots_ < 0) throw std::invalid_argument("Orbit: deg(b') exceeds deg(b)");
    const double bits = static_cast<double>(rank_) * slots_ * std::log2(static_cast<double>(field_.q()));
    if (bits > 62.0) throw std::overflow_error("Orbit: index space exceeds 2^62");
    space_ = 1;
    for (int i = 0; i < rank_ * slots_; ++i) space_ *= field_.q();
}

std::optional<TorsionPoint> Orbit::candidate(std::uint64_t pos) const {
    const Fq& F = field_;
    std::vector<Poly> nums(static_cast<std::size_t>(rank_));
    // coordinate r-1 occupies the least significant digit block
    for (int i = rank_ - 1; i >= 0; --i) {
        std::vector<FqElem> qcoeffs(static_cast<std::size_t>(slots_), 0);
        for (int d = 0; d < slots_; ++d) {
            qcoeffs[static_cast<std::size_t>(d)] = static_cast<FqElem>(pos % F.q());
            pos /= F.q();
        }
        Poly qi{std::move(qcoeffs)};
        Poly cand = bp_.is_one() ? std::move(qi)
                                 : poly_add(F, alpha_[static_cast<std::size_t>(i)],
                                            poly_mul(F, bp_, qi));
        nums[static_cast<std::size_t>(i)] = std::move(cand);
    }
    Poly g = b_;
    for (const Poly& n : nums) {
        if (!n.is_zero()) g = poly_gcd(F, g, n);
        if (g.is_one()) break;
    }
    if (!g.is_one()) return std::nullopt;
    return TorsionPoint{b_, std::move(nums)};
}

std::vector<TorsionPoint> Orbit::materialize(std::size_t cap) const {
    std::vector<TorsionPoint> out;
    for (std::uint64_t i = 0; i < space_; ++i) {
        if (auto x = candidate(i)) {
            if (out.size() >= cap)
                throw std::length_error("Orbit::materialize: orbit exceeds cap, use streaming");
            out.push_back(std::move(*x));
        }
    }
    return out;
}

std::uint64_t Orbit::brute_size() const {
    std::uint64_t n = 0;
    for_each([&n](const TorsionPoint&) { ++n; });
    return n;
}

Orbit orbit(const Fq& F, const TorsionPoint& x, const GaloisImageModel& model) {
    validate_model(F, model);
    make_torsion_point(F, x.b, x.nums);  // revalidate: x must have exact order b
    if (model.mode == GaloisMode::full) {
        return Orbit(F, x.b, x.rank(), Poly::one(),
                     std::vector<Poly>(static_cast<std::size_t>(x.rank())), GaloisMode::full, x);
    }
    return Orbit(F, x.b, x.rank(), b_prime(F, x.b, model), coset_of(F, x, model),
                 GaloisMode::minimal, x);
}

Orbit exact_order_points(const Fq& F, const Poly& b, int r) {
    if (b.is_zero() || b.deg() < 1 || b.lead() != 1)
        throw std::invalid_argument("exact_order_points: b must be monic of degree >= 1");
    if (r < 1) throw std::invalid_argument("exact_order_points: rank must be >= 1");
    return Orbit(F, b, r, Poly::one(), std::vector<Poly>(static_cast<std::size_t>(r)),
                 GaloisMode::full, std::nullopt);
}

std::vector<std::vector<Poly>> realized_cosets(const Fq& F, const Poly& b, int r,
                                               const GaloisImageModel& model) {
    const Poly bp = b_prime(F, b, model);
    if (bp.is_one())
        return {std::vector<Poly>(static_cast<std::size_t>(r), Poly::zero())};
    // brute force straight from the definition: reduce every exact-order point
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<Poly>> out;
    exact_order_points(F, b, r).for_each([&](const TorsionPoint& x) {
        std::vector<Poly> alpha;
        std::vector<std::uint64_t> key;
        alpha.reserve(x.nums.size());
        key.reserve(x.nums.size());
        for (const Poly& n : x.nums) {
            alpha.push_back(poly_rem(F, n, bp));
            key.push_back(poly_code(F, alpha.back()));
        }
        if (seen.insert(std::move(key)).second) out.push_back(std::move(alpha));
    });
    std::sort(out.begin(), out.end(), [](const std::vector<Poly>& a, const std::vector<Poly>& b2) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b2[i]) return poly_less(a[i], b2[i]);
        }
        return false;
    });
    return out;
}

std::string torsion_point_to_string(const Fq& F, const TorsionPoint& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.nums.size(); ++i) {
        if (i) out += ",";
        out += poly_to_string(F, x.nums[i]);
    }
    out += ")/" + poly_to_string(F, x.b);
    return out;
}

TorsionPoint torsion_point_parse(const Fq& F, const std::string& text) {
    const std::size_t open = text.find('(');
    const std::size_t close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("torsion_point_parse: expected \"(b_1,...,b_r)/<b>\"");
    const std::size_t slash = text.find('/', close);
    if (slash == std::string::npos)
        throw std::invalid_argument("torsion_point_parse: missing /<order>");
    std::vector<Poly> nums;
    std::string inner = text.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = inner.find(',', pos);
        nums.push_back(poly_parse(F, inner.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Poly b = poly_parse(F, text.substr(slash + 1));
    return make_torsion_point(F, b, std::move(nums));
}

std::string model_to_string(const Fq& F, const GaloisImageModel& model) {
    std::string out = "P=";
    for (std::size_t i = 0; i < model.primes.size(); ++i) {
        if (i) out += ",";
        out += poly_to_string(F, model.primes[i]);
    }
    out += ";m=" + std::to_string(model.m);
    out += ";mode=";
    out += model.mode == GaloisMode::minimal ? "minimal" : "full";
    return out;
}

GaloisImageModel model_parse(const Fq& F, const std::string& text) {
    GaloisImageModel model;
    model.mode = GaloisMode::minimal;
    std::size_t pos = 0;
    bool saw_p = false;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(pos, end - pos);
        if (part.rfind("P=", 0) == 0) {
            saw_p = true;
            std::string rest = part.substr(2);
            std::size_t p2 = 0;
            while (!rest.empty() && p2 <= rest.size()) {
                std::size_t comma = rest.find(',', p2);
                std::string piece = rest.substr(p2, comma - p2);
                if (!piece.empty()) model.primes.push_back(poly_parse(F, piece));
                if (comma == std::string::npos) break;
                p2 = comma + 1;
            }
        } else if (part.rfind("m=", 0) == 0) {
            model.m = std::stoi(part.substr(2));
        } else if (part.rfind("mode=", 0) == 0) {
            std::string mode = part.substr(5);
            if (mode == "minimal")
                model.mode = GaloisMode::minimal;
            else if (mode == "full")
                model.mode = GaloisMode::full;
            else
                throw std::invalid_argument("model_parse: unknown mode \"" + mode + "\"");
        } else if (!part.empty()) {
            throw std::invalid_argument("model_parse: unknown component \"" + part + "\"");
        }
        pos = end + 1;
    }
    if (!saw_p) throw std::invalid_argument("model_parse: missing P= component");
    validate_model(F, model);
    return model;
}

}  // namespace ffeq
