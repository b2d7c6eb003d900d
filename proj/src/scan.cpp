#include "ffeq/scan.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffeq {

namespace {

void check_family(const Fq& F, const Orbit& orbit, const std::vector<Ball>& balls) {
    for (const Ball& ball : balls) {
        validate_ball(F, ball);
        if (ball.rank() != orbit.rank())
            throw std::invalid_argument("scan: ball rank does not match orbit rank");
    }
}

// in-place remainder: u := u mod v, returns the new degree of u (-1 for zero)
int array_mod(const Fq& F, FqElem* u, int du, const FqElem* v, int dv) {
    const FqElem lead_inv = F.inv(v[dv]);
    for (int i = du; i >= dv; --i) {
        const FqElem c = u[i];
        if (c == 0) continue;
        const FqElem f = F.mul(c, lead_inv);
        u[i] = 0;
        for (int j = 0; j < dv; ++j) u[i - dv + j] = F.sub(u[i - dv + j], F.mul(f, v[j]));
    }
    for (int i = dv - 1; i >= 0; --i)
        if (u[i]) return i;
    return -1;
}

}  // namespace

ScanResult scan_orbit_serial(const Fq& F, const Orbit& orbit, const std::vector<Ball>& balls) {
    check_family(F, orbit, balls);
    int depth = 0;
    for (const Ball& ball : balls) depth = std::max(depth, ball.max_radius());
    ScanResult out;
    out.in_ball.assign(balls.size(), 0);
    orbit.for_each([&](const TorsionPoint& x) {
        ++out.orbit_size;
        const GPoint g = torsion_to_G(F, x, depth);
        for (std::size_t bi = 0; bi < balls.size(); ++bi)
            if (ball_contains_tail(g, balls[bi])) ++out.in_ball[bi];
    });
    return out;
}

ScanResult scan_orbit_parallel(const Fq& F, const Orbit& orbit, const std::vector<Ball>& balls) {
    check_family(F, orbit, balls);

    const int r = orbit.rank();
    const int D = orbit.order().deg();
    const int k = orbit.slots();
    const std::uint32_t q = F.q();
    const bool plain = orbit.coset_modulus().is_one();
    const int Dp = orbit.coset_modulus().deg();

    std::vector<FqElem> bco(static_cast<std::size_t>(D) + 1, 0);
    for (int i = 0; i <= D; ++i) bco[static_cast<std::size_t>(i)] = orbit.order().coeff(i);
    std::vector<FqElem> bpco(static_cast<std::size_t>(Dp) + 1, 0);
    for (int i = 0; i <= Dp; ++i) bpco[static_cast<std::size_t>(i)] = orbit.coset_modulus().coeff(i);
    std::vector<std::vector<FqElem>> alpha(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        alpha[static_cast<std::size_t>(i)].assign(std::max(Dp, 1), 0);
        const Poly& a = orbit.coset_residue()[static_cast<std::size_t>(i)];
        for (int j = 0; j <= a.deg(); ++j)
            alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.coeff(j);
    }

    int depth = 0;
    for (const Ball& ball : balls) depth = std::max(depth, ball.max_radius());

    const long long space = static_cast<long long>(orbit.index_space());
    ScanResult total;
    total.in_ball.assign(balls.size(), 0);

#pragma omp parallel
    {
        ScanResult local;
        local.in_ball.assign(balls.size(), 0);
        std::vector<FqElem> cand(static_cast<std::size_t>(r) * std::max(D, 1), 0);
        std::vector<FqElem> tails(static_cast<std::size_t>(r) * std::max(depth, 1), 0);
        std::vector<FqElem> ua(static_cast<std::size_t>(D) + 1, 0);
        std::vector<FqElem> ub(static_cast<std::size_t>(D) + 1, 0);

#pragma omp for schedule(static)
        for (long long pos = 0; pos < space; ++pos) {
            // decode the digit blocks; coordinate r-1 sits in the least
            // significant block, coefficient t^0 in its least significant digit
            std::uint64_t rest = static_cast<std::uint64_t>(pos);
            std::fill(cand.begin(), cand.end(), 0);
            for (int i = r - 1; i >= 0; --i) {
                FqElem* row = cand.data() + static_cast<std::size_t>(i) * std::max(D, 1);
                if (plain) {
                    for (int d = 0; d < k; ++d) {
                        row[d] = static_cast<FqElem>(rest % q);
                        rest /= q;
                    }
                } else {
                    const FqElem* al = alpha[static_cast<std::size_t>(i)].data();
                    for (int j = 0; j < Dp; ++j) row[j] = al[j];
                    for (int d = 0; d < k; ++d) {
                        const FqElem digit = static_cast<FqElem>(rest % q);
                        rest /= q;
                        if (digit == 0) continue;
                        for (int j = 0; j <= Dp; ++j)
                            row[d + j] = F.add(row[d + j], F.mul(bpco[static_cast<std::size_t>(j)], digit));
                    }
                }
            }

            // gcd(b, cand_1, ..., cand_r) must be 1 for exact order b
            std::copy(bco.begin(), bco.end(), ua.begin());
            int dga = D;
            FqElem* ga = ua.data();
            FqElem* gb = ub.data();
            for (int i = 0; i < r && dga > 0; ++i) {
                const FqElem* row = cand.data() + static_cast<std::size_t>(i) * std::max(D, 1);
                int db = -1;
                for (int j = D - 1; j >= 0; --j)
                    if (row[j]) {
                        db = j;
                        break;
                    }
                if (db < 0) continue;
                std::copy(row, row + db + 1, gb);
                FqElem* x = ga;
                int dx = dga;
                FqElem* y = gb;
                int dy = db;
                while (dy >= 0) {
                    const int nd = array_mod(F, x, dx, y, dy);
                    dx = nd;
                    std::swap(x, y);
                    std::swap(dx, dy);
                }
                if (x != ga) std::copy(x, x + (dx >= 0 ? dx + 1 : 0), ga);
                dga = dx;
            }
            if (dga != 0) continue;  // gcd nonconstant: not exact order
            ++local.orbit_size;

            if (depth > 0) {
                // first `depth` coefficients of cand_i / b by the monic
                // long-division recurrence on the top coefficients
                for (int i = 0; i < r; ++i) {
                    const FqElem* row = cand.data() + static_cast<std::size_t>(i) * std::max(D, 1);
                    FqElem* tl = tails.data() + static_cast<std::size_t>(i) * depth;
                    for (int j = 1; j <= depth; ++j) {
                        FqElem v = (D - j >= 0 && D - j < D) ? row[D - j] : 0;
                        for (int l = 1; l < j; ++l) {
                            const int bi = D - j + l;
                            if (bi < 0) continue;
                            v = F.sub(v, F.mul(tl[l - 1], bco[static_cast<std::size_t>(bi)]));
                        }
                        tl[j - 1] = v;
                    }
                }
                for (std::size_t bi = 0; bi < balls.size(); ++bi) {
                    const Ball& ball = balls[bi];
                    bool inside = true;
                    for (int i = 0; i < r && inside; ++i) {
                        const FqElem* tl = tails.data() + static_cast<std::size_t>(i) * depth;
                        const auto& center = ball.centers[static_cast<std::size_t>(i)];
                        for (std::size_t j = 0; j < center.size(); ++j)
                            if (tl[j] != center[j]) {
                                inside = false;
                                break;
                            }
                    }
                    if (inside) ++local.in_ball[bi];
                }
            }
        }

#pragma omp critical
        {
            total.orbit_size += local.orbit_size;
            for (std::size_t i = 0; i < total.in_ball.size(); ++i)
                total.in_ball[i] += local.in_ball[i];
        }
    }
    return total;
}

}  // namespace ffeq
