// Compares the serial reference orbit scan against the OpenMP kernel on a
// t-power orbit and reports wall times and speedups.  The two paths must
// produce identical counts; the benchmark aborts if they do not.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "ffeq/counting.hpp"
#include "ffeq/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit scan benchmark: serial reference vs OpenMP kernel"};
    std::uint32_t p = 2;
    int rank = 2;
    int deg = 10;
    int sum = 3;
    app.add_option("--p", p, "field characteristic (default 2)");
    app.add_option("--rank", rank, "rank (default 2)");
    app.add_option("--deg", deg, "order is t^deg (default 10)");
    app.add_option("--sum", sum, "ball family sum<=N (default 3)");
    CLI11_PARSE(app, argc, argv);

    ffeq::Fq F(p);
    const ffeq::Poly b = ffeq::Poly::t_power(deg);
    const auto family = ffeq::ball_family_sum_at_most(F, rank, sum);
    const ffeq::Orbit orbit = ffeq::exact_order_points(F, b, rank);

    std::printf("orbit: exact-order points of t^%d, q=%u, r=%d; index space %llu, %zu balls\n",
                deg, F.q(), rank, static_cast<unsigned long long>(orbit.index_space()),
                family.size());

    double t0 = now_seconds();
    const ffeq::ScanResult serial = ffeq::scan_orbit_serial(F, orbit, family);
    const double t_serial = now_seconds() - t0;
    std::printf("%-28s %10.3f s   (orbit size %llu)\n", "serial reference", t_serial,
                static_cast<unsigned long long>(serial.orbit_size));

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    for (int threads = 1; threads <= max_threads; threads *= 2) {
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
        t0 = now_seconds();
        const ffeq::ScanResult par = ffeq::scan_orbit_parallel(F, orbit, family);
        const double t_par = now_seconds() - t0;
        if (par != serial) {
            std::fprintf(stderr, "MISMATCH between serial reference and kernel at %d threads\n",
                         threads);
            return 1;
        }
        std::printf("kernel, %2d thread%s %12.3f s   speedup vs serial %6.2fx\n", threads,
                    threads == 1 ? " " : "s", t_par, t_serial / t_par);
        if (threads == max_threads) break;
        if (threads * 2 > max_threads) threads = max_threads / 2;  // finish at the max
    }

    const ffeq::BigRat closed =
        ffeq::BigRat(ffeq::q_pow(F, rank * deg)) * ffeq::euler_product(F, b, rank);
    std::printf("closed-form orbit size: %s (matches: %s)\n",
                ffeq::rat_to_string(closed).c_str(),
                ffeq::BigRat(serial.orbit_size) == closed ? "yes" : "NO");
    return 0;
}
