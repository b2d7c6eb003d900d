#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffeq/counting.hpp"
#include "ffeq/scan.hpp"

namespace ffeq {

// One experiment run: a sequence of orders, the orbit of a base point per
// order, and empirical-vs-Haar masses over a finite cylinder-ball family.
// All fields mirror the CLI flags; polynomials stay in text form here because
// parsing requires the field, which is built from (p, e) at run time.
struct ExperimentConfig {
    std::uint32_t p = 2;
    std::uint32_t e = 1;  // text formats require e = 1; the library itself does not
    int rank = 2;
    std::string model = "P=";          // "P=<poly>,<poly>;m=<int>" (mode comes from `mode`)
    std::string mode = "full";         // "minimal" | "full"
    std::string orders = "tpowers:4";  // "tpowers:<max>|irred:<max>|list:<p1;p2;...>|random:<count>:<maxdeg>:<seed>"
    std::string balls = "sum<=2";      // "sum<=<N>"
    std::string base;                  // "<b_1>,...,<b_r>" numerators; empty = (1,0,...,0)
    int precision = 0;                 // tail display precision; 0 = max(8, max radius)
    std::string out;                   // CSV path; empty = stdout (CLI concern)
    int workers = 0;                   // OpenMP threads; 0 = library default
};

struct ResultRow {
    std::uint32_t q = 0;
    int r = 0;
    std::string mode;
    std::string b_text;
    int deg_b = 0;
    std::string ball_id;
    int sum_n = 0;
    BigInt orbit_size;
    BigInt orbit_size_closed;
    BigInt in_ball_count;
    BigRat empirical;   // in_ball_count / orbit_size
    BigRat haar_mass;
    BigRat abs_err;     // |empirical - haar|
    BigRat error_bound; // certified per-coset count bound
    BigRat discrepancy_for_deg;  // max abs_err over all rows of this degree
};

// Deterministic order sequences; see ExperimentConfig::orders for the forms.
// Throws std::invalid_argument on malformed specs.
std::vector<Poly> generate_orders(const Fq& F, const std::string& spec);

// max over the family of |empirical(U) - haar(U)| for one scanned orbit.
BigRat discrepancy(const Fq& F, const ScanResult& scan, const std::vector<Ball>& family);

// Runs the whole experiment: every order, every ball, exact arithmetic.
// Cross-checks on every row (closed-form orbit size, partition of G at fixed
// radii, certified in-ball error bound) throw std::logic_error on violation.
// Rows come back sorted by (deg b, b, ball family position).
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

// CSV with '#' config-echo comments, a fixed header, and one line per row.
// Byte-identical for identical configs.
std::string rows_to_csv(const ExperimentConfig& config, const std::vector<ResultRow>& rows);

// Config-file support: plain "key = value" lines mirroring the CLI flags,
// '#' starts a comment.  read_config_file returns pairs in file order;
// apply_config_kv rejects unknown keys and bad values.  Callers that also
// take command-line flags apply only the keys the flags did not set.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);
void apply_config_kv(ExperimentConfig& config, const std::string& key, const std::string& value);

inline std::string run_experiment_csv(const ExperimentConfig& config) {
    return rows_to_csv(config, run_experiment(config));
}

}  // namespace ffeq
