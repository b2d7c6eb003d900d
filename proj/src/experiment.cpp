#include "ffeq/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffeq {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

[[noreturn]] void bad_spec(const std::string& what, const std::string& spec) {
    throw std::invalid_argument("malformed " + what + " spec: \"" + spec + "\"");
}

}  // namespace

std::vector<Poly> generate_orders(const Fq& F, const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) bad_spec("orders", spec);
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    std::vector<Poly> out;

    if (kind == "tpowers") {
        const int maxdeg = std::stoi(rest);
        if (maxdeg < 1) bad_spec("orders", spec);
        for (int d = 1; d <= maxdeg; ++d) out.push_back(Poly::t_power(d));
    } else if (kind == "irred") {
        const int maxdeg = std::stoi(rest);
        if (maxdeg < 1) bad_spec("orders", spec);
        for (int d = 1; d <= maxdeg; ++d) out.push_back(first_irreducible_of_degree(F, d));
    } else if (kind == "list") {
        for (const std::string& piece : split(rest, ';')) {
            if (piece.empty()) bad_spec("orders", spec);
            Poly b = poly_parse(F, piece);
            if (b.deg() < 1 || b.lead() != 1)
                throw std::invalid_argument("orders list: \"" + piece +
                                            "\" is not monic of degree >= 1");
            out.push_back(std::move(b));
        }
    } else if (kind == "random") {
        const auto parts = split(rest, ':');
        if (parts.size() != 3) bad_spec("orders", spec);
        const int count = std::stoi(parts[0]);
        const int maxdeg = std::stoi(parts[1]);
        const std::uint64_t seed = std::stoull(parts[2]);
        if (count < 1 || maxdeg < 1) bad_spec("orders", spec);
        // mt19937_64 is fully specified, so sequences are portable; the
        // modulo draw is biased in principle but only determinism matters
        std::mt19937_64 gen(seed);
        for (int d = 1; d <= maxdeg; ++d) {
            std::set<std::uint64_t> taken;
            const std::uint64_t available = [&] {
                std::uint64_t n = 1;
                for (int i = 0; i < d; ++i) n *= F.q();
                return n;
            }();
            const int want = static_cast<int>(std::min<std::uint64_t>(
                static_cast<std::uint64_t>(count), available));
            while (static_cast<int>(taken.size()) < want) {
                std::vector<FqElem> c(static_cast<std::size_t>(d) + 1, 0);
                for (int i = 0; i < d; ++i)
                    c[static_cast<std::size_t>(i)] = static_cast<FqElem>(gen() % F.q());
                c[static_cast<std::size_t>(d)] = 1;
                Poly b{std::move(c)};
                if (taken.insert(poly_code(F, b)).second) out.push_back(std::move(b));
            }
        }
    } else {
        bad_spec("orders", spec);
    }
    return out;
}

BigRat discrepancy(const Fq& F, const ScanResult& scan, const std::vector<Ball>& family) {
    if (family.empty()) throw std::invalid_argument("discrepancy: empty ball family");
    if (scan.orbit_size == 0) throw std::invalid_argument("discrepancy: empty orbit");
    BigRat worst = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const BigRat emp = BigRat(scan.in_ball[i]) / BigRat(scan.orbit_size);
        const BigRat gap = boost::multiprecision::abs(emp - haar(F, family[i]));
        if (gap > worst) worst = gap;
    }
    return worst;
}

namespace {

struct ParsedConfig {
    Fq F;
    GaloisImageModel model;
    std::vector<Poly> orders;
    std::vector<Ball> family;
    std::vector<Poly> base_nums;
    int ball_sum_max = 0;
    int precision = 0;
};

ParsedConfig parse_config(const ExperimentConfig& config) {
    if (config.e != 1)
        throw std::invalid_argument(
            "run_experiment: text interfaces require a prime field (e = 1)");
    if (config.rank < 1) throw std::invalid_argument("run_experiment: rank must be >= 1");
    Fq F(config.p, config.e);

    GaloisImageModel model = model_parse(F, config.model);
    if (config.mode == "minimal")
        model.mode = GaloisMode::minimal;
    else if (config.mode == "full")
        model.mode = GaloisMode::full;
    else
        throw std::invalid_argument("run_experiment: mode must be minimal or full");

    if (config.balls.rfind("sum<=", 0) != 0) bad_spec("balls", config.balls);
    const int max_sum = std::stoi(config.balls.substr(5));
    if (max_sum < 1) bad_spec("balls", config.balls);

    std::vector<Poly> base;
    if (config.base.empty()) {
        base.push_back(Poly::one());
        for (int i = 1; i < config.rank; ++i) base.push_back(Poly::zero());
    } else {
        for (const std::string& piece : split(config.base, ','))
            base.push_back(poly_parse(F, piece));
        if (static_cast<int>(base.size()) != config.rank)
            throw std::invalid_argument("run_experiment: base point needs one numerator per coordinate");
    }

    ParsedConfig out{F,
                     std::move(model),
                     generate_orders(F, config.orders),
                     ball_family_sum_at_most(F, config.rank, max_sum),
                     std::move(base),
                     max_sum,
                     config.precision};
    int max_radius = 0;
    for (const Ball& ball : out.family) max_radius = std::max(max_radius, ball.max_radius());
    if (out.precision == 0) out.precision = std::max(8, max_radius);
    if (out.precision < max_radius)
        throw std::invalid_argument("run_experiment: precision below the deepest ball radius");
    return out;
}

[[noreturn]] void row_check_failed(const std::string& what, const std::string& b_text) {
    throw std::logic_error("run_experiment: " + what + " failed at order " + b_text);
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
    ParsedConfig pc = parse_config(config);
    const Fq& F = pc.F;
    const int r = config.rank;

#ifdef _OPENMP
    if (config.workers > 0) omp_set_num_threads(config.workers);
#endif

    const GaloisImageModel empty_model{{}, 1, GaloisMode::full};
    const bool minimal = pc.model.mode == GaloisMode::minimal;

    struct Keyed {
        int deg;
        std::uint64_t code;
        std::size_t ball_idx;
        ResultRow row;
    };
    std::vector<Keyed> keyed;

    for (const Poly& b : pc.orders) {
        const std::string b_text = poly_to_string(F, b);
        // reduce the base numerators modulo this order and demand exact order
        std::vector<Poly> nums;
        nums.reserve(pc.base_nums.size());
        for (const Poly& n : pc.base_nums) nums.push_back(poly_rem(F, n, b));
        Poly g = b;
        for (const Poly& n : nums)
            if (!n.is_zero()) g = poly_gcd(F, g, n);
        if (!g.is_one())
            throw std::runtime_error("run_experiment: base point is not of exact order for b = " +
                                     b_text + " (gcd != 1)");
        const TorsionPoint x = make_torsion_point(F, b, std::move(nums));

        const Orbit O = orbit(F, x, pc.model);
        const ScanResult scan = scan_orbit_parallel(F, O, pc.family);

        // closed form for the whole scanned orbit: per-coset size in minimal
        // mode (the orbit is one coset), all exact-order points in full mode
        const BigRat closed = minimal ? orbit_size_closed(F, b, r, pc.model)
                                      : BigRat(q_pow(F, r * b.deg())) * euler_product(F, b, r);
        if (boost::multiprecision::denominator(closed) != 1)
            row_check_failed("integrality of the closed-form orbit size", b_text);
        if (BigRat(scan.orbit_size) != closed) row_check_failed("closed-form orbit size check", b_text);

        // fixed radii partition G, so the counts per radii group add up to
        // the whole orbit
        std::map<std::vector<int>, std::uint64_t> per_radii;
        for (std::size_t i = 0; i < pc.family.size(); ++i) {
            std::vector<int> radii;
            for (int ci = 0; ci < r; ++ci) radii.push_back(pc.family[i].radius(ci));
            per_radii[radii] += scan.in_ball[i];
        }
        for (const auto& [radii, sum] : per_radii)
            if (sum != scan.orbit_size) row_check_failed("partition check", b_text);

        for (std::size_t i = 0; i < pc.family.size(); ++i) {
            const Ball& ball = pc.family[i];
            ResultRow row;
            row.q = F.q();
            row.r = r;
            row.mode = minimal ? "minimal" : "full";
            row.b_text = b_text;
            row.deg_b = b.deg();
            row.ball_id = ball_to_string(F, ball);
            row.sum_n = ball.sum_radii();
            row.orbit_size = scan.orbit_size;
            row.orbit_size_closed = boost::multiprecision::numerator(closed);
            row.in_ball_count = scan.in_ball[i];
            row.empirical = BigRat(scan.in_ball[i]) / BigRat(scan.orbit_size);
            row.haar_mass = haar(F, ball);
            row.abs_err = boost::multiprecision::abs(row.empirical - row.haar_mass);
            row.error_bound = minimal ? ball_count_error_bound(F, b, r, pc.model, ball)
                                      : ball_count_error_bound(F, b, r, empty_model, ball);

            // the certified inequality behind the whole experiment
            const BigRat main_term = closed * row.haar_mass;
            if (boost::multiprecision::abs(BigRat(scan.in_ball[i]) - main_term) > row.error_bound)
                row_check_failed("certified error bound check", b_text);

            keyed.push_back(Keyed{b.deg(), poly_code(F, b), i, std::move(row)});
        }
    }

    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.code != b.code) return a.code < b.code;
        return a.ball_idx < b.ball_idx;
    });

    // per-degree discrepancy: max |empirical - haar| over every row of the degree
    std::map<int, BigRat> per_degree;
    for (const Keyed& kr : keyed) {
        auto [it, inserted] = per_degree.try_emplace(kr.deg, kr.row.abs_err);
        if (!inserted && kr.row.abs_err > it->second) it->second = kr.row.abs_err;
    }
    std::vector<ResultRow> rows;
    rows.reserve(keyed.size());
    for (Keyed& kr : keyed) {
        kr.row.discrepancy_for_deg = per_degree[kr.deg];
        rows.push_back(std::move(kr.row));
    }
    return rows;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    const auto trim = [](const std::string& s) {
        const std::size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        const std::size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

void apply_config_kv(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "p")
        config.p = static_cast<std::uint32_t>(std::stoul(value));
    else if (key == "e")
        config.e = static_cast<std::uint32_t>(std::stoul(value));
    else if (key == "rank")
        config.rank = std::stoi(value);
    else if (key == "model")
        config.model = value;
    else if (key == "mode")
        config.mode = value;
    else if (key == "orders")
        config.orders = value;
    else if (key == "balls")
        config.balls = value;
    else if (key == "base")
        config.base = value;
    else if (key == "precision")
        config.precision = std::stoi(value);
    else if (key == "out")
        config.out = value;
    else if (key == "workers")
        config.workers = std::stoi(value);
    else
        throw std::invalid_argument("unknown config key \"" + key + "\"");
}

std::string rows_to_csv(const ExperimentConfig& config, const std::vector<ResultRow>& rows) {
    std::string out;
    out += "# ffeq experiment\n";
    out += "# p = " + std::to_string(config.p) + "\n";
    out += "# e = " + std::to_string(config.e) + "\n";
    out += "# rank = " + std::to_string(config.rank) + "\n";
    out += "# model = " + config.model + "\n";
    out += "# mode = " + config.mode + "\n";
    out += "# orders = " + config.orders + "\n";
    out += "# balls = " + config.balls + "\n";
    out += "# base = " + (config.base.empty() ? std::string("default") : config.base) + "\n";
    out += "# precision = " + std::to_string(config.precision) + "\n";
    out += "# out = " + (config.out.empty() ? std::string("-") : config.out) + "\n";
    out += "# workers = " + std::to_string(config.workers) + "\n";
    out +=
        "q,r,mode,b,deg_b,ball,sum_n,orbit_size,orbit_size_closed,in_ball_count,"
        "empirical_rational,empirical_decimal,haar_rational,abs_err_decimal,error_bound,"
        "discrepancy_for_deg\n";
    for (const ResultRow& row : rows) {
        out += std::to_string(row.q) + "," + std::to_string(row.r) + "," + row.mode + "," +
               row.b_text + "," + std::to_string(row.deg_b) + ",\"" + row.ball_id + "\"," +
               std::to_string(row.sum_n) + "," + row.orbit_size.str() + "," +
               row.orbit_size_closed.str() + "," + row.in_ball_count.str() + "," +
               rat_to_string(row.empirical) + "," + rat_to_decimal(row.empirical) + "," +
               rat_to_string(row.haar_mass) + "," + rat_to_decimal(row.abs_err) + "," +
               rat_to_string(row.error_bound) + "," + rat_to_decimal(row.discrepancy_for_deg) +
               "\n";
    }
    return out;
}

}  // namespace ffeq
