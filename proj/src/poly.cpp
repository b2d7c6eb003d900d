#include "ffeq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ffeq {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    std::vector<FqElem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly{std::move(r)};
}

Poly poly_neg(const Fq& F, const Poly& a) {
    std::vector<FqElem> r(a.c);
    for (auto& x : r) x = F.neg(x);
    return Poly{std::move(r)};
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) { return poly_add(F, a, poly_neg(F, b)); }

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<FqElem> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly{std::move(r)};
}

Poly poly_scale(const Fq& F, const Poly& a, FqElem s) {
    if (s == 0) return Poly::zero();
    std::vector<FqElem> r(a.c);
    for (auto& x : r) x = F.mul(x, s);
    return Poly{std::move(r)};
}

std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const int db = b.deg();
    if (a.deg() < db) return {Poly::zero(), a};
    const FqElem lead_inv = F.inv(b.lead());
    std::vector<FqElem> rem(a.c);
    std::vector<FqElem> quo(static_cast<std::size_t>(a.deg() - db) + 1, 0);
    for (int i = a.deg(); i >= db; --i) {
        const FqElem c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const FqElem f = F.mul(c, lead_inv);
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = F.sub(slot, F.mul(f, b.coeff(j)));
        }
    }
    return {Poly{std::move(quo)}, Poly{std::move(rem)}};
}

Poly poly_quo(const Fq& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).first; }
Poly poly_rem(const Fq& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly make_monic(const Fq& F, const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_rem(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(F, x);
}

Poly coprime_part(const Fq& F, const Poly& a, const Poly& d) {
    if (a.is_zero()) throw std::domain_error("coprime_part: zero input");
    Poly w = make_monic(F, a);
    if (d.is_zero() || d.deg() < 1) return w;
    for (;;) {
        const Poly g = poly_gcd(F, w, d);
        if (g.is_one()) return w;
        w = poly_quo(F, w, g);
    }
}

Poly poly_subst_tpow(const Fq& F, const Poly& f, std::uint64_t k) {
    (void)F;
    if (f.is_zero()) return f;
    if (k == 0) {
        // f(1): not needed by any caller, keep the degenerate case explicit
        throw std::domain_error("poly_subst_tpow: power must be >= 1");
    }
    std::vector<FqElem> r(static_cast<std::size_t>(f.deg()) * k + 1, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) r[i * k] = f.c[i];
    return Poly{std::move(r)};
}

// ---------------------------------------------------------------- irreducibles

namespace {

struct IrredCache {
    std::mutex lock;
    std::vector<std::vector<Poly>> by_degree;  // [0] unused
};

IrredCache& cache_for(const Fq& F) {
    static std::mutex registry_lock;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, IrredCache> registry;
    std::lock_guard<std::mutex> g(registry_lock);
    return registry[{F.p(), F.ext_degree()}];
}

// candidates of exact degree d in lex order: code enumerates the d low
// coefficients, leading coefficient pinned to 1
Poly monic_from_code(const Fq& F, std::uint64_t code, int d) {
    std::vector<FqElem> c(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<FqElem>(code % F.q());
        code /= F.q();
    }
    c[static_cast<std::size_t>(d)] = 1;
    return Poly{std::move(c)};
}

bool divisible_by_table(const Fq& F, const Poly& f, const std::vector<std::vector<Poly>>& table) {
    for (int d = 1; 2 * d <= f.deg(); ++d)
        for (const Poly& irr : table[static_cast<std::size_t>(d)])
            if (poly_rem(F, f, irr).is_zero()) return true;
    return false;
}

void grow_table(const Fq& F, IrredCache& cache, int upto) {
    if (cache.by_degree.empty()) cache.by_degree.resize(1);
    for (int d = static_cast<int>(cache.by_degree.size()); d <= upto; ++d) {
        std::vector<Poly> irreducibles;
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly cand = monic_from_code(F, code, d);
            if (!divisible_by_table(F, cand, cache.by_degree)) irreducibles.push_back(std::move(cand));
        }
        cache.by_degree.push_back(std::move(irreducibles));
    }
}

}  // namespace

const std::vector<Poly>& irreducibles_of_degree(const Fq& F, int d) {
    if (d < 1) throw std::domain_error("irreducibles_of_degree: degree must be >= 1");
    IrredCache& cache = cache_for(F);
    std::lock_guard<std::mutex> g(cache.lock);
    grow_table(F, cache, d);
    return cache.by_degree[static_cast<std::size_t>(d)];
}

Poly first_irreducible_of_degree(const Fq& F, int d) {
    const auto& list = irreducibles_of_degree(F, d);
    if (list.empty()) throw std::logic_error("no irreducible of requested degree");  // unreachable
    return list.front();
}

bool is_irreducible(const Fq& F, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("is_irreducible: zero input");
    if (f.deg() == 0) return false;
    if (f.deg() == 1) return true;
    for (int d = 1; 2 * d <= f.deg(); ++d)
        for (const Poly& irr : irreducibles_of_degree(F, d))
            if (poly_rem(F, f, irr).is_zero()) return false;
    return true;
}

Factorization factor(const Fq& F, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factor: zero input");
    if (f.deg() == 0) throw std::domain_error("factor: constant input");
    Factorization out;
    out.unit = f.lead();
    Poly w = make_monic(F, f);
    for (int d = 1; 2 * d <= w.deg(); ++d) {
        for (const Poly& irr : irreducibles_of_degree(F, d)) {
            if (2 * d > w.deg()) break;
            int e = 0;
            for (;;) {
                auto [q, r] = poly_divmod(F, w, irr);
                if (!r.is_zero()) break;
                w = std::move(q);
                ++e;
            }
            if (e > 0) out.factors.emplace_back(irr, e);
        }
    }
    if (w.deg() >= 1) out.factors.emplace_back(std::move(w), 1);
    return out;
}

std::vector<Poly> monic_divisors(const Fq& F, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("monic_divisors: zero input");
    std::vector<Poly> out{Poly::one()};
    if (f.deg() >= 1) {
        for (const auto& [c, e] : factor(F, f).factors) {
            std::vector<Poly> next;
            next.reserve(out.size() * static_cast<std::size_t>(e + 1));
            for (const Poly& g : out) {
                Poly acc = g;
                next.push_back(acc);
                for (int k = 1; k <= e; ++k) {
                    acc = poly_mul(F, acc, c);
                    next.push_back(acc);
                }
            }
            out = std::move(next);
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

int moebius(const Fq& F, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("moebius: zero input");
    if (f.deg() == 0) return 1;
    const Factorization fac = factor(F, f);
    for (const auto& [c, e] : fac.factors)
        if (e >= 2) return 0;
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t poly_code(const Fq& F, const Poly& a) {
    std::uint64_t code = 0;
    for (int i = a.deg(); i >= 0; --i) code = code * F.q() + a.coeff(i);
    return code;
}

Poly poly_from_code(const Fq& F, std::uint64_t code) {
    std::vector<FqElem> c;
    while (code) {
        c.push_back(static_cast<FqElem>(code % F.q()));
        code /= F.q();
    }
    return Poly{std::move(c)};
}

// ----------------------------------------------------------------------- text

std::string poly_to_string(const Fq& F, const Poly& a) {
    if (!F.prime_field())
        throw std::invalid_argument("poly_to_string: text format is defined for prime q only");
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.deg(); i >= 0; --i) {
        const FqElem c = a.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 't';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
    throw std::invalid_argument("poly_parse: bad polynomial \"" + text + "\": " + why);
}

}  // namespace

Poly poly_parse(const Fq& F, const std::string& text) {
    if (!F.prime_field())
        throw std::invalid_argument("poly_parse: text format is defined for prime q only");
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) parse_fail(text, "empty string");

    std::vector<FqElem> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) parse_fail(text, "empty term");

        std::uint64_t coeff = 1;
        bool has_coeff = false;
        std::size_t i = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
        if (i > 0) {
            coeff = std::stoull(term.substr(0, i));
            has_coeff = true;
            if (i < term.size() && term[i] == '*') ++i;
        }
        std::uint64_t expo = 0;
        if (i < term.size()) {
            if (term[i] != 't') parse_fail(text, "expected 't' in term \"" + term + "\"");
            ++i;
            if (i < term.size()) {
                if (term[i] != '^') parse_fail(text, "expected '^' in term \"" + term + "\"");
                ++i;
                if (i == term.size() || !std::isdigit(static_cast<unsigned char>(term[i])))
                    parse_fail(text, "missing exponent in term \"" + term + "\"");
                std::size_t j = i;
                while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
                expo = std::stoull(term.substr(i, j - i));
                i = j;
            } else {
                expo = 1;
            }
        } else if (!has_coeff) {
            parse_fail(text, "term \"" + term + "\" has neither coefficient nor variable");
        }
        if (i != term.size()) parse_fail(text, "trailing characters in term \"" + term + "\"");
        if (term[0] == 't') expo = std::max<std::uint64_t>(expo, 1);
        if (coeff >= F.p())
            parse_fail(text, "coefficient " + std::to_string(coeff) + " out of range for F_" +
                                 std::to_string(F.p()));
        if (expo > 4096) parse_fail(text, "exponent too large");
        if (coeffs.size() <= expo) coeffs.resize(static_cast<std::size_t>(expo) + 1, 0);
        coeffs[static_cast<std::size_t>(expo)] =
            F.add(coeffs[static_cast<std::size_t>(expo)], static_cast<FqElem>(coeff));
        pos = end + 1;
    }
    if (pos == s.size() && s.back() == '+') parse_fail(text, "trailing '+'");
    return Poly{std::move(coeffs)};
}

}  // namespace ffeq
