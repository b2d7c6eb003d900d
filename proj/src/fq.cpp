#include "ffeq/fq.hpp"

#include <stdexcept>
#include <string>

namespace ffeq {

namespace detail {

// Discrete-log tables for an extension field: exp_[i] = g^i for a fixed
// generator g, log_[exp_[i]] = i.
struct FqTables {
    std::vector<FqElem> exp_;  // size 2(q-1), doubled to skip one reduction
    std::vector<std::uint32_t> log_;
};

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- small F_p[x] helpers on raw digit vectors, used only at construction ---

using Fpx = std::vector<std::uint32_t>;  // low degree first, may carry zeros

int fpx_deg(const Fpx& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// remainder of a by monic-or-not b (b nonzero), coefficients mod p
Fpx fpx_rem(Fpx a, const Fpx& b, std::uint32_t p) {
    int db = fpx_deg(b);
    std::uint64_t lead = b[db];
    // leading coefficient inverse mod p
    std::uint64_t lc_inv = 1;
    for (std::uint32_t k = 0; k < p - 2; ++k) lc_inv = lc_inv * lead % p;
    for (int da = fpx_deg(a); da >= db; da = fpx_deg(a)) {
        std::uint64_t c = a[da] * lc_inv % p;
        for (int i = 0; i <= db; ++i) {
            std::uint64_t s = c * b[i] % p;
            a[da - db + i] = static_cast<std::uint32_t>((a[da - db + i] + p - s) % p);
        }
    }
    return a;
}

bool fpx_irreducible(const Fpx& f, std::uint32_t p) {
    int d = fpx_deg(f);
    if (d < 1) return false;
    // trial division by every monic polynomial of degree 1..d/2
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Fpx g(dd + 1, 0);
            std::uint64_t v = code;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[dd] = 1;
            if (fpx_deg(fpx_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

// lexicographically smallest monic irreducible of degree e over F_p,
// comparing coefficients from the highest degree down
Fpx smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Fpx f(e + 1, 0);
        std::uint64_t v = code;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[e] = 1;
        if (fpx_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<std::uint32_t> code_digits(FqElem a, std::uint32_t p, std::uint32_t e) {
    std::vector<std::uint32_t> d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

FqElem digits_code(const std::vector<std::uint32_t>& d, std::uint32_t p, std::uint32_t e) {
    FqElem a = 0;
    for (std::uint32_t i = e; i-- > 0;) a = a * p + d[i];
    return a;
}

// schoolbook product in F_p[x]/(modulus), construction-time only
FqElem mul_slow(FqElem a, FqElem b, std::uint32_t p, std::uint32_t e, const Fpx& modulus) {
    auto da = code_digits(a, p, e);
    auto db = code_digits(b, p, e);
    Fpx prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    Fpx r = fpx_rem(std::move(prod), modulus, p);
    r.resize(e, 0);
    return digits_code(r, p, e);
}

}  // namespace
}  // namespace detail

Fq::Fq(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!detail::is_prime(p)) throw std::invalid_argument("Fq: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("Fq: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 20)) throw std::invalid_argument("Fq: q = p^e too large (limit 2^20)");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (e_ == 1) return;

    modulus_ = detail::smallest_irreducible(p_, e_);

    // find a generator of the multiplicative group and build log/exp tables
    auto tables = std::make_shared<detail::FqTables>();
    std::vector<bool> seen(q_);
    for (FqElem g = 1; g < q_; ++g) {
        seen.assign(q_, false);
        FqElem x = 1;
        std::uint32_t order = 0;
        do {
            seen[x] = true;
            x = detail::mul_slow(x, g, p_, e_, modulus_);
            ++order;
        } while (x != 1);
        if (order != q_ - 1) continue;
        tables->exp_.resize(2 * (q_ - 1));
        tables->log_.resize(q_);
        x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            tables->exp_[i] = x;
            tables->exp_[i + q_ - 1] = x;
            tables->log_[x] = i;
            x = detail::mul_slow(x, g, p_, e_, modulus_);
        }
        tables_ = std::move(tables);
        return;
    }
    throw std::logic_error("no multiplicative generator found");  // unreachable
}

FqElem Fq::add(FqElem a, FqElem b) const {
    if (e_ == 1) {
        const FqElem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    FqElem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        FqElem s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

FqElem Fq::neg(FqElem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    FqElem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const FqElem d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul(FqElem a, FqElem b) const {
    if (e_ == 1) return static_cast<FqElem>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    return tables_->exp_[tables_->log_[a] + tables_->log_[b]];
}

FqElem Fq::inv(FqElem a) const {
    if (a == 0) throw std::domain_error("Fq::inv: zero has no inverse");
    if (e_ == 1) return pow(a, p_ - 2);
    return tables_->exp_[q_ - 1 - tables_->log_[a]];
}

FqElem Fq::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem Fq::pow(FqElem a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    if (e_ > 1) {
        std::uint64_t l = tables_->log_[a] % (q_ - 1) * (k % (q_ - 1)) % (q_ - 1);
        return tables_->exp_[l];
    }
    FqElem r = 1, base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FqElem Fq::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<FqElem>(m);
}

}  // namespace ffeq
