#include "ffeq/bigint.hpp"

#include <stdexcept>

namespace ffeq {

BigInt q_pow(const Fq& F, int k) {
    if (k < 0) throw std::domain_error("q_pow: negative exponent");
    BigInt r = 1;
    const BigInt base = F.q();
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

BigRat q_pow_rat(const Fq& F, int k) {
    if (k >= 0) return BigRat(q_pow(F, k));
    return BigRat(1, q_pow(F, -k));
}

std::string rat_to_string(const BigRat& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt pow10(int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

// floor(num/den) rounded half to even
BigInt div_round_half_even(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    const BigInt r = num % den;
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) == 1)) ++q;
    return q;
}

}  // namespace

std::string rat_to_decimal(const BigRat& x, int sig) {
    if (sig < 1) throw std::invalid_argument("rat_to_decimal: need at least one digit");
    if (x == 0) return "0";
    const bool negative = x < 0;
    BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(x));
    BigInt den = boost::multiprecision::denominator(x);

    // e10 = floor(log10(num/den)): digit-count estimate corrected by comparison
    int e10 = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
    if (num * pow10(e10 < 0 ? -e10 : 0) < den * pow10(e10 > 0 ? e10 : 0)) --e10;

    // scale so that sig digits remain ahead of the implied point
    int shift = sig - 1 - e10;
    BigInt scaled_num = num * pow10(shift > 0 ? shift : 0);
    BigInt scaled_den = den * pow10(shift < 0 ? -shift : 0);
    BigInt digits = div_round_half_even(scaled_num, scaled_den);
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > sig) {  // 9.99... rounded up a magnitude
        ++e10;
        ds.pop_back();  // the extra digit is a zero produced by the carry
    }

    std::string out;
    if (e10 >= -4 && e10 < sig + 3) {
        if (e10 + 1 >= sig) {
            out = ds + std::string(static_cast<std::size_t>(e10 + 1 - sig), '0');
        } else if (e10 >= 0) {
            out = ds.substr(0, static_cast<std::size_t>(e10) + 1) + "." +
                  ds.substr(static_cast<std::size_t>(e10) + 1);
        } else {
            out = "0.";
            for (int i = 0; i < -e10 - 1; ++i) out += '0';
            out += ds;
        }
    } else {
        out = ds.substr(0, 1) + "." + ds.substr(1) + "e" + (e10 < 0 ? "-" : "+") +
              std::to_string(e10 < 0 ? -e10 : e10);
    }
    return negative ? "-" + out : out;
}

}  // namespace ffeq
