#pragma once

// Arbitrary-precision integers and rationals on top of GMP's C++ classes.
// mpq_class keeps the invariants we need for BigRat (always reduced,
// denominator positive, canonical zero 0/1) as long as construction goes
// through make_rat / canonicalized arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reebscope {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt make_int(long v) { return BigInt(v); }

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

inline int sgn(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const BigRat& a) { return mpq_sgn(a.get_mpq_t()); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt abs(const BigInt& a) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline BigRat abs(const BigRat& a) {
    BigRat r;
    mpq_abs(r.get_mpq_t(), a.get_mpq_t());
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat pow(const BigRat& base, unsigned long e) {
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical rational stay canonical
}

// Exact integer quotient; throws if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: not divisible");
    return q;
}

inline BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(a) for rationals
inline BigInt floor(const BigRat& a) { return fdiv(a.get_num(), a.get_den()); }

inline BigInt ceil(const BigRat& a) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

inline bool fits_long(const BigInt& a) { return mpz_fits_slong_p(a.get_mpz_t()) != 0; }

inline long to_long(const BigInt& a) {
    if (!fits_long(a)) throw std::overflow_error("BigInt does not fit in long");
    return mpz_get_si(a.get_mpz_t());
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

// "num/den" when den != 1, plain integer otherwise.
inline std::string to_string(const BigRat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Round a rational to the dyadic grid with `bits` fractional bits.
inline BigRat round_dyadic(const BigRat& a, unsigned bits) {
    BigInt scaled_num = a.get_num() << bits;
    BigInt two_den = a.get_den() * 2;
    // round(num*2^bits / den) = floor((2*num*2^bits + den) / (2*den))
    BigInt m = fdiv(scaled_num * 2 + a.get_den(), two_den);
    BigRat r(m, BigInt(1) << bits);
    r.canonicalize();
    return r;
}

// Decimal string with the given number of significant digits, round-to-nearest.
// Fixed-point for moderate magnitudes, scientific otherwise. Used by the
// JSON/report surface (12 significant digits there).
inline std::string to_decimal_string(const BigRat& a, int sig_digits) {
    if (a == 0) return "0";
    BigInt n = abs(a.get_num()), d = a.get_den();
    long exp10 = 0;  // value = (n/d) * 10^exp10 with 1 <= n/d < 10
    while (n < d) {
        n *= 10;
        --exp10;
    }
    while (n >= d * 10) {
        d *= 10;
        ++exp10;
    }
    std::string digits;
    BigInt rem = n;
    for (int i = 0; i < sig_digits; ++i) {
        BigInt q = fdiv(rem, d);
        digits += to_string(q);
        rem = (rem - q * d) * 10;
    }
    if (rem * 2 >= d * 10) {  // round half up on the discarded tail
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[i] == '9') digits[i--] = '0';
        if (i < 0) {
            digits.insert(digits.begin(), '1');
            digits.pop_back();
            ++exp10;
        } else {
            digits[i]++;
        }
    }
    std::string sign = sgn(a) < 0 ? "-" : "";
    if (exp10 >= -4 && exp10 < sig_digits) {
        std::string out;
        if (exp10 < 0) {
            out = "0." + std::string(-exp10 - 1, '0') + digits;
        } else {
            out = digits.substr(0, exp10 + 1);
            if (exp10 + 1 < static_cast<long>(digits.size()))
                out += "." + digits.substr(exp10 + 1);
        }
        // trim trailing zeros after a decimal point, but keep one digit
        if (out.find('.') != std::string::npos) {
            while (out.back() == '0') out.pop_back();
            if (out.back() == '.') out.pop_back();
        }
        return sign + out;
    }
    std::string mant = digits.substr(0, 1);
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) mant += "." + frac;
    return sign + mant + "e" + std::to_string(exp10);
}

// Parse "num/den" or "num".
inline BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        BigInt n(s);
        return BigRat(n);
    }
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace reebscope
