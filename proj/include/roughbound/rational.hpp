#pragma once

// Exact rational scalar type and small numeric helpers shared by the
// whole library. All correctness-relevant arithmetic goes through these;
// doubles appear only in display formatting.

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace roughbound {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
inline Integer binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return Integer(0);
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

inline Integer pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2 with negative exponent");
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return result;
}

inline int sign_of(const Rational& r) { return sgn(r); }

// Canonical wire form "p/q", lowest terms, q > 0. Integers render as "p/1".
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational fraction_from_string(const std::string& text) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("unparsable rational: " + text);
    if (sgn(Rational(r.get_den())) <= 0) {
        if (sgn(Rational(r.get_den())) == 0)
            throw std::invalid_argument("zero denominator: " + text);
        // normalize "p/-q"
        r = Rational(-r.get_num(), -r.get_den());
    }
    r.canonicalize();
    return r;
}

// Decimal annotation, 12 significant digits. Never used in comparisons.
inline std::string to_decimal_string(const Rational& r) {
    std::ostringstream os;
    os.precision(12);
    os << r.get_d();
    return os.str();
}

}  // namespace roughbound
