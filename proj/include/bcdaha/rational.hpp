#pragma once

// Exact rational scalars. GMP does the heavy lifting; this header pins the
// conventions the rest of the library relies on: values are always canonical
// (lowest terms, positive denominator) and serialize as "num/den" strings.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bcd {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a/b", "a", and optional leading '-'. Whitespace is not tolerated;
// inputs come from JSON strings that we control end to end.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(s);
            return Rational(n);
        }
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        return rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

// Canonical form always carries the denominator, so emitted reports
// round-trip byte-for-byte.
inline std::string rat_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return z.get_si();
}

inline Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Integer pow2(long n) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return p;
}

}  // namespace bcd
