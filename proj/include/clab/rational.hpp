#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace clab {

// All probabilities, weights and activities are exact rationals.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// q^e for integer e >= 0.
inline Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    return r;  // base canonical => power canonical
}

// Parses "num/den" or "num". Rejects floats and zero denominators.
inline Rational parse_rational(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789/-") != std::string::npos)
        throw std::invalid_argument("bad rational: '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

}  // namespace clab
