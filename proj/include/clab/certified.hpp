#pragma once

#include "clab/rational.hpp"

namespace clab {

// Certified transcendental comparisons.  Every answer is backed by directed
// rounding: a "true"/"false" verdict is a proof, never a float guess.
// Precision escalates until the comparison resolves; ties fall back to an
// exact algebraic test.

// Certifies a <= exp(-t) (t >= 0 rational).  Returns true/false; throws if
// unresolvable (cannot happen for strict inequalities).
bool cert_leq_exp_neg(const Rational& a, const Rational& t);

// Certifies a >= exp(-t).
bool cert_geq_exp_neg(const Rational& a, const Rational& t);

// Compares a^d with b^u for positive rationals a, b and nonnegative integer
// exponents.  Small cases are expanded exactly over big rationals; large ones
// go through certified logs with an exact equality fallback.
// Returns -1, 0, +1.
int cert_cmp_pow(const Rational& a, const mpz_class& d, const Rational& b, const mpz_class& u);

// Rational lower/upper bounds on log(x) for rational x > 0, with at least
// `bits` correct bits.
Rational log_lower_bound(const Rational& x, int bits = 40);
Rational log_upper_bound(const Rational& x, int bits = 40);

// Rational upper bound on exp(-t), t >= 0.
Rational exp_neg_upper_bound(const Rational& t, int bits = 40);

}  // namespace clab
