#include "clab/certified.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace clab {
namespace {

constexpr int kStartPrec = 96;
constexpr int kMaxPrec = 8192;

// Exact rational value of an mpfr number (mpfr values are dyadic).
Rational mpfr_to_rational(mpfr_t x) {
    if (!mpfr_number_p(x)) throw std::runtime_error("mpfr value not finite");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rational q(m);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), (mp_bitcnt_t)e);
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), (mp_bitcnt_t)(-e));
    q.canonicalize();
    return q;
}

// exp(-t) with the requested rounding direction (rnd applies to the result).
void exp_neg(mpfr_t out, const Rational& t, mpfr_rnd_t rnd, int prec) {
    mpfr_t x;
    mpfr_init2(x, prec);
    // want rnd on exp(-t): exp is increasing, so round -t in direction rnd
    mpfr_set_q(x, t.get_mpq_t(), rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD);
    mpfr_neg(x, x, MPFR_RNDN);  // exact
    mpfr_exp(out, x, rnd);
    mpfr_clear(x);
}

// d * log(a) with directed rounding (a in (0,inf), d >= 0; log may be negative).
void scaled_log(mpfr_t out, const Rational& a, const mpz_class& d, mpfr_rnd_t rnd, int prec) {
    mpfr_t x;
    mpfr_init2(x, prec);
    mpfr_set_q(x, a.get_mpq_t(), rnd);  // log increasing: same direction
    mpfr_log(x, x, rnd);
    // multiply by nonnegative integer keeps the rounding direction
    mpfr_mul_z(out, x, d.get_mpz_t(), rnd);
    mpfr_clear(x);
}

// Exact test a^d == b^u (all positive, exponents nonnegative).  Reduces the
// exponents and checks for a common rational root; avoids expanding huge powers.
bool pow_equal_exact(const Rational& a, const mpz_class& d, const Rational& b, const mpz_class& u) {
    if (d == 0 && u == 0) return true;
    if (d == 0) return b == 1;
    if (u == 0) return a == 1;
    if (a == 1 || b == 1) return a == 1 && b == 1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t());
    mpz_class dr = d / g, ur = u / g;
    // a^dr == b^ur with coprime exponents forces a = c^ur, b = c^dr
    if (!mpz_fits_ulong_p(dr.get_mpz_t()) || !mpz_fits_ulong_p(ur.get_mpz_t())) return false;
    unsigned long drl = mpz_get_ui(dr.get_mpz_t()), url = mpz_get_ui(ur.get_mpz_t());
    mpz_class cn, cd;
    if (!mpz_root(cn.get_mpz_t(), b.get_num().get_mpz_t(), drl)) return false;
    if (!mpz_root(cd.get_mpz_t(), b.get_den().get_mpz_t(), drl)) return false;
    // verify a == (cn/cd)^url without oversizing
    size_t want_num = mpz_sizeinbase(a.get_num().get_mpz_t(), 2);
    size_t root_num = mpz_sizeinbase(cn.get_mpz_t(), 2);
    if (root_num > 1 && (root_num - 1) * url > want_num + 1) return false;
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), cn.get_mpz_t(), url);
    mpz_pow_ui(pd.get_mpz_t(), cd.get_mpz_t(), url);
    return a.get_num() == pn && a.get_den() == pd;
}

}  // namespace

bool cert_leq_exp_neg(const Rational& a, const Rational& t) {
    if (t < 0) throw std::domain_error("cert_leq_exp_neg: t < 0");
    if (a <= 0) return true;
    for (int prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        exp_neg(lo, t, MPFR_RNDD, prec);
        exp_neg(hi, t, MPFR_RNDU, prec);
        int cl = mpfr_cmp_q(lo, a.get_mpq_t());  // lo vs a
        int ch = mpfr_cmp_q(hi, a.get_mpq_t());
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (cl >= 0) return true;   // a <= lower bound of exp(-t)
        if (ch < 0) return false;   // a > upper bound
    }
    // a == exp(-t) exactly only when t == 0
    return t == 0 && a <= 1;
}

bool cert_geq_exp_neg(const Rational& a, const Rational& t) {
    if (t < 0) throw std::domain_error("cert_geq_exp_neg: t < 0");
    if (a <= 0) return false;
    for (int prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        exp_neg(lo, t, MPFR_RNDD, prec);
        exp_neg(hi, t, MPFR_RNDU, prec);
        int ch = mpfr_cmp_q(hi, a.get_mpq_t());
        int cl = mpfr_cmp_q(lo, a.get_mpq_t());
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (ch <= 0) return true;   // a >= upper bound of exp(-t)
        if (cl > 0) return false;
    }
    return t == 0 && a >= 1;
}

int cert_cmp_pow(const Rational& a, const mpz_class& d, const Rational& b, const mpz_class& u) {
    if (a <= 0 || b <= 0) throw std::domain_error("cert_cmp_pow: bases must be positive");
    if (d < 0 || u < 0) throw std::domain_error("cert_cmp_pow: exponents must be nonnegative");
    // expand exactly when the powers stay small
    auto bits = [](const Rational& q) {
        return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    };
    mpz_class cost = d * (long)bits(a) + u * (long)bits(b);
    if (cost < 1 << 22) {
        Rational lhs = rat_pow(a, mpz_get_ui(d.get_mpz_t()));
        Rational rhs = rat_pow(b, mpz_get_ui(u.get_mpz_t()));
        int c = cmp(lhs, rhs);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    if (pow_equal_exact(a, d, b, u)) return 0;
    for (int prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        mpfr_t llo, lhi, rlo, rhi;
        mpfr_init2(llo, prec);
        mpfr_init2(lhi, prec);
        mpfr_init2(rlo, prec);
        mpfr_init2(rhi, prec);
        scaled_log(llo, a, d, MPFR_RNDD, prec);
        scaled_log(lhi, a, d, MPFR_RNDU, prec);
        scaled_log(rlo, b, u, MPFR_RNDD, prec);
        scaled_log(rhi, b, u, MPFR_RNDU, prec);
        bool less = mpfr_cmp(lhi, rlo) < 0;
        bool greater = mpfr_cmp(llo, rhi) > 0;
        mpfr_clear(llo);
        mpfr_clear(lhi);
        mpfr_clear(rlo);
        mpfr_clear(rhi);
        if (less) return -1;
        if (greater) return 1;
    }
    throw std::runtime_error("cert_cmp_pow: unresolved at maximum precision");
}

Rational log_lower_bound(const Rational& x, int bits) {
    if (x <= 0) throw std::domain_error("log_lower_bound: x <= 0");
    mpfr_t v;
    mpfr_init2(v, bits + 16);
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_log(v, v, MPFR_RNDD);
    Rational q = mpfr_to_rational(v);
    mpfr_clear(v);
    return q;
}

Rational log_upper_bound(const Rational& x, int bits) {
    if (x <= 0) throw std::domain_error("log_upper_bound: x <= 0");
    mpfr_t v;
    mpfr_init2(v, bits + 16);
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_log(v, v, MPFR_RNDU);
    Rational q = mpfr_to_rational(v);
    mpfr_clear(v);
    return q;
}

Rational exp_neg_upper_bound(const Rational& t, int bits) {
    if (t < 0) throw std::domain_error("exp_neg_upper_bound: t < 0");
    mpfr_t v;
    mpfr_init2(v, bits + 16);
    exp_neg(v, t, MPFR_RNDU, bits + 16);
    Rational q = mpfr_to_rational(v);
    mpfr_clear(v);
    return q;
}

}  // namespace clab
