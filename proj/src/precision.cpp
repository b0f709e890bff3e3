#include "gammakit/precision.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace gammakit {

namespace {

// log2(10) with headroom; 16 guard bits absorb rounding in compound ops.
constexpr double kBitsPerDigit = 3.3219280948873626;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

mpfr_prec_t PrecisionContext::bits() const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil(digits * kBitsPerDigit)) + 16;
}

BigReal::BigReal() {
    mpfr_init2(v_, PrecisionContext{}.bits());
    mpfr_set_nan(v_);
}

BigReal::BigReal(PrecisionContext ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_nan(v_);
}

BigReal::BigReal(long value, PrecisionContext ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal BigReal::from_double(double value, PrecisionContext ctx) {
    BigReal r(ctx);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(std::string_view text, PrecisionContext ctx) {
    BigReal r(ctx);
    std::string owned(text);
    if (mpfr_set_str(r.v_, owned.c_str(), 10, MPFR_RNDN) != 0)
        throw argument_error("BigReal: cannot parse '" + owned + "' as a decimal number");
    return r;
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

std::string BigReal::str(int significant_digits) const {
    if (significant_digits < 1) throw argument_error("BigReal::str: digits must be positive");
    std::vector<char> buf(static_cast<size_t>(significant_digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
    return std::string(buf.data());
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

#define GAMMAKIT_BINOP(op, fn)                                  \
    BigReal operator op(const BigReal& a, const BigReal& b) {  \
        BigReal r;                                              \
        mpfr_set_prec(r.v_, wider(a, b));                       \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                        \
        return r;                                               \
    }

GAMMAKIT_BINOP(+, mpfr_add)
GAMMAKIT_BINOP(-, mpfr_sub)
GAMMAKIT_BINOP(*, mpfr_mul)
GAMMAKIT_BINOP(/, mpfr_div)
#undef GAMMAKIT_BINOP

#define GAMMAKIT_BINOP_SI(op, fn)                        \
    BigReal operator op(const BigReal& a, long b) {      \
        BigReal r(a);                                    \
        fn(r.v_, a.v_, b, MPFR_RNDN);                    \
        return r;                                        \
    }

GAMMAKIT_BINOP_SI(+, mpfr_add_si)
GAMMAKIT_BINOP_SI(-, mpfr_sub_si)
GAMMAKIT_BINOP_SI(*, mpfr_mul_si)
GAMMAKIT_BINOP_SI(/, mpfr_div_si)
#undef GAMMAKIT_BINOP_SI

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b);
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b);
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define GAMMAKIT_UNARY(name, fn)            \
    BigReal name(const BigReal& x) {        \
        BigReal r(x);                       \
        fn(r.raw(), x.raw(), MPFR_RNDN);    \
        return r;                           \
    }

GAMMAKIT_UNARY(abs, mpfr_abs)
GAMMAKIT_UNARY(exp, mpfr_exp)
GAMMAKIT_UNARY(sin, mpfr_sin)
GAMMAKIT_UNARY(cos, mpfr_cos)
#undef GAMMAKIT_UNARY

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw domain_error("sqrt: negative argument");
    BigReal r(x);
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& x) {
    if (x.is_zero() || x.sign() < 0) throw domain_error("log: argument must be positive");
    BigReal r(x);
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r;
    mpfr_set_prec(r.raw(), std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal r;
    mpfr_set_prec(r.raw(), std::max(y.precision(), x.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
    if (base.sign() < 0) throw domain_error("pow: negative base");
    BigReal r;
    mpfr_set_prec(r.raw(), std::max(base.precision(), exponent.precision()));
    mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, long exponent) {
    BigReal r(base);
    mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
    return r;
}

BigReal floor(const BigReal& x) {
    BigReal r(x);
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal round_nearest(const BigReal& x) {
    BigReal r(x);
    mpfr_round(r.raw(), x.raw());
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

BigReal pi(PrecisionContext ctx) {
    BigReal r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal sqrt_two_pi(PrecisionContext ctx) {
    return sqrt(pi(ctx) * 2);
}

BigReal factorial(unsigned long n, PrecisionContext ctx) {
    BigReal r(ctx);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

BigReal exp2_int(long k, PrecisionContext ctx) {
    BigReal r(ctx);
    mpfr_set_ui_2exp(r.raw(), 1u, static_cast<mpfr_exp_t>(k), MPFR_RNDN);
    return r;
}

}  // namespace gammakit
