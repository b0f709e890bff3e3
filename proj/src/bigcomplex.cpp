#include "gammakit/bigcomplex.hpp"

namespace gammakit {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    // MPFR's exponent range makes the textbook formula safe from
    // intermediate overflow at any magnitude we ever see.
    BigReal den = b.re_ * b.re_ + b.im_ * b.im_;
    if (den.is_zero()) throw domain_error("BigComplex: division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den,
            (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigComplex exp(const BigComplex& z) {
    BigReal scale = exp(z.real());
    BigReal s;
    BigReal c;
    mpfr_set_prec(s.raw(), z.imag().precision());
    mpfr_set_prec(c.raw(), z.imag().precision());
    mpfr_sin_cos(s.raw(), c.raw(), z.imag().raw(), MPFR_RNDN);
    return {scale * c, scale * s};
}

BigComplex log(const BigComplex& z) {
    if (z.real().is_zero() && z.imag().is_zero())
        throw domain_error("log: zero argument");
    return {log(abs(z)), arg(z)};
}

BigComplex sin(const BigComplex& z) {
    // sin(a+bi) = sin a cosh b + i cos a sinh b
    BigReal s;
    BigReal c;
    mpfr_set_prec(s.raw(), z.real().precision());
    mpfr_set_prec(c.raw(), z.real().precision());
    mpfr_sin_cos(s.raw(), c.raw(), z.real().raw(), MPFR_RNDN);
    BigReal sh;
    BigReal ch;
    mpfr_set_prec(sh.raw(), z.imag().precision());
    mpfr_set_prec(ch.raw(), z.imag().precision());
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.imag().raw(), MPFR_RNDN);
    return {s * ch, c * sh};
}

BigComplex sqrt(const BigComplex& z) {
    if (z.is_real() && z.real().sign() >= 0) return BigComplex(sqrt(z.real()));
    BigReal half = BigReal(1, PrecisionContext{}) / 2;
    return pow(z, BigComplex(std::move(half)));
}

BigComplex pow(const BigComplex& base, const BigComplex& exponent) {
    if (base.real().is_zero() && base.imag().is_zero()) {
        if (exponent.is_real() && exponent.real().sign() > 0) return BigComplex(0L);
        throw domain_error("pow: zero base with non-positive-real exponent");
    }
    if (exponent.real().is_zero() && exponent.imag().is_zero())
        return BigComplex(1L);
    if (base.is_real() && exponent.is_real() && base.real().sign() > 0)
        return BigComplex(pow(base.real(), exponent.real()));
    return exp(exponent * log(base));
}

}  // namespace gammakit
