#pragma once

#include <complex>

#include "gammakit/precision.hpp"

namespace gammakit {

// Extended-precision complex number built on BigReal.  All multivalued
// functions (log, arg, pow, sqrt) use the principal branch, with the argument
// in (-pi, pi].
class BigComplex {
public:
    BigComplex() = default;
    explicit BigComplex(PrecisionContext ctx) : re_(ctx), im_(0, ctx) {}
    BigComplex(BigReal re) {  // NOLINT: implicit real->complex is intended
        mpfr_set_prec(im_.raw(), re.precision());
        mpfr_set_si(im_.raw(), 0, MPFR_RNDN);
        re_ = std::move(re);
    }
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(long re, PrecisionContext ctx = {}) : re_(re, ctx), im_(0, ctx) {}

    static BigComplex from_doubles(std::complex<double> z, PrecisionContext ctx = {}) {
        return {BigReal::from_double(z.real(), ctx), BigReal::from_double(z.imag(), ctx)};
    }

    const BigReal& real() const noexcept { return re_; }
    const BigReal& imag() const noexcept { return im_; }

    bool is_real() const noexcept { return im_.is_zero(); }
    bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

    std::complex<double> to_std() const noexcept { return {re_.to_double(), im_.to_double()}; }

    BigComplex operator-() const { return {-re_, -im_}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    friend BigComplex operator+(const BigComplex& a, long b) { return {a.re_ + b, a.im_}; }
    friend BigComplex operator-(const BigComplex& a, long b) { return {a.re_ - b, a.im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator*(const BigReal& b, const BigComplex& a) { return a * b; }
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re_ / b, a.im_ / b}; }
    friend BigComplex operator-(long a, const BigComplex& b) { return {a - b.re_, -b.im_}; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    BigReal re_;
    BigReal im_;
};

BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);  // principal, in (-pi, pi]
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch; z != 0
BigComplex sin(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);

// exp(exponent * log(base)) on the principal branch.  Real positive bases
// with real exponents go through the correctly rounded real power, so exact
// cases (integer powers, square roots of squares) come out exact.
BigComplex pow(const BigComplex& base, const BigComplex& exponent);

}  // namespace gammakit
