#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "gammakit/errors.hpp"

namespace gammakit {

// Working precision, expressed in significant decimal digits.  Every BigReal
// carries the binary precision derived from the context it was created with;
// arithmetic widens to the larger operand precision, so a context only has to
// be named where values enter the computation.
struct PrecisionContext {
    int digits = 50;

    PrecisionContext() = default;
    explicit PrecisionContext(int d) : digits(d) {
        if (d < 1) throw argument_error("PrecisionContext: digits must be positive");
    }

    // Binary mantissa bits covering `digits` decimals, plus guard bits.
    mpfr_prec_t bits() const noexcept;
};

// Extended-precision real number (MPFR-backed, round-to-nearest throughout).
// Values are immutable in practice: every operation returns a fresh value, so
// sharing across threads is safe.
class BigReal {
public:
    BigReal();                                 // NaN at default precision
    explicit BigReal(PrecisionContext ctx);    // NaN at ctx precision
    BigReal(long value, PrecisionContext ctx = {});
    BigReal(int value, PrecisionContext ctx = {}) : BigReal(static_cast<long>(value), ctx) {}

    static BigReal from_double(double value, PrecisionContext ctx = {});
    static BigReal from_string(std::string_view text, PrecisionContext ctx = {});

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

    bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }

    // Scientific-notation decimal string with the given significant digits.
    std::string str(int significant_digits) const;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator+(long a, const BigReal& b) { return b + a; }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator/(long a, const BigReal& b);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0 && !a.is_nan() && !b.is_nan(); }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    // Raw handle for interop with mpfr routines.
    mpfr_srcptr raw() const noexcept { return v_; }
    mpfr_ptr raw() noexcept { return v_; }

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);   // x >= 0 required
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);    // x > 0 required
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& base, const BigReal& exponent);  // base > 0
BigReal pow(const BigReal& base, long exponent);
BigReal floor(const BigReal& x);
BigReal round_nearest(const BigReal& x);  // halfway cases away from zero
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

BigReal pi(PrecisionContext ctx);
BigReal sqrt_two_pi(PrecisionContext ctx);
BigReal factorial(unsigned long n, PrecisionContext ctx);
BigReal exp2_int(long k, PrecisionContext ctx);  // 2^k, exact

}  // namespace gammakit
