#include "gammakit/kernels.hpp"

#include <algorithm>
#include <string>

#include "gammakit/bernoulli.hpp"

namespace gammakit {

bool is_nonpositive_integer(const BigComplex& z) {
    return z.imag().is_zero() && z.real().is_integer() && z.real().sign() <= 0;
}

namespace {

long pole_index(const BigComplex& z) { return -z.real().to_long(); }

[[noreturn]] void throw_pole(const BigComplex& z, const char* where) {
    long m = pole_index(z);
    throw pole_error(m, std::string(where) + ": gamma pole at z = -" + std::to_string(m));
}

}  // namespace

BigComplex sin_pi(const BigComplex& z) {
    BigReal k = round_nearest(z.real());
    BigComplex dz(z.real() - k, z.imag());

    // pi at the full precision the argument carries
    BigReal p;
    mpfr_set_prec(p.raw(), std::max(z.real().precision(), z.imag().precision()));
    mpfr_const_pi(p.raw(), MPFR_RNDN);
    BigComplex s = sin(p * dz);

    // parity of k decides the sign
    BigReal rem(k);
    mpfr_fmod(rem.raw(), k.raw(), BigReal(2).raw(), MPFR_RNDN);
    return rem.is_zero() ? s : -s;
}

ReferenceOracle::ReferenceOracle(int shift, int terms, PrecisionContext ctx)
    : shift_(shift), terms_(terms), ctx_(ctx) {
    if (shift < 10 || terms < 10)
        throw argument_error("ReferenceOracle: shift and terms must both be >= 10");
    if (2 * terms > kMaxBernoulliIndex)
        throw argument_error("ReferenceOracle: terms too large for the Bernoulli table");
    series_.reserve(static_cast<size_t>(terms));
    for (int k = 1; k <= terms; ++k) {
        mpq_class coeff = bernoulli_rational(2 * k) / mpq_class(2 * k * (2 * k - 1));
        series_.push_back(to_bigreal(coeff, ctx));
    }
}

BigComplex ReferenceOracle::log_gamma_right(const BigComplex& z) const {
    BigReal half = BigReal(1, ctx_) / 2;
    BigComplex w = z + shift_;
    BigComplex log_w = log(w);
    BigComplex u = BigComplex(1L, ctx_) / w;
    BigComplex u2 = u * u;

    // Horner over u^2: sum_k series[k] w^{1-2k} = u (s_1 + s_2 u^2 + ...)
    BigComplex tail(series_.back());
    for (int k = terms_ - 2; k >= 0; --k)
        tail = tail * u2 + BigComplex(series_[static_cast<size_t>(k)]);
    tail = tail * u;

    BigComplex lgw = (w - BigComplex(half)) * log_w - w +
                     BigComplex(log(pi(ctx_) * 2) * half) + tail;
    return lgw - log(rising_factorial(z, shift_));
}

BigComplex ReferenceOracle::log_gamma(const BigComplex& z) const {
    if (is_nonpositive_integer(z)) throw_pole(z, "log_gamma");
    BigReal half = BigReal(1, ctx_) / 2;
    if (z.real() >= half) return log_gamma_right(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    BigReal p = pi(ctx_);
    return BigComplex(log(p)) - log(sin_pi(z)) - log_gamma_right(1 - z);
}

BigComplex ReferenceOracle::gamma(const BigComplex& z) const { return exp(log_gamma(z)); }

BigComplex scaled_gamma(const BigComplex& z, const BigReal& r, const ReferenceOracle& oracle) {
    if (!(z.real() + r > 0))
        throw domain_error("scaled_gamma: requires Re(z + r) > 0");
    if (is_nonpositive_integer(z)) throw_pole(z, "scaled_gamma");
    BigReal half = BigReal(1, oracle.context()) / 2;
    BigComplex zr = z + BigComplex(r);
    return exp(oracle.log_gamma(z) + zr - (z - BigComplex(half)) * log(zr));
}

BigComplex rising_factorial(const BigComplex& z, int count) {
    if (count < 0) throw argument_error("rising_factorial: negative count");
    BigComplex acc(1L);
    for (int j = 0; j < count; ++j) acc = acc * (z + j);
    return acc;
}

BigComplex node_polynomial(const BigComplex& z, std::span<const BigReal> nodes) {
    BigComplex acc(1L);
    for (const BigReal& zk : nodes) acc = acc * (z - BigComplex(zk));
    return acc;
}

BigComplex lanczos_rational(int n, const BigComplex& z) {
    if (n < 0) throw argument_error("lanczos_rational: order must be >= 0");
    if (n == 0) return BigComplex(1L);
    if (is_nonpositive_integer(z) && z.real() > -n)
        throw_pole(z, "lanczos_rational");
    BigComplex num(1L);
    BigComplex den(1L);
    for (int i = 1; i <= n; ++i) num = num * (z - i);
    for (int i = 0; i < n; ++i) den = den * (z + i);
    return num / den;
}

std::vector<BigReal> stirling_series_coeffs(int count, PrecisionContext ctx) {
    if (count < 1 || count > 30)
        throw argument_error("stirling_series_coeffs: count must be in [1, 30]");

    // log-series coefficients s_j (zero for even j), then the series
    // exponential e_p via p e_p = sum_j j s_j e_{p-j}, all exact rationals.
    std::vector<mpq_class> s(static_cast<size_t>(count), mpq_class(0));
    for (int j = 1; j < count; j += 2)
        s[static_cast<size_t>(j)] = bernoulli_rational(j + 1) / mpq_class((j + 1) * j);

    std::vector<mpq_class> e(static_cast<size_t>(count));
    e[0] = 1;
    for (int p = 1; p < count; ++p) {
        mpq_class acc(0);
        for (int j = 1; j <= p; j += 2)
            acc += mpq_class(j) * s[static_cast<size_t>(j)] * e[static_cast<size_t>(p - j)];
        e[static_cast<size_t>(p)] = acc / p;
    }

    BigReal root = sqrt_two_pi(ctx);
    std::vector<BigReal> a;
    a.reserve(static_cast<size_t>(count));
    for (const mpq_class& ep : e) a.push_back(root * to_bigreal(ep, ctx));
    return a;
}

}  // namespace gammakit
