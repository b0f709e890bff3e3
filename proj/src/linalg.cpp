#include "gammakit/linalg.hpp"

#include <utility>

namespace gammakit::linalg {

namespace {

BigReal matrix_scale(const std::vector<std::vector<BigReal>>& a) {
    BigReal scale(0);
    for (const auto& row : a)
        for (const auto& x : row) scale = max(scale, abs(x));
    return scale;
}

BigReal pivot_floor(const BigReal& scale, PrecisionContext ctx) {
    return scale * pow(BigReal(10, ctx), static_cast<long>(5 - ctx.digits));
}

}  // namespace

std::vector<BigReal> solve_dense(std::vector<std::vector<BigReal>> a,
                                 std::vector<BigReal> rhs, PrecisionContext ctx) {
    const size_t n = a.size();
    if (n == 0 || rhs.size() != n)
        throw argument_error("solve_dense: shape mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw argument_error("solve_dense: matrix must be square");

    const BigReal tiny = pivot_floor(matrix_scale(a), ctx);

    for (size_t col = 0; col < n; ++col) {
        size_t best = col;
        BigReal best_mag = abs(a[col][col]);
        for (size_t i = col + 1; i < n; ++i) {
            BigReal mag = abs(a[i][col]);
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (!(best_mag > tiny))
            throw conditioning_error("solve_dense: system numerically singular at working precision");
        if (best != col) {
            std::swap(a[best], a[col]);
            std::swap(rhs[best], rhs[col]);
        }
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            BigReal factor = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
            rhs[i] -= factor * rhs[col];
        }
    }

    std::vector<BigReal> x(n, BigReal(0, ctx));
    for (size_t i = n; i-- > 0;) {
        BigReal acc = rhs[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

std::vector<BigReal> solve_least_squares(std::vector<std::vector<BigReal>> a,
                                         std::vector<BigReal> rhs, PrecisionContext ctx) {
    const size_t m = a.size();
    if (m == 0 || rhs.size() != m)
        throw argument_error("solve_least_squares: shape mismatch");
    const size_t n = a[0].size();
    if (n > m) throw argument_error("solve_least_squares: more unknowns than rows");
    for (const auto& row : a)
        if (row.size() != n) throw argument_error("solve_least_squares: ragged matrix");

    const BigReal tiny = pivot_floor(matrix_scale(a), ctx);

    // Householder reflections, applied column by column to A and the rhs.
    for (size_t col = 0; col < n; ++col) {
        BigReal norm2(0, ctx);
        for (size_t i = col; i < m; ++i) norm2 += a[i][col] * a[i][col];
        BigReal norm = sqrt(norm2);
        if (!(norm > tiny))
            throw conditioning_error("solve_least_squares: rank deficient at working precision");

        BigReal alpha = a[col][col].sign() > 0 ? -norm : norm;
        std::vector<BigReal> v;
        v.reserve(m - col);
        v.push_back(a[col][col] - alpha);
        for (size_t i = col + 1; i < m; ++i) v.push_back(a[i][col]);
        BigReal vtv(0, ctx);
        for (const auto& vi : v) vtv += vi * vi;
        if (vtv.is_zero()) continue;  // column already reduced

        auto apply = [&](auto&& get, auto&& set) {
            BigReal dot(0, ctx);
            for (size_t i = col; i < m; ++i) dot += v[i - col] * get(i);
            BigReal coeff = (dot * 2) / vtv;
            for (size_t i = col; i < m; ++i) set(i, get(i) - coeff * v[i - col]);
        };
        for (size_t j = col; j < n; ++j)
            apply([&](size_t i) { return a[i][j]; }, [&](size_t i, BigReal val) { a[i][j] = std::move(val); });
        apply([&](size_t i) { return rhs[i]; }, [&](size_t i, BigReal val) { rhs[i] = std::move(val); });
    }

    std::vector<BigReal> x(n, BigReal(0, ctx));
    for (size_t i = n; i-- > 0;) {
        BigReal acc = rhs[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace gammakit::linalg
