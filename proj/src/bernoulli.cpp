#include "gammakit/bernoulli.hpp"

#include <vector>

namespace gammakit {

namespace {

std::vector<mpq_class> build_table() {
    std::vector<mpq_class> b(kMaxBernoulliIndex + 1);
    b[0] = 1;
    for (int m = 1; m <= kMaxBernoulliIndex; ++m) {
        // C(m+1, j) B_j summed over j < m, then solved for B_m.
        mpq_class acc(0);
        mpz_class binom;
        for (int j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;  // odd Bernoulli numbers beyond B_1 vanish
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += mpq_class(binom) * b[j];
        }
        b[m] = -acc / (m + 1);
    }
    return b;
}

}  // namespace

const mpq_class& bernoulli_rational(int index) {
    if (index < 0 || index > kMaxBernoulliIndex)
        throw argument_error("bernoulli_rational: index out of range");
    static const std::vector<mpq_class> table = build_table();
    return table[static_cast<size_t>(index)];
}

BigReal bernoulli(int two_k, PrecisionContext ctx) {
    if (two_k < 2 || two_k > kMaxBernoulliIndex || two_k % 2 != 0)
        throw argument_error("bernoulli: argument must be even and in [2, 120]");
    return to_bigreal(bernoulli_rational(two_k), ctx);
}

BigReal to_bigreal(const mpq_class& q, PrecisionContext ctx) {
    BigReal r(ctx);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

}  // namespace gammakit
