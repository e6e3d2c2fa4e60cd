#include "bellcong/power_series.hpp"

#include "bellcong/errors.hpp"

namespace bellcong {

RationalSeries series_exp(const RationalSeries& g) {
    if (!g[0].is_zero()) {
        throw Error("series_exp: constant term must be zero");
    }
    const size_t order = g.order();

    // kg[k] = k * g_k, precomputed once.
    std::vector<Rational> kg(order + 1);
    for (size_t k = 1; k <= order; ++k) {
        kg[k] = Rational(static_cast<long>(k)) * g[k];
    }

    RationalSeries f(order);
    f[0] = Rational(1);
    for (size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (size_t k = 1; k <= n; ++k) {
            if (kg[k].is_zero()) continue;
            acc += kg[k] * f[n - k];
        }
        f[n] = acc / Rational(static_cast<long>(n));
    }
    return f;
}

RationalSeries exp_x_minus_one(size_t order) {
    RationalSeries g(order);
    BigInt fact(1);
    for (size_t k = 1; k <= order; ++k) {
        fact *= BigInt(static_cast<unsigned long>(k));
        g[k] = Rational(BigInt(1), fact);
    }
    return g;
}

}  // namespace bellcong
