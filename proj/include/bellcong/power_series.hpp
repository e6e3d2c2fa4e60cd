#pragma once

/// Truncated formal power series with exact rational coefficients,
/// represented mod x^{order+1}.

#include <cstddef>
#include <vector>

#include "bellcong/rational.hpp"

namespace bellcong {

class RationalSeries {
public:
    explicit RationalSeries(size_t order) : c_(order + 1) {}

    size_t order() const { return c_.size() - 1; }
    Rational& operator[](size_t i) { return c_.at(i); }
    const Rational& operator[](size_t i) const { return c_.at(i); }

private:
    std::vector<Rational> c_;
};

/// exp(g) for a series g with zero constant term, term by term with exact
/// rationals: f_0 = 1 and n f_n = sum_{k=1}^{n} k g_k f_{n-k}.
RationalSeries series_exp(const RationalSeries& g);

/// e^x - 1 truncated at the given order.
RationalSeries exp_x_minus_one(size_t order);

}  // namespace bellcong
