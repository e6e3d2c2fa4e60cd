#include "bellcong/sequences.hpp"

#include <string>

#include "bellcong/errors.hpp"
#include "bellcong/power_series.hpp"
#include "bellcong/rational.hpp"

namespace bellcong {

namespace {

void check_index_cap(size_t n, const Caps& caps, const char* what) {
    if (n > caps.max_bell_index) {
        throw ResourceLimitError(std::string(what) + ": index " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(caps.max_bell_index));
    }
}

// C(n, .) -> C(n+1, .), in place (descending k so each C(n, k-1) is still live).
void advance_pascal_row(std::vector<BigInt>& row) {
    row.emplace_back(1);
    for (size_t k = row.size() - 2; k >= 1; --k) {
        row[k] += row[k - 1];
    }
}

}  // namespace

std::vector<BigInt> bell_numbers(size_t n_max, const Caps& caps) {
    check_index_cap(n_max, caps, "bell_numbers");
    std::vector<BigInt> b;
    b.reserve(n_max + 1);
    b.emplace_back(1);
    std::vector<BigInt> row{BigInt(1)};
    for (size_t n = 0; n < n_max; ++n) {
        BigInt next;
        for (size_t k = 0; k <= n; ++k) {
            mpz_addmul(next.raw(), row[k].raw(), b[k].raw());
        }
        b.push_back(std::move(next));
        advance_pascal_row(row);
    }
    return b;
}

void stirling2_rows(size_t n_max,
                    const std::function<void(size_t, const std::vector<BigInt>&)>& sink,
                    const Caps& caps) {
    check_index_cap(n_max, caps, "stirling2_rows");
    std::vector<BigInt> prev;
    std::vector<BigInt> cur{BigInt(1)};
    sink(0, cur);
    for (size_t n = 1; n <= n_max; ++n) {
        prev.swap(cur);
        cur.assign(n + 1, BigInt());
        for (size_t k = 1; k <= n; ++k) {
            // S(n,k) = k S(n-1,k) + S(n-1,k-1)
            if (k < prev.size()) {
                mpz_mul_ui(cur[k].raw(), prev[k].raw(), static_cast<unsigned long>(k));
            }
            cur[k] += prev[k - 1];
        }
        sink(n, cur);
    }
}

std::vector<std::vector<BigInt>> stirling2_table(size_t n_max, const Caps& caps) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(n_max + 1);
    stirling2_rows(
        n_max, [&](size_t, const std::vector<BigInt>& row) { rows.push_back(row); }, caps);
    return rows;
}

BigInt stirling2_explicit(uint64_t n, uint64_t k) {
    BigInt sum;
    for (uint64_t j = 0; j <= k; ++j) {
        BigInt power;
        mpz_ui_pow_ui(power.raw(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
        BigInt binom;
        mpz_bin_uiui(binom.raw(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
        if ((k - j) & 1) {
            mpz_submul(sum.raw(), binom.raw(), power.raw());
        } else {
            mpz_addmul(sum.raw(), binom.raw(), power.raw());
        }
    }
    return sum.divide_exact(BigInt::factorial(k));
}

IntPolynomial bell_polynomial(size_t n, const Caps& caps) {
    IntPolynomial out;
    stirling2_rows(
        n,
        [&](size_t r, const std::vector<BigInt>& row) {
            if (r == n) out = IntPolynomial(row);
        },
        caps);
    return out;
}

std::vector<IntPolynomial> bell_polynomials(size_t n_max, const Caps& caps) {
    std::vector<IntPolynomial> polys;
    polys.reserve(n_max + 1);
    stirling2_rows(
        n_max,
        [&](size_t, const std::vector<BigInt>& row) { polys.emplace_back(row); },
        caps);
    return polys;
}

std::vector<IntPolynomial> bell_polynomials_via_recurrence(size_t n_max, const Caps& caps) {
    check_index_cap(n_max, caps, "bell_polynomials_via_recurrence");
    std::vector<IntPolynomial> polys;
    polys.reserve(n_max + 1);
    polys.push_back(IntPolynomial::constant(BigInt(1)));
    std::vector<BigInt> row{BigInt(1)};
    for (size_t m = 0; m < n_max; ++m) {
        IntPolynomial acc;
        for (size_t k = 0; k <= m; ++k) {
            acc.add_scaled(polys[k], row[k]);
        }
        polys.push_back(acc.shifted(1));
        advance_pascal_row(row);
    }
    return polys;
}

std::vector<BigInt> derangements(size_t n_max, const Caps& caps) {
    check_index_cap(n_max, caps, "derangements");
    std::vector<BigInt> d;
    d.reserve(n_max + 1);
    d.emplace_back(1);
    Rational sum(1);  // sum_{k<=n} (-1)^k / k!, starting at n = 0
    BigInt fact(1);
    for (size_t n = 1; n <= n_max; ++n) {
        fact *= BigInt(static_cast<unsigned long>(n));
        sum += Rational(BigInt((n & 1) ? -1 : 1), fact);
        d.push_back((Rational(fact) * sum).to_integer_exact());
    }
    return d;
}

std::vector<BigInt> egf_bell_oracle(size_t n_max, const Caps& caps) {
    check_index_cap(n_max, caps, "egf_bell_oracle");
    const RationalSeries f = series_exp(exp_x_minus_one(n_max));
    std::vector<BigInt> b;
    b.reserve(n_max + 1);
    BigInt fact(1);
    for (size_t n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= BigInt(static_cast<unsigned long>(n));
        b.push_back((Rational(fact) * f[n]).to_integer_exact());
    }
    return b;
}

std::vector<bool> root_ratio_monotonicity(size_t n_max, const Caps& caps) {
    if (n_max > caps.max_rootratio_n) {
        throw ResourceLimitError("root_ratio_monotonicity: n_max " + std::to_string(n_max) +
                                 " exceeds cap " + std::to_string(caps.max_rootratio_n));
    }
    std::vector<bool> out;
    if (n_max < 2) return out;
    const std::vector<BigInt> b = bell_numbers(n_max + 1, caps);
    out.reserve(n_max - 1);
    for (uint64_t n = 1; n <= n_max - 1; ++n) {
        const BigInt lhs = BigInt::pow(b[n + 1], 2 * n * (n + 2));
        const BigInt rhs =
            BigInt::pow(b[n], (n + 1) * (n + 2)) * BigInt::pow(b[n + 2], n * (n + 1));
        out.push_back(lhs > rhs);
    }
    return out;
}

}  // namespace bellcong
