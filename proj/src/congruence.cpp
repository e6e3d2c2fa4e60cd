#include "bellcong/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "bellcong/errors.hpp"
#include "bellcong/modp_tables.hpp"
#include "bellcong/sequences.hpp"

namespace bellcong {

namespace {

struct NameEntry {
    Identity id;
    std::string_view name;
};

constexpr std::array<NameEntry, 9> kIdentityNames = {{
    {Identity::sun_zagier, "sun_zagier"},
    {Identity::thm1_1, "thm1_1"},
    {Identity::thm1_2, "thm1_2"},
    {Identity::touchard, "touchard"},
    {Identity::gertsch_robert, "gertsch_robert"},
    {Identity::lemma2_1_i, "lemma2_1_i"},
    {Identity::lemma2_1_ii, "lemma2_1_ii"},
    {Identity::recurrence2_1, "recurrence2_1"},
    {Identity::binom_corollary, "binom_corollary"},
}};

}  // namespace

std::string_view identity_name(Identity id) {
    for (const auto& e : kIdentityNames) {
        if (e.id == id) return e.name;
    }
    return "unknown";
}

std::optional<Identity> identity_from_name(std::string_view name) {
    for (const auto& e : kIdentityNames) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_hypothesis: return "skipped_hypothesis";
        case Status::error: return "error";
    }
    return "unknown";
}

std::optional<Status> status_from_name(std::string_view name) {
    for (Status s : {Status::pass, Status::fail, Status::skipped_hypothesis, Status::error}) {
        if (status_name(s) == name) return s;
    }
    return std::nullopt;
}

namespace {

struct Outcome {
    Status status = Status::pass;
    std::string lhs, rhs, note;
};

Outcome pass_out() { return {}; }
Outcome fail_out(std::string l, std::string r, std::string note = {}) {
    return {Status::fail, std::move(l), std::move(r), std::move(note)};
}
Outcome skip_out(std::string why) { return {Status::skipped_hypothesis, "", "", std::move(why)}; }

std::string fmt_valued(uint64_t p, const ValuedUnit& vu) {
    return std::to_string(p) + "^" + std::to_string(vu.valuation) + "*" +
           std::to_string(vu.unit.residue());
}

// Shared tables for one prime group of a sweep.
struct Tables {
    std::vector<uint64_t> bell;            // B_k mod p
    std::vector<ModPolynomial> polys;      // B_k(x) mod p
    std::vector<BigInt> derange;           // exact D_k
};

struct Needs {
    uint64_t bell_max = 0;
    uint64_t poly_max = 0;
    uint64_t der_max = 0;
    bool need_bell = false, need_poly = false, need_der = false;

    void bell(uint64_t i) {
        need_bell = true;
        bell_max = std::max(bell_max, i);
    }
    void poly(uint64_t i) {
        need_poly = true;
        poly_max = std::max(poly_max, i);
    }
    void der(uint64_t i) {
        need_der = true;
        der_max = std::max(der_max, i);
    }
    void merge(const Needs& o) {
        if (o.need_bell) bell(o.bell_max);
        if (o.need_poly) poly(o.poly_max);
        if (o.need_der) der(o.der_max);
    }
};

uint64_t require(const std::optional<uint64_t>& v, const char* what) {
    if (!v) throw HypothesisError(std::string("missing parameter ") + what);
    return *v;
}

uint32_t require_exponent(const std::optional<uint64_t>& v, const char* what) {
    const uint64_t x = require(v, what);
    if (x > 63) throw ResourceLimitError(std::string(what) + " too large");
    return static_cast<uint32_t>(x);
}

void check_positive_n(uint64_t n) {
    if (n == 0) throw HypothesisError("n must be positive");
}

uint64_t checked_prime_power(uint64_t p, uint32_t a, const Caps& caps) {
    if (a == 0) throw HypothesisError("exponent a must be positive");
    const uint64_t v = checked_pow_u64(p, a);
    if (v > caps.max_prime_power) {
        throw ResourceLimitError("p^a = " + std::to_string(v) + " exceeds cap " +
                                 std::to_string(caps.max_prime_power));
    }
    return v;
}

void check_stream_rows(uint64_t rows, const Caps& caps) {
    if (rows > caps.max_stream_rows) {
        throw ResourceLimitError("table of " + std::to_string(rows) + " rows exceeds cap " +
                                 std::to_string(caps.max_stream_rows));
    }
}

void check_exact_index(uint64_t i, const Caps& caps) {
    if (i > caps.max_bell_index) {
        throw ResourceLimitError("exact-sequence index " + std::to_string(i) + " exceeds cap " +
                                 std::to_string(caps.max_bell_index));
    }
}

// Validates one case against its identity's hypothesis arity and the caps,
// and reports which shared tables it consumes.  Throws on malformed input.
Needs case_needs(const CongruenceCase& c, const Caps& caps) {
    Needs nd;
    switch (c.id) {
        case Identity::sun_zagier: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t n = require(c.n, "n");
            check_positive_n(n);
            check_exact_index(n - 1, caps);
            nd.bell(pm.value() - 1);
            nd.der(n - 1);
            break;
        }
        case Identity::thm1_1: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t pp = checked_prime_power(pm.value(), require_exponent(c.a, "a"), caps);
            const uint64_t n = require(c.n, "n");
            check_positive_n(n);
            check_exact_index(n - 1, caps);
            check_stream_rows(pp - 1, caps);
            nd.bell(pp - 1);
            nd.der(n - 1);
            break;
        }
        case Identity::thm1_2: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t pp = checked_prime_power(pm.value(), require_exponent(c.a, "a"), caps);
            const uint64_t n = require(c.n, "n");
            check_positive_n(n);
            check_stream_rows(pp - 1, caps);
            nd.poly(pp - 1);
            break;
        }
        case Identity::touchard: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint32_t m = require_exponent(c.a, "m");
            const uint64_t n = require(c.n, "n");
            uint64_t pmv = 1;
            if (m > 0) {
                pmv = checked_pow_u64(pm.value(), m);
                if (pmv > caps.max_prime_power) {
                    throw ResourceLimitError("p^m exceeds cap " +
                                             std::to_string(caps.max_prime_power));
                }
            }
            if (n > caps.max_stream_rows) {
                throw ResourceLimitError("n exceeds streamed-row cap");
            }
            check_stream_rows(std::max(pmv + n, n + 1), caps);
            nd.bell(std::max(pmv + n, n + 1));
            break;
        }
        case Identity::gertsch_robert: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t pp = checked_prime_power(pm.value(), require_exponent(c.a, "a"), caps);
            const uint64_t n = require(c.n, "n");  // n >= 0 allowed
            if (n > caps.max_stream_rows) {
                throw ResourceLimitError("n exceeds streamed-row cap");
            }
            check_stream_rows(pp + n, caps);
            nd.poly(pp + n);
            break;
        }
        case Identity::lemma2_1_i: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t pp = checked_prime_power(pm.value(), require_exponent(c.a, "a"), caps);
            const uint64_t j = require(c.j, "j");
            const uint64_t k = require(c.k, "k");
            if (j > pp - 1 || k > pp - 1 || j + k > pp - 1) {
                throw HypothesisError("j + k exceeds p^a - 1");
            }
            break;
        }
        case Identity::lemma2_1_ii: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t pp = checked_prime_power(pm.value(), require_exponent(c.a, "a"), caps);
            check_stream_rows(pp, caps);
            nd.poly(pp);
            break;
        }
        case Identity::recurrence2_1: {
            check_exact_index(require(c.n, "n"), caps);
            break;
        }
        case Identity::binom_corollary: {
            const PrimeModulus pm(require(c.p, "p"));
            const uint64_t pp = checked_prime_power(pm.value(), require_exponent(c.a, "a"), caps);
            const uint64_t j = require(c.j, "j");
            if (j > pp - 1) throw HypothesisError("j exceeds p^a - 1");
            break;
        }
    }
    return nd;
}

// sum_{k=1}^{limit} B_k inv(-n)^k  vs  a_factor (-1)^{n-1} D_{n-1}  (mod p).
Outcome check_scalar_family(const PrimeModulus& pm, uint64_t limit, uint64_t a_factor, uint64_t n,
                            const std::vector<uint64_t>& bell,
                            const std::vector<BigInt>& derange) {
    const uint64_t p = pm.value();
    if (n % p == 0) return skip_out("p divides n");
    const uint64_t t = powmod(p - n % p, p - 2, p);  // inv(-n) mod p
    uint64_t acc = 0, tp = 1;
    for (uint64_t k = 1; k <= limit; ++k) {
        tp = mulmod(tp, t, p);
        acc = addmod(acc, mulmod(bell[k], tp, p), p);
    }
    uint64_t rhs = mulmod(a_factor % p, derange[n - 1].mod_u64(p), p);
    if ((n & 1) == 0) rhs = negmod(rhs, p);  // (-1)^{n-1}
    if (acc == rhs) return pass_out();
    return fail_out(std::to_string(acc), std::to_string(rhs));
}

Outcome check_touchard(const PrimeModulus& pm, uint64_t m, uint64_t n, uint64_t pm_val,
                       const std::vector<uint64_t>& bell) {
    const uint64_t p = pm.value();
    const uint64_t lhs = bell[pm_val + n];
    const uint64_t rhs = addmod(mulmod(m % p, bell[n], p), bell[n + 1], p);
    if (lhs == rhs) return pass_out();
    return fail_out(std::to_string(lhs), std::to_string(rhs));
}

Outcome check_thm1_2(const PrimeModulus& pm, uint32_t a, uint64_t n,
                     const std::vector<ModPolynomial>& polys) {
    if (n % pm.value() == 0) return skip_out("p divides n");
    const auto [lhs, rhs] = thm1_2_sides(pm, a, n, polys);
    if (lhs == rhs) return pass_out();
    return fail_out(lhs.to_string(), rhs.to_string());
}

Outcome check_gertsch_robert(const PrimeModulus& pm, uint32_t a, uint64_t n, uint64_t pp_val,
                             const std::vector<ModPolynomial>& polys) {
    ModPolynomial rhs = polys.at(n + 1);
    for (uint32_t r = 1; r <= a; ++r) {
        rhs += polys.at(n).shifted(checked_pow_u64(pm.value(), r));
    }
    const ModPolynomial& lhs = polys.at(pp_val + n);
    if (lhs == rhs) return pass_out();
    return fail_out(lhs.to_string(), rhs.to_string());
}

Outcome check_lemma2_1_ii(const PrimeModulus& pm, uint32_t a, uint64_t pp_val,
                          const std::vector<ModPolynomial>& polys) {
    std::vector<uint64_t> coeffs(pp_val + 1, 0);
    for (uint32_t r = 0; r <= a; ++r) coeffs[checked_pow_u64(pm.value(), r)] = 1;
    const ModPolynomial rhs = ModPolynomial::from_reduced(pm, std::move(coeffs));
    const ModPolynomial& lhs = polys.at(pp_val);
    if (lhs == rhs) return pass_out();
    return fail_out(lhs.to_string(), rhs.to_string());
}

// The binomial-ratio congruence read p-adically: both binomials are split as
// p^valuation * unit and must agree in valuation and unit mod p.  Mere
// residue comparison mod p would be weaker; both sides can be divisible by p,
// e.g. p = 2, j = k = 1.
Outcome check_lemma2_1_i(const PrimeModulus& pm, uint64_t pp_val, uint64_t j, uint64_t k) {
    const BigInt numer = binomial(BigInt(pp_val - 1 - k), j);
    const BigInt denom = binomial(-(BigInt(k) + BigInt(1)), j);
    const ValuedUnit vn = valued_unit_of(numer, pm);
    const ValuedUnit vd = valued_unit_of(denom, pm);
    if (vn.valuation == vd.valuation && vn.unit.residue() == vd.unit.residue()) {
        return pass_out();
    }
    return fail_out(fmt_valued(pm.value(), vn), fmt_valued(pm.value(), vd));
}

Outcome check_binom_corollary(const PrimeModulus& pm, uint64_t pp_val, uint64_t j) {
    const uint64_t p = pm.value();
    const uint64_t lhs = binomial(BigInt(pp_val - 1), j).mod_u64(p);
    const uint64_t rhs = (j & 1) ? negmod(1 % p, p) : 1 % p;
    if (lhs == rhs) return pass_out();
    return fail_out(std::to_string(lhs), std::to_string(rhs));
}

Outcome check_recurrence2_1(size_t n_max, const Caps& caps) {
    const auto stirling_path = bell_polynomials(n_max, caps);
    const auto recurrence_path = bell_polynomials_via_recurrence(n_max, caps);
    for (size_t i = 0; i < stirling_path.size(); ++i) {
        if (!(stirling_path[i] == recurrence_path[i])) {
            return fail_out(stirling_path[i].to_string(), recurrence_path[i].to_string(),
                            "first mismatch at index " + std::to_string(i));
        }
    }
    return pass_out();
}

// Dispatch on a validated case.  `tables` must cover the needs reported by
// case_needs for this case.
Outcome run_check(const CongruenceCase& c, const Tables& tables, const Caps& caps) {
    switch (c.id) {
        case Identity::sun_zagier: {
            const PrimeModulus pm(*c.p);
            return check_scalar_family(pm, pm.value() - 1, 1, *c.n, tables.bell, tables.derange);
        }
        case Identity::thm1_1: {
            const PrimeModulus pm(*c.p);
            const uint32_t a = static_cast<uint32_t>(*c.a);
            const uint64_t pp = checked_pow_u64(pm.value(), a);
            return check_scalar_family(pm, pp - 1, *c.a, *c.n, tables.bell, tables.derange);
        }
        case Identity::thm1_2: {
            const PrimeModulus pm(*c.p);
            return check_thm1_2(pm, static_cast<uint32_t>(*c.a), *c.n, tables.polys);
        }
        case Identity::touchard: {
            const PrimeModulus pm(*c.p);
            const uint32_t m = static_cast<uint32_t>(*c.a);
            const uint64_t pmv = m == 0 ? 1 : checked_pow_u64(pm.value(), m);
            return check_touchard(pm, *c.a, *c.n, pmv, tables.bell);
        }
        case Identity::gertsch_robert: {
            const PrimeModulus pm(*c.p);
            const uint32_t a = static_cast<uint32_t>(*c.a);
            return check_gertsch_robert(pm, a, *c.n, checked_pow_u64(pm.value(), a),
                                        tables.polys);
        }
        case Identity::lemma2_1_i: {
            const PrimeModulus pm(*c.p);
            const uint64_t pp = checked_pow_u64(pm.value(), static_cast<uint32_t>(*c.a));
            return check_lemma2_1_i(pm, pp, *c.j, *c.k);
        }
        case Identity::lemma2_1_ii: {
            const PrimeModulus pm(*c.p);
            const uint32_t a = static_cast<uint32_t>(*c.a);
            return check_lemma2_1_ii(pm, a, checked_pow_u64(pm.value(), a), tables.polys);
        }
        case Identity::recurrence2_1:
            return check_recurrence2_1(*c.n, caps);
        case Identity::binom_corollary: {
            const PrimeModulus pm(*c.p);
            const uint64_t pp = checked_pow_u64(pm.value(), static_cast<uint32_t>(*c.a));
            return check_binom_corollary(pm, pp, *c.j);
        }
    }
    throw Error("unknown identity");
}

VerificationReport finish(const CongruenceCase& c, Outcome o,
                          std::chrono::steady_clock::time_point t0) {
    VerificationReport r;
    r.c = c;
    r.status = o.status;
    r.lhs = std::move(o.lhs);
    r.rhs = std::move(o.rhs);
    r.note = std::move(o.note);
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
}

VerificationReport error_report(const CongruenceCase& c, const std::string& what) {
    VerificationReport r;
    r.c = c;
    r.status = Status::error;
    r.note = what;
    return r;
}

}  // namespace

std::pair<ModPolynomial, ModPolynomial> thm1_2_sides(const PrimeModulus& pm, uint32_t a,
                                                     uint64_t n,
                                                     const std::vector<ModPolynomial>& polys) {
    const uint64_t p = pm.value();
    check_positive_n(n);
    const uint64_t nn = n % p;
    if (nn == 0) throw HypothesisError("thm1_2_sides: p divides n");
    // Invertibility of -n mod p follows from p !| n, but assert it at runtime
    // rather than assume it.
    const uint64_t neg_n = p - nn;
    if (neg_n == 0) throw ZeroInverseError("thm1_2_sides: -n is not invertible mod p");
    const uint64_t t = powmod(neg_n, p - 2, p);
    const uint64_t pp = checked_pow_u64(p, a);

    ModPolynomial sum(pm);
    uint64_t tp = 1;
    for (uint64_t k = 1; k <= pp - 1; ++k) {
        tp = mulmod(tp, t, p);
        sum.add_scaled(polys.at(k), tp);
    }
    // (-x)^n * sum
    ModPolynomial lhs = sum.shifted(n);
    if (n & 1) lhs = lhs.scaled(p - 1);

    // Inner factor sum_{k=0}^{n-1} ((n-1)!/k!) (-x)^k; the factorial ratios
    // are exact integers (product of k+1..n-1) reduced mod p, never inverses.
    std::vector<uint64_t> inner(n, 0);
    BigInt ratio(1);
    for (uint64_t k = n; k-- > 0;) {
        uint64_t coeff = ratio.mod_u64(p);
        if (k & 1) coeff = negmod(coeff, p);
        inner[k] = coeff;
        if (k > 0) ratio *= BigInt(k);
    }
    const ModPolynomial inner_poly = ModPolynomial::from_reduced(pm, std::move(inner));

    ModPolynomial acc(pm);
    for (uint32_t r = 1; r <= a; ++r) {
        acc += inner_poly.shifted(checked_pow_u64(p, r));
    }
    return {std::move(lhs), acc.scaled(p - 1)};
}

VerificationReport CongruenceLab::verify(const CongruenceCase& c) const {
    const Needs nd = case_needs(c, caps_);
    Tables tables;
    if (nd.need_bell || nd.need_poly) {
        const PrimeModulus pm(*c.p);
        if (nd.need_bell) tables.bell = bell_numbers_modp(nd.bell_max, pm, cache_dir_, caps_);
        if (nd.need_poly) {
            tables.polys = bell_polynomials_modp(nd.poly_max, pm, cache_dir_, caps_);
        }
    }
    if (nd.need_der) tables.derange = derangements(nd.der_max, caps_);
    const auto t0 = std::chrono::steady_clock::now();
    return finish(c, run_check(c, tables, caps_), t0);
}

VerificationReport CongruenceLab::verify_sun_zagier(uint64_t p, uint64_t n) const {
    return verify({Identity::sun_zagier, p, std::nullopt, n, std::nullopt, std::nullopt});
}
VerificationReport CongruenceLab::verify_thm1_1(uint64_t p, uint32_t a, uint64_t n) const {
    return verify({Identity::thm1_1, p, a, n, std::nullopt, std::nullopt});
}
VerificationReport CongruenceLab::verify_thm1_2(uint64_t p, uint32_t a, uint64_t n) const {
    return verify({Identity::thm1_2, p, a, n, std::nullopt, std::nullopt});
}
VerificationReport CongruenceLab::verify_touchard(uint64_t p, uint32_t m, uint64_t n) const {
    return verify({Identity::touchard, p, m, n, std::nullopt, std::nullopt});
}
VerificationReport CongruenceLab::verify_gertsch_robert(uint64_t p, uint32_t a, uint64_t n) const {
    return verify({Identity::gertsch_robert, p, a, n, std::nullopt, std::nullopt});
}
VerificationReport CongruenceLab::verify_lemma2_1_i(uint64_t p, uint32_t a, uint64_t j,
                                                    uint64_t k) const {
    return verify({Identity::lemma2_1_i, p, a, std::nullopt, j, k});
}
VerificationReport CongruenceLab::verify_lemma2_1_ii(uint64_t p, uint32_t a) const {
    return verify({Identity::lemma2_1_ii, p, a, std::nullopt, std::nullopt, std::nullopt});
}
VerificationReport CongruenceLab::verify_binom_corollary(uint64_t p, uint32_t a,
                                                         uint64_t j) const {
    return verify({Identity::binom_corollary, p, a, std::nullopt, j, std::nullopt});
}
VerificationReport CongruenceLab::verify_recurrence2_1(size_t n_max) const {
    return verify({Identity::recurrence2_1, std::nullopt, std::nullopt,
                   static_cast<uint64_t>(n_max), std::nullopt, std::nullopt});
}

std::vector<VerificationReport> CongruenceLab::run_group(
    const std::vector<CongruenceCase>& cases) const {
    std::vector<VerificationReport> out(cases.size());
    std::vector<bool> done(cases.size(), false);

    Needs group_needs;
    for (size_t i = 0; i < cases.size(); ++i) {
        try {
            group_needs.merge(case_needs(cases[i], caps_));
        } catch (const std::exception& e) {
            out[i] = error_report(cases[i], e.what());
            done[i] = true;
        }
    }

    Tables tables;
    try {
        std::optional<PrimeModulus> pm;
        for (size_t i = 0; i < cases.size(); ++i) {
            if (!done[i] && cases[i].p) {
                pm.emplace(*cases[i].p);
                break;
            }
        }
        if (group_needs.need_bell) {
            tables.bell = bell_numbers_modp(group_needs.bell_max, *pm, cache_dir_, caps_);
        }
        if (group_needs.need_poly) {
            tables.polys = bell_polynomials_modp(group_needs.poly_max, *pm, cache_dir_, caps_);
        }
        if (group_needs.need_der) tables.derange = derangements(group_needs.der_max, caps_);
    } catch (const std::exception& e) {
        for (size_t i = 0; i < cases.size(); ++i) {
            if (!done[i]) {
                out[i] = error_report(cases[i], e.what());
                done[i] = true;
            }
        }
    }

    for (size_t i = 0; i < cases.size(); ++i) {
        if (done[i]) continue;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            out[i] = finish(cases[i], run_check(cases[i], tables, caps_), t0);
        } catch (const std::exception& e) {
            out[i] = error_report(cases[i], e.what());
        }
    }
    return out;
}

std::vector<VerificationReport> CongruenceLab::run_sweep(std::vector<CongruenceCase> grid,
                                                         unsigned parallelism) const {
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // Group by prime so each group's tables are built exactly once; cases
    // without a prime (recurrence2_1) share the key-0 group.
    std::map<uint64_t, std::vector<CongruenceCase>> by_prime;
    for (const CongruenceCase& c : grid) {
        by_prime[c.p.value_or(0)].push_back(c);
    }
    std::vector<const std::vector<CongruenceCase>*> groups;
    groups.reserve(by_prime.size());
    for (const auto& [p, cs] : by_prime) groups.push_back(&cs);

    std::vector<std::vector<VerificationReport>> results(groups.size());
    const unsigned jobs =
        std::min<size_t>(std::max(1u, parallelism), std::max<size_t>(groups.size(), 1));
    if (jobs <= 1) {
        for (size_t i = 0; i < groups.size(); ++i) results[i] = run_group(*groups[i]);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= groups.size()) return;
                results[i] = run_group(*groups[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }

    std::vector<VerificationReport> flat;
    flat.reserve(grid.size());
    for (auto& group_result : results) {
        for (auto& r : group_result) flat.push_back(std::move(r));
    }
    std::sort(flat.begin(), flat.end(),
              [](const VerificationReport& x, const VerificationReport& y) { return x.c < y.c; });
    return flat;
}

}  // namespace bellcong
