#include "bellcong/mod_polynomial.hpp"

namespace bellcong {

ModPolynomial::ModPolynomial(const PrimeModulus& p, std::vector<uint64_t> coeffs)
    : p_(p.value()), c_(std::move(coeffs)) {
    for (uint64_t& c : c_) c %= p_;
    trim();
}

ModPolynomial ModPolynomial::from_reduced(const PrimeModulus& p, std::vector<uint64_t> coeffs) {
    ModPolynomial out(p);
    out.c_ = std::move(coeffs);
    out.trim();
    return out;
}

ModPolynomial ModPolynomial::monomial(const PrimeModulus& p, uint64_t c, size_t degree) {
    ModPolynomial out(p);
    c %= p.value();
    if (c != 0) {
        out.c_.assign(degree + 1, 0);
        out.c_[degree] = c;
    }
    return out;
}

ModPolynomial& ModPolynomial::operator+=(const ModPolynomial& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPolynomial& ModPolynomial::operator-=(const ModPolynomial& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPolynomial ModPolynomial::scaled(uint64_t s) const {
    s %= p_;
    ModPolynomial out = *this;
    for (uint64_t& c : out.c_) c = mulmod(c, s, p_);
    out.trim();
    return out;
}

ModPolynomial ModPolynomial::shifted(size_t k) const {
    ModPolynomial out = *this;
    if (!out.c_.empty() && k > 0) {
        out.c_.insert(out.c_.begin(), k, 0);
    }
    return out;
}

void ModPolynomial::add_scaled(const ModPolynomial& q, uint64_t s) {
    check_same(q);
    s %= p_;
    if (s == 0 || q.is_zero()) return;
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), 0);
    for (size_t i = 0; i < q.c_.size(); ++i) {
        c_[i] = addmod(c_[i], mulmod(q.c_[i], s, p_), p_);
    }
    trim();
}

uint64_t ModPolynomial::eval(uint64_t x) const {
    x %= p_;
    uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = addmod(mulmod(acc, x, p_), c_[i], p_);
    }
    return acc;
}

bool operator==(const ModPolynomial& a, const ModPolynomial& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

std::string ModPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(c_[d]);
        } else {
            if (c_[d] != 1) out += std::to_string(c_[d]) + "*";
            out += d == 1 ? "x" : "x^" + std::to_string(d);
        }
    }
    return out;
}

void ModPolynomial::check_same(const ModPolynomial& o) const {
    if (p_ != o.p_) {
        throw ModulusMismatchError("ModPolynomial: mixed moduli " + std::to_string(p_) + " and " +
                                   std::to_string(o.p_));
    }
}

void ModPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPolynomial reduce_mod(const IntPolynomial& poly, const PrimeModulus& p) {
    std::vector<uint64_t> coeffs(poly.size());
    for (size_t d = 0; d < poly.size(); ++d) {
        coeffs[d] = poly.coeff(d).mod_u64(p.value());
    }
    return ModPolynomial::from_reduced(p, std::move(coeffs));
}

}  // namespace bellcong
