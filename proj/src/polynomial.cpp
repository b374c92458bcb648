#include "symfunc/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace symfunc {

Polynomial Polynomial::constant(int nvars, const QTRational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    Polynomial p(nvars);
    p.add_term(e, 1);
    return p;
}

QTRational Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QTRational() : it->second;
}

void Polynomial::add_term(const Exponents& e, const QTRational& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
    if (b.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
    if (b.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(a.n_);
    Polynomial::Exponents e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial operator*(const QTRational& c, const Polynomial& a) {
    Polynomial r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
    return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::truncate(int d) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= d) r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::drop_last_variable() const {
    if (n_ == 0) throw std::logic_error("no variable to drop");
    Polynomial r(n_ - 1);
    for (const auto& [e, c] : terms_)
        if (e.back() == 0) r.terms_.emplace(Exponents(e.begin(), e.end() - 1), c);
    return r;
}

Polynomial Polynomial::add_variable() const {
    Polynomial r(n_ + 1);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.push_back(0);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

Polynomial Polynomial::scale_variable(int i, const QTRational& c) const {
    Polynomial r(n_);
    for (const auto& [e, x] : terms_) r.add_term(e, x * c.pow(e[static_cast<std::size_t>(i)]));
    return r;
}

Polynomial Polynomial::swap_variables(int i, int j) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

bool Polynomial::is_symmetric() const {
    for (int i = 0; i + 1 < n_; ++i)
        if (swap_variables(i, i + 1) != *this) return false;
    return true;
}

Polynomial Polynomial::divide_by_difference(int i, int j) const {
    // Write f = sum_k F_k x_i^k and solve F = (x_i - x_j) Q from the top:
    // Q_{k-1} = F_k + x_j Q_k.
    auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    std::map<int, Polynomial> slices;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        int k = f[ui];
        f[ui] = 0;
        auto it = slices.try_emplace(k, n_).first;
        it->second.add_term(f, c);
    }
    Polynomial quotient(n_);
    if (slices.empty()) return quotient;
    int top = slices.rbegin()->first;
    Polynomial carry(n_);  // Q_k
    for (int k = top; k >= 1; --k) {
        Polynomial qk(n_);  // Q_{k-1} = F_k + x_j Q_k
        auto it = slices.find(k);
        if (it != slices.end()) qk += it->second;
        for (const auto& [e, c] : carry.terms_) {
            Exponents f = e;
            ++f[uj];
            qk.add_term(f, c);
        }
        for (const auto& [e, c] : qk.terms_) {
            Exponents f = e;
            f[ui] = k - 1;
            quotient.add_term(f, c);
        }
        carry = std::move(qk);
    }
    // remainder F_0 + x_j Q_0 must vanish
    Polynomial rem(n_);
    auto it0 = slices.find(0);
    if (it0 != slices.end()) rem += it0->second;
    for (const auto& [e, c] : carry.terms_) {
        Exponents f = e;
        ++f[uj];
        rem.add_term(f, c);
    }
    if (!rem.is_zero()) throw std::logic_error("inexact division by a variable difference");
    return quotient;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.str();
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int k = it->first[i];
            if (k == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace symfunc
