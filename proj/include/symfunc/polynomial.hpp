#pragma once

#include "symfunc/qt_arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace symfunc {

// Polynomial in x_1..x_n over Q(q,t).
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(int nvars = 0) : n_(nvars) {}
    static Polynomial constant(int nvars, const QTRational& c);
    static Polynomial variable(int nvars, int i);  // x_{i+1}, 0-based

    int nvars() const { return n_; }
    const std::map<Exponents, QTRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QTRational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const QTRational& c);
    int total_degree() const;

    Polynomial& operator+=(const Polynomial& b);
    Polynomial& operator-=(const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const QTRational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    // Terms of total degree exactly d.
    Polynomial homogeneous_part(int d) const;
    // Drop terms of total degree above d.
    Polynomial truncate(int d) const;
    // x_n -> 0, result in n-1 variables.
    Polynomial drop_last_variable() const;
    // Extend to n+1 variables (new variable absent).
    Polynomial add_variable() const;
    // x_i -> c x_i.
    Polynomial scale_variable(int i, const QTRational& c) const;
    // Apply a coefficient map.
    template <class F>
    Polynomial map_coefficients(F f) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }
    Polynomial swap_variables(int i, int j) const;
    bool is_symmetric() const;
    // Exact quotient by (x_i - x_j); throws std::logic_error when inexact.
    Polynomial divide_by_difference(int i, int j) const;

    std::string str() const;

private:
    int n_;
    std::map<Exponents, QTRational> terms_;
};

}  // namespace symfunc
