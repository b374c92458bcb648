#pragma once

#include "symfunc/partitions.hpp"
#include "symfunc/polynomial.hpp"
#include "symfunc/qt_arith.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symfunc {

enum class Basis { m, h, e, p, s };

std::string basis_name(Basis b);
Basis parse_basis(std::string_view name);

using Terms = std::map<Partition, QTRational, GradedOrder>;

class SymFunc {
public:
    explicit SymFunc(Basis b = Basis::s) : basis_(b) {}
    SymFunc(Basis b, const Partition& lambda, const QTRational& c = 1);
    static SymFunc constant(const QTRational& c, Basis b = Basis::s) { return {b, Partition{}, c}; }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QTRational coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const QTRational& c);
    // -1 for the zero function.
    int max_degree() const;
    SymFunc homogeneous_part(int d) const;

    SymFunc& operator+=(const SymFunc& g);
    SymFunc& operator-=(const SymFunc& g);
    friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
    friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
    friend SymFunc operator-(const SymFunc& f);
    friend SymFunc operator*(const QTRational& c, const SymFunc& f);
    // Structural equality: same basis and same terms.
    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.basis_ == b.basis_ && a.terms_ == b.terms_; }

    template <class F>
    SymFunc map_coefficients(F f) const {
        SymFunc r(basis_);
        for (const auto& [lam, c] : terms_) r.add_term(lam, f(c));
        return r;
    }

    std::string str() const;

private:
    Basis basis_;
    Terms terms_;
};

// Elements of the two-sided tensor product, indexed by pairs.
struct Tensor {
    Basis left = Basis::m;
    Basis right = Basis::m;
    std::map<std::pair<Partition, Partition>, QTRational> terms;
    void add_term(const Partition& a, const Partition& b, const QTRational& c);
};

// Ratio of two monomial alphabets, used as a plethystic scaling factor:
// p_r -> (p_r[num] / p_r[den]) p_r.
struct PlethysticFactor {
    MonomialSum num = MonomialSum::one();
    MonomialSum den = MonomialSum::one();
    QTRational power_sum(int r) const;
};

// (1 - t)/(1 - q) and its inverse.
PlethysticFactor macdonald_factor();
PlethysticFactor macdonald_factor_inverse();

struct AlphabetSpec {
    struct Finite {
        int n;
    };
    struct Scaled {
        PlethysticFactor factor;
    };
    std::variant<Finite, Scaled> kind;
};

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
QTRational hall_inner(const SymFunc& f, const SymFunc& g);
SymFunc omega_involution(const SymFunc& f);
SymFunc skew_schur(const Partition& lambda, const Partition& mu);
// Dual Jacobi-Trudi form det(e_{lambda'_i - mu'_j - i + j}).
SymFunc skew_schur_dual(const Partition& lambda, const Partition& mu);
std::map<std::pair<Partition, Partition>, BigInt> lr_coefficients(const Partition& lambda);
SymFunc plethysm_scale(const SymFunc& f, const PlethysticFactor& factor);
Polynomial evaluate(const SymFunc& f, int n);
std::variant<Polynomial, SymFunc> apply_alphabet(const SymFunc& f, const AlphabetSpec& a);
std::vector<std::pair<int, SymFunc>> translate(const SymFunc& f, std::optional<int> degree_cap = std::nullopt);
// Coefficient of z^k in f(X + z), i.e. the skewing operator for h_k.
SymFunc skew_by_h(const SymFunc& f, int k);

Tensor coproduct(const SymFunc& f);
Tensor convert(const Tensor& x, Basis left, Basis right);

// Cauchy kernel check sum_l P_l(X) Q_l(Y) = Omega(XY factor) through
// bidegree deg. The lists are indexed by enumerate_upto(deg).
bool kernel_check(const std::vector<SymFunc>& basisP, const std::vector<SymFunc>& basisQ, int deg,
                  const std::optional<PlethysticFactor>& factor = std::nullopt);

// Expansion of a homogeneous-by-degree element in a basis b_lambda whose
// Schur expansion is s_lambda plus terms of strictly lower degree.
Terms expand_in_schur_leading_basis(const SymFunc& f, const std::function<SymFunc(const Partition&)>& element);

// Determinant of an n x n matrix whose entries lie in a multiplicative
// basis (h, e or p), by Laplace expansion memoized on used columns.
SymFunc determinant(int n, Basis b, const std::function<SymFunc(int, int)>& entry);

// Product in a multiplicative basis: b_lambda b_mu = b_{lambda union mu}.
SymFunc union_product(const SymFunc& f, const SymFunc& g);

// Transition matrix of a classical basis into m, for one degree: row i is
// the m-expansion of X_{lambda_i}, lambda_i = enumerate(n)[i].
const std::vector<std::vector<BigRational>>& to_m_matrix(Basis b, int n);
const std::vector<std::vector<BigRational>>& from_m_matrix(Basis b, int n);

// Kostka numbers via semistandard tableaux counting (independent of the
// determinant route; used in tests).
BigInt kostka(const Partition& lambda, const Partition& mu);

}  // namespace symfunc
