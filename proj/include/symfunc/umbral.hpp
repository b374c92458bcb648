#pragma once

#include "symfunc/symfunc.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace symfunc {

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Truncated power series c_1 z + c_2 z^2 + ... + c_N z^N with c_1 != 0.
class DeltaSeries {
public:
    // coeffs[0] is the coefficient of z.
    explicit DeltaSeries(std::vector<BigRational> coeffs);

    static DeltaSeries identity(int order);
    static DeltaSeries exp_minus_one(int order);       // e^z - 1
    static DeltaSeries one_minus_exp_neg(int order);   // 1 - e^{-z}
    static DeltaSeries log_one_plus(int order);        // log(1 + z)
    static DeltaSeries neg_log_one_minus(int order);   // -log(1 - z)
    static DeltaSeries mobius(int order);              // z/(1 - z)
    static DeltaSeries mobius_inv(int order);          // z/(1 + z)
    // exp-1, neg-exp, mobius, mobius-inv, log1p
    static std::optional<DeltaSeries> named(std::string_view name, int order);

    int order() const { return static_cast<int>(c_.size()); }
    // Coefficient of z^n; zero outside 1..order.
    BigRational coeff(int n) const;
    const std::vector<BigRational>& coeffs() const { return c_; }
    // Dense coefficients of f^k, indices 0..order.
    std::vector<BigRational> power(int k) const;
    // -f(-z)
    DeltaSeries reflect() const;

    friend bool operator==(const DeltaSeries& a, const DeltaSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<BigRational> c_;
};

// f(g(z)) truncated at the common order.
DeltaSeries compose(const DeltaSeries& f, const DeltaSeries& g);
DeltaSeries revert(const DeltaSeries& f);

// J[n-1][k-1] = [y^n] f(y)^k for 1 <= k <= n <= order.
// jabotinsky(f) * jabotinsky(g) == jabotinsky(compose(g, f)).
RationalMatrix jabotinsky(const DeltaSeries& f);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

// How a series seeds the generators r_n with sum r_n z^n = prod 1/(1 - x G(z)).
// generating: G = f. associated: G = revert(f), so that the binomial
// sequence sum_k [z^n]G^k x^k/k! is the one associated to f (for
// f = e^z - 1 this is the falling factorial (x)_n / n!).
enum class UmbralConvention { associated, generating };

DeltaSeries generator_series(const DeltaSeries& f, UmbralConvention conv);

// r_n = sum_k [z^n] G^k h_k, in the h basis.
SymFunc generalized_h(const DeltaSeries& f, int n, UmbralConvention conv = UmbralConvention::associated);
// c_n = sum_k [z^n] (-G(-z))^k e_k, in the e basis.
SymFunc generalized_e(const DeltaSeries& f, int n, UmbralConvention conv = UmbralConvention::associated);

// det(r_{lambda_i + j - i}), in the s basis.
SymFunc lr_basis(const DeltaSeries& f, const Partition& lambda, UmbralConvention conv = UmbralConvention::associated);
// det(c_{lambda'_i + j - i}), in the s basis.
SymFunc lr_basis_columns(const DeltaSeries& f, const Partition& lambda,
                         UmbralConvention conv = UmbralConvention::associated);
// Q_lambda = s_lambda[F(Y)] with p_r[F(Y)] = sum_m [u^m] F(u)^r p_m and F the
// compositional inverse of G, truncated above degree deg. Dual to lr_basis
// under the Hall inner product.
SymFunc dual_basis(const DeltaSeries& f, const Partition& lambda, int deg,
                   UmbralConvention conv = UmbralConvention::associated);

// Coefficients of P_lambda(X + X') in the basis P_mu(X) P_nu(X').
std::map<std::pair<Partition, Partition>, QTRational> lr_structure_constants(const DeltaSeries& f, const Partition& lambda,
                                                                             UmbralConvention conv = UmbralConvention::associated);

// Rows and columns indexed by all partitions of size 0..deg in graded
// order; entries[i][j] is the coefficient of s_{index[i]} in
// lr_basis(index[j]).
struct TransitionMatrix {
    std::vector<Partition> index;
    RationalMatrix entries;
    const BigRational& at(const Partition& row, const Partition& col) const;
};

TransitionMatrix transition_matrix(const DeltaSeries& f, int deg, UmbralConvention conv = UmbralConvention::associated);

// E[k-1][n-1] = M[(k),(n)] * n!/k! for 1 <= k, n <= deg; throws if an entry
// is not an integer.
std::vector<std::vector<BigInt>> stirling_lah_extract(const TransitionMatrix& m, int deg);

}  // namespace symfunc
