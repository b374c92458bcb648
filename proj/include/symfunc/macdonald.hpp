#pragma once

#include "symfunc/symfunc.hpp"

#include <utility>
#include <vector>

namespace symfunc {

enum class PieriKind { phi, psi, phi_prime, psi_prime };

// <p_l, p_m>_{q,t} = delta_{lm} z_l prod_i (1 - q^{l_i})/(1 - t^{l_i}).
QTRational qt_inner(const SymFunc& f, const SymFunc& g);

// P_lambda in the m basis, unit coefficient on m_lambda. Memoized.
const SymFunc& macdonald_P(const Partition& lambda);
// P_lambda / <P_lambda, P_lambda>_{q,t}, in the m basis.
SymFunc macdonald_Q(const Partition& lambda);
// Omega((t - q) B_lambda) = prod_s (1 - q^{a+1} t^l)/(1 - q^a t^{l+1}).
QTRational norm_formula(const Partition& lambda);

// phi and psi need lambda/mu a horizontal strip, the primed kinds a
// vertical strip; otherwise std::invalid_argument.
QTRational pieri_coeff(const Partition& lambda, const Partition& mu, PieriKind kind);

// Homogeneous f in the basis {P_mu}; the result is sorted in graded order.
std::vector<std::pair<Partition, QTRational>> expand_in_P(const SymFunc& f);

// P_lambda(X + z) = sum_mu c_mu P_mu(X) z^{|lambda| - |mu|}; returns (mu, c_mu).
std::vector<std::pair<Partition, QTRational>> recurrence_expand(const Partition& lambda);

// omega f((1 - q)/(1 - t) X)
SymFunc omega_qt(const SymFunc& f);

// sum_n g_n z^n = Omega_z(X (1 - t)/(1 - q)), in the h basis.
SymFunc g_gen(int n);

// D f = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) f(.., q x_i, ..) for
// symmetric f in n variables.
Polynomial operator_D_apply(const Polynomial& f, int n);
// sum_i q^{lambda_i} t^{n-i}
QTRational D_eigenvalue(const Partition& lambda, int n);

}  // namespace symfunc
