#pragma once

#include "symfunc/macdonald.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace symfunc {

using LetterAlphabet = std::vector<QTRational>;

// Values substituted for q and t inside the resultant functions. The
// default keeps both symbolic.
struct QTParams {
    QTRational q = QTRational::q();
    QTRational t = QTRational::t();

    // alpha = t/q, beta = 1/t
    static QTParams from_alpha_beta(const BigRational& alpha, const BigRational& beta);
};

enum class ResultantKind { W, V, w, v, Theta, Phi };

// Products over x in X, y in Y:
//   W: (x - qy/t)/(x - y)            V: (x - ty/q)/(x - y)
//   v: (x - ty)/(x - qy)             w: (x - y/t)/(x - y/q)
//   Theta = v W                      Phi = V w
// eps_q replaces q by -q in these formulas (not in the letters). Throws
// PoleError on a vanishing denominator.
QTRational resultant_fn(ResultantKind kind, const LetterAlphabet& X, const LetterAlphabet& Y, bool eps_q = false,
                        const QTParams& params = {});

// sum over X' + X'' = X with |X'| = k of Phi(X':X'') - Phi(X'':X') is zero.
// Requires 1 <= k < |X|.
bool check_phi_split(const LetterAlphabet& X, int k, const QTParams& params = {});

// sum_{s=0}^k (q;t)_s/(t;t)_s sum_{|X'| = k-s}
//   ( w(z:X'') V(z:t^{s-1}X'') W(z:t^s X') Phi(X':X'') - w(z:X') Phi(X'':X') ) == 0
bool check_final_identity(const LetterAlphabet& A, int k, const QTRational& z, const QTParams& params = {});

enum class HKind { H, Htilde, G };

// H  = (1 + q^a t^{l+1})/(1 - q^{a+1} t^l)
// H~ = (1 + q^{a+1} t^l)/(1 - q^a t^{l+1})
// G  = (1 - q^{2a+2} t^{2l})/(1 - q^{2a} t^{2l+2}), so that G H = H~.
QTRational h_factor(const Partition& lambda, Box s, HKind kind);

// a_k = q^{mu_k} t^{m-k}, m the length of mu.
LetterAlphabet kawanaka_letters(const Partition& mu);

// Omega((t - eps q)(B_lambda - B_mu)) Omega((q^2 - t^2) R~_{lambda/mu}(q^2, t^2)), lambda/mu a vertical strip.
QTRational proof_L(const Partition& lambda, const Partition& mu);
// Omega((t - eps q)(B_gamma - B_mu)) Omega((t^2 - q^2) R_{mu/gamma}(q^2, t^2)), mu/gamma a vertical strip.
QTRational proof_R(const Partition& mu, const Partition& gamma);

// sum_{lambda/mu vertical k-strip} L(lambda, mu)
//   == sum_s (-q;t)_s/(t;t)_s sum_{mu/gamma vertical (k-s)-strip} R(mu, gamma).
// For mu with distinct parts each L and R is also compared with its
// product form in Phi, w, V, W over kawanaka_letters(mu).
bool lr_proof_terms(const Partition& mu, int k);

// Both sides of sum_lambda s_lambda(x_1..x_n) = prod 1/(1-x_i) prod_{i<j} 1/(1-x_i x_j)
// through total degree deg.
struct IdentitySides {
    Polynomial lhs, rhs;
};
IdentitySides schur_identity_sides(int n, int deg);
bool verify_schur_identity(int n, int deg);

struct DegreeCheck {
    int d = 0;
    bool equal = false;
};
struct KawanakaReport {
    int n = 0;
    int deg = 0;
    bool equal = false;
    std::vector<DegreeCheck> per_degree;
};

// sum_lambda prod_s H_lambda(s) P_lambda(X; q^2, t^2) against
// prod_i (-t x_i; q)_inf/(x_i; q)_inf prod_{i<j} (t^2 x_i x_j; q^2)_inf/(x_i x_j; q^2)_inf
// in n variables through total degree deg.
IdentitySides kawanaka_sides(int n, int deg);
KawanakaReport verify_kawanaka(int n, int deg);
// Both Kawanaka sides at q = -t equal the Schur sides.
bool kawanaka_schur_degeneration(int n, int deg);

// Rationals p/r with 1 <= |p|, r <= 50 from a seeded generator.
class SampleGenerator {
public:
    explicit SampleGenerator(std::uint64_t seed = 1) : rng_(seed) {}
    BigRational next();
    // n pairwise distinct nonzero letters
    LetterAlphabet letters(int n);

private:
    std::mt19937_64 rng_;
};

}  // namespace symfunc
