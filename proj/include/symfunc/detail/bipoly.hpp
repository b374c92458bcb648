#pragma once

// Dense integer polynomials used as the working representation of
// QTRational. UPoly is univariate in t, BPoly is a polynomial in q whose
// coefficients are UPolys. Both are kept trimmed: no trailing zero
// coefficients, and the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace symfunc::detail {

using UPoly = std::vector<mpz_class>;
using BPoly = std::vector<UPoly>;

void trim(UPoly& a);
void trim(BPoly& a);

inline bool is_zero(const UPoly& a) { return a.empty(); }
inline bool is_zero(const BPoly& a) { return a.empty(); }
inline int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
inline int degree(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly uconst(const mpz_class& c);
BPoly bconst(const mpz_class& c);
bool is_constant(const BPoly& a);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const mpz_class& c);
UPoly neg(const UPoly& a);
// Exact division; throws std::logic_error when b does not divide a.
UPoly divexact(const UPoly& a, const UPoly& b);
UPoly divexact(const UPoly& a, const mpz_class& c);
mpz_class content(const UPoly& a);
// Greatest common divisor over Q[t], returned primitive with positive
// leading coefficient. gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

BPoly add(const BPoly& a, const BPoly& b);
BPoly sub(const BPoly& a, const BPoly& b);
BPoly mul(const BPoly& a, const BPoly& b);
BPoly mul(const BPoly& a, const UPoly& c);
BPoly mul(const BPoly& a, const mpz_class& c);
BPoly neg(const BPoly& a);
BPoly divexact(const BPoly& a, const BPoly& b);
BPoly divexact(const BPoly& a, const UPoly& c);
BPoly divexact(const BPoly& a, const mpz_class& c);
mpz_class content(const BPoly& a);
// Gcd of the q-coefficients, as an element of Q[t] (primitive over Z).
UPoly content_t(const BPoly& a);
// Greatest common divisor over Q[q,t], primitive over Z with its
// lexicographically least term positive.
BPoly gcd(const BPoly& a, const BPoly& b);

// Sign of the lexicographically least (deg_q, deg_t) term.
int lex_least_sign(const BPoly& a);

// q^i t^j for i, j >= 0.
BPoly monomial(int i, int j, const mpz_class& c = 1);

// Substitutions.
BPoly scale_exponents(const BPoly& a, int kq, int kt);
BPoly swap_qt(const BPoly& a);
BPoly negate_q(const BPoly& a);

}  // namespace symfunc::detail
