#pragma once

// Exact arithmetic over Q(q,t).

#include "symfunc/detail/bipoly.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symfunc {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Raised when a denominator vanishes: evaluation at a pole, division by
// zero, or an Omega letter equal to 1.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& x);

// Sparse polynomial in q and t with rational coefficients.
class QTPoly {
public:
    using Key = std::pair<int, int>;  // (deg_q, deg_t)

    QTPoly() = default;
    QTPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
    static QTPoly monomial(int dq, int dt, const BigRational& c = 1);

    const std::map<Key, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigRational coeff(int dq, int dt) const;
    void add_term(int dq, int dt, const BigRational& c);

    friend QTPoly operator+(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator-(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator-(const QTPoly& a);
    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

    BigRational eval(const BigRational& q0, const BigRational& t0) const;

private:
    std::map<Key, BigRational> terms_;
};

// Element of Q(q,t) in canonical form. Internally numerator and denominator
// are integer polynomials, jointly primitive, coprime, and the denominator's
// lexicographically least term is positive.
class QTRational {
public:
    QTRational() = default;
    QTRational(long c);                // NOLINT(google-explicit-constructor)
    QTRational(const BigInt& c);       // NOLINT(google-explicit-constructor)
    QTRational(const BigRational& c);  // NOLINT(google-explicit-constructor)
    explicit QTRational(const QTPoly& p);
    QTRational(const QTPoly& num, const QTPoly& den);

    static QTRational q();
    static QTRational t();
    // q^a t^b, exponents of any sign.
    static QTRational monomial(int a, int b, const BigRational& c = 1);
    static QTRational from_parts(detail::BPoly num, detail::BPoly den);

    QTPoly numerator() const;
    QTPoly denominator() const;
    const detail::BPoly& num() const { return num_; }
    const detail::BPoly& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Valid only when is_constant().
    BigRational constant_value() const;

    QTRational& operator+=(const QTRational& b);
    QTRational& operator-=(const QTRational& b);
    QTRational& operator*=(const QTRational& b);
    QTRational& operator/=(const QTRational& b);
    friend QTRational operator+(QTRational a, const QTRational& b) { return a += b; }
    friend QTRational operator-(QTRational a, const QTRational& b) { return a -= b; }
    friend QTRational operator*(QTRational a, const QTRational& b) { return a *= b; }
    friend QTRational operator/(QTRational a, const QTRational& b) { return a /= b; }
    friend QTRational operator-(const QTRational& a);
    friend bool operator==(const QTRational& a, const QTRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QTRational& a, const QTRational& b) { return !(a == b); }

    QTRational pow(int e) const;
    QTRational inverse() const;

    BigRational eval(const BigRational& q0, const BigRational& t0) const;

    // q -> q^kq, t -> t^kt with kq, kt >= 1.
    QTRational scale_exponents(int kq, int kt) const;
    QTRational swap_qt() const;
    // q -> -q.
    QTRational negate_q() const;
    // General substitution q -> qv, t -> tv.
    QTRational substitute(const QTRational& qv, const QTRational& tv) const;

    std::string str() const;

private:
    void normalize();
    detail::BPoly num_;
    detail::BPoly den_{detail::UPoly{1}};
};

enum class QTOp { add, sub, mul, div };
QTRational qt_combine(QTOp op, const QTRational& a, const QTRational& b);
BigRational qt_eval(const QTRational& a, const BigRational& q0, const BigRational& t0);

// Parses expressions built from integers, q, t, + - * / ^ and parentheses.
// Accepts everything str() produces.
QTRational parse_qt(std::string_view text);

std::string to_string(const QTPoly& p);
inline std::string to_string(const QTRational& x) { return x.str(); }

struct MonomialLetter {
    int a = 0;
    int b = 0;
    bool eps = false;
    long mult = 1;
};

// Finite signed multiset of letters q^a t^b, each possibly carrying the
// formal-negation flag.
class MonomialSum {
public:
    struct Key {
        int a;
        int b;
        bool eps;
        auto operator<=>(const Key&) const = default;
    };

    MonomialSum() = default;
    MonomialSum(std::initializer_list<MonomialLetter> letters);
    static MonomialSum letter(int a, int b, long mult = 1, bool eps = false);
    static MonomialSum one() { return letter(0, 0); }
    static MonomialSum q() { return letter(1, 0); }
    static MonomialSum t() { return letter(0, 1); }

    void add(const MonomialLetter& l);
    std::vector<MonomialLetter> letters() const;
    const std::map<Key, long>& raw() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    long multiplicity(int a, int b, bool eps = false) const;

    friend MonomialSum operator+(const MonomialSum& x, const MonomialSum& y);
    friend MonomialSum operator-(const MonomialSum& x, const MonomialSum& y);
    friend MonomialSum operator-(const MonomialSum& x);
    friend MonomialSum operator*(const MonomialSum& x, const MonomialSum& y);
    friend MonomialSum operator*(long c, const MonomialSum& x);
    friend bool operator==(const MonomialSum& x, const MonomialSum& y) { return x.terms_ == y.terms_; }

    // Toggle the formal negation of every letter whose q exponent is odd,
    // the letter-level form of q -> -q.
    MonomialSum negate_q() const;
    MonomialSum scale_exponents(int kq, int kt) const;
    MonomialSum swap_qt() const;
    // Formal negation of every letter.
    MonomialSum epsilon() const;

    // p_r evaluated at the alphabet.
    QTRational power_sum(int r) const;
    // Sum of letters as a rational function (p_1).
    QTRational value() const { return power_sum(1); }

private:
    std::map<Key, long> terms_;
};

std::string to_string(const MonomialSum& s);

QTRational omega_eval(const MonomialSum& s);

// (a; step)_n = prod_{k<n} (1 - a step^k); an eps flag on base gives
// (-a; step)_n. The step letter's eps and mult are ignored.
QTRational q_pochhammer(const MonomialLetter& base, int n, const MonomialLetter& step = {1, 0, false, 1});

}  // namespace symfunc
