#include "symfunc/qt_arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symfunc {

using detail::BPoly;
using detail::UPoly;

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    BigRational r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational literal: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& x) { return x.get_str(); }

// ---------------- QTPoly ----------------

QTPoly::QTPoly(const BigRational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly QTPoly::monomial(int dq, int dt, const BigRational& c) {
    if (dq < 0 || dt < 0) throw std::invalid_argument("QTPoly exponents must be nonnegative");
    QTPoly p;
    if (c != 0) p.terms_[{dq, dt}] = c;
    return p;
}

BigRational QTPoly::coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void QTPoly::add_term(int dq, int dt, const BigRational& c) {
    if (dq < 0 || dt < 0) throw std::invalid_argument("QTPoly exponents must be nonnegative");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{dq, dt}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly operator+(const QTPoly& a, const QTPoly& b) {
    QTPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

QTPoly operator-(const QTPoly& a) {
    QTPoly r = a;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

QTPoly operator-(const QTPoly& a, const QTPoly& b) { return a + (-b); }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BigRational QTPoly::eval(const BigRational& q0, const BigRational& t0) const {
    BigRational s = 0;
    for (const auto& [k, c] : terms_) {
        BigRational m = c;
        for (int i = 0; i < k.first; ++i) m *= q0;
        for (int j = 0; j < k.second; ++j) m *= t0;
        s += m;
    }
    return s;
}

// ---------------- QTRational ----------------

namespace {

BPoly to_bpoly_scaled(const QTPoly& p, const BigInt& scale) {
    BPoly r;
    for (const auto& [k, c] : p.terms()) {
        auto i = static_cast<std::size_t>(k.first), j = static_cast<std::size_t>(k.second);
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() <= j) r[i].resize(j + 1);
        BigInt v = scale * c.get_num();
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_den().get_mpz_t());
        r[i][j] = v;
    }
    for (auto& x : r) detail::trim(x);
    detail::trim(r);
    return r;
}

QTPoly from_bpoly(const BPoly& a) {
    QTPoly p;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (sgn(a[i][j]) != 0) p.add_term(static_cast<int>(i), static_cast<int>(j), BigRational(a[i][j]));
    return p;
}

BigInt denominator_lcm(const QTPoly& p, BigInt acc) {
    for (const auto& [k, c] : p.terms()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den().get_mpz_t());
    return acc;
}

BigRational eval_bpoly(const BPoly& a, const BigRational& q0, const BigRational& t0) {
    BigRational s = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        BigRational u = 0;
        for (std::size_t j = a[i].size(); j-- > 0;) u = u * t0 + BigRational(a[i][j]);
        s = s * q0 + u;
    }
    return s;
}

bool is_one_poly(const BPoly& a) { return a.size() == 1 && a[0].size() == 1 && a[0][0] == 1; }

void fix_content_and_sign(BPoly& num, BPoly& den) {
    BigInt c = detail::content(den);
    if (c != 1) {
        BigInt cn = detail::content(num);
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
        if (c != 1 && c != 0) {
            num = detail::divexact(num, c);
            den = detail::divexact(den, c);
        }
    }
    if (detail::lex_least_sign(den) < 0) {
        num = detail::neg(num);
        den = detail::neg(den);
    }
}

}  // namespace

QTRational::QTRational(long c) : num_(detail::bconst(BigInt(c))) {}
QTRational::QTRational(const BigInt& c) : num_(detail::bconst(c)) {}
QTRational::QTRational(const BigRational& c) : num_(detail::bconst(c.get_num())), den_(detail::bconst(c.get_den())) {
    if (num_.empty()) den_ = detail::bconst(1);
}

QTRational::QTRational(const QTPoly& p) : QTRational(p, QTPoly(BigRational(1))) {}

QTRational::QTRational(const QTPoly& num, const QTPoly& den) {
    if (den.is_zero()) throw PoleError("zero denominator");
    BigInt l = denominator_lcm(den, denominator_lcm(num, 1));
    num_ = to_bpoly_scaled(num, l);
    den_ = to_bpoly_scaled(den, l);
    normalize();
}

QTRational QTRational::from_parts(BPoly num, BPoly den) {
    if (den.empty()) throw PoleError("zero denominator");
    QTRational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

QTRational QTRational::q() { return monomial(1, 0); }
QTRational QTRational::t() { return monomial(0, 1); }

QTRational QTRational::monomial(int a, int b, const BigRational& c) {
    if (c == 0) return {};
    QTRational r;
    r.num_ = detail::monomial(std::max(a, 0), std::max(b, 0), c.get_num());
    r.den_ = detail::monomial(std::max(-a, 0), std::max(-b, 0), c.get_den());
    return r;
}

void QTRational::normalize() {
    if (den_.empty()) throw PoleError("zero denominator");
    if (num_.empty()) {
        den_ = detail::bconst(1);
        return;
    }
    if (!detail::is_constant(den_) && !detail::is_constant(num_)) {
        BPoly g = detail::gcd(num_, den_);
        if (!is_one_poly(g)) {
            num_ = detail::divexact(num_, g);
            den_ = detail::divexact(den_, g);
        }
    }
    fix_content_and_sign(num_, den_);
}

QTPoly QTRational::numerator() const { return from_bpoly(num_); }
QTPoly QTRational::denominator() const { return from_bpoly(den_); }

bool QTRational::is_one() const { return is_one_poly(num_) && is_one_poly(den_); }

bool QTRational::is_constant() const { return detail::is_constant(num_) && detail::is_constant(den_); }

BigRational QTRational::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant");
    if (num_.empty()) return 0;
    BigRational r(num_[0][0], den_[0][0]);
    r.canonicalize();
    return r;
}

QTRational& QTRational::operator+=(const QTRational& b) {
    if (b.num_.empty()) return *this;
    if (num_.empty()) return *this = b;
    if (den_ == b.den_) {
        num_ = detail::add(num_, b.num_);
        normalize();
        return *this;
    }
    if (detail::is_constant(den_) && detail::is_constant(b.den_)) {
        num_ = detail::add(detail::mul(num_, b.den_[0][0]), detail::mul(b.num_, den_[0][0]));
        den_ = detail::mul(den_, b.den_[0][0]);
        if (num_.empty()) {
            den_ = detail::bconst(1);
            return *this;
        }
        fix_content_and_sign(num_, den_);
        return *this;
    }
    BPoly g = (detail::is_constant(den_) || detail::is_constant(b.den_)) ? detail::bconst(1) : detail::gcd(den_, b.den_);
    if (is_one_poly(g)) {
        num_ = detail::add(detail::mul(num_, b.den_), detail::mul(b.num_, den_));
        den_ = detail::mul(den_, b.den_);
        if (num_.empty()) {
            den_ = detail::bconst(1);
            return *this;
        }
        fix_content_and_sign(num_, den_);
        return *this;
    }
    BPoly d1 = detail::divexact(den_, g);
    BPoly b1 = detail::divexact(b.den_, g);
    num_ = detail::add(detail::mul(num_, b1), detail::mul(b.num_, d1));
    den_ = detail::mul(den_, b1);
    if (num_.empty()) {
        den_ = detail::bconst(1);
        return *this;
    }
    BPoly g2 = detail::gcd(num_, g);
    if (!is_one_poly(g2)) {
        num_ = detail::divexact(num_, g2);
        den_ = detail::divexact(den_, g2);
    }
    fix_content_and_sign(num_, den_);
    return *this;
}

QTRational operator-(const QTRational& a) {
    QTRational r = a;
    r.num_ = detail::neg(r.num_);
    return r;
}

QTRational& QTRational::operator-=(const QTRational& b) { return *this += -b; }

QTRational& QTRational::operator*=(const QTRational& b) {
    if (num_.empty()) return *this;
    if (b.num_.empty()) return *this = QTRational();
    BPoly n1 = num_, d1 = den_, n2 = b.num_, d2 = b.den_;
    if (!detail::is_constant(n1) && !detail::is_constant(d2)) {
        BPoly g = detail::gcd(n1, d2);
        if (!is_one_poly(g)) {
            n1 = detail::divexact(n1, g);
            d2 = detail::divexact(d2, g);
        }
    }
    if (!detail::is_constant(n2) && !detail::is_constant(d1)) {
        BPoly g = detail::gcd(n2, d1);
        if (!is_one_poly(g)) {
            n2 = detail::divexact(n2, g);
            d1 = detail::divexact(d1, g);
        }
    }
    num_ = detail::mul(n1, n2);
    den_ = detail::mul(d1, d2);
    fix_content_and_sign(num_, den_);
    return *this;
}

QTRational QTRational::inverse() const {
    if (num_.empty()) throw PoleError("division by zero");
    QTRational r;
    r.num_ = den_;
    r.den_ = num_;
    fix_content_and_sign(r.num_, r.den_);
    return r;
}

QTRational& QTRational::operator/=(const QTRational& b) { return *this *= b.inverse(); }

QTRational QTRational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QTRational r;
    r.num_ = detail::bconst(1);
    QTRational base = *this;
    // Powers of a reduced fraction stay reduced.
    BPoly n = detail::bconst(1), d = detail::bconst(1);
    BPoly bn = num_, bd = den_;
    while (e > 0) {
        if (e & 1) {
            n = detail::mul(n, bn);
            d = detail::mul(d, bd);
        }
        e >>= 1;
        if (e) {
            bn = detail::mul(bn, bn);
            bd = detail::mul(bd, bd);
        }
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.num_.empty()) r.den_ = detail::bconst(1);
    fix_content_and_sign(r.num_, r.den_);
    return r;
}

BigRational QTRational::eval(const BigRational& q0, const BigRational& t0) const {
    BigRational d = eval_bpoly(den_, q0, t0);
    if (d == 0) throw PoleError("denominator vanishes at sample point");
    return eval_bpoly(num_, q0, t0) / d;
}

QTRational QTRational::scale_exponents(int kq, int kt) const {
    if (kq < 1 || kt < 1) throw std::invalid_argument("exponent scaling must be positive");
    return from_parts(detail::scale_exponents(num_, kq, kt), detail::scale_exponents(den_, kq, kt));
}

QTRational QTRational::swap_qt() const {
    QTRational r;
    r.num_ = detail::swap_qt(num_);
    r.den_ = detail::swap_qt(den_);
    fix_content_and_sign(r.num_, r.den_);
    return r;
}

QTRational QTRational::negate_q() const {
    QTRational r;
    r.num_ = detail::negate_q(num_);
    r.den_ = detail::negate_q(den_);
    fix_content_and_sign(r.num_, r.den_);
    return r;
}

namespace {

QTRational substitute_poly(const BPoly& a, const QTRational& qv, const QTRational& tv) {
    QTRational s;
    for (std::size_t i = a.size(); i-- > 0;) {
        QTRational u;
        for (std::size_t j = a[i].size(); j-- > 0;) {
            u *= tv;
            if (sgn(a[i][j]) != 0) u += QTRational(a[i][j]);
        }
        s *= qv;
        s += u;
    }
    return s;
}

}  // namespace

QTRational QTRational::substitute(const QTRational& qv, const QTRational& tv) const {
    QTRational d = substitute_poly(den_, qv, tv);
    if (d.is_zero()) throw PoleError("denominator vanishes under substitution");
    return substitute_poly(num_, qv, tv) / d;
}

namespace {

std::string monomial_text(std::size_t i, std::size_t j) {
    std::string s;
    if (i > 0) s += (i == 1) ? "q" : "q^" + std::to_string(i);
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += (j == 1) ? "t" : "t^" + std::to_string(j);
    }
    return s;
}

struct PolyText {
    std::string text;
    std::size_t terms = 0;
    bool has_star = false;
};

PolyText poly_text(const BPoly& a) {
    PolyText out;
    if (a.empty()) {
        out.text = "0";
        out.terms = 1;
        return out;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        for (std::size_t j = a[i].size(); j-- > 0;) {
            const BigInt& c = a[i][j];
            if (sgn(c) == 0) continue;
            bool neg = sgn(c) < 0;
            BigInt ac = abs(c);
            std::string mono = monomial_text(i, j);
            std::string body;
            if (mono.empty())
                body = ac.get_str();
            else if (ac == 1)
                body = mono;
            else
                body = ac.get_str() + "*" + mono;
            if (body.find('*') != std::string::npos) out.has_star = true;
            if (out.terms == 0)
                out.text += neg ? "-" + body : body;
            else
                out.text += neg ? " - " + body : " + " + body;
            ++out.terms;
        }
    }
    return out;
}

}  // namespace

std::string QTRational::str() const {
    PolyText n = poly_text(num_);
    std::string ns = n.terms > 1 ? "(" + n.text + ")" : n.text;
    if (is_one_poly(den_)) return ns;
    PolyText d = poly_text(den_);
    bool bare = d.terms == 1 && !d.has_star && d.text[0] != '-';
    return ns + "/" + (bare ? d.text : "(" + d.text + ")");
}

std::string to_string(const QTPoly& p) { return QTRational(p).str(); }

QTRational qt_combine(QTOp op, const QTRational& a, const QTRational& b) {
    switch (op) {
        case QTOp::add:
            return a + b;
        case QTOp::sub:
            return a - b;
        case QTOp::mul:
            return a * b;
        case QTOp::div:
            if (b.is_zero()) throw PoleError("division by zero");
            return a / b;
    }
    throw std::logic_error("unknown op");
}

BigRational qt_eval(const QTRational& a, const BigRational& q0, const BigRational& t0) { return a.eval(q0, t0); }

// ---------------- parser ----------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    QTRational parse() {
        QTRational r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    QTRational expr() {
        QTRational r = term();
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }
    QTRational term() {
        QTRational r = factor();
        while (true) {
            if (accept('*')) {
                r *= factor();
            } else if (accept('/')) {
                QTRational d = factor();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }
    QTRational factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        QTRational base = primary();
        if (accept('^')) {
            bool neg = accept('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (neg && base.is_zero()) fail("zero to a negative power");
            base = base.pow(neg ? -e : e);
        }
        return base;
    }
    QTRational primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QTRational r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == 'q') {
            ++pos_;
            return QTRational::q();
        }
        if (c == 't') {
            ++pos_;
            return QTRational::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return QTRational(BigInt(std::string(s_.substr(start, pos_ - start))));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QTRational parse_qt(std::string_view text) { return Parser(text).parse(); }

// ---------------- MonomialSum ----------------

MonomialSum::MonomialSum(std::initializer_list<MonomialLetter> letters) {
    for (const auto& l : letters) add(l);
}

MonomialSum MonomialSum::letter(int a, int b, long mult, bool eps) {
    MonomialSum s;
    s.add({a, b, eps, mult});
    return s;
}

void MonomialSum::add(const MonomialLetter& l) {
    if (l.mult == 0) return;
    Key k{l.a, l.b, l.eps};
    auto [it, fresh] = terms_.emplace(k, l.mult);
    if (!fresh) {
        it->second += l.mult;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<MonomialLetter> MonomialSum::letters() const {
    std::vector<MonomialLetter> out;
    out.reserve(terms_.size());
    for (const auto& [k, m] : terms_) out.push_back({k.a, k.b, k.eps, m});
    return out;
}

long MonomialSum::multiplicity(int a, int b, bool eps) const {
    auto it = terms_.find({a, b, eps});
    return it == terms_.end() ? 0 : it->second;
}

MonomialSum operator+(const MonomialSum& x, const MonomialSum& y) {
    MonomialSum r = x;
    for (const auto& [k, m] : y.terms_) r.add({k.a, k.b, k.eps, m});
    return r;
}

MonomialSum operator-(const MonomialSum& x) {
    MonomialSum r;
    for (const auto& [k, m] : x.terms_) r.add({k.a, k.b, k.eps, -m});
    return r;
}

MonomialSum operator-(const MonomialSum& x, const MonomialSum& y) { return x + (-y); }

MonomialSum operator*(const MonomialSum& x, const MonomialSum& y) {
    MonomialSum r;
    for (const auto& [kx, mx] : x.terms_)
        for (const auto& [ky, my] : y.terms_) r.add({kx.a + ky.a, kx.b + ky.b, kx.eps != ky.eps, mx * my});
    return r;
}

MonomialSum operator*(long c, const MonomialSum& x) {
    MonomialSum r;
    for (const auto& [k, m] : x.terms_) r.add({k.a, k.b, k.eps, c * m});
    return r;
}

MonomialSum MonomialSum::negate_q() const {
    MonomialSum r;
    for (const auto& [k, m] : terms_) r.add({k.a, k.b, (k.a % 2 != 0) != k.eps, m});
    return r;
}

MonomialSum MonomialSum::scale_exponents(int kq, int kt) const {
    MonomialSum r;
    for (const auto& [k, m] : terms_) r.add({k.a * kq, k.b * kt, k.eps, m});
    return r;
}

MonomialSum MonomialSum::swap_qt() const {
    MonomialSum r;
    for (const auto& [k, m] : terms_) r.add({k.b, k.a, k.eps, m});
    return r;
}

MonomialSum MonomialSum::epsilon() const {
    MonomialSum r;
    for (const auto& [k, m] : terms_) r.add({k.a, k.b, !k.eps, m});
    return r;
}

QTRational MonomialSum::power_sum(int r) const {
    // Collect as a Laurent polynomial, then clear the minimal monomial.
    std::map<std::pair<int, int>, BigInt> acc;
    for (const auto& [k, m] : terms_) {
        BigInt c = m;
        if (k.eps && r % 2 != 0) c = -c;
        acc[{k.a * r, k.b * r}] += c;
    }
    int mq = 0, mt = 0;
    for (const auto& [e, c] : acc) {
        mq = std::min(mq, e.first);
        mt = std::min(mt, e.second);
    }
    QTPoly p;
    for (const auto& [e, c] : acc) p.add_term(e.first - mq, e.second - mt, BigRational(c));
    return QTRational(p) * QTRational::monomial(mq, mt);
}

std::string to_string(const MonomialSum& s) {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : s.letters()) {
        long m = l.mult;
        if (!first) os << (m < 0 ? " - " : " + ");
        else if (m < 0) os << "-";
        first = false;
        long am = m < 0 ? -m : m;
        if (am != 1) os << am << "*";
        if (l.eps) os << "eps*";
        os << "q^" << l.a << "*t^" << l.b;
    }
    return os.str();
}

QTRational omega_eval(const MonomialSum& s) {
    BPoly num = detail::bconst(1), den = detail::bconst(1);
    long eq = 0, et = 0;  // accumulated monomial q^eq t^et
    for (const auto& l : s.letters()) {
        if (l.a == 0 && l.b == 0 && !l.eps) {
            if (l.mult > 0) throw PoleError("Omega of the unit letter");
            return QTRational();
        }
        int mq = std::min(0, l.a), mt = std::min(0, l.b);
        // 1 -/+ q^a t^b = q^mq t^mt (q^-mq t^-mt -/+ q^(a-mq) t^(b-mt))
        BPoly f = detail::add(detail::monomial(-mq, -mt), detail::monomial(l.a - mq, l.b - mt, l.eps ? 1 : -1));
        long reps = l.mult < 0 ? -l.mult : l.mult;
        for (long i = 0; i < reps; ++i) {
            if (l.mult < 0) {
                num = detail::mul(num, f);
                eq += mq;
                et += mt;
            } else {
                den = detail::mul(den, f);
                eq -= mq;
                et -= mt;
            }
        }
    }
    if (eq > 0) num = detail::mul(num, detail::monomial(static_cast<int>(eq), 0));
    if (eq < 0) den = detail::mul(den, detail::monomial(static_cast<int>(-eq), 0));
    if (et > 0) num = detail::mul(num, detail::monomial(0, static_cast<int>(et)));
    if (et < 0) den = detail::mul(den, detail::monomial(0, static_cast<int>(-et)));
    return QTRational::from_parts(std::move(num), std::move(den));
}

QTRational q_pochhammer(const MonomialLetter& base, int n, const MonomialLetter& step) {
    if (n < 0) throw std::invalid_argument("Pochhammer length must be nonnegative");
    MonomialSum s;
    for (int k = 0; k < n; ++k) s.add({base.a + k * step.a, base.b + k * step.b, base.eps, -1});
    return omega_eval(s);
}

}  // namespace symfunc
