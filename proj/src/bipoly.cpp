#include "symfunc/detail/bipoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace symfunc::detail {

void trim(UPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void trim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly uconst(const mpz_class& c) {
    if (sgn(c) == 0) return {};
    return UPoly{c};
}

BPoly bconst(const mpz_class& c) {
    if (sgn(c) == 0) return {};
    return BPoly{UPoly{c}};
}

bool is_constant(const BPoly& a) { return a.size() <= 1 && (a.empty() || a[0].size() <= 1); }

// ---- univariate ----

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const mpz_class& c) {
    if (sgn(c) == 0) return {};
    UPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

UPoly neg(const UPoly& a) {
    UPoly r(a);
    for (auto& x : r) x = -x;
    return r;
}

UPoly divexact(const UPoly& a, const mpz_class& c) {
    UPoly r(a);
    for (auto& x : r) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw std::logic_error("inexact integer division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

UPoly divexact(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (a.empty()) return {};
    if (b.size() == 1) return divexact(a, b[0]);
    if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
    UPoly r(a);
    UPoly quo(a.size() - b.size() + 1);
    const mpz_class& lc = b.back();
    mpz_class c;
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class& top = r[k + b.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw std::logic_error("inexact polynomial division");
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        quo[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    trim(quo);
    return quo;
}

mpz_class content(const UPoly& a) {
    mpz_class g = 0;
    for (const auto& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

std::size_t low_order(const UPoly& a) {
    std::size_t i = 0;
    while (i < a.size() && sgn(a[i]) == 0) ++i;
    return i;
}

UPoly shift_down(const UPoly& a, std::size_t k) { return UPoly(a.begin() + static_cast<long>(k), a.end()); }

UPoly shift_up(const UPoly& a, std::size_t k) {
    if (a.empty()) return a;
    UPoly r(k);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

UPoly primitive(const UPoly& a) {
    if (a.empty()) return a;
    mpz_class c = content(a);
    if (sgn(a.back()) < 0) c = -c;
    if (c == 1) return a;
    return divexact(a, c);
}

// Pseudo-remainder of a by b in Z[t].
UPoly prem(UPoly r, const UPoly& b) {
    const mpz_class& lc = b.back();
    const std::size_t db = b.size() - 1;
    const bool unit = (lc == 1);
    mpz_class c;
    while (!r.empty() && r.size() - 1 >= db) {
        c = r.back();
        std::size_t shift = r.size() - 1 - db;
        if (!unit)
            for (auto& x : r) x *= lc;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        trim(r);
    }
    return r;
}

}  // namespace

namespace {

UPoly gcd_prs(const UPoly& a, const UPoly& b) {
    if (a.empty()) return primitive(b);
    if (b.empty()) return primitive(a);
    std::size_t oa = low_order(a), ob = low_order(b);
    std::size_t o = std::min(oa, ob);
    UPoly A = primitive(shift_down(a, oa));
    UPoly B = primitive(shift_down(b, ob));
    if (A.size() < B.size()) std::swap(A, B);
    UPoly g;
    while (true) {
        if (B.size() == 1) {
            g = UPoly{1};
            break;
        }
        UPoly r = prem(A, B);
        if (r.empty()) {
            g = B;
            break;
        }
        A = std::move(B);
        B = primitive(r);
    }
    return shift_up(primitive(g), o);
}

mpz_class max_norm(const UPoly& a) {
    mpz_class m = 0;
    for (const auto& x : a)
        if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    return m;
}

mpz_class eval_at(const UPoly& a, const mpz_class& xi) {
    mpz_class r = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        r *= xi;
        r += a[i];
    }
    return r;
}

// Symmetric xi-adic digits of g.
UPoly xi_adic(mpz_class g, const mpz_class& xi) {
    UPoly r;
    mpz_class half = xi / 2, d;
    while (sgn(g) != 0) {
        mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
        if (d > half) d -= xi;
        r.push_back(d);
        g -= d;
        mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    }
    return r;
}

bool divides(const UPoly& b, const UPoly& a) {
    if (a.size() < b.size()) return false;
    UPoly r(a);
    const mpz_class& lc = b.back();
    mpz_class c;
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
        mpz_class& top = r[k + b.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r.empty();
}

// Heuristic gcd of Z-primitive inputs: gcd of values at a large integer,
// read back xi-adically and accepted only if it divides both inputs.
std::optional<UPoly> gcd_heuristic(const UPoly& A, const UPoly& B) {
    mpz_class xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(A.size(), B.size()) > 4000000) break;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), eval_at(A, xi).get_mpz_t(), eval_at(B, xi).get_mpz_t());
        UPoly G = primitive(xi_adic(g, xi));
        if (!G.empty() && divides(G, A) && divides(G, B)) return G;
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return gcd_prs(a, b);
    std::size_t oa = low_order(a), ob = low_order(b);
    std::size_t o = std::min(oa, ob);
    UPoly A = primitive(shift_down(a, oa));
    UPoly B = primitive(shift_down(b, ob));
    if (A.size() == 1 || B.size() == 1) return shift_up(UPoly{1}, o);
    if (auto g = gcd_heuristic(A, B)) return shift_up(*g, o);
    return shift_up(gcd_prs(A, B), o);
}

// ---- bivariate ----

BPoly add(const BPoly& a, const BPoly& b) {
    BPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i >= a.size())
            r[i] = b[i];
        else if (i >= b.size())
            r[i] = a[i];
        else
            r[i] = add(a[i], b[i]);
    }
    trim(r);
    return r;
}

BPoly sub(const BPoly& a, const BPoly& b) {
    BPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i >= a.size())
            r[i] = neg(b[i]);
        else if (i >= b.size())
            r[i] = a[i];
        else
            r[i] = sub(a[i], b[i]);
    }
    trim(r);
    return r;
}

BPoly mul(const BPoly& a, const BPoly& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t tq = 0;
    for (const auto& x : a) tq = std::max(tq, x.size());
    std::size_t tb = 0;
    for (const auto& x : b) tb = std::max(tb, x.size());
    std::vector<std::vector<mpz_class>> acc(a.size() + b.size() - 1, std::vector<mpz_class>(tq + tb));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t ii = 0; ii < a[i].size(); ++ii) {
            if (sgn(a[i][ii]) == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                auto& row = acc[i + j];
                for (std::size_t jj = 0; jj < b[j].size(); ++jj)
                    mpz_addmul(row[ii + jj].get_mpz_t(), a[i][ii].get_mpz_t(), b[j][jj].get_mpz_t());
            }
        }
    }
    BPoly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        r[i] = std::move(acc[i]);
        trim(r[i]);
    }
    trim(r);
    return r;
}

BPoly mul(const BPoly& a, const UPoly& c) {
    if (c.empty()) return {};
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
    trim(r);
    return r;
}

BPoly mul(const BPoly& a, const mpz_class& c) {
    if (sgn(c) == 0) return {};
    BPoly r(a);
    for (auto& x : r)
        for (auto& y : x) y *= c;
    return r;
}

BPoly neg(const BPoly& a) {
    BPoly r(a);
    for (auto& x : r)
        for (auto& y : x) y = -y;
    return r;
}

BPoly divexact(const BPoly& a, const mpz_class& c) {
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = divexact(a[i], c);
    return r;
}

BPoly divexact(const BPoly& a, const UPoly& c) {
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = divexact(a[i], c);
    return r;
}

BPoly divexact(const BPoly& a, const BPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (a.empty()) return {};
    if (b.size() == 1) return divexact(a, b[0]);
    if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
    BPoly r(a);
    BPoly quo(a.size() - b.size() + 1);
    const UPoly& lc = b.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const UPoly& top = r[k + b.size() - 1];
        if (top.empty()) continue;
        UPoly c = divexact(top, lc);
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
        quo[k] = std::move(c);
    }
    trim(r);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    trim(quo);
    return quo;
}

mpz_class content(const BPoly& a) {
    mpz_class g = 0;
    for (const auto& x : a) {
        for (const auto& y : x) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
            if (g == 1) return g;
        }
    }
    return g;
}

UPoly content_t(const BPoly& a) {
    UPoly g;
    for (const auto& x : a) {
        if (x.empty()) continue;
        g = gcd(g, x);
        if (g.size() == 1) break;
    }
    if (g.empty()) return g;
    // fold in the integer content left after removing g
    mpz_class ic = 0;
    for (const auto& x : a) {
        if (x.empty()) continue;
        mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), content(x).get_mpz_t());
    }
    mpz_class gc = content(g);
    mpz_class extra = ic / gc;
    return mul(g, extra);
}

namespace {

std::size_t q_order(const BPoly& a) {
    std::size_t i = 0;
    while (i < a.size() && a[i].empty()) ++i;
    return i;
}

std::size_t t_order(const BPoly& a) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& x : a)
        if (!x.empty()) best = std::min(best, low_order(x));
    return best;
}

BPoly shift(const BPoly& a, long dq, long dt) {
    BPoly r;
    if (a.empty()) return r;
    if (dq >= 0) {
        r.assign(static_cast<std::size_t>(dq), UPoly{});
        r.insert(r.end(), a.begin(), a.end());
    } else {
        r.assign(a.begin() - dq, a.end());
    }
    for (auto& x : r) {
        if (x.empty()) continue;
        if (dt >= 0)
            x = shift_up(x, static_cast<std::size_t>(dt));
        else
            x = shift_down(x, static_cast<std::size_t>(-dt));
    }
    return r;
}

BPoly prem(BPoly r, const BPoly& b) {
    const UPoly& lc = b.back();
    const std::size_t db = b.size() - 1;
    const bool unit = (lc.size() == 1 && lc[0] == 1);
    while (!r.empty() && r.size() - 1 >= db) {
        UPoly c = r.back();
        std::size_t s = r.size() - 1 - db;
        if (!unit)
            for (auto& x : r) x = mul(x, lc);
        for (std::size_t j = 0; j < b.size(); ++j) r[s + j] = sub(r[s + j], mul(c, b[j]));
        trim(r);
    }
    return r;
}

BPoly primitive_q(const BPoly& a) {
    UPoly c = content_t(a);
    if (c.size() == 1 && c[0] == 1) return a;
    return divexact(a, c);
}

BPoly normalize_sign(BPoly a) {
    if (lex_least_sign(a) < 0) return neg(a);
    return a;
}

}  // namespace

int lex_least_sign(const BPoly& a) {
    for (const auto& x : a)
        for (const auto& y : x)
            if (sgn(y) != 0) return sgn(y);
    return 0;
}

namespace {

BPoly gcd_prs(const BPoly& a, const BPoly& b) {
    if (a.empty() && b.empty()) return {};
    if (a.empty()) return normalize_sign(divexact(b, content(b)));
    if (b.empty()) return normalize_sign(divexact(a, content(a)));
    std::size_t qa = q_order(a), qb = q_order(b), ta = t_order(a), tb = t_order(b);
    long mq = static_cast<long>(std::min(qa, qb)), mt = static_cast<long>(std::min(ta, tb));
    BPoly A = shift(a, -static_cast<long>(qa), -static_cast<long>(ta));
    BPoly B = shift(b, -static_cast<long>(qb), -static_cast<long>(tb));
    UPoly ca = content_t(A), cb = content_t(B);
    UPoly c = gcd(ca, cb);
    A = divexact(A, ca);
    B = divexact(B, cb);
    if (A.size() < B.size()) std::swap(A, B);
    BPoly g;
    while (true) {
        if (B.size() == 1) {
            g = bconst(1);
            break;
        }
        BPoly r = prem(A, B);
        if (r.empty()) {
            g = B;
            break;
        }
        A = std::move(B);
        B = primitive_q(r);
    }
    g = primitive_q(g);
    g = mul(g, c);
    g = shift(g, mq, mt);
    return normalize_sign(g);
}

mpz_class max_norm(const BPoly& a) {
    mpz_class m = 0;
    for (const auto& x : a)
        for (const auto& y : x)
            if (mpz_cmpabs(y.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(y);
    return m;
}

bool divides(const BPoly& b, const BPoly& a) {
    if (a.size() < b.size()) return false;
    if (b.size() == 1) {
        for (const auto& x : a)
            if (!x.empty() && !divides(b[0], x)) return false;
        return true;
    }
    BPoly r(a);
    const UPoly& lc = b.back();
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
        const UPoly& top = r[k + b.size() - 1];
        if (top.empty()) continue;
        if (!divides(lc, top)) return false;
        UPoly c = divexact(top, lc);
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
    }
    trim(r);
    return r.empty();
}

// Bivariate version: evaluate t at xi, take the univariate gcd in q, and
// rebuild each q-coefficient xi-adically.
std::optional<BPoly> gcd_heuristic(const BPoly& A, const BPoly& B) {
    mpz_class xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
    std::size_t tdeg = 1;
    for (const auto& x : A) tdeg = std::max(tdeg, x.size());
    for (const auto& x : B) tdeg = std::max(tdeg, x.size());
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * tdeg > 4000000) break;
        UPoly a, b;
        for (const auto& x : A) a.push_back(eval_at(x, xi));
        for (const auto& x : B) b.push_back(eval_at(x, xi));
        trim(a);
        trim(b);
        if (a.size() == A.size() && b.size() == B.size()) {
            // Z-content of the univariate gcd is part of the answer here
            UPoly g = gcd(a, b);
            mpz_class cg;
            mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
            g = mul(g, cg);
            BPoly G;
            for (const auto& x : g) G.push_back(xi_adic(x, xi));
            trim(G);
            if (!G.empty()) {
                mpz_class c = content(G);
                if (lex_least_sign(G) < 0) c = -c;
                G = divexact(G, c);
                if (divides(G, A) && divides(G, B)) return G;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
    if (a.empty() || b.empty()) return gcd_prs(a, b);
    std::size_t qa = q_order(a), qb = q_order(b), ta = t_order(a), tb = t_order(b);
    long mq = static_cast<long>(std::min(qa, qb)), mt = static_cast<long>(std::min(ta, tb));
    BPoly A = shift(a, -static_cast<long>(qa), -static_cast<long>(ta));
    BPoly B = shift(b, -static_cast<long>(qb), -static_cast<long>(tb));
    mpz_class ca = content(A), cb = content(B), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    A = divexact(A, ca);
    B = divexact(B, cb);
    BPoly g;
    if (is_constant(A) || is_constant(B))
        g = bconst(1);
    else if (auto h = gcd_heuristic(A, B))
        g = std::move(*h);
    else
        g = gcd_prs(A, B);
    g = mul(g, c);
    g = shift(g, mq, mt);
    return normalize_sign(g);
}

BPoly monomial(int i, int j, const mpz_class& c) {
    if (sgn(c) == 0) return {};
    BPoly r(static_cast<std::size_t>(i) + 1);
    r[static_cast<std::size_t>(i)] = UPoly(static_cast<std::size_t>(j) + 1);
    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    return r;
}

BPoly scale_exponents(const BPoly& a, int kq, int kt) {
    if (a.empty()) return a;
    BPoly r((a.size() - 1) * static_cast<std::size_t>(kq) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        UPoly u((a[i].size() - 1) * static_cast<std::size_t>(kt) + 1);
        for (std::size_t j = 0; j < a[i].size(); ++j) u[j * static_cast<std::size_t>(kt)] = a[i][j];
        r[i * static_cast<std::size_t>(kq)] = std::move(u);
    }
    return r;
}

BPoly swap_qt(const BPoly& a) {
    std::size_t w = 0;
    for (const auto& x : a) w = std::max(w, x.size());
    BPoly r(w);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (sgn(a[i][j]) == 0) continue;
            if (r[j].size() <= i) r[j].resize(i + 1);
            r[j][i] = a[i][j];
        }
    for (auto& x : r) trim(x);
    trim(r);
    return r;
}

BPoly negate_q(const BPoly& a) {
    BPoly r(a);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = neg(r[i]);
    return r;
}

}  // namespace symfunc::detail
