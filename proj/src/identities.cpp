#include "symfunc/identities.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace symfunc {

namespace {

const QTRational kOne{1};

// Letters of X selected (or not) by mask.
LetterAlphabet pick(const LetterAlphabet& X, unsigned mask, bool inside) {
    LetterAlphabet r;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (static_cast<bool>(mask >> i & 1U) == inside) r.push_back(X[i]);
    return r;
}

std::vector<unsigned> masks_of_size(int n, int k) {
    std::vector<unsigned> out;
    if (n > 24) throw std::invalid_argument("alphabet too large");
    for (unsigned m = 0; m < (1U << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

LetterAlphabet scaled(const LetterAlphabet& X, const QTRational& c) {
    LetterAlphabet r;
    r.reserve(X.size());
    for (const auto& x : X) r.push_back(c * x);
    return r;
}

// (a; t)_s / (t; t)_s over the given parameter values.
QTRational poch_ratio(const QTRational& a, const QTRational& t, int s) {
    QTRational r = 1, tp = 1;
    for (int i = 0; i < s; ++i) {
        r *= (kOne - a * tp) / (kOne - tp * t);
        tp *= t;
    }
    return r;
}

QTRational t_power(const QTRational& t, int e) { return e >= 0 ? t.pow(e) : t.inverse().pow(-e); }

MonomialSum t_minus_eps_q() { return MonomialSum::t() - MonomialSum::letter(1, 0, 1, true); }

MonomialSum q2_minus_t2() { return MonomialSum::letter(2, 0) - MonomialSum::letter(0, 2); }

bool distinct_parts(const Partition& mu) {
    for (int i = 1; i < mu.length(); ++i)
        if (mu[i] == mu[i - 1]) return false;
    return true;
}

Partition from_rows(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

Polynomial monomial(int n, const std::vector<int>& e, const QTRational& c) {
    Polynomial r(n);
    r.add_term(e, c);
    return r;
}

// sum_{k <= deg/step} c_k (prod_{i in vars} x_i)^k
Polynomial series_in(int n, const std::vector<int>& vars, int deg, const std::function<QTRational(int)>& coeff) {
    Polynomial r(n);
    int step = static_cast<int>(vars.size());
    for (int k = 0; k * step <= deg; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v : vars) e[static_cast<std::size_t>(v)] = k;
        r += monomial(n, e, coeff(k));
    }
    return r;
}

Polynomial product_side(int n, int deg, const std::function<QTRational(int)>& single, const std::function<QTRational(int)>& pair) {
    Polynomial r = Polynomial::constant(n, 1);
    for (int i = 0; i < n; ++i) r = (r * series_in(n, {i}, deg, single)).truncate(deg);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r = (r * series_in(n, {i, j}, deg, pair)).truncate(deg);
    return r;
}

}  // namespace

QTParams QTParams::from_alpha_beta(const BigRational& alpha, const BigRational& beta) {
    if (sgn(alpha) == 0 || sgn(beta) == 0) throw std::invalid_argument("alpha and beta must be nonzero");
    QTParams p;
    p.t = QTRational(BigRational(1 / beta));
    p.q = p.t / QTRational(alpha);
    return p;
}

QTRational resultant_fn(ResultantKind kind, const LetterAlphabet& X, const LetterAlphabet& Y, bool eps_q, const QTParams& params) {
    const QTRational q = eps_q ? -params.q : params.q;
    const QTRational& t = params.t;
    // factor (x - c y) for each c in num, divided by (x - d y) for each d in den
    std::vector<QTRational> num, den;
    switch (kind) {
        case ResultantKind::W:
            num = {q / t};
            den = {kOne};
            break;
        case ResultantKind::V:
            num = {t / q};
            den = {kOne};
            break;
        case ResultantKind::v:
            num = {t};
            den = {q};
            break;
        case ResultantKind::w:
            num = {t.inverse()};
            den = {q.inverse()};
            break;
        case ResultantKind::Theta:
            num = {t, q / t};
            den = {q, kOne};
            break;
        case ResultantKind::Phi:
            num = {t / q, t.inverse()};
            den = {kOne, q.inverse()};
            break;
    }
    QTRational n = 1, d = 1;
    for (const auto& x : X)
        for (const auto& y : Y) {
            for (const auto& c : num) n *= x - c * y;
            for (const auto& c : den) d *= x - c * y;
        }
    if (d.is_zero()) throw PoleError("resultant function has a vanishing denominator");
    return n / d;
}

bool check_phi_split(const LetterAlphabet& X, int k, const QTParams& params) {
    int n = static_cast<int>(X.size());
    if (k < 1 || k >= n) throw std::invalid_argument("check_phi_split: need 1 <= k < |X|");
    QTRational sum;
    for (unsigned m : masks_of_size(n, k)) {
        LetterAlphabet a = pick(X, m, true), b = pick(X, m, false);
        sum += resultant_fn(ResultantKind::Phi, a, b, false, params) - resultant_fn(ResultantKind::Phi, b, a, false, params);
    }
    return sum.is_zero();
}

bool check_final_identity(const LetterAlphabet& A, int k, const QTRational& z, const QTParams& params) {
    int n = static_cast<int>(A.size());
    if (k < 0 || k > n) throw std::invalid_argument("check_final_identity: need 0 <= k <= |A|");
    const QTRational& t = params.t;
    const LetterAlphabet Z{z};
    using RK = ResultantKind;
    QTRational sum;
    for (int s = 0; s <= k; ++s) {
        QTRational coef = poch_ratio(params.q, t, s);
        QTRational inner;
        for (unsigned m : masks_of_size(n, k - s)) {
            LetterAlphabet x1 = pick(A, m, true), x2 = pick(A, m, false);
            QTRational first = resultant_fn(RK::w, Z, x2, false, params) *
                               resultant_fn(RK::V, Z, scaled(x2, t_power(t, s - 1)), false, params) *
                               resultant_fn(RK::W, Z, scaled(x1, t_power(t, s)), false, params) *
                               resultant_fn(RK::Phi, x1, x2, false, params);
            QTRational second = resultant_fn(RK::w, Z, x1, false, params) * resultant_fn(RK::Phi, x2, x1, false, params);
            inner += first - second;
        }
        sum += coef * inner;
    }
    return sum.is_zero();
}

QTRational h_factor(const Partition& lambda, Box s, HKind kind) {
    if (s.row < 1 || s.col < 1 || s.row > lambda.length() || s.col > lambda[s.row - 1])
        throw std::invalid_argument("h_factor: box (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") is not in " + lambda.str());
    auto [a, l] = arm_leg(lambda, s);
    MonomialSum x;
    switch (kind) {
        case HKind::H:
            x = MonomialSum::letter(a + 1, l) - MonomialSum::letter(a, l + 1, 1, true);
            break;
        case HKind::Htilde:
            x = MonomialSum::letter(a, l + 1) - MonomialSum::letter(a + 1, l, 1, true);
            break;
        case HKind::G:
            x = MonomialSum::letter(2 * a, 2 * l + 2) - MonomialSum::letter(2 * a + 2, 2 * l);
            break;
    }
    return omega_eval(x);
}

LetterAlphabet kawanaka_letters(const Partition& mu) {
    LetterAlphabet r;
    int m = mu.length();
    for (int k = 1; k <= m; ++k) r.push_back(QTRational::monomial(mu[k - 1], m - k));
    return r;
}

QTRational proof_L(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu) || !is_vertical_strip(lambda, mu))
        throw std::invalid_argument("proof_L: " + lambda.str() + "/" + mu.str() + " is not a vertical strip");
    StripStats st = strip_stats(lambda, mu);
    return omega_eval(t_minus_eps_q() * (b_stat(lambda) - b_stat(mu))) * omega_eval(q2_minus_t2() * st.Rtilde.scale_exponents(2, 2));
}

QTRational proof_R(const Partition& mu, const Partition& gamma) {
    if (!contains(mu, gamma) || !is_vertical_strip(mu, gamma))
        throw std::invalid_argument("proof_R: " + mu.str() + "/" + gamma.str() + " is not a vertical strip");
    StripStats st = strip_stats(mu, gamma);
    return omega_eval(t_minus_eps_q() * (b_stat(gamma) - b_stat(mu))) * omega_eval(-q2_minus_t2() * st.R.scale_exponents(2, 2));
}

bool lr_proof_terms(const Partition& mu, int k) {
    if (k < 0) throw std::invalid_argument("lr_proof_terms: negative k");
    const QTRational q = QTRational::q(), t = QTRational::t();
    QTRational lhs, rhs;
    for (const auto& lam : strips(mu, StripKind::vertical, StripDirection::add, k)) lhs += proof_L(lam, mu);
    for (int s = 0; s <= k; ++s) {
        QTRational inner;
        for (const auto& g : strips(mu, StripKind::vertical, StripDirection::remove, k - s)) inner += proof_R(mu, g);
        rhs += poch_ratio(-q, t, s) * inner;
    }
    if (lhs != rhs) return false;
    if (!distinct_parts(mu)) return true;

    int m = mu.length();
    LetterAlphabet a = kawanaka_letters(mu);
    const LetterAlphabet Z{t.inverse()};
    using RK = ResultantKind;
    for (int s = 0; s <= k; ++s)
        for (unsigned alpha : masks_of_size(m, k - s)) {
            LetterAlphabet AJ = pick(a, alpha, true), AI = pick(a, alpha, false);
            std::vector<int> plus(mu.parts()), minus(mu.parts());
            for (int i = 0; i < m; ++i)
                if (alpha >> i & 1U) {
                    ++plus[static_cast<std::size_t>(i)];
                    --minus[static_cast<std::size_t>(i)];
                }
            plus.insert(plus.end(), static_cast<std::size_t>(s), 1);
            QTRational l_form = poch_ratio(-q, t, s) * resultant_fn(RK::w, Z, AI, true) *
                                resultant_fn(RK::V, Z, scaled(AI, t_power(t, s - 1)), true) *
                                resultant_fn(RK::W, Z, scaled(AJ, t.pow(s)), true) * resultant_fn(RK::Phi, AJ, AI, true);
            if (proof_L(Partition(plus), mu) != l_form) return false;
            QTRational r_form = resultant_fn(RK::w, Z, AJ, true) * resultant_fn(RK::Phi, AI, AJ, true);
            if (proof_R(mu, from_rows(minus)) != r_form) return false;
        }
    return true;
}

IdentitySides schur_identity_sides(int n, int deg) {
    if (n < 1 || deg < 0) throw std::invalid_argument("schur identity: need n >= 1 and deg >= 0");
    IdentitySides out{Polynomial(n), Polynomial(n)};
    for (int d = 0; d <= deg; ++d)
        for (const auto& lam : enumerate(d, n)) out.lhs += evaluate(SymFunc(Basis::s, lam), n);
    auto one = [](int) { return QTRational(1); };
    out.rhs = product_side(n, deg, one, one);
    return out;
}

bool verify_schur_identity(int n, int deg) {
    IdentitySides sd = schur_identity_sides(n, deg);
    return sd.lhs == sd.rhs;
}

IdentitySides kawanaka_sides(int n, int deg) {
    if (n < 1 || deg < 0) throw std::invalid_argument("kawanaka: need n >= 1 and deg >= 0");
    IdentitySides out{Polynomial(n), Polynomial(n)};
    auto squared = [](const QTRational& c) { return c.scale_exponents(2, 2); };
    for (int d = 0; d <= deg; ++d)
        for (const auto& lam : enumerate(d, n)) {
            QTRational c = 1;
            for (auto bx : boxes(lam)) c *= h_factor(lam, bx, HKind::H);
            out.lhs += c * evaluate(macdonald_P(lam).map_coefficients(squared), n);
        }
    const MonomialLetter q1{1, 0}, q2{2, 0};
    auto single = [&](int k) { return q_pochhammer({0, 1, true}, k, q1) / q_pochhammer(q1, k, q1); };
    auto pair = [&](int k) { return q_pochhammer({0, 2}, k, q2) / q_pochhammer(q2, k, q2); };
    out.rhs = product_side(n, deg, single, pair);
    return out;
}

KawanakaReport verify_kawanaka(int n, int deg) {
    IdentitySides sd = kawanaka_sides(n, deg);
    KawanakaReport rep{n, deg, true, {}};
    for (int d = 0; d <= deg; ++d) {
        bool eq = sd.lhs.homogeneous_part(d) == sd.rhs.homogeneous_part(d);
        rep.per_degree.push_back({d, eq});
        rep.equal = rep.equal && eq;
    }
    return rep;
}

bool kawanaka_schur_degeneration(int n, int deg) {
    IdentitySides k = kawanaka_sides(n, deg);
    IdentitySides s = schur_identity_sides(n, deg);
    const QTRational t = QTRational::t();
    auto at = [&](const QTRational& c) { return c.substitute(-t, t); };
    return k.lhs.map_coefficients(at) == s.lhs && k.rhs.map_coefficients(at) == s.rhs;
}

BigRational SampleGenerator::next() {
    std::uniform_int_distribution<int> num(1, 50), den(1, 50), sign(0, 1);
    BigRational r(num(rng_) * (sign(rng_) ? -1 : 1), den(rng_));
    r.canonicalize();
    return r;
}

LetterAlphabet SampleGenerator::letters(int n) {
    std::vector<BigRational> seen;
    LetterAlphabet out;
    while (static_cast<int>(out.size()) < n) {
        BigRational x = next();
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        seen.push_back(x);
        out.emplace_back(x);
    }
    return out;
}

}  // namespace symfunc
