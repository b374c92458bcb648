#include "symfunc/macdonald.hpp"

#include "symfunc/detail/cache.hpp"

#include <algorithm>
#include <stdexcept>

namespace symfunc {

namespace {

const QTRational& qt_weight(const Partition& rho) {
    static detail::WriteOnceCache<Partition, QTRational> cache;
    return cache.get(rho, [&] {
        QTRational w{z_lambda(rho)};
        for (int part : rho.parts())
            w *= (QTRational(1) - QTRational::monomial(part, 0)) / (QTRational(1) - QTRational::monomial(0, part));
        return w;
    });
}

struct PData {
    SymFunc m;      // in the m basis
    SymFunc p;      // in the p basis
    // p-coefficient times weight, divided by the norm: <f, P>/<P, P> is
    // sum_rho f_rho * dual_rho for f in the p basis.
    std::map<Partition, QTRational> dual;
};

const PData& p_data(const Partition& lambda);

PData build(const Partition& lambda) {
    SymFunc mp = convert(SymFunc(Basis::m, lambda), Basis::p);
    PData d{SymFunc(Basis::m, lambda), mp, {}};
    for (const auto& nu : enumerate(lambda.size())) {
        if (nu == lambda || !dominance_leq(nu, lambda)) continue;
        const PData& below = p_data(nu);
        QTRational c;
        for (const auto& [rho, a] : mp.terms()) {
            auto it = below.dual.find(rho);
            if (it != below.dual.end()) c += a * it->second;
        }
        if (c.is_zero()) continue;
        d.m -= c * below.m;
        d.p -= c * below.p;
    }
    QTRational norm;
    for (const auto& [rho, a] : d.p.terms()) norm += a * a * qt_weight(rho);
    for (const auto& [rho, a] : d.p.terms()) d.dual.emplace(rho, a * qt_weight(rho) / norm);
    return d;
}

const PData& p_data(const Partition& lambda) {
    static detail::WriteOnceCache<Partition, PData> cache;
    return cache.get(lambda, [&] { return build(lambda); });
}

}  // namespace

QTRational qt_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::p), gp = convert(g, Basis::p);
    QTRational s;
    for (const auto& [rho, a] : fp.terms()) {
        auto it = gp.terms().find(rho);
        if (it != gp.terms().end()) s += a * it->second * qt_weight(rho);
    }
    return s;
}

const SymFunc& macdonald_P(const Partition& lambda) { return p_data(lambda).m; }

SymFunc macdonald_Q(const Partition& lambda) {
    const PData& d = p_data(lambda);
    QTRational norm;
    for (const auto& [rho, a] : d.p.terms()) norm += a * a * qt_weight(rho);
    return norm.inverse() * d.m;
}

QTRational norm_formula(const Partition& lambda) {
    MonomialSum tq = MonomialSum::t() - MonomialSum::q();
    return omega_eval(tq * b_stat(lambda));
}

QTRational pieri_coeff(const Partition& lambda, const Partition& mu, PieriKind kind) {
    bool vertical = kind == PieriKind::phi_prime || kind == PieriKind::psi_prime;
    bool ok = vertical ? is_vertical_strip(lambda, mu) : is_horizontal_strip(lambda, mu);
    if (!ok) throw std::invalid_argument("pieri_coeff: " + lambda.str() + "/" + mu.str() + " is not a strip of the required kind");
    StripStats st = strip_stats(lambda, mu);
    MonomialSum qt = MonomialSum::q() - MonomialSum::t();
    switch (kind) {
        case PieriKind::phi:
            return omega_eval(qt * st.C);
        case PieriKind::phi_prime:
            return omega_eval(-qt * st.R);
        case PieriKind::psi:
            return omega_eval(-qt * st.Ctilde);
        case PieriKind::psi_prime:
            return omega_eval(qt * st.Rtilde);
    }
    throw std::logic_error("unknown Pieri kind");
}

std::vector<std::pair<Partition, QTRational>> expand_in_P(const SymFunc& f) {
    SymFunc r = convert(f, Basis::m);
    std::vector<std::pair<Partition, QTRational>> out;
    while (!r.is_zero()) {
        // the lexicographically largest partition of the top degree leads
        auto it = r.terms().rbegin();
        int d = it->first.size();
        auto lead = it;
        for (auto jt = r.terms().rbegin(); jt != r.terms().rend() && jt->first.size() == d; ++jt) lead = jt;
        Partition lam = lead->first;
        QTRational c = lead->second;
        out.emplace_back(lam, c);
        r -= c * macdonald_P(lam);
        if (!r.coeff(lam).is_zero()) throw std::logic_error("expand_in_P failed to eliminate a leading term");
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return GradedOrder{}(a.first, b.first); });
    return out;
}

std::vector<std::pair<Partition, QTRational>> recurrence_expand(const Partition& lambda) {
    std::vector<std::pair<Partition, QTRational>> out;
    for (const auto& [k, g] : translate(macdonald_P(lambda)))
        for (auto& term : expand_in_P(g)) out.push_back(std::move(term));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return GradedOrder{}(b.first, a.first); });
    return out;
}

SymFunc omega_qt(const SymFunc& f) { return omega_involution(plethysm_scale(f, macdonald_factor_inverse())); }

SymFunc g_gen(int n) {
    if (n < 0) throw std::invalid_argument("g_gen: negative degree");
    if (n == 0) return SymFunc::constant(1, Basis::h);
    return plethysm_scale(SymFunc(Basis::h, {n}), macdonald_factor());
}

Polynomial operator_D_apply(const Polynomial& f, int n) {
    if (f.nvars() != n) throw std::invalid_argument("operator_D_apply: variable count mismatch");
    if (!f.is_symmetric()) throw std::invalid_argument("operator_D_apply: input is not symmetric");
    // Clear denominators with the Vandermonde prod_{a<b}(x_a - x_b), then
    // divide it back out exactly.
    QTRational t = QTRational::t(), q = QTRational::q();
    Polynomial numer(n);
    for (int i = 0; i < n; ++i) {
        Polynomial term = f.scale_variable(i, q);
        Polynomial xi = Polynomial::variable(n, i);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            term = term * (t * xi - Polynomial::variable(n, j));
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (a == i || b == i) continue;
                term = term * (Polynomial::variable(n, a) - Polynomial::variable(n, b));
            }
        if (i % 2) numer -= term;
        else numer += term;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) numer = numer.divide_by_difference(a, b);
    return numer;
}

QTRational D_eigenvalue(const Partition& lambda, int n) {
    QTRational s;
    for (int i = 1; i <= n; ++i) s += QTRational::monomial(lambda[i - 1], n - i);
    return s;
}

}  // namespace symfunc
