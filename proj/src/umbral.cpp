#include "symfunc/umbral.hpp"

#include <algorithm>
#include <stdexcept>

namespace symfunc {

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<BigRational> series_mul(const std::vector<BigRational>& a, const std::vector<BigRational>& b, int order) {
    std::vector<BigRational> r(static_cast<std::size_t>(order + 1), 0);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

template <class F>
DeltaSeries make_series(int order, F coeff) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    std::vector<BigRational> c;
    for (int n = 1; n <= order; ++n) {
        BigRational x = coeff(n);
        x.canonicalize();
        c.push_back(x);
    }
    return DeltaSeries(std::move(c));
}

}  // namespace

DeltaSeries::DeltaSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("delta series needs at least one coefficient");
    if (c_[0] == 0) throw std::invalid_argument("delta series needs a nonzero linear term");
}

DeltaSeries DeltaSeries::identity(int order) {
    return make_series(order, [](int n) -> BigRational { return BigRational(n == 1 ? 1 : 0); });
}

DeltaSeries DeltaSeries::exp_minus_one(int order) {
    return make_series(order, [](int n) -> BigRational { return BigRational(1) / BigRational(factorial(n)); });
}

DeltaSeries DeltaSeries::one_minus_exp_neg(int order) {
    return make_series(order, [](int n) -> BigRational { return BigRational(n % 2 ? 1 : -1) / BigRational(factorial(n)); });
}

DeltaSeries DeltaSeries::log_one_plus(int order) {
    return make_series(order, [](int n) -> BigRational { return BigRational(n % 2 ? 1 : -1, n); });
}

DeltaSeries DeltaSeries::neg_log_one_minus(int order) {
    return make_series(order, [](int n) -> BigRational { return BigRational(1, n); });
}

DeltaSeries DeltaSeries::mobius(int order) {
    return make_series(order, [](int) -> BigRational { return BigRational(1); });
}

DeltaSeries DeltaSeries::mobius_inv(int order) {
    return make_series(order, [](int n) -> BigRational { return BigRational(n % 2 ? 1 : -1); });
}

std::optional<DeltaSeries> DeltaSeries::named(std::string_view name, int order) {
    if (name == "exp-1") return exp_minus_one(order);
    if (name == "neg-exp") return one_minus_exp_neg(order);
    if (name == "mobius") return mobius(order);
    if (name == "mobius-inv") return mobius_inv(order);
    if (name == "log1p") return log_one_plus(order);
    if (name == "identity") return identity(order);
    return std::nullopt;
}

BigRational DeltaSeries::coeff(int n) const {
    if (n < 1 || n > order()) return 0;
    return c_[static_cast<std::size_t>(n - 1)];
}

std::vector<BigRational> DeltaSeries::power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    int N = order();
    std::vector<BigRational> base(static_cast<std::size_t>(N + 1), 0);
    for (int n = 1; n <= N; ++n) base[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n - 1)];
    std::vector<BigRational> r(static_cast<std::size_t>(N + 1), 0);
    r[0] = 1;
    for (int i = 0; i < k; ++i) r = series_mul(r, base, N);
    return r;
}

DeltaSeries DeltaSeries::reflect() const {
    std::vector<BigRational> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return DeltaSeries(std::move(c));
}

DeltaSeries compose(const DeltaSeries& f, const DeltaSeries& g) {
    int N = std::min(f.order(), g.order());
    std::vector<BigRational> acc(static_cast<std::size_t>(N + 1), 0);
    std::vector<BigRational> gk(static_cast<std::size_t>(N + 1), 0);
    gk[0] = 1;
    std::vector<BigRational> gs = g.power(1);
    for (int k = 1; k <= N; ++k) {
        gk = series_mul(gk, gs, N);
        BigRational fk = f.coeff(k);
        if (fk == 0) continue;
        for (int n = 0; n <= N; ++n) acc[static_cast<std::size_t>(n)] += fk * gk[static_cast<std::size_t>(n)];
    }
    return DeltaSeries(std::vector<BigRational>(acc.begin() + 1, acc.end()));
}

DeltaSeries revert(const DeltaSeries& f) {
    int N = f.order();
    std::vector<BigRational> h(static_cast<std::size_t>(N), 0);
    h[0] = BigRational(1) / f.coeff(1);
    // [z^n] f(h(z)) = f_1 h_n + (terms in h_1..h_{n-1}); solve order by order.
    for (int n = 2; n <= N; ++n) {
        DeltaSeries partial(h);
        std::vector<BigRational> hs = partial.power(1);
        std::vector<BigRational> hk = hs;
        BigRational rest = 0;
        for (int k = 2; k <= n; ++k) {
            hk = series_mul(hk, hs, N);
            rest += f.coeff(k) * hk[static_cast<std::size_t>(n)];
        }
        h[static_cast<std::size_t>(n - 1)] = -rest / f.coeff(1);
    }
    return DeltaSeries(std::move(h));
}

RationalMatrix jabotinsky(const DeltaSeries& f) {
    int N = f.order();
    RationalMatrix J(static_cast<std::size_t>(N), std::vector<BigRational>(static_cast<std::size_t>(N), 0));
    std::vector<BigRational> fs = f.power(1), fk = fs;
    for (int k = 1; k <= N; ++k) {
        if (k > 1) fk = series_mul(fk, fs, N);
        for (int n = k; n <= N; ++n) J[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] = fk[static_cast<std::size_t>(n)];
    }
    return J;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    std::size_t N = a.size(), K = b.size(), M = b.empty() ? 0 : b[0].size();
    RationalMatrix c(N, std::vector<BigRational>(M, 0));
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i].size() != K) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < K; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < M; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

DeltaSeries generator_series(const DeltaSeries& f, UmbralConvention conv) {
    return conv == UmbralConvention::generating ? f : revert(f);
}

namespace {

void check_degree(const DeltaSeries& f, int n) {
    if (n < 0 || n > f.order()) throw std::invalid_argument("degree outside the series truncation order");
}

// sum_k [z^n] G^k b_k in basis b.
SymFunc generators(const DeltaSeries& G, int n, Basis b) {
    check_degree(G, n);
    if (n == 0) return SymFunc::constant(1, b);
    SymFunc r(b);
    for (int k = 1; k <= n; ++k) r.add_term({k}, QTRational(G.power(k)[static_cast<std::size_t>(n)]));
    return r;
}

SymFunc jacobi_trudi(const Partition& lambda, Basis b, const std::function<SymFunc(int)>& gen) {
    int n = lambda.length();
    SymFunc zero(b);
    SymFunc d = determinant(n, b, [&](int i, int j) {
        int k = lambda[i] + j - i;
        return k < 0 ? zero : gen(k);
    });
    return convert(d, Basis::s);
}

}  // namespace

SymFunc generalized_h(const DeltaSeries& f, int n, UmbralConvention conv) {
    return generators(generator_series(f, conv), n, Basis::h);
}

SymFunc generalized_e(const DeltaSeries& f, int n, UmbralConvention conv) {
    return generators(generator_series(f, conv).reflect(), n, Basis::e);
}

SymFunc lr_basis(const DeltaSeries& f, const Partition& lambda, UmbralConvention conv) {
    check_degree(f, lambda.size());
    DeltaSeries G = generator_series(f, conv);
    std::map<int, SymFunc> cache;
    return jacobi_trudi(lambda, Basis::h, [&](int k) -> SymFunc {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, generators(G, k, Basis::h)).first;
        return it->second;
    });
}

SymFunc lr_basis_columns(const DeltaSeries& f, const Partition& lambda, UmbralConvention conv) {
    check_degree(f, lambda.size());
    DeltaSeries G = generator_series(f, conv).reflect();
    std::map<int, SymFunc> cache;
    return jacobi_trudi(conjugate(lambda), Basis::e, [&](int k) -> SymFunc {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, generators(G, k, Basis::e)).first;
        return it->second;
    });
}

SymFunc dual_basis(const DeltaSeries& f, const Partition& lambda, int deg, UmbralConvention conv) {
    if (lambda.size() > deg) throw std::invalid_argument("partition larger than the truncation degree");
    check_degree(f, deg);
    // F is the inverse of the generator series G.
    DeltaSeries F = conv == UmbralConvention::generating ? revert(f) : f;
    // image of p_r, truncated at degree deg
    std::map<int, SymFunc> image;
    for (int r = 1; r <= deg; ++r) {
        SymFunc pr(Basis::p);
        std::vector<BigRational> Fr = F.power(r);
        for (int m = r; m <= deg; ++m) pr.add_term({m}, QTRational(Fr[static_cast<std::size_t>(m)]));
        image.emplace(r, std::move(pr));
    }
    auto truncate = [deg](const SymFunc& g) {
        SymFunc out(g.basis());
        for (const auto& [mu, c] : g.terms())
            if (mu.size() <= deg) out.add_term(mu, c);
        return out;
    };
    SymFunc sp = convert(SymFunc(Basis::s, lambda), Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [mu, c] : sp.terms()) {
        SymFunc term = SymFunc::constant(c, Basis::p);
        for (int part : mu.parts()) term = truncate(union_product(term, image.at(part)));
        out += term;
    }
    return convert(out, Basis::s);
}

std::map<std::pair<Partition, Partition>, QTRational> lr_structure_constants(const DeltaSeries& f, const Partition& lambda,
                                                                             UmbralConvention conv) {
    auto element = [&](const Partition& mu) { return lr_basis(f, mu, conv); };
    Tensor t = convert(coproduct(lr_basis(f, lambda, conv)), Basis::s, Basis::s);
    // expand the left factor, then the right one
    std::map<Partition, SymFunc> by_right;
    for (const auto& [key, c] : t.terms) by_right.try_emplace(key.second, Basis::s).first->second.add_term(key.first, c);
    std::map<Partition, SymFunc> by_left;
    for (const auto& [nu, left] : by_right)
        for (const auto& [mu, c] : expand_in_schur_leading_basis(left, element))
            by_left.try_emplace(mu, Basis::s).first->second.add_term(nu, c);
    std::map<std::pair<Partition, Partition>, QTRational> out;
    for (const auto& [mu, right] : by_left)
        for (const auto& [nu, c] : expand_in_schur_leading_basis(right, element)) out[{mu, nu}] = c;
    return out;
}

const BigRational& TransitionMatrix::at(const Partition& row, const Partition& col) const {
    auto find = [&](const Partition& p) {
        auto it = std::find(index.begin(), index.end(), p);
        if (it == index.end()) throw std::out_of_range("partition outside the transition matrix");
        return static_cast<std::size_t>(it - index.begin());
    };
    return entries[find(row)][find(col)];
}

TransitionMatrix transition_matrix(const DeltaSeries& f, int deg, UmbralConvention conv) {
    check_degree(f, deg);
    TransitionMatrix m;
    m.index = enumerate_upto(deg);
    std::size_t N = m.index.size();
    m.entries.assign(N, std::vector<BigRational>(N, 0));
    for (std::size_t j = 0; j < N; ++j) {
        SymFunc b = lr_basis(f, m.index[j], conv);
        for (std::size_t i = 0; i < N; ++i) {
            QTRational c = b.coeff(m.index[i]);
            if (!c.is_zero()) m.entries[i][j] = c.constant_value();
        }
    }
    return m;
}

std::vector<std::vector<BigInt>> stirling_lah_extract(const TransitionMatrix& m, int deg) {
    std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(deg), std::vector<BigInt>(static_cast<std::size_t>(deg), 0));
    for (int k = 1; k <= deg; ++k)
        for (int n = 1; n <= deg; ++n) {
            BigRational x = m.at({k}, {n}) * BigRational(factorial(n)) / BigRational(factorial(k));
            x.canonicalize();
            if (x.get_den() != 1) throw std::logic_error("non-integral Stirling/Lah entry");
            out[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - 1)] = x.get_num();
        }
    return out;
}

}  // namespace symfunc
