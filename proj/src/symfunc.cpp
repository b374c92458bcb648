#include "symfunc/symfunc.hpp"

#include "symfunc/detail/cache.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace symfunc {

using Matrix = std::vector<std::vector<BigRational>>;

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m:
            return "m";
        case Basis::h:
            return "h";
        case Basis::e:
            return "e";
        case Basis::p:
            return "p";
        case Basis::s:
            return "s";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    if (name == "m") return Basis::m;
    if (name == "h") return Basis::h;
    if (name == "e") return Basis::e;
    if (name == "p") return Basis::p;
    if (name == "s") return Basis::s;
    throw std::invalid_argument("unknown basis: " + std::string(name));
}

// ---------------- SymFunc ----------------

SymFunc::SymFunc(Basis b, const Partition& lambda, const QTRational& c) : basis_(b) { add_term(lambda, c); }

QTRational SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QTRational() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const QTRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SymFunc::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

SymFunc SymFunc::homogeneous_part(int d) const {
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.size() == d) r.terms_.emplace(lam, c);
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& g) {
    if (g.basis_ != basis_) return *this += convert(g, basis_);
    for (const auto& [lam, c] : g.terms_) add_term(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& g) {
    if (g.basis_ != basis_) return *this -= convert(g, basis_);
    for (const auto& [lam, c] : g.terms_) add_term(lam, -c);
    return *this;
}

SymFunc operator-(const SymFunc& f) {
    SymFunc r(f.basis_);
    for (const auto& [lam, c] : f.terms_) r.terms_.emplace(lam, -c);
    return r;
}

SymFunc operator*(const QTRational& c, const SymFunc& f) {
    SymFunc r(f.basis_);
    if (c.is_zero()) return r;
    for (const auto& [lam, x] : f.terms_) r.terms_.emplace(lam, c * x);
    return r;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lam, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + basis_name(basis_) + lam.str();
    }
    return s;
}

void Tensor::add_term(const Partition& a, const Partition& b, const QTRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(std::make_pair(a, b), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

QTRational PlethysticFactor::power_sum(int r) const {
    QTRational d = den.power_sum(r);
    if (d.is_zero()) throw PoleError("plethystic factor has a vanishing denominator");
    return num.power_sum(r) / d;
}

PlethysticFactor macdonald_factor() { return {MonomialSum::one() - MonomialSum::t(), MonomialSum::one() - MonomialSum::q()}; }

PlethysticFactor macdonald_factor_inverse() {
    return {MonomialSum::one() - MonomialSum::q(), MonomialSum::one() - MonomialSum::t()};
}

// ---------------- caches ----------------

namespace {

using detail::WriteOnceCache;

struct DegreeIndex {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
};

const DegreeIndex& degree_index(int n) {
    static WriteOnceCache<int, DegreeIndex> cache;
    return cache.get(n, [n] {
        DegreeIndex d;
        d.parts = enumerate(n);
        for (std::size_t i = 0; i < d.parts.size(); ++i) d.index[d.parts[i]] = i;
        return d;
    });
}

// ---- counting matrices with prescribed row and column sums ----

enum class RowRule { any, zero_one, single };

class MatrixCounter {
public:
    MatrixCounter(const Partition& rows, RowRule rule) : rows_(rows.parts()), rule_(rule) {}

    BigInt count(std::vector<int> caps) { return rec(0, std::move(caps)); }

private:
    BigInt rec(std::size_t i, std::vector<int> caps) {
        std::sort(caps.begin(), caps.end());
        if (i == rows_.size()) return std::all_of(caps.begin(), caps.end(), [](int c) { return c == 0; }) ? 1 : 0;
        auto key = std::make_pair(i, caps);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        BigInt total = 0;
        int need = rows_[i];
        if (rule_ == RowRule::single) {
            for (std::size_t j = 0; j < caps.size(); ++j) {
                if (caps[j] < need) continue;
                std::vector<int> c = caps;
                c[j] -= need;
                total += rec(i + 1, c);
            }
        } else {
            std::vector<int> c = caps;
            distribute(i, 0, need, c, total);
        }
        memo_.emplace(key, total);
        return total;
    }

    void distribute(std::size_t i, std::size_t j, int left, std::vector<int>& caps, BigInt& total) {
        if (left == 0) {
            total += rec(i + 1, caps);
            return;
        }
        if (j == caps.size()) return;
        int hi = rule_ == RowRule::zero_one ? std::min(1, caps[j]) : std::min(left, caps[j]);
        for (int v = 0; v <= hi && v <= left; ++v) {
            caps[j] -= v;
            distribute(i, j + 1, left - v, caps, total);
            caps[j] += v;
        }
    }

    std::vector<int> rows_;
    RowRule rule_;
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

BigInt kostka_rec(const Partition& lambda, const std::vector<int>& content, std::map<std::pair<Partition, std::size_t>, BigInt>& memo) {
    if (content.empty()) return lambda.size() == 0 ? 1 : 0;
    auto key = std::make_pair(lambda, content.size());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int last = content.back();
    std::vector<int> rest(content.begin(), content.end() - 1);
    BigInt total = 0;
    if (last <= lambda.size())
        for (const auto& nu : strips(lambda, StripKind::horizontal, StripDirection::remove, last)) total += kostka_rec(nu, rest, memo);
    memo.emplace(key, total);
    return total;
}

Matrix compute_to_m(Basis b, int n) {
    const auto& idx = degree_index(n);
    std::size_t N = idx.parts.size();
    Matrix M(N, std::vector<BigRational>(N, 0));
    for (std::size_t i = 0; i < N; ++i) {
        const Partition& lam = idx.parts[i];
        if (b == Basis::m) {
            M[i][i] = 1;
            continue;
        }
        if (b == Basis::s) {
            for (std::size_t j = 0; j < N; ++j) M[i][j] = kostka(lam, idx.parts[j]);
            continue;
        }
        RowRule rule = b == Basis::h ? RowRule::any : b == Basis::e ? RowRule::zero_one : RowRule::single;
        MatrixCounter counter(lam, rule);
        for (std::size_t j = 0; j < N; ++j) M[i][j] = counter.count(idx.parts[j].parts());
    }
    return M;
}

Matrix invert(const Matrix& A) {
    std::size_t N = A.size();
    Matrix a = A;
    Matrix inv(N, std::vector<BigRational>(N, 0));
    for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && a[piv][col] == 0) ++piv;
        if (piv == N) throw std::logic_error("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        BigRational d = a[col][col];
        for (std::size_t j = 0; j < N; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || a[r][col] == 0) continue;
            BigRational f = a[r][col];
            for (std::size_t j = 0; j < N; ++j) {
                if (a[col][j] != 0) a[r][j] -= f * a[col][j];
                if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    std::size_t N = A.size(), K = B.size(), M = B.empty() ? 0 : B[0].size();
    Matrix C(N, std::vector<BigRational>(M, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < K; ++k) {
            if (A[i][k] == 0) continue;
            for (std::size_t j = 0; j < M; ++j)
                if (B[k][j] != 0) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

const Matrix& conversion_matrix(Basis from, Basis to, int n) {
    static WriteOnceCache<std::tuple<int, int, int>, Matrix> cache;
    return cache.get({static_cast<int>(from), static_cast<int>(to), n}, [&] {
        if (to == Basis::m) return to_m_matrix(from, n);
        if (from == Basis::m) return from_m_matrix(to, n);
        return matmul(to_m_matrix(from, n), from_m_matrix(to, n));
    });
}

// Distinct arrangements of a multiset, summed coordinatewise with another,
// counted only when the sum is a partition with no zero entries.
using Multiset = std::map<int, int>;

void pair_arrangements(std::size_t pos, std::size_t L, Multiset& a, Multiset& b, std::vector<int>& sum,
                       std::map<Partition, BigInt>& out) {
    if (pos == L) {
        out[Partition(sum)] += 1;
        return;
    }
    int bound = pos == 0 ? std::numeric_limits<int>::max() : sum[pos - 1];
    for (auto& [va, ca] : a) {
        if (ca == 0) continue;
        --ca;
        for (auto& [vb, cb] : b) {
            if (cb == 0) continue;
            int s = va + vb;
            if (s == 0 || s > bound) continue;
            --cb;
            sum.push_back(s);
            pair_arrangements(pos + 1, L, a, b, sum, out);
            sum.pop_back();
            ++cb;
        }
        ++ca;
    }
}

const std::vector<std::pair<Partition, BigInt>>& m_product(const Partition& lam, const Partition& mu) {
    static WriteOnceCache<std::pair<Partition, Partition>, std::vector<std::pair<Partition, BigInt>>> cache;
    return cache.get({lam, mu}, [&] {
        std::map<Partition, BigInt> acc;
        int lo = std::max(lam.length(), mu.length()), hi = lam.length() + mu.length();
        for (int L = lo; L <= hi; ++L) {
            Multiset a, b;
            for (int p : lam.parts()) ++a[p];
            for (int p : mu.parts()) ++b[p];
            if (L > lam.length()) a[0] = L - lam.length();
            if (L > mu.length()) b[0] = L - mu.length();
            std::vector<int> sum;
            pair_arrangements(0, static_cast<std::size_t>(L), a, b, sum, acc);
        }
        return std::vector<std::pair<Partition, BigInt>>(acc.begin(), acc.end());
    });
}

}  // namespace

const Matrix& to_m_matrix(Basis b, int n) {
    static WriteOnceCache<std::pair<int, int>, Matrix> cache;
    return cache.get({static_cast<int>(b), n}, [&] { return compute_to_m(b, n); });
}

const Matrix& from_m_matrix(Basis b, int n) {
    static WriteOnceCache<std::pair<int, int>, Matrix> cache;
    return cache.get({static_cast<int>(b), n}, [&] { return invert(to_m_matrix(b, n)); });
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    std::map<std::pair<Partition, std::size_t>, BigInt> memo;
    return kostka_rec(lambda, mu.parts(), memo);
}

// ---------------- conversion ----------------

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(target);
    std::map<int, std::vector<std::pair<std::size_t, const QTRational*>>> by_degree;
    for (const auto& [lam, c] : f.terms()) {
        const auto& idx = degree_index(lam.size());
        by_degree[lam.size()].emplace_back(idx.index.at(lam), &c);
    }
    for (const auto& [n, entries] : by_degree) {
        const Matrix& M = conversion_matrix(f.basis(), target, n);
        const auto& idx = degree_index(n);
        std::size_t N = idx.parts.size();
        for (std::size_t j = 0; j < N; ++j) {
            QTRational acc;
            for (const auto& [i, c] : entries) {
                const BigRational& x = M[i][j];
                if (x == 0) continue;
                acc += QTRational(x) * *c;
            }
            out.add_term(idx.parts[j], acc);
        }
    }
    return out;
}

SymFunc union_product(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != g.basis() || f.basis() == Basis::m || f.basis() == Basis::s)
        throw std::invalid_argument("union_product needs a common multiplicative basis");
    SymFunc r(f.basis());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) r.add_term(combine(a, b, CombineMode::union_), ca * cb);
    return r;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    Basis b = f.basis();
    if (g.basis() == b && (b == Basis::h || b == Basis::e || b == Basis::p)) return union_product(f, g);
    SymFunc fm = convert(f, Basis::m), gm = convert(g, Basis::m);
    SymFunc r(Basis::m);
    for (const auto& [a, ca] : fm.terms())
        for (const auto& [c, cc] : gm.terms()) {
            QTRational w = ca * cc;
            for (const auto& [nu, k] : m_product(a, c)) r.add_term(nu, w * QTRational(k));
        }
    return convert(r, b);
}

QTRational hall_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc fm = convert(f, Basis::m), gh = convert(g, Basis::h);
    QTRational s;
    for (const auto& [lam, c] : fm.terms()) {
        auto it = gh.terms().find(lam);
        if (it != gh.terms().end()) s += c * it->second;
    }
    return s;
}

SymFunc omega_involution(const SymFunc& f) {
    if (f.basis() == Basis::p) {
        SymFunc r(Basis::p);
        for (const auto& [lam, c] : f.terms()) r.add_term(lam, (lam.size() - lam.length()) % 2 ? -c : c);
        return r;
    }
    SymFunc fh = convert(f, Basis::h);
    SymFunc fe(Basis::e);
    for (const auto& [lam, c] : fh.terms()) fe.add_term(lam, c);
    return convert(fe, f.basis());
}

SymFunc determinant(int n, Basis b, const std::function<SymFunc(int, int)>& entry) {
    if (b != Basis::h && b != Basis::e && b != Basis::p) throw std::invalid_argument("determinant needs a multiplicative basis");
    if (n == 0) return SymFunc::constant(1, b);
    if (n > 30) throw std::invalid_argument("determinant too large");
    std::vector<std::vector<SymFunc>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SymFunc x = entry(i, j);
            if (x.basis() != b) x = convert(x, b);
            a[static_cast<std::size_t>(i)].push_back(std::move(x));
        }
    std::unordered_map<std::uint32_t, SymFunc> memo;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::function<const SymFunc&(std::uint32_t)> rec = [&](std::uint32_t mask) -> const SymFunc& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        SymFunc acc(b);
        if (mask == full) {
            acc = SymFunc::constant(1, b);
        } else {
            int row = std::popcount(mask);
            int free_before = 0;
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const SymFunc& x = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
                if (!x.is_zero()) {
                    const SymFunc& minor = rec(mask | (1u << c));
                    if (!minor.is_zero()) {
                        SymFunc term = union_product(x, minor);
                        if (free_before % 2)
                            acc -= term;
                        else
                            acc += term;
                    }
                }
                ++free_before;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return rec(0);
}

SymFunc skew_schur(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::invalid_argument("skew_schur requires mu contained in lambda");
    int n = lambda.length();
    SymFunc d = determinant(n, Basis::h, [&](int i, int j) {
        int k = lambda[i] - mu[j] - i + j;
        if (k < 0) return SymFunc(Basis::h);
        return SymFunc(Basis::h, k == 0 ? Partition{} : Partition{k});
    });
    return convert(d, Basis::s);
}

SymFunc skew_schur_dual(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::invalid_argument("skew_schur requires mu contained in lambda");
    Partition lc = conjugate(lambda), mc = conjugate(mu);
    int n = lc.length();
    SymFunc d = determinant(n, Basis::e, [&](int i, int j) {
        int k = lc[i] - mc[j] - i + j;
        if (k < 0) return SymFunc(Basis::e);
        return SymFunc(Basis::e, k == 0 ? Partition{} : Partition{k});
    });
    return convert(d, Basis::s);
}

std::map<std::pair<Partition, Partition>, BigInt> lr_coefficients(const Partition& lambda) {
    std::map<std::pair<Partition, Partition>, BigInt> out;
    for (const auto& mu : enumerate_upto(lambda.size())) {
        if (!contains(lambda, mu)) continue;
        const SymFunc skew = skew_schur(lambda, mu);
        for (const auto& [nu, c] : skew.terms()) {
            if (!c.is_constant() || c.constant_value().get_den() != 1)
                throw std::logic_error("non-integral Littlewood-Richardson coefficient");
            out[{mu, nu}] = c.constant_value().get_num();
        }
    }
    return out;
}

SymFunc plethysm_scale(const SymFunc& f, const PlethysticFactor& factor) {
    SymFunc fp = convert(f, Basis::p);
    std::map<int, QTRational> cache;
    auto pr = [&](int r) -> const QTRational& {
        auto it = cache.find(r);
        if (it == cache.end()) it = cache.emplace(r, factor.power_sum(r)).first;
        return it->second;
    };
    SymFunc r(Basis::p);
    for (const auto& [lam, c] : fp.terms()) {
        QTRational w = c;
        for (int part : lam.parts()) w *= pr(part);
        r.add_term(lam, w);
    }
    return convert(r, f.basis());
}

Polynomial evaluate(const SymFunc& f, int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    Polynomial out(n);
    const SymFunc fm = convert(f, Basis::m);
    for (const auto& [lam, c] : fm.terms()) {
        if (lam.length() > n) continue;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < lam.length(); ++i) e[static_cast<std::size_t>(i)] = lam[i];
        std::sort(e.begin(), e.end());
        do {
            out.add_term(e, c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

std::variant<Polynomial, SymFunc> apply_alphabet(const SymFunc& f, const AlphabetSpec& a) {
    if (const auto* fin = std::get_if<AlphabetSpec::Finite>(&a.kind)) return evaluate(f, fin->n);
    return plethysm_scale(f, std::get<AlphabetSpec::Scaled>(a.kind).factor);
}

std::vector<std::pair<int, SymFunc>> translate(const SymFunc& f, std::optional<int> degree_cap) {
    int cap = degree_cap.value_or(std::max(0, f.max_degree()));
    std::map<int, SymFunc> parts;
    const SymFunc fm = convert(f, Basis::m);
    for (const auto& [lam, c] : fm.terms()) {
        auto& zero = parts.try_emplace(0, Basis::m).first->second;
        zero.add_term(lam, c);
        // m_lambda(X + z) = m_lambda + sum over distinct parts k of z^k m_{lambda - k}
        for (int i = 0; i < lam.length(); ++i) {
            if (i > 0 && lam[i] == lam[i - 1]) continue;
            int k = lam[i];
            if (k > cap) continue;
            std::vector<int> rest = lam.parts();
            rest.erase(rest.begin() + i);
            auto& slot = parts.try_emplace(k, Basis::m).first->second;
            slot.add_term(Partition(rest), c);
        }
    }
    std::vector<std::pair<int, SymFunc>> out;
    for (auto& [k, g] : parts) {
        if (g.is_zero()) continue;
        out.emplace_back(k, convert(g, f.basis()));
    }
    return out;
}

SymFunc skew_by_h(const SymFunc& f, int k) {
    for (auto& [j, g] : translate(f, k))
        if (j == k) return g;
    return SymFunc(f.basis());
}

Tensor coproduct(const SymFunc& f) {
    Tensor out;
    out.left = out.right = Basis::m;
    const SymFunc fm = convert(f, Basis::m);
    for (const auto& [lam, c] : fm.terms()) {
        // distinct parts with multiplicities
        std::vector<std::pair<int, int>> mult;
        for (int p : lam.parts()) {
            if (mult.empty() || mult.back().first != p)
                mult.emplace_back(p, 1);
            else
                ++mult.back().second;
        }
        std::vector<int> take(mult.size(), 0);
        while (true) {
            std::vector<int> a, b;
            for (std::size_t i = 0; i < mult.size(); ++i) {
                a.insert(a.end(), static_cast<std::size_t>(take[i]), mult[i].first);
                b.insert(b.end(), static_cast<std::size_t>(mult[i].second - take[i]), mult[i].first);
            }
            out.add_term(Partition(a), Partition(b), c);
            std::size_t i = 0;
            while (i < take.size() && take[i] == mult[i].second) take[i++] = 0;
            if (i == take.size()) break;
            ++take[i];
        }
    }
    return out;
}

Tensor convert(const Tensor& x, Basis left, Basis right) {
    // left side, grouped by right index
    std::map<Partition, SymFunc> by_right;
    for (const auto& [key, c] : x.terms) by_right.try_emplace(key.second, x.left).first->second.add_term(key.first, c);
    Tensor mid;
    mid.left = left;
    mid.right = x.right;
    for (const auto& [r, f] : by_right) {
        const SymFunc conv = convert(f, left);
        for (const auto& [l, c] : conv.terms()) mid.add_term(l, r, c);
    }
    std::map<Partition, SymFunc> by_left;
    for (const auto& [key, c] : mid.terms) by_left.try_emplace(key.first, x.right).first->second.add_term(key.second, c);
    Tensor out;
    out.left = left;
    out.right = right;
    for (const auto& [l, f] : by_left) {
        const SymFunc conv = convert(f, right);
        for (const auto& [r, c] : conv.terms()) out.add_term(l, r, c);
    }
    return out;
}

bool kernel_check(const std::vector<SymFunc>& basisP, const std::vector<SymFunc>& basisQ, int deg,
                  const std::optional<PlethysticFactor>& factor) {
    if (deg < 0) throw std::invalid_argument("negative degree");
    std::size_t need = enumerate_upto(deg).size();
    if (basisP.size() != need || basisQ.size() != need) throw std::invalid_argument("kernel_check: basis lists incomplete for the degree");
    std::map<std::pair<Partition, Partition>, QTRational> got;
    for (std::size_t i = 0; i < need; ++i) {
        SymFunc P = convert(basisP[i], Basis::p), Q = convert(basisQ[i], Basis::p);
        for (const auto& [a, ca] : P.terms()) {
            if (a.size() > deg) continue;
            for (const auto& [b, cb] : Q.terms()) {
                if (b.size() > deg) continue;
                auto& slot = got[{a, b}];
                slot += ca * cb;
            }
        }
    }
    std::map<std::pair<Partition, Partition>, QTRational> expect;
    for (const auto& rho : enumerate_upto(deg)) {
        QTRational w = QTRational(BigRational(1) / BigRational(z_lambda(rho)));
        if (factor)
            for (int part : rho.parts()) w *= factor->power_sum(part);
        expect[{rho, rho}] = w;
    }
    for (auto it = got.begin(); it != got.end();) {
        if (it->second.is_zero())
            it = got.erase(it);
        else
            ++it;
    }
    return got == expect;
}

Terms expand_in_schur_leading_basis(const SymFunc& f, const std::function<SymFunc(const Partition&)>& element) {
    SymFunc residual = convert(f, Basis::s);
    Terms out;
    int last = std::numeric_limits<int>::max();
    while (!residual.is_zero()) {
        int d = residual.max_degree();
        if (d >= last) throw std::logic_error("basis is not Schur-leading");
        last = d;
        SymFunc top = residual.homogeneous_part(d);
        for (const auto& [lam, c] : top.terms()) {
            out.emplace(lam, c);
            residual -= c * convert(element(lam), Basis::s);
        }
        if (!residual.homogeneous_part(d).is_zero()) throw std::logic_error("basis is not Schur-leading");
    }
    return out;
}

}  // namespace symfunc
