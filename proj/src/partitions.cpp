#include "symfunc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symfunc {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

Partition combine(const Partition& lambda, const Partition& mu, CombineMode mode) {
    std::vector<int> r;
    if (mode == CombineMode::sum) {
        int n = std::max(lambda.length(), mu.length());
        for (int i = 0; i < n; ++i) r.push_back(lambda[i] + mu[i]);
    } else {
        r = lambda.parts();
        r.insert(r.end(), mu.parts().begin(), mu.parts().end());
        std::sort(r.rbegin(), r.rend());
    }
    return Partition(std::move(r));
}

std::vector<int> staircase_complement_parts(const Partition& lambda, int n, int m) {
    if (n < 0 || m < 0 || lambda.length() > n || lambda[0] > m) throw std::invalid_argument("partition does not fit the box");
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = m - lambda[n - 1 - i];
    Partition muc = conjugate(Partition(mu));
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = muc[j] + m - 1 - j;
    return out;
}

bool staircase_complement_check(const Partition& lambda, int n, int m) {
    std::vector<int> all = staircase_complement_parts(lambda, n, m);
    for (int i = 0; i < n; ++i) all.push_back(lambda[i] + n - 1 - i);
    std::sort(all.begin(), all.end());
    for (int k = 0; k < n + m; ++k)
        if (all[static_cast<std::size_t>(k)] != k) return false;
    return true;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) return false;
    for (int i = 1; i < lambda.length(); ++i)
        if (lambda[i] > mu[i - 1]) return false;
    return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] - mu[i] > 1) return false;
    return true;
}

namespace {

void sort_revlex(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// Rows chosen one at a time between the interleaving bounds.
void horizontal_rows(const Partition& mu, bool add, int r, int i, int rows, std::vector<int>& cur, std::vector<Partition>& out) {
    if (i == rows) {
        if (r == 0) out.emplace_back(cur);
        return;
    }
    int lo, hi;
    if (add) {
        lo = mu[i];
        hi = (i == 0) ? mu[0] + r : mu[i - 1];
    } else {
        lo = mu[i + 1];
        hi = mu[i];
    }
    for (int v = hi; v >= lo; --v) {
        int used = add ? v - mu[i] : mu[i] - v;
        if (used > r) continue;
        cur.push_back(v);
        horizontal_rows(mu, add, r - used, i + 1, rows, cur, out);
        cur.pop_back();
    }
}

void vertical_rows(const Partition& mu, bool add, int r, int i, int rows, std::vector<int>& cur, std::vector<Partition>& out) {
    if (i == rows) {
        if (r == 0) out.emplace_back(cur);
        return;
    }
    for (int d = 1; d >= 0; --d) {
        if (d > r) continue;
        int v = add ? mu[i] + d : mu[i] - d;
        if (v < 0) continue;
        if (i > 0 && v > cur.back()) continue;
        cur.push_back(v);
        vertical_rows(mu, add, r - d, i + 1, rows, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> strips(const Partition& mu, StripKind kind, StripDirection dir, int r) {
    if (r < 0) throw std::invalid_argument("strip size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    bool add = dir == StripDirection::add;
    if (kind == StripKind::horizontal) {
        int rows = add ? mu.length() + 1 : mu.length();
        horizontal_rows(mu, add, r, 0, rows, cur, out);
    } else {
        int rows = add ? mu.length() + r : mu.length();
        vertical_rows(mu, add, r, 0, rows, cur, out);
    }
    sort_revlex(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<int, int> arm_leg(const Partition& lambda, Box s) {
    if (s.row < 1 || s.col < 1 || s.row > lambda.length() || s.col > lambda[s.row - 1]) return {0, 0};
    int a = lambda[s.row - 1] - s.col;
    int l = 0;
    for (int i = s.row; i < lambda.length() && lambda[i] >= s.col; ++i) ++l;
    return {a, l};
}

std::vector<Box> boxes(const Partition& lambda) {
    std::vector<Box> out;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) out.push_back({i + 1, j + 1});
    return out;
}

MonomialSum b_stat(const Partition& lambda) {
    MonomialSum s;
    for (Box b : boxes(lambda)) {
        auto [a, l] = arm_leg(lambda, b);
        s.add({a, l, false, 1});
    }
    return s;
}

StripStats strip_stats(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::invalid_argument("strip_stats requires mu contained in lambda");
    Partition lc = conjugate(lambda), mc = conjugate(mu);
    StripStats st;
    for (Box b : boxes(lambda)) {
        auto [al, ll] = arm_leg(lambda, b);
        bool in_mu = b.row <= mu.length() && b.col <= mu[b.row - 1];
        auto [am, lm] = arm_leg(mu, b);
        bool long_col = lc[b.col - 1] > mc[b.col - 1];
        bool long_row = lambda[b.row - 1] > mu[b.row - 1];
        MonomialSum& col = long_col ? st.C : st.Ctilde;
        MonomialSum& row = long_row ? st.R : st.Rtilde;
        col.add({al, ll, false, 1});
        row.add({al, ll, false, 1});
        if (in_mu) {
            col.add({am, lm, false, -1});
            row.add({am, lm, false, -1});
        }
    }
    return st;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("dominance order compares partitions of equal size");
    int sm = 0, sl = 0;
    int n = std::max(mu.length(), lambda.length());
    for (int i = 0; i < n; ++i) {
        sm += mu[i];
        sl += lambda[i];
        if (sm > sl) return false;
    }
    return true;
}

namespace {

void gen(int n, int maxpart, int parts_left, bool distinct, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, distinct ? p - 1 : p, parts_left - 1, distinct, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(int n, std::optional<int> max_parts, bool distinct) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, max_parts.value_or(n), distinct, cur, out);
    return out;
}

std::vector<Partition> enumerate_upto(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto v = enumerate(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

BigInt z_lambda(const Partition& lambda) {
    BigInt z = 1;
    const auto& p = lambda.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int m = static_cast<int>(j - i);
        for (int k = 1; k <= m; ++k) z *= BigInt(k) * p[i];
        i = j;
    }
    return z;
}

}  // namespace symfunc
