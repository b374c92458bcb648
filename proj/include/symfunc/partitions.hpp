#pragma once

#include "symfunc/qt_arith.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace symfunc {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Throws std::invalid_argument on negative or increasing entries.
    // Trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    // 0-based part access; 0 past the end.
    int operator[](int i) const { return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0; }
    // Number of parts equal to k.
    int multiplicity(int k) const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Graded reverse-lexicographic order: by size, then lexicographically
// decreasing. Within one size this is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct GradedOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    }
};

struct Box {
    int row = 1;  // 1-based
    int col = 1;
};

struct StripStats {
    MonomialSum C, R, Ctilde, Rtilde;
};

enum class CombineMode { sum, union_ };
enum class StripKind { horizontal, vertical };
enum class StripDirection { add, remove };

Partition conjugate(const Partition& lambda);
Partition combine(const Partition& lambda, const Partition& mu, CombineMode mode);

// mu' + delta_m for the complement mu of lambda in the n x m box, padded to
// m entries.
std::vector<int> staircase_complement_parts(const Partition& lambda, int n, int m);
bool staircase_complement_check(const Partition& lambda, int n, int m);

bool contains(const Partition& lambda, const Partition& mu);
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

std::vector<Partition> strips(const Partition& mu, StripKind kind, StripDirection dir, int r);

std::pair<int, int> arm_leg(const Partition& lambda, Box s);
std::vector<Box> boxes(const Partition& lambda);
MonomialSum b_stat(const Partition& lambda);
StripStats strip_stats(const Partition& lambda, const Partition& mu);

bool dominance_leq(const Partition& mu, const Partition& lambda);

std::vector<Partition> enumerate(int n, std::optional<int> max_parts = std::nullopt, bool distinct = false);
// All partitions of sizes 0..n in graded order.
std::vector<Partition> enumerate_upto(int n);

// z_lambda = prod_i i^{m_i} m_i!
BigInt z_lambda(const Partition& lambda);

}  // namespace symfunc
