#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hvo {

struct Cell {
    int i = 1;  // row
    int j = 1;  // column
    bool operator==(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; throws on increasing or negative parts.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based; 0 past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0; }
    int multiplicity(int k) const;
    bool contains(const Cell& c) const { return c.i >= 1 && c.j >= 1 && c.j <= part(c.i); }
    std::vector<Cell> cells() const;
    Partition transpose() const;

    // "3,1,1", or "-" for the empty partition.
    std::string to_string() const;
    static Partition parse(std::string_view s);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Size first, then parts lexicographically.
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline int content(const Cell& c) { return c.j - c.i; }
// Generalized arm/leg: empty parts count as 0, so values may be negative.
int arm(const Partition& lam, const Cell& c);
int leg(const Partition& lam, const Cell& c);
// Requires c in mu.
int hook(const Partition& mu, const Cell& c);
std::vector<int> hooks(const Partition& mu);

// Reverse lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate(int n);
long long partition_count(int n);
bool dominates(const Partition& a, const Partition& b);

// Rank-2 blending with charge.
struct Blend {
    int b = 0;
    Partition mu1, mu2;
    bool operator==(const Blend&) const = default;
};

Partition blend(int b, const Partition& mu1, const Partition& mu2);
Blend unblend(const Partition& mu);
Partition nu(int b);
inline int charge(const Partition& mu) { return unblend(mu).b; }

} // namespace hvo
