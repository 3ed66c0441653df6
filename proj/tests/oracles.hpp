#pragma once
// Brute-force reference computations, written independently of the library paths they check.

#include "hvo/partitions.hpp"
#include "hvo/rational.hpp"
#include "hvo/vertex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Partitions of n as sorted multisets, built by adding one box at a time.
inline std::set<std::vector<int>> partitions_by_boxes(int n) {
    std::set<std::vector<int>> cur{{}};
    for (int k = 0; k < n; ++k) {
        std::set<std::vector<int>> next;
        for (const auto& p : cur) {
            for (size_t i = 0; i <= p.size(); ++i) {
                std::vector<int> q = p;
                if (i == q.size())
                    q.push_back(1);
                else
                    ++q[i];
                if (std::is_sorted(q.rbegin(), q.rend())) next.insert(q);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Hook length by counting boxes to the right and below.
inline int hook_by_counting(const std::vector<int>& p, int i, int j) {
    int h = 1;
    for (int jj = j + 1; jj <= p[static_cast<size_t>(i - 1)]; ++jj) ++h;
    for (int ii = i + 1; ii <= static_cast<int>(p.size()) && p[static_cast<size_t>(ii - 1)] >= j; ++ii) ++h;
    return h;
}

using Laurent2 = std::map<std::pair<int, int>, long>;

inline void add(Laurent2& a, int p, int q, long c) {
    if (c == 0) return;
    auto& v = a[{p, q}];
    v += c;
    if (v == 0) a.erase({p, q});
}

inline Laurent2 mul(const Laurent2& a, const Laurent2& b) {
    Laurent2 r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) add(r, ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

inline Laurent2 conj(const Laurent2& a) {
    Laurent2 r;
    for (const auto& [k, c] : a) add(r, -k.first, -k.second, c);
    return r;
}

// Character of the monomial ideal I_mu, truncated to the staircase a + b < B.
inline Laurent2 ideal_character(const hvo::Partition& mu, int B) {
    Laurent2 r;
    for (int a = 0; a < B; ++a)
        for (int b = 0; a + b < B; ++b)
            if (!mu.contains({b + 1, a + 1})) add(r, a, b, 1);
    return r;
}

// chi(O,O) - chi(I_lam, I_mu) from staircase truncations, where chi(F,G) = ch F conj(ch G) (1-z1)(1-z2).
// Terms with |p| + |q| <= keep are exact once B exceeds keep plus the largest diagram size.
inline Laurent2 tangent_staircase(const hvo::Partition& lam, const hvo::Partition& mu, int B, int keep) {
    const Laurent2 factor{{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}, {{1, 1}, 1}};
    const Laurent2 O = ideal_character(hvo::Partition{}, B);
    const Laurent2 lhs = mul(mul(O, conj(O)), factor);
    const Laurent2 rhs = mul(mul(ideal_character(lam, B), conj(ideal_character(mu, B))), factor);
    Laurent2 r;
    for (const auto& [k, c] : lhs)
        if (std::abs(k.first) + std::abs(k.second) <= keep) add(r, k.first, k.second, c);
    for (const auto& [k, c] : rhs)
        if (std::abs(k.first) + std::abs(k.second) <= keep) add(r, k.first, k.second, -c);
    return r;
}

inline Laurent2 from_character(const hvo::Character2& ch) {
    Laurent2 r;
    for (const auto& [k, c] : ch.terms) add(r, k.first, k.second, c);
    return r;
}

// Coefficients of prod_{k>=1} (1 - q^k)^e by repeated multiplication, to order N.
inline std::vector<hvo::Rational> qq_power(int e, int N) {
    std::vector<hvo::Rational> r(static_cast<size_t>(N + 1), 0);
    r[0] = 1;
    for (int k = 1; k <= N; ++k)
        for (int rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                for (int n = N; n >= k; --n) r[static_cast<size_t>(n)] -= r[static_cast<size_t>(n - k)];
            } else {
                for (int n = k; n <= N; ++n) r[static_cast<size_t>(n)] += r[static_cast<size_t>(n - k)];
            }
        }
    return r;
}

} // namespace oracle
