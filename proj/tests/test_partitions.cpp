#include "hvo/partitions.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hvo;

TEST_CASE("enumeration agrees with box-by-box construction") {
    for (int n = 0; n <= 12; ++n) {
        const auto want = oracle::partitions_by_boxes(n);
        const auto got = enumerate(n);
        std::set<std::vector<int>> seen;
        for (const auto& mu : got) seen.insert(mu.parts());
        CHECK(seen == want);
        CHECK(got.size() == want.size());
        CHECK(partition_count(n) == static_cast<long long>(want.size()));
    }
    CHECK(partition_count(21) == 792);
}

TEST_CASE("enumeration order is reverse lexicographic") {
    const auto p = enumerate(4);
    REQUIRE(p.size() == 5);
    CHECK(p[0] == Partition{4});
    CHECK(p[1] == Partition{3, 1});
    CHECK(p[2] == Partition{2, 2});
    CHECK(p[3] == Partition{2, 1, 1});
    CHECK(p[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("hooks agree with direct counting") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& mu : enumerate(n))
            for (const Cell& c : mu.cells()) CHECK(hook(mu, c) == oracle::hook_by_counting(mu.parts(), c.i, c.j));
}

TEST_CASE("hook length formula counts standard tableaux") {
    // Sum over mu of (n!/prod h)^2 = n!.
    for (int n = 1; n <= 8; ++n) {
        Rational s = 0;
        for (const auto& mu : enumerate(n)) {
            Rational f = factorial(n);
            for (int h : hooks(mu)) f /= h;
            s += f * f;
        }
        CHECK(s == factorial(n));
    }
}

TEST_CASE("transpose is an involution and swaps arm and leg") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : enumerate(n)) {
            const Partition t = mu.transpose();
            CHECK(t.transpose() == mu);
            CHECK(t.size() == mu.size());
            for (const Cell& c : mu.cells()) {
                CHECK(arm(mu, c) == leg(t, {c.j, c.i}));
                CHECK(content(c) == -content({c.j, c.i}));
            }
        }
}

TEST_CASE("generalized arm and leg outside the diagram") {
    const Partition mu{2, 1};
    CHECK(arm(mu, {1, 4}) == -2);
    CHECK(leg(mu, {3, 1}) == -1);
    CHECK(arm(Partition{}, {1, 1}) == -1);
}

TEST_CASE("parse and print") {
    CHECK(Partition::parse("3,1,1").to_string() == "3,1,1");
    CHECK(Partition::parse("-").empty());
    CHECK(Partition{}.to_string() == "-");
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST_CASE("blending is a bijection with the charge-size relation") {
    // |mu| = 2|mu1| + 2|mu2| + 2b^2 + b.
    for (int n = 0; n <= 12; ++n)
        for (const auto& mu : enumerate(n)) {
            const Blend bl = unblend(mu);
            CHECK(blend(bl.b, bl.mu1, bl.mu2) == mu);
            CHECK(mu.size() == 2 * bl.mu1.size() + 2 * bl.mu2.size() + 2 * bl.b * bl.b + bl.b);
        }
    CHECK(unblend(Partition{1}).b == -1);
    CHECK(unblend(nu(2)).mu1.empty());
    CHECK(nu(2).size() == 10);
}

TEST_CASE("number of blends of each size") {
    // Counting (b, mu1, mu2) by size gives p(n).
    for (int n = 0; n <= 14; ++n) {
        long long cnt = 0;
        for (int b = -4; b <= 4; ++b) {
            const int rest = n - 2 * b * b - b;
            if (rest < 0 || rest % 2) continue;
            for (int a = 0; a <= rest / 2; ++a) cnt += partition_count(a) * partition_count(rest / 2 - a);
        }
        CHECK(cnt == partition_count(n));
    }
}
