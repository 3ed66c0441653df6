#include "hvo/correlators.hpp"
#include "hvo/fixtures.hpp"
#include "hvo/nekrasov.hpp"
#include "hvo/vertex.hpp"

#include <doctest.h>

using namespace hvo;

TEST_CASE("rank-2 weight at m = 0 is one") {
    const Rank2Params p = Rank2Params::with_t(frac(1, 3), frac(-1, 3), Rational(1), Rational(0));
    for (int n = 0; n <= 4; ++n)
        for (int a = 0; a <= n; ++a)
            for (const auto& mu1 : enumerate(a))
                for (const auto& mu2 : enumerate(n - a)) CHECK(rank2_weight(mu1, mu2, p) == MPoly(1));
}

TEST_CASE("rank-2 weight at a vanishing tangent weight throws") {
    // a1 - a2 = 2 t is non-generic.
    const Rank2Params p = Rank2Params::with_t(Rational(1), Rational(-1), Rational(1));
    CHECK_THROWS_AS(z_inst_rank2(p, 8), std::domain_error);
}

TEST_CASE("diagonal sector at t1 = -t2 = 1 is the rank-1 weight") {
    // Tangent weights pair up as +h and -h over the hooks.
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : enumerate(n)) {
            MPoly num(1);
            Rational den = 1;
            for (const auto& [pq, c] : tangent_character(mu, mu).terms) {
                const Rational w = Rational(pq.first) - pq.second;
                for (long r = 0; r < c; ++r) {
                    num *= MPoly::var(Var::m) + MPoly(w);
                    den *= w;
                }
            }
            CHECK(num * (Rational(1) / den) == w_weight(mu));
        }
}

TEST_CASE("sector symmetry of the rank-2 partition function") {
    const Rational a = frac(1, 3);
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& mu1 : enumerate(k))
                for (const auto& mu2 : enumerate(n - k)) {
                    const auto w = rank2_weight(mu1, mu2, Rank2Params::with_t(a, -a, Rational(1)));
                    const auto s = rank2_weight(mu2, mu1, Rank2Params::with_t(-a, a, Rational(1)));
                    CHECK(w == s);
                }
    const auto z = z_inst_rank2(Rank2Params::with_t(a, -a, Rational(1)), 8);
    const auto zs = z_inst_rank2(Rank2Params::with_t(-a, a, Rational(1)), 8);
    CHECK(z == zs);
    for (int n = 1; n <= 8; n += 2) CHECK(z[n].is_zero());
}

TEST_CASE("blending identity") {
    const BlendingCheck b = blending_identity_check(7, 4);
    CHECK(b.ok);
    CHECK(b.checked == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15);
}

TEST_CASE("dual partition function at k = 0 is the rank-1 series") {
    const auto z0 = dual_partition(0, std::nullopt, 8);
    CHECK(z0 == localization_F({{}, 8, std::nullopt}));
    const auto zm0 = dual_partition(0, Rational(0), 6);
    CHECK(zm0[6].constant_term() == 11);
}

TEST_CASE("dual partition function at m = 0 from the blend generating function") {
    // At m = 0 every weight is 1, so Z_k = sum_b (2b)^k/k! q^{2b^2+b} (sum_a p(a) q^{2a})^2.
    const int N = 20;
    std::vector<Rational> pp(static_cast<size_t>(N + 1), 0);
    for (int a = 0; 2 * a <= N; ++a)
        for (int c = 0; 2 * a + 2 * c <= N; ++c)
            pp[static_cast<size_t>(2 * a + 2 * c)] += Rational(static_cast<long>(partition_count(a) * partition_count(c)));
    for (int k = 0; k <= 3; ++k) {
        const auto z = dual_partition(k, Rational(0), N, 3);
        std::vector<Rational> want(static_cast<size_t>(N + 1), 0);
        for (int b = -4; b <= 4; ++b) {
            const int e = 2 * b * b + b;
            for (int n = e; n <= N; ++n) want[static_cast<size_t>(n)] += rpow(Rational(2 * b), k) / factorial(k) * pp[static_cast<size_t>(n - e)];
        }
        for (int n = 0; n <= N; ++n) CHECK(z[n].constant_term() == want[static_cast<size_t>(n)]);
    }
}

TEST_CASE("dual partition function k = 2, m = 3") {
    const auto z = dual_partition(2, Rational(3), 21, 4);
    const Fixtures fx = load_fixtures(default_data_dir());
    for (int n = 0; n <= 21; ++n) {
        const auto it = fx.dual_k2_m3.find(n);
        CHECK(z[n].constant_term() == (it == fx.dual_k2_m3.end() ? Rational(0) : it->second));
    }
}

TEST_CASE("q-exponent of each dual term matches its blend") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& mu : enumerate(n)) {
            const Blend bl = unblend(mu);
            CHECK(n == 2 * bl.mu1.size() + 2 * bl.mu2.size() + 2 * bl.b * bl.b + bl.b);
        }
}

TEST_CASE("modular example") {
    const Fixtures fx = load_fixtures(default_data_dir());
    const auto r = modular_example_check(6, fx.weight5.at("E1"), fx.weight5.at("E3"));
    CHECK(r.ok);
    CHECK(r.net_prefactor == 1);
}

TEST_CASE("modular example negative control") {
    const Fixtures fx = load_fixtures(default_data_dir());
    std::vector<Rational> zeros(fx.weight5.at("E1").size(), Rational(0));
    const auto r = modular_example_check(6, zeros, fx.weight5.at("E3"));
    CHECK_FALSE(r.ok);
}
