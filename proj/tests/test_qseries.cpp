#include "hvo/qseries.hpp"

#include <doctest.h>

using namespace hvo;

TEST_CASE("Bernoulli numbers and divisor sums") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == frac(-1, 2));
    CHECK(bernoulli(2) == frac(1, 6));
    CHECK(bernoulli(4) == frac(-1, 30));
    CHECK(bernoulli(12) == frac(-691, 2730));
    CHECK(bernoulli(7) == 0);
    CHECK(divisor_sigma(3, 6) == 1 + 8 + 27 + 216);
    CHECK(divisor_sigma(0, 12) == 6);
}

TEST_CASE("Eisenstein normalization") {
    const auto e2 = eisenstein(2, 3), e4 = eisenstein(4, 3);
    CHECK(e2[0] == frac(-1, 24));
    CHECK(e2[1] == 1);
    CHECK(e2[2] == 3);
    CHECK(e4[0] == frac(1, 240));
    CHECK(e4[2] == 9);
}

TEST_CASE("E4^2 is proportional to E8") {
    // The weight-8 modular space is one-dimensional.
    const auto e4 = eisenstein(4, 20), e8 = eisenstein(8, 20);
    const auto sq = e4 * e4;
    const Rational ratio = sq[0] / e8[0];
    for (int n = 0; n <= 20; ++n) CHECK(sq[n] == e8[n] * ratio);
}

TEST_CASE("Ramanujan derivative identity") {
    // q d/dq E2 = -2 E2^2 + (5/6) E4 in this normalization.
    const int N = 18;
    const auto e2 = eisenstein(2, N), e4 = eisenstein(4, N);
    Series<Rational> d(N);
    for (int n = 0; n <= N; ++n) d[n] = e2[n] * n;
    CHECK(d == e2 * e2 * Rational(-2) + e4 * frac(5, 6));
    const auto r = fit_series(d, 4, 5, 4);
    REQUIRE(r.ok);
    REQUIRE(r.coeffs.size() == 2);
    CHECK(r.coeffs[0].second == -2);
    CHECK(r.coeffs[1].second == frac(5, 6));
}

TEST_CASE("basis enumeration") {
    CHECK(qmf_basis(8).size() == 11);
    CHECK(qmf_basis(8, 8).size() == 4);
    CHECK(qmf_basis(6).back().name() == "E6");
    CHECK(qmf_basis(0).front().name() == "1");
}

TEST_CASE("fit recovers E2^2 exactly") {
    const auto s = qmf_expansion({2, 0, 0}, 20);
    const auto r = fit_series(s, 8, 5);
    REQUIRE(r.ok);
    REQUIRE(r.coeffs.size() == 1);
    CHECK(r.coeffs[0].first.name() == "E2^2");
    CHECK(r.coeffs[0].second == 1);
}

TEST_CASE("fit rejects a non-quasimodular series") {
    Series<Rational> s(20);
    for (int n = 0; n <= 20; ++n) s[n] = n * n * n * n * n;
    s[0] = 1;
    s[7] += 1;
    const auto r = fit_series(s, 4, 5);
    CHECK_FALSE(r.ok);
    CHECK(r.first_mismatch >= 0);
}

TEST_CASE("fit reports insufficient truncation") {
    const auto s = qmf_expansion({1, 0, 0}, 6);
    const auto r = fit_series(s, 8, 5);
    CHECK_FALSE(r.ok);
    CHECK(r.error.find("insufficient") != std::string::npos);
}

TEST_CASE("Jacobi triple product") {
    const auto p = theta11_product(30), s = theta11_sum(30);
    for (int n = 0; n <= 30; ++n) CHECK(p[n] == s[n]);
}

TEST_CASE("theta functional equations") {
    // theta(x^{-1}) = -x theta(x): coefficient of x^k at q^n is minus that of x^{-k-1}.
    const auto t = theta(6, -12, 12);
    for (int n = 0; n <= 6; ++n)
        for (int k = -12; k <= 11; ++k) CHECK(t[n].coeff(k) == -t[n].coeff(-k - 1));
    CHECK(t[0].coeff(0) == 1);
    CHECK(t[0].coeff(-1) == -1);
    // theta(qx) = -(qx)^{-1} theta(x): [q^n x^k] equals -[q^{n+k+1} x^{k+1}].
    for (int n = 0; n <= 6; ++n)
        for (int k = -6; k <= 6; ++k)
            if (n + k + 1 >= 0 && n + k + 1 <= 6) CHECK(t[n].coeff(k) == -t[n + k + 1].coeff(k + 1));
}

TEST_CASE("theta Taylor coefficients are quasimodular") {
    const int N = 14;
    const auto z = theta_z_expansion(N, 7);
    REQUIRE(z.size() == 4);
    CHECK(z[0] == Series<Rational>::one(N));
    const auto e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
    CHECK(z[1] == -e2);
    CHECK(z[2] == e2 * e2 * frac(1, 2) - e4 * frac(1, 12));
    CHECK(z[3] == e2 * e2 * e2 * frac(-1, 6) + e2 * e4 * frac(1, 12) - e6 * frac(1, 360));
}

TEST_CASE("eta quotients") {
    const auto e = eta_quotient({{1, 24}}, 10);
    CHECK(e.prefactor == 1);
    // Delta = q - 24 q^2 + 252 q^3 ...
    CHECK(e.body[0] == 1);
    CHECK(e.body[1] == -24);
    CHECK(e.body[2] == 252);
    CHECK(eta_quotient({{2, 3}}, 4).prefactor == frac(1, 4));
}
