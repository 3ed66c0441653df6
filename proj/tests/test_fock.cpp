#include "hvo/fock.hpp"

#include <doctest.h>

using namespace hvo;

namespace {

const MPoly t1 = MPoly::var(Var::t1);
const MPoly t2 = MPoly::var(Var::t2);

} // namespace

TEST_CASE("Heisenberg commutator") {
    // [alpha_k, alpha_{-l}] = delta_{kl} k/(t1 t2) on a few vectors.
    const FockElement v = parse_fock("p1^2*p3 + 2*p2") + FockElement::p(Partition{4, 1}, RatFun(t1));
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            const FockElement c = annihilate(k, create(l, v)) - create(l, annihilate(k, v));
            const FockElement want = k == l ? v * RatFun(MPoly(k), t1 * t2) : FockElement();
            CHECK(c == want);
        }
}

TEST_CASE("adjoint of creation is a signed annihilation") {
    // <p_k, p_k> carries (-1)^{k-1}, so alpha_{-k}^dagger = (-1)^{k-1} alpha_k.
    for (int n = 0; n <= 4; ++n)
        for (const auto& a : enumerate(n))
            for (const auto& b : enumerate(n + 2))
                for (int k : {1, 2}) {
                    const FockElement u = FockElement::p(a), w = FockElement::p(b);
                    const RatFun sign(k % 2 ? 1 : -1);
                    CHECK(inner(create(k, u), w) == sign * inner(u, annihilate(k, w)));
                }
}

TEST_CASE("inner product on power sums") {
    CHECK(inner_pp(Partition{1}) == RatFun(MPoly(1), t1 * t2));
    CHECK(inner_pp(Partition{2}) == RatFun(MPoly(-2), t1 * t2));
    CHECK(inner_pp(Partition{1, 1}) == RatFun(MPoly(2), t1 * t1 * t2 * t2));
    CHECK(z_factor(Partition{2, 2, 1}) == 8);
    CHECK(inner(FockElement::p(Partition{2}), FockElement::p(Partition{1, 1})).is_zero());
}

TEST_CASE("Jack fixtures") {
    CHECK(jack(Partition{2}) == parse_fock("t1^2*t2^2*p1^2 - t1^2*t2*p2"));
    CHECK(jack(Partition{1, 1}) == parse_fock("t1^2*t2^2*p1^2 - t1*t2^2*p2"));
    CHECK(jack(Partition{1}) == parse_fock("t1*t2*p1"));
}

TEST_CASE("Jack normalization and orthogonality") {
    for (int n = 0; n <= 5; ++n) {
        const auto ps = enumerate(n);
        const FockElement p1n = FockElement::p(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
        for (const auto& mu : ps) CHECK(inner(jack(mu), p1n) == RatFun(factorial(n)));
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) CHECK(inner(jack(ps[i]), jack(ps[j])).is_zero());
    }
}

TEST_CASE("Jack is triangular in the monomial basis") {
    // At t1 = -t2 the Jack function is proportional to the Schur function.
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : enumerate(n)) {
            const FockElement j = jack(mu).subs(Var::t1, Rational(1)).subs(Var::t2, Rational(-1));
            const FockElement s = schur(mu);
            const Partition& lead = s.terms().begin()->first;
            const RatFun ratio = j.coeff(lead) / s.coeff(lead);
            CHECK(j == s * ratio);
        }
}

TEST_CASE("transpose symmetry of Jack polynomials") {
    // Swapping t1 and t2 maps J_mu to J_mu'.
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : enumerate(n)) {
            FockElement swapped;
            for (const auto& [rho, c] : jack(mu).terms()) {
                const MPoly x = MPoly::var(Var::x);
                swapped.add(rho, c.subs(Var::t1, x).subs(Var::t2, t1).subs(Var::x, t2));
            }
            CHECK(swapped == jack(mu.transpose()));
        }
}

TEST_CASE("Murnaghan-Nakayama characters") {
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(character(Partition{3, 2}, Partition{1, 1, 1, 1, 1}) == 5);
    // Column orthogonality.
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : enumerate(n))
            for (const auto& b : enumerate(n)) {
                long s = 0;
                for (const auto& lam : enumerate(n)) s += character(lam, a) * character(lam, b);
                CHECK(Rational(s) == (a == b ? z_factor(a) : Rational(0)));
            }
}

TEST_CASE("monomial symmetric functions") {
    CHECK(monomial_symmetric(Partition{1, 1}) == parse_fock("1/2*p1^2 - 1/2*p2"));
    CHECK(monomial_symmetric(Partition{2}) == parse_fock("p2"));
}

TEST_CASE("parse_fock rejects reserved names") {
    CHECK_THROWS(parse_fock("x*p1"));
    CHECK(parse_fock("p1*p1") == FockElement::p(Partition{1, 1}));
}
