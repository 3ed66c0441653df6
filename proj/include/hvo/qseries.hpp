#pragma once

#include "hvo/linsolve.hpp"
#include "hvo/mpoly.hpp"
#include "hvo/series.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hvo {

Rational bernoulli(int n);
// Sum of d^k over divisors d of n.
Rational divisor_sigma(int k, int n);

// E_{2k} = -B_{2k}/(4k) + sum sigma_{2k-1}(n) q^n; `weight` = 2k.
Series<Rational> eisenstein(int weight, int N);

// E2^a E4^b E6^c.
struct QmfBasisElement {
    int a = 0, b = 0, c = 0;
    int weight() const { return 2 * a + 4 * b + 6 * c; }
    // "E2^2*E4", or "1".
    std::string name() const;
    bool operator==(const QmfBasisElement&) const = default;
    std::strong_ordering operator<=>(const QmfBasisElement& o) const;
};

// All monomials with min_weight <= weight <= max_weight; weight ascending, then E2-power descending.
std::vector<QmfBasisElement> qmf_basis(int max_weight, int min_weight = 0);
Series<Rational> qmf_expansion(const QmfBasisElement& e, int N);

// theta(x;q) = (xq;q)(x^{-1};q)/(q;q)^2, q-coefficients windowed to x^lo..x^hi.
Series<LaurentPoly<Rational>> theta(int N, int x_lo, int x_hi);

// Jacobi triple product in r = q^{1/2}: prod (1 + x r^{2k-1})(1 + x^{-1} r^{2k-1})(1 - r^{2k})
// and sum_n x^n r^{n^2}, both to order r^R.
Series<LaurentPoly<Rational>> theta11_product(int R);
Series<LaurentPoly<Rational>> theta11_sum(int R);

// Coefficients of w^1, w^3, ..., w^{max_odd} in e^{w/2} theta(e^w;q), each to order N.
std::vector<Series<Rational>> theta_z_expansion(int N, int max_odd);

template <class C>
struct FitResult {
    bool ok = false;
    std::string error;          // empty on success
    int first_mismatch = -1;    // q-order of the first inconsistent coefficient
    int solve_orders = 0;       // orders used to determine the coefficients
    std::vector<std::pair<QmfBasisElement, C>> coeffs;  // nonzero entries only
};

// Exact fit of s into qmf_basis(max_weight, min_weight): solve on leading orders,
// then require `guard` further orders to agree.
FitResult<Rational> fit_series(const Series<Rational>& s, int max_weight, int guard, int min_weight = 0);
FitResult<MPoly> fit_series(const Series<MPoly>& s, int max_weight, int guard, int min_weight = 0);

// prod eta(d tau)^r as q^prefactor * body.
struct EtaQuotient {
    std::vector<std::pair<int, int>> factors;  // (d, r)
    Rational prefactor;
    Series<Rational> body;
};
EtaQuotient eta_quotient(const std::vector<std::pair<int, int>>& factors, int N);

} // namespace hvo
