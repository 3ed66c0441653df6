#pragma once

#include "hvo/mpoly.hpp"
#include "hvo/partitions.hpp"
#include "hvo/qseries.hpp"
#include "hvo/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hvo {

// prod over cells of (h^2 - m^2)/h^2, as a polynomial in m.
MPoly w_weight(const Partition& mu);
Rational w_weight(const Partition& mu, const Rational& m);

// sum over cells of content^k (0^0 = 1, so k = 0 counts cells).
Rational content_power_sum(const Partition& mu, int k);

struct CorrelationSpec {
    std::vector<int> ks;
    int order = 10;
    std::optional<Rational> m;  // symbolic when empty
};

// F = sum_mu q^|mu| prod_l content_power_sum(mu, k_l) w_weight(mu).
Series<MPoly> localization_F(const CorrelationSpec& spec, int jobs = 1);

struct ZRank1 {
    Series<MPoly> fixed_point_sum;
    Series<MPoly> product;  // (q;q)^{m^2-1}
    bool equal = false;
};
ZRank1 z_rank1(int N, int jobs = 1);
// (q;q)^e for symbolic e in Q[m], to order N.
Series<MPoly> qq_pow_symbolic(const MPoly& e, int N);

struct QuasimodularReport {
    int weight = 0;           // W = 2N + sum k
    int degree_bound = 0;     // 2N + 2 sum floor(k/2)
    Series<MPoly> normalized; // F / Z
    FitResult<MPoly> fit;
    bool degree_ok = true;
    int degree_violation_order = -1;
    bool ok() const { return fit.ok && degree_ok; }
};
// Fits F/Z at weight <= W; needs order >= dim(basis) + guard - 1.
QuasimodularReport quasimodular_report(const std::vector<int>& ks, int order, int guard, int jobs = 1,
                                       std::optional<int> max_weight = std::nullopt);

struct GthetaReport {
    int m = 0;
    int q_order = 0;
    int x_lo = 0, x_hi = 0;
    bool ok = false;
    int compared = 0;  // nonzero coefficients compared
    // First mismatch as (q-order, x-power), if any.
    std::optional<std::pair<int, int>> mismatch;
    Rational lhs_value, rhs_value;
};
// Diagonal trace sum_mu q^|mu| sum_i x^{mu_i-i+1} w_weight(mu, m) against
// [y^0] theta(x)^{-1} (theta(xy)/theta(y))^m (q;q)^{m^2-1} in |xy| > |y| > 1.
GthetaReport gtheta_check(int m, int q_order, int x_lo, int x_hi);

} // namespace hvo
