#pragma once

#include "hvo/mpoly.hpp"
#include "hvo/partitions.hpp"
#include "hvo/qseries.hpp"
#include "hvo/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvo {

// Rank-2 torus parameters; t1 = t, t2 = -t unless set explicitly.
struct Rank2Params {
    Rational a1, a2;
    Rational t1 = 1, t2 = -1;
    std::optional<Rational> m;  // symbolic when empty
    static Rank2Params with_t(const Rational& a1, const Rational& a2, const Rational& t,
                              std::optional<Rational> m = std::nullopt) {
        return {a1, a2, t, -t, m};
    }
};

// prod over sectors (i,j) and tangent weights w of (w + m)/w, where sector (i,j) uses
// tangent_character(mu^[j], mu^[i]) shifted by a_j - a_i. Throws on a vanishing weight.
MPoly rank2_weight(const Partition& mu1, const Partition& mu2, const Rank2Params& p);

// sum over pairs of q^{2(|mu1|+|mu2|)} rank2_weight, to order N.
Series<MPoly> z_inst_rank2(const Rank2Params& p, int N, int jobs = 1);

struct BlendingCheck {
    bool ok = true;
    int checked = 0;
    std::string counterexample;  // "b;mu1;mu2" of the first failure
};
// w_m(blend)/w_m(nu(b)) against rank2_weight at t1 = 2, t2 = -2, a1 = 2b, a2 = -2b-1,
// for every partition of size <= max_size, symbolic m.
BlendingCheck blending_identity_check(int max_size, int jobs = 1);

// Z_k = sum_mu q^|mu| (2 b(mu))^k / k! w_m(mu).
Series<MPoly> dual_partition(int k, std::optional<Rational> m, int N, int jobs = 1);

struct ModularReport {
    bool ok = false;
    int order = 0;
    Rational net_prefactor;          // q-exponent of the left side; must be an integer
    std::vector<Rational> lhs, rhs;  // coefficients of q^0..q^order
    int first_mismatch = -1;
};
// Z_2(3,q)/(q;q)^8 * eta(tau)^4 eta(2tau)^2 eta(4tau)^4 against (4/5)(E1 - E3).
ModularReport modular_example_check(int order, const std::vector<Rational>& E1, const std::vector<Rational>& E3);

} // namespace hvo
