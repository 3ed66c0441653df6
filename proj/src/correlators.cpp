#include "hvo/correlators.hpp"

#include "hvo/parallel.hpp"

#include <stdexcept>
#include <tuple>

namespace hvo {

MPoly w_weight(const Partition& mu) {
    const MPoly m = MPoly::var(Var::m);
    MPoly r(1);
    for (int h : hooks(mu)) {
        const Rational h2 = Rational(h) * h;
        r *= MPoly(1) - m * m * (Rational(1) / h2);
    }
    return r;
}

Rational w_weight(const Partition& mu, const Rational& m) {
    Rational r = 1;
    for (int h : hooks(mu)) {
        const Rational h2 = Rational(h) * h;
        r *= (h2 - m * m) / h2;
    }
    return r;
}

Rational content_power_sum(const Partition& mu, int k) {
    Rational s = 0;
    for (const Cell& c : mu.cells()) s += k == 0 ? Rational(1) : rpow(Rational(content(c)), k);
    return s;
}

namespace {

std::vector<Partition> partitions_upto(int N) {
    std::vector<Partition> all;
    for (int n = 0; n <= N; ++n)
        for (auto& mu : enumerate(n)) all.push_back(mu);
    return all;
}

} // namespace

Series<MPoly> localization_F(const CorrelationSpec& spec, int jobs) {
    for (int k : spec.ks)
        if (k < 0) throw std::invalid_argument("insertion orders must be nonnegative");
    const auto all = partitions_upto(spec.order);
    auto terms = parallel_map(all, jobs, [&](const Partition& mu) {
        Rational ins = 1;
        for (int k : spec.ks) {
            ins *= content_power_sum(mu, k);
            if (is_zero(ins)) return MPoly();
        }
        if (spec.m) return MPoly(ins * w_weight(mu, *spec.m));
        return w_weight(mu) * ins;
    });
    Series<MPoly> F(spec.order);
    for (size_t i = 0; i < all.size(); ++i) F[all[i].size()] += terms[i];
    return F;
}

Series<MPoly> qq_pow_symbolic(const MPoly& e, int N) {
    return series_pow(series_cast<MPoly>(qq_inf(N)), e);
}

ZRank1 z_rank1(int N, int jobs) {
    ZRank1 z;
    z.fixed_point_sum = localization_F({{}, N, std::nullopt}, jobs);
    const MPoly m = MPoly::var(Var::m);
    z.product = qq_pow_symbolic(m * m - MPoly(1), N);
    z.equal = z.fixed_point_sum == z.product;
    return z;
}

QuasimodularReport quasimodular_report(const std::vector<int>& ks, int order, int guard, int jobs,
                                       std::optional<int> max_weight) {
    QuasimodularReport rep;
    const int N = static_cast<int>(ks.size());
    int sum = 0, half = 0;
    for (int k : ks) {
        sum += k;
        half += k / 2;
    }
    rep.weight = max_weight ? *max_weight : 2 * N + sum;
    rep.degree_bound = 2 * N + 2 * half;
    Series<MPoly> F = localization_F({ks, order, std::nullopt}, jobs);
    const MPoly m = MPoly::var(Var::m);
    rep.normalized = F * qq_pow_symbolic(MPoly(1) - m * m, order);
    for (int n = 0; n <= order; ++n) {
        if (rep.normalized[n].degree(Var::m) > rep.degree_bound) {
            rep.degree_ok = false;
            rep.degree_violation_order = n;
            break;
        }
    }
    rep.fit = fit_series(rep.normalized, rep.weight, guard);
    return rep;
}

// ---------------------------------------------------------------- Gtheta

namespace {

// Sparse series in (q, x, y) truncated at q <= Q, x >= XL, y >= YL.
struct Trunc {
    int Q, XL, YL;
};
using Key3 = std::tuple<int, int, int>;
using Sparse3 = std::map<Key3, Rational>;

Sparse3 mul3(const Sparse3& a, const Sparse3& b, const Trunc& t) {
    Sparse3 r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const int q = std::get<0>(ka) + std::get<0>(kb);
            const int x = std::get<1>(ka) + std::get<1>(kb);
            const int y = std::get<2>(ka) + std::get<2>(kb);
            if (q > t.Q || x < t.XL || y < t.YL) continue;
            r[{q, x, y}] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = is_zero(it->second) ? r.erase(it) : std::next(it);
    return r;
}

Sparse3 one3() { return {{{0, 0, 0}, Rational(1)}}; }

// 1 - q^a x^b y^c
Sparse3 lin3(int a, int b, int c) { return {{{0, 0, 0}, Rational(1)}, {{a, b, c}, Rational(-1)}}; }

// 1/(1 - q^a x^b y^c), expanded as a geometric series inside the truncation.
Sparse3 geom3(int a, int b, int c, const Trunc& t) {
    if (a == 0 && b >= 0 && c >= 0) throw std::logic_error("geometric series does not converge in the truncation");
    Sparse3 r;
    for (int k = 0;; ++k) {
        const int q = a * k, x = b * k, y = c * k;
        if (q > t.Q || x < t.XL || y < t.YL) break;
        r[{q, x, y}] = 1;
    }
    return r;
}

// theta(x^b y^c)^pw for a nonzero integer pw.
Sparse3 theta3(int b, int c, int pw, const Trunc& t) {
    Sparse3 r = one3();
    for (int rep = 0; rep < std::abs(pw); ++rep) {
        for (int k = 0; k <= t.Q; ++k) {
            if (k >= 1) r = mul3(r, pw > 0 ? lin3(k, b, c) : geom3(k, b, c, t), t);
            r = mul3(r, pw > 0 ? lin3(k, -b, -c) : geom3(k, -b, -c, t), t);
            if (k >= 1) {
                const Sparse3 f = pw > 0 ? geom3(k, 0, 0, t) : lin3(k, 0, 0);
                r = mul3(r, f, t);
                r = mul3(r, f, t);
            }
        }
    }
    return r;
}

Sparse3 qq3(int pw, const Trunc& t) {
    Sparse3 r = one3();
    for (int k = 1; k <= t.Q; ++k)
        for (int rep = 0; rep < std::abs(pw); ++rep) r = mul3(r, pw > 0 ? lin3(k, 0, 0) : geom3(k, 0, 0, t), t);
    return r;
}

} // namespace

GthetaReport gtheta_check(int m, int q_order, int x_lo, int x_hi) {
    if (q_order < 0 || x_lo > x_hi) throw std::invalid_argument("gtheta_check: empty q-order or x-window");
    GthetaReport rep;
    rep.m = m;
    rep.q_order = q_order;
    rep.x_lo = x_lo;
    rep.x_hi = x_hi;
    // Positive x and y powers cost at least one power of q each, so terms below these
    // floors never return to the window or to y^0.
    const Trunc t{q_order, std::min(x_lo, 0) - q_order - 2, -q_order - 2};

    std::map<std::pair<int, int>, Rational> lhs;
    for (int n = 0; n <= q_order; ++n) {
        for (const Partition& mu : enumerate(n)) {
            const Rational w = w_weight(mu, Rational(m));
            if (is_zero(w)) continue;
            // x^{mu_i - i + 1} decreases strictly once i > l(mu).
            for (int i = 1;; ++i) {
                const int e = mu.part(i) - i + 1;
                if (i > mu.length() && e < x_lo) break;
                if (e >= x_lo && e <= x_hi) lhs[{n, e}] += w;
            }
        }
    }

    Sparse3 r = theta3(1, 0, -1, t);
    if (m != 0) {
        r = mul3(r, theta3(1, 1, m, t), t);
        r = mul3(r, theta3(0, 1, -m, t), t);
    }
    const int zpow = m * m - 1;
    if (zpow != 0) r = mul3(r, qq3(zpow, t), t);
    std::map<std::pair<int, int>, Rational> rhs;
    for (const auto& [k, c] : r) {
        auto [q, x, y] = k;
        if (y == 0 && x >= x_lo && x <= x_hi && !is_zero(c)) rhs[{q, x}] = c;
    }
    for (auto it = lhs.begin(); it != lhs.end();)
        it = is_zero(it->second) ? lhs.erase(it) : std::next(it);

    rep.ok = true;
    for (int q = 0; q <= q_order && rep.ok; ++q) {
        for (int x = x_hi; x >= x_lo; --x) {
            auto a = lhs.find({q, x});
            auto b = rhs.find({q, x});
            Rational va = a == lhs.end() ? Rational(0) : a->second;
            Rational vb = b == rhs.end() ? Rational(0) : b->second;
            if (!is_zero(va) || !is_zero(vb)) ++rep.compared;
            if (va != vb) {
                rep.ok = false;
                rep.mismatch = std::make_pair(q, x);
                rep.lhs_value = va;
                rep.rhs_value = vb;
                break;
            }
        }
    }
    return rep;
}

} // namespace hvo
