#include "hvo/nekrasov.hpp"

#include "hvo/correlators.hpp"
#include "hvo/parallel.hpp"
#include "hvo/ratfun.hpp"
#include "hvo/vertex.hpp"

#include <stdexcept>

namespace hvo {

MPoly rank2_weight(const Partition& mu1, const Partition& mu2, const Rank2Params& p) {
    const Partition* mus[2] = {&mu1, &mu2};
    const Rational a[2] = {p.a1, p.a2};
    const MPoly m = p.m ? MPoly(*p.m) : MPoly::var(Var::m);
    MPoly num(1);
    Rational den = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Character2 ch = tangent_character(*mus[j], *mus[i]);
            for (const auto& [pq, mult] : ch.terms) {
                const Rational w = a[j] - a[i] + p.t1 * pq.first + p.t2 * pq.second;
                if (is_zero(w)) throw std::domain_error("rank2_weight: vanishing tangent weight");
                for (long r = 0; r < mult; ++r) {
                    num *= m + MPoly(w);
                    den *= w;
                }
                if (mult < 0) throw std::logic_error("rank2_weight: negative tangent multiplicity");
            }
        }
    return num * (Rational(1) / den);
}

namespace {

struct PairKey {
    Partition mu1, mu2;
};

} // namespace

Series<MPoly> z_inst_rank2(const Rank2Params& p, int N, int jobs) {
    std::vector<PairKey> pairs;
    for (int n = 0; 2 * n <= N; ++n)
        for (int n1 = 0; n1 <= n; ++n1)
            for (const auto& a : enumerate(n1))
                for (const auto& b : enumerate(n - n1)) pairs.push_back({a, b});
    auto w = parallel_map(pairs, jobs, [&](const PairKey& k) { return rank2_weight(k.mu1, k.mu2, p); });
    Series<MPoly> z(N);
    for (size_t i = 0; i < pairs.size(); ++i) z[2 * (pairs[i].mu1.size() + pairs[i].mu2.size())] += w[i];
    return z;
}

BlendingCheck blending_identity_check(int max_size, int jobs) {
    std::vector<Partition> all;
    for (int n = 0; n <= max_size; ++n)
        for (auto& mu : enumerate(n)) all.push_back(mu);
    auto res = parallel_map(all, jobs, [](const Partition& mu) -> std::string {
        const Blend bl = unblend(mu);
        const RatFun lhs = RatFun(w_weight(mu)) / RatFun(w_weight(nu(bl.b)));
        Rank2Params p{Rational(2 * bl.b), Rational(-2 * bl.b - 1), Rational(2), Rational(-2), std::nullopt};
        const RatFun rhs(rank2_weight(bl.mu1, bl.mu2, p));
        if (lhs == rhs) return "";
        return std::to_string(bl.b) + ";" + bl.mu1.to_string() + ";" + bl.mu2.to_string();
    });
    BlendingCheck out;
    for (const auto& r : res) {
        ++out.checked;
        if (!r.empty() && out.ok) {
            out.ok = false;
            out.counterexample = r;
        }
    }
    return out;
}

Series<MPoly> dual_partition(int k, std::optional<Rational> m, int N, int jobs) {
    if (k < 0) throw std::invalid_argument("dual_partition needs k >= 0");
    std::vector<Partition> all;
    for (int n = 0; n <= N; ++n)
        for (auto& mu : enumerate(n)) all.push_back(mu);
    const Rational inv = Rational(1) / factorial(k);
    auto terms = parallel_map(all, jobs, [&](const Partition& mu) {
        const Rational c = rpow(Rational(2 * unblend(mu).b), k) * inv;
        if (is_zero(c)) return MPoly();
        return m ? MPoly(c * w_weight(mu, *m)) : w_weight(mu) * c;
    });
    Series<MPoly> z(N);
    for (size_t i = 0; i < all.size(); ++i) z[all[i].size()] += terms[i];
    return z;
}

ModularReport modular_example_check(int order, const std::vector<Rational>& E1, const std::vector<Rational>& E3) {
    ModularReport rep;
    rep.order = order;
    Series<MPoly> z = dual_partition(2, Rational(3), order, 1);
    Series<Rational> zr(order);
    for (int n = 0; n <= order; ++n) zr[n] = z[n].constant_term();
    // (q;q)^{-8} = eta^{-8} q^{1/3}; the eta prefactors -1/3 + 1 and the 1/3 must sum to an integer.
    const EtaQuotient eq = eta_quotient({{1, -8}, {1, 4}, {2, 2}, {4, 4}}, order);
    Series<Rational> body = zr * eq.body;
    body.prefactor += Rational(1, 3);
    rep.net_prefactor = body.prefactor;
    if (rep.net_prefactor.get_den() != 1) return rep;
    const long shift = rep.net_prefactor.get_num().get_si();
    auto at = [](const std::vector<Rational>& v, int n) { return n >= 0 && n < static_cast<int>(v.size()) ? v[static_cast<size_t>(n)] : Rational(0); };
    rep.ok = true;
    for (int n = 0; n <= order; ++n) {
        const int src = n - static_cast<int>(shift);
        rep.lhs.push_back(src >= 0 ? body.coeff(src) : Rational(0));
        rep.rhs.push_back(Rational(4, 5) * (at(E1, n) - at(E3, n)));
        if (rep.ok && rep.lhs.back() != rep.rhs.back()) {
            rep.ok = false;
            rep.first_mismatch = n;
        }
    }
    return rep;
}

} // namespace hvo
