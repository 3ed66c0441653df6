// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact
// (tolerance 0) over Q, Q[m] or Q(t1,t2)[m].

#include "hvo/correlators.hpp"
#include "hvo/fixtures.hpp"
#include "hvo/fock.hpp"
#include "hvo/nekrasov.hpp"
#include "hvo/partitions.hpp"
#include "hvo/qseries.hpp"
#include "hvo/vertex.hpp"
#include "hvo/wedge.hpp"

#include "oracles.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace hvo;

namespace {

// Criteria that are expected to fail because the shipped reference data disagrees with the
// exact computation; see README.
const std::set<int> kKnownFailures = {6};

struct Outcome {
    bool pass = false;
    std::string detail;
};

const MPoly t1 = MPoly::var(Var::t1);
const MPoly t2 = MPoly::var(Var::t2);
const MPoly m = MPoly::var(Var::m);

MPoly hook_oracle(const Partition& mu, const Partition& lam) {
    MPoly r(1);
    for (const Cell& c : mu.cells()) r *= m + t1 * Rational(arm(lam, c) + 1) - t2 * Rational(leg(mu, c));
    for (const Cell& c : lam.cells()) r *= m - t1 * Rational(arm(mu, c)) + t2 * Rational(leg(lam, c) + 1);
    return r;
}

std::vector<Partition> upto(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& mu : enumerate(k)) out.push_back(mu);
    return out;
}

Outcome c1_identity() {
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const auto& a : upto(4))
        for (const auto& b : upto(4)) pairs.emplace_back(a, b);
    for (const auto& a : enumerate(5)) pairs.emplace_back(a, a);
    for (const auto& [mu, lam] : pairs) {
        const MPoly w = w_matrix_element(mu, lam);
        if (w != hook_side(mu, lam) || w != hook_oracle(mu, lam))
            return {false, "mismatch at mu=" + mu.to_string() + " lambda=" + lam.to_string()};
    }
    return {true, std::to_string(pairs.size()) + " pairs (all |mu|,|lambda| <= 4, diagonal |mu| = 5)"};
}

Outcome c2_worked(const Fixtures& fx) {
    const auto& w = fx.worked;
    const FockElement A = half_vertex_apply({RatFun(m), SignPattern::constant}, jack(w.mu));
    const FockElement B = half_vertex_apply({RatFun(m + t1 + t2), SignPattern::alternating}, jack(w.lambda));
    const FockElement A_fixed = parse_fock("m*(m - t1) + 2*m*t1*t2*p1 + t1^2*t2^2*p1^2 - t1^2*t2*p2");
    const FockElement B_fixed =
        parse_fock("(m + t1 + 2*t2)*(m + t1 + t2) + 2*t1*t2*(m + t1 + t2)*p1 + t1^2*t2^2*p1^2 - t1*t2^2*p2");
    // Printed displays differ from the corrected ones by exactly the recorded typos:
    // the sign of t1^2 t2 p2, and 2 t2 t2 for 2 t1 t2 in the p1 coefficient.
    const bool typo_mu = w.expansion_mu_printed - A_fixed == FockElement::p(Partition{2}, RatFun(t1 * t1 * t2 * Rational(2)));
    const bool typo_lam = w.expansion_lambda_printed - B_fixed ==
                          FockElement::p(Partition{1}, RatFun((t2 - t1) * t2 * (m + t1 + t2) * Rational(2)));
    const MPoly res = inner(A, B).as_poly();
    const bool ok = A == A_fixed && B == B_fixed && typo_mu && typo_lam && res == w.result &&
                    res == parse_mpoly("m*(m + t1)*(m + t1 + t2)*(m - t1 + 2*t2)");
    std::ostringstream d;
    d << "result " << res.to_string() << "; expansions match" << (typo_mu && typo_lam ? " modulo the two recorded typos" : " NOT modulo typos");
    return {ok, d.str()};
}

Outcome c3_jack(const Fixtures& fx) {
    if (jack(Partition{2}) != fx.worked.jack_mu || jack(Partition{1, 1}) != fx.worked.jack_lambda)
        return {false, "fixture Jack polynomials differ"};
    int checked = 0;
    for (int n = 0; n <= 6; ++n) {
        const FockElement p1n = FockElement::p(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
        for (const auto& mu : enumerate(n)) {
            ++checked;
            if (inner(jack(mu), p1n) != RatFun(factorial(n))) return {false, "normalization fails at " + mu.to_string()};
        }
    }
    return {true, "fixtures exact; <J, p1^n> = n! for " + std::to_string(checked) + " partitions"};
}

Outcome c4_rank1() {
    const ZRank1 z = z_rank1(10, 4);
    if (!z.equal) return {false, "fixed-point sum differs from (q;q)^(m^2-1)"};
    for (int mv : {0, 2, 3, 4}) {
        const auto want = oracle::qq_power(mv * mv - 1, 10);
        for (int n = 0; n <= 10; ++n)
            if (z.fixed_point_sum[n].subs(Var::m, Rational(mv)) != MPoly(want[static_cast<size_t>(n)]))
                return {false, "integer-m oracle differs at m=" + std::to_string(mv)};
    }
    return {true, "equal in Q[m] to q^10; integer-m oracle agrees"};
}

Outcome c5_correlation(const Fixtures& fx) {
    const auto F = localization_F({{1, 3}, 3, std::nullopt}, 4);
    const bool ok = F[2] == fx.correlation_q2 && F[3] == fx.correlation_q3;
    return {ok, "q^2: " + F[2].to_string() + "; q^3: " + F[3].to_string()};
}

Outcome c6_quasimodular(const Fixtures& fx) {
    std::ostringstream d;
    bool ok = true;
    // Part a: the printed table.
    const auto rep = quasimodular_report({1, 3}, 16, 5, 4);
    if (!rep.fit.ok) return {false, "F(1,3) fit failed: " + rep.fit.error};
    std::map<QmfBasisElement, MPoly> fit(rep.fit.coeffs.begin(), rep.fit.coeffs.end());
    int matched = 0;
    std::string bad;
    for (const auto& [e, printed] : fx.correlation_fit) {
        const MPoly got = fit.count(e) ? fit.at(e) : MPoly();
        if (got == printed)
            ++matched;
        else
            bad += "\n      " + e.name() + ": printed " + printed.to_string() + ", exact " + got.to_string();
    }
    const bool table_ok = matched == static_cast<int>(fx.correlation_fit.size()) && fit.size() == fx.correlation_fit.size();
    ok = ok && table_ok;
    d << "printed table " << matched << "/" << fx.correlation_fit.size() << " rows exact";
    // Part b: prediction beyond the solve window.
    const int predicted = 17 - rep.fit.solve_orders;
    ok = ok && rep.ok() && predicted >= 5;
    d << "; fit solved on " << rep.fit.solve_orders << " orders, predicts " << predicted << " more";
    // Part c: sweep N <= 2, k_i <= 4, even sum, to order dim + 5.
    int lists = 0;
    std::vector<std::vector<int>> all{{}};
    for (int a = 0; a <= 4; ++a) {
        all.push_back({a});
        for (int b = a; b <= 4; ++b) all.push_back({a, b});
    }
    for (const auto& ks : all) {
        int s = 0;
        for (int k : ks) s += k;
        if (s % 2) continue;
        const int W = 2 * static_cast<int>(ks.size()) + s;
        const int order = static_cast<int>(qmf_basis(W).size()) + 5;
        const auto r = quasimodular_report(ks, order, 5, 4);
        ++lists;
        if (!r.ok()) {
            ok = false;
            d << "; sweep fails at ks=(";
            for (int k : ks) d << k << ",";
            d << ")";
        }
    }
    d << "; sweep over " << lists << " insertion lists";
    d << bad;
    return {ok, d.str()};
}

Outcome c7_wedge() {
    // Clifford relations on charges -1..1, energy <= 6.
    for (int c = -1; c <= 1; ++c)
        for (const auto& mu : upto(6)) {
            const WedgeVector w = WedgeVector::basis(mu, c);
            for (int i = -7; i <= 7; ++i)
                for (int j = -7; j <= 7; ++j) {
                    if (psi(i, psi_star(j, w)) + psi_star(j, psi(i, w)) != (i == j ? w : WedgeVector()) ||
                        !(psi(i, psi(j, w)) + psi(j, psi(i, w))).is_zero() ||
                        !(psi_star(i, psi_star(j, w)) + psi_star(j, psi_star(i, w))).is_zero())
                        return {false, "Clifford relation fails on " + mu.to_string()};
                }
        }
    for (const auto& rho : upto(6))
        for (int k = 1; k <= 4; ++k) {
            const FockElement v = FockElement::p(rho);
            const FockElement d = annihilate(k, v).subs(Var::t1, Rational(1)).subs(Var::t2, Rational(-1));
            if (phi_iso(create(k, v)) != alpha_fermionic(-k, phi_iso(v)) ||
                phi_iso(d) * Rational(-1) != alpha_fermionic(k, phi_iso(v)))
                return {false, "intertwining fails at p_" + rho.to_string() + ", k=" + std::to_string(k)};
        }
    std::vector<PrincipalGen> gens;
    for (int j = -2; j <= 2; ++j) gens.push_back({PrincipalKind::h, j});
    for (int j = -2; j <= 1; ++j) {
        gens.push_back({PrincipalKind::e_plus_f, j});
        gens.push_back({PrincipalKind::e_minus_f, j});
    }
    gens.push_back({PrincipalKind::degree_all, 0});
    int checked = 0;
    for (const auto& mu : upto(6)) {
        const WedgeVector w = WedgeVector::basis(mu);
        for (const auto& g : gens) {
            ++checked;
            if (sl2hat_matrix_for(g, w) != sl2hat_principal_action(g, w, 6))
                return {false, "principal construction differs for " + g.name() + " on " + mu.to_string()};
        }
    }
    for (const auto& rho : upto(6)) {
        bool odd = true;
        for (int p : rho.parts()) odd = odd && p % 2;
        if (!odd) continue;
        const WedgeVector w = phi_iso(FockElement::p(rho));
        const PrincipalGen g{PrincipalKind::degree_odd, 0};
        ++checked;
        if (sl2hat_matrix_for(g, w) != sl2hat_principal_action(g, w, 6)) return {false, "odd degree differs on p_" + rho.to_string()};
    }
    const WedgeVector v1 = WedgeVector::basis(Partition{1});
    if (sl2hat_matrix_action({Sl2Kind::h, 0}, v1) != v1 * Rational(-2)) return {false, "h0 v_(1) != -2 v_(1)"};
    for (const auto& mu : upto(10))
        if (h0_eigenvalue({0, mu}) != 2 * unblend(mu).b) return {false, "h0 != 2b at " + mu.to_string()};
    return {true, "Clifford, intertwining k <= 4, " + std::to_string(checked) + " principal checks, h0 v_(1) = -2 v_(1), h0 = 2b to size 10"};
}

Outcome c8_tangent() {
    int checked = 0;
    for (const auto& lam : upto(5))
        for (const auto& mu : upto(5)) {
            const int n = std::max(lam.size(), mu.size());
            ++checked;
            if (oracle::from_character(tangent_character(lam, mu)) != oracle::tangent_staircase(lam, mu, 4 * n + 8, 2 * n + 2))
                return {false, "differs at lambda=" + lam.to_string() + " mu=" + mu.to_string()};
        }
    return {true, std::to_string(checked) + " pairs against the staircase oracle"};
}

Outcome c9_gtheta() {
    int compared = 0;
    for (int mv : {0, 2, 3}) {
        const auto r = gtheta_check(mv, 4, -6, 6);
        compared += r.compared;
        if (!r.ok)
            return {false, "m=" + std::to_string(mv) + " differs at q^" + std::to_string(r.mismatch->first) + " x^" +
                               std::to_string(r.mismatch->second)};
    }
    return {true, std::to_string(compared) + " nonzero coefficients over m in {0,2,3}, q^0..q^4, x^-6..x^6"};
}

Outcome c10_dual(const Fixtures& fx) {
    const auto z = dual_partition(2, Rational(3), 21, 4);
    const std::array<long, 9> head{-16, 0, 0, 0, 128, 0, 0, 0, -320};
    for (int n = 1; n <= 9; ++n)
        if (z[n].constant_term() != head[static_cast<size_t>(n - 1)]) return {false, "q^" + std::to_string(n) + " differs"};
    for (int n = 0; n <= 21; ++n) {
        const auto it = fx.dual_k2_m3.find(n);
        if (z[n].constant_term() != (it == fx.dual_k2_m3.end() ? Rational(0) : it->second))
            return {false, "q^" + std::to_string(n) + " differs from the fixture"};
    }
    return {true, "-16q + 128q^5 - 320q^9 + 1120q^17 - 1024q^21 through q^21"};
}

Outcome c11_modular(const Fixtures& fx) {
    const auto r = modular_example_check(6, fx.weight5.at("E1"), fx.weight5.at("E3"));
    if (!r.ok) return {false, "net q-prefactor " + to_string(r.net_prefactor) + ", first mismatch q^" + std::to_string(r.first_mismatch)};
    return {true, "q-prefactors cancel to q^" + to_string(r.net_prefactor) + "; equal to (4/5)(E1 - E3) to q^6"};
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

Outcome c12_determinism(const std::string& cli) {
    if (cli.empty()) return {false, "no --cli given"};
    int s1 = 0, s8 = 0;
    const std::string a = run_capture("'" + cli + "' verify-all --jobs 1", s1);
    const std::string b = run_capture("'" + cli + "' verify-all --jobs 8", s8);
    if (a.empty()) return {false, "verify-all produced no output"};
    const bool same = a == b && s1 == s8;
    return {same, same ? std::to_string(a.size()) + " bytes identical for --jobs 1 and --jobs 8" : "outputs differ"};
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    const Fixtures fx = load_fixtures(default_data_dir());
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"main identity", c1_identity},
        {"worked example", [&] { return c2_worked(fx); }},
        {"Jack fixtures", [&] { return c3_jack(fx); }},
        {"rank-1 partition function", c4_rank1},
        {"correlation fixture", [&] { return c5_correlation(fx); }},
        {"quasimodularity", [&] { return c6_quasimodular(fx); }},
        {"boson-fermion and affine sl2", c7_wedge},
        {"tangent character", c8_tangent},
        {"Gtheta", c9_gtheta},
        {"dual partition function", [&] { return c10_dual(fx); }},
        {"modular example", [&] { return c11_modular(fx); }},
        {"determinism", [&] { return c12_determinism(cli); }},
    };

    int failed = 0, unexpected = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << criteria[i].first
                  << ", tolerance 0 exact): " << o.detail << "\n";
        if (!o.pass) {
            ++failed;
            if (!kKnownFailures.count(id)) ++unexpected;
        }
    }
    std::cout << "\n" << criteria.size() - static_cast<size_t>(failed) << "/" << criteria.size() << " criteria pass";
    if (failed) {
        std::cout << "; " << failed << " failing (" << failed - unexpected << " documented known failure"
                  << (failed - unexpected == 1 ? "" : "s") << ", " << unexpected << " unexpected)";
    }
    std::cout << "\n";
    return unexpected ? 1 : 0;
}
