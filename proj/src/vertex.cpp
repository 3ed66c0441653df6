#include "hvo/vertex.hpp"

#include <cstdlib>

namespace hvo {

FockElement half_vertex_apply(const HalfVertexSpec& spec, const FockElement& v) {
    const RatFun base = spec.c / RatFun(MPoly::var(Var::t1) * MPoly::var(Var::t2));
    FockElement out;
    for (const auto& [mu, coef] : v.terms()) {
        // Expand prod_k (p_k + a_k)^{mult_k} one distinct part at a time.
        std::map<Partition, RatFun> acc{{Partition(), coef}};
        for (int k = mu.part(1); k >= 1; --k) {
            const int mult = mu.multiplicity(k);
            if (mult == 0) continue;
            const RatFun a = (spec.pattern == SignPattern::alternating && k % 2 == 0) ? -base : base;
            std::vector<RatFun> apow{RatFun(1)};
            for (int e = 1; e <= mult; ++e) apow.push_back(apow.back() * a);
            std::map<Partition, RatFun> next;
            for (const auto& [nu, c] : acc) {
                for (int j = 0; j <= mult; ++j) {
                    RatFun term = c * RatFun(binomial(mult, j)) * apow[static_cast<size_t>(mult - j)];
                    if (term.is_zero()) continue;
                    std::vector<int> parts = nu.parts();
                    parts.insert(parts.end(), static_cast<size_t>(j), k);
                    Partition key(parts);
                    auto [it, ins] = next.emplace(key, term);
                    if (!ins) it->second += term;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [nu, c] : acc) out.add(nu, c);
    }
    return out;
}

MPoly w_matrix_element(const Partition& mu, const Partition& lam) {
    const MPoly m = MPoly::var(Var::m), t1 = MPoly::var(Var::t1), t2 = MPoly::var(Var::t2);
    FockElement left = half_vertex_apply({RatFun(m), SignPattern::constant}, jack(mu));
    FockElement right = half_vertex_apply({RatFun(m + t1 + t2), SignPattern::alternating}, jack(lam));
    return inner(left, right).as_poly();
}

MPoly hook_side(const Partition& mu, const Partition& lam) {
    const MPoly m = MPoly::var(Var::m), t1 = MPoly::var(Var::t1), t2 = MPoly::var(Var::t2);
    MPoly r(1);
    for (const Cell& c : mu.cells())
        r *= m + t1 * Rational(arm(lam, c)) + t1 - t2 * Rational(leg(mu, c));
    for (const Cell& c : lam.cells())
        r *= m - t1 * Rational(arm(mu, c)) + t2 * Rational(leg(lam, c)) + t2;
    return r;
}

void Character2::add(int p, int q, long c) {
    if (c == 0) return;
    auto [it, ins] = terms.emplace(std::make_pair(p, q), c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

long Character2::coeff(int p, int q) const {
    auto it = terms.find({p, q});
    return it == terms.end() ? 0 : it->second;
}

long Character2::term_count() const {
    long n = 0;
    for (const auto& [k, c] : terms) n += std::labs(c);
    return n;
}

std::string Character2::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [p, q] = it->first;
        long c = it->second;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        auto factor = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        };
        factor("z1", p);
        factor("z2", q);
        long a = std::labs(c);
        if (mono.empty())
            out += std::to_string(a);
        else
            out += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    }
    return out;
}

Character2 tangent_character(const Partition& lam, const Partition& mu) {
    Character2 ch;
    for (const Cell& c : mu.cells()) ch.add(arm(lam, c) + 1, -leg(mu, c), 1);
    for (const Cell& c : lam.cells()) ch.add(-arm(mu, c), leg(lam, c) + 1, 1);
    return ch;
}

Character2 tangent_character_ext(const Partition& lam, const Partition& mu) {
    Character2 ch;
    for (const Cell& c : mu.cells()) ch.add(1 - c.j, 1 - c.i, 1);
    for (const Cell& c : lam.cells()) ch.add(c.j, c.i, 1);
    for (const Cell& a : lam.cells())
        for (const Cell& b : mu.cells()) {
            const int p = (a.j - 1) - (b.j - 1), q = (a.i - 1) - (b.i - 1);
            ch.add(p, q, -1);
            ch.add(p + 1, q, 1);
            ch.add(p, q + 1, 1);
            ch.add(p + 1, q + 1, -1);
        }
    return ch;
}

} // namespace hvo
