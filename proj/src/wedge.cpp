#include "hvo/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace hvo {

std::strong_ordering WedgeKey::operator<=>(const WedgeKey& o) const {
    if (auto c = charge <=> o.charge; c != 0) return c;
    return mu <=> o.mu;
}

WedgeVector WedgeVector::basis(const Partition& mu, int charge, const Rational& c) {
    WedgeVector w;
    w.add({charge, mu}, c);
    return w;
}

Rational WedgeVector::coeff(const WedgeKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WedgeVector::add(const WedgeKey& k, const Rational& c) {
    if (hvo::is_zero(c)) return;
    auto [it, ins] = terms_.emplace(k, c);
    if (!ins) {
        it->second += c;
        if (hvo::is_zero(it->second)) terms_.erase(it);
    }
}

int WedgeVector::max_energy() const {
    int e = -1;
    for (const auto& [k, c] : terms_) e = std::max(e, k.mu.size());
    return e;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

WedgeVector operator*(WedgeVector a, const Rational& c) {
    if (hvo::is_zero(c)) return WedgeVector();
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
}

std::string WedgeVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string s = hvo::to_string(c);
        bool neg = s[0] == '-';
        if (neg) s.erase(0, 1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (s != "1") out += s + "*";
        out += "v[" + std::to_string(k.charge) + ";" + k.mu.to_string() + "]";
    }
    return out;
}

// ---------------------------------------------------------------- fermions

std::vector<int> occupied_indices(const WedgeKey& k, int lowest) {
    // Everything below c - l is occupied; list until strictly below `lowest`.
    const int c = k.charge;
    const int K = std::max({k.mu.length(), c - lowest + 1, 0}) + 1;
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(K));
    for (int i = 1; i <= K; ++i) idx.push_back(k.mu.part(i) - i + 1 + c);
    return idx;
}

namespace {

WedgeKey from_indices(int charge, const std::vector<int>& idx) {
    std::vector<int> parts;
    parts.reserve(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) parts.push_back(idx[k] + static_cast<int>(k) - charge);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return {charge, Partition(std::move(parts))};
}

struct Hit {
    int sign;
    WedgeKey key;
};

std::optional<Hit> psi_basis(int i, const WedgeKey& k) {
    std::vector<int> idx = occupied_indices(k, i);
    auto pos = std::find_if(idx.begin(), idx.end(), [i](int x) { return x <= i; });
    if (pos != idx.end() && *pos == i) return std::nullopt;
    const int larger = static_cast<int>(pos - idx.begin());
    idx.insert(pos, i);
    return Hit{larger % 2 ? -1 : 1, from_indices(k.charge + 1, idx)};
}

std::optional<Hit> psi_star_basis(int i, const WedgeKey& k) {
    std::vector<int> idx = occupied_indices(k, i);
    auto pos = std::find(idx.begin(), idx.end(), i);
    if (pos == idx.end()) return std::nullopt;
    const int before = static_cast<int>(pos - idx.begin());
    idx.erase(pos);
    return Hit{before % 2 ? -1 : 1, from_indices(k.charge - 1, idx)};
}

} // namespace

WedgeVector psi(int i, const WedgeVector& w) {
    WedgeVector r;
    for (const auto& [k, c] : w.terms())
        if (auto h = psi_basis(i, k)) r.add(h->key, h->sign < 0 ? Rational(-c) : c);
    return r;
}

WedgeVector psi_star(int i, const WedgeVector& w) {
    WedgeVector r;
    for (const auto& [k, c] : w.terms())
        if (auto h = psi_star_basis(i, k)) r.add(h->key, h->sign < 0 ? Rational(-c) : c);
    return r;
}

WedgeVector q_shift(const WedgeVector& w, int k) {
    WedgeVector r;
    for (const auto& [key, c] : w.terms()) r.add({key.charge + k, key.mu}, c);
    return r;
}

WedgeVector apply_shift_operator(const WedgeVector& w, int shift, const std::function<Rational(int)>& coef) {
    if (shift == 0) throw std::invalid_argument("shift operator needs a nonzero shift");
    WedgeVector r;
    for (const auto& [k, c] : w.terms()) {
        // Below the listed window both n and n+shift are occupied, so the term vanishes.
        const int lowest = k.charge - k.mu.length() - std::abs(shift) - 1;
        for (int n : occupied_indices(k, lowest)) {
            Rational a = coef(n);
            if (is_zero(a)) continue;
            auto h1 = psi_star_basis(n, k);
            auto h2 = psi_basis(n + shift, h1->key);
            if (!h2) continue;
            r.add(h2->key, (h1->sign * h2->sign < 0 ? Rational(-a) : a) * c);
        }
    }
    return r;
}

WedgeVector alpha_fermionic(int k, const WedgeVector& w) {
    if (k == 0) throw std::invalid_argument("alpha_fermionic needs k != 0");
    return apply_shift_operator(w, -k, [](int) { return Rational(1); });
}

// ---------------------------------------------------------------- boson-fermion

WedgeVector phi_iso(const FockElement& v) {
    WedgeVector r;
    for (const auto& [nu, c] : v.terms()) {
        RatFun s = c.subs(Var::t1, Rational(1)).subs(Var::t2, Rational(-1));
        if (!s.is_polynomial() || !s.num().is_constant())
            throw std::domain_error("phi_iso: coefficient is not constant at t1=1, t2=-1");
        const Rational a = s.num().constant_term();
        for (const Partition& lam : enumerate(nu.size())) {
            long chi = character(lam, nu);
            if (chi) r.add({0, lam}, a * Rational(chi));
        }
    }
    return r;
}

FockElement phi_inverse(const WedgeVector& w) {
    FockElement r;
    for (const auto& [k, c] : w.terms()) {
        if (k.charge != 0) throw std::domain_error("phi_inverse: charge must be 0");
        r += schur(k.mu) * RatFun(c);
    }
    return r;
}

WedgeVector f_diag(int k, const WedgeVector& w) {
    if (k < 0) throw std::invalid_argument("f_diag needs k >= 0");
    WedgeVector r;
    const Rational inv = Rational(1) / factorial(k);
    for (const auto& [key, c] : w.terms()) {
        Rational s = 0;
        for (const Cell& cell : key.mu.cells()) s += rpow(Rational(content(cell)), k);
        r.add(key, c * s * inv);
    }
    return r;
}

// ---------------------------------------------------------------- affine sl2

int h0_eigenvalue(const WedgeKey& k) {
    // Occupied above 0 count with the parity sign; holes at or below 0 with the opposite.
    const int c = k.charge;
    const int lowest = std::min(0, c - k.mu.length()) - 1;
    std::vector<int> idx = occupied_indices(k, lowest);
    int h = 0;
    for (int i : idx)
        if (i > 0) h += (i % 2 == 0) ? 1 : -1;
    const int floor = idx.back();
    for (int n = 0; n > floor; --n)
        if (std::find(idx.begin(), idx.end(), n) == idx.end()) h += (n % 2 == 0) ? -1 : 1;
    return h;
}

namespace {

// Loop index j of v_n under t^j (x) u_i <-> v_{-2j+i}, u_0 even.
Rational loop_index(int n) { return n % 2 == 0 ? frac(-n, 2) : frac(1 - n, 2); }

} // namespace

Rational loop_degree(const WedgeKey& k) {
    // d = -t d/dt relative to the charge-c vacuum.
    Rational s = 0;
    const int L = k.mu.length();
    for (int i = 1; i <= L; ++i) {
        const int occ = k.mu.part(i) - i + 1 + k.charge;
        const int vac = -i + 1 + k.charge;
        s += loop_index(occ) - loop_index(vac);
    }
    return -s;
}

std::string Sl2Gen::name() const {
    switch (kind) {
    case Sl2Kind::e: return "e_" + std::to_string(j);
    case Sl2Kind::f: return "f_" + std::to_string(j);
    case Sl2Kind::h: return j == 0 ? "h0" : "h_" + std::to_string(j);
    case Sl2Kind::K: return "K";
    case Sl2Kind::degree: return "2d-h0/2";
    }
    return "?";
}

WedgeVector sl2hat_matrix_action(const Sl2Gen& g, const WedgeVector& w) {
    const int j = g.j;
    auto odd = [](int n) { return n % 2 != 0; };
    switch (g.kind) {
    case Sl2Kind::e:
        // t^j (x) e: v_n (n odd) -> v_{n-1-2j}.
        return apply_shift_operator(w, -1 - 2 * j, [&](int n) { return Rational(odd(n) ? 1 : 0); });
    case Sl2Kind::f:
        // t^j (x) f: v_n (n even) -> v_{n+1-2j}.
        return apply_shift_operator(w, 1 - 2 * j, [&](int n) { return Rational(odd(n) ? 0 : 1); });
    case Sl2Kind::h:
        if (j != 0) return apply_shift_operator(w, -2 * j, [&](int n) { return Rational(odd(n) ? -1 : 1); });
        {
            WedgeVector r;
            for (const auto& [k, c] : w.terms()) r.add(k, c * h0_eigenvalue(k));
            return r;
        }
    case Sl2Kind::K: return w;
    case Sl2Kind::degree: {
        WedgeVector r;
        for (const auto& [k, c] : w.terms())
            r.add(k, c * (2 * loop_degree(k) - frac(h0_eigenvalue(k), 2)));
        return r;
    }
    }
    throw std::logic_error("unknown sl2 generator");
}

std::string PrincipalGen::name() const {
    const std::string a = std::to_string(j), b = std::to_string(j + 1);
    switch (kind) {
    case PrincipalKind::h: return j == 0 ? "h0" : "h_" + a;
    case PrincipalKind::e_minus_f: return "e_" + a + "-f_" + b;
    case PrincipalKind::e_plus_f: return "e_" + a + "+f_" + b;
    case PrincipalKind::degree_odd: return "degree(odd)";
    case PrincipalKind::degree_all: return "degree";
    }
    return "?";
}

namespace {

// Apply prod over parts n of rho of alpha_{sign*n}, each scaled by (2/n) * s.
WedgeVector exp_odd_component(const WedgeVector& w, int b, int sign) {
    WedgeVector r;
    for (const Partition& rho : enumerate(b)) {
        bool all_odd = std::all_of(rho.parts().begin(), rho.parts().end(), [](int p) { return p % 2; });
        if (!all_odd) continue;
        // exp(sum_n x_n/n alpha) -> prod x_n^{m_n} / (n^{m_n} m_n!) alpha^{m_n}, x_n = 2 sign.
        Rational coef = 1;
        for (int p : rho.parts()) coef *= frac(2 * (sign > 0 ? -1 : 1), p);
        for (int k = 1; k <= b; ++k) coef /= factorial(rho.multiplicity(k));
        WedgeVector v = w;
        for (int p : rho.parts()) {
            v = alpha_fermionic(sign * p, v);
            if (v.is_zero()) break;
        }
        if (!v.is_zero()) r += v * coef;
    }
    return r;
}

} // namespace

WedgeVector gamma_odd_coeff(int s, const WedgeVector& w, int truncation) {
    const int E = w.max_energy();
    if (E > truncation) throw std::domain_error("truncation too small for requested coefficient");
    WedgeVector r;
    // [z^s] = sum_b C_{s+b} A_b, A_b lowering the energy by b.
    for (int b = 0; b <= E; ++b) {
        const int a = s + b;
        if (a < 0) continue;
        WedgeVector lowered = b == 0 ? w : exp_odd_component(w, b, +1);
        if (lowered.is_zero()) continue;
        r += a == 0 ? lowered : exp_odd_component(lowered, a, -1);
    }
    return r;
}

WedgeVector sl2hat_principal_action(const PrincipalGen& g, const WedgeVector& w, int truncation) {
    if (w.max_energy() > truncation) throw std::domain_error("truncation too small for requested coefficient");
    const Rational half(1, 2);
    switch (g.kind) {
    case PrincipalKind::h: return (gamma_odd_coeff(-2 * g.j, w, truncation) - (g.j == 0 ? w : WedgeVector())) * half;
    case PrincipalKind::e_minus_f:
        return gamma_odd_coeff(-2 * g.j - 1, w, truncation) * Rational(-1, 2);
    case PrincipalKind::e_plus_f: return alpha_fermionic(2 * g.j + 1, w);
    case PrincipalKind::degree_odd:
    case PrincipalKind::degree_all: {
        WedgeVector r;
        const int step = g.kind == PrincipalKind::degree_odd ? 2 : 1;
        for (int k = 1; k <= std::max(w.max_energy(), 0); k += step)
            r += alpha_fermionic(-k, alpha_fermionic(k, w));
        return r;
    }
    }
    throw std::logic_error("unknown principal generator");
}

WedgeVector sl2hat_matrix_for(const PrincipalGen& g, const WedgeVector& w) {
    switch (g.kind) {
    case PrincipalKind::h: return sl2hat_matrix_action({Sl2Kind::h, g.j}, w);
    case PrincipalKind::e_minus_f:
        return sl2hat_matrix_action({Sl2Kind::e, g.j}, w) - sl2hat_matrix_action({Sl2Kind::f, g.j + 1}, w);
    case PrincipalKind::e_plus_f:
        return sl2hat_matrix_action({Sl2Kind::e, g.j}, w) + sl2hat_matrix_action({Sl2Kind::f, g.j + 1}, w);
    case PrincipalKind::degree_odd:
    case PrincipalKind::degree_all: return sl2hat_matrix_action({Sl2Kind::degree, 0}, w);
    }
    throw std::logic_error("unknown principal generator");
}

} // namespace hvo
