#include "hvo/fock.hpp"

#include "hvo/linsolve.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace hvo {

FockElement FockElement::vacuum() { return p(Partition()); }

FockElement FockElement::p(const Partition& mu, const RatFun& c) {
    FockElement f;
    f.add(mu, c);
    return f;
}

RatFun FockElement::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RatFun() : it->second;
}

void FockElement::add(const Partition& mu, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.emplace(mu, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int FockElement::max_degree() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
}

FockElement FockElement::operator-() const {
    FockElement r = *this;
    for (auto& [mu, c] : r.terms_) c = -c;
    return r;
}

FockElement& FockElement::operator+=(const FockElement& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
}

FockElement operator*(FockElement a, const RatFun& c) {
    if (c.is_zero()) return FockElement();
    for (auto& [mu, v] : a.terms_) v *= c;
    return a;
}

bool FockElement::operator==(const FockElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [mu, c] : terms_)
        if (o.coeff(mu) != c) return false;
    return true;
}

FockElement FockElement::subs(Var v, const Rational& value) const {
    FockElement r;
    for (const auto& [mu, c] : terms_) r.add(mu, c.subs(v, value));
    return r;
}

std::string FockElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest degree first, then reverse lexicographic within a degree.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string c = it->second.to_string();
        const bool compound = c.find(' ') != std::string::npos;
        bool neg = !compound && c[0] == '-';
        if (neg) c.erase(0, 1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (int k : it->first.parts()) mono += (mono.empty() ? "" : "*") + std::string("p") + std::to_string(k);
        if (mono.empty())
            out += compound ? "(" + c + ")" : c;
        else if (c == "1")
            out += mono;
        else
            out += (compound ? "(" + c + ")" : c) + "*" + mono;
    }
    return out;
}

namespace {

// Spare polynomial variables standing in for p1..p6 while parsing.
constexpr Var kPowerSumSlots[] = {Var::z1, Var::z2, Var::x, Var::y, Var::a1, Var::a2};

} // namespace

FockElement parse_fock(std::string_view s) {
    std::string text;
    for (size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        const bool starts_word = i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]));
        if (ch == 'p' && starts_word && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            const int k = std::stoi(std::string(s.substr(i + 1, j - i - 1)));
            if (k < 1 || k > 6) throw std::invalid_argument("parse_fock supports p1..p6");
            text += var_name(kPowerSumSlots[k - 1]);
            i = j - 1;
            continue;
        }
        text += ch;
    }
    for (Var v : kPowerSumSlots)
        if (std::string(s).find(var_name(v)) != std::string::npos)
            throw std::invalid_argument("parse_fock: reserved variable in input");
    const MPoly poly = parse_mpoly(text);
    FockElement r;
    for (const auto& [mono, c] : poly.terms()) {
        std::vector<int> parts;
        Monomial coef_mono = mono;
        for (int k = 6; k >= 1; --k) {
            const int e = mono[kPowerSumSlots[k - 1]];
            parts.insert(parts.end(), static_cast<size_t>(e), k);
            coef_mono.e[static_cast<size_t>(kPowerSumSlots[k - 1])] = 0;
        }
        r.add(Partition(parts), RatFun(MPoly::monomial(coef_mono, c)));
    }
    return r;
}

// ---------------------------------------------------------------- operators

namespace {

Partition add_part(const Partition& mu, int k) {
    std::vector<int> parts = mu.parts();
    parts.push_back(k);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition remove_part(const Partition& mu, int k) {
    std::vector<int> parts = mu.parts();
    auto it = std::find(parts.begin(), parts.end(), k);
    parts.erase(it);
    return Partition(std::move(parts));
}

RatFun t1t2() { return RatFun(MPoly::var(Var::t1) * MPoly::var(Var::t2)); }

} // namespace

FockElement create(int k, const FockElement& v) {
    if (k <= 0) throw std::invalid_argument("create needs k >= 1");
    FockElement r;
    for (const auto& [mu, c] : v.terms()) r.add(add_part(mu, k), c);
    return r;
}

FockElement annihilate(int k, const FockElement& v) {
    if (k <= 0) throw std::invalid_argument("annihilate needs k >= 1");
    FockElement r;
    const RatFun scale = RatFun(MPoly(k), t1t2().num());
    for (const auto& [mu, c] : v.terms()) {
        int mult = mu.multiplicity(k);
        if (mult == 0) continue;
        r.add(remove_part(mu, k), c * scale * RatFun(mult));
    }
    return r;
}

Rational z_factor(const Partition& mu) {
    Rational z = 1;
    for (int p : mu.parts()) z *= p;
    for (int k = 1; k <= mu.part(1); ++k) z *= factorial(mu.multiplicity(k));
    return z;
}

RatFun inner_pp(const Partition& mu) {
    Rational num = z_factor(mu);
    if ((mu.size() - mu.length()) % 2) num = -num;
    MPoly den = (MPoly::var(Var::t1) * MPoly::var(Var::t2)).pow(mu.length());
    return RatFun(MPoly(num), den);
}

RatFun inner(const FockElement& u, const FockElement& v) {
    RatFun r;
    const FockElement& small = u.terms().size() <= v.terms().size() ? u : v;
    const FockElement& big = &small == &u ? v : u;
    for (const auto& [mu, c] : small.terms()) {
        auto it = big.terms().find(mu);
        if (it == big.terms().end()) continue;
        r += c * it->second * inner_pp(mu);
    }
    return r;
}

// ---------------------------------------------------------------- symmetric functions

namespace {

// Number of maps from the parts of nu to the rows of lam filling each row exactly.
long fill_count(const Partition& nu, const Partition& lam) {
    std::vector<int> cap = lam.parts();
    const auto& parts = nu.parts();
    std::function<long(size_t)> rec = [&](size_t k) -> long {
        if (k == parts.size()) {
            for (int c : cap)
                if (c) return 0;
            return 1;
        }
        long total = 0;
        for (auto& c : cap) {
            if (c >= parts[k]) {
                c -= parts[k];
                total += rec(k + 1);
                c += parts[k];
            }
        }
        return total;
    };
    return rec(0);
}

} // namespace

FockElement monomial_symmetric(const Partition& lam) {
    const int n = lam.size();
    const auto parts = enumerate(n);
    const size_t N = parts.size();
    // p_nu = sum_lambda L[nu][lambda] m_lambda; solve L^T-system for m_lam.
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N));
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) A[a][b] = Rational(fill_count(parts[b], parts[a]));
    // Column b of A is p_{parts[b]} expanded in m; m_lam = sum_b x_b p_b with A x = e_lam.
    std::vector<Rational> e(N, Rational(0));
    size_t idx = static_cast<size_t>(std::find(parts.begin(), parts.end(), lam) - parts.begin());
    e[idx] = 1;
    auto sol = linear_solve<Rational>(A, e);
    if (!sol.unique()) throw std::logic_error("power-sum transition matrix is singular");
    FockElement r;
    for (size_t b = 0; b < N; ++b) r.add(parts[b], RatFun(sol.x[b]));
    return r;
}

namespace {

std::mutex jack_mutex;
std::map<int, std::map<Partition, FockElement>> jack_cache;

std::map<Partition, FockElement> jack_degree(int n) {
    const auto parts = enumerate(n);
    const MPoly t1 = MPoly::var(Var::t1);
    // Orthogonalize twisted monomials m_lam|_{p_k -> t1 p_k} in increasing dominance order.
    std::vector<FockElement> J;
    std::vector<RatFun> norms;
    std::map<Partition, FockElement> out;
    FockElement p1n = FockElement::p(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        FockElement m = monomial_symmetric(*it);
        FockElement tw;
        for (const auto& [nu, c] : m.terms()) tw.add(nu, c * RatFun(t1.pow(nu.length())));
        FockElement v = tw;
        for (size_t k = 0; k < J.size(); ++k) {
            RatFun proj = inner(tw, J[k]) / norms[k];
            if (!proj.is_zero()) v -= J[k] * proj;
        }
        norms.push_back(inner(v, v));
        J.push_back(v);
        RatFun scale = RatFun(factorial(n)) / inner(v, p1n);
        out.emplace(*it, v * scale);
    }
    return out;
}

} // namespace

const FockElement& jack(const Partition& mu) {
    const int n = mu.size();
    {
        std::lock_guard<std::mutex> lock(jack_mutex);
        auto it = jack_cache.find(n);
        if (it != jack_cache.end()) return it->second.at(mu);
    }
    auto fresh = jack_degree(n);
    std::lock_guard<std::mutex> lock(jack_mutex);
    auto [it, ins] = jack_cache.emplace(n, std::move(fresh));
    return it->second.at(mu);
}

long character(const Partition& lam, const Partition& nu) {
    if (lam.size() != nu.size()) return 0;
    if (nu.empty()) return 1;
    const int k = nu.part(1);
    std::vector<int> rest(nu.parts().begin() + 1, nu.parts().end());
    const Partition nu_rest(rest);
    // Beta numbers of lam.
    const int L = lam.length();
    std::vector<int> beta;
    for (int i = 1; i <= L; ++i) beta.push_back(lam.part(i) + L - i);
    long total = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[static_cast<size_t>(i)] - k;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > nb && b < beta[static_cast<size_t>(i)]) ++between;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j) parts.push_back(nbeta[static_cast<size_t>(j)] - (L - 1 - j));
        long sub = character(Partition(parts), nu_rest);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

FockElement schur(const Partition& mu) {
    FockElement r;
    for (const Partition& nu : enumerate(mu.size())) {
        long chi = character(mu, nu);
        if (chi) r.add(nu, RatFun(Rational(chi) / z_factor(nu)));
    }
    return r;
}

} // namespace hvo
