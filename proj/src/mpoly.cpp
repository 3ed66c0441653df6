#include "hvo/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hvo {

namespace {
const char* const kNames[kNumVars] = {"t1", "t2", "m", "z1", "z2", "x", "y", "a1", "a2"};
}

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }

int Monomial::degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int16_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
}

MPoly::MPoly(const Rational& c) {
    if (!hvo::is_zero(c)) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(Var v, int power) {
    Monomial mono;
    mono.e[static_cast<int>(v)] = static_cast<int16_t>(power);
    return monomial(mono, 1);
}

MPoly MPoly::monomial(const Monomial& mono, const Rational& c) {
    MPoly p;
    if (!hvo::is_zero(c)) p.terms_.emplace(mono, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::constant_term() const { return coeff(Monomial{}); }

Rational MPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono[v]);
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

const Monomial& MPoly::lead_monomial() const {
    if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MPoly::lead_coeff() const {
    if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
    return terms_.begin()->second;
}

void MPoly::add_term(const Monomial& mono, const Rational& c) {
    if (hvo::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (hvo::is_zero(it->second)) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
    if (hvo::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of polynomial");
    MPoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

MPoly MPoly::subs(Var v, const MPoly& value) const {
    int dmax = degree(v);
    if (dmax == 0) return *this;
    std::vector<MPoly> powers{MPoly(1)};
    for (int k = 1; k <= dmax; ++k) powers.push_back(powers.back() * value);
    MPoly r;
    const int vi = static_cast<int>(v);
    for (const auto& [mono, c] : terms_) {
        Monomial rest = mono;
        int k = rest.e[vi];
        rest.e[vi] = 0;
        r += MPoly::monomial(rest, c) * powers[k];
    }
    return r;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r;
    const int vi = static_cast<int>(v);
    for (const auto& [mono, c] : terms_) {
        if (mono.e[vi] == 0) continue;
        Monomial d = mono;
        d.e[vi] -= 1;
        r.add_term(d, c * mono.e[vi]);
    }
    return r;
}

MPoly MPoly::coeff_of(Var v, int k) const {
    MPoly r;
    const int vi = static_cast<int>(v);
    for (const auto& [mono, c] : terms_) {
        if (mono.e[vi] != k) continue;
        Monomial rest = mono;
        rest.e[vi] = 0;
        r.terms_.emplace(rest, c);
    }
    return r;
}

MPoly MPoly::divide_exact(const MPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (d.terms_.size() == 1) {
        const auto& [dm, dc] = *d.terms_.begin();
        MPoly q;
        for (const auto& [mono, c] : terms_) {
            if (!dm.divides(mono)) throw std::domain_error("inexact polynomial division");
            q.terms_.emplace(mono / dm, c / dc);
        }
        return q;
    }
    MPoly q, r = *this;
    const Monomial& lm = d.lead_monomial();
    const Rational& lc = d.lead_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.lead_monomial();
        if (!lm.divides(rm)) throw std::domain_error("inexact polynomial division");
        MPoly t = MPoly::monomial(rm / lm, r.lead_coeff() / lc);
        q += t;
        r -= t * d;
    }
    return q;
}

Rational MPoly::numeric_content() const {
    if (terms_.empty()) return 0;
    mpz_class num = 0, den = 1;
    for (const auto& [mono, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Monomial MPoly::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_.begin()->first;
    for (const auto& [mono, c] : terms_)
        for (int i = 0; i < kNumVars; ++i) g.e[i] = std::min(g.e[i], mono.e[i]);
    return g;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Rational a = abs(c);
        bool neg = sgn(c) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string factors;
        for (int i = 0; i < kNumVars; ++i) {
            if (mono.e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += kNames[i];
            if (mono.e[i] != 1) factors += "^" + std::to_string(mono.e[i]);
        }
        if (factors.empty())
            out += hvo::to_string(a);
        else if (a == 1)
            out += factors;
        else
            out += hvo::to_string(a) + "*" + factors;
    }
    return out;
}

std::string to_string(const MPoly& p) { return p.to_string(); }

// ---------------------------------------------------------------- gcd

namespace {

MPoly normalize_lead(const MPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.lead_coeff());
}

MPoly strip_numeric(const MPoly& p) {
    if (p.is_zero()) return p;
    Rational c = p.numeric_content();
    if (sgn(p.lead_coeff()) < 0) c = -c;
    return p * (Rational(1) / c);
}

int first_var(const MPoly& a, const MPoly& b) {
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (a.depends_on(v) || b.depends_on(v)) return i;
    }
    return -1;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_in(const MPoly& p, Var v) {
    MPoly g;
    for (int k = p.degree(v); k >= 0; --k) {
        MPoly c = p.coeff_of(v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? strip_numeric(c) : gcd_rec(g, c);
        if (g.is_constant()) return MPoly(1);
    }
    return g;
}

MPoly prem(const MPoly& a, const MPoly& b, Var v) {
    const int db = b.degree(v);
    const MPoly lcb = b.coeff_of(v, db);
    MPoly r = a;
    while (!r.is_zero()) {
        int d = r.degree(v);
        if (d < db) break;
        MPoly lcr = r.coeff_of(v, d);
        r = lcb * r - lcr * MPoly::var(v, d - db) * b;
        r = strip_numeric(r);
    }
    return r;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return strip_numeric(b);
    if (b.is_zero()) return strip_numeric(a);
    if (a.is_constant() || b.is_constant()) return MPoly(1);

    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg;
    for (int i = 0; i < kNumVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
    const MPoly gm = MPoly::monomial(mg, 1);
    MPoly pa = strip_numeric(a.divide_exact(MPoly::monomial(ma, 1)));
    MPoly pb = strip_numeric(b.divide_exact(MPoly::monomial(mb, 1)));
    if (pa.is_constant() || pb.is_constant()) return gm;

    const Var v = static_cast<Var>(first_var(pa, pb));
    if (!pa.depends_on(v)) return gm * gcd_rec(pa, content_in(pb, v));
    if (!pb.depends_on(v)) return gm * gcd_rec(content_in(pa, v), pb);

    MPoly ca = content_in(pa, v), cb = content_in(pb, v);
    MPoly gc = gcd_rec(ca, cb);
    pa = strip_numeric(pa.divide_exact(ca));
    pb = strip_numeric(pb.divide_exact(cb));
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
        MPoly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            pb = MPoly(1);
            break;
        }
        pa = pb;
        pb = strip_numeric(r.divide_exact(content_in(r, v)));
    }
    return gm * gc * pb;
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return normalize_lead(gcd_rec(a, b)); }

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_mpoly: " + what + " at " + std::to_string(i) + " in '" +
                                    std::string(s) + "'");
    }

    MPoly expr() {
        MPoly r;
        bool neg = eat('-');
        if (!neg) eat('+');
        MPoly t = term();
        r = neg ? -t : t;
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }

    MPoly term() {
        MPoly r = power();
        while (true) {
            if (eat('*')) {
                r *= power();
            } else if (eat('/')) {
                MPoly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
                r *= Rational(1) / d.constant_term();
            } else {
                skip();
                if (i < s.size() && (s[i] == '(' || std::isalpha(static_cast<unsigned char>(s[i]))))
                    r *= power();
                else
                    break;
            }
        }
        return r;
    }

    MPoly power() {
        MPoly b = atom();
        if (eat('^')) {
            skip();
            size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (j == i) fail("expected exponent");
            b = b.pow(std::stoi(std::string(s.substr(j, i - j))));
        }
        return b;
    }

    MPoly atom() {
        skip();
        if (eat('(')) {
            MPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return MPoly(Rational(std::string(s.substr(j, i - j))));
        }
        for (int k = 0; k < kNumVars; ++k) {
            std::string_view name = kNames[k];
            if (s.substr(i, name.size()) == name) {
                size_t after = i + name.size();
                if (after < s.size() && std::isalnum(static_cast<unsigned char>(s[after]))) continue;
                i = after;
                return MPoly::var(static_cast<Var>(k));
            }
        }
        fail("unexpected token");
    }
};

} // namespace

MPoly parse_mpoly(std::string_view s) {
    Parser p{s};
    MPoly r = p.expr();
    p.skip();
    if (p.i != s.size()) p.fail("trailing input");
    return r;
}

} // namespace hvo
