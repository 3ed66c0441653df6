#pragma once

#include "hvo/mpoly.hpp"
#include "hvo/ratfun.hpp"
#include "hvo/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvo {

// ---------------------------------------------------------------- LaurentPoly

template <class C>
class LaurentPoly {
public:
    using Terms = std::map<int, C>;

    LaurentPoly() = default;
    LaurentPoly(const C& c) { add(0, c); }
    LaurentPoly(int c) : LaurentPoly(C(c)) {}
    static LaurentPoly monomial(int e, const C& c = C(1)) {
        LaurentPoly p;
        p.add(e, c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    C coeff(int e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }
    int min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    void add(int e, const C& c) {
        if (hvo::is_zero(c)) return;
        auto [it, ins] = t_.emplace(e, c);
        if (!ins) {
            it->second += c;
            if (hvo::is_zero(it->second)) t_.erase(it);
        }
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
        return r;
    }
    // Keep only exponents in [lo, hi].
    LaurentPoly window(int lo, int hi) const {
        LaurentPoly r;
        for (const auto& [e, c] : t_)
            if (e >= lo && e <= hi) r.t_.emplace(e, c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.t_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.t_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) {
        if (hvo::is_zero(s)) return LaurentPoly();
        for (auto& [e, c] : a.t_) c = c * s;
        return a;
    }
    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    Terms t_;
};

template <class C>
bool is_zero(const LaurentPoly<C>& p) {
    return p.is_zero();
}

template <class C>
std::string to_string(const LaurentPoly<C>& p) {
    return p.to_string();
}

namespace detail {

// Appends "coef*var^e" with sign handling; wraps compound coefficients.
inline void append_term(std::string& out, const std::string& coef, const std::string& var, int e,
                        bool first) {
    std::string c = coef;
    bool neg = false;
    const bool compound = c.find(' ') != std::string::npos || c.find('(') != std::string::npos;
    if (!compound && !c.empty() && c[0] == '-') {
        neg = true;
        c.erase(0, 1);
    }
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    std::string mono;
    if (e != 0) {
        mono = var;
        if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    if (mono.empty()) {
        out += compound ? "(" + c + ")" : c;
    } else if (c == "1") {
        out += mono;
    } else {
        out += (compound ? "(" + c + ")" : c) + "*" + mono;
    }
}

} // namespace detail

template <class C>
std::string LaurentPoly<C>::to_string(const std::string& var) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        using hvo::to_string;
        detail::append_term(out, to_string(it->second), var, it->first, first);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- Series

// Truncated series c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}), times q^prefactor.
template <class C>
class Series {
public:
    explicit Series(int N = 0) : c_(static_cast<size_t>(N + 1), C(0)) {
        if (N < 0) throw std::invalid_argument("negative truncation order");
    }
    explicit Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(C(0));
    }
    static Series one(int N) {
        Series s(N);
        s.c_[0] = C(1);
        return s;
    }
    static Series monomial(int e, const C& c, int N) {
        Series s(N);
        if (e >= 0 && e <= N) s.c_[static_cast<size_t>(e)] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int n) const { return c_.at(static_cast<size_t>(n)); }
    C& operator[](int n) { return c_.at(static_cast<size_t>(n)); }
    C coeff(int n) const { return n >= 0 && n <= order() ? c_[static_cast<size_t>(n)] : C(0); }
    const std::vector<C>& coeffs() const { return c_; }

    Rational prefactor = 0;

    Series truncated(int N) const {
        Series r(std::min(N, order()));
        for (int n = 0; n <= r.order(); ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        r.prefactor = prefactor;
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        check_prefactor(a, b);
        Series r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
        r.prefactor = a.prefactor;
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (hvo::is_zero(a[i])) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (hvo::is_zero(b[j])) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        r.prefactor = a.prefactor + b.prefactor;
        return r;
    }
    friend Series operator*(Series a, const C& s) {
        for (auto& c : a.c_) c = c * s;
        return a;
    }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Multiply in place by (1 - a q^e).
    void mul_one_minus(const C& a, int e) {
        if (e == 0) {
            for (auto& c : c_) c = c - a * c;
            return;
        }
        for (int n = order(); n >= e; --n) c_[static_cast<size_t>(n)] -= a * c_[static_cast<size_t>(n - e)];
    }
    // Divide in place by (1 - a q^e), e >= 1.
    void div_one_minus(const C& a, int e) {
        if (e < 1) throw std::invalid_argument("div_one_minus needs a positive q-power");
        for (int n = e; n <= order(); ++n) c_[static_cast<size_t>(n)] += a * c_[static_cast<size_t>(n - e)];
    }

    bool operator==(const Series& o) const { return prefactor == o.prefactor && c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "q") const;

private:
    static void check_prefactor(const Series& a, const Series& b) {
        if (a.prefactor != b.prefactor) throw std::invalid_argument("series prefactors differ");
    }
    std::vector<C> c_;
};

template <class C>
std::string Series<C>::to_string(const std::string& var) const {
    std::string out;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        if (hvo::is_zero(c_[static_cast<size_t>(n)])) continue;
        using hvo::to_string;
        detail::append_term(out, to_string(c_[static_cast<size_t>(n)]), var, n, first);
        first = false;
    }
    std::string big = "O(" + var + (order() + 1 == 1 ? "" : "^" + std::to_string(order() + 1)) + ")";
    out += first ? big : " + " + big;
    if (!hvo::is_zero(prefactor)) out = var + "^(" + hvo::to_string(prefactor) + ")*(" + out + ")";
    return out;
}

// ---------------------------------------------------------------- operations

inline Rational invert_unit(const Rational& c) {
    if (is_zero(c)) throw std::domain_error("series constant term is not invertible");
    return 1 / c;
}
inline MPoly invert_unit(const MPoly& c) {
    if (!c.is_constant() || c.is_zero()) throw std::domain_error("series constant term is not invertible");
    return MPoly(Rational(1) / c.constant_term());
}
inline RatFun invert_unit(const RatFun& c) { return RatFun(1) / c; }

template <class C>
Series<C> series_inverse(const Series<C>& s) {
    const C inv0 = invert_unit(s[0]);
    Series<C> r(s.order());
    r[0] = inv0;
    for (int n = 1; n <= s.order(); ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k)
            if (!is_zero(s[k])) acc += s[k] * r[n - k];
        r[n] = -(acc * inv0);
    }
    r.prefactor = -s.prefactor;
    return r;
}

template <class C>
Series<C> series_exp(const Series<C>& s) {
    if (!is_zero(s[0])) throw std::domain_error("series_exp needs zero constant term");
    Series<C> e = Series<C>::one(s.order());
    for (int n = 1; n <= s.order(); ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k)
            if (!is_zero(s[k])) acc += s[k] * e[n - k] * Rational(k);
        e[n] = acc * frac(1, n);
    }
    return e;
}

template <class C>
Series<C> series_log(const Series<C>& s) {
    if (s[0] != C(1)) throw std::domain_error("series_log needs constant term 1");
    Series<C> l(s.order());
    for (int n = 1; n <= s.order(); ++n) {
        C acc = s[n] * Rational(n);
        for (int k = 1; k < n; ++k)
            if (!is_zero(l[k])) acc -= l[k] * s[n - k] * Rational(k);
        l[n] = acc * frac(1, n);
    }
    return l;
}

// exp(e * log s); e may be symbolic (e.g. m^2 - 1 over Q[m]).
template <class C>
Series<C> series_pow(const Series<C>& s, const C& e) {
    return series_exp(series_log(s) * e);
}

template <class C>
Series<C> series_pow_int(const Series<C>& s, int k) {
    if (k < 0) return series_pow_int(series_inverse(s), -k);
    Series<C> r = Series<C>::one(s.order());
    for (int i = 0; i < k; ++i) r *= s;
    r.prefactor = s.prefactor * k;
    return r;
}

template <class To, class From>
Series<To> series_cast(const Series<From>& s) {
    Series<To> r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = To(s[n]);
    r.prefactor = s.prefactor;
    return r;
}

// Product over k = 0..n (or k >= 0 when n is empty) of (1 - a q^{shift+k}), to order N.
template <class C>
Series<C> pochhammer(const C& a, int shift, std::optional<int> n, int N) {
    Series<C> r = Series<C>::one(N);
    if (is_zero(a)) return r;
    for (int k = 0;; ++k) {
        if (n && k > *n) break;
        const int e = shift + k;
        if (e > N) break;
        r.mul_one_minus(a, e);
    }
    return r;
}

// (q;q)_infinity to order N.
Series<Rational> qq_inf(int N);
// (q^d;q^d)_infinity to order N.
Series<Rational> qq_inf_step(int d, int N);

} // namespace hvo
