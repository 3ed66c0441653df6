#include "hvo/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace hvo {

RatFun::RatFun(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFun with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (den_.is_constant()) {
        num_ *= Rational(1) / den_.constant_term();
        den_ = MPoly(1);
        return;
    }
    if (den_.terms().size() == 1) {
        // Monomial denominator: only a monomial can cancel.
        Monomial dm = den_.lead_monomial();
        Monomial nm = num_.monomial_content();
        Monomial g;
        for (int i = 0; i < kNumVars; ++i) g.e[i] = std::min(dm.e[i], nm.e[i]);
        MPoly gp = MPoly::monomial(g, den_.lead_coeff());
        num_ = num_.divide_exact(gp);
        den_ = den_.divide_exact(gp);
        return;
    }
    MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lc = den_.lead_coeff();
    num_ *= Rational(1) / lc;
    den_ *= Rational(1) / lc;
}

MPoly RatFun::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
    return num_;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun();
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw std::domain_error("RatFun division by zero");
    if (is_zero()) return *this;
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool RatFun::operator==(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFun RatFun::subs(Var v, const Rational& value) const { return subs(v, MPoly(value)); }

RatFun RatFun::subs(Var v, const MPoly& value) const {
    MPoly d = den_.subs(v, value);
    if (d.is_zero()) throw std::domain_error("specialization hits a pole of " + to_string());
    return RatFun(num_.subs(v, value), d);
}

std::string RatFun::to_string() const {
    if (is_polynomial()) return num_.to_string();
    auto wrap = [](const MPoly& p) {
        std::string s = p.to_string();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::string to_string(const RatFun& r) { return r.to_string(); }

} // namespace hvo
