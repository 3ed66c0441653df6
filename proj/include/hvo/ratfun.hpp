#pragma once

#include "hvo/mpoly.hpp"

#include <string>

namespace hvo {

// num/den in lowest terms; den has leading coefficient 1.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const MPoly& p) : num_(p), den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(long c) : RatFun(Rational(c)) {}
    RatFun(int c) : RatFun(Rational(c)) {}
    RatFun(const MPoly& num, const MPoly& den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Throws std::domain_error unless is_polynomial().
    MPoly as_poly() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    // Cross-multiplication test.
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun subs(Var v, const Rational& value) const;
    RatFun subs(Var v, const MPoly& value) const;

    std::string to_string() const;

private:
    void normalize();
    MPoly num_, den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }
std::string to_string(const RatFun& r);

} // namespace hvo
