#pragma once

#include "hvo/partitions.hpp"
#include "hvo/ratfun.hpp"

#include <map>
#include <string>
#include <string_view>

namespace hvo {

// Finite combination of power-sum monomials p_mu with RatFun coefficients.
class FockElement {
public:
    using Terms = std::map<Partition, RatFun>;

    FockElement() = default;
    static FockElement vacuum();
    static FockElement p(const Partition& mu, const RatFun& c = RatFun(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFun coeff(const Partition& mu) const;
    void add(const Partition& mu, const RatFun& c);
    // Max |mu| over the support; -1 when zero.
    int max_degree() const;

    FockElement operator-() const;
    FockElement& operator+=(const FockElement& o);
    FockElement& operator-=(const FockElement& o);
    friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
    friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
    friend FockElement operator*(FockElement a, const RatFun& c);
    friend FockElement operator*(const RatFun& c, FockElement a) { return std::move(a) * c; }
    bool operator==(const FockElement& o) const;
    bool operator!=(const FockElement& o) const { return !(*this == o); }

    FockElement subs(Var v, const Rational& value) const;
    std::string to_string() const;

private:
    Terms terms_;
};

// "t1^2*t2^2*p1^2 - t1^2*t2*p2"; coefficients in t1, t2, m and power sums p1..p6.
FockElement parse_fock(std::string_view s);

// alpha_{-k}: multiplication by p_k.
FockElement create(int k, const FockElement& v);
// alpha_k = (k/(t1 t2)) d/dp_k.
FockElement annihilate(int k, const FockElement& v);

// <p_mu, p_mu> = (-1)^{|mu|-l(mu)} z(mu) / (t1 t2)^{l(mu)}.
RatFun inner(const FockElement& u, const FockElement& v);
RatFun inner_pp(const Partition& mu);
Rational z_factor(const Partition& mu);

// Monomial symmetric function m_lambda in the power-sum basis (rational coefficients).
FockElement monomial_symmetric(const Partition& lam);
// Integral-form Jack polynomial, normalized by <J, p_1^n> = n!.
const FockElement& jack(const Partition& mu);
// Schur function in the power-sum basis.
FockElement schur(const Partition& mu);
// Irreducible character chi^lambda at cycle type nu (Murnaghan-Nakayama).
long character(const Partition& lam, const Partition& nu);

} // namespace hvo
