#pragma once

#include "hvo/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace hvo {

// Fixed variable universe; declaration order is the lex priority.
enum class Var : int { t1 = 0, t2, m, z1, z2, x, y, a1, a2 };
inline constexpr int kNumVars = 9;

const char* var_name(Var v);

struct Monomial {
    std::array<int16_t, kNumVars> e{};

    int degree() const;
    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    bool is_one() const;
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lex, larger first, so the map's first entry is the leading term.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    MPoly() = default;
    MPoly(const Rational& c);
    MPoly(long c) : MPoly(Rational(c)) {}
    MPoly(int c) : MPoly(Rational(c)) {}

    static MPoly var(Var v, int power = 1);
    static MPoly monomial(const Monomial& mono, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // Coefficient of an exact monomial.
    Rational coeff(const Monomial& mono) const;

    int degree(Var v) const;
    int total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }
    const Monomial& lead_monomial() const;  // nonzero only
    const Rational& lead_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int e) const;
    MPoly subs(Var v, const MPoly& value) const;
    MPoly subs(Var v, const Rational& value) const { return subs(v, MPoly(value)); }
    MPoly derivative(Var v) const;

    // Coefficient of v^k, as a polynomial in the other variables.
    MPoly coeff_of(Var v, int k) const;
    // Exact division; throws std::domain_error when not exact.
    MPoly divide_exact(const MPoly& d) const;
    // Gcd of all numeric coefficients, positive; 0 for the zero polynomial.
    Rational numeric_content() const;
    // Largest monomial dividing every term.
    Monomial monomial_content() const;

    std::string to_string() const;

private:
    void add_term(const Monomial& mono, const Rational& c);
    Terms terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

// Multivariate gcd over Q, normalized to have positive leading coefficient 1.
MPoly gcd(const MPoly& a, const MPoly& b);

// Parser for "2*t1^2*t2 - m^2", parentheses, and rational literals ("3/2").
MPoly parse_mpoly(std::string_view s);

std::string to_string(const MPoly& p);

} // namespace hvo
