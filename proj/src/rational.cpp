#include "hvo/rational.hpp"

#include <stdexcept>

namespace hvo {

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ') t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    Rational r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
    r.canonicalize();
    return r;
}

Rational frac(long a, long b) {
    if (b == 0) throw std::domain_error("zero denominator");
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational rpow(const Rational& r, int e) {
    Rational out = 1;
    Rational base = r;
    if (e < 0) {
        if (is_zero(r)) throw std::domain_error("0 to a negative power");
        base = 1 / r;
        e = -e;
    }
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    out.canonicalize();
    return out;
}

} // namespace hvo
