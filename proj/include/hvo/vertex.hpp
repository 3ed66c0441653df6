#pragma once

#include "hvo/fock.hpp"
#include "hvo/mpoly.hpp"
#include "hvo/partitions.hpp"

#include <map>
#include <string>
#include <utility>

namespace hvo {

enum class SignPattern { alternating, constant };

// exp((c/(t1 t2)) sum_n s_n d/dp_n) with s_n = (-1)^{n+1} or 1.
struct HalfVertexSpec {
    RatFun c;
    SignPattern pattern = SignPattern::constant;
};

// The exponential of derivations is the shift p_n -> p_n + c s_n/(t1 t2).
FockElement half_vertex_apply(const HalfVertexSpec& spec, const FockElement& v);

// <X_const(m) J_mu, X_alt(m+t1+t2) J_lam>; a polynomial in t1, t2, m.
MPoly w_matrix_element(const Partition& mu, const Partition& lam);

// prod_{mu}(m + t1 a_lam + t1 - t2 l_mu) prod_{lam}(m - t1 a_mu + t2 l_lam + t2).
MPoly hook_side(const Partition& mu, const Partition& lam);

// Laurent polynomial in (z1, z2) with integer coefficients.
struct Character2 {
    std::map<std::pair<int, int>, long> terms;

    void add(int p, int q, long c);
    long coeff(int p, int q) const;
    long term_count() const;  // sum of |coefficients|
    bool operator==(const Character2&) const = default;
    std::string to_string() const;
};

// sum_{mu} z1^{a_lam+1} z2^{-l_mu} + sum_{lam} z1^{-a_mu} z2^{l_lam+1}.
Character2 tangent_character(const Partition& lam, const Partition& mu);

// chi(O,O) - chi(I_lam, I_mu) with chi(F,G) = ch F conj(ch G) (1-z1)(1-z2):
// conj(Q_mu) + z1 z2 Q_lam - (1-z1)(1-z2) Q_lam conj(Q_mu), Q = sum z1^{j-1} z2^{i-1}.
Character2 tangent_character_ext(const Partition& lam, const Partition& mu);

} // namespace hvo
