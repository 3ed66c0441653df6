#pragma once

#include "hvo/fock.hpp"
#include "hvo/partitions.hpp"
#include "hvo/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hvo {

// (charge c, mu) encodes v_{mu_1+c} ^ v_{mu_2+c-1} ^ ..., i.e. occupied
// indices i_k = mu_k - k + 1 + c.
struct WedgeKey {
    int charge = 0;
    Partition mu;
    bool operator==(const WedgeKey&) const = default;
    std::strong_ordering operator<=>(const WedgeKey& o) const;
};

class WedgeVector {
public:
    using Terms = std::map<WedgeKey, Rational>;

    WedgeVector() = default;
    static WedgeVector basis(const Partition& mu, int charge = 0, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const WedgeKey& k) const;
    void add(const WedgeKey& k, const Rational& c);
    // Max |mu| over the support; -1 when zero.
    int max_energy() const;

    WedgeVector& operator+=(const WedgeVector& o);
    WedgeVector& operator-=(const WedgeVector& o);
    friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
    friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
    friend WedgeVector operator*(WedgeVector a, const Rational& c);
    friend WedgeVector operator*(const Rational& c, WedgeVector a) { return std::move(a) * c; }
    bool operator==(const WedgeVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const WedgeVector& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms terms_;
};

// Occupied indices of a basis vector, descending, listed down past `lowest`.
std::vector<int> occupied_indices(const WedgeKey& k, int lowest);

WedgeVector psi(int i, const WedgeVector& w);
WedgeVector psi_star(int i, const WedgeVector& w);
WedgeVector q_shift(const WedgeVector& w, int k);
// sum_n psi_n psi*_{n+k}, k != 0.
WedgeVector alpha_fermionic(int k, const WedgeVector& w);

// One-body operator sum_n c(n) psi_{n+s} psi*_n with fixed shift s != 0;
// coef(n) returns the coefficient (zero to skip).
WedgeVector apply_shift_operator(const WedgeVector& w, int shift, const std::function<Rational(int)>& coef);

// Boson-fermion map on charge 0: s_mu -> v_mu. The input is specialized at t1=1, t2=-1.
WedgeVector phi_iso(const FockElement& v);
FockElement phi_inverse(const WedgeVector& w);

// Diagonal f_k: sum over cells of content^k / k!.
WedgeVector f_diag(int k, const WedgeVector& w);

// Regularized h0 eigenvalue of a basis vector.
int h0_eigenvalue(const WedgeKey& k);
// Regularized loop degree d = -t d/dt; D = 2d - h0/2 equals the energy.
Rational loop_degree(const WedgeKey& k);

// Affine sl2 through the mode identification t^j (x) u_i <-> v_{-2j+i}.
enum class Sl2Kind { e, f, h, K, degree };
struct Sl2Gen {
    Sl2Kind kind;
    int j = 0;
    std::string name() const;
};
WedgeVector sl2hat_matrix_action(const Sl2Gen& g, const WedgeVector& w);

// Principal construction from the odd Heisenberg modes.
enum class PrincipalKind {
    h,           // h_j <- [z^{-2j}] (Gamma - 1)/2
    e_minus_f,   // e_j - f_{j+1} <- [z^{-2j-1}] (1 - Gamma)/2
    e_plus_f,    // e_j + f_{j+1} <- alpha_{2j+1}
    degree_odd,  // sum over odd k > 0 of alpha_{-k} alpha_k
    degree_all   // sum over all k > 0 of alpha_{-k} alpha_k
};
struct PrincipalGen {
    PrincipalKind kind;
    int j = 0;
    std::string name() const;
};
// Coefficient [z^s] of Gamma^odd(z) applied to w; energies must be <= truncation.
WedgeVector gamma_odd_coeff(int s, const WedgeVector& w, int truncation);
WedgeVector sl2hat_principal_action(const PrincipalGen& g, const WedgeVector& w, int truncation);
// The matrix-side combination matching a principal generator.
WedgeVector sl2hat_matrix_for(const PrincipalGen& g, const WedgeVector& w);

} // namespace hvo
