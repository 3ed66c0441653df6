#include "hvo/qseries.hpp"

#include <map>
#include <mutex>

namespace hvo {

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli needs n >= 0");
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1, B_1 = -1/2.
    std::vector<Rational> B(static_cast<size_t>(n + 1));
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * B[static_cast<size_t>(k)];
        B[static_cast<size_t>(m)] = -acc / Rational(m + 1);
    }
    return B[static_cast<size_t>(n)];
}

Rational divisor_sigma(int k, int n) {
    Rational s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += rpow(Rational(d), k);
    return s;
}

namespace {

std::mutex eis_mutex;
std::map<int, Series<Rational>> eis_cache;

} // namespace

Series<Rational> eisenstein(int weight, int N) {
    if (weight < 2 || weight % 2) throw std::invalid_argument("eisenstein needs an even weight >= 2");
    {
        std::lock_guard<std::mutex> lock(eis_mutex);
        auto it = eis_cache.find(weight);
        if (it != eis_cache.end() && it->second.order() >= N) return it->second.truncated(N);
    }
    Series<Rational> e(N);
    e[0] = -bernoulli(weight) / Rational(2 * weight);
    for (int n = 1; n <= N; ++n) e[n] = divisor_sigma(weight - 1, n);
    std::lock_guard<std::mutex> lock(eis_mutex);
    auto& slot = eis_cache[weight];
    if (slot.order() < N) slot = e;
    return e;
}

std::string QmfBasisElement::name() const {
    std::string out;
    auto put = [&](const char* s, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += s;
        if (e != 1) out += "^" + std::to_string(e);
    };
    put("E2", a);
    put("E4", b);
    put("E6", c);
    return out.empty() ? "1" : out;
}

std::strong_ordering QmfBasisElement::operator<=>(const QmfBasisElement& o) const {
    if (auto w = weight() <=> o.weight(); w != 0) return w;
    if (auto x = o.a <=> a; x != 0) return x;
    if (auto x = o.b <=> b; x != 0) return x;
    return o.c <=> c;
}

std::vector<QmfBasisElement> qmf_basis(int max_weight, int min_weight) {
    std::vector<QmfBasisElement> out;
    for (int w = std::max(min_weight, 0); w <= max_weight; ++w) {
        if (w % 2) continue;
        for (int a = w / 2; a >= 0; --a)
            for (int b = (w - 2 * a) / 4; b >= 0; --b) {
                int rest = w - 2 * a - 4 * b;
                if (rest % 6 == 0) out.push_back({a, b, rest / 6});
            }
    }
    return out;
}

Series<Rational> qmf_expansion(const QmfBasisElement& e, int N) {
    Series<Rational> r = Series<Rational>::one(N);
    if (e.a) r *= series_pow_int(eisenstein(2, N), e.a);
    if (e.b) r *= series_pow_int(eisenstein(4, N), e.b);
    if (e.c) r *= series_pow_int(eisenstein(6, N), e.c);
    return r;
}

// ---------------------------------------------------------------- theta

Series<LaurentPoly<Rational>> theta(int N, int x_lo, int x_hi) {
    using LP = LaurentPoly<Rational>;
    Series<LP> r = pochhammer(LP::monomial(1), 1, std::nullopt, N);
    r *= pochhammer(LP::monomial(-1), 0, std::nullopt, N);
    Series<Rational> inv = series_pow_int(qq_inf(N), -2);
    r *= series_cast<LP>(inv);
    for (int n = 0; n <= N; ++n) r[n] = r[n].window(x_lo, x_hi);
    return r;
}

Series<LaurentPoly<Rational>> theta11_product(int R) {
    using LP = LaurentPoly<Rational>;
    Series<LP> r = Series<LP>::one(R);
    for (int k = 1; 2 * k - 1 <= R; ++k) {
        r.mul_one_minus(LP::monomial(1, Rational(-1)), 2 * k - 1);
        r.mul_one_minus(LP::monomial(-1, Rational(-1)), 2 * k - 1);
        if (2 * k <= R) r.mul_one_minus(LP(1), 2 * k);
    }
    return r;
}

Series<LaurentPoly<Rational>> theta11_sum(int R) {
    using LP = LaurentPoly<Rational>;
    Series<LP> r(R);
    for (int n = 0; n * n <= R; ++n) {
        r[n * n].add(n, Rational(1));
        if (n) r[n * n].add(-n, Rational(1));
    }
    return r;
}

std::vector<Series<Rational>> theta_z_expansion(int N, int max_odd) {
    if (max_odd < 1) return {};
    // log of the product part: -2 sum_{j>=1} w^{2j}/(2j)! sum_n sigma_{2j-1}(n) q^n.
    const int D = max_odd - 1;
    std::vector<Series<Rational>> L(static_cast<size_t>(D + 1), Series<Rational>(N));
    for (int j = 1; 2 * j <= D; ++j) {
        Series<Rational>& s = L[static_cast<size_t>(2 * j)];
        const Rational scale = Rational(-2) / factorial(2 * j);
        for (int n = 1; n <= N; ++n) s[n] = scale * divisor_sigma(2 * j - 1, n);
    }
    // exp as a power series in w: E_n = (1/n) sum_k k L_k E_{n-k}.
    std::vector<Series<Rational>> E(static_cast<size_t>(D + 1), Series<Rational>(N));
    E[0] = Series<Rational>::one(N);
    for (int n = 1; n <= D; ++n) {
        Series<Rational> acc(N);
        for (int k = 1; k <= n; ++k) acc += L[static_cast<size_t>(k)] * E[static_cast<size_t>(n - k)] * Rational(k);
        E[static_cast<size_t>(n)] = acc * frac(1, n);
    }
    // e^{w/2} - e^{-w/2} = sum_{r odd} w^r / (2^{r-1} r!).
    std::vector<Series<Rational>> out;
    for (int r = 1; r <= max_odd; r += 2) {
        Series<Rational> acc(N);
        for (int s = 1; s <= r; s += 2) {
            const Rational c = Rational(1) / (rpow(Rational(2), s - 1) * factorial(s));
            acc += E[static_cast<size_t>(r - s)] * c;
        }
        out.push_back(acc);
    }
    return out;
}

// ---------------------------------------------------------------- fitting

namespace {

template <class C>
FitResult<C> fit_impl(const Series<C>& s, int max_weight, int guard, int min_weight) {
    FitResult<C> res;
    const auto basis = qmf_basis(max_weight, min_weight);
    const int dim = static_cast<int>(basis.size());
    const int avail = s.order() + 1;
    if (avail < dim + guard) {
        res.error = "insufficient truncation: need " + std::to_string(dim + guard) + " orders, have " +
                    std::to_string(avail);
        return res;
    }
    std::vector<Series<Rational>> ex;
    for (const auto& e : basis) ex.push_back(qmf_expansion(e, s.order()));
    // Grow the solve window until the coefficients are determined.
    for (int rows = dim; rows + guard <= avail; ++rows) {
        std::vector<std::vector<Rational>> A(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(dim)));
        std::vector<C> b(static_cast<size_t>(rows));
        for (int n = 0; n < rows; ++n) {
            for (int k = 0; k < dim; ++k) A[static_cast<size_t>(n)][static_cast<size_t>(k)] = ex[static_cast<size_t>(k)][n];
            b[static_cast<size_t>(n)] = s[n];
        }
        auto sol = linear_solve<Rational, C>(A, b);
        if (!sol.consistent) {
            res.error = "inconsistent fit";
            res.first_mismatch = sol.failing_row;
            return res;
        }
        if (!sol.unique()) continue;
        res.solve_orders = rows;
        for (int n = rows; n < avail; ++n) {
            C v(0);
            for (int k = 0; k < dim; ++k) v += sol.x[static_cast<size_t>(k)] * ex[static_cast<size_t>(k)][n];
            if (v != s[n]) {
                res.error = "inconsistent fit";
                res.first_mismatch = n;
                return res;
            }
        }
        for (int k = 0; k < dim; ++k)
            if (!is_zero(sol.x[static_cast<size_t>(k)])) res.coeffs.emplace_back(basis[static_cast<size_t>(k)], sol.x[static_cast<size_t>(k)]);
        res.ok = true;
        return res;
    }
    res.error = "insufficient truncation: basis not determined by available orders";
    return res;
}

} // namespace

FitResult<Rational> fit_series(const Series<Rational>& s, int max_weight, int guard, int min_weight) {
    return fit_impl(s, max_weight, guard, min_weight);
}

FitResult<MPoly> fit_series(const Series<MPoly>& s, int max_weight, int guard, int min_weight) {
    return fit_impl(s, max_weight, guard, min_weight);
}

EtaQuotient eta_quotient(const std::vector<std::pair<int, int>>& factors, int N) {
    EtaQuotient q;
    q.factors = factors;
    q.prefactor = 0;
    q.body = Series<Rational>::one(N);
    for (auto [d, r] : factors) {
        if (d < 1) throw std::invalid_argument("eta multiplier must be positive");
        q.prefactor += frac(static_cast<long>(d) * r, 24);
        q.body *= series_pow_int(qq_inf_step(d, N), r);
    }
    q.body.prefactor = q.prefactor;
    return q;
}

} // namespace hvo
