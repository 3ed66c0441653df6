#include "hvo/series.hpp"

namespace hvo {

Series<Rational> qq_inf(int N) { return qq_inf_step(1, N); }

Series<Rational> qq_inf_step(int d, int N) {
    Series<Rational> r = Series<Rational>::one(N);
    for (int k = d; k <= N; k += d) r.mul_one_minus(Rational(1), k);
    return r;
}

} // namespace hvo
