#include "eulerbt/transforms.hpp"

#include <stdexcept>

namespace eulerbt {

std::vector<MPoly> binomial_transform(const std::vector<MPoly>& a) {
    if (a.empty()) throw std::invalid_argument("binomial_transform: empty sequence");
    std::vector<MPoly> b(a.size());
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t k = 0; k <= m; ++k)
            b[m] += a[k] * rat_binomial(BigInt(m), static_cast<int>(k));
    return b;
}

std::vector<MPoly> inverse_binomial_transform(const std::vector<MPoly>& b) {
    if (b.empty()) throw std::invalid_argument("inverse_binomial_transform: empty sequence");
    std::vector<MPoly> a(b.size());
    for (std::size_t m = 0; m < b.size(); ++m) {
        for (std::size_t k = 0; k <= m; ++k) {
            Rat c = rat_binomial(BigInt(m), static_cast<int>(k));
            if ((m - k) % 2 != 0) c = -c;
            a[m] += b[k] * c;
        }
    }
    return a;
}

Series euler_transform(const Series& f) {
    const int order = f.order();
    // (1-t)^-1 is the alpha = 0 negative-binomial series with base 1
    return series_mul(negbinom_series(MPoly(1), MPoly(0), order),
                      substitute_mobius(f, MPoly(1), order));
}

Series mul_binomial_power(const Series& f, const MPoly& z, const MPoly& exponent) {
    return series_mul(binom_power_series(z, exponent, f.order()), f);
}

Series generalized_euler_transform(const Series& f, const MPoly& x, const MPoly& exponent) {
    const int order = f.order();
    return series_mul(negbinom_series(x, exponent, order), substitute_mobius(f, x, order));
}

}  // namespace eulerbt
