#include "eulerbt/series.hpp"

#include <algorithm>

#include "eulerbt/errors.hpp"

namespace eulerbt {

Series::Series(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw EmptyCoefficients("Series requires at least one coefficient");
}

Series Series::constant(const MPoly& c, int order) {
    std::vector<MPoly> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] = c;
    return Series(std::move(coeffs));
}

SeriesAgreement agree(const Series& a, const Series& b) {
    SeriesAgreement r;
    r.order_compared = std::min(a.order(), b.order());
    r.equal = true;
    for (int m = 0; m <= r.order_compared; ++m) {
        if (a[m] != b[m]) {
            r.equal = false;
            r.first_mismatch = m;
            break;
        }
    }
    return r;
}

Series negbinom_series(const MPoly& base, const MPoly& alpha, int order) {
    std::vector<MPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    MPoly base_pow(Rat(1));
    for (int k = 0; k <= order; ++k) {
        coeffs.push_back(gen_binomial(alpha + MPoly(k), k) * base_pow);
        if (k < order) base_pow *= base;
    }
    return Series(std::move(coeffs));
}

Series binom_power_series(const MPoly& z, const MPoly& exponent, int order) {
    std::vector<MPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    MPoly z_pow(Rat(1));
    for (int k = 0; k <= order; ++k) {
        coeffs.push_back(gen_binomial(exponent, k) * z_pow);
        if (k < order) z_pow *= z;
    }
    return Series(std::move(coeffs));
}

Series series_mul(const Series& f, const Series& g) {
    const int order = std::min(f.order(), g.order());
    std::vector<MPoly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(n)] += f[k] * g[n - k];
    return Series(std::move(coeffs));
}

Series substitute_mobius(const Series& f, const MPoly& x, int order) {
    if (f.order() < order)
        throw InsufficientOrder("substitute_mobius: input order " + std::to_string(f.order()) +
                                " below requested order " + std::to_string(order));
    std::vector<MPoly> x_pow;
    x_pow.reserve(static_cast<std::size_t>(order) + 1);
    x_pow.emplace_back(Rat(1));
    for (int j = 1; j <= order; ++j) x_pow.push_back(x_pow.back() * x);

    std::vector<MPoly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        MPoly& c = coeffs[static_cast<std::size_t>(n)];
        // coefficient of t^(n-m) in (1-xt)^-m is C(n-1, n-m) x^(n-m)
        for (int m = 0; m <= n; ++m) {
            Rat binom = rat_binomial(BigInt(n - 1), n - m);
            if (binom.is_zero()) continue;
            c += f[m] * x_pow[static_cast<std::size_t>(n - m)] * binom;
        }
    }
    return Series(std::move(coeffs));
}

std::string series_text(const Series& f) {
    std::string out;
    for (int m = 0; m <= f.order(); ++m)
        out += "t^" + std::to_string(m) + ": " + f[m].str() + "\n";
    return out;
}

}  // namespace eulerbt
