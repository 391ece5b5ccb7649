#pragma once

#include <string>
#include <vector>

#include "eulerbt/mpoly.hpp"

namespace eulerbt {

// Truncated formal power series in t with MPoly coefficients. The variable t
// is structural (the coefficient index), never an MPoly variable. The
// truncation order is explicit: order N means coefficients of t^0 .. t^N are
// stored and exact.
class Series {
public:
    explicit Series(std::vector<MPoly> coeffs);

    static Series constant(const MPoly& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MPoly& operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
    const std::vector<MPoly>& coeffs() const { return coeffs_; }

private:
    std::vector<MPoly> coeffs_;
};

// Result of comparing two series coefficient-wise up to the smaller order.
// Comparisons always state which order was actually used.
struct SeriesAgreement {
    bool equal = false;
    int order_compared = -1;
    int first_mismatch = -1;  // -1 when equal
};

SeriesAgreement agree(const Series& a, const Series& b);

// Truncation of (1 - base*t)^-(alpha+1): coefficient k is
// C(alpha+k, k) * base^k with the generalized binomial coefficient.
Series negbinom_series(const MPoly& base, const MPoly& alpha, int order);

// Truncation of (1 + z*t)^exponent: coefficient k is C(exponent, k) * z^k.
// For a constant integer exponent m >= 0 the coefficients vanish for k > m.
Series binom_power_series(const MPoly& z, const MPoly& exponent, int order);

// Cauchy product truncated at min(f.order, g.order).
Series series_mul(const Series& f, const Series& g);

// f(t/(1 - x*t)) truncated at `order`, computed by expanding each
// a_m t^m / (1-xt)^m term: coefficient n is sum_m a_m * C(n-1, n-m) * x^(n-m).
// Requires f.order >= order.
Series substitute_mobius(const Series& f, const MPoly& x, int order);

// One line per coefficient: "t^k: <polynomial>".
std::string series_text(const Series& f);

}  // namespace eulerbt
