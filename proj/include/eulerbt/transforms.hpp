#pragma once

#include <vector>

#include "eulerbt/series.hpp"

namespace eulerbt {

// b_m = sum_{k=0}^m C(m,k) a_k, for every m up to the input length.
std::vector<MPoly> binomial_transform(const std::vector<MPoly>& a);

// a_m = sum_{k=0}^m C(m,k) (-1)^(m-k) b_k; inverse of binomial_transform.
std::vector<MPoly> inverse_binomial_transform(const std::vector<MPoly>& b);

// Euler's series transformation: truncation of (1/(1-t)) f(t/(1-t)).
// Central contract: coefficient m equals binomial_transform(coeffs(f))[m].
Series euler_transform(const Series& f);

// Truncation of (1+zt)^exponent * f(t), computed as a series product.
// Agrees with the direct double sum: coefficient n = sum_k C(alpha, n-k) a_k z^(n-k).
Series mul_binomial_power(const Series& f, const MPoly& z, const MPoly& exponent);

// Generalized Euler transformation: truncation of (1-xt)^-(alpha+1) f(t/(1-xt)).
// Coefficient n equals sum_k C(alpha+n, n-k) x^(n-k) a_k.
// At x = 1, alpha = 0 this degenerates to euler_transform.
Series generalized_euler_transform(const Series& f, const MPoly& x, const MPoly& exponent);

}  // namespace eulerbt
