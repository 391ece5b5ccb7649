#pragma once

#include <optional>
#include <vector>

#include "eulerbt/rat.hpp"

namespace eulerbt {

// Euler acceleration of an alternating series sum_k (-1)^k c_k, given the
// positive parts c_k. Derivation: Euler's transformation
//   (1/(1-t)) g(t/(1-t)) = sum_m t^m sum_k C(m,k) a_k
// applied to g(t) = sum_k (-1)^k c_k t^k at t = 1/2, where t/(1-t) = 1, gives
//   sum_k (-1)^k c_k = sum_m b_m / 2^(m+1)  with  b_m = sum_k C(m,k)(-1)^k c_k,
// and b_m = (-1)^m Delta^m c_0, so the accelerated series is
//   sum_m (-1)^m Delta^m c_0 / 2^(m+1).
// Everything is computed exactly over Rat; decimal rendering is a CLI concern.
struct AccelTable {
    std::vector<Rat> c;               // the m+1 input terms used
    std::vector<Rat> diffs;           // Delta^j c_0 for j = 0..m
    std::vector<Rat> plain_partials;  // partial sums of sum (-1)^k c_k
    std::vector<Rat> accel_partials;  // partial sums of sum (-1)^j Delta^j c_0 / 2^(j+1)
    std::optional<Rat> reference;     // optional high-precision target value
};

// [Delta^0 c_0, ..., Delta^m c_0] by an exact difference table.
// Delta^m c_0 = sum_k C(m,k)(-1)^(m-k) c_k, the inverse-binomial-transform kernel.
// Requires at least m+1 terms, else InsufficientTerms.
std::vector<Rat> forward_differences(const std::vector<Rat>& c, int m);

// Fills the full table with m+1 retained differences.
AccelTable euler_accelerate(const std::vector<Rat>& c, int m);

}  // namespace eulerbt
