#pragma once

#include "eulerbt/mpoly.hpp"

namespace eulerbt {

// Legendre polynomials as exact polynomials in the single variable x.
// The Rodrigues construction is the ground truth; the three series
// representations must all agree with it.

// P_n(x) = (1/(2^n n!)) (d/dx)^n (x^2 - 1)^n
MPoly legendre_rodrigues(int n);

// sum_k C(n,k) C(n+k,k) ((x-1)/2)^k
MPoly legendre_rep20(int n);

// sum_k C(n,k) C(n+k,k) (-1)^(n-k) ((x+1)/2)^k
MPoly legendre_rep21(int n);

// sum_k C(n,k)^2 ((x-1)/2)^(n-k) ((x+1)/2)^k, the denominator-free form of
// the ((x+1)/(x-1))^k representation.
MPoly legendre_rep22(int n);

// True iff all four constructions give the same polynomial.
bool legendre_reps_agree(int n);

}  // namespace eulerbt
