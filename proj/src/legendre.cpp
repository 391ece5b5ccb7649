#include "eulerbt/legendre.hpp"

#include <stdexcept>

namespace eulerbt {

namespace {

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("legendre: n must be non-negative");
}

MPoly ibinom(int n, int k) { return gen_binomial(MPoly(n), k); }

}  // namespace

MPoly legendre_rodrigues(int n) {
    check_n(n);
    const MPoly x = MPoly::var(VarId::X);
    MPoly p = (x * x - MPoly(1)).pow(n);
    for (int i = 0; i < n; ++i) p = p.derivative(VarId::X);
    p *= Rat(BigInt(1), pow(BigInt(2), static_cast<unsigned>(n)) * factorial(n));
    return p;
}

MPoly legendre_rep20(int n) {
    check_n(n);
    const MPoly half_below = (MPoly::var(VarId::X) - MPoly(1)) * Rat(1, 2);
    MPoly p;
    for (int k = 0; k <= n; ++k) p += ibinom(n, k) * ibinom(n + k, k) * half_below.pow(k);
    return p;
}

MPoly legendre_rep21(int n) {
    check_n(n);
    const MPoly half_above = (MPoly::var(VarId::X) + MPoly(1)) * Rat(1, 2);
    MPoly p;
    for (int k = 0; k <= n; ++k) {
        MPoly term = ibinom(n, k) * ibinom(n + k, k) * half_above.pow(k);
        if ((n - k) % 2 != 0) term = -term;
        p += term;
    }
    return p;
}

MPoly legendre_rep22(int n) {
    check_n(n);
    const MPoly half_below = (MPoly::var(VarId::X) - MPoly(1)) * Rat(1, 2);
    const MPoly half_above = (MPoly::var(VarId::X) + MPoly(1)) * Rat(1, 2);
    MPoly p;
    for (int k = 0; k <= n; ++k) {
        MPoly cnk = ibinom(n, k);
        p += cnk * cnk * half_below.pow(n - k) * half_above.pow(k);
    }
    return p;
}

bool legendre_reps_agree(int n) {
    MPoly rod = legendre_rodrigues(n);
    return rod == legendre_rep20(n) && rod == legendre_rep21(n) && rod == legendre_rep22(n);
}

}  // namespace eulerbt
