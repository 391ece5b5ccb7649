#pragma once

// Shared helpers for the test suites: seeded random generators and
// independent double-sum oracles that the series-level transforms are
// checked against.

#include <random>
#include <vector>

#include "eulerbt/mpoly.hpp"
#include "eulerbt/rat.hpp"
#include "eulerbt/series.hpp"

namespace testsupport {

using eulerbt::MPoly;
using eulerbt::Rat;
using eulerbt::Series;
using eulerbt::VarId;

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng), den(rng));
}

inline std::vector<Rat> random_rat_seq(Rng& rng, int len) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.push_back(random_rat(rng));
    return out;
}

inline Series random_rat_series(Rng& rng, int order) {
    std::vector<MPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) coeffs.emplace_back(random_rat(rng));
    return Series(std::move(coeffs));
}

// Small polynomial in x and y with a handful of low-degree terms.
inline MPoly random_small_poly(Rng& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    MPoly p;
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        eulerbt::ExponentVec e{};
        e[static_cast<std::size_t>(VarId::X)] = expo(rng);
        e[static_cast<std::size_t>(VarId::Y)] = expo(rng);
        p = p + MPoly::monomial(random_rat(rng), e);
    }
    return p;
}

inline std::vector<MPoly> random_poly_seq(Rng& rng, int len) {
    std::vector<MPoly> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.push_back(random_small_poly(rng));
    return out;
}

inline Series random_poly_series(Rng& rng, int order) {
    std::vector<MPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) coeffs.push_back(random_small_poly(rng));
    return Series(std::move(coeffs));
}

// Plain factorial-quotient binomial coefficient, the reference for the
// multiplicative implementations (valid for 0 <= k <= n within factorial range).
inline Rat factorial_binom(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    return Rat(eulerbt::factorial(n), eulerbt::factorial(k) * eulerbt::factorial(n - k));
}

// Coefficient n of (1+zt)^alpha * f(t), assembled term by term:
// sum_k C(alpha, n-k) * z^(n-k) * a_k.
inline MPoly lemma_coeff(const Series& f, const MPoly& z, const MPoly& alpha, int n) {
    MPoly acc;
    for (int k = 0; k <= n && k <= f.order(); ++k)
        acc = acc + eulerbt::gen_binomial(alpha, n - k) * z.pow(n - k) * f[k];
    return acc;
}

// Coefficient n of the generalized transformation, assembled term by term:
// sum_k C(alpha+n, n-k) * x^(n-k) * a_k.
inline MPoly gen_euler_coeff(const Series& f, const MPoly& x, const MPoly& alpha, int n) {
    MPoly acc;
    for (int k = 0; k <= n && k <= f.order(); ++k)
        acc = acc + eulerbt::gen_binomial(alpha + MPoly(n), n - k) * x.pow(n - k) * f[k];
    return acc;
}

}  // namespace testsupport
