#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerbt/mpoly.hpp"

namespace eulerbt {

// The ten verified identities, named by their customary equation numbers.
enum class IdentityId : int {
    Simons1 = 0,
    Munarini7,
    Munarini10,
    Ljunggren11,
    Corollary13,
    Corollary14,
    Ljunggren15,
    Ljunggren16,
    Cross17,
    Munarini30,
};

inline constexpr int kIdentityCount = 10;

const std::array<IdentityId, kIdentityCount>& all_identities();

// Canonical short name ("eq1", "eq10", ...) and descriptive alias
// ("simons1", "munarini10", ...); parsing accepts either.
std::string_view identity_name(IdentityId id);
std::string_view identity_alias(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

// q handling: symbolic mode (default) uses the variable Q; integer mode
// substitutes a concrete value. nullopt means symbolic.
using QMode = std::optional<long long>;

bool identity_uses_q(IdentityId id);

// The q >= n hypothesis applies to the Ljunggren identities (eq11/eq15/eq16)
// in integer mode. Violations are reported as warnings, not refusals: the
// polynomial identity holds symbolically in q, hence for every integer value.
bool q_below_n(IdentityId id, int n, QMode q);

// Both sides of the identity at fixed n, as exact polynomials in its free
// variables. All binomial coefficients are built via gen_binomial.
std::pair<MPoly, MPoly> identity_sides(IdentityId id, int n, QMode q = std::nullopt);

struct IdentityResult {
    int n = 0;
    bool pass = false;
    bool q_warning = false;  // integer q below n for a Ljunggren identity
    MPoly lhs;
    MPoly rhs;
    MPoly diff;  // lhs - rhs; zero iff pass
};

struct IdentityReport {
    IdentityId identity{};
    int n_min = 0;
    int n_max = 0;
    std::vector<IdentityResult> results;
    bool all_pass = false;
};

// Evaluates both sides for every n in 0..n_max. These are theorems: a false
// result signals an implementation bug, and the report carries the offending
// difference polynomial.
IdentityReport verify_identity(IdentityId id, int n_max, QMode q = std::nullopt);

// Coefficient of t^n in (xt + y)^n (1+t)^q by direct expansion; an
// independent route that must equal both sides of eq11 at the same (n, q).
// Requires integers q >= n >= 0, else QBelowN.
MPoly ljunggren_oracle(int n, long long q);

// The eq13 left side, the eq14 left side, and their shared right side
// sum_k C(n,k)^2 x^(n-k) (x+1)^k. Mutual equality re-proves eq1.
std::array<MPoly, 3> derive_simons_from_ljunggren(int n);

// Reproduces the generating-function proof of eq10: the generalized Euler
// transform of 1/(1-(x+y)t)^(beta+1) with parameters (-y, beta-alpha) against
// the independently built product (1+yt)^alpha / (1-xt)^(beta+1),
// coefficient-wise through the given order.
bool verify_munarini10_chain(int order);

// Same pattern for eq30 with f = (1+(x+y)t)^alpha and parameters (x, beta-alpha);
// both routes must give (1+yt)^alpha / (1-xt)^(beta+1).
bool verify_munarini30_chain(int order);

}  // namespace eulerbt
