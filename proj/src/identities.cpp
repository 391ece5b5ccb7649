#include "eulerbt/identities.hpp"

#include <stdexcept>
#include <string>

#include "eulerbt/errors.hpp"
#include "eulerbt/series.hpp"
#include "eulerbt/transforms.hpp"

namespace eulerbt {

namespace {

struct IdentityNames {
    IdentityId id;
    std::string_view name;
    std::string_view alias;
};

constexpr std::array<IdentityNames, kIdentityCount> kNames = {{
    {IdentityId::Simons1, "eq1", "simons1"},
    {IdentityId::Munarini7, "eq7", "munarini7"},
    {IdentityId::Munarini10, "eq10", "munarini10"},
    {IdentityId::Ljunggren11, "eq11", "ljunggren11"},
    {IdentityId::Corollary13, "eq13", "corollary13"},
    {IdentityId::Corollary14, "eq14", "corollary14"},
    {IdentityId::Ljunggren15, "eq15", "ljunggren15"},
    {IdentityId::Ljunggren16, "eq16", "ljunggren16"},
    {IdentityId::Cross17, "eq17", "cross17"},
    {IdentityId::Munarini30, "eq30", "munarini30"},
}};

MPoly sign_pow(int e) { return MPoly(e % 2 == 0 ? 1 : -1); }

// C(n, k) for literal integer n, as a constant polynomial.
MPoly ibinom(int n, int k) { return gen_binomial(MPoly(n), k); }

MPoly q_poly(QMode q) { return q ? MPoly(Rat(*q)) : MPoly::var(VarId::Q); }

}  // namespace

const std::array<IdentityId, kIdentityCount>& all_identities() {
    static const std::array<IdentityId, kIdentityCount> ids = {
        IdentityId::Simons1,     IdentityId::Munarini7,   IdentityId::Munarini10,
        IdentityId::Ljunggren11, IdentityId::Corollary13, IdentityId::Corollary14,
        IdentityId::Ljunggren15, IdentityId::Ljunggren16, IdentityId::Cross17,
        IdentityId::Munarini30,
    };
    return ids;
}

std::string_view identity_name(IdentityId id) { return kNames[static_cast<int>(id)].name; }

std::string_view identity_alias(IdentityId id) { return kNames[static_cast<int>(id)].alias; }

std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (const auto& entry : kNames)
        if (entry.name == name || entry.alias == name) return entry.id;
    return std::nullopt;
}

bool identity_uses_q(IdentityId id) {
    switch (id) {
        case IdentityId::Ljunggren11:
        case IdentityId::Ljunggren15:
        case IdentityId::Ljunggren16:
        case IdentityId::Cross17:
            return true;
        default:
            return false;
    }
}

bool q_below_n(IdentityId id, int n, QMode q) {
    if (!q) return false;
    switch (id) {
        case IdentityId::Ljunggren11:
        case IdentityId::Ljunggren15:
        case IdentityId::Ljunggren16:
            return *q < n;
        default:
            return false;
    }
}

std::pair<MPoly, MPoly> identity_sides(IdentityId id, int n, QMode q) {
    if (n < 0) throw std::invalid_argument("identity_sides: n must be non-negative");

    const MPoly alpha = MPoly::var(VarId::Alpha);
    const MPoly beta = MPoly::var(VarId::Beta);
    const MPoly x = MPoly::var(VarId::X);
    const MPoly y = MPoly::var(VarId::Y);
    const MPoly z = MPoly::var(VarId::Z);

    MPoly lhs, rhs;
    switch (id) {
        case IdentityId::Simons1:
            // sum C(n,k) C(n+k,k) x^k  =  sum C(n,k) C(n+k,k) (-1)^(n-k) (x+1)^k
            for (int k = 0; k <= n; ++k) {
                MPoly both = ibinom(n, k) * ibinom(n + k, k);
                lhs += both * x.pow(k);
                rhs += both * sign_pow(n - k) * (x + MPoly(1)).pow(k);
            }
            break;
        case IdentityId::Munarini7:
            // sum C(n,k) C(alpha+k,k) x^k  =  sum C(alpha,n-k) C(alpha+k,k) (-1)^(n-k) (x+1)^k
            for (int k = 0; k <= n; ++k) {
                MPoly cak = gen_binomial(alpha + MPoly(k), k);
                lhs += ibinom(n, k) * cak * x.pow(k);
                rhs += gen_binomial(alpha, n - k) * cak * sign_pow(n - k) * (x + MPoly(1)).pow(k);
            }
            break;
        case IdentityId::Munarini10:
            // sum C(alpha,n-k) C(beta+k,k) x^k y^(n-k)
            //   = sum C(beta-alpha+n,n-k) C(beta+k,k) (-y)^(n-k) (x+y)^k
            for (int k = 0; k <= n; ++k) {
                MPoly cbk = gen_binomial(beta + MPoly(k), k);
                lhs += gen_binomial(alpha, n - k) * cbk * x.pow(k) * y.pow(n - k);
                rhs += gen_binomial(beta - alpha + MPoly(n), n - k) * cbk * (-y).pow(n - k) *
                       (x + y).pow(k);
            }
            break;
        case IdentityId::Ljunggren11: {
            // sum C(n,k) C(q,k) x^(n-k) y^k  =  sum C(n,k) C(q+k,k) (x-y)^(n-k) y^k
            MPoly qp = q_poly(q);
            for (int k = 0; k <= n; ++k) {
                MPoly cnk = ibinom(n, k);
                lhs += cnk * gen_binomial(qp, k) * x.pow(n - k) * y.pow(k);
                rhs += cnk * gen_binomial(qp + MPoly(k), k) * (x - y).pow(n - k) * y.pow(k);
            }
            break;
        }
        case IdentityId::Corollary13:
            // sum C(n,k) C(n+k,k) (-1)^(n-k) (x+1)^k  =  sum C(n,k)^2 x^(n-k) (x+1)^k
            for (int k = 0; k <= n; ++k) {
                MPoly cnk = ibinom(n, k);
                lhs += cnk * ibinom(n + k, k) * sign_pow(n - k) * (x + MPoly(1)).pow(k);
                rhs += cnk * cnk * x.pow(n - k) * (x + MPoly(1)).pow(k);
            }
            break;
        case IdentityId::Corollary14:
            // sum C(n,k) C(n+k,k) x^k  =  sum C(n,k)^2 x^(n-k) (x+1)^k
            for (int k = 0; k <= n; ++k) {
                MPoly cnk = ibinom(n, k);
                lhs += cnk * ibinom(n + k, k) * x.pow(k);
                rhs += cnk * cnk * x.pow(n - k) * (x + MPoly(1)).pow(k);
            }
            break;
        case IdentityId::Ljunggren15: {
            // sum C(n,k) C(q+k,k) x^k y^(n-k)  =  sum C(n,k) C(q,k) (x+y)^(n-k) x^k
            MPoly qp = q_poly(q);
            for (int k = 0; k <= n; ++k) {
                MPoly cnk = ibinom(n, k);
                lhs += cnk * gen_binomial(qp + MPoly(k), k) * x.pow(k) * y.pow(n - k);
                rhs += cnk * gen_binomial(qp, k) * (x + y).pow(n - k) * x.pow(k);
            }
            break;
        }
        case IdentityId::Ljunggren16: {
            // sum C(n,k) C(q+k,k) z^k  =  sum C(n,k) C(q,k) (z+1)^(n-k) z^k
            MPoly qp = q_poly(q);
            for (int k = 0; k <= n; ++k) {
                MPoly cnk = ibinom(n, k);
                lhs += cnk * gen_binomial(qp + MPoly(k), k) * z.pow(k);
                rhs += cnk * gen_binomial(qp, k) * (z + MPoly(1)).pow(n - k) * z.pow(k);
            }
            break;
        }
        case IdentityId::Cross17: {
            // sum C(n,k) C(q,k) (x+1)^(n-k) x^k
            //   = sum C(q,n-k) C(q+k,k) (-1)^(n-k) (x+1)^k   (any q)
            MPoly qp = q_poly(q);
            for (int k = 0; k <= n; ++k) {
                lhs += ibinom(n, k) * gen_binomial(qp, k) * (x + MPoly(1)).pow(n - k) * x.pow(k);
                rhs += gen_binomial(qp, n - k) * gen_binomial(qp + MPoly(k), k) * sign_pow(n - k) *
                       (x + MPoly(1)).pow(k);
            }
            break;
        }
        case IdentityId::Munarini30:
            // sum C(alpha,n-k) C(beta+k,k) x^k y^(n-k)
            //   = sum C(beta-alpha+n,n-k) C(alpha,k) x^(n-k) (x+y)^k
            for (int k = 0; k <= n; ++k) {
                lhs += gen_binomial(alpha, n - k) * gen_binomial(beta + MPoly(k), k) * x.pow(k) *
                       y.pow(n - k);
                rhs += gen_binomial(beta - alpha + MPoly(n), n - k) * gen_binomial(alpha, k) *
                       x.pow(n - k) * (x + y).pow(k);
            }
            break;
    }
    return {std::move(lhs), std::move(rhs)};
}

IdentityReport verify_identity(IdentityId id, int n_max, QMode q) {
    if (n_max < 0) throw std::invalid_argument("verify_identity: n_max must be non-negative");
    IdentityReport report;
    report.identity = id;
    report.n_min = 0;
    report.n_max = n_max;
    report.all_pass = true;
    report.results.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto [lhs, rhs] = identity_sides(id, n, q);
        IdentityResult r;
        r.n = n;
        r.q_warning = q_below_n(id, n, q);
        r.diff = lhs - rhs;
        r.pass = r.diff.is_zero();
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        report.all_pass = report.all_pass && r.pass;
        report.results.push_back(std::move(r));
    }
    return report;
}

MPoly ljunggren_oracle(int n, long long q) {
    if (n < 0) throw std::invalid_argument("ljunggren_oracle: n must be non-negative");
    if (q < n)
        throw QBelowN("ljunggren_oracle: requires q >= n, got q=" + std::to_string(q) +
                      ", n=" + std::to_string(n));
    // coefficient of t^n in (xt + y)^n (1+t)^q
    std::vector<MPoly> linear(static_cast<std::size_t>(n) + 1);
    linear[0] = MPoly::var(VarId::Y);
    if (n >= 1) linear[1] = MPoly::var(VarId::X);
    Series acc = Series::constant(MPoly(1), n);
    Series lin{std::move(linear)};
    for (int i = 0; i < n; ++i) acc = series_mul(acc, lin);
    Series full = series_mul(acc, binom_power_series(MPoly(1), MPoly(Rat(q)), n));
    return full[n];
}

std::array<MPoly, 3> derive_simons_from_ljunggren(int n) {
    if (n < 0) throw std::invalid_argument("derive_simons_from_ljunggren: n must be non-negative");
    const MPoly x = MPoly::var(VarId::X);
    MPoly thirteen, fourteen, shared;
    for (int k = 0; k <= n; ++k) {
        MPoly cnk = ibinom(n, k);
        MPoly cnkk = ibinom(n + k, k);
        thirteen += cnk * cnkk * sign_pow(n - k) * (x + MPoly(1)).pow(k);
        fourteen += cnk * cnkk * x.pow(k);
        shared += cnk * cnk * x.pow(n - k) * (x + MPoly(1)).pow(k);
    }
    return {std::move(thirteen), std::move(fourteen), std::move(shared)};
}

bool verify_munarini10_chain(int order) {
    const MPoly alpha = MPoly::var(VarId::Alpha);
    const MPoly beta = MPoly::var(VarId::Beta);
    const MPoly x = MPoly::var(VarId::X);
    const MPoly y = MPoly::var(VarId::Y);

    // 1/(1-(x+y)t)^(beta+1), transformed with parameters (-y, beta-alpha):
    // (1+yt)^-(beta-alpha+1) f(t/(1+yt))
    Series f = negbinom_series(x + y, beta, order);
    Series transformed = generalized_euler_transform(f, -y, beta - alpha);

    // independent product route: (1+yt)^alpha / (1-xt)^(beta+1)
    Series product = mul_binomial_power(negbinom_series(x, beta, order), y, alpha);

    return agree(transformed, product).equal;
}

bool verify_munarini30_chain(int order) {
    const MPoly alpha = MPoly::var(VarId::Alpha);
    const MPoly beta = MPoly::var(VarId::Beta);
    const MPoly x = MPoly::var(VarId::X);
    const MPoly y = MPoly::var(VarId::Y);

    // (1+(x+y)t)^alpha, transformed with parameters (x, beta-alpha):
    // (1-xt)^-(beta-alpha+1) f(t/(1-xt)); same target product as the eq10 chain
    Series f = binom_power_series(x + y, alpha, order);
    Series transformed = generalized_euler_transform(f, x, beta - alpha);

    Series product = mul_binomial_power(negbinom_series(x, beta, order), y, alpha);

    return agree(transformed, product).equal;
}

}  // namespace eulerbt
