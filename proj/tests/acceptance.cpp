// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Criteria 1 and 10 drive the command-line binary named by EULERBT_CLI.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerbt/accel.hpp"
#include "eulerbt/identities.hpp"
#include "eulerbt/legendre.hpp"
#include "eulerbt/transforms.hpp"
#include "support.hpp"

using namespace eulerbt;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* exe = std::getenv("EULERBT_CLI");
    if (!exe) throw std::runtime_error("EULERBT_CLI is not set");
    std::string cmd = std::string(exe) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn: " + cmd);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines_with_prefix(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

// ---- criteria ----

bool identity_suite_via_cli(std::string& detail) {
    CliResult r = run_cli("verify --all --n-max 10");
    int passes = count_lines_with_prefix(r.out, "PASS ");
    int fails = count_lines_with_prefix(r.out, "FAIL ");
    detail = std::to_string(passes) + " PASS lines, " + std::to_string(fails) +
             " FAIL lines, exit " + std::to_string(r.code);
    return r.code == 0 && passes == 110 && fails == 0;
}

bool euler_contract(std::string& detail) {
    testsupport::Rng rng(811001);
    for (int i = 0; i < 100; ++i) {
        Series f = testsupport::random_rat_series(rng, 32);
        Series g = euler_transform(f);
        std::vector<MPoly> bt = binomial_transform(f.coeffs());
        for (int m = 0; m <= 32; ++m) {
            if (g[m] != bt[static_cast<std::size_t>(m)]) {
                detail = "mismatch at series " + std::to_string(i) + ", m=" + std::to_string(m);
                return false;
            }
        }
    }
    detail = "100 series of order 32, every coefficient";
    return true;
}

bool generalized_contract(std::string& detail) {
    testsupport::Rng rng(811002);
    const MPoly x = MPoly::var(VarId::X), alpha = MPoly::var(VarId::Alpha);
    for (int i = 0; i < 20; ++i) {
        Series f = testsupport::random_rat_series(rng, 16);
        Series g = generalized_euler_transform(f, x, alpha);
        for (int n = 0; n <= 16; ++n) {
            if (g[n] != testsupport::gen_euler_coeff(f, x, alpha, n)) {
                detail = "mismatch at series " + std::to_string(i) + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "20 series of order 16, symbolic x and alpha";
    return true;
}

bool lemma_contract(std::string& detail) {
    testsupport::Rng rng(811003);
    const MPoly z = MPoly::var(VarId::Z), alpha = MPoly::var(VarId::Alpha);
    for (int i = 0; i < 50; ++i) {
        Series f = testsupport::random_rat_series(rng, 16);
        Series g = mul_binomial_power(f, z, alpha);
        for (int n = 0; n <= 16; ++n) {
            if (g[n] != testsupport::lemma_coeff(f, z, alpha, n)) {
                detail = "mismatch at series " + std::to_string(i) + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "50 series of order 16, symbolic z and alpha";
    return true;
}

bool proof_chains(std::string& detail) {
    if (!verify_munarini10_chain(8)) {
        detail = "eq10 chain failed at order 8";
        return false;
    }
    if (!verify_munarini30_chain(8)) {
        detail = "eq30 chain failed at order 8";
        return false;
    }
    const MPoly x = MPoly::var(VarId::X), alpha = MPoly::var(VarId::Alpha);
    Series g = euler_transform(negbinom_series(x, alpha, 16));
    for (int m = 0; m <= 16; ++m) {
        auto [lhs, rhs] = identity_sides(IdentityId::Munarini7, m);
        if (g[m] != rhs || g[m] != lhs) {
            detail = "eq7 chain mismatch at m=" + std::to_string(m);
            return false;
        }
    }
    detail = "eq10/eq30 chains at order 8, eq7 chain through order 16";
    return true;
}

bool oracle_grid(std::string& detail) {
    int checked = 0;
    for (int q = 0; q <= 8; ++q) {
        for (int n = 0; n <= q; ++n) {
            MPoly coeff = ljunggren_oracle(n, q);
            auto [lhs, rhs] = identity_sides(IdentityId::Ljunggren11, n, static_cast<long long>(q));
            if (coeff != lhs || coeff != rhs) {
                detail = "mismatch at n=" + std::to_string(n) + ", q=" + std::to_string(q);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (n, q) pairs with 0 <= n <= q <= 8";
    return true;
}

bool legendre_grid(std::string& detail) {
    for (int n = 0; n <= 15; ++n) {
        MPoly p = legendre_rodrigues(n);
        if (legendre_rep20(n) != p || legendre_rep21(n) != p || legendre_rep22(n) != p) {
            detail = "representation mismatch at n=" + std::to_string(n);
            return false;
        }
        if (p.eval({{VarId::X, Rat(1)}}) != Rat(1)) {
            detail = "P_n(1) != 1 at n=" + std::to_string(n);
            return false;
        }
        MPoly reflected = p.substitute(VarId::X, -MPoly::var(VarId::X));
        if (reflected != (n % 2 == 0 ? p : -p)) {
            detail = "parity failed at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "all representations, parity and P_n(1) for n <= 15";
    return true;
}

bool round_trip(std::string& detail) {
    testsupport::Rng rng(811004);
    std::uniform_int_distribution<int> len(1, 16);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> raw = testsupport::random_rat_seq(rng, len(rng));
        std::vector<MPoly> a(raw.begin(), raw.end());
        if (inverse_binomial_transform(binomial_transform(a)) != a) {
            detail = "round-trip failed at sequence " + std::to_string(i);
            return false;
        }
    }
    detail = "200 sequences of length <= 16";
    return true;
}

bool acceleration_bounds(std::string& detail) {
    std::vector<Rat> c;
    for (int k = 0; k <= 10; ++k) c.emplace_back(1, k + 1);
    AccelTable t = euler_accelerate(c, 10);
    Rat ref = Rat::parse("0.69314718055994530941723212145817656807550013436026");
    Rat plain_err = abs(t.plain_partials[10] - ref);
    Rat accel_err = abs(t.accel_partials[10] - ref);
    detail = "plain error " + plain_err.decimal(6) + " > 0.04, accelerated error " +
             accel_err.decimal(8) + " < 0.0001";
    return plain_err > Rat(4, 100) && accel_err < Rat(1, 10000);
}

bool deterministic_json(std::string& detail) {
    CliResult a = run_cli("verify --all --n-max 10 --json");
    CliResult b = run_cli("verify --all --n-max 10 --json");
    detail = "two runs, " + std::to_string(a.out.size()) + " bytes each";
    return a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"identity suite via CLI, n <= 10", identity_suite_via_cli},
        {"Euler transform == binomial transform", euler_contract},
        {"generalized transform == double sum", generalized_contract},
        {"binomial-power product == double sum", lemma_contract},
        {"generating-function proof chains", proof_chains},
        {"expansion oracle vs eq11 sides", oracle_grid},
        {"Legendre representations, parity, P_n(1)", legendre_grid},
        {"binomial transform round-trip", round_trip},
        {"alternating harmonic acceleration bounds", acceleration_bounds},
        {"byte-identical JSON verification runs", deterministic_json},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].label << " (" << detail << ")\n";
    }
    if (failures) {
        std::cout << failures << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
