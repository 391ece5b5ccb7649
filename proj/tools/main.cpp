// eulerbt command-line front end. Every command has deterministic text
// output and a JSON alternative behind --json (schema version 1).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerbt/accel.hpp"
#include "eulerbt/errors.hpp"
#include "eulerbt/identities.hpp"
#include "eulerbt/legendre.hpp"
#include "eulerbt/seqfile.hpp"
#include "eulerbt/series.hpp"
#include "eulerbt/transforms.hpp"

namespace {

using nlohmann::ordered_json;
using namespace eulerbt;

constexpr int kSchemaVersion = 1;

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Rat> load_sequence(const std::string& path) {
    if (path == "-") return parse_sequence(std::cin);
    return read_sequence_file(path);
}

std::vector<MPoly> to_polys(const std::vector<Rat>& values) {
    std::vector<MPoly> out;
    out.reserve(values.size());
    for (const Rat& v : values) out.emplace_back(v);
    return out;
}

Series to_series(const std::vector<Rat>& values) {
    if (values.empty()) throw EmptyCoefficients("input sequence is empty");
    return Series(to_polys(values));
}

std::string render_rat(const Rat& v, std::optional<int> digits) {
    return digits ? v.decimal(*digits) : v.str();
}

// A transform parameter is either one of the six variables or a rational.
std::pair<MPoly, std::string> parse_scalar_or_var(const std::string& text) {
    if (auto v = var_from_name(text)) return {MPoly::var(*v), std::string(var_name(*v))};
    Rat r = Rat::parse(text);
    return {MPoly(r), r.str()};
}

IdentityId parse_identity(const std::string& name) {
    auto id = identity_from_string(name);
    if (!id)
        throw CLI::ValidationError("--identity",
                                   "unknown identity '" + name +
                                       "' (use eq1, eq7, eq10, eq11, eq13..eq17, eq30 "
                                       "or their aliases like simons1, munarini10)");
    return *id;
}

struct VerifyOpts {
    std::string identity;
    bool all = false;
    int n_max = 10;
    std::optional<long long> q;
    bool json = false;
};

int run_verify(const VerifyOpts& opt) {
    if (!opt.all && opt.identity.empty())
        throw CLI::ValidationError("verify", "pass --identity <name> or --all");
    std::vector<IdentityId> ids;
    if (opt.all)
        ids.assign(all_identities().begin(), all_identities().end());
    else
        ids.push_back(parse_identity(opt.identity));

    QMode q = opt.q;
    bool all_pass = true;
    ordered_json results = ordered_json::array();
    for (IdentityId id : ids) {
        IdentityReport report = verify_identity(id, opt.n_max, q);
        all_pass = all_pass && report.all_pass;
        for (const IdentityResult& r : report.results) {
            if (opt.json) {
                ordered_json entry;
                entry["identity"] = std::string(identity_name(id));
                entry["n"] = r.n;
                entry["pass"] = r.pass;
                entry["q_below_n"] = r.q_warning;
                if (!r.pass) entry["diff"] = r.diff.str();
                results.push_back(std::move(entry));
            } else {
                if (r.q_warning)
                    std::cout << "WARN " << identity_name(id) << " n=" << r.n << " QBelowN (q="
                              << *opt.q << " < n=" << r.n << ")\n";
                if (r.pass)
                    std::cout << "PASS " << identity_name(id) << " n=" << r.n << "\n";
                else
                    std::cout << "FAIL " << identity_name(id) << " n=" << r.n
                              << " diff=" << r.diff.str() << "\n";
            }
        }
    }
    if (opt.json) {
        ordered_json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "verify";
        j["n_max"] = opt.n_max;
        if (opt.q)
            j["q"] = *opt.q;
        else
            j["q"] = "symbolic";
        j["results"] = std::move(results);
        j["all_pass"] = all_pass;
        emit_json(j);
    }
    return all_pass ? 0 : 1;
}

struct TransformOpts {
    std::string file;
    bool inverse = false;
    std::optional<int> digits;
    bool json = false;
};

int run_transform(const TransformOpts& opt) {
    std::vector<Rat> input = load_sequence(opt.file);
    if (input.empty()) throw std::invalid_argument("input sequence is empty");
    std::vector<MPoly> seq = to_polys(input);
    std::vector<MPoly> out = opt.inverse ? inverse_binomial_transform(seq) : binomial_transform(seq);

    std::vector<Rat> values;
    values.reserve(out.size());
    for (std::size_t m = 0; m < out.size(); ++m) values.push_back(out[m].eval({}));

    if (opt.json) {
        ordered_json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "transform";
        j["inverse"] = opt.inverse;
        ordered_json in_arr = ordered_json::array(), out_arr = ordered_json::array();
        for (const Rat& v : input) in_arr.push_back(render_rat(v, opt.digits));
        for (const Rat& v : values) out_arr.push_back(render_rat(v, opt.digits));
        j["input"] = std::move(in_arr);
        j["output"] = std::move(out_arr);
        emit_json(j);
    } else {
        for (const Rat& v : values) std::cout << render_rat(v, opt.digits) << "\n";
    }
    return 0;
}

struct EulerOpts {
    std::string file;
    std::string x = "1";
    std::string alpha = "0";
    bool generalized = false;
    bool json = false;
};

int run_euler(const EulerOpts& opt) {
    Series f = to_series(load_sequence(opt.file));
    Series out = f;
    std::string x_text, alpha_text;
    if (opt.generalized) {
        auto [x, x_str] = parse_scalar_or_var(opt.x);
        auto [alpha, alpha_str] = parse_scalar_or_var(opt.alpha);
        x_text = x_str;
        alpha_text = alpha_str;
        out = generalized_euler_transform(f, x, alpha);
    } else {
        out = euler_transform(f);
    }

    if (opt.json) {
        ordered_json j;
        j["schema"] = kSchemaVersion;
        j["command"] = opt.generalized ? "gen-euler" : "euler";
        if (opt.generalized) {
            j["x"] = x_text;
            j["alpha"] = alpha_text;
        }
        ordered_json coeffs = ordered_json::array();
        for (int m = 0; m <= out.order(); ++m) coeffs.push_back(out[m].str());
        j["coefficients"] = std::move(coeffs);
        emit_json(j);
    } else {
        std::cout << series_text(out);
    }
    return 0;
}

struct LegendreOpts {
    int n = 0;
    std::string rep = "all";
    bool json = false;
};

int run_legendre(const LegendreOpts& opt) {
    std::vector<std::pair<std::string, MPoly (*)(int)>> reps = {
        {"rodrigues", legendre_rodrigues},
        {"rep20", legendre_rep20},
        {"rep21", legendre_rep21},
        {"rep22", legendre_rep22},
    };
    if (opt.rep == "all") {
        bool agree = true;
        ordered_json rep_obj;
        MPoly first;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            MPoly p = reps[i].second(opt.n);
            if (i == 0)
                first = p;
            else
                agree = agree && p == first;
            if (opt.json)
                rep_obj[reps[i].first] = p.str();
            else
                std::cout << reps[i].first << ": " << p.str() << "\n";
        }
        if (opt.json) {
            ordered_json j;
            j["schema"] = kSchemaVersion;
            j["command"] = "legendre";
            j["n"] = opt.n;
            j["rep"] = "all";
            j["reps"] = std::move(rep_obj);
            j["agree"] = agree;
            emit_json(j);
        } else {
            std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        }
        return agree ? 0 : 1;
    }
    for (const auto& [name, fn] : reps) {
        if (name != opt.rep) continue;
        MPoly p = fn(opt.n);
        if (opt.json) {
            ordered_json j;
            j["schema"] = kSchemaVersion;
            j["command"] = "legendre";
            j["n"] = opt.n;
            j["rep"] = name;
            j["polynomial"] = p.str();
            emit_json(j);
        } else {
            std::cout << p.str() << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("--rep", "unknown representation '" + opt.rep +
                                            "' (rodrigues|rep20|rep21|rep22|all)");
}

struct AccelOpts {
    std::string file;
    std::optional<int> terms;
    std::string reference;
    std::optional<int> digits;
    bool json = false;
};

int run_accelerate(const AccelOpts& opt) {
    std::vector<Rat> c = load_sequence(opt.file);
    if (c.empty()) throw std::invalid_argument("input sequence is empty");
    int m = opt.terms ? *opt.terms : static_cast<int>(c.size()) - 1;
    AccelTable table = euler_accelerate(c, m);
    if (!opt.reference.empty()) table.reference = Rat::parse(opt.reference);

    auto rr = [&](const Rat& v) { return render_rat(v, opt.digits); };

    if (opt.json) {
        ordered_json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "accelerate";
        j["terms"] = m;
        auto arr = [&](const std::vector<Rat>& vs) {
            ordered_json a = ordered_json::array();
            for (const Rat& v : vs) a.push_back(rr(v));
            return a;
        };
        j["c"] = arr(table.c);
        j["diffs"] = arr(table.diffs);
        j["plain_partials"] = arr(table.plain_partials);
        j["accel_partials"] = arr(table.accel_partials);
        if (table.reference) {
            j["reference"] = rr(*table.reference);
            std::vector<Rat> perr, aerr;
            for (int k = 0; k <= m; ++k) {
                perr.push_back(abs(table.plain_partials[k] - *table.reference));
                aerr.push_back(abs(table.accel_partials[k] - *table.reference));
            }
            j["plain_errors"] = arr(perr);
            j["accel_errors"] = arr(aerr);
        }
        emit_json(j);
        return 0;
    }

    if (table.reference) {
        std::cout << "# j plain_error accel_error\n";
        for (int k = 0; k <= m; ++k)
            std::cout << k << " " << rr(abs(table.plain_partials[k] - *table.reference)) << " "
                      << rr(abs(table.accel_partials[k] - *table.reference)) << "\n";
    } else {
        std::cout << "# j plain accel\n";
        for (int k = 0; k <= m; ++k)
            std::cout << k << " " << rr(table.plain_partials[k]) << " "
                      << rr(table.accel_partials[k]) << "\n";
    }
    return 0;
}

struct ExpandOpts {
    std::string identity = "eq11";
    int n = 0;
    long long q = 0;
    bool json = false;
};

int run_expand(const ExpandOpts& opt) {
    IdentityId id = parse_identity(opt.identity);
    if (id != IdentityId::Ljunggren11)
        throw CLI::ValidationError("--identity",
                                   "expand supports only eq11 (the generating expression)");
    MPoly p = ljunggren_oracle(opt.n, opt.q);
    if (opt.json) {
        ordered_json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "expand";
        j["identity"] = std::string(identity_name(id));
        j["n"] = opt.n;
        j["q"] = opt.q;
        j["coefficient"] = p.str();
        emit_json(j);
    } else {
        std::cout << p.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binomial-transform, series-transformation and identity toolkit"};
    app.require_subcommand(1);

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "verify binomial identities exactly");
    CLI::Option* vid = verify->add_option("--identity", vo.identity, "identity name (eq1, simons1, ...)");
    CLI::Option* vall = verify->add_flag("--all", vo.all, "verify the whole suite");
    vid->excludes(vall);
    vall->excludes(vid);
    verify->add_option("--n-max", vo.n_max, "largest n to check")->default_val(10);
    verify->add_option("--q", vo.q, "integer q (default: symbolic q)");
    verify->add_flag("--json", vo.json, "JSON output");

    TransformOpts to;
    CLI::App* transform = app.add_subcommand("transform", "binomial transform of a sequence file");
    transform->add_option("file", to.file, "sequence file ('-' for stdin)")->required();
    transform->add_flag("--inverse", to.inverse, "apply the inverse transform");
    transform->add_option("--digits", to.digits, "decimal output with this many digits");
    transform->add_flag("--json", to.json, "JSON output");

    EulerOpts eo;
    CLI::App* euler = app.add_subcommand("euler", "Euler series transformation of a coefficient file");
    euler->add_option("file", eo.file, "coefficient file ('-' for stdin)")->required();
    euler->add_flag("--json", eo.json, "JSON output");

    EulerOpts geo;
    geo.generalized = true;
    geo.x = "x";
    geo.alpha = "alpha";
    CLI::App* gen_euler =
        app.add_subcommand("gen-euler", "generalized Euler transformation of a coefficient file");
    gen_euler->add_option("file", geo.file, "coefficient file ('-' for stdin)")->required();
    gen_euler->add_option("--x", geo.x, "substitution parameter: rational or variable name");
    gen_euler->add_option("--alpha", geo.alpha, "exponent parameter: rational or variable name");
    gen_euler->add_flag("--json", geo.json, "JSON output");

    LegendreOpts lo;
    CLI::App* legendre = app.add_subcommand("legendre", "Legendre polynomial representations");
    legendre->add_option("--n", lo.n, "degree")->required();
    legendre->add_option("--rep", lo.rep, "rodrigues|rep20|rep21|rep22|all")->default_val("all");
    legendre->add_flag("--json", lo.json, "JSON output");

    AccelOpts ao;
    CLI::App* accelerate =
        app.add_subcommand("accelerate", "Euler acceleration of an alternating series; the file "
                                         "holds the positive parts c_k of sum (-1)^k c_k");
    accelerate->add_option("file", ao.file, "sequence file of c_k terms ('-' for stdin)")->required();
    accelerate->add_option("--terms", ao.terms, "number of retained differences m");
    accelerate->add_option("--reference", ao.reference, "decimal reference value for error columns");
    accelerate->add_option("--digits", ao.digits, "decimal output with this many digits");
    accelerate->add_flag("--json", ao.json, "JSON output");

    ExpandOpts xo;
    CLI::App* expand = app.add_subcommand("expand", "expand the generating expression of eq11");
    expand->add_option("--identity", xo.identity, "identity name")->default_val("eq11");
    expand->add_option("--n", xo.n, "coefficient index")->required();
    expand->add_option("--q", xo.q, "integer exponent q >= n")->required();
    expand->add_flag("--json", xo.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(vo);
        if (transform->parsed()) return run_transform(to);
        if (euler->parsed()) return run_euler(eo);
        if (gen_euler->parsed()) return run_euler(geo);
        if (legendre->parsed()) return run_legendre(lo);
        if (accelerate->parsed()) return run_accelerate(ao);
        if (expand->parsed()) return run_expand(xo);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
