// Command-line front end over the C API. JSON on stdout (or --json-out),
// one summary line on stderr.
#include "hachow/hachow.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kUsage = 1, kMath = 2 };

int exit_for(hachow_status s) {
    switch (s) {
    case HACHOW_OK: return kOk;
    case HACHOW_E_INVALID_ARGUMENT:
    case HACHOW_E_PARSE: return kUsage;
    default: return kMath;
    }
}

struct Settings {
    std::optional<std::string> field, primes;
    std::optional<long> precision, height, denom_bound;
    std::optional<double> tol;
    std::optional<int> max_depth;
    std::optional<std::uint64_t> factor_bound;
    std::string json_out;
};

using Config = std::unique_ptr<hachow_config, decltype(&hachow_config_free)>;
using Cycle = std::unique_ptr<hachow_cycle, decltype(&hachow_cycle_free)>;

struct Failure {
    hachow_status status;
};

void check(hachow_status s) {
    if (s != HACHOW_OK) throw Failure{s};
}

Config configure(const Settings& st) {
    Config cfg(hachow_config_new(), hachow_config_free);
    if (!cfg) throw Failure{HACHOW_E_INTERNAL};
    if (const char* env = std::getenv("HACHOW_PRECISION"); env && !st.precision) {
        char* end = nullptr;
        long bits = std::strtol(env, &end, 10);
        if (end == env || *end) {
            std::cerr << "HACHOW_PRECISION is not an integer: " << env << "\n";
            throw Failure{HACHOW_E_INVALID_ARGUMENT};
        }
        check(hachow_config_set_precision(cfg.get(), bits));
    }
    if (st.field) check(hachow_config_set_field(cfg.get(), st.field->c_str()));
    if (st.precision) check(hachow_config_set_precision(cfg.get(), *st.precision));
    if (st.tol) check(hachow_config_set_tolerance(cfg.get(), *st.tol));
    if (st.max_depth) check(hachow_config_set_max_depth(cfg.get(), *st.max_depth));
    if (st.factor_bound) check(hachow_config_set_factor_bound(cfg.get(), *st.factor_bound));
    if (st.primes) check(hachow_config_set_primes(cfg.get(), st.primes->c_str()));
    if (st.height) check(hachow_config_set_height(cfg.get(), *st.height));
    if (st.denom_bound) check(hachow_config_set_denom_bound(cfg.get(), *st.denom_bound));
    return cfg;
}

Cycle parse_cycle(const hachow_config* cfg, const std::string& text) {
    hachow_cycle* z = nullptr;
    check(hachow_cycle_parse(cfg, text.c_str(), &z));
    return Cycle(z, hachow_cycle_free);
}

// Writes the report even when the call reports a failed check.
int publish(hachow_status s, char* json, const Settings& st, const std::string& label) {
    if (json) {
        if (st.json_out.empty()) {
            std::cout << json;
        } else {
            std::ofstream out(st.json_out);
            out << json;
            if (!out) {
                hachow_string_free(json);
                std::cerr << "cannot write " << st.json_out << "\n";
                return kUsage;
            }
        }
        hachow_string_free(json);
    }
    if (s == HACHOW_OK) {
        std::cerr << label << ": ok\n";
        return kOk;
    }
    throw Failure{s};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regulators, Steinberg decompositions and height pairings over imaginary quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Settings st;
    app.add_option("--field", st.field, "base field, e.g. Q(i) or Q(sqrt(-2))");
    app.add_option("--precision", st.precision, "working precision in bits (default 256, env HACHOW_PRECISION)");
    app.add_option("--tol", st.tol, "absolute quadrature tolerance (default 1e-6)");
    app.add_option("--max-depth", st.max_depth, "quadrature subdivision depth (default 28)");
    app.add_option("--factor-bound", st.factor_bound, "largest norm factored by trial division");
    app.add_option("--primes", st.primes, "comma-separated Gaussian primes for S (default: from the inputs)");
    app.add_option("--height", st.height, "height bound for harvested atoms (default 8)");
    app.add_option("--denom-bound", st.denom_bound, "denominator bound in the regulator reduction (default 144)");
    app.add_option("--json-out", st.json_out, "write the JSON report here instead of stdout");

    std::string cycle_text;
    auto* boundary = app.add_subcommand("boundary", "cubical boundary of a cycle");
    boundary->add_option("--cycle", cycle_text, "cycle literal")->required();

    bool numeric = false;
    auto* regulator = app.add_subcommand("regulator", "Goncharov regulator of a cycle over Spec F");
    regulator->add_option("--cycle", cycle_text, "cycle literal")->required();
    regulator->add_flag("--numeric", numeric, "integrate curves in box^3 instead of the closed form");

    std::string function = "bloch-wigner", z_text;
    int order = 2;
    auto* polylog = app.add_subcommand("polylog", "polylogarithm at the embedding sigma of a field element");
    polylog->add_option("--function", function, "li, bloch-wigner or trilog")
        ->check(CLI::IsMember({"li", "bloch-wigner", "trilog"}));
    polylog->add_option("--order", order, "order of li (1, 2 or 3)")->check(CLI::Range(1, 3));
    polylog->add_option("--z", z_text, "argument")->required();

    std::string alpha, beta;
    auto* decompose = app.add_subcommand("decompose", "Steinberg decomposition of alpha ^ beta");
    decompose->add_option("--alpha", alpha)->required();
    decompose->add_option("--beta", beta)->required();

    int p = 1, q = 1;
    bool standard = false;
    auto* pair = app.add_subcommand("pair", "height pairing of two cycles over Spec F");
    pair->add_option("--p", p, "codimension of the first cycle");
    pair->add_option("--q", q, "codimension of the second cycle");
    pair->add_option("--alpha", alpha);
    pair->add_option("--beta", beta);
    pair->add_flag("--standard-zi", standard, "pair the point i with Z_i (p = 1, q = 2)");

    int n = 0;
    auto* ranks = app.add_subcommand("ranks", "shapes of the Chow, Deligne and arithmetic groups of Spec F");
    ranks->add_option("--p", p)->required();
    ranks->add_option("--n", n)->required();

    std::string check_name, curve_text;
    auto* verify = app.add_subcommand("verify", "run a named consistency check");
    verify->add_option("check", check_name, "lemma19, boundary-squared, totaro-numeric or weight3")
        ->required()
        ->check(CLI::IsMember({"lemma19", "boundary-squared", "totaro-numeric", "weight3"}));
    verify->add_option("--curve", curve_text, "curve for lemma19");
    verify->add_option("--cycle", cycle_text, "cycle for boundary-squared");
    verify->add_option("--alpha", alpha, "alpha for totaro-numeric");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Config cfg = configure(st);
        char* json = nullptr;
        hachow_status s = HACHOW_OK;
        std::string label;
        if (*boundary) {
            Cycle z = parse_cycle(cfg.get(), cycle_text);
            s = hachow_report_boundary(cfg.get(), z.get(), &json);
            label = "boundary";
        } else if (*regulator) {
            Cycle z = parse_cycle(cfg.get(), cycle_text);
            s = hachow_report_regulator(cfg.get(), z.get(), numeric, &json);
            label = "regulator";
        } else if (*polylog) {
            s = hachow_report_polylog(cfg.get(), function.c_str(), order, z_text.c_str(), &json);
            label = "polylog";
        } else if (*decompose) {
            s = hachow_report_decompose(cfg.get(), alpha.c_str(), beta.c_str(), &json);
            label = "decompose";
        } else if (*pair) {
            if (standard) {
                p = 1, q = 2;
            } else if (p == 1 && q == 1 && (alpha.empty() || beta.empty())) {
                std::cerr << "pair --p 1 --q 1 needs --alpha and --beta\n";
                return kUsage;
            }
            s = hachow_report_pair(cfg.get(), p, q, alpha.c_str(), beta.c_str(), &json);
            label = "pair (" + std::to_string(p) + ", " + std::to_string(q) + ")";
        } else if (*ranks) {
            s = hachow_report_ranks(cfg.get(), p, n, &json);
            label = "ranks";
        } else if (*verify) {
            std::string arg = check_name == "lemma19" ? curve_text
                              : check_name == "boundary-squared" ? cycle_text
                                                                 : alpha;
            if (arg.empty() && check_name != "weight3") {
                std::cerr << "verify " << check_name << " needs its input (--curve, --cycle or --alpha)\n";
                return kUsage;
            }
            s = hachow_report_verify(cfg.get(), check_name.c_str(), arg.c_str(), &json);
            label = "verify " + check_name;
        }
        return publish(s, json, st, label);
    } catch (const Failure& f) {
        std::cerr << "error (" << hachow_status_name(f.status) << "): " << hachow_last_error() << "\n";
        return exit_for(f.status);
    }
}
