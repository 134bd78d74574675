// Command-line front-end: every library operation as a subcommand with
// machine-readable (JSON) or plain text output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "umarg/errors.hpp"
#include "umarg/kronecker.hpp"
#include "umarg/lr.hpp"
#include "umarg/partition.hpp"
#include "umarg/quantum.hpp"
#include "umarg/serialize.hpp"
#include "umarg/strip_type.hpp"

namespace {

using umarg::Json;
using umarg::Partition;

constexpr const char* kCacheEnvVar = "UMARG_CHARACTER_CACHE";

struct Config {
    std::string format = "json";
    double tolerance = umarg::kMarginTol;
    double rank_tol = umarg::kRankTolDefault;
    std::optional<int> budget;
    std::string cache;

    int kron_budget() const { return budget.value_or(umarg::kDefaultKronBudget); }
    int phi_budget() const { return budget.value_or(14); }
    bool json() const { return format == "json"; }
};

void emit(const Config& cfg, const Json& j, const std::string& text) {
    if (cfg.json())
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

std::string chain_text(const std::vector<Partition>& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += " > ";
        out += chain[i].to_string();
    }
    return out;
}

double margin_defect(const umarg::ComplexMatrix& sigma) {
    const std::size_t d = sigma.rows();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const umarg::Complex want =
                r == c ? umarg::Complex{1.0 / static_cast<double>(d), 0.0} : umarg::Complex{};
            worst = std::max(worst, std::abs(sigma(r, c) - want));
        }
    return worst;
}

Json verification_json(const Config& cfg, const umarg::DensityOperator& rho) {
    const double da = margin_defect(umarg::partial_trace_b(rho));   // A side, n x n
    const double db = margin_defect(umarg::partial_trace_a(rho));   // B side, m x m
    const std::vector<double> spec = umarg::spectrum(rho.matrix);
    Json v;
    v["margin_defect_a"] = da;
    v["margin_defect_b"] = db;
    v["margins_uniform"] = da < cfg.tolerance && db < cfg.tolerance;
    v["rank"] = umarg::numerical_rank(rho.matrix, cfg.rank_tol);
    v["spectrum"] = spec;
    return v;
}

std::string verification_text(const Json& v) {
    std::ostringstream out;
    out << "margin defect A: " << v["margin_defect_a"].get<double>() << "\n";
    out << "margin defect B: " << v["margin_defect_b"].get<double>() << "\n";
    out << "margins uniform: " << (v["margins_uniform"].get<bool>() ? "yes" : "no") << "\n";
    out << "rank: " << v["rank"].get<std::size_t>() << "\n";
    out << "spectrum:";
    for (const auto& x : v["spectrum"]) out << ' ' << x.get<double>();
    out << "\n";
    return out.str();
}

void emit_error(bool json_format, const std::string& kind, int code, const std::string& detail) {
    if (json_format) {
        Json e;
        e["error"] = kind;
        e["code"] = code;
        e["detail"] = detail;
        std::cerr << e.dump() << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << detail << "\n";
    }
}

int run(int argc, char** argv, bool prescan_json) {
    CLI::App app{"Maximal lexicographic spectra and ranks for uniform bipartite margins"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Margin/spectrum tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--rank-tol", cfg.rank_tol, "Relative eigenvalue cutoff for ranks")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget, "Oracle size budget (partition size)")
        ->check(CLI::Range(1, 1 << 20));
    app.add_option("--cache", cfg.cache,
                   "Character cache file (also via " + std::string(kCacheEnvVar) + ")");

    std::string arg_lam, arg_mu, arg_nu, family, state_path = "-", mode = "full";
    int arg_n = 0, arg_m = 0, arg_ell = 1, param = 0;
    std::int64_t arg_k = 0;

    auto* kron = app.add_subcommand("kron", "Kronecker coefficient g(lambda,mu;nu)");
    kron->add_option("lambda", arg_lam)->required();
    kron->add_option("mu", arg_mu)->required();
    kron->add_option("nu", arg_nu)->required();

    auto* phi = app.add_subcommand("phi", "All nu with g(lambda,mu;nu) > 0");
    phi->add_option("lambda", arg_lam)->required();
    phi->add_option("mu", arg_mu)->required();

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}");
    lr->add_option("nu", arg_nu)->required();
    lr->add_option("lambda", arg_lam)->required();
    lr->add_option("mu", arg_mu)->required();

    auto* strip = app.add_subcommand("striptype", "Strip-type derivation for rectangles");
    strip->add_option("lambda", arg_lam)->required();
    strip->add_option("mu", arg_mu)->required();

    auto* maxlex = app.add_subcommand("maxlex", "Lex-maximal spectrum for margins I_n/n, I_m/m");
    maxlex->add_option("n", arg_n)->required();
    maxlex->add_option("m", arg_m)->required();

    auto* cex = app.add_subcommand("counterexample", "Rank counterexample reports");
    cex->add_option("--family", family, "2xm or adjacent")
        ->required()
        ->check(CLI::IsMember({"2xm", "adjacent"}));
    cex->add_option("--param", param, "m for 2xm, n for adjacent")->required();

    auto* construct = app.add_subcommand("construct", "Build a state of prescribed rank");
    construct->add_option("n", arg_n)->required();
    construct->add_option("m", arg_m)->required();
    construct->add_option("k", arg_k)->required();
    construct->add_option("--mode", mode, "Construction form")
        ->check(CLI::IsMember({"full", "divisible"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check a serialized state");
    verify->add_option("state", state_path, "Path to state JSON, - for stdin");

    auto* slice = app.add_subcommand("slice", "Admissible rational spectra at stretching ell");
    slice->add_option("n", arg_n)->required();
    slice->add_option("m", arg_m)->required();
    slice->add_option("ell", arg_ell)->required();

    // Let global flags appear after the subcommand as well as before it.
    for (auto* sub : {kron, phi, lr, strip, maxlex, cex, construct, verify, slice})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(prescan_json, "UsageError", 2, e.what());
        return 2;
    }

    if (cfg.cache.empty())
        if (const char* env = std::getenv(kCacheEnvVar)) cfg.cache = env;
    if (!cfg.cache.empty() && std::filesystem::exists(cfg.cache))
        umarg::load_character_cache(cfg.cache);

    if (*kron) {
        const auto g = umarg::kronecker_coefficient(Partition::parse(arg_lam),
                                                    Partition::parse(arg_mu),
                                                    Partition::parse(arg_nu), cfg.kron_budget());
        emit(cfg, Json(g), std::to_string(g) + "\n");
    } else if (*phi) {
        const umarg::PhiSet set = umarg::phi_set(Partition::parse(arg_lam),
                                                 Partition::parse(arg_mu), cfg.phi_budget());
        std::ostringstream text;
        text << "lambda: " << set.lam.to_string() << "\n";
        text << "mu: " << set.mu.to_string() << "\n";
        text << "members (" << set.members.size() << "):\n";
        for (const auto& m : set.members) text << "  " << m.nu.to_string() << "  g=" << m.g << "\n";
        emit(cfg, umarg::phi_to_json(set), text.str());
    } else if (*lr) {
        const auto c = umarg::lr_coefficient(Partition::parse(arg_nu), Partition::parse(arg_lam),
                                             Partition::parse(arg_mu));
        emit(cfg, Json(c), std::to_string(c) + "\n");
    } else if (*strip) {
        const umarg::StripDerivation d =
            umarg::rect_strip_type(Partition::parse(arg_lam), Partition::parse(arg_mu));
        std::ostringstream text;
        text << "lam chain: " << chain_text(d.lam_chain) << "\n";
        text << "mu chain: " << chain_text(d.mu_chain) << "\n";
        text << "nu: " << d.nu.to_string() << "\n";
        emit(cfg, umarg::strip_to_json(d), text.str());
    } else if (*maxlex) {
        const umarg::MaxLexResult r = umarg::max_lex_spectrum(arg_n, arg_m);
        std::ostringstream text;
        text << "spectrum: " << r.spectrum.to_string() << "\n";
        text << "nu: " << r.nu.to_string() << "\n";
        text << "k: " << r.k << "\n";
        text << "rank: " << r.rank << "\n";
        emit(cfg, umarg::maxlex_to_json(r), text.str());
    } else if (*cex) {
        const umarg::CounterexampleReport rep =
            family == "2xm" ? umarg::counterexample_two_by_m(param, cfg.kron_budget())
                            : umarg::counterexample_n_nplus1(param, cfg.kron_budget());
        std::ostringstream text;
        text << "family: " << rep.family << "\n";
        text << "n: " << rep.n << "  m: " << rep.m << "\n";
        text << "max-lex nu: " << rep.maxlex_nu.to_string() << "  rank "
             << rep.maxlex_rank << "\n";
        text << "witness gamma: " << rep.witness_gamma.to_string() << "  rank "
             << rep.witness_gamma.length() << "\n";
        if (rep.witness_g)
            text << "witness g: " << *rep.witness_g << "\n";
        else
            text << "witness g: not computed (budget)\n";
        text << "minimal rank bound: " << rep.min_rank_bound << "\n";
        text << "refutes conjecture: " << (rep.refutes_conjecture ? "yes" : "no") << "\n";
        emit(cfg, umarg::counterexample_to_json(rep), text.str());
    } else if (*construct) {
        const umarg::WeightMode wm =
            mode == "full" ? umarg::WeightMode::Full : umarg::WeightMode::Divisible;
        const umarg::WeightMatrix w = umarg::weight_for_rank(arg_n, arg_m, arg_k, wm);
        const umarg::DensityOperator rho = wm == umarg::WeightMode::Full
                                               ? umarg::construct_full(arg_n, arg_m, w)
                                               : umarg::construct_divisible(arg_n, arg_m, w);
        Json out;
        out["state"] = umarg::density_to_json(rho);
        out["mode"] = mode;
        out["k"] = arg_k;
        out["weights"] = umarg::weight_to_json(w);
        out["verification"] = verification_json(cfg, rho);
        std::ostringstream text;
        text << "n: " << arg_n << "  m: " << arg_m << "  k: " << arg_k << "  mode: " << mode
             << "\n";
        text << verification_text(out["verification"]);
        emit(cfg, out, text.str());
    } else if (*verify) {
        Json parsed;
        try {
            if (state_path == "-") {
                parsed = Json::parse(std::cin);
            } else {
                std::ifstream in(state_path);
                if (!in) throw umarg::ParseError("cannot open " + state_path);
                parsed = Json::parse(in);
            }
        } catch (const Json::parse_error& e) {
            throw umarg::ParseError(std::string("invalid JSON: ") + e.what());
        }
        // Accept either a bare state or a construct-style wrapper.
        const umarg::DensityOperator rho =
            umarg::density_from_json(parsed.contains("state") ? parsed["state"] : parsed);
        umarg::validate_density(rho);
        Json out;
        out["dim_a"] = rho.dim_a;
        out["dim_b"] = rho.dim_b;
        out["valid_density"] = true;
        Json v = verification_json(cfg, rho);
        for (auto& [key, val] : v.items()) out[key] = val;
        const umarg::ExtremalityResult ex = umarg::extremality_check(rho, cfg.rank_tol);
        Json exj;
        exj["is_extreme"] = ex.is_extreme;
        exj["nullity"] = ex.nullity;
        exj["reliable"] = ex.reliable;
        out["extremality"] = exj;
        if (!ex.reliable)
            std::cerr << "warning: eigen-gap " << ex.eigen_gap
                      << " at the rank cutoff; extremality verdict unreliable\n";
        std::ostringstream text;
        text << "dims: " << rho.dim_a << " x " << rho.dim_b << "\n";
        text << "valid density: yes\n";
        text << verification_text(v);
        text << "extreme: " << (ex.is_extreme ? "yes" : "no") << "  (nullity " << ex.nullity
             << (ex.reliable ? "" : ", unreliable") << ")\n";
        emit(cfg, out, text.str());
    } else if (*slice) {
        const auto spectra =
            umarg::rational_spectra_slice(arg_n, arg_m, arg_ell, cfg.phi_budget());
        Json out;
        out["n"] = arg_n;
        out["m"] = arg_m;
        out["ell"] = arg_ell;
        out["k"] = std::lcm(static_cast<std::int64_t>(arg_n), static_cast<std::int64_t>(arg_m));
        Json arr = Json::array();
        std::ostringstream text;
        text << "spectra (" << spectra.size() << "):\n";
        for (const auto& s : spectra) {
            arr.push_back(umarg::spectrum_to_json(s));
            text << "  " << s.to_string() << "\n";
        }
        out["spectra"] = std::move(arr);
        emit(cfg, out, text.str());
    }

    if (!cfg.cache.empty()) umarg::save_character_cache(cfg.cache);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    // Pre-scan for the format flag so even usage errors honor it.
    bool json_format = true;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--format" && i + 1 < argc) json_format = std::string(argv[i + 1]) == "json";
        if (a == "--format=text") json_format = false;
    }
    try {
        return run(argc, argv, json_format);
    } catch (const umarg::Error& e) {
        emit_error(json_format, e.kind(), e.exit_code(), e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        emit_error(json_format, "InternalError", 1, e.what());
        return 1;
    }
}
