// Command-line front end: formula evaluation, constructions, percolation
// closures, trace verification, brute-force oracles, certificates, and grid
// sweeps. Everything prints machine-readable JSON; exit code 0 means success,
// 1 a precondition or usage error, 2 a failed verification or internal
// assertion.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wsat/grid.hpp"
#include "wsat/json_io.hpp"

namespace {

struct RunConfig {
    std::string n_text, s_text, r_text;
    std::string mode = "colored";
    std::string strategy = "auto";
    std::string variant = "auto";
    std::string s_choice = "least";
    std::uint64_t seed = 2024;
    int edge_cap = 24;
    int block_cap = 8;
    std::string out_path;
    bool json = true;
};

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw wsat::InvalidInput("cannot open output file " + cfg.out_path);
    out << payload << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wsat::InvalidInput("cannot open input file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

wsat::CopyMode parse_mode(const std::string& text) {
    if (text == "colored") return wsat::CopyMode::colored;
    if (text == "uncolored") return wsat::CopyMode::uncolored;
    throw wsat::InvalidInput("mode must be 'colored' or 'uncolored'");
}

wsat::UncoloredStrategy parse_strategy(const std::string& text) {
    if (text == "auto") return wsat::UncoloredStrategy::automatic;
    if (text == "reduction") return wsat::UncoloredStrategy::reduction;
    if (text == "exhaustive") return wsat::UncoloredStrategy::exhaustive;
    throw wsat::InvalidInput("strategy must be 'auto', 'reduction' or 'exhaustive'");
}

struct FamilyArgs {
    wsat::ParamVec n;
    std::vector<wsat::ParamVec> S, R;
};

FamilyArgs parse_args(const RunConfig& cfg) {
    FamilyArgs fa;
    fa.n = wsat::parse_param_vec(cfg.n_text);
    fa.S = wsat::parse_family(cfg.s_text);
    fa.R = wsat::parse_family(cfg.r_text);
    wsat::validate_family(fa.n, fa.S, fa.R);
    return fa;
}

void add_family_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n_text, "host sizes, e.g. 4,4")->required();
    cmd->add_option("--S", cfg.s_text, "uniformity profiles, e.g. \"2,1\" or \"1,0;0,1\"")
        ->required();
    cmd->add_option("--R", cfg.r_text, "pattern sizes, same grammar as --S")->required();
    cmd->add_option("--out", cfg.out_path, "write the JSON document to a file");
}

int run_formula(const RunConfig& cfg) {
    const FamilyArgs fa = parse_args(cfg);
    const auto res = wsat::cwsat_formula(fa.n, fa.S, fa.R);
    emit(cfg, wsat::formula_to_json(fa.n, fa.S, fa.R, res));
    return 0;
}

int run_construct(const RunConfig& cfg) {
    const FamilyArgs fa = parse_args(cfg);
    const wsat::SChoice rule =
        cfg.s_choice == "greatest" ? wsat::SChoice::lex_greatest : wsat::SChoice::lex_least;
    std::optional<wsat::ConstructionResult> result;
    if (cfg.variant == "min_r") {
        result = wsat::construct_min_r(fa.n, fa.S, fa.R, rule);
    } else if (cfg.variant == "max_s") {
        result = wsat::construct_max_s(fa.n, fa.S, fa.R);
    } else if (cfg.variant == "auto") {
        if (wsat::componentwise_max_member(fa.S))
            result = wsat::construct_max_s(fa.n, fa.S, fa.R);
        else if (wsat::componentwise_min_member(fa.R))
            result = wsat::construct_min_r(fa.n, fa.S, fa.R, rule);
        else
            throw wsat::InvalidInput(
                "neither tightness hypothesis holds; no construction is known");
    } else {
        throw wsat::InvalidInput("variant must be 'auto', 'min_r' or 'max_s'");
    }
    const wsat::VertexUniverse u(fa.n);
    emit(cfg, wsat::construction_to_json(*result, u));
    return 0;
}

int run_closure(const RunConfig& cfg, const std::string& start_path) {
    const FamilyArgs fa = parse_args(cfg);
    const auto host = wsat::build_host(fa.n, fa.S);
    wsat::EdgeSet start;
    if (!start_path.empty()) start = wsat::edges_from_json(slurp(start_path), host.universe);
    const auto result = wsat::closure(host, fa.S, fa.R, start, parse_mode(cfg.mode),
                                      parse_strategy(cfg.strategy));
    emit(cfg, wsat::trace_to_json(result.trace, host.universe));
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& trace_path) {
    const FamilyArgs fa = parse_args(cfg);
    const auto host = wsat::build_host(fa.n, fa.S);
    const auto trace = wsat::trace_from_json(slurp(trace_path), host.universe);
    const auto verdict =
        wsat::verify_trace(host, fa.S, fa.R, trace.start, trace, parse_mode(cfg.mode));
    std::ostringstream body;
    body << "{\"failed_step\":" << verdict.failed_step << ",\"ok\":"
         << (verdict.ok ? "true" : "false") << ",\"reason\":\"" << verdict.reason << "\"}";
    emit(cfg, body.str());
    return verdict.ok ? 0 : 2;
}

int run_oracle(const RunConfig& cfg) {
    const FamilyArgs fa = parse_args(cfg);
    const auto host = wsat::build_host(fa.n, fa.S);
    const wsat::Count value =
        parse_mode(cfg.mode) == wsat::CopyMode::colored
            ? wsat::cwsat_bruteforce(host, fa.S, fa.R, cfg.edge_cap)
            : wsat::wsat_bruteforce_uncolored(host, fa.S, fa.R, cfg.edge_cap,
                                              parse_strategy(cfg.strategy));
    if (cfg.json) {
        std::ostringstream body;
        body << "{\"mode\":\"" << cfg.mode << "\",\"value\":" << value.get_str() << "}";
        emit(cfg, body.str());
    } else {
        emit(cfg, value.get_str());
    }
    return 0;
}

int run_certify(const RunConfig& cfg, const std::string& basis_out) {
    const FamilyArgs fa = parse_args(cfg);
    const auto report = wsat::certificate_report(fa.n, fa.S, fa.R, cfg.seed, cfg.block_cap);
    if (!basis_out.empty()) {
        const auto basis = wsat::colorful_generic_basis(fa.n, cfg.seed, cfg.block_cap);
        std::ofstream out(basis_out);
        if (!out) throw wsat::InvalidInput("cannot open output file " + basis_out);
        out << wsat::basis_to_json(basis) << "\n";
    }
    emit(cfg, wsat::certificate_to_json(report));
    return 0;
}

struct SweepConfig {
    wsat::GridSpec grid;
    bool with_oracle = false;
    bool with_certificate = false;
};

int run_sweep(const RunConfig& cfg, const SweepConfig& sweep) {
    std::ostringstream lines;
    for (const auto& point : wsat::enumerate_grid(sweep.grid)) {
        const auto res = wsat::cwsat_formula(point.n, point.S, point.R);
        std::string line = wsat::formula_to_json(point.n, point.S, point.R, res);
        line.pop_back(); // strip the closing brace to append sweep extras
        std::ostringstream extra;
        if (sweep.with_oracle && res.host_edges <= cfg.edge_cap) {
            const auto host = wsat::build_host(point.n, point.S);
            extra << ",\"oracle\":"
                  << wsat::cwsat_bruteforce(host, point.S, point.R, cfg.edge_cap).get_str();
        }
        if (sweep.with_certificate) {
            const auto report =
                wsat::certificate_report(point.n, point.S, point.R, cfg.seed, cfg.block_cap);
            extra << ",\"bound\":" << report.bound.get_str()
                  << ",\"dim_U\":" << report.dim_u;
        }
        lines << line << extra.str() << "}\n";
    }
    std::string text = lines.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    emit(cfg, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational laboratory for weak saturation of tensor products of cliques"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string start_path, trace_path, basis_out;
    SweepConfig sweep;

    auto* formula = app.add_subcommand("formula", "evaluate q and the c-wsat closed form");
    add_family_options(formula, cfg);

    auto* construct = app.add_subcommand("construct", "build an extremal witness and its order");
    add_family_options(construct, cfg);
    construct->add_option("--variant", cfg.variant, "auto | min_r | max_s");
    construct->add_option("--s-choice", cfg.s_choice, "least | greatest (min_r tie rule)");

    auto* closure = app.add_subcommand("closure", "percolation closure of a start set");
    add_family_options(closure, cfg);
    closure->add_option("--mode", cfg.mode, "colored | uncolored");
    closure->add_option("--strategy", cfg.strategy, "auto | reduction | exhaustive");
    closure->add_option("--start", start_path, "hypergraph JSON file with the start edges");

    auto* verify = app.add_subcommand("verify", "re-verify a trace document");
    add_family_options(verify, cfg);
    verify->add_option("--mode", cfg.mode, "colored | uncolored");
    verify->add_option("trace", trace_path, "trace JSON file")->required();

    auto* oracle = app.add_subcommand("oracle", "exact minimum by brute-force search");
    add_family_options(oracle, cfg);
    oracle->add_option("--mode", cfg.mode, "colored | uncolored");
    oracle->add_option("--strategy", cfg.strategy, "auto | reduction | exhaustive");
    oracle->add_option("--edge-cap", cfg.edge_cap, "largest |E(host)| the oracle accepts");
    cfg.json = false;
    oracle->add_flag("--json", cfg.json, "emit a JSON object instead of the bare number");

    auto* certify = app.add_subcommand("certify", "exterior-algebra lower-bound certificate");
    add_family_options(certify, cfg);
    certify->add_option("--seed", cfg.seed, "generic basis seed");
    certify->add_option("--block-cap", cfg.block_cap, "largest verifiable basis block");
    certify->add_option("--basis-out", basis_out, "also export the basis JSON to a file");

    auto* sweep_cmd = app.add_subcommand("sweep", "line-delimited JSON over a parameter grid");
    sweep_cmd->add_option("--d", sweep.grid.dims, "dimensions to include");
    sweep_cmd->add_option("--n-min", sweep.grid.n_min, "smallest host size per color");
    sweep_cmd->add_option("--n-max", sweep.grid.n_max, "largest host size per color");
    sweep_cmd->add_option("--entry-max", sweep.grid.entry_max, "largest family entry");
    sweep_cmd->add_option("--family-max", sweep.grid.family_max, "largest family size");
    sweep_cmd->add_flag("--with-oracle", sweep.with_oracle, "include brute-force values");
    sweep_cmd->add_flag("--with-certificate", sweep.with_certificate,
                        "include certificate bounds");
    sweep_cmd->add_option("--edge-cap", cfg.edge_cap, "oracle edge cap");
    sweep_cmd->add_option("--seed", cfg.seed, "certificate seed");
    sweep_cmd->add_option("--out", cfg.out_path, "write the lines to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (formula->parsed()) return run_formula(cfg);
        if (construct->parsed()) return run_construct(cfg);
        if (closure->parsed()) return run_closure(cfg, start_path);
        if (verify->parsed()) return run_verify(cfg, trace_path);
        if (oracle->parsed()) return run_oracle(cfg);
        if (certify->parsed()) return run_certify(cfg, basis_out);
        if (sweep_cmd->parsed()) return run_sweep(cfg, sweep);
    } catch (const wsat::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const wsat::InternalError& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
