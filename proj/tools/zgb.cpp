#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zgb/corpus.hpp"
#include "zgb/engine.hpp"
#include "zgb/io.hpp"
#include "zgb/precheck.hpp"
#include "zgb/verify.hpp"

namespace {

using namespace zgb;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // parse or verification failure
constexpr int kExitTimeout = 2;   // timeout or iteration cap

struct CommonOpts {
    std::string input;
    std::string strategy = "all";
    double timeout_sec = 0;
    long iteration_cap = 100000;
    bool no_gcd_augment = false;
    bool tail_reduce = false;
    bool precheck = false;
    std::string format = "text";
};

IdealSource load_input(const std::string& input) {
    if (input.rfind("corpus:", 0) == 0) return corpus_load(input.substr(7));
    std::ifstream in(input);
    if (!in) throw Error("cannot open input file: " + input);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ideal_file(ss.str());
}

StdConfig make_config(const CommonOpts& o) {
    StdConfig cfg;
    cfg.strategy = o.strategy == "just" ? Strategy::JUST : Strategy::ALL;
    cfg.iteration_cap = o.iteration_cap;
    cfg.gcd_augment = !o.no_gcd_augment;
    cfg.tail_reduce_output = o.tail_reduce;
    if (o.timeout_sec > 0)
        cfg.deadline = std::chrono::steady_clock::now() +
                       std::chrono::milliseconds(
                           static_cast<long>(o.timeout_sec * 1000));
    return cfg;
}

void print_basis(const IdealSource& src, const std::vector<Poly>& basis,
                 const StdStats& stats, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["name"] = src.name;
        j["ring"] = src.ctx->ring.to_string();
        j["order"] = ordering_code(src.ctx->ord.kind);
        j["basis"] = nlohmann::json::array();
        for (const auto& g : basis) j["basis"].push_back(to_string(g));
        j["stats"] = {{"pairs_created", stats.pairs_created},
                      {"pairs_selected", stats.pairs_selected},
                      {"zero_reductions", stats.zero_reductions},
                      {"max_coeff_bits", stats.max_coeff_bits},
                      {"wall_ms", stats.wall_ms}};
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "index,polynomial\n";
        for (size_t i = 0; i < basis.size(); ++i)
            std::cout << i << "," << to_string(basis[i]) << "\n";
    } else {
        for (const auto& g : basis) std::cout << to_string(g) << "\n";
    }
}

int run_std(const CommonOpts& o) {
    IdealSource src = load_input(o.input);
    StdConfig cfg = make_config(o);
    std::vector<Poly> gens = src.generators;
    if (o.precheck) {
        PrecheckResult pr = pre_integer_check(gens, cfg);
        gens = pr.generators;
        if (pr.certificate)
            std::cerr << "precheck: adjoined " << to_string(pr.certificate->target)
                      << "\n";
    }
    StdStats stats;
    std::vector<Poly> basis = std_basis_with_stats(gens, cfg, stats);
    print_basis(src, basis, stats, o.format);
    return kExitOk;
}

int run_check(const CommonOpts& o) {
    IdealSource src = load_input(o.input);
    ReduceOptions ropts;
    ropts.iteration_cap = o.iteration_cap;
    if (o.timeout_sec > 0)
        ropts.deadline = std::chrono::steady_clock::now() +
                         std::chrono::milliseconds(
                             static_cast<long>(o.timeout_sec * 1000));
    VerificationReport rep = is_strong_basis(src.generators, ropts);
    std::cout << (rep.passed ? "PASS" : "FAIL") << " (" << rep.checked_pair_count
              << " pair polynomials checked)\n";
    for (const auto& f : rep.failures)
        std::cout << "  surviving remainder for pair (" << f.i << "," << f.j
                  << "): " << to_string(f.remainder) << "\n";
    return rep.passed ? kExitOk : kExitFailure;
}

int run_precheck(const CommonOpts& o) {
    IdealSource src = load_input(o.input);
    StdConfig cfg = make_config(o);
    PrecheckResult pr = pre_integer_check(src.generators, cfg);
    if (!pr.certificate) {
        std::cout << "no constant or monomial found; generators unchanged\n";
        return kExitOk;
    }
    const Certificate& c = *pr.certificate;
    std::cout << "adjoined: " << to_string(c.target) << "\n";
    std::cout << "denominator_lcm: " << c.denominator_lcm.get_str() << "\n";
    std::cout << "combination:\n";
    for (size_t i = 0; i < c.cofactors.size(); ++i) {
        if (c.cofactors[i].is_zero()) continue;
        std::cout << "  (" << to_string(c.cofactors[i]) << ") * f" << i + 1
                  << "\n";
    }
    bool ok = c.verify(src.generators);
    std::cout << "verified: " << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitFailure;
}

struct BenchRow {
    std::string name, strategy, ring, wall_ms, basis_size, bits, verified;
};

BenchRow bench_one(const IdealSource& src, Strategy strat,
                   const CommonOpts& o) {
    BenchRow row;
    row.name = src.name;
    row.strategy = strat == Strategy::ALL ? "all" : "just";
    row.ring = src.ctx->ring.to_string();
    StdConfig cfg = make_config(o);
    cfg.strategy = strat;
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };
    try {
        std::vector<Poly> gens = src.generators;
        if (o.precheck) gens = pre_integer_check(gens, cfg).generators;
        StdStats stats;
        std::vector<Poly> basis = std_basis_with_stats(gens, cfg, stats);
        ReduceOptions ropts;
        ropts.iteration_cap = cfg.iteration_cap;
        ropts.deadline = cfg.deadline;
        bool ok = is_strong_basis(basis, ropts).passed;
        row.wall_ms = std::to_string(static_cast<long>(elapsed_ms()));
        row.basis_size = std::to_string(basis.size());
        row.bits = std::to_string(stats.max_coeff_bits);
        row.verified = ok ? "true" : "false";
    } catch (const TimedOut&) {
        row.wall_ms = std::to_string(static_cast<long>(elapsed_ms()));
        row.basis_size = row.bits = "";
        row.verified = "timeout";
    } catch (const CapExceeded&) {
        row.wall_ms = std::to_string(static_cast<long>(elapsed_ms()));
        row.basis_size = row.bits = "";
        row.verified = "cap";
    }
    return row;
}

int run_bench(const CommonOpts& o, const std::string& family) {
    std::vector<IdealSource> sources;
    if (!o.input.empty()) {
        sources.push_back(load_input(o.input));
    } else {
        for (const auto& e : corpus()) {
            if (family == "all" || e.name.rfind(family, 0) == 0)
                sources.push_back(corpus_load(e.name));
        }
    }
    std::vector<Strategy> strategies;
    if (o.strategy == "both")
        strategies = {Strategy::ALL, Strategy::JUST};
    else if (o.strategy == "just")
        strategies = {Strategy::JUST};
    else
        strategies = {Strategy::ALL};

    std::cout << "name,strategy,ring,wall_ms,basis_size,max_coeff_bits,"
                 "verified\n";
    for (const auto& src : sources) {
        for (Strategy s : strategies) {
            BenchRow r = bench_one(src, s, o);
            std::cout << r.name << "," << r.strategy << "," << r.ring << ","
                      << r.wall_ms << "," << r.basis_size << "," << r.bits
                      << "," << r.verified << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong standard bases over ZZ, ZZ/n and QQ"};
    app.require_subcommand(1);

    CommonOpts o;
    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", o.input,
                            "ideal file path or corpus:<name>")
                ->required();
        cmd->add_option("--strategy", o.strategy, "pair strategy")
            ->check(CLI::IsMember({"all", "just", "both"}));
        cmd->add_option("--timeout", o.timeout_sec, "per-run timeout (s)");
        cmd->add_option("--iteration-cap", o.iteration_cap,
                        "Mora reduction step cap");
        cmd->add_flag("--no-gcd-augment", o.no_gcd_augment,
                      "disable Mora gcd-augmentation (debug, local orderings)");
        cmd->add_flag("--tail-reduce", o.tail_reduce, "tail-reduce output");
        cmd->add_flag("--precheck", o.precheck,
                      "run preIntegerCheck before the standard basis");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };

    auto* c_std = app.add_subcommand("std", "compute a strong standard basis");
    add_common(c_std, true);
    auto* c_check = app.add_subcommand(
        "check", "verify that the listed polynomials form a strong basis");
    add_common(c_check, true);
    auto* c_pre =
        app.add_subcommand("precheck", "run preIntegerCheck and print the certificate");
    add_common(c_pre, true);
    auto* c_bench = app.add_subcommand("bench", "benchmark corpus entries (CSV)");
    std::string family = "all";
    c_bench->add_option("--corpus", family,
                        "entry-name prefix filter (A, B, f70, ...) or 'all'");
    add_common(c_bench, false);
    c_bench->add_option("--input", o.input, "single ideal file to bench");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_std->parsed()) return run_std(o);
        if (c_check->parsed()) return run_check(o);
        if (c_pre->parsed()) return run_precheck(o);
        if (c_bench->parsed()) return run_bench(o, family);
    } catch (const TimedOut& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
