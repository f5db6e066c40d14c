// Command-line surface for colourful simplicial depth and octahedral
// systems: exact depth computation, parity checking, decompositions,
// bound verification and minimum search, all reproducible from one seed.
//
// Exit codes: 0 success / no violation, 1 mathematical violation found,
// 2 input error, 3 resource limit exceeded.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "octa/decompose.hpp"
#include "octa/edgespace.hpp"
#include "octa/errors.hpp"
#include "octa/geometry.hpp"
#include "octa/io.hpp"
#include "octa/octahedral.hpp"
#include "octa/rng.hpp"
#include "octa/span_search.hpp"
#include "octa/verify.hpp"

namespace {

using octa::io::json;

constexpr const char* kVersion = OCTA_VERSION;

struct Manifest {
    std::string command;
    std::string input_digest;
    std::uint64_t seed = 0;
    bool seeded = false;
    json outcome = json::object();
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit() const {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        json doc{{"command", command},
                 {"input_digest", input_digest},
                 {"tool_version", kVersion},
                 {"timing_ms",
                  std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
                 {"outcome", outcome}};
        if (seeded) doc["seed"] = seed;
        std::cerr << "manifest " << doc.dump() << "\n";
    }
};

std::string digest_of_file(const std::string& path) {
    return octa::io::fnv1a_hex(octa::io::read_file(path));
}

std::string digest_of_params(const json& params) { return octa::io::fnv1a_hex(params.dump()); }

void print_check_report(const octa::verify::CheckReport& report, bool as_json) {
    if (as_json) {
        json doc{{"mode", report.mode},
                 {"checked", report.checked},
                 {"details", report.details},
                 {"violations", report.violations}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "mode: " << report.mode << "\n";
    std::cout << "checked: " << report.checked << "\n";
    for (auto it = report.details.begin(); it != report.details.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
    std::cout << "violations: " << report.violations.size() << "\n";
    for (const json& v : report.violations) std::cout << "violation: " << v.dump() << "\n";
}

int cmd_depth(const std::string& config_path, const std::string& emit_path, int threads,
              bool as_json, Manifest& manifest) {
    manifest.input_digest = digest_of_file(config_path);
    const octa::ColourfulConfiguration config =
        octa::io::configuration_from_json(octa::io::load_document(config_path), config_path);
    const octa::DepthReport report = octa::induced_octahedral_system(config, threads);

    if (as_json) {
        std::cout << octa::io::depth_report_to_json(report, false).dump(2) << "\n";
    } else {
        std::cout << "depth: " << report.depth << "\n";
        std::cout << "boundary: " << report.boundary_count << "\n";
        std::cout << "degenerate: " << report.degenerate_count << "\n";
    }
    if (!emit_path.empty())
        octa::io::save_document(octa::io::system_to_json(report.induced_system), emit_path);

    manifest.outcome = {{"depth", report.depth},
                        {"boundary", report.boundary_count},
                        {"degenerate", report.degenerate_count}};
    return 0;
}

int cmd_check(const std::string& system_path, bool as_json, Manifest& manifest) {
    manifest.input_digest = digest_of_file(system_path);
    const octa::OctahedralSystem os =
        octa::io::system_from_json(octa::io::load_document(system_path), system_path);
    const auto violation = octa::parity_violation(os);

    json box = json::array();
    if (violation)
        for (const auto& [a, b] : violation->pairs) box.push_back(json::array({a, b}));

    if (as_json) {
        json doc{{"octahedral", !violation.has_value()}};
        if (violation) doc["violating_box"] = box;
        std::cout << doc.dump(2) << "\n";
    } else if (violation) {
        std::cout << "octahedral: no\n";
        std::cout << "violating box: " << violation->to_string() << "\n";
    } else {
        std::cout << "octahedral: yes\n";
    }

    manifest.outcome = {{"octahedral", !violation.has_value()}};
    if (violation) manifest.outcome["violating_box"] = box;
    return violation ? 1 : 0;
}

int cmd_decompose(const std::string& system_path, const std::string& mode, bool as_json,
                  Manifest& manifest) {
    manifest.input_digest = digest_of_file(system_path);
    const octa::OctahedralSystem os =
        octa::io::system_from_json(octa::io::load_document(system_path), system_path);

    if (const auto violation = octa::parity_violation(os)) {
        std::cout << "input is not octahedral\n";
        std::cout << "violating box: " << violation->to_string() << "\n";
        manifest.outcome = {{"octahedral", false}};
        return 1;
    }

    if (mode == "umbrella") {
        const std::vector<octa::Umbrella> decomposition = octa::umbrella_decomposition(os);
        const octa::OctahedralSystem recomposed =
            octa::recompose_umbrellas(decomposition, os.n(), os.class_sizes());
        if (!(recomposed == os))
            throw octa::internal_error("umbrella decomposition failed to recompose its input");

        if (as_json) {
            json umbrellas = json::array();
            for (const octa::Umbrella& u : decomposition)
                umbrellas.push_back(octa::io::umbrella_to_json(u));
            std::cout << json{{"umbrellas", std::move(umbrellas)}}.dump(2) << "\n";
        } else {
            std::cout << "umbrellas: " << decomposition.size() << "\n";
            for (const octa::Umbrella& u : decomposition) {
                std::cout << "umbrella: colour=" << u.colour << " transversal=(";
                for (std::size_t i = 0; i < u.transversal.size(); ++i)
                    std::cout << (i ? "," : "") << u.transversal[i];
                std::cout << ")\n";
            }
        }
        manifest.outcome = {{"umbrellas", decomposition.size()}};
        return 0;
    }

    const octa::SuitableDecomposition sd = octa::suitable_decomposition(os);
    std::string why;
    if (!octa::verify_suitable_decomposition(os, sd, &why))
        throw octa::internal_error("suitable decomposition self-check failed: " + why);

    if (as_json) {
        std::cout << octa::io::suitable_decomposition_to_json(sd).dump(2) << "\n";
    } else {
        std::cout << "i1: " << sd.i1 << "\n";
        std::cout << "umbrellas: " << sd.umbrellas.size() << "\n";
        std::cout << "w_size: " << sd.w.size() << "\n";
        for (std::size_t j = 0; j < sd.parts.size(); ++j)
            std::cout << "part " << j + 2 << ": " << sd.parts[j].size() << " edges\n";
    }
    manifest.outcome = {{"i1", sd.i1}, {"umbrellas", sd.umbrellas.size()}};
    return 0;
}

int finish_verify(const octa::verify::CheckReport& report, bool as_json, Manifest& manifest) {
    print_check_report(report, as_json);
    manifest.outcome = {{"mode", report.mode},
                        {"checked", report.checked},
                        {"violations", report.violations.size()}};
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colourful simplicial depth and octahedral systems"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // --seed/--threads/--json are valid after any subcommand

    std::uint64_t seed = octa::kDefaultSeed;
    int threads = 1;
    bool as_json = false;
    app.add_option("--seed", seed, "seed for all randomized subcommands");
    app.add_option("--threads", threads, "worker threads for trial and simplex loops")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", as_json, "structured JSON report on stdout");

    auto* depth_cmd = app.add_subcommand("depth", "colourful simplicial depth of a configuration");
    std::string config_path;
    std::string emit_path;
    depth_cmd->add_option("config", config_path, "configuration file")->required();
    depth_cmd->add_option("--emit-system", emit_path, "write the induced octahedral system here");

    auto* check_cmd = app.add_subcommand("check", "parity-check an octahedral system file");
    std::string system_path;
    check_cmd->add_option("system", system_path, "octahedral system file")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "decompose an octahedral system");
    std::string decompose_path;
    std::string decompose_mode = "umbrella";
    decompose_cmd->add_option("system", decompose_path, "octahedral system file")->required();
    decompose_cmd->add_option("--mode", decompose_mode, "suitable or umbrella")
        ->check(CLI::IsMember({"suitable", "umbrella"}));

    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string verify_mode;
    int opt_n = 0;
    int opt_d = 0;
    std::uint64_t trials = 0;
    std::uint64_t budget = std::uint64_t{1} << 24;
    std::uint64_t samples = 1'000'000;
    verify_cmd->add_option("--mode", verify_mode, "bound, span-equiv or depth-floor")
        ->required()
        ->check(CLI::IsMember({"bound", "span-equiv", "depth-floor"}));
    verify_cmd->add_option("--n", opt_n, "class count for combinatorial modes");
    verify_cmd->add_option("--d", opt_d, "dimension for depth-floor");
    verify_cmd->add_option("--trials", trials, "trial count (default: mode specific)");
    verify_cmd->add_option("--budget", budget, "exhaustive span walk budget");
    verify_cmd->add_option("--samples", samples, "sample count when the walk exceeds the budget");

    auto* search_cmd = app.add_subcommand("search-min", "search for minimum witnesses");
    int search_n = 0;
    int search_d = 0;
    std::uint64_t iterations = 10'000;
    std::uint64_t search_budget = std::uint64_t{1} << 24;
    std::uint64_t search_samples = 1'000'000;
    search_cmd->add_option("--n", search_n, "walk the umbrella span of shape (n,...,n)");
    search_cmd->add_option("--d", search_d, "greedy depth minimization in dimension d");
    search_cmd->add_option("--iterations", iterations, "proposal count for the depth search");
    search_cmd->add_option("--budget", search_budget, "exhaustive span walk budget");
    search_cmd->add_option("--samples", search_samples, "sample count beyond the walk budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help / --version
        app.exit(err);
        return 2;
    }

    Manifest manifest;
    int code = 0;
    try {
        if (depth_cmd->parsed()) {
            manifest.command = "depth";
            code = cmd_depth(config_path, emit_path, threads, as_json, manifest);
        } else if (check_cmd->parsed()) {
            manifest.command = "check";
            code = cmd_check(system_path, as_json, manifest);
        } else if (decompose_cmd->parsed()) {
            manifest.command = "decompose";
            code = cmd_decompose(decompose_path, decompose_mode, as_json, manifest);
        } else if (verify_cmd->parsed()) {
            manifest.command = "verify";
            manifest.seeded = true;
            manifest.seed = seed;
            octa::verify::CheckReport report;
            if (verify_mode == "bound") {
                if (opt_n < 2) throw octa::input_error("verify --mode bound needs --n >= 2");
                manifest.input_digest = digest_of_params(
                    {{"mode", "bound"}, {"n", opt_n}, {"budget", budget}, {"samples", samples}});
                report = octa::verify::run_bound_check(opt_n, budget, samples, seed, threads);
            } else if (verify_mode == "span-equiv") {
                if (opt_n < 2) throw octa::input_error("verify --mode span-equiv needs --n >= 2");
                if (trials == 0) trials = 2000;
                manifest.input_digest =
                    digest_of_params({{"mode", "span-equiv"}, {"n", opt_n}, {"trials", trials}});
                report = octa::verify::run_span_equivalence(opt_n, trials, seed);
            } else {
                if (opt_d < 1) throw octa::input_error("verify --mode depth-floor needs --d >= 1");
                if (trials == 0) trials = 500;
                manifest.input_digest =
                    digest_of_params({{"mode", "depth-floor"}, {"d", opt_d}, {"trials", trials}});
                report = octa::verify::run_depth_floor(opt_d, trials, seed, threads);
            }
            code = finish_verify(report, as_json, manifest);
        } else if (search_cmd->parsed()) {
            manifest.command = "search-min";
            manifest.seeded = true;
            manifest.seed = seed;
            if ((search_n >= 2) == (search_d >= 1))
                throw octa::input_error("search-min needs exactly one of --n or --d");
            if (search_n >= 2) {
                manifest.input_digest = digest_of_params({{"n", search_n},
                                                          {"budget", search_budget},
                                                          {"samples", search_samples}});
                const octa::MinimumReport report = octa::enumerate_minimums(
                    search_n, search_budget, search_samples, seed, threads);
                if (as_json) {
                    std::cout << octa::io::minimum_report_to_json(report).dump(2) << "\n";
                } else {
                    std::cout << "n: " << report.n << "\n";
                    std::cout << "rank: " << report.rank << "\n";
                    std::cout << "exhaustive: " << (report.exhaustive ? "yes" : "no") << "\n";
                    for (const auto& entry : report.per_k)
                        std::cout << "k=" << entry.k << " min=" << entry.min_size
                                  << " bound=" << octa::cardinality_lower_bound(report.n, entry.k)
                                  << (entry.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
                }
                manifest.outcome = {{"rank", report.rank}, {"exhaustive", report.exhaustive}};
            } else {
                manifest.input_digest =
                    digest_of_params({{"d", search_d}, {"iterations", iterations}});
                const octa::SearchResult result =
                    octa::minimize_depth_search(search_d, iterations, seed);
                if (as_json) {
                    json doc{{"depth", result.depth},
                             {"configuration", octa::io::configuration_to_json(result.configuration)}};
                    std::cout << doc.dump(2) << "\n";
                } else {
                    std::cout << "depth: " << result.depth << "\n";
                }
                manifest.outcome = {{"depth", result.depth}};
            }
        }
    } catch (const octa::resource_error& err) {
        std::cerr << "resource limit: " << err.what() << "\n";
        manifest.outcome = {{"error", err.what()}};
        manifest.emit();
        return 3;
    } catch (const octa::input_error& err) {
        std::cerr << "input error: " << err.what() << "\n";
        manifest.outcome = {{"error", err.what()}};
        manifest.emit();
        return 2;
    } catch (const octa::generation_error& err) {
        std::cerr << "generation error: " << err.what() << "\n";
        manifest.outcome = {{"error", err.what()}};
        manifest.emit();
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        manifest.outcome = {{"error", err.what()}};
        manifest.emit();
        return 2;
    }

    manifest.emit();
    return code;
}
