// collapsar: spanning-tree collapsibility experiments on 3-sphere
// triangulations. Subcommands: estimate, exact, edge-stats, variance,
// anneal, catalog (verify/scan/export), convert.
//
// Exit codes: 0 success, 1 verification failure, 2 input/usage error,
// 3 resource refusal (e.g. spanning-tree count over the limit).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "collapsar/anneal.hpp"
#include "collapsar/catalog.hpp"
#include "collapsar/collapse.hpp"
#include "collapsar/complex.hpp"
#include "collapsar/estimate.hpp"
#include "collapsar/fixtures.hpp"
#include "collapsar/invariants.hpp"
#include "collapsar/spanning.hpp"
#include "collapsar/version.hpp"

namespace {

using namespace collapsar;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write output file: " + path);
    out << content;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

int default_workers() {
    if (const char* env = std::getenv("COLLAPSAR_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Reproducibility manifest written alongside every command's output.
struct ManifestWriter {
    std::string command_line;
    std::string command;
    std::string input_path;
    std::string input_checksum;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::vector<std::string> outputs;
    std::string path;  // where to write; empty = derive from first output
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void write() const {
        std::string p = path;
        if (p.empty()) p = outputs.empty() ? command + ".manifest.json" : outputs[0] + ".manifest.json";
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::ostringstream out;
        out << "{\"command\":\"" << command_line << "\",\"tool_version\":\"" << kVersion << "\"";
        if (!input_path.empty())
            out << ",\"input\":\"" << input_path << "\",\"input_checksum\":\"" << input_checksum
                << "\"";
        if (seed) out << ",\"seed\":" << *seed;
        if (samples) out << ",\"samples\":" << *samples;
        out << ",\"wall_time_s\":" << wall << ",\"outputs\":[";
        for (size_t i = 0; i < outputs.size(); ++i)
            out << (i ? "," : "") << "\"" << outputs[i] << "\"";
        out << "]}\n";
        write_file(p, out.str());
    }
};

Complex3 load_complex(const std::string& path, ManifestWriter& manifest) {
    const std::string text = read_file(path);
    manifest.input_path = path;
    manifest.input_checksum = hex64(fnv1a(text));
    return Complex3::parse(text);
}

void emit(const std::string& content, const std::string& out_path, ManifestWriter& manifest) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
        write_file(out_path, content);
        manifest.outputs.push_back(out_path);
    }
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collapsar: collapsibility statistics for 3-sphere triangulations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    ManifestWriter manifest;
    manifest.command_line = join_args(argc, argv);

    std::string input, out, manifest_path, certificate_out;
    std::uint64_t samples = 0, seed = 0, tree_limit = 1000000;
    int workers = default_workers();
    double epsilon = 0.005;
    int remove_facet = -1;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("--input", input, "facet-list file (text or JSON)")->required();
        cmd->add_option("--out", out, "output file (default: stdout)");
        cmd->add_option("--manifest", manifest_path, "manifest file path");
    };

    auto* est = app.add_subcommand("estimate", "Monte Carlo collapsing-probability estimate");
    add_common(est);
    est->add_option("--samples", samples, "number of trials")->required();
    est->add_option("--seed", seed, "base RNG seed");
    est->add_option("--workers", workers, "worker threads (default: COLLAPSAR_WORKERS or cores)");
    est->add_option("--epsilon", epsilon, "epsilon for the Chebyshev bound in the report");
    est->add_option("--remove-facet", remove_facet,
                    "fix the removed facet (Wilson root) for certificate replay");
    est->add_option("--certificate-out", certificate_out,
                    "write the removal log of trial 0 as JSON lines");

    auto* exa = app.add_subcommand("exact", "exact collapsing probability by tree enumeration");
    add_common(exa);
    exa->add_option("--tree-limit", tree_limit, "refuse enumeration above this tree count");

    auto* edg = app.add_subcommand("edge-stats", "per-edge free-edge frequencies (CSV)");
    add_common(edg);
    edg->add_option("--samples", samples, "number of sampled trees")->required();
    edg->add_option("--seed", seed, "base RNG seed");
    edg->add_option("--workers", workers, "worker threads");

    auto* var = app.add_subcommand("variance", "edge-variance report");
    add_common(var);

    std::string direction = "minimize";
    std::uint64_t max_moves = 10000, reheat = 500;
    double temp0 = 1.0, cooling = 0.99;
    std::string out_prefix = "anneal";
    auto* ann = app.add_subcommand("anneal", "bistellar-move annealing on the edge variance");
    ann->add_option("--input", input, "facet-list file (text or JSON)")->required();
    ann->add_option("--direction", direction, "minimize | maximize")
        ->check(CLI::IsMember({"minimize", "maximize"}));
    ann->add_option("--max-moves", max_moves, "proposal budget");
    ann->add_option("--initial-temperature", temp0, "starting temperature");
    ann->add_option("--cooling-factor", cooling, "geometric cooling per accepted move");
    ann->add_option("--reheat-period", reheat, "accepted moves between reheats");
    ann->add_option("--seed", seed, "RNG seed");
    ann->add_option("--out-prefix", out_prefix, "prefix for .facets/.moves.csv/.trace.csv");
    ann->add_option("--manifest", manifest_path, "manifest file path");

    auto* cat = app.add_subcommand("catalog", "obstruction catalog operations");
    cat->require_subcommand(1);
    auto* cat_verify = cat->add_subcommand("verify", "verify every catalog entry");
    cat_verify->add_option("--manifest", manifest_path, "manifest file path");
    int greedy_seeds = 1000;
    cat_verify->add_option("--greedy-seeds", greedy_seeds, "greedy orders per entry");
    auto* cat_scan = cat->add_subcommand("scan", "search a sphere for embedded obstructions");
    add_common(cat_scan);
    auto* cat_export = cat->add_subcommand("export", "write catalog entries as facet-list files");
    std::string out_dir = "catalog";
    cat_export->add_option("--out-dir", out_dir, "output directory");
    cat_export->add_option("--manifest", manifest_path, "manifest file path");

    std::string to_format = "json";
    auto* conv = app.add_subcommand("convert", "convert between text and JSON facet formats");
    add_common(conv);
    conv->add_option("--to", to_format, "target format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    manifest.path = manifest_path;

    try {
        if (est->parsed()) {
            manifest.command = "estimate";
            manifest.seed = seed;
            manifest.samples = samples;
            if (samples == 0) throw DomainError("sample count must be positive");
            const Complex3 c = load_complex(input, manifest);
            if (remove_facet >= c.facet_count())
                throw DomainError("--remove-facet index out of range");
            const Estimate e = estimate_collapsing_probability(c, samples, seed, workers);
            emit(e.to_json_text(epsilon), out, manifest);
            if (!certificate_out.empty()) {
                const DualGraph g = dual_graph(c);
                Rng rng(mix_seed(seed, 0));
                const SpanningTree t = remove_facet >= 0
                                           ? wilson_sample_rooted(g, remove_facet, rng)
                                           : wilson_sample(g, rng);
                const TwoComplex tc = collapse_along_tree(c, t);
                const CollapseOutcome oc = greedy_collapse(tc, rng);
                write_file(certificate_out, removal_log_to_json_lines(oc.removal_log));
                manifest.outputs.push_back(certificate_out);
            }
        } else if (exa->parsed()) {
            manifest.command = "exact";
            const Complex3 c = load_complex(input, manifest);
            const ExactProbability p = exact_collapsing_probability(c, tree_limit);
            std::ostringstream os;
            os << "{\"numerator\":" << p.numerator.get_str()
               << ",\"denominator\":" << p.denominator.get_str() << ",\"fraction\":\""
               << p.numerator.get_str() << "/" << p.denominator.get_str() << "\",\"decimal\":"
               << rational_to_decimal(p.exact(), 5) << "}";
            emit(os.str(), out, manifest);
        } else if (edg->parsed()) {
            manifest.command = "edge-stats";
            manifest.seed = seed;
            manifest.samples = samples;
            const Complex3 c = load_complex(input, manifest);
            const EdgeFreeStats stats = edge_free_frequencies(c, samples, seed, workers);
            emit(stats.to_csv(), out, manifest);
        } else if (var->parsed()) {
            manifest.command = "variance";
            const Complex3 c = load_complex(input, manifest);
            require_closed_connected(c);
            emit(edge_variance(c).to_json_text(), out, manifest);
        } else if (ann->parsed()) {
            manifest.command = "anneal";
            manifest.seed = seed;
            const Complex3 c = load_complex(input, manifest);
            AnnealConfig cfg;
            cfg.direction = direction == "maximize" ? AnnealConfig::Direction::Maximize
                                                    : AnnealConfig::Direction::Minimize;
            cfg.max_moves = max_moves;
            cfg.initial_temperature = temp0;
            cfg.cooling_factor = cooling;
            cfg.reheat_period = reheat;
            cfg.seed = seed;
            const AnnealResult r = anneal_edge_variance(c, cfg);
            write_file(out_prefix + ".facets", r.best_complex.to_text());
            write_file(out_prefix + ".moves.csv", r.move_log_csv());
            write_file(out_prefix + ".trace.csv", r.trace_csv());
            manifest.outputs = {out_prefix + ".facets", out_prefix + ".moves.csv",
                                out_prefix + ".trace.csv"};
            std::ostringstream os;
            os << "{\"best_variance\":{\"num\":" << r.best_variance.get_num()
               << ",\"den\":" << r.best_variance.get_den()
               << ",\"decimal\":" << rational_to_decimal(r.best_variance, 5)
               << "},\"accepted_moves\":" << r.move_log.size() << ",\"facets\":\"" << out_prefix
               << ".facets\"}";
            std::cout << os.str() << "\n";
        } else if (cat_verify->parsed()) {
            manifest.command = "catalog-verify";
            bool all_ok = true;
            for (const ObstructionEntry& entry : load_catalog()) {
                const ObstructionReport r = verify_obstruction(entry.to_complex(), greedy_seeds);
                std::cout << (r.pass() ? "[PASS] " : "[FAIL] ") << entry.name << " ("
                          << family_name(entry.family) << ")"
                          << (r.pass() ? "" : " " + r.detail) << "\n";
                all_ok = all_ok && r.pass();
            }
            manifest.write();
            return all_ok ? 0 : 1;
        } else if (cat_scan->parsed()) {
            manifest.command = "catalog-scan";
            const Complex3 c = load_complex(input, manifest);
            require_closed_connected(c);
            emit(scan_for_obstructions(c).to_json_text(), out, manifest);
        } else if (cat_export->parsed()) {
            manifest.command = "catalog-export";
            std::filesystem::create_directories(out_dir);
            for (const ObstructionEntry& entry : load_catalog()) {
                std::ostringstream os;
                for (const Tri& t : entry.triangles)
                    os << t[0] << " " << t[1] << " " << t[2] << "\n";
                const std::string p = out_dir + "/" + entry.name + ".facets";
                write_file(p, os.str());
                manifest.outputs.push_back(p);
            }
            const std::string p15 = out_dir + "/complicated-sphere-15.facets";
            write_file(p15, complicated_sphere_15().to_text());
            manifest.outputs.push_back(p15);
        } else if (conv->parsed()) {
            manifest.command = "convert";
            const Complex3 c = load_complex(input, manifest);
            emit(to_format == "json" ? c.to_json_text() : c.to_text(), out, manifest);
        }
        manifest.write();
        return 0;
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
