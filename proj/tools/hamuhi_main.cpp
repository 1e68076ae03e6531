#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamuhi/detection.hpp"
#include "hamuhi/generators.hpp"
#include "hamuhi/graph.hpp"
#include "hamuhi/metrics.hpp"
#include "hamuhi/partition_io.hpp"
#include "hamuhi/similarity.hpp"

namespace {

using namespace hamuhi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

CommunityDefinition parse_definition(const std::string& name) {
    if (name == "weak") return CommunityDefinition::kWeak;
    if (name == "weakest") return CommunityDefinition::kWeakest;
    throw CLI::ValidationError("--def must be 'weak' or 'weakest'");
}

SimilarityVariant parse_variant(const std::string& name) {
    if (name == "modified") return SimilarityVariant::kModified;
    if (name == "original") return SimilarityVariant::kOriginal;
    throw CLI::ValidationError("--similarity must be 'modified' or 'original'");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

// partition.tsv -> partition.level2.tsv
std::string level_path(const std::string& base, int level) {
    std::size_t dot = base.find_last_of('.');
    std::size_t slash = base.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return base + ".level" + std::to_string(level);
    return base.substr(0, dot) + ".level" + std::to_string(level) + base.substr(dot);
}

nlohmann::json graph_summary(const LoadResult& loaded) {
    return {{"vertices", loaded.graph.vertex_count()},
            {"edges", loaded.graph.edge_count()},
            {"self_loops_dropped", loaded.self_loops_dropped},
            {"duplicates_dropped", loaded.duplicate_edges_dropped}};
}

nlohmann::json report_json(const RunReport& report) {
    return nlohmann::json::parse(to_json_string(report));
}

RunReport make_report(const Graph& g, const Partition& p, const Partition* truth) {
    RunReport report;
    report.community_count = p.community_count();
    report.modularity = g.edge_count() > 0 ? modularity(g, p) : 0.0;
    if (truth) report.nmi = nmi(p, *truth);
    report.size_histogram = size_distribution(p);
    return report;
}

struct DetectConfig {
    std::string input;
    std::uint32_t min_size = 2;
    std::string definition = "weakest";
    std::string similarity = "modified";
    int levels = 1;
    std::string truth_path;
    std::string partition_out = "partition.tsv";
    std::string report_out = "report.json";
    std::string sims_out;
};

void warn_extra_columns(const LoadResult& loaded) {
    if (loaded.extra_column_lines > 0)
        std::cerr << "warning: " << loaded.extra_column_lines
                  << " line(s) had a third column; input treated as unweighted\n";
}

int cmd_detect(const DetectConfig& cfg) {
    auto start = Clock::now();
    LoadResult loaded = load_edge_list_file(cfg.input);
    warn_extra_columns(loaded);
    const Graph& g = loaded.graph;
    CommunityDefinition def = parse_definition(cfg.definition);
    SimilarityVariant variant = parse_variant(cfg.similarity);

    std::optional<Partition> truth;
    if (!cfg.truth_path.empty()) truth = read_partition_tsv_file(g, cfg.truth_path);

    if (!cfg.sims_out.empty()) {
        auto out = open_out(cfg.sims_out);
        write_similarity_tsv(g, compute_similarities(g, variant), out);
    }

    std::vector<HamuhiStats> stats;
    std::vector<Partition> levels =
        run_hierarchy(g, def, cfg.levels, variant, cfg.min_size, &stats);

    nlohmann::json report;
    report["input"] = cfg.input;
    report["graph"] = graph_summary(loaded);
    report["k"] = cfg.min_size;
    report["definition"] = cfg.definition;
    report["similarity"] = cfg.similarity;
    report["levels_requested"] = cfg.levels;
    report["levels"] = nlohmann::json::array();

    for (std::size_t i = 0; i < levels.size(); ++i) {
        std::string path = cfg.levels == 1 ? cfg.partition_out
                                           : level_path(cfg.partition_out, static_cast<int>(i) + 1);
        auto out = open_out(path);
        write_partition_tsv(g, levels[i], out);

        RunReport run = make_report(g, levels[i], truth ? &*truth : nullptr);
        run.detection_iterations = stats[i].detection.iterations;
        run.sizing_iterations = stats[i].sizing.iterations;
        nlohmann::json entry = report_json(run);
        entry.erase("wall_time_seconds");
        entry["level"] = i + 1;
        entry["partition_file"] = path;
        report["levels"].push_back(entry);
    }
    report["wall_time_seconds"] = seconds_since(start);

    auto out = open_out(cfg.report_out);
    out << report.dump(2) << '\n';
    std::cout << report.dump(2) << '\n';
    return 0;
}

struct EvalConfig {
    std::string graph_path;
    std::string partition_path;
    std::string truth_path;
    std::string report_out;
    std::string histogram_out;
};

int cmd_eval(const EvalConfig& cfg) {
    auto start = Clock::now();
    LoadResult loaded = load_edge_list_file(cfg.graph_path);
    warn_extra_columns(loaded);
    const Graph& g = loaded.graph;
    Partition p = read_partition_tsv_file(g, cfg.partition_path);
    std::optional<Partition> truth;
    if (!cfg.truth_path.empty()) truth = read_partition_tsv_file(g, cfg.truth_path);

    RunReport run = make_report(g, p, truth ? &*truth : nullptr);
    run.wall_time_seconds = seconds_since(start);
    nlohmann::json report = report_json(run);
    report["graph"] = graph_summary(loaded);

    std::cout << report.dump(2) << '\n';
    if (!cfg.report_out.empty()) {
        auto out = open_out(cfg.report_out);
        out << report.dump(2) << '\n';
    }
    if (!cfg.histogram_out.empty()) {
        auto out = open_out(cfg.histogram_out);
        write_size_histogram_tsv(run.size_histogram, out);
    }
    return 0;
}

void write_generated(const LabeledGraph& lg, const std::string& out_path,
                     const std::vector<std::string>& truth_paths) {
    auto out = open_out(out_path);
    write_edge_list(lg.graph, out);
    for (std::size_t i = 0; i < lg.truths.size() && i < truth_paths.size(); ++i) {
        auto tout = open_out(truth_paths[i]);
        write_truth_tsv(lg.graph, lg.truths[i], tout);
    }
    std::cout << lg.meta << ": " << lg.graph.vertex_count() << " vertices, "
              << lg.graph.edge_count() << " edges -> " << out_path << '\n';
}

struct BenchConfig {
    std::string suite = "er";
    std::vector<std::uint64_t> edge_targets;
    std::vector<std::uint64_t> clique_counts;
    std::uint32_t clique_size = 3;
    double mean_degree = 20.0;
    std::uint64_t seed = 1;
    std::string definition = "weak";
    int repeats = 3;
    std::string out_path;
};

int cmd_bench(const BenchConfig& cfg) {
    CommunityDefinition def = parse_definition(cfg.definition);

    std::vector<LabeledGraph> ladder;
    if (cfg.suite == "er") {
        for (std::uint64_t target : cfg.edge_targets) {
            auto n = static_cast<std::uint32_t>(2.0 * static_cast<double>(target) /
                                                cfg.mean_degree);
            double p = cfg.mean_degree / static_cast<double>(n - 1);
            ladder.push_back(erdos_renyi(n, p, cfg.seed));
        }
    } else if (cfg.suite == "ring") {
        for (std::uint64_t cliques : cfg.clique_counts)
            ladder.push_back(ring_of_cliques(static_cast<std::uint32_t>(cliques),
                                             cfg.clique_size));
    } else {
        throw CLI::ValidationError("--suite must be 'er' or 'ring'");
    }

    std::ostringstream csv;
    csv << "n,m,iterations,seconds\n";
    for (const LabeledGraph& lg : ladder) {
        EdgeSimilarityTable sims = compute_similarities(lg.graph, SimilarityVariant::kModified);
        std::vector<double> times;
        MergePhaseStats stats;
        for (int r = 0; r < std::max(1, cfg.repeats); ++r) {
            auto start = Clock::now();
            community_detection(lg.graph, sims, def, &stats);
            times.push_back(seconds_since(start));
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        csv << lg.graph.vertex_count() << ',' << lg.graph.edge_count() << ','
            << stats.iterations << ',' << median << '\n';
    }

    if (cfg.out_path.empty()) {
        std::cout << csv.str();
    } else {
        auto out = open_out(cfg.out_path);
        out << csv.str();
        std::cout << "wrote " << cfg.out_path << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HAMUHI community detection toolkit"};
    app.require_subcommand(1);

    DetectConfig detect;
    auto* cmd_d = app.add_subcommand("detect", "Detect communities in an edge-list graph");
    cmd_d->add_option("-i,--input", detect.input, "edge-list file")->required();
    cmd_d->add_option("-k,--k", detect.min_size, "minimum community size")
        ->check(CLI::Range(1u, std::numeric_limits<std::uint32_t>::max()));
    cmd_d->add_option("--def,--definition", detect.definition,
                      "community definition: weak|weakest");
    cmd_d->add_option("--similarity", detect.similarity, "similarity variant: modified|original");
    cmd_d->add_option("--levels", detect.levels, "hierarchy depth")->check(CLI::PositiveNumber);
    cmd_d->add_option("--truth", detect.truth_path, "ground-truth TSV for NMI");
    cmd_d->add_option("-o,--partition-out", detect.partition_out, "partition TSV path");
    cmd_d->add_option("--report-out", detect.report_out, "report JSON path");
    cmd_d->add_option("--sims-out", detect.sims_out, "edge similarity TSV dump");
    cmd_d->callback([&detect] { cmd_detect(detect); });

    EvalConfig eval;
    auto* cmd_e = app.add_subcommand("eval", "Evaluate a partition against a graph");
    cmd_e->add_option("-g,--graph", eval.graph_path, "edge-list file")->required();
    cmd_e->add_option("-p,--partition", eval.partition_path, "partition TSV")->required();
    cmd_e->add_option("--truth", eval.truth_path, "ground-truth TSV for NMI");
    cmd_e->add_option("--report-out", eval.report_out, "report JSON path");
    cmd_e->add_option("--hist-out", eval.histogram_out, "size histogram TSV path");
    cmd_e->callback([&eval] { cmd_eval(eval); });

    auto* cmd_g = app.add_subcommand("gen", "Generate benchmark graphs");
    cmd_g->require_subcommand(1);

    struct {
        std::uint32_t cliques = 5, size = 3;
        std::string out = "ring.edges", truth_out;
    } ring;
    auto* gen_ring = cmd_g->add_subcommand("ring-cliques", "ring of cliques");
    gen_ring->add_option("--cliques", ring.cliques, "number of cliques")->required();
    gen_ring->add_option("--size", ring.size, "clique size")->required();
    gen_ring->add_option("-o,--out", ring.out, "edge-list output");
    gen_ring->add_option("--truth-out", ring.truth_out, "ground-truth output");
    gen_ring->callback([&ring] {
        write_generated(ring_of_cliques(ring.cliques, ring.size), ring.out,
                        {ring.truth_out.empty() ? ring.out + ".truth.tsv" : ring.truth_out});
    });

    struct {
        std::uint32_t n = 1000;
        double p = 0.02;
        std::uint64_t seed = 1;
        std::string out = "er.edges";
    } er;
    auto* gen_er = cmd_g->add_subcommand("er", "Erdos-Renyi G(n,p)");
    gen_er->add_option("--n", er.n, "vertex count")->required();
    gen_er->add_option("--p", er.p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_er->add_option("--seed", er.seed, "random seed");
    gen_er->add_option("-o,--out", er.out, "edge-list output");
    gen_er->callback([&er] { write_generated(erdos_renyi(er.n, er.p, er.seed), er.out, {}); });

    struct {
        std::uint32_t n = 1000, m = 10;
        std::uint64_t seed = 1;
        std::string out = "ba.edges";
    } ba;
    auto* gen_ba = cmd_g->add_subcommand("ba", "Barabasi-Albert preferential attachment");
    gen_ba->add_option("--n", ba.n, "vertex count")->required();
    gen_ba->add_option("--m", ba.m, "edges per new vertex")->required();
    gen_ba->add_option("--seed", ba.seed, "random seed");
    gen_ba->add_option("-o,--out", ba.out, "edge-list output");
    gen_ba->callback([&ba] { write_generated(barabasi_albert(ba.n, ba.m, ba.seed), ba.out, {}); });

    struct {
        std::uint32_t groups = 5, cliques = 5, size = 5;
        std::string out = "hier2.edges", truth_out, truth2_out;
    } hier;
    auto* gen_h = cmd_g->add_subcommand("hier2", "two-level clique hierarchy");
    gen_h->add_option("--groups", hier.groups, "number of groups")->required();
    gen_h->add_option("--cliques", hier.cliques, "cliques per group")->required();
    gen_h->add_option("--size", hier.size, "clique size")->required();
    gen_h->add_option("-o,--out", hier.out, "edge-list output");
    gen_h->add_option("--truth-out", hier.truth_out, "level-1 ground-truth output");
    gen_h->add_option("--truth2-out", hier.truth2_out, "level-2 ground-truth output");
    gen_h->callback([&hier] {
        write_generated(two_level_hierarchical(hier.groups, hier.cliques, hier.size), hier.out,
                        {hier.truth_out.empty() ? hier.out + ".truth1.tsv" : hier.truth_out,
                         hier.truth2_out.empty() ? hier.out + ".truth2.tsv" : hier.truth2_out});
    });

    BenchConfig bench;
    auto* cmd_b = app.add_subcommand("bench", "Timing ladder over generated graphs");
    cmd_b->add_option("--suite", bench.suite, "er|ring");
    cmd_b->add_option("--edges", bench.edge_targets, "target edge counts (er suite)")
        ->delimiter(',');
    cmd_b->add_option("--cliques", bench.clique_counts, "clique counts (ring suite)")
        ->delimiter(',');
    cmd_b->add_option("--size", bench.clique_size, "clique size (ring suite)");
    cmd_b->add_option("--mean-degree", bench.mean_degree, "target mean degree (er suite)");
    cmd_b->add_option("--seed", bench.seed, "random seed");
    cmd_b->add_option("--def", bench.definition, "community definition: weak|weakest");
    cmd_b->add_option("--repeats", bench.repeats, "runs per size, median reported");
    cmd_b->add_option("-o,--out", bench.out_path, "CSV output path (default stdout)");
    cmd_b->callback([&bench] { cmd_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
