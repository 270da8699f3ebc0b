#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bnsl/dataset.hpp"
#include "bnsl/errors.hpp"
#include "bnsl/network.hpp"
#include "bnsl/oracle.hpp"
#include "bnsl/parent_graph.hpp"
#include "bnsl/reconstruct.hpp"
#include "bnsl/scoring.hpp"
#include "bnsl/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;
constexpr int kExitCapacity = 5;
constexpr int kExitPgraph = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bnsl::IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw bnsl::IoError("read failure on '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bnsl::IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw bnsl::IoError("write failure on '" + path + "'");
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

struct IngestFlags {
    std::string input;
    std::string format = "csv";
    bool header = false;
    std::string binarize = "none";
};

void add_ingest_flags(CLI::App* cmd, IngestFlags& flags, bool input_required) {
    auto* opt = cmd->add_option("--input", flags.input, "input observation file");
    if (input_required) opt->required();
    cmd->add_option("--format", flags.format, "field delimiter convention")
        ->check(CLI::IsMember({"csv", "whitespace"}));
    cmd->add_flag("--header", flags.header, "first row holds variable names");
    cmd->add_option("--binarize", flags.binarize, "discretization of numeric columns")
        ->check(CLI::IsMember({"mean", "none"}));
}

bnsl::Dataset load_dataset(const IngestFlags& flags) {
    bnsl::ParseOptions options;
    options.format = flags.format == "csv" ? bnsl::ParseOptions::Format::csv
                                           : bnsl::ParseOptions::Format::whitespace;
    options.has_header = flags.header;
    std::string text = read_file(flags.input);
    if (flags.binarize == "mean") return bnsl::binarize_mean(bnsl::parse_numeric(text, options));
    return bnsl::parse(text, options);
}

bnsl::SearchResult run_solver(const std::string& name, const bnsl::ParentGraph& pg) {
    if (name == "bfs") return bnsl::bfs(pg, false);
    if (name == "bfs-ope") return bnsl::bfs(pg, true);
    if (name == "astar") return bnsl::astar(pg, false);
    return bnsl::astar(pg, true); // astar-ope
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

int cmd_learn(const IngestFlags& ingest, const std::string& score_name, int max_parents,
              const std::string& search_name, const std::string& pgraph_path, int threads,
              const std::string& output_path, const std::string& dot_path,
              const std::string& report_path) {
    std::optional<bnsl::Dataset> dataset;
    if (!ingest.input.empty()) dataset = load_dataset(ingest);

    bnsl::ParentGraph pg = [&] {
        if (!pgraph_path.empty()) {
            std::istringstream in(read_file(pgraph_path));
            return bnsl::ParentGraph::deserialize(in);
        }
        auto scorer = bnsl::make_scorer(score_name);
        int cap = max_parents < 0 ? dataset->n - 1 : max_parents;
        return bnsl::ParentGraph::build(*dataset, *scorer, cap, threads);
    }();

    if (dataset && dataset->n != pg.var_count())
        throw bnsl::Error("dataset has " + std::to_string(dataset->n) +
                          " variables but parent graph has " + std::to_string(pg.var_count()));
    std::vector<std::string> names = dataset ? dataset->names : default_names(pg.var_count());

    auto start = std::chrono::steady_clock::now();
    bnsl::SearchResult result = run_solver(search_name, pg);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::string network_text = bnsl::to_text(result.network, names);
    if (!output_path.empty()) write_file(output_path, network_text);
    if (!dot_path.empty()) write_file(dot_path, bnsl::to_dot(result.network, names));

    std::string ordering_text;
    for (bnsl::VarId v : result.network.ordering) {
        if (!ordering_text.empty()) ordering_text += ' ';
        ordering_text += names[static_cast<std::size_t>(v.value)];
    }
    int cap_reported = max_parents < 0 ? pg.var_count() - 1
                                       : std::min(max_parents, pg.var_count() - 1);

    std::string report;
    report += "solver\t" + search_name + "\n";
    report += "score\t" + format_double(result.network.score) + "\n";
    report += "ordering\t" + ordering_text + "\n";
    report += "expanded\t" + std::to_string(result.stats.expanded) + "\n";
    report += "generated\t" + std::to_string(result.stats.generated) + "\n";
    report += "extended_vars\t" + std::to_string(result.stats.extended_vars) + "\n";
    report += "peak_open\t" + std::to_string(result.stats.peak_open) + "\n";
    report += "peak_closed\t" + std::to_string(result.stats.peak_closed) + "\n";
    report += "pgraph_entries\t" + std::to_string(pg.entry_count()) + "\n";
    report += "reduction_ratio\t" + format_double(pg.reduction_ratio()) + "\n";
    report += "max_parents\t" + std::to_string(cap_reported) + "\n";

    std::cout << report;
    if (!report_path.empty()) write_file(report_path, report);
    // timing stays off the report so identical runs emit identical bytes
    std::cerr << "wall_time_s\t" << elapsed.count() << "\n";
    return kExitOk;
}

int cmd_pgraph_build(const IngestFlags& ingest, const std::string& score_name, int max_parents,
                     int threads, const std::string& output_path) {
    bnsl::Dataset d = load_dataset(ingest);
    auto scorer = bnsl::make_scorer(score_name);
    int cap = max_parents < 0 ? d.n - 1 : max_parents;
    bnsl::ParentGraph pg = bnsl::ParentGraph::build(d, *scorer, cap, threads);
    std::ostringstream out;
    pg.serialize(out);
    write_file(output_path, out.str());
    std::cout << "entries\t" << pg.entry_count() << "\n";
    return kExitOk;
}

int cmd_pgraph_info(const std::string& pgraph_path) {
    std::istringstream in(read_file(pgraph_path));
    bnsl::ParentGraph pg = bnsl::ParentGraph::deserialize(in);
    std::cout << "n\t" << pg.var_count() << "\n";
    for (int i = 0; i < pg.var_count(); ++i)
        std::cout << "var\t" << i << "\t" << pg.vector_for(bnsl::VarId{i}).size() << "\n";
    std::cout << "entries\t" << pg.entry_count() << "\n";
    std::cout << "reduction_ratio\t" << format_double(pg.reduction_ratio()) << "\n";
    return kExitOk;
}

int cmd_oracle(const IngestFlags& ingest, const std::string& score_name, bool check) {
    bnsl::Dataset d = load_dataset(ingest);
    if (d.n > 8)
        throw bnsl::CapacityError("oracle limited to 8 variables, got " + std::to_string(d.n));
    auto scorer = bnsl::make_scorer(score_name);
    auto [best, ordering] = bnsl::oracle::best_score_bruteforce(*scorer, d);

    std::string ordering_text;
    for (bnsl::VarId v : ordering) {
        if (!ordering_text.empty()) ordering_text += ' ';
        ordering_text += d.names[static_cast<std::size_t>(v.value)];
    }
    std::cout << "score\t" << format_double(best) << "\n";
    std::cout << "ordering\t" << ordering_text << "\n";
    if (!check) return kExitOk;

    bnsl::ParentGraph pg = bnsl::ParentGraph::build(d, *scorer, d.n - 1);
    bool agree = true;
    for (const char* name : {"bfs", "bfs-ope", "astar", "astar-ope"}) {
        bnsl::SearchResult result = run_solver(name, pg);
        std::cout << name << "\t" << format_double(result.network.score) << "\n";
        double denom = std::max(1.0, std::abs(best));
        if (std::abs(result.network.score - best) > 1e-9 * denom) agree = false;
    }
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact score-based Bayesian network structure learning"};
    app.require_subcommand(1);

    IngestFlags learn_ingest;
    std::string learn_score = "mdl";
    int learn_max_parents = -1;
    std::string learn_search = "astar-ope";
    std::string learn_pgraph;
    int learn_threads = 1;
    std::string learn_output, learn_dot, learn_report;
    auto* learn = app.add_subcommand("learn", "learn an optimal network from data");
    add_ingest_flags(learn, learn_ingest, false);
    learn->add_option("--score", learn_score, "scoring criterion")->check(CLI::IsMember({"mdl"}));
    learn->add_option("--max-parents", learn_max_parents, "cap on parent-set size (default n-1)");
    learn->add_option("--search", learn_search, "solver")
        ->check(CLI::IsMember({"bfs", "bfs-ope", "astar", "astar-ope"}));
    learn->add_option("--pgraph", learn_pgraph, "load a parent-graph file instead of building");
    learn->add_option("--threads", learn_threads, "worker threads for the parent-graph build");
    learn->add_option("--output", learn_output, "network file to write");
    learn->add_option("--dot", learn_dot, "Graphviz file to write");
    learn->add_option("--report", learn_report, "report file to write");

    IngestFlags build_ingest;
    std::string build_score = "mdl";
    int build_max_parents = -1;
    int build_threads = 1;
    std::string build_output;
    auto* pgraph = app.add_subcommand("pgraph", "parent-graph utilities");
    pgraph->require_subcommand(1);
    auto* build = pgraph->add_subcommand("build", "build and save a parent graph");
    add_ingest_flags(build, build_ingest, true);
    build->add_option("--score", build_score, "scoring criterion")->check(CLI::IsMember({"mdl"}));
    build->add_option("--max-parents", build_max_parents, "cap on parent-set size (default n-1)");
    build->add_option("--threads", build_threads, "worker threads");
    build->add_option("--output", build_output, "parent-graph file to write")->required();
    std::string info_pgraph;
    auto* info = pgraph->add_subcommand("info", "print parent-graph statistics");
    info->add_option("--pgraph", info_pgraph, "parent-graph file to inspect")->required();

    IngestFlags oracle_ingest;
    std::string oracle_score = "mdl";
    bool oracle_check = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference for small instances");
    add_ingest_flags(oracle_cmd, oracle_ingest, true);
    oracle_cmd->add_option("--score", oracle_score, "scoring criterion")->check(CLI::IsMember({"mdl"}));
    oracle_cmd->add_flag("--check", oracle_check, "also run all four solvers and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(learn)) {
            if (learn_ingest.input.empty() && learn_pgraph.empty()) {
                std::cerr << "learn requires --input or --pgraph\n";
                return kExitUsage;
            }
            return cmd_learn(learn_ingest, learn_score, learn_max_parents, learn_search,
                             learn_pgraph, learn_threads, learn_output, learn_dot, learn_report);
        }
        if (app.got_subcommand(pgraph)) {
            if (pgraph->got_subcommand(build))
                return cmd_pgraph_build(build_ingest, build_score, build_max_parents,
                                        build_threads, build_output);
            return cmd_pgraph_info(info_pgraph);
        }
        return cmd_oracle(oracle_ingest, oracle_score, oracle_check);
    } catch (const bnsl::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const bnsl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bnsl::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const bnsl::PgraphFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPgraph;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
