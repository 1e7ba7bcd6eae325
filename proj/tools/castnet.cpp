/*
 * castnet.cpp
 *
 * Command-line front end: stats | centrality | pairs | communities |
 * compare | export.
 *
 * Exit codes: 0 success, 1 usage error, 2 data error, 3 non-convergence.
 */

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "castnet/errors.hpp"
#include "castnet/report.hpp"

using namespace castnet;

namespace {

struct Options {
    RunConfig config;
    std::string separator = "\t";
    std::string format = "csv";
    std::string closeness = "vertex_count";
    std::string clustering = "transitivity";
    std::string nmi = "arithmetic";
    std::string out;
    std::vector<std::string> slices;
    bool table = false;
    std::string measure;
    std::vector<std::string> subjects;
    std::size_t top = 0;
    std::vector<std::string> characters;
    bool per_season = false;
    std::vector<std::string> methods;
    std::string metric = "nmi";
    std::string partition_dir = "partitions";
    bool no_persist = false;
};

void add_common(CLI::App* app, Options& o, bool report_format) {
    app->add_option("--corpus", o.config.corpus, "Directory of sSSeEE.txt episode files")->required();
    app->add_option("--slices", o.config.slices, "Slice definitions file (name = episodes)");
    app->add_option("--separator", o.separator, "Field separator of episode files (default: tab)");
    app->add_option("--seed", o.config.seed, "Seed for stochastic methods");
    app->add_option("--out", o.out, "Output path (default: stdout)");
    app->add_option("--threads", o.config.threads, "Worker threads for betweenness passes");
    app->add_flag("--restrict-component", o.config.restrict_to_component,
                  "Evaluate distance measures inside each vertex's component");
    if (report_format) {
        app->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    }
}

void add_slice(CLI::App* app, Options& o, bool many) {
    auto* opt = app->add_option("--slice", o.slices, "Slice: NAME | AE | sS | sA-sB | sSeE | comma list");
    if (!many) opt->expected(1);
}

std::string single_slice(const Options& o) {
    if (o.slices.size() != 1) throw UsageError("exactly one --slice is required");
    return o.slices.front();
}

void finalize(Options& o) {
    if (o.separator == "\\t" || o.separator == "tab") o.separator = "\t";
    if (o.separator.size() != 1) throw UsageError("separator must be a single character");
    o.config.separator = o.separator.front();
    o.config.format = o.format == "json" ? ReportFormat::json : ReportFormat::csv;
    o.config.closeness = o.closeness == "conventional" ? ClosenessVariant::conventional : ClosenessVariant::vertex_count;
    o.config.clustering = o.clustering == "mean_local" ? ClusteringVariant::mean_local : ClusteringVariant::transitivity;
    if (o.nmi == "geometric") o.config.nmi = NmiNormalization::geometric;
    else if (o.nmi == "max") o.config.nmi = NmiNormalization::max;
    else o.config.nmi = NmiNormalization::arithmetic;
    if (o.config.threads == 0) o.config.threads = 1;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw DataError("cannot write '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Session open_session(const Options& o) {
    Session session(o.config);
    for (const auto& w : session.warnings()) std::cerr << "warning: " << w << '\n';
    return session;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"castnet: character interaction network analysis"};
    app.require_subcommand(1);
    Options o;

    auto* stats = app.add_subcommand("stats", "N, |E|, diameter, clique number, clustering per slice");
    add_common(stats, o, true);
    add_slice(stats, o, true);
    stats->add_flag("--table", o.table, "Use the full list of situation slices");
    stats->add_option("--clustering-variant", o.clustering, "transitivity | mean_local")
        ->check(CLI::IsMember({"transitivity", "mean_local"}));

    auto* centrality = app.add_subcommand("centrality", "Per-vertex centrality ranking");
    add_common(centrality, o, true);
    add_slice(centrality, o, false);
    centrality->add_option("--measure", o.measure, "degree | closeness | betweenness | eigenvector")->required();
    centrality->add_flag("--normalized", o.config.normalized, "Normalize degree / betweenness");
    centrality->add_option("--subject", o.subjects, "Only report these characters");
    centrality->add_option("--top", o.top, "Keep the first N of the ranking");
    centrality->add_option("--closeness-variant", o.closeness, "vertex_count | conventional")
        ->check(CLI::IsMember({"vertex_count", "conventional"}));
    centrality->add_option("--eigen-tolerance", o.config.eigen_tolerance);
    centrality->add_option("--max-iterations", o.config.max_iterations);

    auto* pairs = app.add_subcommand("pairs", "Interaction counts between characters");
    add_common(pairs, o, true);
    add_slice(pairs, o, false);
    pairs->add_option("--character", o.characters, "Characters to pair up (default: the six friends)");
    pairs->add_flag("--per-season", o.per_season, "Divide by the number of seasons in the slice");

    auto* communities = app.add_subcommand("communities", "Community detection on a slice");
    add_common(communities, o, true);
    add_slice(communities, o, false);
    communities->add_option("--method", o.methods, "multilevel | label_propagation | girvan_newman | "
                                                   "leading_eigenvector | walktrap")
        ->required()
        ->expected(1);
    communities->add_option("--walk-length", o.config.walk_length);
    communities->add_option("--spectral-tolerance", o.config.spectral_tolerance);
    communities->add_option("--max-iterations", o.config.max_iterations);
    communities->add_option("--partition-dir", o.partition_dir, "Where partition JSON files are written");
    communities->add_flag("--no-persist", o.no_persist, "Do not write the partition file");

    auto* compare = app.add_subcommand("compare", "Pairwise partition similarity between methods");
    add_common(compare, o, true);
    add_slice(compare, o, false);
    compare->add_option("--method", o.methods, "Two or more methods")->required();
    compare->add_option("--metric", o.metric, "nmi | ari")->check(CLI::IsMember({"nmi", "ari"}));
    compare->add_option("--nmi-normalization", o.nmi, "arithmetic | geometric | max")
        ->check(CLI::IsMember({"arithmetic", "geometric", "max"}));
    compare->add_option("--walk-length", o.config.walk_length);
    compare->add_option("--spectral-tolerance", o.config.spectral_tolerance);
    compare->add_option("--max-iterations", o.config.max_iterations);
    compare->add_option("--partition-dir", o.partition_dir, "Reuse partition files found here");

    auto* exporter = app.add_subcommand("export", "Write a slice graph as dot, graphml or edge-csv");
    add_common(exporter, o, false);
    add_slice(exporter, o, false);
    exporter->add_option("--format", o.format, "dot | graphml | edge-csv")
        ->required()
        ->check(CLI::IsMember({"dot", "graphml", "edge-csv"}));
    exporter->add_option("--method", o.methods, "Colour vertices by this method's communities")->expected(1);
    exporter->add_option("--walk-length", o.config.walk_length);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        finalize(o);
        Output out(o.out);
        const ReportFormat format = o.config.format;
        if (stats->parsed()) {
            Session session = open_session(o);
            std::vector<std::string> slices = o.slices;
            if (o.table) slices.insert(slices.begin(), table_slices().begin(), table_slices().end());
            cmd_stats(session, slices).write(out.stream(), format);
        } else if (centrality->parsed()) {
            Session session = open_session(o);
            std::optional<std::size_t> top;
            if (o.top > 0) top = o.top;
            cmd_centrality(session, single_slice(o), parse_measure(o.measure), o.subjects, top)
                .write(out.stream(), format);
        } else if (pairs->parsed()) {
            Session session = open_session(o);
            cmd_pairs(session, single_slice(o), o.characters, o.per_season).write(out.stream(), format);
        } else if (communities->parsed()) {
            Session session = open_session(o);
            std::optional<std::filesystem::path> dir;
            if (!o.no_persist) dir = o.partition_dir;
            cmd_communities(session, single_slice(o), parse_method(o.methods.front()), dir)
                .report.write(out.stream(), format);
        } else if (compare->parsed()) {
            Session session = open_session(o);
            std::vector<Method> methods;
            for (const auto& m : o.methods) methods.push_back(parse_method(m));
            std::optional<std::filesystem::path> dir;
            if (!o.partition_dir.empty()) dir = o.partition_dir;
            cmd_compare(session, single_slice(o), methods, parse_compare_metric(o.metric), dir)
                .write(out.stream(), format);
        } else if (exporter->parsed()) {
            o.config.format = ReportFormat::csv;
            Session session = open_session(o);
            const MultiGraph g = session.graph(single_slice(o));
            std::optional<Partition> p;
            if (!o.methods.empty()) p = detect(g, parse_method(o.methods.front()), session.config().detection());
            export_graph(out.stream(), g, parse_export_format(o.format), p ? &*p : nullptr);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
