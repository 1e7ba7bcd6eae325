/*
 * report.hpp
 *
 * Report rows, run configuration and the command implementations behind the
 * castnet CLI. Reports are long-format tables: one metric value per row,
 * each row stamped with the corpus hash and seed. Output is a pure function
 * of the RunConfig and the corpus.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "castnet/community.hpp"
#include "castnet/compare.hpp"
#include "castnet/ingest.hpp"
#include "castnet/metrics.hpp"

namespace castnet {

enum class ReportFormat { csv, json };

struct RunConfig {
    std::filesystem::path corpus;
    std::filesystem::path slices;  // optional slice definitions
    char separator = '\t';
    Seed seed = 0;
    int walk_length = 4;
    double eigen_tolerance = 1e-10;
    double spectral_tolerance = 1e-9;
    int max_iterations = 10000;
    bool normalized = false;
    ClosenessVariant closeness = ClosenessVariant::vertex_count;
    ClusteringVariant clustering = ClusteringVariant::transitivity;
    NmiNormalization nmi = NmiNormalization::arithmetic;
    bool restrict_to_component = false;
    ReportFormat format = ReportFormat::csv;
    /// Worker threads for betweenness passes. Not part of the serialized
    /// configuration: results do not depend on it.
    unsigned threads = 1;

    nlohmann::ordered_json to_json() const;
    DetectionOptions detection() const;
};

using ReportValue = std::variant<std::int64_t, double, std::string>;

struct ReportRow {
    std::string slice;
    std::string metric;
    std::string subject_kind;  // graph | vertex | pair | method | method-pair | community
    std::string subject;
    ReportValue value;
};

struct Report {
    std::string command;
    nlohmann::ordered_json config;
    std::string corpus_hash;
    Seed seed = 0;
    std::vector<ReportRow> rows;

    void write(std::ostream& out, ReportFormat format) const;
    std::string str(ReportFormat format) const;
};

/// Shortest round-trip decimal form.
std::string format_number(double value);

/// Loaded corpus plus configuration shared by every command.
class Session {
public:
    explicit Session(RunConfig config);
    Session(RunConfig config, Corpus corpus);

    const RunConfig& config() const noexcept { return config_; }
    const Corpus& corpus() const noexcept { return corpus_; }
    const std::string& corpus_hash() const noexcept { return hash_; }
    const Warnings& warnings() const noexcept { return warnings_; }

    MultiGraph graph(const std::string& slice) const;
    Report report(std::string command) const;

private:
    RunConfig config_;
    Warnings warnings_;
    Corpus corpus_;
    std::string hash_;
};

/// The 20 reference slices, in report order.
const std::vector<std::string>& table_slices();
/// Monica, Chandler, Ross, Rachel, Joey, Phoebe.
const std::vector<std::string>& six_friends();

Report cmd_stats(const Session& session, const std::vector<std::string>& slices);

enum class Measure { degree, closeness, betweenness, eigenvector };
Measure parse_measure(std::string_view name);
std::string_view measure_name(Measure measure);

/// Per-vertex rows sorted by descending value (ties by name). `subjects`
/// filters by name; `top` keeps the first rows of the ranking.
Report cmd_centrality(const Session& session, const std::string& slice, Measure measure,
                      const std::vector<std::string>& subjects = {}, std::optional<std::size_t> top = {});

/// Multiplicity of every unordered pair among `characters` (default: the
/// six friends), optionally divided by the number of seasons in the slice.
Report cmd_pairs(const Session& session, const std::string& slice, const std::vector<std::string>& characters = {},
                 bool per_season = false);

/// Persisted partition document: {meta: {...}, communities: [[names...]]}.
nlohmann::ordered_json partition_document(const Session& session, const std::string& slice, Method method,
                                          const MultiGraph& g, const Partition& p);
/// Rebuilds a partition of `g` from a document. Throws DataError when the
/// document's vertex set differs from g's.
Partition partition_from_document(const nlohmann::ordered_json& doc, const MultiGraph& g);
/// "<hash>_<slice>_<method>_<seed>.json" with unsafe characters replaced.
std::string partition_file_name(const Session& session, const std::string& slice, Method method);

struct CommunitiesResult {
    Report report;
    Partition partition;
    nlohmann::ordered_json document;
};

/// Membership, community count, Q, mean mixing parameter and
/// per-community embeddedness. When `partition_dir` is set the partition
/// document is written there.
CommunitiesResult cmd_communities(const Session& session, const std::string& slice, Method method,
                                  const std::optional<std::filesystem::path>& partition_dir = {});

enum class CompareMetric { nmi, ari };
CompareMetric parse_compare_metric(std::string_view name);

/// Upper-triangular pairwise similarity (i < j over the given method list).
/// Partitions are loaded from `partition_dir` when a matching document
/// exists, otherwise computed.
Report cmd_compare(const Session& session, const std::string& slice, const std::vector<Method>& methods,
                   CompareMetric metric, const std::optional<std::filesystem::path>& partition_dir = {});

enum class ExportFormat { dot, graphml, edge_csv };
ExportFormat parse_export_format(std::string_view name);

/// Writes the slice graph. Edge attribute `weight` = multiplicity; vertex
/// attributes `label` and, when a partition is given, `community`.
void export_graph(std::ostream& out, const MultiGraph& g, ExportFormat format,
                  const Partition* partition = nullptr);

/// Reads an edge-csv export ("source,target,weight" with a header row).
MultiGraph read_edge_csv(std::istream& in, std::shared_ptr<NameTable> names = nullptr);

} // namespace castnet
