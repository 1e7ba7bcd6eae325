/*
 * report.cpp
 */

#include "castnet/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "castnet/errors.hpp"

namespace castnet {

using nlohmann::ordered_json;

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

namespace {

std::string_view closeness_name(ClosenessVariant v) {
    return v == ClosenessVariant::vertex_count ? "vertex_count" : "conventional";
}

std::string_view clustering_name(ClusteringVariant v) {
    return v == ClusteringVariant::transitivity ? "transitivity" : "mean_local";
}

std::string_view nmi_name(NmiNormalization n) {
    switch (n) {
    case NmiNormalization::arithmetic: return "arithmetic";
    case NmiNormalization::geometric: return "geometric";
    case NmiNormalization::max: return "max";
    }
    return "arithmetic";
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string value_text(const ReportValue& v) {
    if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (auto d = std::get_if<double>(&v)) return format_number(*d);
    return std::get<std::string>(v);
}

ordered_json value_json(const ReportValue& v) {
    if (auto i = std::get_if<std::int64_t>(&v)) return *i;
    if (auto d = std::get_if<double>(&v)) {
        if (std::isfinite(*d)) return *d;
        return format_number(*d);
    }
    return std::get<std::string>(v);
}

Disconnected policy_of(const RunConfig& c) {
    return c.restrict_to_component ? Disconnected::restrict_to_component : Disconnected::error;
}

} // namespace

ordered_json RunConfig::to_json() const {
    ordered_json j;
    j["corpus"] = corpus.string();
    j["slices"] = slices.string();
    j["separator"] = std::string(1, separator);
    j["seed"] = seed;
    j["walk_length"] = walk_length;
    j["eigen_tolerance"] = eigen_tolerance;
    j["spectral_tolerance"] = spectral_tolerance;
    j["max_iterations"] = max_iterations;
    j["normalized"] = normalized;
    j["closeness"] = closeness_name(closeness);
    j["clustering"] = clustering_name(clustering);
    j["nmi"] = nmi_name(nmi);
    j["restrict_to_component"] = restrict_to_component;
    j["format"] = format == ReportFormat::csv ? "csv" : "json";
    return j;
}

DetectionOptions RunConfig::detection() const {
    DetectionOptions o;
    o.seed = seed;
    o.walk_length = walk_length;
    o.threads = threads;
    o.eigen.tolerance = spectral_tolerance;
    o.eigen.max_iterations = max_iterations;
    return o;
}

void Report::write(std::ostream& out, ReportFormat format) const {
    if (format == ReportFormat::csv) {
        out << "# castnet " << command << '\n';
        out << "# config: " << config.dump() << '\n';
        out << "corpus_hash,seed,slice,metric,subject_kind,subject,value\n";
        for (const auto& r : rows) {
            out << corpus_hash << ',' << seed << ',' << csv_field(r.slice) << ',' << csv_field(r.metric) << ','
                << csv_field(r.subject_kind) << ',' << csv_field(r.subject) << ',' << csv_field(value_text(r.value))
                << '\n';
        }
        return;
    }
    ordered_json j;
    j["command"] = command;
    j["config"] = config;
    j["corpus_hash"] = corpus_hash;
    j["seed"] = seed;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["corpus_hash"] = corpus_hash;
        row["seed"] = seed;
        row["slice"] = r.slice;
        row["metric"] = r.metric;
        row["subject_kind"] = r.subject_kind;
        row["subject"] = r.subject;
        row["value"] = value_json(r.value);
        j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

std::string Report::str(ReportFormat format) const {
    std::ostringstream ss;
    write(ss, format);
    return ss.str();
}

Session::Session(RunConfig config) : config_(std::move(config)) {
    ParseOptions options;
    options.separator = config_.separator;
    corpus_ = load_corpus(config_.corpus, options, &warnings_);
    if (corpus_.size() == 0) throw DataError("corpus '" + config_.corpus.string() + "' contains no episodes");
    if (!config_.slices.empty()) load_slices_config(corpus_, config_.slices);
    hash_ = corpus_.hash();
}

Session::Session(RunConfig config, Corpus corpus) : config_(std::move(config)), corpus_(std::move(corpus)) {
    if (corpus_.size() == 0) throw DataError("corpus contains no episodes");
    hash_ = corpus_.hash();
}

MultiGraph Session::graph(const std::string& name) const { return slice(corpus_, name); }

Report Session::report(std::string command) const {
    Report r;
    r.command = std::move(command);
    r.config = config_.to_json();
    r.corpus_hash = hash_;
    r.seed = config_.seed;
    return r;
}

const std::vector<std::string>& table_slices() {
    static const std::vector<std::string> slices = {
        "AE", "s1-s4", "s5-s10", "firsts", "lasts", "thanksgiving", "flashbacks", "the6", "s1e1", "s10e18",
        "s1", "s2",    "s3",     "s4",     "s5",    "s6",           "s7",         "s8",   "s9",   "s10",
    };
    return slices;
}

const std::vector<std::string>& six_friends() {
    static const std::vector<std::string> names = {"Monica", "Chandler", "Ross", "Rachel", "Joey", "Phoebe"};
    return names;
}

Report cmd_stats(const Session& session, const std::vector<std::string>& slices) {
    if (slices.empty()) throw UsageError("stats: no slice given");
    Report report = session.report("stats");
    for (const auto& name : slices) {
        const MultiGraph g = session.graph(name);
        auto add = [&](std::string metric, ReportValue value) {
            report.rows.push_back({name, std::move(metric), "graph", "", std::move(value)});
        };
        add("N", std::int64_t(g.order()));
        add("edges", std::int64_t(g.edge_total()));
        add("diameter", std::int64_t(diameter(g)));
        add("clique_number", std::int64_t(clique_number(g)));
        add("clustering", clustering_coefficient(g, session.config().clustering));
    }
    return report;
}

Measure parse_measure(std::string_view name) {
    if (name == "degree") return Measure::degree;
    if (name == "closeness") return Measure::closeness;
    if (name == "betweenness") return Measure::betweenness;
    if (name == "eigenvector") return Measure::eigenvector;
    throw UsageError("unknown measure '" + std::string(name) + "'");
}

std::string_view measure_name(Measure measure) {
    switch (measure) {
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
    case Measure::eigenvector: return "eigenvector";
    }
    return "unknown";
}

Report cmd_centrality(const Session& session, const std::string& slice, Measure measure,
                      const std::vector<std::string>& subjects, std::optional<std::size_t> top) {
    const auto& cfg = session.config();
    const MultiGraph g = session.graph(slice);
    VertexScores scores;
    switch (measure) {
    case Measure::degree: scores = degree_scores(g, cfg.normalized); break;
    case Measure::closeness: scores = closeness_scores(g, cfg.closeness, policy_of(cfg)); break;
    case Measure::betweenness: scores = betweenness_scores(g, cfg.normalized, cfg.threads); break;
    case Measure::eigenvector: {
        EigenvectorOptions options;
        options.tolerance = cfg.eigen_tolerance;
        options.max_iterations = cfg.max_iterations;
        options.policy = policy_of(cfg);
        scores = eigenvector_centrality(g, options);
        break;
    }
    }
    std::vector<Vertex> ranking(g.order());
    for (Vertex v = 0; v < g.order(); ++v) ranking[v] = v;
    std::sort(ranking.begin(), ranking.end(), [&](Vertex a, Vertex b) {
        if (scores.values[a] != scores.values[b]) return scores.values[a] > scores.values[b];
        return g.label(a) < g.label(b);
    });
    if (top && ranking.size() > *top) ranking.resize(*top);
    if (!subjects.empty()) {
        std::vector<Vertex> wanted;
        for (const auto& name : subjects) wanted.push_back(g.vertex(name));
        std::erase_if(ranking, [&](Vertex v) { return std::find(wanted.begin(), wanted.end(), v) == wanted.end(); });
    }
    std::string metric(measure_name(measure));
    if (scores.normalized && measure != Measure::eigenvector) metric = "normalized_" + metric;
    Report report = session.report("centrality");
    for (Vertex v : ranking) report.rows.push_back({slice, metric, "vertex", g.label(v), scores.values[v]});
    return report;
}

Report cmd_pairs(const Session& session, const std::string& slice, const std::vector<std::string>& characters,
                 bool per_season) {
    const auto& names = characters.empty() ? six_friends() : characters;
    for (const auto& name : names) {
        if (!session.corpus().names()->find(normalize_name(name))) {
            throw DataError("unknown character '" + name + "'");
        }
    }
    const MultiGraph g = session.graph(slice);
    const double seasons = per_season ? double(season_count(session.corpus(), SliceSpec::parse(slice))) : 1.0;
    Report report = session.report("pairs");
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const Count m = g.edge_multiplicity(names[i], names[j]);
            const std::string subject = names[i] + "|" + names[j];
            if (per_season) {
                report.rows.push_back({slice, "interactions_per_season", "pair", subject, double(m) / seasons});
            } else {
                report.rows.push_back({slice, "interactions", "pair", subject, std::int64_t(m)});
            }
        }
    }
    return report;
}

std::string partition_file_name(const Session& session, const std::string& slice, Method method) {
    std::string safe_slice;
    for (char c : slice) safe_slice += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
    return session.corpus_hash() + "_" + safe_slice + "_" + std::string(method_name(method)) + "_" +
           std::to_string(session.config().seed) + ".json";
}

ordered_json partition_document(const Session& session, const std::string& slice, Method method,
                                const MultiGraph& g, const Partition& p) {
    ordered_json doc;
    ordered_json meta = session.config().to_json();
    meta["corpus_hash"] = session.corpus_hash();
    meta["slice"] = slice;
    meta["method"] = method_name(method);
    doc["meta"] = std::move(meta);
    doc["communities"] = ordered_json::array();
    for (const auto& members : p.communities()) {
        ordered_json names = ordered_json::array();
        for (Vertex v : members) names.push_back(g.label(v));
        doc["communities"].push_back(std::move(names));
    }
    return doc;
}

Partition partition_from_document(const ordered_json& doc, const MultiGraph& g) {
    if (!doc.contains("communities") || !doc["communities"].is_array()) {
        throw DataError("partition document has no 'communities' array");
    }
    constexpr std::size_t unset = std::size_t(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::size_t c = 0;
    for (const auto& members : doc["communities"]) {
        for (const auto& name : members) {
            const auto v = g.find(name.get<std::string>());
            if (!v) throw DataError("partition names '" + name.get<std::string>() + "', absent from the graph");
            if (label[*v] != unset) throw DataError("partition lists '" + g.label(*v) + "' twice");
            label[*v] = c;
        }
        ++c;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (label[v] == unset) throw DataError("partition does not cover '" + g.label(v) + "'");
    }
    return Partition(label);
}

CommunitiesResult cmd_communities(const Session& session, const std::string& slice, Method method,
                                  const std::optional<std::filesystem::path>& partition_dir) {
    const MultiGraph g = session.graph(slice);
    CommunitiesResult result;
    result.partition = detect(g, method, session.config().detection());
    const Partition& p = result.partition;
    const std::string m(method_name(method));
    Report& report = result.report = session.report("communities");
    report.rows.push_back({slice, "communities", "method", m, std::int64_t(p.community_count())});
    report.rows.push_back({slice, "modularity", "method", m, modularity(g, p)});
    const MixingResult mixing = mixing_parameter(g, p);
    report.rows.push_back({slice, "mixing_mean", "method", m, mixing.mean});
    report.rows.push_back({slice, "mixing_excluded", "method", m, std::int64_t(mixing.excluded)});
    const auto members = p.communities();
    for (CommunityId c = 0; c < p.community_count(); ++c) {
        const std::string subject = m + "#" + std::to_string(c);
        report.rows.push_back({slice, "size", "community", subject, std::int64_t(members[c].size())});
        report.rows.push_back({slice, "embeddedness", "community", subject, embeddedness(g, p, c)});
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        report.rows.push_back({slice, "community", "vertex", g.label(v), std::int64_t(p.community(v))});
    }
    result.document = partition_document(session, slice, method, g, p);
    if (partition_dir) {
        std::filesystem::create_directories(*partition_dir);
        const auto path = *partition_dir / partition_file_name(session, slice, method);
        std::ofstream out(path);
        if (!out) throw DataError("cannot write '" + path.string() + "'");
        out << result.document.dump(2) << '\n';
    }
    return result;
}

CompareMetric parse_compare_metric(std::string_view name) {
    if (name == "nmi") return CompareMetric::nmi;
    if (name == "ari") return CompareMetric::ari;
    throw UsageError("unknown comparison metric '" + std::string(name) + "'");
}

Report cmd_compare(const Session& session, const std::string& slice, const std::vector<Method>& methods,
                   CompareMetric metric, const std::optional<std::filesystem::path>& partition_dir) {
    if (methods.size() < 2) throw UsageError("compare needs at least two methods");
    const MultiGraph g = session.graph(slice);
    std::map<Method, Partition> partitions;
    for (Method method : methods) {
        if (partitions.contains(method)) continue;
        std::optional<Partition> p;
        if (partition_dir) {
            const auto path = *partition_dir / partition_file_name(session, slice, method);
            if (std::ifstream in(path); in) {
                ordered_json doc;
                try {
                    in >> doc;
                } catch (const nlohmann::json::exception& e) {
                    throw DataError("cannot parse '" + path.string() + "': " + e.what());
                }
                p = partition_from_document(doc, g);
            }
        }
        if (!p) p = detect(g, method, session.config().detection());
        partitions.emplace(method, std::move(*p));
    }
    Report report = session.report("compare");
    const std::string metric_name = metric == CompareMetric::nmi ? "nmi" : "ari";
    for (std::size_t i = 0; i < methods.size(); ++i) {
        for (std::size_t j = i + 1; j < methods.size(); ++j) {
            const Partition& a = partitions.at(methods[i]);
            const Partition& b = partitions.at(methods[j]);
            const double value = metric == CompareMetric::nmi ? nmi(a, b, session.config().nmi) : adjusted_rand(a, b);
            const std::string subject = std::string(method_name(methods[i])) + "|" + std::string(method_name(methods[j]));
            report.rows.push_back({slice, metric_name, "method-pair", subject, value});
        }
    }
    return report;
}

} // namespace castnet
