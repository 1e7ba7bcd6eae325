/*
 * compare.cpp
 */

#include "castnet/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "castnet/errors.hpp"

namespace castnet {

ConfusionTable::ConfusionTable(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) {
        throw DataError("partitions cover different vertex sets (" + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + ")");
    }
    n_ = a.size();
    rows_.assign(a.community_count(), 0);
    cols_.assign(b.community_count(), 0);
    std::unordered_map<std::uint64_t, std::size_t> cells;
    for (Vertex v = 0; v < n_; ++v) {
        const auto x = a.community(v), y = b.community(v);
        ++rows_[x];
        ++cols_[y];
        ++cells[(std::uint64_t(x) << 32) | y];
    }
    std::vector<std::pair<std::uint64_t, std::size_t>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, c] : sorted) {
        cells_.push_back({CommunityId(key >> 32), CommunityId(key & 0xffffffffu), c});
    }
}

namespace {

double entropy(const std::vector<std::size_t>& sizes, double n) {
    double h = 0.0;
    for (std::size_t s : sizes) {
        if (s == 0) continue;
        const double p = double(s) / n;
        h -= p * std::log(p);
    }
    return h;
}

double pairs(double x) { return x * (x - 1.0) / 2.0; }

// Each row and each column holds exactly one non-zero cell.
bool same_grouping(const ConfusionTable& t) {
    return t.cells().size() == t.row_sums().size() && t.cells().size() == t.column_sums().size();
}

} // namespace

double nmi(const Partition& a, const Partition& b, NmiNormalization norm) {
    const ConfusionTable table(a, b);
    const double n = double(table.total());
    if (n == 0) throw DataError("nmi of empty partitions");
    const double ha = entropy(table.row_sums(), n);
    const double hb = entropy(table.column_sums(), n);
    if (same_grouping(table)) return 1.0;
    if (ha == 0.0 || hb == 0.0) return 0.0;

    // I = sum_xy p_xy log(p_xy / (p_x p_y))
    double mi = 0.0;
    for (const auto& cell : table.cells()) {
        const double nx = double(table.row_sums()[cell.row]);
        const double ny = double(table.column_sums()[cell.column]);
        const double c = double(cell.count);
        mi += c / n * std::log(c * n / (nx * ny));
    }
    mi = std::max(0.0, mi);
    double value = 0.0;
    switch (norm) {
    case NmiNormalization::arithmetic: value = 2.0 * mi / (ha + hb); break;
    case NmiNormalization::geometric: value = mi / std::sqrt(ha * hb); break;
    case NmiNormalization::max: value = mi / std::max(ha, hb); break;
    }
    return std::clamp(value, 0.0, 1.0);
}

double adjusted_rand(const Partition& a, const Partition& b) {
    const ConfusionTable table(a, b);
    if (same_grouping(table)) return 1.0;
    double index = 0.0, rows = 0.0, cols = 0.0;
    for (const auto& cell : table.cells()) index += pairs(double(cell.count));
    for (std::size_t r : table.row_sums()) rows += pairs(double(r));
    for (std::size_t c : table.column_sums()) cols += pairs(double(c));
    const double all = pairs(double(table.total()));
    const double expected = all > 0.0 ? rows * cols / all : 0.0;
    const double max_index = (rows + cols) / 2.0;
    const double denom = max_index - expected;
    if (denom == 0.0) return 0.0;
    return (index - expected) / denom;
}

MixingResult mixing_parameter(const MultiGraph& g, const Partition& p) {
    if (p.size() != g.order()) throw DataError("partition does not cover the graph");
    MixingResult result;
    result.per_vertex.assign(g.order(), std::numeric_limits<double>::quiet_NaN());
    double sum = 0.0;
    std::size_t included = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        Count total = 0, external = 0;
        for (const auto& [u, w] : g.neighbors(v)) {
            total += w;
            if (p.community(u) != p.community(v)) external += w;
        }
        if (total == 0) {
            ++result.excluded;
            continue;
        }
        result.per_vertex[v] = double(external) / double(total);
        sum += result.per_vertex[v];
        ++included;
    }
    if (included == 0) throw DataError("mixing parameter undefined: every vertex is isolated");
    result.mean = sum / double(included);
    return result;
}

double embeddedness(const MultiGraph& g, const Partition& p, CommunityId community) {
    if (p.size() != g.order()) throw DataError("partition does not cover the graph");
    if (community >= p.community_count()) throw DataError("unknown community " + std::to_string(community));
    Count internal = 0, total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p.community(v) != community) continue;
        for (const auto& [u, w] : g.neighbors(v)) {
            total += w;
            if (p.community(u) == community) internal += w;
        }
    }
    if (total == 0) throw DataError("community " + std::to_string(community) + " has no incident edges");
    // `internal` already counts each inside edge from both ends.
    return double(internal) / double(total);
}

} // namespace castnet
