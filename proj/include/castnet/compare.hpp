/*
 * compare.hpp
 *
 * Partition similarity (NMI, adjusted Rand) and partition quality against a
 * graph (mixing parameter, embeddedness).
 */

#pragma once

#include <vector>

#include "castnet/graph.hpp"

namespace castnet {

/// Contingency counts n_xy = |X_x ∩ Y_y| of two partitions of the same
/// vertices.
class ConfusionTable {
public:
    struct Cell {
        CommunityId row;
        CommunityId column;
        std::size_t count;
    };

    ConfusionTable(const Partition& a, const Partition& b);

    std::size_t total() const noexcept { return n_; }
    const std::vector<std::size_t>& row_sums() const noexcept { return rows_; }
    const std::vector<std::size_t>& column_sums() const noexcept { return cols_; }
    /// Non-zero cells only, in (row, column) order.
    const std::vector<Cell>& cells() const noexcept { return cells_; }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> rows_;
    std::vector<std::size_t> cols_;
    std::vector<Cell> cells_;
};

enum class NmiNormalization {
    arithmetic,  // 2 I / (H1 + H2)
    geometric,   // I / sqrt(H1 H2)
    max,         // I / max(H1, H2)
};

/// Normalized mutual information. Two single-community partitions give 1;
/// when exactly one partition is trivial the mutual information is 0.
double nmi(const Partition& a, const Partition& b, NmiNormalization norm = NmiNormalization::arithmetic);

/// Hubert-Arabie adjusted Rand index. With a zero denominator the result is
/// 1 for identical partitions and 0 otherwise.
double adjusted_rand(const Partition& a, const Partition& b);

struct MixingResult {
    double mean = 0.0;               // mean of k_ext / k_tot over included vertices
    std::vector<double> per_vertex;  // NaN for excluded (isolated) vertices
    std::size_t excluded = 0;
};

/// Mixing parameter with multiplicity degrees. Isolated vertices are left
/// out of the mean; throws DataError if every vertex is isolated.
MixingResult mixing_parameter(const MultiGraph& g, const Partition& p);

/// 2 * internal multiplicity / total multiplicity degree of the members.
double embeddedness(const MultiGraph& g, const Partition& p, CommunityId community);

} // namespace castnet
