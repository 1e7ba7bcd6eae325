/*
 * community.hpp
 *
 * Community detection. Edge weights are multiplicities throughout
 * (modularity, label support, random-walk transitions); Girvan-Newman edge
 * betweenness is the one place that uses the SimpleView.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "castnet/graph.hpp"
#include "castnet/random.hpp"

namespace castnet {

struct DendrogramLevel {
    Partition partition;
    double modularity = 0.0;
};

/// Partitions in the order the algorithm produced them: agglomerative
/// methods start at their finest level, Girvan-Newman at the connected
/// components of the input.
struct Dendrogram {
    std::vector<DendrogramLevel> levels;

    /// Index of the first level with maximal modularity.
    std::size_t best_level() const;
    const Partition& best() const { return levels.at(best_level()).partition; }
};

/// Newman-Girvan modularity with A = multiplicity, k = multiplicity degree,
/// m = edge_total. Throws DataError for m == 0 or a size mismatch.
double modularity(const MultiGraph& g, const Partition& p);

/// Louvain: seeded local moves (best strictly positive gain, lowest
/// community id on ties) and coarsening until no move helps. The output is
/// then polished so that every community is connected and no single vertex
/// move raises Q.
Partition multilevel(const MultiGraph& g, Seed seed);
/// Same run, recording the partition after every improving phase.
Dendrogram multilevel_levels(const MultiGraph& g, Seed seed);

/// Asynchronous label propagation in seeded random order with seeded random
/// tie breaking. Stops once every vertex holds a label of maximal weighted
/// support; labels spanning disconnected pieces are split.
Partition label_propagation(const MultiGraph& g, Seed seed, int max_sweeps = 10000);

/// Divisive edge-betweenness clustering. A level is recorded each time a
/// component splits; `max_levels` bounds the number of recorded levels.
Dendrogram girvan_newman(const MultiGraph& g, std::optional<std::size_t> max_levels = std::nullopt,
                         unsigned threads = 1);

struct LeadingEigenvectorOptions {
    double tolerance = 1e-9;
    int max_iterations = 10000;
};

/// Newman's spectral bisection of the modularity matrix, applied
/// recursively to each part.
Partition leading_eigenvector(const MultiGraph& g, const LeadingEigenvectorOptions& options = {});

/// Pons-Latapy random-walk agglomeration. Every vertex carries a self loop
/// weighted by its mean incident multiplicity.
Dendrogram walktrap(const MultiGraph& g, int walk_length = 4);

enum class Method { multilevel, label_propagation, girvan_newman, leading_eigenvector, walktrap };

std::string_view method_name(Method method);
/// Accepts the full names and the short codes ML, LP, EB, LE, WT.
Method parse_method(std::string_view name);
const std::vector<Method>& all_methods();

struct DetectionOptions {
    Seed seed = 0;
    int walk_length = 4;
    unsigned threads = 1;
    LeadingEigenvectorOptions eigen;
};

/// Runs a method and returns its single reported partition (the best cut
/// for hierarchical methods).
Partition detect(const MultiGraph& g, Method method, const DetectionOptions& options);

/// Splits every community into the connected pieces it induces.
Partition split_disconnected(const MultiGraph& g, const Partition& p);

} // namespace castnet
