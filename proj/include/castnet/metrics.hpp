/*
 * metrics.hpp
 *
 * Structural and centrality measures. Everything built on geodesics
 * (distances, diameter, betweenness, closeness, clustering, cliques) runs on
 * the SimpleView; degree, assortativity and eigenvector centrality use edge
 * multiplicities.
 */

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "castnet/graph.hpp"

namespace castnet {

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

/// Single-source BFS result: hop distances, geodesic counts and BFS
/// predecessors.
struct GeodesicTable {
    Vertex source = 0;
    std::vector<std::uint32_t> dist;   // `unreachable` when not connected
    std::vector<double> sigma;         // number of geodesics from source
    std::vector<std::vector<Vertex>> predecessors;
    std::vector<Vertex> order;         // vertices in non-decreasing distance
};

GeodesicTable geodesics(const SimpleView& view, Vertex source);
GeodesicTable geodesics(const MultiGraph& g, Vertex source);

/// Policy for measures that are undefined on disconnected graphs.
enum class Disconnected {
    error,                  // throw DataError
    restrict_to_component,  // evaluate within the vertex's component
};

enum class ClosenessVariant {
    vertex_count,  // N / sum_j d_ij
    conventional,  // (N - 1) / sum_j d_ij
};

enum class ClusteringVariant {
    transitivity,  // 3 * triangles / connected triples
    mean_local,    // average of local coefficients over vertices of degree >= 2
};

struct VertexScores {
    std::string measure;
    std::vector<double> values;
    bool normalized = false;
};

/// (1/N) sum_j d_ij, the self term included.
double mean_geodesic(const MultiGraph& g, Vertex v, Disconnected policy = Disconnected::error);

double closeness(const MultiGraph& g, Vertex v,
                 ClosenessVariant variant = ClosenessVariant::vertex_count,
                 Disconnected policy = Disconnected::error);
VertexScores closeness_scores(const MultiGraph& g,
                              ClosenessVariant variant = ClosenessVariant::vertex_count,
                              Disconnected policy = Disconnected::error);

/// Brandes accumulation over unordered pairs. Normalized scores are divided
/// by (N-1)(N-2)/2; N < 3 then throws. Per-source passes are spread over
/// `threads` workers and reduced in fixed blocks, so the result does not
/// depend on the thread count.
VertexScores betweenness_scores(const MultiGraph& g, bool normalized, unsigned threads = 1);
double betweenness(const MultiGraph& g, Vertex v, bool normalized);

/// Multiplicity-counting degree / (N-1); throws for N < 2.
double normalized_degree(const MultiGraph& g, Vertex v);
VertexScores degree_scores(const MultiGraph& g, bool normalized);

/// Maximum finite geodesic distance. With Disconnected::error a
/// disconnected graph throws instead.
std::uint32_t diameter(const MultiGraph& g, Disconnected policy = Disconnected::restrict_to_component);

double clustering_coefficient(const MultiGraph& g,
                              ClusteringVariant variant = ClusteringVariant::transitivity);

/// Size of a maximum clique (Bron-Kerbosch with Tomita pivoting over a
/// degeneracy ordering).
std::size_t clique_number(const MultiGraph& g);

/// Pearson correlation of multiplicity degrees over edge endpoints, each
/// edge weighted by multiplicity and counted in both orientations.
double degree_assortativity(const MultiGraph& g);

struct EigenvectorOptions {
    double tolerance = 1e-10;
    int max_iterations = 10000;
    Disconnected policy = Disconnected::error;
};

/// Principal eigenvector of the multiplicity-weighted adjacency matrix,
/// scaled to max entry 1 (per component with restrict_to_component).
VertexScores eigenvector_centrality(const MultiGraph& g, const EigenvectorOptions& options = {});

/// Fraction of vertices per half-open degree bucket:
/// [0,b0), [b0,b1), ..., [b_last, inf).
std::vector<double> degree_histogram(const MultiGraph& g, std::span<const Count> bounds);

} // namespace castnet
