/*
 * oracles.hpp
 *
 * Brute-force reference computations used only by the tests. None of these
 * share code paths with the library algorithms they check.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "castnet/graph.hpp"

namespace castnet::oracle {

inline constexpr std::uint32_t inf = 1u << 30;

/// All-pairs hop distances by Floyd-Warshall over the simple adjacency.
std::vector<std::vector<std::uint32_t>> floyd_warshall(const MultiGraph& g);

/// Number of geodesics between every pair, by explicit path enumeration.
std::vector<std::vector<std::uint64_t>> geodesic_counts(const MultiGraph& g);

/// sum over unordered pairs {s,t}, s,t != v, of (#geodesics through v) /
/// (#geodesics), each geodesic enumerated explicitly.
std::vector<double> betweenness(const MultiGraph& g);

/// Largest vertex subset that is pairwise adjacent (n <= 20).
std::size_t clique_number(const MultiGraph& g);

/// max finite entry of the Floyd-Warshall matrix.
std::uint32_t diameter(const MultiGraph& g);

/// Q by the double sum over all vertex pairs.
double modularity(const MultiGraph& g, const Partition& p);

} // namespace castnet::oracle
