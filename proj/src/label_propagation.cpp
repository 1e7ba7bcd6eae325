/*
 * label_propagation.cpp
 */

#include <algorithm>
#include <map>
#include <numeric>

#include "castnet/community.hpp"
#include "castnet/errors.hpp"

namespace castnet {

namespace {

// Labels with maximal multiplicity-weighted support around v, ascending.
std::vector<std::size_t> dominant_labels(const MultiGraph& g, Vertex v, const std::vector<std::size_t>& labels) {
    std::map<std::size_t, Count> support;
    for (const auto& [u, w] : g.neighbors(v)) support[labels[u]] += w;
    Count best = 0;
    for (const auto& [_, s] : support) best = std::max(best, s);
    std::vector<std::size_t> out;
    for (const auto& [label, s] : support) {
        if (s == best) out.push_back(label);
    }
    return out;
}

bool settled(const MultiGraph& g, Vertex v, const std::vector<std::size_t>& labels) {
    if (g.neighbors(v).empty()) return true;
    const auto top = dominant_labels(g, v, labels);
    return std::binary_search(top.begin(), top.end(), labels[v]);
}

} // namespace

Partition label_propagation(const MultiGraph& g, Seed seed, int max_sweeps) {
    if (g.edge_total() == 0) throw DataError("label propagation: graph has no edges");
    const std::size_t n = g.order();
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    Rng rng(seed);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        rng.shuffle(std::span<Vertex>(order));
        for (Vertex v : order) {
            if (g.neighbors(v).empty()) continue;
            const auto top = dominant_labels(g, v, labels);
            labels[v] = top.size() == 1 ? top.front() : top[rng.below(top.size())];
        }
        bool done = true;
        for (Vertex v = 0; v < n && done; ++v) done = settled(g, v, labels);
        if (done) return split_disconnected(g, Partition(labels));
    }
    throw ConvergenceError("label propagation did not settle in " + std::to_string(max_sweeps) + " sweeps");
}

} // namespace castnet
