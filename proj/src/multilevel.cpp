/*
 * multilevel.cpp
 *
 * Louvain modularity optimisation.
 */

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "castnet/community.hpp"
#include "castnet/errors.hpp"

namespace castnet {

namespace {

// Weighted graph of one coarsening level. Internal weight of a node is only
// visible through its strength.
struct Level {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
    std::vector<double> strength;
    double two_m = 0.0;
};

Level base_level(const MultiGraph& g) {
    Level level;
    level.adj.resize(g.order());
    level.strength.assign(g.order(), 0.0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (const auto& [u, w] : g.neighbors(v)) {
            level.adj[v].emplace_back(u, double(w));
            level.strength[v] += double(w);
        }
    }
    level.two_m = 2.0 * double(g.edge_total());
    return level;
}

Level aggregate(const Level& base, std::span<const CommunityId> part, std::size_t k) {
    Level coarse;
    coarse.two_m = base.two_m;
    coarse.strength.assign(k, 0.0);
    std::vector<std::map<std::uint32_t, double>> links(k);
    for (std::size_t v = 0; v < base.adj.size(); ++v) {
        const auto c = part[v];
        coarse.strength[c] += base.strength[v];
        for (const auto& [u, w] : base.adj[v]) {
            if (part[u] != c) links[c][part[u]] += w;
        }
    }
    coarse.adj.resize(k);
    for (std::size_t c = 0; c < k; ++c) coarse.adj[c].assign(links[c].begin(), links[c].end());
    return coarse;
}

// Moves nodes between communities until no node has a strictly better
// community. `comm` holds ids in [0, n). Returns whether anything moved.
bool local_move(const Level& level, std::vector<std::uint32_t>& comm, Rng& rng) {
    const std::size_t n = level.adj.size();
    std::vector<double> tot(n, 0.0);
    std::vector<std::size_t> members(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        tot[comm[v]] += level.strength[v];
        ++members[comm[v]];
    }
    std::set<std::uint32_t> free_ids;
    for (std::uint32_t c = 0; c < n; ++c) {
        if (members[c] == 0) free_ids.insert(c);
    }

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<double> link(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool moved_any = false;
    for (;;) {
        rng.shuffle(std::span<std::uint32_t>(order));
        std::size_t moves = 0;
        for (std::uint32_t v : order) {
            const double k = level.strength[v];
            const std::uint32_t own = comm[v];
            for (const auto& [u, w] : level.adj[v]) {
                if (link[comm[u]] == 0.0) touched.push_back(comm[u]);
                link[comm[u]] += w;
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

            tot[own] -= k;
            --members[own];
            const double eps = 1e-10 * std::max(1.0, k);
            std::uint32_t best = own;
            double best_gain = link[own] - tot[own] * k / level.two_m;
            for (std::uint32_t c : touched) {
                if (c == own) continue;
                const double gain = link[c] - tot[c] * k / level.two_m;
                if (gain > best_gain + eps) {
                    best = c;
                    best_gain = gain;
                }
            }
            // Leaving for an empty community has gain 0.
            if (members[own] > 0 && !free_ids.empty()) {
                const std::uint32_t f = *free_ids.begin();
                if (0.0 > best_gain + eps || (best != own && std::abs(best_gain) <= eps && f < best)) {
                    best = f;
                    best_gain = 0.0;
                }
            }
            if (best != own) {
                comm[v] = best;
                ++moves;
                if (members[own] == 0) free_ids.insert(own);
                free_ids.erase(best);
            }
            tot[comm[v]] += k;
            ++members[comm[v]];
            for (std::uint32_t c : touched) link[c] = 0.0;
            touched.clear();
        }
        if (moves == 0) break;
        moved_any = true;
    }
    return moved_any;
}

void renumber(std::vector<std::uint32_t>& part) {
    std::vector<std::size_t> labels(part.begin(), part.end());
    const Partition p(labels);
    std::copy(p.assignment().begin(), p.assignment().end(), part.begin());
}

} // namespace

Dendrogram multilevel_levels(const MultiGraph& g, Seed seed) {
    if (g.edge_total() == 0) throw DataError("multilevel: graph has no edges");
    const Level base = base_level(g);
    const std::size_t n = g.order();
    std::vector<std::uint32_t> part(n);
    std::iota(part.begin(), part.end(), 0u);
    Rng rng(seed);
    Dendrogram dendrogram;
    auto record = [&] {
        Partition p(std::vector<std::size_t>(part.begin(), part.end()));
        const double q = modularity(g, p);
        dendrogram.levels.push_back({std::move(p), q});
    };

    for (;;) {
        // Louvain phases: optimise on the graph coarsened by `part`.
        for (;;) {
            renumber(part);
            const std::size_t k = *std::max_element(part.begin(), part.end()) + 1;
            const Level coarse = aggregate(base, part, k);
            std::vector<std::uint32_t> cc(k);
            std::iota(cc.begin(), cc.end(), 0u);
            if (!local_move(coarse, cc, rng)) break;
            for (auto& c : part) c = cc[c];
            renumber(part);
            record();
        }
        // Polish on the original vertices.
        bool polished = false;
        const Partition split = split_disconnected(g, Partition(std::vector<std::size_t>(part.begin(), part.end())));
        const std::size_t before = *std::max_element(part.begin(), part.end()) + 1;
        if (split.community_count() != before) {
            std::copy(split.assignment().begin(), split.assignment().end(), part.begin());
            polished = true;
        }
        if (local_move(base, part, rng)) polished = true;
        if (!polished) break;
        renumber(part);
        record();
    }
    if (dendrogram.levels.empty()) record();
    return dendrogram;
}

Partition multilevel(const MultiGraph& g, Seed seed) {
    return multilevel_levels(g, seed).levels.back().partition;
}

} // namespace castnet
