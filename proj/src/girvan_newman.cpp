/*
 * girvan_newman.cpp
 *
 * Divisive clustering by repeated removal of the edge with the highest
 * edge betweenness (hop-count geodesics on the SimpleView). Betweenness is
 * recomputed after every removal, but only inside the component that lost
 * the edge.
 */

#include <algorithm>

#include "castnet/community.hpp"
#include "castnet/errors.hpp"
#include "parallel.hpp"

namespace castnet {

namespace {

using EdgeId = std::uint32_t;

class EdgeBetweennessState {
public:
    explicit EdgeBetweennessState(const MultiGraph& g) : n_(g.order()), adj_(g.order()) {
        g.for_each_edge([&](Vertex u, Vertex v, Count) {
            const auto id = static_cast<EdgeId>(ends_.size());
            ends_.emplace_back(u, v);
            adj_[u].emplace_back(v, id);
            adj_[v].emplace_back(u, id);
        });
        alive_.assign(ends_.size(), 1);
        score_.assign(ends_.size(), 0.0);
        alive_count_ = ends_.size();
    }

    std::size_t alive_count() const { return alive_count_; }

    // Edge with maximal betweenness; near-equal scores go to the lowest
    // (u, v) pair, which is the lowest edge id.
    EdgeId pick() const {
        double top = -1.0;
        for (EdgeId e = 0; e < ends_.size(); ++e) {
            if (alive_[e]) top = std::max(top, score_[e]);
        }
        const double slack = 1e-9 * std::max(1.0, top);
        for (EdgeId e = 0; e < ends_.size(); ++e) {
            if (alive_[e] && score_[e] >= top - slack) return e;
        }
        throw DataError("no edges left");
    }

    void remove(EdgeId e) {
        alive_[e] = 0;
        --alive_count_;
    }

    std::pair<Vertex, Vertex> ends(EdgeId e) const { return ends_[e]; }

    std::vector<Vertex> component_of(Vertex s) const {
        std::vector<char> seen(n_, 0);
        std::vector<Vertex> out{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < out.size(); ++head) {
            for (const auto& [w, e] : adj_[out[head]]) {
                if (alive_[e] && !seen[w]) {
                    seen[w] = 1;
                    out.push_back(w);
                }
            }
        }
        return out;
    }

    std::vector<std::size_t> component_labels() const {
        constexpr std::size_t unset = std::size_t(-1);
        std::vector<std::size_t> label(n_, unset);
        std::size_t next = 0;
        for (Vertex s = 0; s < n_; ++s) {
            if (label[s] != unset) continue;
            for (Vertex v : component_of(s)) label[v] = next;
            ++next;
        }
        return label;
    }

    // Recomputes scores of every edge with both ends in `vertices`.
    void recompute(const std::vector<Vertex>& vertices, unsigned threads) {
        const std::size_t m = ends_.size();
        auto total = detail::reduce_sources(vertices.size(), m, threads,
                                            [&](std::size_t i, std::vector<double>& acc) {
                                                accumulate_from(vertices[i], acc);
                                            });
        for (Vertex v : vertices) {
            for (const auto& [w, e] : adj_[v]) {
                if (alive_[e]) score_[e] = total[e] / 2.0;
            }
        }
    }

private:
    void accumulate_from(Vertex s, std::vector<double>& acc) const {
        struct Workspace {
            std::vector<std::uint32_t> dist;
            std::vector<double> sigma, delta;
            std::vector<Vertex> order;
        };
        thread_local Workspace ws;
        if (ws.dist.size() != n_) {
            ws.dist.assign(n_, unreachable_);
            ws.sigma.assign(n_, 0.0);
            ws.delta.assign(n_, 0.0);
        }
        auto& [dist, sigma, delta, order] = ws;
        order.assign(1, s);
        dist[s] = 0;
        sigma[s] = 1.0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Vertex v = order[head];
            for (const auto& [w, e] : adj_[v]) {
                if (!alive_[e]) continue;
                if (dist[w] == unreachable_) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }
        // Predecessors are the live neighbours one hop closer to s.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Vertex w = *it;
            if (w == s) continue;
            const double share = (1.0 + delta[w]) / sigma[w];
            for (const auto& [v, e] : adj_[w]) {
                if (!alive_[e] || dist[v] + 1 != dist[w]) continue;
                const double c = sigma[v] * share;
                acc[e] += c;
                delta[v] += c;
            }
        }
        for (Vertex v : order) {
            dist[v] = unreachable_;
            sigma[v] = 0.0;
            delta[v] = 0.0;
        }
    }

    static constexpr std::uint32_t unreachable_ = std::uint32_t(-1);

    std::size_t n_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
    std::vector<std::pair<Vertex, Vertex>> ends_;
    std::vector<char> alive_;
    std::vector<double> score_;
    std::size_t alive_count_ = 0;
};

} // namespace

Dendrogram girvan_newman(const MultiGraph& g, std::optional<std::size_t> max_levels, unsigned threads) {
    if (g.edge_total() == 0) throw DataError("girvan_newman: graph has no edges");
    EdgeBetweennessState state(g);
    Dendrogram dendrogram;
    auto record = [&] {
        Partition p(state.component_labels());
        const double q = modularity(g, p);
        dendrogram.levels.push_back({std::move(p), q});
    };
    auto full = [&] {
        std::vector<Vertex> all(g.order());
        for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
        return all;
    };
    record();
    state.recompute(full(), threads);
    while (state.alive_count() > 0) {
        if (max_levels && dendrogram.levels.size() >= *max_levels) break;
        const EdgeId e = state.pick();
        const auto [u, v] = state.ends(e);
        state.remove(e);
        auto side = state.component_of(u);
        const bool split = std::find(side.begin(), side.end(), v) == side.end();
        if (split) {
            auto other = state.component_of(v);
            side.insert(side.end(), other.begin(), other.end());
        }
        std::sort(side.begin(), side.end());
        state.recompute(side, threads);
        if (split) record();
    }
    return dendrogram;
}

} // namespace castnet
