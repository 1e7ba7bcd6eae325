/*
 * metrics.cpp
 */

#include "castnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "castnet/errors.hpp"
#include "parallel.hpp"

namespace castnet {

namespace {

void require_vertex(const MultiGraph& g, Vertex v) {
    if (v >= g.order()) throw DataError("unknown vertex " + std::to_string(v));
}

// BFS distance sum from v plus the number of vertices reached (v included).
std::pair<std::uint64_t, std::size_t> distance_sum(const SimpleView& view, Vertex v) {
    std::vector<std::uint32_t> dist(view.order(), unreachable);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    std::uint64_t sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        sum += dist[x];
        for (Vertex y : view.neighbors(x)) {
            if (dist[y] == unreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return {sum, queue.size()};
}

// Returns (distance sum, divisor N) under the given disconnection policy.
std::pair<std::uint64_t, std::size_t> geodesic_terms(const MultiGraph& g, const SimpleView& view, Vertex v,
                                                     Disconnected policy) {
    require_vertex(g, v);
    auto [sum, reached] = distance_sum(view, v);
    if (reached != g.order() && policy == Disconnected::error) {
        throw DataError("graph is disconnected: '" + g.label(v) + "' reaches " + std::to_string(reached) +
                        " of " + std::to_string(g.order()) + " vertices");
    }
    return {sum, reached};
}

double closeness_from_terms(std::uint64_t sum, std::size_t n, ClosenessVariant variant) {
    if (sum == 0) throw DataError("closeness undefined: distance sum is zero");
    const double numerator = variant == ClosenessVariant::vertex_count ? double(n) : double(n - 1);
    return numerator / double(sum);
}

} // namespace

GeodesicTable geodesics(const SimpleView& view, Vertex source) {
    const std::size_t n = view.order();
    if (source >= n) throw DataError("unknown vertex " + std::to_string(source));
    GeodesicTable t;
    t.source = source;
    t.dist.assign(n, unreachable);
    t.sigma.assign(n, 0.0);
    t.predecessors.assign(n, {});
    t.order.reserve(n);
    t.dist[source] = 0;
    t.sigma[source] = 1.0;
    t.order.push_back(source);
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        const Vertex v = t.order[head];
        for (Vertex w : view.neighbors(v)) {
            if (t.dist[w] == unreachable) {
                t.dist[w] = t.dist[v] + 1;
                t.order.push_back(w);
            }
            if (t.dist[w] == t.dist[v] + 1) {
                t.sigma[w] += t.sigma[v];
                t.predecessors[w].push_back(v);
            }
        }
    }
    return t;
}

GeodesicTable geodesics(const MultiGraph& g, Vertex source) {
    return geodesics(SimpleView(g), source);
}

double mean_geodesic(const MultiGraph& g, Vertex v, Disconnected policy) {
    const SimpleView view(g);
    auto [sum, n] = geodesic_terms(g, view, v, policy);
    return double(sum) / double(n);
}

double closeness(const MultiGraph& g, Vertex v, ClosenessVariant variant, Disconnected policy) {
    const SimpleView view(g);
    auto [sum, n] = geodesic_terms(g, view, v, policy);
    return closeness_from_terms(sum, n, variant);
}

VertexScores closeness_scores(const MultiGraph& g, ClosenessVariant variant, Disconnected policy) {
    const SimpleView view(g);
    VertexScores scores{"closeness", std::vector<double>(g.order()), false};
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [sum, n] = geodesic_terms(g, view, v, policy);
        scores.values[v] = closeness_from_terms(sum, n, variant);
    }
    return scores;
}

VertexScores betweenness_scores(const MultiGraph& g, bool normalized, unsigned threads) {
    const std::size_t n = g.order();
    if (normalized && n < 3) throw DataError("normalized betweenness needs at least 3 vertices");
    const SimpleView view(g);
    auto total = detail::reduce_sources(n, n, threads, [&](std::size_t s, std::vector<double>& acc) {
        const GeodesicTable t = geodesics(view, static_cast<Vertex>(s));
        std::vector<double> delta(n, 0.0);
        for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
            const Vertex w = *it;
            const double share = (1.0 + delta[w]) / t.sigma[w];
            for (Vertex v : t.predecessors[w]) delta[v] += t.sigma[v] * share;
            if (w != s) acc[w] += delta[w];
        }
    });
    VertexScores scores{"betweenness", std::move(total), normalized};
    // Each unordered pair was visited from both ends.
    const double scale = normalized ? 0.5 / (double(n - 1) * double(n - 2) / 2.0) : 0.5;
    for (double& b : scores.values) b *= scale;
    return scores;
}

double betweenness(const MultiGraph& g, Vertex v, bool normalized) {
    require_vertex(g, v);
    return betweenness_scores(g, normalized).values[v];
}

double normalized_degree(const MultiGraph& g, Vertex v) {
    require_vertex(g, v);
    if (g.order() < 2) throw DataError("normalized degree needs at least 2 vertices");
    return double(g.degree(v)) / double(g.order() - 1);
}

VertexScores degree_scores(const MultiGraph& g, bool normalized) {
    if (normalized && g.order() < 2) throw DataError("normalized degree needs at least 2 vertices");
    VertexScores scores{"degree", std::vector<double>(g.order()), normalized};
    for (Vertex v = 0; v < g.order(); ++v) {
        scores.values[v] = normalized ? normalized_degree(g, v) : double(g.degree(v));
    }
    return scores;
}

std::uint32_t diameter(const MultiGraph& g, Disconnected policy) {
    const SimpleView view(g);
    std::uint32_t best = 0;
    std::vector<std::uint32_t> dist(g.order());
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), unreachable);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            best = std::max(best, dist[v]);
            for (Vertex w : view.neighbors(v)) {
                if (dist[w] == unreachable) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (queue.size() != g.order() && policy == Disconnected::error) {
            throw DataError("diameter: graph is disconnected");
        }
    }
    return best;
}

double clustering_coefficient(const MultiGraph& g, ClusteringVariant variant) {
    const SimpleView view(g);
    const std::size_t n = view.order();
    // Triangles through each vertex, counted once per vertex.
    std::vector<std::uint64_t> tri(n, 0);
    std::vector<char> mark(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : view.neighbors(u)) mark[v] = 1;
        for (Vertex v : view.neighbors(u)) {
            if (v <= u) continue;
            for (Vertex w : view.neighbors(v)) {
                if (w > v && mark[w]) {
                    ++tri[u];
                    ++tri[v];
                    ++tri[w];
                }
            }
        }
        for (Vertex v : view.neighbors(u)) mark[v] = 0;
    }
    if (variant == ClusteringVariant::transitivity) {
        std::uint64_t triangles3 = 0, triples = 0;
        for (Vertex v = 0; v < n; ++v) {
            const std::uint64_t d = view.degree(v);
            if (d >= 2) triples += d * (d - 1) / 2;
            triangles3 += tri[v];
        }
        return triples == 0 ? 0.0 : double(triangles3) / double(triples);
    }
    double sum = 0.0;
    std::size_t counted = 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t d = view.degree(v);
        if (d < 2) continue;
        sum += double(tri[v]) / (double(d) * double(d - 1) / 2.0);
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / double(counted);
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const SimpleView& view) : view_(view) {}

    std::size_t run() {
        const std::size_t n = view_.order();
        if (n == 0) return 0;
        best_ = 1;
        const auto order = degeneracy_order();
        std::vector<std::size_t> rank(n);
        for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
        for (Vertex v : order) {
            std::vector<Vertex> candidates;
            for (Vertex w : view_.neighbors(v)) {
                if (rank[w] > rank[v]) candidates.push_back(w);
            }
            std::sort(candidates.begin(), candidates.end());
            expand(1, candidates);
        }
        return best_;
    }

private:
    std::vector<Vertex> degeneracy_order() const {
        const std::size_t n = view_.order();
        std::vector<std::size_t> deg(n);
        std::size_t max_deg = 0;
        for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = view_.degree(v));
        std::vector<std::vector<Vertex>> buckets(max_deg + 1);
        for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
        std::vector<char> done(n, 0);
        std::vector<Vertex> order;
        order.reserve(n);
        std::size_t d = 0;
        while (order.size() < n) {
            d = 0;
            while (buckets[d].empty()) ++d;
            const Vertex v = buckets[d].back();
            buckets[d].pop_back();
            if (done[v] || deg[v] != d) continue;
            done[v] = 1;
            order.push_back(v);
            for (Vertex w : view_.neighbors(v)) {
                if (!done[w]) buckets[--deg[w]].push_back(w);
            }
        }
        return order;
    }

    std::vector<Vertex> intersect(const std::vector<Vertex>& set, Vertex v) const {
        std::vector<Vertex> out;
        auto nb = view_.neighbors(v);
        std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
        return out;
    }

    // `p` is sorted; every vertex in it is adjacent to all clique members.
    void expand(std::size_t size, std::vector<Vertex> p) {
        if (p.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + p.size() <= best_) return;
        Vertex pivot = p.front();
        std::size_t pivot_links = 0;
        for (Vertex u : p) {
            const std::size_t links = intersect(p, u).size();
            if (links > pivot_links) {
                pivot_links = links;
                pivot = u;
            }
        }
        std::vector<Vertex> branch;
        for (Vertex v : p) {
            if (!view_.adjacent(pivot, v)) branch.push_back(v);
        }
        for (Vertex v : branch) {
            if (size + p.size() <= best_) return;
            expand(size + 1, intersect(p, v));
            p.erase(std::lower_bound(p.begin(), p.end(), v));
        }
    }

    const SimpleView& view_;
    std::size_t best_ = 0;
};

} // namespace

std::size_t clique_number(const MultiGraph& g) {
    const SimpleView view(g);
    return CliqueSearch(view).run();
}

double degree_assortativity(const MultiGraph& g) {
    std::vector<double> k(g.order());
    for (Vertex v = 0; v < g.order(); ++v) k[v] = double(g.degree(v));
    double weight = 0.0, xy = 0.0, x = 0.0, x2 = 0.0;
    g.for_each_edge([&](Vertex u, Vertex v, Count w) {
        const double m = double(w);
        weight += 2.0 * m;
        xy += 2.0 * m * k[u] * k[v];
        x += m * (k[u] + k[v]);
        x2 += m * (k[u] * k[u] + k[v] * k[v]);
    });
    if (g.edge_total() < 2) throw DataError("assortativity needs at least 2 edges");
    const double mean = x / weight;
    const double var = x2 / weight - mean * mean;
    if (!(var > 1e-12 * std::max(1.0, mean * mean))) {
        throw DataError("assortativity undefined: endpoint degrees have zero variance");
    }
    return (xy / weight - mean * mean) / var;
}

VertexScores eigenvector_centrality(const MultiGraph& g, const EigenvectorOptions& options) {
    const SimpleView view(g);
    const auto comp = connected_components(view);
    const std::size_t components = g.order() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    if (components > 1 && options.policy == Disconnected::error) {
        throw DataError("eigenvector centrality: graph has " + std::to_string(components) + " components");
    }
    std::vector<std::vector<Vertex>> members(components);
    for (Vertex v = 0; v < g.order(); ++v) members[comp[v]].push_back(v);

    VertexScores scores{"eigenvector", std::vector<double>(g.order(), 0.0), true};
    std::vector<double> next(g.order(), 0.0);
    for (const auto& part : members) {
        auto& x = scores.values;
        for (Vertex v : part) x[v] = 1.0;
        bool converged = false;
        // (A + I) shares A's eigenvectors and has a unique dominant eigenvalue
        // on bipartite components too.
        for (int iter = 0; iter < options.max_iterations; ++iter) {
            double peak = 0.0;
            for (Vertex v : part) {
                double s = x[v];
                for (const auto& [u, w] : g.neighbors(v)) s += double(w) * x[u];
                next[v] = s;
                peak = std::max(peak, s);
            }
            double change = 0.0;
            for (Vertex v : part) {
                const double y = next[v] / peak;
                change = std::max(change, std::abs(y - x[v]));
                x[v] = y;
            }
            if (change < options.tolerance) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw ConvergenceError("eigenvector centrality did not converge in " +
                                   std::to_string(options.max_iterations) + " iterations");
        }
    }
    return scores;
}

std::vector<double> degree_histogram(const MultiGraph& g, std::span<const Count> bounds) {
    if (std::adjacent_find(bounds.begin(), bounds.end(), std::greater_equal<>()) != bounds.end()) {
        throw UsageError("degree histogram bounds must be strictly increasing");
    }
    std::vector<double> fractions(bounds.size() + 1, 0.0);
    if (g.order() == 0) return fractions;
    for (Vertex v = 0; v < g.order(); ++v) {
        const Count d = g.degree(v);
        const auto bucket = std::upper_bound(bounds.begin(), bounds.end(), d) - bounds.begin();
        fractions[bucket] += 1.0;
    }
    for (double& f : fractions) f /= double(g.order());
    return fractions;
}

} // namespace castnet
