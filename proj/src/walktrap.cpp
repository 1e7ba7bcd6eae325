/*
 * walktrap.cpp
 *
 * Pons-Latapy agglomeration. Each community C carries the distribution
 * P^t_C. of a t-step random walk started uniformly inside it; merging the
 * adjacent pair with the smallest
 *   dsigma(C1, C2) = (1/n) |C1||C2| / (|C1| + |C2|) * sum_k (P_C1k - P_C2k)^2 / d(k)
 * keeps the within-community walk distance growth minimal.
 */

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "castnet/community.hpp"
#include "castnet/errors.hpp"

namespace castnet {

namespace {

struct Community {
    std::vector<Vertex> members;
    std::vector<double> walk;           // P^t_C., dense over vertices
    std::map<std::uint32_t, double> cost;  // adjacent community -> dsigma
    bool alive = false;
};

class Walktrap {
public:
    Walktrap(const MultiGraph& g, int walk_length) : g_(g), n_(g.order()) {
        // Loop weight = mean incident multiplicity (1 for isolated vertices).
        loop_.resize(n_);
        strength_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            const double deg = double(g.degree(v));
            const std::size_t links = g.simple_degree(v);
            loop_[v] = links == 0 ? 1.0 : deg / double(links);
            strength_[v] = deg + loop_[v];
        }
        communities_.resize(2 * n_);
        for (Vertex v = 0; v < n_; ++v) {
            auto& c = communities_[v];
            c.members = {v};
            c.walk.assign(n_, 0.0);
            c.walk[v] = 1.0;
            for (int step = 0; step < walk_length; ++step) c.walk = step_walk(c.walk);
            c.alive = true;
        }
        for (Vertex v = 0; v < n_; ++v) {
            for (const auto& [u, _] : g.neighbors(v)) {
                if (u > v) link(v, u, distance(v, u));
            }
        }
        next_id_ = static_cast<std::uint32_t>(n_);
    }

    Dendrogram run() {
        Dendrogram d;
        std::vector<std::size_t> label(n_);
        for (Vertex v = 0; v < n_; ++v) label[v] = v;
        auto record = [&] {
            Partition p(label);
            const double q = modularity(g_, p);
            d.levels.push_back({std::move(p), q});
        };
        record();
        while (!queue_.empty()) {
            const auto [cost, a, b] = *queue_.begin();
            const std::uint32_t c = merge(a, b);
            for (Vertex v : communities_[c].members) label[v] = c;
            record();
        }
        return d;
    }

private:
    std::vector<double> step_walk(const std::vector<double>& p) const {
        std::vector<double> out(n_, 0.0);
        for (Vertex v = 0; v < n_; ++v) {
            if (p[v] == 0.0) continue;
            const double share = p[v] / strength_[v];
            out[v] += share * loop_[v];
            for (const auto& [u, w] : g_.neighbors(v)) out[u] += share * double(w);
        }
        return out;
    }

    double distance(std::uint32_t a, std::uint32_t b) const {
        const auto& ca = communities_[a];
        const auto& cb = communities_[b];
        double r2 = 0.0;
        for (Vertex k = 0; k < n_; ++k) {
            const double diff = ca.walk[k] - cb.walk[k];
            r2 += diff * diff / strength_[k];
        }
        const double na = double(ca.members.size()), nb = double(cb.members.size());
        return na * nb / (na + nb) * r2 / double(n_);
    }

    void link(std::uint32_t a, std::uint32_t b, double cost) {
        communities_[a].cost[b] = cost;
        communities_[b].cost[a] = cost;
        queue_.emplace(cost, std::min(a, b), std::max(a, b));
    }

    void unlink(std::uint32_t a, std::uint32_t b) {
        auto& ca = communities_[a];
        auto it = ca.cost.find(b);
        queue_.erase({it->second, std::min(a, b), std::max(a, b)});
        ca.cost.erase(it);
        communities_[b].cost.erase(a);
    }

    std::uint32_t merge(std::uint32_t a, std::uint32_t b) {
        const std::uint32_t c = next_id_++;
        auto& ca = communities_[a];
        auto& cb = communities_[b];
        auto& cc = communities_[c];
        const double na = double(ca.members.size()), nb = double(cb.members.size());
        cc.members = ca.members;
        cc.members.insert(cc.members.end(), cb.members.begin(), cb.members.end());
        cc.walk.resize(n_);
        for (Vertex k = 0; k < n_; ++k) cc.walk[k] = (na * ca.walk[k] + nb * cb.walk[k]) / (na + nb);
        cc.alive = true;

        std::set<std::uint32_t> around;
        for (const auto& [x, _] : ca.cost) around.insert(x);
        for (const auto& [x, _] : cb.cost) around.insert(x);
        around.erase(a);
        around.erase(b);
        unlink(a, b);
        for (std::uint32_t x : around) {
            if (ca.cost.contains(x)) unlink(a, x);
            if (cb.cost.contains(x)) unlink(b, x);
        }
        for (std::uint32_t x : around) link(c, x, distance(c, x));

        ca = Community{};
        cb = Community{};
        return c;
    }

    const MultiGraph& g_;
    std::size_t n_;
    std::vector<double> loop_;
    std::vector<double> strength_;
    std::vector<Community> communities_;
    std::set<std::tuple<double, std::uint32_t, std::uint32_t>> queue_;
    std::uint32_t next_id_ = 0;
};

} // namespace

Dendrogram walktrap(const MultiGraph& g, int walk_length) {
    if (g.edge_total() == 0) throw DataError("walktrap: graph has no edges");
    if (walk_length < 1) throw UsageError("walk length must be at least 1");
    return Walktrap(g, walk_length).run();
}

} // namespace castnet
