/*
 * modularity.cpp
 *
 * Modularity, method registry and shared partition helpers.
 */

#include <algorithm>

#include "castnet/community.hpp"
#include "castnet/errors.hpp"

namespace castnet {

double modularity(const MultiGraph& g, const Partition& p) {
    if (p.size() != g.order()) throw DataError("partition does not cover the graph");
    if (g.edge_total() == 0) throw DataError("modularity undefined on a graph without edges");
    const double two_m = 2.0 * double(g.edge_total());
    std::vector<double> internal(p.community_count(), 0.0);
    std::vector<double> total(p.community_count(), 0.0);
    for (Vertex v = 0; v < g.order(); ++v) total[p.community(v)] += double(g.degree(v));
    g.for_each_edge([&](Vertex u, Vertex v, Count w) {
        if (p.community(u) == p.community(v)) internal[p.community(u)] += 2.0 * double(w);
    });
    double q = 0.0;
    for (std::size_t c = 0; c < internal.size(); ++c) {
        q += internal[c] / two_m - (total[c] / two_m) * (total[c] / two_m);
    }
    return q;
}

std::size_t Dendrogram::best_level() const {
    if (levels.empty()) throw DataError("empty dendrogram");
    std::size_t best = 0;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i].modularity > levels[best].modularity) best = i;
    }
    return best;
}

Partition split_disconnected(const MultiGraph& g, const Partition& p) {
    constexpr std::size_t unset = std::size_t(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto& [u, _] : g.neighbors(v)) {
                if (label[u] == unset && p.community(u) == p.community(v)) {
                    label[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return Partition(label);
}

std::string_view method_name(Method method) {
    switch (method) {
    case Method::multilevel: return "multilevel";
    case Method::label_propagation: return "label_propagation";
    case Method::girvan_newman: return "girvan_newman";
    case Method::leading_eigenvector: return "leading_eigenvector";
    case Method::walktrap: return "walktrap";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    struct Alias {
        std::string_view text;
        Method method;
    };
    static constexpr Alias aliases[] = {
        {"multilevel", Method::multilevel},
        {"louvain", Method::multilevel},
        {"ML", Method::multilevel},
        {"label_propagation", Method::label_propagation},
        {"LP", Method::label_propagation},
        {"girvan_newman", Method::girvan_newman},
        {"edge_betweenness", Method::girvan_newman},
        {"EB", Method::girvan_newman},
        {"leading_eigenvector", Method::leading_eigenvector},
        {"LE", Method::leading_eigenvector},
        {"walktrap", Method::walktrap},
        {"WT", Method::walktrap},
    };
    for (const auto& a : aliases) {
        if (a.text == name) return a.method;
    }
    throw UsageError("unknown community detection method '" + std::string(name) + "'");
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = {Method::multilevel, Method::label_propagation,
                                                Method::girvan_newman, Method::leading_eigenvector,
                                                Method::walktrap};
    return methods;
}

Partition detect(const MultiGraph& g, Method method, const DetectionOptions& options) {
    switch (method) {
    case Method::multilevel: return multilevel(g, options.seed);
    case Method::label_propagation: return label_propagation(g, options.seed);
    case Method::girvan_newman: return girvan_newman(g, std::nullopt, options.threads).best();
    case Method::leading_eigenvector: return leading_eigenvector(g, options.eigen);
    case Method::walktrap: return walktrap(g, options.walk_length).best();
    }
    throw UsageError("unknown method");
}

} // namespace castnet
