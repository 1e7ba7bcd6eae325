/*
 * community_test.cpp
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "castnet/community.hpp"
#include "castnet/compare.hpp"
#include "castnet/errors.hpp"
#include "castnet/metrics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace castnet {

namespace {

Partition labels(std::vector<std::size_t> l) { return Partition(l); }

bool contiguous(const Partition& p) {
    std::vector<bool> seen(p.community_count(), false);
    for (Vertex v = 0; v < p.size(); ++v) {
        if (p.community(v) >= p.community_count()) return false;
        seen[p.community(v)] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Every community induces a connected subgraph.
bool communities_connected(const MultiGraph& g, const Partition& p) {
    return split_disconnected(g, p).community_count() == p.community_count();
}

// Every community lies inside one connected component.
bool within_components(const MultiGraph& g, const Partition& p) {
    const auto comp = connected_components(SimpleView(g));
    const auto groups = p.communities();
    for (const auto& members : groups)
        for (Vertex v : members)
            if (comp[v] != comp[members.front()]) return false;
    return true;
}

bool refines(const Partition& fine, const Partition& coarse) {
    std::vector<std::int64_t> parent(fine.community_count(), -1);
    for (Vertex v = 0; v < fine.size(); ++v) {
        auto& slot = parent[fine.community(v)];
        if (slot == -1) slot = coarse.community(v);
        else if (slot != static_cast<std::int64_t>(coarse.community(v))) return false;
    }
    return true;
}

std::vector<MultiGraph> small_fixtures() {
    std::vector<MultiGraph> out;
    for (Seed seed = 1; seed <= 12; ++seed) out.push_back(fixtures::random_graph(20 + seed, 0.15, 4, seed));
    for (Seed seed = 1; seed <= 6; ++seed) out.push_back(fixtures::planted(4, 10, 0.5, 0.05, 3, seed));
    out.push_back(fixtures::barbell(5));
    out.push_back(fixtures::disjoint_cliques(3, 4));
    out.push_back(fixtures::cycle(12));
    out.push_back(fixtures::star(9));
    return out;
}

} // namespace

TEST(ModularityTest, smallCases) {
    const MultiGraph g = fixtures::random_graph(15, 0.3, 3, 2);
    EXPECT_NEAR(modularity(g, Partition::single(15)), 0.0, 1e-12);
    EXPECT_LT(modularity(g, Partition::singletons(15)), 0.0);
    const MultiGraph two = fixtures::disjoint_cliques(2, 3);
    EXPECT_DOUBLE_EQ(modularity(two, labels({0, 0, 0, 1, 1, 1})), 0.5);
}

TEST(ModularityTest, errors) {
    EXPECT_THROW(modularity(fixtures::empty_graph(3), Partition::single(3)), DataError);
    EXPECT_THROW(modularity(fixtures::path(3), Partition::single(2)), DataError);
}

TEST(ModularityTest, matchesDoubleSumAndBounds) {
    Rng rng(3);
    for (Seed seed = 1; seed <= 30; ++seed) {
        const MultiGraph g = fixtures::random_graph(18, 0.25, 5, seed);
        if (g.edge_total() == 0) continue;
        std::vector<std::size_t> l(18);
        for (auto& x : l) x = rng.below(1 + seed % 6);
        const Partition p(l);
        const double q = modularity(g, p);
        EXPECT_NEAR(q, oracle::modularity(g, p), 1e-12);
        EXPECT_GE(q, -0.5 - 1e-12);
        EXPECT_LE(q, 1.0);
    }
}

TEST(MultilevelTest, disjointCliques) {
    const Partition p = multilevel(fixtures::disjoint_cliques(2, 5), 1);
    EXPECT_EQ(p, labels({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
}

TEST(MultilevelTest, localOptimumAndConnected) {
    for (const MultiGraph& g : small_fixtures()) {
        for (Seed seed : {1u, 7u}) {
            const Partition p = multilevel(g, seed);
            ASSERT_EQ(p.size(), g.order());
            EXPECT_TRUE(contiguous(p));
            EXPECT_TRUE(communities_connected(g, p));
            const double q = modularity(g, p);
            // No single vertex move (to any existing or a fresh community) raises Q.
            std::vector<std::size_t> l(p.size());
            for (Vertex v = 0; v < p.size(); ++v) l[v] = p.community(v);
            for (Vertex v = 0; v < p.size(); ++v) {
                const std::size_t own = l[v];
                for (std::size_t c = 0; c <= p.community_count(); ++c) {
                    if (c == own) continue;
                    l[v] = c;
                    EXPECT_LE(modularity(g, Partition(l)), q + 1e-12);
                }
                l[v] = own;
            }
        }
    }
}

TEST(MultilevelTest, levelsNonDecreasing) {
    for (const MultiGraph& g : small_fixtures()) {
        const Dendrogram d = multilevel_levels(g, 3);
        ASSERT_FALSE(d.levels.empty());
        for (std::size_t i = 1; i < d.levels.size(); ++i)
            EXPECT_GE(d.levels[i].modularity, d.levels[i - 1].modularity - 1e-12);
        for (const auto& level : d.levels) EXPECT_NEAR(level.modularity, modularity(g, level.partition), 1e-12);
        EXPECT_EQ(d.best(), multilevel(g, 3));
    }
}

TEST(MultilevelTest, deterministic) {
    const MultiGraph g = fixtures::planted(5, 20, 0.3, 0.03, 4, 9);
    EXPECT_EQ(multilevel(g, 42), multilevel(g, 42));
}

TEST(MultilevelTest, recoversPlanted) {
    const MultiGraph g = fixtures::planted(4, 15, 0.7, 0.01, 2, 4);
    std::vector<std::size_t> truth(60);
    for (std::size_t i = 0; i < 60; ++i) truth[i] = i / 15;
    EXPECT_GT(nmi(multilevel(g, 1), Partition(truth)), 0.9);
}

TEST(LabelPropagationTest, disjointCliques) {
    for (Seed seed = 0; seed < 10; ++seed)
        EXPECT_EQ(label_propagation(fixtures::disjoint_cliques(2, 5), seed),
                  labels({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
}

TEST(LabelPropagationTest, terminationState) {
    for (const MultiGraph& g : small_fixtures()) {
        for (Seed seed : {2u, 5u, 11u}) {
            const Partition p = label_propagation(g, seed);
            EXPECT_TRUE(contiguous(p));
            EXPECT_TRUE(communities_connected(g, p));
            for (Vertex v = 0; v < g.order(); ++v) {
                std::map<CommunityId, Count> support;
                for (const auto& [u, m] : g.neighbors(v)) support[p.community(u)] += m;
                Count best = 0;
                for (const auto& [_, s] : support) best = std::max(best, s);
                const Count own = support.contains(p.community(v)) ? support[p.community(v)] : 0;
                EXPECT_EQ(own, best) << "vertex " << v;
            }
        }
    }
}

TEST(LabelPropagationTest, deterministic) {
    const MultiGraph g = fixtures::planted(5, 20, 0.3, 0.03, 4, 9);
    EXPECT_EQ(label_propagation(g, 8), label_propagation(g, 8));
}

TEST(LabelPropagationTest, sweepCap) {
    EXPECT_THROW(label_propagation(fixtures::planted(4, 20, 0.3, 0.1, 3, 1), 1, 0), ConvergenceError);
}

TEST(GirvanNewmanTest, barbell) {
    const MultiGraph g = fixtures::barbell(4);
    const Dendrogram d = girvan_newman(g);
    ASSERT_GE(d.levels.size(), 2u);
    EXPECT_EQ(d.levels[0].partition, Partition::single(8));
    EXPECT_EQ(d.levels[1].partition, labels({0, 0, 0, 0, 1, 1, 1, 1}));
    EXPECT_EQ(d.best(), labels({0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(GirvanNewmanTest, pairSplits) {
    const Dendrogram d = girvan_newman(fixtures::path(2));
    ASSERT_EQ(d.levels.size(), 2u);
    EXPECT_EQ(d.levels[1].partition, Partition::singletons(2));
}

TEST(GirvanNewmanTest, refinementAndContainment) {
    for (const MultiGraph& g : small_fixtures()) {
        const Dendrogram d = girvan_newman(g);
        ASSERT_FALSE(d.levels.empty());
        EXPECT_EQ(d.levels.back().partition, Partition::singletons(g.order()));
        for (std::size_t i = 0; i < d.levels.size(); ++i) {
            const Partition& p = d.levels[i].partition;
            EXPECT_TRUE(contiguous(p));
            EXPECT_TRUE(within_components(g, p));
            if (i > 0) {
                EXPECT_TRUE(refines(p, d.levels[i - 1].partition));
                EXPECT_GT(p.community_count(), d.levels[i - 1].partition.community_count());
            }
        }
    }
}

TEST(GirvanNewmanTest, maxLevels) {
    const Dendrogram d = girvan_newman(fixtures::planted(3, 8, 0.6, 0.1, 2, 3), 3);
    EXPECT_EQ(d.levels.size(), 3u);
}

TEST(GirvanNewmanTest, threadCountIndependent) {
    const MultiGraph g = fixtures::planted(3, 15, 0.4, 0.05, 3, 6);
    const Dendrogram one = girvan_newman(g, std::nullopt, 1);
    const Dendrogram four = girvan_newman(g, std::nullopt, 4);
    ASSERT_EQ(one.levels.size(), four.levels.size());
    for (std::size_t i = 0; i < one.levels.size(); ++i) {
        EXPECT_EQ(one.levels[i].partition, four.levels[i].partition);
        EXPECT_EQ(one.levels[i].modularity, four.levels[i].modularity);
    }
}

TEST(LeadingEigenvectorTest, smallCases) {
    EXPECT_EQ(leading_eigenvector(fixtures::disjoint_cliques(2, 4)), labels({0, 0, 0, 0, 1, 1, 1, 1}));
    for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(leading_eigenvector(fixtures::complete(n)), Partition::single(n));
}

TEST(LeadingEigenvectorTest, improvesOnSingle) {
    for (const MultiGraph& g : small_fixtures()) {
        const Partition p = leading_eigenvector(g);
        EXPECT_TRUE(contiguous(p));
        EXPECT_GE(modularity(g, p), -1e-12);
    }
}

TEST(LeadingEigenvectorTest, recoversPlanted) {
    const MultiGraph g = fixtures::planted(4, 15, 0.7, 0.01, 2, 4);
    std::vector<std::size_t> truth(60);
    for (std::size_t i = 0; i < 60; ++i) truth[i] = i / 15;
    EXPECT_GT(nmi(leading_eigenvector(g), Partition(truth)), 0.8);
}

// A heavy core with many light satellites: a large negative eigenvalue and
// a small gap at the top of the spectrum.
TEST(LeadingEigenvectorTest, heavyCoreConverges) {
    MultiGraph g = fixtures::complete(6);
    g.for_each_edge([&](Vertex u, Vertex v, Count) { g.add_edge(u, v, 400); });
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::string guest = "guest" + std::to_string(i);
        g.add_interaction(guest, fixtures::vertex_name(rng.below(6)));
        if (i > 0 && rng.uniform() < 0.5) g.add_interaction(guest, "guest" + std::to_string(i - 1));
    }
    const Partition p = leading_eigenvector(g);
    EXPECT_TRUE(contiguous(p));
    EXPECT_GE(modularity(g, p), 0.0);
    EXPECT_EQ(p, leading_eigenvector(g));
}

TEST(LeadingEigenvectorTest, iterationCap) {
    LeadingEigenvectorOptions options;
    options.max_iterations = 1;
    options.tolerance = 1e-300;
    EXPECT_THROW(leading_eigenvector(fixtures::planted(3, 10, 0.5, 0.1, 2, 2), options), ConvergenceError);
}

TEST(WalktrapTest, disjointCliques) {
    const Dendrogram d = walktrap(fixtures::disjoint_cliques(2, 5));
    EXPECT_EQ(d.best(), labels({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
    EXPECT_EQ(d.levels.front().partition, Partition::singletons(10));
}

TEST(WalktrapTest, deterministicAndContained) {
    for (const MultiGraph& g : small_fixtures()) {
        const Dendrogram a = walktrap(g);
        const Dendrogram b = walktrap(g);
        ASSERT_EQ(a.levels.size(), b.levels.size());
        EXPECT_EQ(a.best(), b.best());
        for (std::size_t i = 0; i < a.levels.size(); ++i) {
            EXPECT_TRUE(within_components(g, a.levels[i].partition));
            if (i > 0) EXPECT_TRUE(refines(a.levels[i - 1].partition, a.levels[i].partition));
        }
    }
}

TEST(WalktrapTest, recoversPlanted) {
    const MultiGraph g = fixtures::planted(4, 15, 0.7, 0.01, 2, 4);
    std::vector<std::size_t> truth(60);
    for (std::size_t i = 0; i < 60; ++i) truth[i] = i / 15;
    EXPECT_GT(nmi(walktrap(g).best(), Partition(truth)), 0.9);
    EXPECT_THROW(walktrap(g, 0), UsageError);
}

TEST(DetectTest, methodNames) {
    for (Method m : all_methods()) EXPECT_EQ(parse_method(method_name(m)), m);
    EXPECT_EQ(parse_method("WT"), Method::walktrap);
    EXPECT_EQ(parse_method("louvain"), Method::multilevel);
    EXPECT_THROW(parse_method("spinglass"), UsageError);
}

TEST(DetectTest, allMethodsCoverVertices) {
    const MultiGraph g = fixtures::planted(3, 12, 0.5, 0.05, 3, 12);
    DetectionOptions options;
    options.seed = 5;
    for (Method m : all_methods()) {
        const Partition p = detect(g, m, options);
        EXPECT_EQ(p.size(), g.order()) << method_name(m);
        EXPECT_TRUE(contiguous(p));
        EXPECT_EQ(p, detect(g, m, options));
    }
}

TEST(DetectTest, splitDisconnected) {
    const MultiGraph g = fixtures::disjoint_cliques(2, 3);
    EXPECT_EQ(split_disconnected(g, Partition::single(6)), labels({0, 0, 0, 1, 1, 1}));
}

} // namespace castnet
