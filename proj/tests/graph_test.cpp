/*
 * graph_test.cpp
 */

#include <gtest/gtest.h>

#include "castnet/errors.hpp"
#include "castnet/graph.hpp"
#include "fixtures.hpp"

namespace castnet {

TEST(GraphTest, firstInteraction) {
    MultiGraph g;
    g.add_interaction("Ross", "Rachel");
    EXPECT_EQ(g.order(), 2u);
    EXPECT_EQ(g.edge_multiplicity("Ross", "Rachel"), 1u);
    EXPECT_EQ(g.edge_total(), 1u);
}

TEST(GraphTest, multiplicityAccumulates) {
    MultiGraph g;
    g.add_interaction("Ross", "Rachel");
    g.add_interaction("Rachel", "Ross");
    EXPECT_EQ(g.edge_multiplicity("Ross", "Rachel"), 2u);
    EXPECT_EQ(g.edge_multiplicity("Rachel", "Ross"), 2u);
    EXPECT_EQ(g.edge_total(), 2u);
    EXPECT_EQ(g.order(), 2u);
}

TEST(GraphTest, selfInteractionRejected) {
    MultiGraph g;
    EXPECT_THROW(g.add_interaction("Joey", "Joey"), DataError);
    EXPECT_THROW(g.add_interaction("Joey", "  Joey "), DataError);
    EXPECT_EQ(g.edge_total(), 0u);
}

TEST(GraphTest, nameNormalization) {
    EXPECT_EQ(normalize_name("  Mr.   Geller \t"), "Mr. Geller");
    EXPECT_EQ(normalize_name("ross"), "ross");
    MultiGraph g;
    g.add_interaction("Mr.  Geller", " Ross");
    EXPECT_EQ(g.edge_multiplicity("Mr. Geller", "Ross"), 1u);
    // Case sensitive.
    EXPECT_EQ(g.edge_multiplicity("mr. geller", "Ross"), 0u);
}

TEST(GraphTest, degreeCountsMultiplicity) {
    MultiGraph g;
    g.add_interaction("a", "b");
    g.add_interaction("a", "b");
    g.add_interaction("a", "c");
    g.add_vertex("lonely");
    EXPECT_EQ(g.degree("a"), 3u);
    EXPECT_EQ(g.degree("lonely"), 0u);
    EXPECT_THROW(g.degree("nobody"), DataError);
    EXPECT_THROW(g.degree(Vertex(99)), DataError);
}

TEST(GraphTest, edgeMultiplicityEdgeCases) {
    MultiGraph g;
    g.add_interaction("a", "b");
    EXPECT_EQ(g.edge_multiplicity("a", "a"), 0u);
    EXPECT_EQ(g.edge_multiplicity("a", "zzz"), 0u);
}

TEST(GraphTest, mergeEmptyList) {
    const MultiGraph g = merge(std::vector<MultiGraph>{});
    EXPECT_EQ(g.order(), 0u);
    EXPECT_EQ(g.edge_total(), 0u);
}

TEST(GraphTest, selfMergeDoubles) {
    const MultiGraph g = fixtures::random_graph(12, 0.4, 3, 7);
    const MultiGraph twice = merge(std::vector<MultiGraph>{g, g});
    ASSERT_EQ(twice.order(), g.order());
    EXPECT_EQ(twice.edge_total(), 2 * g.edge_total());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            EXPECT_EQ(twice.edge_multiplicity(g.label(u), g.label(v)), 2 * g.multiplicity(u, v));
}

TEST(GraphTest, mergeByNameAcrossTables) {
    MultiGraph a, b;
    a.add_interaction("x", "y");
    b.add_interaction("y", "z");
    b.add_interaction("x", "y");
    const MultiGraph m = merge(std::vector<MultiGraph>{a, b});
    EXPECT_EQ(m.order(), 3u);
    EXPECT_EQ(m.edge_multiplicity("x", "y"), 2u);
    EXPECT_EQ(m.edge_multiplicity("y", "z"), 1u);
}

// Invariants over random multigraphs: symmetry, handshake, additivity of
// merge, simple-view degree bound.
TEST(GraphTest, randomInvariants) {
    for (Seed seed = 1; seed <= 30; ++seed) {
        const MultiGraph a = fixtures::random_graph(10, 0.35, 4, seed);
        const MultiGraph b = fixtures::random_graph(13, 0.25, 2, seed + 1000);
        Count degree_sum = 0;
        for (Vertex u = 0; u < a.order(); ++u) {
            degree_sum += a.degree(u);
            for (Vertex v = 0; v < a.order(); ++v) EXPECT_EQ(a.multiplicity(u, v), a.multiplicity(v, u));
        }
        EXPECT_EQ(degree_sum, 2 * a.edge_total());

        const MultiGraph ab = merge(std::vector<MultiGraph>{a, b});
        const MultiGraph ba = merge(std::vector<MultiGraph>{b, a});
        EXPECT_EQ(ab.order(), 13u);
        EXPECT_EQ(ab.edge_total(), a.edge_total() + b.edge_total());
        for (Vertex u = 0; u < ab.order(); ++u) {
            const auto& name = ab.label(u);
            const Count da = a.find(name) ? a.degree(name) : 0;
            const Count db = b.find(name) ? b.degree(name) : 0;
            EXPECT_EQ(ab.degree(u), da + db);
            EXPECT_EQ(ba.degree(name), ab.degree(u));
            for (Vertex v = 0; v < ab.order(); ++v) {
                const auto& other = ab.label(v);
                EXPECT_EQ(ab.multiplicity(u, v), a.edge_multiplicity(name, other) + b.edge_multiplicity(name, other));
                EXPECT_EQ(ba.edge_multiplicity(name, other), ab.multiplicity(u, v));
            }
        }

        const SimpleView view(a);
        EXPECT_EQ(view.order(), a.order());
        for (Vertex v = 0; v < a.order(); ++v) {
            EXPECT_LE(view.degree(v), a.degree(v));
            bool all_single = true;
            for (const auto& [_, w] : a.neighbors(v)) all_single = all_single && w == 1;
            EXPECT_EQ(view.degree(v) == a.degree(v), all_single);
            for (Vertex u = 0; u < a.order(); ++u) EXPECT_EQ(view.adjacent(u, v), a.multiplicity(u, v) >= 1);
        }
    }
}

TEST(GraphTest, mergeIsAssociative) {
    const MultiGraph a = fixtures::random_graph(8, 0.4, 3, 1);
    const MultiGraph b = fixtures::random_graph(9, 0.4, 3, 2);
    const MultiGraph c = fixtures::random_graph(7, 0.4, 3, 3);
    const MultiGraph left = merge(std::vector<MultiGraph>{merge(std::vector<MultiGraph>{a, b}), c});
    const MultiGraph right = merge(std::vector<MultiGraph>{a, merge(std::vector<MultiGraph>{b, c})});
    ASSERT_EQ(left.order(), right.order());
    for (Vertex u = 0; u < left.order(); ++u)
        for (Vertex v = 0; v < left.order(); ++v)
            EXPECT_EQ(left.multiplicity(u, v), right.edge_multiplicity(left.label(u), left.label(v)));
}

TEST(GraphTest, partitionRenumbers) {
    const Partition p(std::vector<std::size_t>{7, 7, 3, 9, 3});
    EXPECT_EQ(p.community_count(), 3u);
    EXPECT_EQ(p.community(0), 0u);
    EXPECT_EQ(p.community(2), 1u);
    EXPECT_EQ(p.community(3), 2u);
    EXPECT_EQ(p.communities()[1], (std::vector<Vertex>{2, 4}));
}

TEST(GraphTest, connectedComponents) {
    const MultiGraph g = fixtures::disjoint_cliques(3, 3);
    const auto comp = connected_components(SimpleView(g));
    EXPECT_EQ(comp, (std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1, 2, 2, 2}));
}

} // namespace castnet
