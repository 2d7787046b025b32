#include "lpcent/centrality.hpp"
#include "lpcent/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lpcent;

namespace {

/// Betweenness from path counts: sigma_st(v) = sigma_sv sigma_vt when v
/// lies on a shortest s-t path. Unweighted graphs only.
Eigen::VectorXd betweenness_by_path_counts(const Graph& g)
{
    const auto n = static_cast<Eigen::Index>(g.size());
    const Eigen::MatrixXd d = shortest_path_distances(g);
    // sigma(s, t) by dynamic programming over distance layers.
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index s = 0; s < n; ++s) {
        sigma(s, s) = 1.0;
        for (int layer = 1; layer < n; ++layer)
            for (Eigen::Index t = 0; t < n; ++t) {
                if (d(s, t) != layer) continue;
                for (const auto& nb : g.neighbors(static_cast<NodeId>(t)))
                    if (d(s, static_cast<Eigen::Index>(nb.node)) == layer - 1)
                        sigma(s, t) += sigma(s, static_cast<Eigen::Index>(nb.node));
            }
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (Eigen::Index v = 0; v < n; ++v)
        for (Eigen::Index s = 0; s < n; ++s)
            for (Eigen::Index t = s + 1; t < n; ++t) {
                if (v == s || v == t || d(s, v) + d(v, t) != d(s, t)) continue;
                out(v) += sigma(s, v) * sigma(v, t) / sigma(s, t);
            }
    return out;
}

}  // namespace

TEST(Closeness, PathAndStar)
{
    const auto p = geodesic_closeness(path_graph(3));
    EXPECT_DOUBLE_EQ(p(0), 2.0 / 3);
    EXPECT_DOUBLE_EQ(p(1), 1.0);
    const auto s = geodesic_closeness(star_graph(5));
    EXPECT_DOUBLE_EQ(s(0), 1.0);
    EXPECT_DOUBLE_EQ(s(1), 4.0 / 7);
}

TEST(Betweenness, HandValues)
{
    const auto p = geodesic_betweenness(path_graph(3));
    EXPECT_DOUBLE_EQ(p(0), 0.0);
    EXPECT_DOUBLE_EQ(p(1), 1.0);
    EXPECT_DOUBLE_EQ(geodesic_betweenness(star_graph(4))(0), 3.0);
    const auto c = geodesic_betweenness(cycle_graph(4));
    for (Eigen::Index i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(c(i), 0.5);
    EXPECT_DOUBLE_EQ(geodesic_betweenness(complete_graph(5)).maxCoeff(), 0.0);
}

TEST(Betweenness, MatchesPathCountingOnRandomGraphs)
{
    SplitMix64 rng(41);
    for (int r = 0; r < 30; ++r) {
        const Graph g = random_connected_graph(4 + rng.below(9), 0.3, rng);
        EXPECT_LE((geodesic_betweenness(g) - betweenness_by_path_counts(g)).cwiseAbs().maxCoeff(), 1e-9)
            << to_edge_list(g);
    }
}

TEST(Betweenness, WeightedUsesInverseWeightLengths)
{
    // Heavy edges are short: 0-2 directly has length 1, via 1 has 0.25 + 0.25.
    const Graph g(3, {{0, 1, 4.0}, {1, 2, 4.0}, {0, 2, 1.0}});
    EXPECT_DOUBLE_EQ(geodesic_betweenness(g)(1), 1.0);
    EXPECT_DOUBLE_EQ(geodesic_closeness(g)(0), 2.0 / 0.75);
}

TEST(Subgraph, ClosedForms)
{
    const double e = std::exp(1.0);
    const auto k3 = subgraph_centrality(complete_graph(3));
    for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(k3(i), (e * e + 2.0 / e) / 3.0, 1e-12);
    const auto p3 = subgraph_centrality(path_graph(3));
    EXPECT_NEAR(p3(1), std::cosh(std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(p3(0), std::cosh(std::sqrt(2.0)) / 2.0 + 0.5, 1e-12);
    EXPECT_NEAR(subgraph_centrality(path_graph(2))(0), std::cosh(1.0), 1e-12);
}

TEST(RandomWalkBetweenness, HandValues)
{
    const auto k3 = randomwalk_betweenness(complete_graph(3));
    for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(k3(i), 1.0 / 3, 1e-12);
    const auto p3 = randomwalk_betweenness(path_graph(3));
    EXPECT_NEAR(p3(1), 1.0, 1e-12);
    EXPECT_NEAR(p3(0), 0.0, 1e-12);
    const auto s = randomwalk_betweenness(star_graph(5));
    EXPECT_NEAR(s(0), 1.0, 1e-12);
    EXPECT_NEAR(s(2), 0.0, 1e-12);
    EXPECT_EQ(randomwalk_betweenness(path_graph(2)).maxCoeff(), 0.0);
}

TEST(RandomWalkBetweenness, EqualsGeodesicOnTrees)
{
    // On a tree the current follows the unique path.
    SplitMix64 rng(42);
    for (int r = 0; r < 10; ++r) {
        const Graph t = random_tree(3 + rng.below(10), rng);
        const double n = static_cast<double>(t.size());
        const Eigen::VectorXd gb = geodesic_betweenness(t) / ((n - 1) * (n - 2) / 2);
        EXPECT_LE((randomwalk_betweenness(t) - gb).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Randic, HandValues)
{
    EXPECT_DOUBLE_EQ(randic_index(path_graph(3)), 4.0);
    EXPECT_DOUBLE_EQ(randic_index(star_graph(4)), 9.0);
    EXPECT_DOUBLE_EQ(randic_index(complete_graph(4)), 54.0);
}

TEST(Report, FieldsAndNormalization)
{
    const Graph g = star_graph(4);
    const auto r = centrality_report(g);
    EXPECT_DOUBLE_EQ(r.degree(0), 3.0);
    EXPECT_NEAR(r.kirchhoff, 9.0 / 4, 1e-12);
    EXPECT_NEAR(r.kstar, 4.0 / 9, 1e-12);
    EXPECT_NEAR(r.cstar(0), 16.0 / 3, 1e-12);
    EXPECT_DOUBLE_EQ(r.randic, 9.0);
    EXPECT_EQ(r.indices().size(), 6U);
    const auto norm = max_normalized(r.cstar);
    EXPECT_DOUBLE_EQ(norm.maxCoeff(), 1.0);
    EXPECT_NEAR(norm(1), 3.0 / 11, 1e-12);
    EXPECT_EQ(max_normalized(Eigen::VectorXd::Zero(3)).maxCoeff(), 0.0);
}
