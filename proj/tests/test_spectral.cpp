#include "lpcent/generators.hpp"
#include "lpcent/spectral.hpp"

#include <gtest/gtest.h>

using namespace lpcent;

namespace {

void expect_diag(const Graph& g, const std::vector<double>& want, double k)
{
    const auto b = build_spectral(g);
    ASSERT_EQ(b.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        EXPECT_NEAR(b.lplus(ii, ii), want[i], 1e-12) << "node " << i;
        EXPECT_NEAR(topological_centrality(b)(ii), 1.0 / want[i], 1e-10);
    }
    EXPECT_NEAR(kirchhoff_index(b).value, k, 1e-12);
    EXPECT_NEAR(kirchhoff_index(b).spectral, k, 1e-12);
    EXPECT_NEAR(kirchhoff_index(b).inverse, 1.0 / k, 1e-12);
}

}  // namespace

TEST(HandValues, Path3)
{
    expect_diag(path_graph(3), {5.0 / 9, 2.0 / 9, 5.0 / 9}, 4.0 / 3);
    const auto b = build_spectral(path_graph(3));
    EXPECT_NEAR(b.lplus(0, 2), -4.0 / 9, 1e-12);
    EXPECT_NEAR(b.lplus(0, 1), -1.0 / 9, 1e-12);
    EXPECT_NEAR(topological_centrality(b)(0), 1.8, 1e-12);
    EXPECT_NEAR(topological_centrality(b)(1), 4.5, 1e-12);
}

TEST(HandValues, Triangle) { expect_diag(complete_graph(3), {2.0 / 9, 2.0 / 9, 2.0 / 9}, 2.0 / 3); }

TEST(HandValues, Star4) { expect_diag(star_graph(4), {3.0 / 16, 11.0 / 16, 11.0 / 16, 11.0 / 16}, 9.0 / 4); }

TEST(HandValues, Path4) { expect_diag(path_graph(4), {7.0 / 8, 3.0 / 8, 3.0 / 8, 7.0 / 8}, 5.0 / 2); }

TEST(HandValues, Complete4) { expect_diag(complete_graph(4), {3.0 / 16, 3.0 / 16, 3.0 / 16, 3.0 / 16}, 3.0 / 4); }

TEST(HandValues, SingleEdge)
{
    const auto b = build_spectral(path_graph(2));
    EXPECT_NEAR(b.lplus(0, 0), 0.25, 1e-14);
    EXPECT_NEAR(b.lplus(0, 1), -0.25, 1e-14);
    EXPECT_NEAR(effective_resistance(b, 0, 1), 1.0, 1e-14);
}

TEST(HandValues, CycleKirchhoffClosedForm)
{
    // Unscaled K(C_n) = (n^2 - 1) / 12.
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto b = build_spectral(cycle_graph(n));
        EXPECT_NEAR(kirchhoff_index(b).value, (static_cast<double>(n * n) - 1.0) / 12.0, 1e-10) << n;
    }
}

TEST(HandValues, WeightedEdgeScalesResistance)
{
    const Graph g(2, {{0, 1, 4.0}});
    EXPECT_NEAR(effective_resistance(build_spectral(g), 0, 1), 0.25, 1e-14);
}

TEST(Structure, EigenvaluesDescendingWithNullLast)
{
    const auto b = build_spectral(path_graph(3));
    EXPECT_NEAR(b.eigenvalues(0), 3.0, 1e-12);
    EXPECT_NEAR(b.eigenvalues(1), 1.0, 1e-12);
    EXPECT_EQ(b.eigenvalues(2), 0.0);
    const Eigen::VectorXd null = b.eigenvectors.col(2).cwiseAbs();
    EXPECT_NEAR((null.array() - 1.0 / std::sqrt(3.0)).abs().maxCoeff(), 0.0, 1e-12);
}

TEST(Structure, EmbeddingNormsAreTheDiagonal)
{
    SplitMix64 rng(5);
    const Graph g = random_weighted_connected_graph(9, 0.4, 0.5, 3.0, rng);
    const auto b = build_spectral(g);
    for (Eigen::Index i = 0; i < b.embedding.cols(); ++i)
        EXPECT_NEAR(b.embedding.col(i).squaredNorm(), b.lplus(i, i), 1e-12);
    // Centroid of the embedding is the origin.
    EXPECT_NEAR(b.embedding.rowwise().sum().cwiseAbs().maxCoeff(), 0.0, 1e-12);
    // Squared distances between embedded points are effective resistances.
    EXPECT_NEAR((b.embedding.col(2) - b.embedding.col(5)).squaredNorm(), effective_resistance(b, 2, 5), 1e-12);
}

TEST(Structure, ResistanceMatrixIsAMetric)
{
    SplitMix64 rng(6);
    const Graph g = random_connected_graph(8, 0.4, rng);
    const auto om = resistance_matrix(build_spectral(g));
    for (Eigen::Index i = 0; i < om.rows(); ++i) {
        EXPECT_EQ(om(i, i), 0.0);
        for (Eigen::Index j = 0; j < om.rows(); ++j) {
            EXPECT_NEAR(om(i, j), om(j, i), 1e-14);
            for (Eigen::Index k = 0; k < om.rows(); ++k) EXPECT_LE(om(i, j), om(i, k) + om(k, j) + 1e-12);
        }
    }
}

TEST(Consistency, RandomWeightedGraphs)
{
    SplitMix64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_weighted_connected_graph(2 + rng.below(14), 0.35, 0.1, 10.0, rng);
        const auto b = build_spectral(g);
        EXPECT_LE(route_disagreement(b), 1e-8);
        EXPECT_LE(moore_penrose_residual(b.laplacian, b.lplus), 1e-9);
        EXPECT_LE(centering_residual(b.lplus), 1e-10);
        EXPECT_LE(symmetry_residual(b.lplus), 1e-12);
        EXPECT_LE(embedding_residual(b), 1e-9);
        EXPECT_GE(min_eigenvalue(b.lplus), -1e-10);
        EXPECT_LE((spectral_diagonal(b) - b.lplus.diagonal()).cwiseAbs().maxCoeff(), 1e-9);
        const auto k = kirchhoff_index(b);
        EXPECT_NEAR(k.value, k.spectral, 1e-9 * k.value);
    }
}

TEST(Errors, DisconnectedAndTrivialGraphs)
{
    EXPECT_THROW(build_spectral(Graph(3, {{0, 1, 1.0}})), DisconnectedError);
    EXPECT_THROW(build_spectral(Graph(1, {})), Error);
}
