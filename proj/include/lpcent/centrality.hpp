// Comparison indices: degree, geodesic closeness (GC), geodesic
// betweenness (GB), subgraph centrality (SC), random-walk betweenness (RB),
// the Randic index R1, and a combined report with C* and K.

#ifndef LPCENT_CENTRALITY_HPP
#define LPCENT_CENTRALITY_HPP

#include "lpcent/graph.hpp"
#include "lpcent/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace lpcent {

/// GC(i) = (n - 1) / sum_{j != i} SPD(i, j).
inline Eigen::VectorXd geodesic_closeness(const Graph& g)
{
    const Eigen::MatrixXd spd = shortest_path_distances(g);
    const double n = static_cast<double>(g.size());
    Eigen::VectorXd out(spd.rows());
    for (Eigen::Index i = 0; i < spd.rows(); ++i) out(i) = (n - 1.0) / spd.row(i).sum();
    return out;
}

/// Freeman betweenness: GB(v) = sum over unordered pairs {s, t} not
/// containing v of sigma_st(v) / sigma_st. Unnormalized. Brandes'
/// accumulation over Dijkstra DAGs.
inline Eigen::VectorXd geodesic_betweenness(const Graph& g)
{
    require_connected(g, "geodesic_betweenness");
    const std::size_t n = g.size();
    Eigen::VectorXd bc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    std::vector<double> dist(n), sigma(n), delta(n);
    std::vector<std::vector<NodeId>> pred(n);
    std::vector<NodeId> order;
    using Item = std::pair<double, NodeId>;
    auto same = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); };

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred) p.clear();
        order.clear();
        std::vector<bool> done(n, false);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[s] = 0.0;
        sigma[s] = 1.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (done[u]) continue;
            done[u] = true;
            order.push_back(u);
            for (const auto& nb : g.neighbors(u)) {
                const NodeId v = nb.node;
                if (done[v]) continue;
                const double nd = d + edge_length(nb.weight);
                if (same(nd, dist[v])) {
                    sigma[v] += sigma[u];
                    pred[v].push_back(u);
                } else if (nd < dist[v]) {
                    dist[v] = nd;
                    sigma[v] = sigma[u];
                    pred[v].assign(1, u);
                    pq.push({nd, v});
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId w = *it;
            for (NodeId v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) bc(static_cast<Eigen::Index>(w)) += delta[w];
        }
    }
    return bc / 2.0;
}

/// SC(i) = sum_k (A^k)_ii / k! = sum_j u_ji^2 exp(mu_j) over the
/// eigenpairs of the (weighted) adjacency matrix.
inline Eigen::VectorXd subgraph_centrality(const Graph& g)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency_matrix());
    if (es.info() != Eigen::Success) throw Error("subgraph_centrality: eigen-decomposition failed");
    return es.eigenvectors().cwiseAbs2() * es.eigenvalues().array().exp().matrix();
}

/// Current-flow (random-walk) betweenness. For each unordered pair {s, t}
/// a unit current enters at s and leaves at t; the throughflow of v is half
/// the sum of |current| over its incident edges. RB(v) averages that over
/// the (n-1)(n-2)/2 pairs not containing v.
inline Eigen::VectorXd randomwalk_betweenness(const Graph& g, const SpectralBundle& b)
{
    const std::size_t n = g.size();
    Eigen::VectorXd rb = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    if (n < 3) return rb;
    Eigen::VectorXd flow(static_cast<Eigen::Index>(n));
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            const Eigen::VectorXd v = b.lplus.col(static_cast<Eigen::Index>(s)) - b.lplus.col(static_cast<Eigen::Index>(t));
            flow.setZero();
            for (const auto& e : g.edges()) {
                const double current = std::abs(e.w * (v(static_cast<Eigen::Index>(e.u)) - v(static_cast<Eigen::Index>(e.v))));
                flow(static_cast<Eigen::Index>(e.u)) += current;
                flow(static_cast<Eigen::Index>(e.v)) += current;
            }
            flow(static_cast<Eigen::Index>(s)) = 0.0;
            flow(static_cast<Eigen::Index>(t)) = 0.0;
            rb += 0.5 * flow;
        }
    }
    const double pairs = static_cast<double>((n - 1) * (n - 2)) / 2.0;
    return rb / pairs;
}

inline Eigen::VectorXd randomwalk_betweenness(const Graph& g)
{
    return randomwalk_betweenness(g, build_spectral(g));
}

/// R1(G) = sum over edges of d(i) d(j), with generalized degrees.
inline double randic_index(const Graph& g)
{
    double r = 0.0;
    for (const auto& e : g.edges()) r += g.degree(e.u) * g.degree(e.v);
    return r;
}

/// x / max(x); all-zero vectors stay zero.
inline Eigen::VectorXd max_normalized(const Eigen::VectorXd& x)
{
    const double m = x.maxCoeff();
    return m == 0.0 ? x : Eigen::VectorXd(x / m);
}

struct CentralityReport {
    Eigen::VectorXd degree, gc, sc, gb, rb, cstar, lplus_diag;
    double kirchhoff = 0.0;
    double kstar = 0.0;
    double randic = 0.0;

    double mean_gc() const { return gc.mean(); }
    double mean_sc() const { return sc.mean(); }
    double mean_gb() const { return gb.mean(); }
    double mean_rb() const { return rb.mean(); }
    double mean_cstar() const { return cstar.mean(); }

    /// Index name -> per-node values, in a fixed order.
    std::vector<std::pair<std::string, const Eigen::VectorXd*>> indices() const
    {
        return {{"degree", &degree}, {"gc", &gc}, {"sc", &sc}, {"gb", &gb}, {"rb", &rb}, {"cstar", &cstar}};
    }
};

inline CentralityReport centrality_report(const Graph& g, const SpectralBundle& b)
{
    CentralityReport r;
    r.degree = Eigen::Map<const Eigen::VectorXd>(g.degrees().data(), static_cast<Eigen::Index>(g.size()));
    r.gc = geodesic_closeness(g);
    r.sc = subgraph_centrality(g);
    r.gb = geodesic_betweenness(g);
    r.rb = randomwalk_betweenness(g, b);
    r.lplus_diag = b.lplus.diagonal();
    r.cstar = topological_centrality(b);
    const auto k = kirchhoff_index(b);
    r.kirchhoff = k.value;
    r.kstar = k.inverse;
    r.randic = randic_index(g);
    return r;
}

inline CentralityReport centrality_report(const Graph& g) { return centrality_report(g, build_spectral(g)); }

}  // namespace lpcent

#endif  // LPCENT_CENTRALITY_HPP
