// Connected bi-partitions, spanning-tree and rooted-forest counts, and the
// combinatorial route to diag(L+).
//
// For a connected unweighted graph with bi-partitions P = (S, S'):
//
//   eps_rooted(i) = sum_{P : i in S} |T(S)| |T(S')| |V(S')|
//   eps_n2        = sum_P |T(S)| |T(S')| |V(S)| |V(S')|
//   eps_n1        = n |T(G)|
//   l+_ii         = (eps_rooted(i) - eps_n2 / n) / eps_n1
//
// Every quantity here is an exact integer; the diagonal is returned as a
// reduced fraction.

#ifndef LPCENT_FORESTS_HPP
#define LPCENT_FORESTS_HPP

#include "lpcent/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace lpcent {

inline constexpr std::size_t kMaxEnumerationNodes = 14;

struct BiPartition {
    std::vector<NodeId> s_nodes;       ///< always contains node 0
    std::vector<NodeId> sprime_nodes;
    std::vector<EdgeKey> cut;
    std::uint64_t trees_s = 1;
    std::uint64_t trees_sprime = 1;
};

struct ForestCensus {
    std::uint64_t eps_n1 = 0;
    std::uint64_t eps_n2 = 0;
    std::vector<std::uint64_t> eps_rooted;
};

/// Exact fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(static_cast<long double>(num) / den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("forest census: 64-bit overflow");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("forest census: 64-bit overflow");
    return r;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline __int128 bareiss_determinant(std::vector<std::vector<__int128>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    constexpr __int128 limit = static_cast<__int128>(1) << 62;
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m[i][j] >= limit || m[i][j] <= -limit || m[k][k] >= limit || m[k][k] <= -limit)
                    throw Error("bareiss_determinant: intermediate overflow");
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Adjacency bitmasks for graphs with at most 64 nodes.
inline std::vector<std::uint64_t> neighbor_masks(const Graph& g)
{
    if (g.size() > 64) throw Error("neighbor_masks: more than 64 nodes");
    std::vector<std::uint64_t> nb(g.size(), 0);
    for (const auto& e : g.edges()) {
        nb[e.u] |= std::uint64_t{1} << e.v;
        nb[e.v] |= std::uint64_t{1} << e.u;
    }
    return nb;
}

inline bool mask_connected(std::uint64_t set, const std::vector<std::uint64_t>& nb)
{
    if (set == 0) return false;
    std::uint64_t seen = set & (~set + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= nb[static_cast<std::size_t>(__builtin_ctzll(f))];
        next &= set & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == set;
}

inline std::vector<NodeId> mask_members(std::uint64_t set)
{
    std::vector<NodeId> out;
    for (; set; set &= set - 1) out.push_back(static_cast<NodeId>(__builtin_ctzll(set)));
    return out;
}

inline void require_enumerable(const Graph& g, const char* what)
{
    require_connected(g, what);
    if (g.size() > kMaxEnumerationNodes)
        throw Error(std::string(what) + ": n = " + std::to_string(g.size()) +
                    " exceeds the exhaustive-enumeration limit of " + std::to_string(kMaxEnumerationNodes) +
                    " nodes; use the spectral route instead");
}

}  // namespace detail

/// Number of spanning trees of the subgraph induced by `nodes`, ignoring
/// weights. Exact (Matrix-Tree theorem with Bareiss elimination).
inline std::uint64_t spanning_tree_count(const Graph& g, const std::vector<NodeId>& nodes)
{
    const std::size_t m = nodes.size();
    if (m <= 1) return m == 1 ? 1 : 0;
    std::vector<long> pos(g.size(), -1);
    for (std::size_t a = 0; a < m; ++a) pos[nodes[a]] = static_cast<long>(a);
    // Reduced Laplacian: drop the row and column of nodes[0].
    std::vector<std::vector<__int128>> lap(m - 1, std::vector<__int128>(m - 1, 0));
    for (std::size_t a = 1; a < m; ++a) {
        for (const auto& nb : g.neighbors(nodes[a])) {
            const long b = pos[nb.node];
            if (b < 0) continue;
            lap[a - 1][a - 1] += 1;
            if (b > 0) lap[a - 1][static_cast<std::size_t>(b) - 1] -= 1;
        }
    }
    const __int128 det = detail::bareiss_determinant(std::move(lap));
    if (det < 0 || det > static_cast<__int128>(UINT64_MAX)) throw Error("spanning_tree_count: out of range");
    return static_cast<std::uint64_t>(det);
}

/// Structural spanning-tree count of the whole graph; 0 when disconnected.
inline std::uint64_t spanning_tree_count(const Graph& g)
{
    std::vector<NodeId> all(g.size());
    std::iota(all.begin(), all.end(), NodeId{0});
    return spanning_tree_count(g, all);
}

/// Weighted count: sum over spanning trees of the product of edge weights,
/// as the determinant of the reduced Laplacian. Equals the structural count
/// on unweighted graphs.
inline double spanning_tree_weight(const Graph& g)
{
    if (g.size() <= 1) return g.size() == 1 ? 1.0 : 0.0;
    if (!is_connected(g)) return 0.0;
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXd reduced = g.laplacian().bottomRightCorner(n - 1, n - 1);
    return reduced.partialPivLu().determinant();
}

/// Spanning-tree count: exact for unweighted graphs, tree weight otherwise.
inline double count_spanning_trees(const Graph& g)
{
    if (!is_connected(g)) return 0.0;
    return g.unweighted() ? static_cast<double>(spanning_tree_count(g)) : spanning_tree_weight(g);
}

/// Every connected bi-partition exactly once, with node 0 always in S.
/// Connected sets containing node 0 are grown one frontier node at a time;
/// each branch excludes the frontier nodes tried before it, so no set is
/// reached twice. A set is kept when its complement is nonempty and
/// connected.
inline std::vector<BiPartition> enumerate_bipartitions(const Graph& g)
{
    detail::require_enumerable(g, "enumerate_bipartitions");
    const std::size_t n = g.size();
    const auto nb = detail::neighbor_masks(g);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::vector<std::uint64_t> found;
    auto grow = [&](auto&& self, std::uint64_t set, std::uint64_t excluded) -> void {
        const std::uint64_t rest = full & ~set;
        if (rest && detail::mask_connected(rest, nb)) found.push_back(set);
        std::uint64_t frontier = 0;
        for (std::uint64_t s = set; s; s &= s - 1) frontier |= nb[static_cast<std::size_t>(__builtin_ctzll(s))];
        frontier &= ~set & ~excluded;
        for (std::uint64_t f = frontier; f; f &= f - 1) {
            const std::uint64_t v = f & (~f + 1);
            self(self, set | v, excluded);
            excluded |= v;
        }
    };
    grow(grow, 1, 0);
    std::sort(found.begin(), found.end());

    std::vector<BiPartition> out;
    out.reserve(found.size());
    for (std::uint64_t set : found) {
        BiPartition p;
        p.s_nodes = detail::mask_members(set);
        p.sprime_nodes = detail::mask_members(full & ~set);
        for (const auto& e : g.edges())
            if (((set >> e.u) & 1U) != ((set >> e.v) & 1U)) p.cut.push_back({e.u, e.v});
        p.trees_s = spanning_tree_count(g, p.s_nodes);
        p.trees_sprime = spanning_tree_count(g, p.sprime_nodes);
        out.push_back(std::move(p));
    }
    return out;
}

/// Rooted spanning-forest counts assembled from the bi-partitions.
/// Requires an unweighted graph.
inline ForestCensus forest_census(const Graph& g)
{
    detail::require_enumerable(g, "forest_census");
    if (!g.unweighted()) throw Error("forest_census: counting identities need an unweighted graph");
    using detail::checked_add;
    using detail::checked_mul;
    const std::size_t n = g.size();
    ForestCensus c;
    c.eps_rooted.assign(n, 0);
    c.eps_n1 = checked_mul(n, spanning_tree_count(g));
    for (const auto& p : enumerate_bipartitions(g)) {
        const std::uint64_t t = checked_mul(p.trees_s, p.trees_sprime);
        const std::uint64_t s = p.s_nodes.size(), sp = p.sprime_nodes.size();
        c.eps_n2 = checked_add(c.eps_n2, checked_mul(checked_mul(t, s), sp));
        for (NodeId i : p.s_nodes) c.eps_rooted[i] = checked_add(c.eps_rooted[i], checked_mul(t, sp));
        for (NodeId j : p.sprime_nodes) c.eps_rooted[j] = checked_add(c.eps_rooted[j], checked_mul(t, s));
    }
    return c;
}

/// diag(L+) as exact fractions (n eps_rooted(i) - eps_n2) / (n eps_n1).
inline std::vector<Rational> lplus_diag_via_forests(const ForestCensus& c)
{
    const auto n = static_cast<__int128>(c.eps_rooted.size());
    std::vector<Rational> out;
    out.reserve(c.eps_rooted.size());
    for (std::uint64_t rooted : c.eps_rooted) {
        __int128 num = n * static_cast<__int128>(rooted) - static_cast<__int128>(c.eps_n2);
        __int128 den = n * static_cast<__int128>(c.eps_n1);
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) {
            const __int128 r = a % b;
            a = b;
            b = r;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) throw Error("lplus_diag_via_forests: overflow");
        out.push_back({static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)});
    }
    return out;
}

inline std::vector<Rational> lplus_diag_via_forests(const Graph& g)
{
    return lplus_diag_via_forests(forest_census(g));
}

inline bool is_tree(const Graph& g)
{
    return g.size() >= 1 && g.edge_count() + 1 == g.size() && is_connected(g);
}

/// l+_ii = (1/n^2) sum over edge deletions with i in S of |V(S')|^2.
/// Unweighted trees only.
inline std::vector<double> tree_centrality(const Graph& t)
{
    if (!is_tree(t)) throw Error("tree_centrality: input is not a tree");
    if (!t.unweighted()) throw Error("tree_centrality: input must be unweighted");
    const std::size_t n = t.size();
    // Root at 0; subtree sizes and Euler intervals.
    std::vector<NodeId> parent(n, n), order;
    std::vector<std::size_t> tin(n), tout(n), sub(n, 1);
    order.reserve(n);
    std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
    std::size_t clock = 0;
    parent[0] = 0;
    tin[0] = clock++;
    while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        const auto nbrs = t.neighbors(u);
        if (idx < nbrs.size()) {
            const NodeId v = nbrs[idx++].node;
            if (v == parent[u]) continue;
            parent[v] = u;
            tin[v] = clock++;
            stack.push_back({v, 0});
        } else {
            tout[u] = clock;
            order.push_back(u);
            stack.pop_back();
        }
    }
    for (NodeId u : order)
        if (u != 0) sub[parent[u]] += sub[u];

    std::vector<double> out(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (NodeId c = 1; c < n; ++c) {
            const bool inside = tin[c] <= tin[i] && tin[i] < tout[c];
            const std::uint64_t other = inside ? n - sub[c] : sub[c];
            acc += other * other;
        }
        out[i] = static_cast<double>(acc) / static_cast<double>(n * n);
    }
    return out;
}

/// Nodes minimizing the total shortest-path distance to all others.
inline std::vector<NodeId> tree_center(const Graph& t)
{
    if (!is_tree(t)) throw Error("tree_center: input is not a tree");
    const Eigen::VectorXd total = shortest_path_distances(t).rowwise().sum();
    const double best = total.minCoeff();
    const double tol = 1e-12 * std::max(1.0, std::abs(best));
    std::vector<NodeId> out;
    for (Eigen::Index i = 0; i < total.size(); ++i)
        if (total(i) - best <= tol) out.push_back(static_cast<NodeId>(i));
    return out;
}

}  // namespace lpcent

#endif  // LPCENT_FORESTS_HPP
