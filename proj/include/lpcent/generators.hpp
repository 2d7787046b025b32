// Named families, random instances and exhaustive enumerations of small
// graphs. Used by the verification suites and the tests.

#ifndef LPCENT_GENERATORS_HPP
#define LPCENT_GENERATORS_HPP

#include "lpcent/graph.hpp"
#include "lpcent/random.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace lpcent {

inline Graph path_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
    return Graph(n, std::move(e));
}

inline Graph complete_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
    return Graph(n, std::move(e));
}

/// Star on n nodes with hub 0.
inline Graph star_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 1; i < n; ++i) e.push_back({0, i, 1.0});
    return Graph(n, std::move(e));
}

/// Decodes a Prüfer sequence of length n-2 into a labeled tree on n nodes.
inline Graph prufer_tree(const std::vector<NodeId>& seq)
{
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> deg(n, 1);
    for (NodeId s : seq) {
        if (s >= n) throw Error("prufer_tree: entry out of range");
        ++deg[s];
    }
    std::vector<Edge> e;
    for (NodeId s : seq) {
        NodeId leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        e.push_back({leaf, s, 1.0});
        --deg[leaf];
        --deg[s];
    }
    NodeId a = n, b = n;
    for (NodeId i = 0; i < n; ++i) {
        if (deg[i] == 1) (a == n ? a : b) = i;
    }
    e.push_back({a, b, 1.0});
    return Graph(n, std::move(e));
}

inline Graph random_tree(std::size_t n, SplitMix64& rng)
{
    if (n < 2) return Graph(n, {});
    std::vector<NodeId> seq(n - 2);
    for (auto& s : seq) s = rng.below(n);
    return prufer_tree(seq);
}

/// G(n, p) conditioned on connectivity by rejection.
inline Graph random_connected_graph(std::size_t n, double p, SplitMix64& rng)
{
    for (;;) {
        std::vector<Edge> e;
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                if (rng.uniform() < p) e.push_back({i, j, 1.0});
        Graph g(n, std::move(e));
        if (is_connected(g)) return g;
    }
}

/// Same as random_connected_graph with weights drawn from [lo, hi).
inline Graph random_weighted_connected_graph(std::size_t n, double p, double lo, double hi,
                                             SplitMix64& rng)
{
    Graph g = random_connected_graph(n, p, rng);
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    for (auto& x : e) x.w = lo + (hi - lo) * rng.uniform();
    return Graph(n, std::move(e));
}

/// Calls `visit` with every labeled tree on n >= 2 nodes (n^(n-2) of them).
inline void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    if (n < 2) throw Error("for_each_labeled_tree: need n >= 2");
    if (n == 2) {
        visit(path_graph(2));
        return;
    }
    std::vector<NodeId> seq(n - 2, 0);
    for (;;) {
        visit(prufer_tree(seq));
        std::size_t k = 0;
        while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
        if (k == seq.size()) return;
    }
}

/// Calls `visit` with every connected labeled simple graph on n nodes.
inline void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    std::vector<std::pair<NodeId, NodeId>> slots;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    if (slots.size() >= 63) throw Error("for_each_connected_graph: n too large");
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1U) e.push_back({slots[k].first, slots[k].second, 1.0});
        Graph g(n, std::move(e));
        if (is_connected(g)) visit(g);
    }
}

}  // namespace lpcent

#endif  // LPCENT_GENERATORS_HPP
