// Core/gateway topology generator, the two degree-preserving perturbation
// presets, sensitivity reports, and Graphviz export.
//
// Generic wiring rule: core nodes form a ring (an edge for two, a single
// node for one); gateway g attaches to core node g mod core_size; each
// subnet hangs off its gateway as a star, or as a clique when requested.
//
// The reference preset (65 nodes, labels "1".."65") fixes the remaining
// freedom as follows:
//   core v1..v4 ring; v5 and v6 attach to v1; v7..v14 attach round robin
//   to v2, v3, v4;
//   v5 serves v15..v23 (star plus the redundant link v22-v23);
//   v6 serves v24..v32 (star plus the link v24-v25);
//   v7..v13 serve four nodes each as stars; v14 serves five nodes and
//   forms a clique with them.

#ifndef LPCENT_EXPERIMENTS_HPP
#define LPCENT_EXPERIMENTS_HPP

#include "lpcent/centrality.hpp"
#include "lpcent/graph.hpp"
#include "lpcent/random.hpp"
#include "lpcent/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace lpcent {

enum class SubnetWiring { star, clique };

enum class Preset { none, reference };

struct TopologySpec {
    std::size_t core_size = 4;
    std::size_t gateway_count = 10;
    std::vector<std::size_t> subnet_sizes;  ///< one entry per gateway
    SubnetWiring wiring = SubnetWiring::star;
    /// Probability of each extra intra-subnet chord (star wiring only).
    double chord_probability = 0.0;
    std::uint64_t seed = 1;
    Preset preset = Preset::none;
};

inline constexpr std::array<std::size_t, 10> kReferenceSubnetSizes{9, 9, 4, 4, 4, 4, 4, 4, 4, 5};

/// Settings of the 65-node preset. `seed` is recorded but the preset has
/// no random component.
inline TopologySpec reference_topology(std::uint64_t seed = 1)
{
    TopologySpec s;
    s.core_size = 4;
    s.gateway_count = 10;
    s.subnet_sizes.assign(kReferenceSubnetSizes.begin(), kReferenceSubnetSizes.end());
    s.seed = seed;
    s.preset = Preset::reference;
    return s;
}

namespace detail {

inline std::vector<std::string> numbered_labels(std::size_t n)
{
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    return labels;
}

inline void ring(std::vector<Edge>& e, std::size_t first, std::size_t count)
{
    if (count == 2) e.push_back({first, first + 1, 1.0});
    if (count >= 3)
        for (std::size_t i = 0; i < count; ++i) e.push_back({first + i, first + (i + 1) % count, 1.0});
}

/// Nodes cut off from `anchor` when edge {u, v} is removed.
inline std::size_t cut_off_by(const Graph& g, NodeId u, NodeId v, NodeId anchor)
{
    const EdgeKey key{u, v};
    const Graph h = rewire(g, std::span<const EdgeKey>(&key, 1), {});
    const auto comp = connected_components(h);
    return static_cast<std::size_t>(std::count_if(comp.begin(), comp.end(),
                                                  [&](std::size_t c) { return c != comp[anchor]; }));
}

}  // namespace detail

/// Labels of the preset constraints that `g` violates; empty when all hold.
inline std::vector<std::string> reference_constraint_violations(const Graph& g);

inline Graph gen_core_gateway(const TopologySpec& spec)
{
    if (spec.core_size < 1 || spec.gateway_count < 1) throw Error("gen_core_gateway: sizes must be >= 1");
    if (spec.subnet_sizes.size() != spec.gateway_count)
        throw Error("gen_core_gateway: " + std::to_string(spec.subnet_sizes.size()) + " subnet sizes for " +
                    std::to_string(spec.gateway_count) + " gateways");
    for (std::size_t s : spec.subnet_sizes)
        if (s < 1) throw Error("gen_core_gateway: subnet sizes must be >= 1");
    const std::size_t subnet_total = std::accumulate(spec.subnet_sizes.begin(), spec.subnet_sizes.end(), std::size_t{0});
    const std::size_t n = spec.core_size + spec.gateway_count + subnet_total;

    std::vector<Edge> e;
    if (spec.preset == Preset::reference) {
        std::vector<std::string> bad;
        if (spec.core_size != 4) bad.push_back("core_size must be 4");
        if (spec.gateway_count != 10) bad.push_back("gateway_count must be 10");
        if (!std::equal(spec.subnet_sizes.begin(), spec.subnet_sizes.end(), kReferenceSubnetSizes.begin(),
                        kReferenceSubnetSizes.end()))
            bad.push_back("subnet sizes must be 9,9,4,4,4,4,4,4,4,5 (sum 51, n = 65)");
        if (spec.wiring != SubnetWiring::star || spec.chord_probability != 0.0)
            bad.push_back("reference preset fixes its own wiring");
        if (!bad.empty()) {
            std::string msg = "gen_core_gateway: reference preset infeasible:";
            for (const auto& b : bad) msg += " [" + b + "]";
            throw Error(msg);
        }
        // 0-based ids; label of node x is x + 1.
        detail::ring(e, 0, 4);
        e.push_back({4, 0, 1.0});
        e.push_back({5, 0, 1.0});
        for (NodeId g = 6; g < 14; ++g) e.push_back({g, 1 + (g - 6) % 3, 1.0});
        NodeId next = 14;
        for (NodeId g = 4; g < 14; ++g) {
            const std::size_t size = kReferenceSubnetSizes[g - 4];
            std::vector<NodeId> members;
            for (std::size_t k = 0; k < size; ++k) members.push_back(next++);
            if (g == 13) {
                members.push_back(g);
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b) e.push_back({members[a], members[b], 1.0});
            } else {
                for (NodeId m : members) e.push_back({g, m, 1.0});
            }
        }
        e.push_back({21, 22, 1.0});  // v22-v23
        e.push_back({23, 24, 1.0});  // v24-v25
        Graph g(n, std::move(e), detail::numbered_labels(n));
        if (auto bad_after = reference_constraint_violations(g); !bad_after.empty()) {
            std::string msg = "gen_core_gateway: generated preset violates:";
            for (const auto& b : bad_after) msg += " [" + b + "]";
            throw Error(msg);
        }
        return g;
    }

    SplitMix64 rng(spec.seed);
    detail::ring(e, 0, spec.core_size);
    NodeId next = spec.core_size + spec.gateway_count;
    for (std::size_t gi = 0; gi < spec.gateway_count; ++gi) {
        const NodeId gw = spec.core_size + gi;
        e.push_back({gw, gi % spec.core_size, 1.0});
        std::vector<NodeId> members;
        for (std::size_t k = 0; k < spec.subnet_sizes[gi]; ++k) members.push_back(next++);
        if (spec.wiring == SubnetWiring::clique) {
            members.push_back(gw);
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) e.push_back({members[a], members[b], 1.0});
        } else {
            for (NodeId m : members) e.push_back({gw, m, 1.0});
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (spec.chord_probability > 0.0 && rng.uniform() < spec.chord_probability)
                        e.push_back({members[a], members[b], 1.0});
        }
    }
    return Graph(n, std::move(e), detail::numbered_labels(n));
}

inline std::vector<std::string> reference_constraint_violations(const Graph& g)
{
    std::vector<std::string> bad;
    if (g.size() != 65) {
        bad.push_back("n = 65");
        return bad;
    }
    auto id = [&](int label) { return g.find_label(std::to_string(label)); };
    for (int v = 1; v <= 65; ++v)
        if (!id(v)) {
            bad.push_back("labels 1..65 present");
            return bad;
        }
    auto node = [&](int label) { return *id(label); };
    auto edge = [&](int a, int b) { return g.has_edge(node(a), node(b)); };

    if (!is_connected(g)) bad.push_back("connected");
    if (!(edge(1, 2) && edge(2, 3) && edge(3, 4) && edge(4, 1))) bad.push_back("core v1..v4 forms a ring");
    if (g.degree(node(5)) != 10 || g.degree(node(6)) != 10) bad.push_back("d(v5) = d(v6) = 10");
    const double max_other = [&] {
        double m = 0.0;
        for (int v = 1; v <= 65; ++v)
            if (v != 5 && v != 6) m = std::max(m, g.degree(node(v)));
        return m;
    }();
    if (max_other >= 10) bad.push_back("v5 and v6 have the highest degree");
    for (int v = 15; v <= 23; ++v)
        if (!edge(5, v)) bad.push_back("v5 serves v15..v23");
    if (!edge(22, 23)) bad.push_back("v22-v23 redundant link");
    if (!edge(5, 1)) bad.push_back("edge v5-v1 exists");
    if (!edge(6, 1)) bad.push_back("edge v6-v1 exists");
    if (!edge(24, 25)) bad.push_back("edge v24-v25 exists");
    if (!edge(15, 5) || edge(15, 1) || edge(6, 5)) bad.push_back("PERT-I edges rewireable");
    if (!bad.empty()) return bad;

    if (detail::cut_off_by(g, node(5), node(1), node(1)) != 10) bad.push_back("removing v5-v1 cuts off 10 nodes");
    const std::array<EdgeKey, 2> rm{{{node(15), node(5)}, {node(6), node(1)}}};
    const std::array<Edge, 2> add{{{node(15), node(1), 1.0}, {node(6), node(5), 1.0}}};
    const Graph g1 = rewire(g, rm, add);
    if (detail::cut_off_by(g1, node(5), node(1), node(1)) != 19)
        bad.push_back("after PERT-I removing v5-v1 cuts off 19 nodes");
    return bad;
}

enum class Pert { one, two };

/// Degree-preserving rewire by label:
///   PERT-I : e(15,5), e(6,1)   -> e(15,1), e(6,5)
///   PERT-II: e(22,23), e(24,25) -> e(22,25), e(23,24)
inline Graph pert_preset(const Graph& g, Pert which)
{
    const std::array<std::array<int, 2>, 4> spec =
        which == Pert::one ? std::array<std::array<int, 2>, 4>{{{15, 5}, {6, 1}, {15, 1}, {6, 5}}}
                           : std::array<std::array<int, 2>, 4>{{{22, 23}, {24, 25}, {22, 25}, {23, 24}}};
    const char* name = which == Pert::one ? "PERT-I" : "PERT-II";
    auto node = [&](int label) {
        auto id = g.find_label(std::to_string(label));
        if (!id) throw Error(std::string(name) + ": no node labeled " + std::to_string(label));
        return *id;
    };
    for (std::size_t k = 0; k < 2; ++k)
        if (!g.has_edge(node(spec[k][0]), node(spec[k][1])))
            throw Error(std::string(name) + ": missing edge " + std::to_string(spec[k][0]) + "-" +
                        std::to_string(spec[k][1]));
    const std::array<EdgeKey, 2> rm{{{node(spec[0][0]), node(spec[0][1])}, {node(spec[1][0]), node(spec[1][1])}}};
    const std::array<Edge, 2> add{{{node(spec[2][0]), node(spec[2][1]), 1.0}, {node(spec[3][0]), node(spec[3][1]), 1.0}}};
    Graph out = rewire(g, rm, add);
    if (degree_sequence(out) != degree_sequence(g)) throw Error(std::string(name) + ": degree sequence changed");
    return out;
}

// ---------------------------------------------------------------------------
// Sensitivity

struct Descriptors {
    double kstar = 0.0;
    double randic = 0.0;
    double gc = 0.0;
    double sc = 0.0;
    double gb = 0.0;
    double rb = 0.0;
    double cstar = 0.0;
    double kirchhoff = 0.0;

    static constexpr std::array<const char*, 7> names{"kstar", "randic", "gc", "sc", "gb", "rb", "cstar"};
    std::array<double, 7> values() const { return {kstar, randic, gc, sc, gb, rb, cstar}; }
};

inline Descriptors describe(const Graph& g)
{
    const auto r = centrality_report(g);
    return {r.kstar, r.randic, r.mean_gc(), r.mean_sc(), r.mean_gb(), r.mean_rb(), r.mean_cstar(), r.kirchhoff};
}

enum class Direction { up, down, flat };

inline constexpr double kFlatBand = 1e-12;

inline const char* arrow(Direction d)
{
    switch (d) {
    case Direction::up: return "up";
    case Direction::down: return "down";
    default: return "flat";
    }
}

struct SensitivityReport {
    Descriptors before, after;
    std::array<double, 7> deltas{};  ///< (after - before) / before, ordered as Descriptors::names
    std::array<Direction, 7> directions{};

    double delta(std::string_view name) const
    {
        for (std::size_t k = 0; k < Descriptors::names.size(); ++k)
            if (name == Descriptors::names[k]) return deltas[k];
        throw Error("unknown descriptor " + std::string(name));
    }
    Direction direction(std::string_view name) const
    {
        for (std::size_t k = 0; k < Descriptors::names.size(); ++k)
            if (name == Descriptors::names[k]) return directions[k];
        throw Error("unknown descriptor " + std::string(name));
    }
};

inline SensitivityReport sensitivity_report(const Descriptors& before, const Descriptors& after)
{
    SensitivityReport r{before, after, {}, {}};
    const auto b = before.values(), a = after.values();
    for (std::size_t k = 0; k < b.size(); ++k) {
        r.deltas[k] = b[k] == 0.0 ? (a[k] == 0.0 ? 0.0 : a[k]) : (a[k] - b[k]) / b[k];
        r.directions[k] = std::abs(r.deltas[k]) < kFlatBand ? Direction::flat
                          : r.deltas[k] > 0.0               ? Direction::up
                                                            : Direction::down;
    }
    return r;
}

inline SensitivityReport sensitivity_report(const Graph& before, const Graph& after)
{
    if (before.size() != after.size())
        throw Error("sensitivity_report: node counts differ (" + std::to_string(before.size()) + " vs " +
                    std::to_string(after.size()) + ")");
    return sensitivity_report(describe(before), describe(after));
}

// ---------------------------------------------------------------------------
// Rendering

/// Graphviz DOT with fill colors on a red -> turquoise HSV ramp. Nodes are
/// ranked by descending value; equal values share a color.
inline std::string export_dot(const Graph& g, const Eigen::VectorXd& values, const std::string& metric = "value")
{
    if (static_cast<std::size_t>(values.size()) != g.size())
        throw Error("export_dot: " + std::to_string(values.size()) + " values for " + std::to_string(g.size()) +
                    " nodes");
    std::vector<double> distinct(values.data(), values.data() + values.size());
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    constexpr double kTurquoise = 174.0 / 360.0;

    std::ostringstream os;
    os << "graph G {\n  node [style=filled];\n";
    char buf[64];
    for (NodeId i = 0; i < g.size(); ++i) {
        const double v = values(static_cast<Eigen::Index>(i));
        const auto rank = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), v, std::greater<>()) - distinct.begin());
        const double hue = distinct.size() > 1 ? kTurquoise * static_cast<double>(rank) / static_cast<double>(distinct.size() - 1) : 0.0;
        std::snprintf(buf, sizeof buf, "%.4f 1.0000 1.0000", hue);
        char val[32];
        std::snprintf(val, sizeof val, "%.6g", v);
        os << "  \"" << g.label(i) << "\" [fillcolor=\"" << buf << "\", tooltip=\"" << metric << '=' << val
           << "\"];\n";
    }
    for (const auto& e : g.edges()) os << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace lpcent

#endif  // LPCENT_EXPERIMENTS_HPP
