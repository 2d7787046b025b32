// Equivalent electrical network: each edge becomes a resistor of 1/w.
//
// V^{ij}_k is the potential of k when unit current enters at i and leaves
// at j, with the sink grounded (v(j) = 0). Under that gauge the expected
// number of visits of the walk i -> j to k is U^{ij}_k = d(k) V^{ij}_k,
// and the recurrence identities below hold literally.

#ifndef LPCENT_ELECTRICAL_HPP
#define LPCENT_ELECTRICAL_HPP

#include "lpcent/graph.hpp"
#include "lpcent/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace lpcent {

struct VoltageProfile {
    NodeId source = 0;
    NodeId sink = 0;
    Eigen::VectorXd v;
};

/// v = L+(e_i - e_j), shifted so that v(j) = 0.
inline VoltageProfile voltages(const SpectralBundle& b, NodeId i, NodeId j)
{
    if (i == j) throw Error("voltages: source and sink coincide");
    if (i >= b.size() || j >= b.size()) throw Error("voltages: node out of range");
    VoltageProfile p{i, j, b.lplus.col(static_cast<Eigen::Index>(i)) - b.lplus.col(static_cast<Eigen::Index>(j))};
    p.v.array() -= p.v(static_cast<Eigen::Index>(j));
    return p;
}

/// Sink-grounded V^{src,sink}_at; zero when src == sink (no current flows).
inline double voltage_at(const SpectralBundle& b, NodeId src, NodeId sink, NodeId at)
{
    if (src == sink) return 0.0;
    const auto& l = b.lplus;
    return (l(at, src) - l(at, sink)) - (l(sink, src) - l(sink, sink));
}

/// Expected visits U^{ij}_k = d(k) v(k).
inline Eigen::VectorXd visit_counts(const Graph& g, const VoltageProfile& p)
{
    Eigen::VectorXd u = p.v;
    for (Eigen::Index k = 0; k < u.size(); ++k) u(k) *= g.degree(static_cast<NodeId>(k));
    return u;
}

/// Vol (V^{ik}_i + V^{kj}_i - V^{ij}_i).
inline double recurrence_overhead(const SpectralBundle& b, const Graph& g, NodeId i, NodeId k, NodeId j)
{
    return g.volume() * (voltage_at(b, i, k, i) + voltage_at(b, k, j, i) - voltage_at(b, i, j, i));
}

/// Vol (U^{ik}_i + U^{kj}_i - U^{ij}_i) / d(i).
inline double recurrence_overhead_visits(const SpectralBundle& b, const Graph& g, NodeId i, NodeId k, NodeId j)
{
    const double di = g.degree(i);
    const double u = di * voltage_at(b, i, k, i) + di * voltage_at(b, k, j, i) - di * voltage_at(b, i, j, i);
    return g.volume() * u / di;
}

/// Largest violation of Kirchhoff's current law: net outflow must be +1 at
/// the source, -1 at the sink and 0 elsewhere.
inline double kcl_residual(const Graph& g, const VoltageProfile& p)
{
    double worst = 0.0;
    for (NodeId k = 0; k < g.size(); ++k) {
        double out = 0.0;
        for (const auto& nb : g.neighbors(k))
            out += nb.weight * (p.v(static_cast<Eigen::Index>(k)) - p.v(static_cast<Eigen::Index>(nb.node)));
        const double expect = k == p.source ? 1.0 : (k == p.sink ? -1.0 : 0.0);
        worst = std::max(worst, std::abs(out - expect));
    }
    return worst;
}

struct CircuitReport {
    double superposition_residual = 0.0;
    double reciprocity_residual = 0.0;
    std::size_t checked = 0;
    std::size_t skipped = 0;

    double max_residual() const { return std::max(superposition_residual, reciprocity_residual); }
};

/// For each triple (x, y, z) of distinct nodes checks
///   superposition  V^{xz}_x = V^{xz}_y + V^{zx}_y
///   reciprocity    V^{xy}_z = V^{zy}_x
/// Potentials are referenced to the sink, so only potential differences
/// enter. Triples with repeated nodes are skipped and counted.
inline CircuitReport verify_circuit_identities(const SpectralBundle& b,
                                               const std::vector<std::array<NodeId, 3>>& triples)
{
    CircuitReport r;
    for (const auto& [x, y, z] : triples) {
        if (x == y || y == z || x == z) {
            ++r.skipped;
            continue;
        }
        const double sup = voltage_at(b, x, z, x) - (voltage_at(b, x, z, y) + voltage_at(b, z, x, y));
        const double rec = voltage_at(b, x, y, z) - voltage_at(b, z, y, x);
        r.superposition_residual = std::max(r.superposition_residual, std::abs(sup));
        r.reciprocity_residual = std::max(r.reciprocity_residual, std::abs(rec));
        ++r.checked;
    }
    return r;
}

/// Netlist with one resistor per edge: "u v R=<1/w>".
inline std::string een_netlist(const Graph& g)
{
    std::ostringstream os;
    os.precision(17);
    for (const auto& e : g.edges()) os << g.label(e.u) << ' ' << g.label(e.v) << " R=" << 1.0 / e.w << '\n';
    return os.str();
}

}  // namespace lpcent

#endif  // LPCENT_ELECTRICAL_HPP
