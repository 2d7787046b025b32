// JSON and CSV serialization of reports.

#ifndef LPCENT_REPORT_HPP
#define LPCENT_REPORT_HPP

#include "lpcent/centrality.hpp"
#include "lpcent/experiments.hpp"
#include "lpcent/graph.hpp"
#include "lpcent/spectral.hpp"
#include "lpcent/walks.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace lpcent {

inline std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

/// {convention, nodes: [{id, label, lplus_diag, cstar}], graph: {...}}.
inline nlohmann::json spectral_json(const Graph& g, const SpectralBundle& b)
{
    using nlohmann::json;
    const auto cstar = topological_centrality(b);
    const auto k = kirchhoff_index(b);
    json nodes = json::array();
    for (NodeId i = 0; i < g.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        nodes.push_back({{"id", i}, {"label", g.label(i)}, {"lplus_diag", b.lplus(ii, ii)}, {"cstar", cstar(ii)}});
    }
    return {
        {"convention", {{"kirchhoff", "K = Tr(L+), unscaled; some authors use n*Tr(L+)"}}},
        {"nodes", nodes},
        {"graph",
         {{"n", g.size()},
          {"edges", g.edge_count()},
          {"volume", g.volume()},
          {"kirchhoff", k.value},
          {"kstar", k.inverse},
          {"eigenvalues", to_std(b.eigenvalues)}}},
    };
}

inline nlohmann::json to_json(const WalkEstimate& e)
{
    return {{"mean", e.mean}, {"std_error", e.std_error}, {"runs", e.runs}, {"seed", e.seed}};
}

inline nlohmann::json to_json(const Descriptors& d)
{
    nlohmann::json out;
    const auto v = d.values();
    for (std::size_t k = 0; k < v.size(); ++k) out[Descriptors::names[k]] = v[k];
    return out;
}

/// {before, after, deltas, directions}.
inline nlohmann::json to_json(const SensitivityReport& r)
{
    nlohmann::json deltas, dirs;
    for (std::size_t k = 0; k < Descriptors::names.size(); ++k) {
        deltas[Descriptors::names[k]] = r.deltas[k];
        dirs[Descriptors::names[k]] = arrow(r.directions[k]);
    }
    return {{"before", to_json(r.before)}, {"after", to_json(r.after)}, {"deltas", deltas}, {"directions", dirs}};
}

/// node, degree, GC, SC, GB, RB, C*, then each max-normalized.
inline std::string comparison_csv(const Graph& g, const CentralityReport& r)
{
    const auto idx = r.indices();
    std::vector<Eigen::VectorXd> norm;
    for (const auto& [name, v] : idx) norm.push_back(max_normalized(*v));
    std::ostringstream os;
    os.precision(12);
    os << "node,degree,gc,sc,gb,rb,cstar,degree_norm,gc_norm,sc_norm,gb_norm,rb_norm,cstar_norm\n";
    for (NodeId i = 0; i < g.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        os << g.label(i);
        for (const auto& [name, v] : idx) os << ',' << (*v)(ii);
        for (const auto& v : norm) os << ',' << v(ii);
        os << '\n';
    }
    return os.str();
}

}  // namespace lpcent

#endif  // LPCENT_REPORT_HPP
