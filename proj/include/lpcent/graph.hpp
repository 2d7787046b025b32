// Weighted undirected simple graphs: construction, edge-list I/O,
// connectivity, geodesics and degree-preserving rewiring.
//
// Weights are affinities: a larger weight means the endpoints are closer.
// Geodesic lengths therefore use 1/w per edge (hop count when unweighted).

#ifndef LPCENT_GRAPH_HPP
#define LPCENT_GRAPH_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lpcent {

using NodeId = std::size_t;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected edge-list input; `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    double w = 1.0;
};

struct EdgeKey {
    NodeId u = 0;
    NodeId v = 0;
};

struct Neighbor {
    NodeId node;
    double weight;
};

class Graph {
public:
    Graph() = default;

    /// Throws Error on self-loops, duplicate edges, out-of-range ids or
    /// nonpositive weights. Edges are stored with u < v, sorted.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)), adj_(n)
    {
        if (!labels_.empty() && labels_.size() != n_)
            throw Error("label count " + std::to_string(labels_.size()) +
                        " does not match node count " + std::to_string(n_));
        if (labels_.empty()) {
            labels_.reserve(n_);
            for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
        }
        for (auto& e : edges_) {
            if (e.u >= n_ || e.v >= n_)
                throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for n=" + std::to_string(n_));
            if (e.u == e.v) throw Error("self-loop at node " + labels_[e.u]);
            if (!(e.w > 0.0) || !std::isfinite(e.w))
                throw Error("nonpositive weight on edge " + labels_[e.u] + "-" + labels_[e.v]);
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        for (std::size_t k = 1; k < edges_.size(); ++k) {
            if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v)
                throw Error("duplicate edge " + labels_[edges_[k].u] + "-" + labels_[edges_[k].v]);
        }
        degree_.assign(n_, 0.0);
        for (const auto& e : edges_) {
            adj_[e.u].push_back({e.v, e.w});
            adj_[e.v].push_back({e.u, e.w});
            degree_[e.u] += e.w;
            degree_[e.v] += e.w;
            if (e.w != 1.0) unweighted_ = false;
        }
        for (auto& row : adj_)
            std::sort(row.begin(), row.end(),
                      [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(NodeId i) const { return adj_.at(i); }
    const std::string& label(NodeId i) const { return labels_.at(i); }
    std::span<const std::string> labels() const noexcept { return labels_; }

    /// Generalized degree d(i) = sum_j a_ij.
    double degree(NodeId i) const { return degree_.at(i); }
    std::span<const double> degrees() const noexcept { return degree_; }
    double volume() const noexcept
    {
        double vol = 0.0;
        for (double d : degree_) vol += d;
        return vol;
    }

    /// True when every stored weight is exactly 1.
    bool unweighted() const noexcept { return unweighted_; }

    /// Affinity a_ij; zero when there is no edge.
    double weight(NodeId i, NodeId j) const
    {
        const auto& row = adj_.at(i);
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Neighbor& a, NodeId v) { return a.node < v; });
        return (it != row.end() && it->node == j) ? it->weight : 0.0;
    }
    bool has_edge(NodeId i, NodeId j) const { return weight(i, j) > 0.0; }

    std::optional<NodeId> find_label(std::string_view label) const
    {
        for (std::size_t i = 0; i < n_; ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    Eigen::MatrixXd adjacency_matrix() const
    {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (const auto& e : edges_) a(e.u, e.v) = a(e.v, e.u) = e.w;
        return a;
    }

    /// Combinatorial Laplacian L = D - A.
    Eigen::MatrixXd laplacian() const
    {
        Eigen::MatrixXd l = -adjacency_matrix();
        for (std::size_t i = 0; i < n_; ++i) l(i, i) = degree_[i];
        return l;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<double> degree_;
    bool unweighted_ = true;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<unsigned long long> as_index(std::string_view tok)
{
    unsigned long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
    return v;
}

}  // namespace detail

/// Parses "u v [w]" lines. '#' starts a comment; CRLF is accepted.
///
/// Node tokens are labels. When every token is a nonnegative integer the
/// nodes are numbered in ascending numeric order (so "0 1\n1 2" keeps its
/// ids); otherwise in order of first appearance.
inline Graph parse_edge_list(std::string_view text)
{
    struct Raw {
        std::string u, v;
        double w;
        std::size_t line;
    };
    std::vector<Raw> raw;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = detail::split_ws(line);
        if (tok.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (tok.size() < 2 || tok.size() > 3)
            throw ParseError(line_no, "expected \"u v [w]\", got " + std::to_string(tok.size()) +
                                          " fields");
        double w = 1.0;
        if (tok.size() == 3) {
            std::string s(tok[2]);
            std::size_t used = 0;
            try {
                w = std::stod(s, &used);
            } catch (const std::exception&) {
                throw ParseError(line_no, "malformed weight '" + s + "'");
            }
            if (used != s.size()) throw ParseError(line_no, "malformed weight '" + s + "'");
            if (!(w > 0.0) || !std::isfinite(w))
                throw ParseError(line_no, "nonpositive weight " + s);
        }
        if (tok[0] == tok[1]) throw ParseError(line_no, "self-loop at node " + std::string(tok[0]));
        raw.push_back({std::string(tok[0]), std::string(tok[1]), w, line_no});
        if (end == text.size()) break;
    }

    bool numeric = true;
    for (const auto& r : raw)
        if (!detail::as_index(r.u) || !detail::as_index(r.v)) numeric = false;

    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> id;
    if (numeric) {
        std::map<unsigned long long, std::string> ordered;
        for (const auto& r : raw) {
            ordered.emplace(*detail::as_index(r.u), r.u);
            ordered.emplace(*detail::as_index(r.v), r.v);
        }
        for (const auto& [value, tok] : ordered) {
            // "01" and "1" name the same node
            auto canon = std::to_string(value);
            if (!id.contains(canon)) {
                id.emplace(canon, labels.size());
                labels.push_back(canon);
            }
        }
        for (auto& r : raw) {
            r.u = std::to_string(*detail::as_index(r.u));
            r.v = std::to_string(*detail::as_index(r.v));
            if (r.u == r.v) throw ParseError(r.line, "self-loop at node " + r.u);
        }
    } else {
        for (const auto& r : raw) {
            for (const auto* tok : {&r.u, &r.v}) {
                if (!id.contains(*tok)) {
                    id.emplace(*tok, labels.size());
                    labels.push_back(*tok);
                }
            }
        }
    }

    std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& r : raw) {
        NodeId a = id.at(r.u), b = id.at(r.v);
        auto key = std::minmax(a, b);
        if (auto [it, fresh] = seen.emplace(key, r.line); !fresh)
            throw ParseError(r.line, "duplicate edge " + r.u + "-" + r.v + " (first at line " +
                                         std::to_string(it->second) + ")");
        edges.push_back({a, b, r.w});
    }
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

/// Inverse of parse_edge_list, using labels; unit weights are omitted.
inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    os.precision(17);
    for (const auto& e : g.edges()) {
        os << g.label(e.u) << ' ' << g.label(e.v);
        if (e.w != 1.0) os << ' ' << e.w;
        os << '\n';
    }
    return os.str();
}

/// Component index per node, numbered by smallest member.
inline std::vector<std::size_t> connected_components(const Graph& g)
{
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> comp(g.size(), unset);
    std::size_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.size(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(u)) {
                if (comp[nb.node] == unset) {
                    comp[nb.node] = next;
                    stack.push_back(nb.node);
                }
            }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Graph& g)
{
    auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// Throws DisconnectedError naming the members of the second component.
inline void require_connected(const Graph& g, std::string_view what)
{
    if (g.size() == 0) throw Error(std::string(what) + ": empty graph");
    auto comp = connected_components(g);
    std::vector<NodeId> second;
    for (NodeId i = 0; i < g.size(); ++i)
        if (comp[i] == 1) second.push_back(i);
    if (second.empty()) return;
    std::string names;
    for (std::size_t k = 0; k < second.size() && k < 8; ++k)
        names += (k ? "," : "") + g.label(second[k]);
    if (second.size() > 8) names += ",...";
    throw DisconnectedError(std::string(what) + ": graph is disconnected; second component has " +
                            std::to_string(second.size()) + " node(s) {" + names + "}");
}

/// Geodesic length of an edge: 1 for unit weights, 1/w otherwise.
inline double edge_length(double w) { return w == 1.0 ? 1.0 : 1.0 / w; }

/// All-pairs shortest-path distances (Dijkstra from every source).
inline Eigen::MatrixXd shortest_path_distances(const Graph& g)
{
    require_connected(g, "shortest_path_distances");
    const std::size_t n = g.size();
    Eigen::MatrixXd spd = Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, NodeId>;
    for (NodeId s = 0; s < n; ++s) {
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        spd(s, s) = 0.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (d > spd(s, u)) continue;
            for (const auto& nb : g.neighbors(u)) {
                double nd = d + edge_length(nb.weight);
                if (nd < spd(s, nb.node)) {
                    spd(s, nb.node) = nd;
                    pq.push({nd, nb.node});
                }
            }
        }
    }
    return spd;
}

/// Returns a new graph with `remove` deleted and `add` inserted.
/// Labels are carried over unchanged.
inline Graph rewire(const Graph& g, std::span<const EdgeKey> remove, std::span<const Edge> add)
{
    std::map<std::pair<NodeId, NodeId>, double> edges;
    for (const auto& e : g.edges()) edges.emplace(std::minmax(e.u, e.v), e.w);
    for (const auto& r : remove) {
        if (r.u >= g.size() || r.v >= g.size())
            throw Error("rewire: node out of range in removed edge");
        if (edges.erase(std::minmax(r.u, r.v)) == 0)
            throw Error("rewire: cannot remove missing edge " + g.label(r.u) + "-" + g.label(r.v));
    }
    for (const auto& a : add) {
        if (a.u >= g.size() || a.v >= g.size())
            throw Error("rewire: node out of range in added edge");
        if (a.u == a.v) throw Error("rewire: cannot add self-loop at " + g.label(a.u));
        if (!edges.emplace(std::minmax(a.u, a.v), a.w).second)
            throw Error("rewire: cannot add existing edge " + g.label(a.u) + "-" + g.label(a.v));
    }
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [key, w] : edges) out.push_back({key.first, key.second, w});
    return Graph(g.size(), std::move(out), {g.labels().begin(), g.labels().end()});
}

/// Degree sequence sorted in descending order.
inline std::vector<double> degree_sequence(const Graph& g)
{
    std::vector<double> d(g.degrees().begin(), g.degrees().end());
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

}  // namespace lpcent

#endif  // LPCENT_GRAPH_HPP
