// Self-contained verification suites: each one generates its own seeded
// instances, checks an identity against an independent route, and reports
// the worst residual together with the instance that produced it.

#ifndef LPCENT_VERIFY_HPP
#define LPCENT_VERIFY_HPP

#include "lpcent/centrality.hpp"
#include "lpcent/electrical.hpp"
#include "lpcent/forests.hpp"
#include "lpcent/generators.hpp"
#include "lpcent/graph.hpp"
#include "lpcent/random.hpp"
#include "lpcent/spectral.hpp"
#include "lpcent/walks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace lpcent {

struct CheckResult {
    std::string name;
    double residual = 0.0;  ///< worst observed; NaN counts as failure
    double tolerance = 0.0;
    std::size_t instances = 0;
    std::string worst_instance;  ///< edge list of the worst instance

    bool passed() const { return residual <= tolerance; }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::optional<double> tolerance;  ///< overrides every default
    std::optional<std::size_t> n_max;  ///< largest random instance
    std::optional<std::size_t> instances;
    unsigned workers = 1;
};

namespace detail {

class Recorder {
public:
    Recorder(std::string name, double tolerance, const VerifyOptions& opt)
    {
        r_.name = std::move(name);
        r_.tolerance = opt.tolerance.value_or(tolerance);
    }

    void observe(double residual, const Graph& g)
    {
        ++r_.instances;
        if (std::isnan(r_.residual)) return;
        if (std::isnan(residual) || r_.instances == 1 || residual > r_.residual) {
            r_.residual = residual;
            r_.worst_instance = to_edge_list(g);
        }
    }

    CheckResult result() const { return r_; }

private:
    CheckResult r_;
};

inline std::size_t pick_size(SplitMix64& rng, std::size_t lo, std::size_t hi)
{
    hi = std::max(lo, hi);
    return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

/// Random connected instances: unweighted G(n, 0.4) with n in [lo, hi].
inline std::vector<Graph> random_instances(std::uint64_t seed, std::size_t count, std::size_t lo, std::size_t hi)
{
    SplitMix64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_connected_graph(pick_size(rng, lo, hi), 0.4, rng));
    return out;
}

}  // namespace detail

/// Spectral self-consistency: both L+ routes, Moore-Penrose identities,
/// double centering, embedding, spectral diagonal and both K routes.
inline std::vector<CheckResult> check_spectral(const VerifyOptions& opt)
{
    using detail::Recorder;
    Recorder routes("spectral.routes", 1e-8, opt), mp("spectral.moore_penrose", 1e-9, opt),
        centered("spectral.centering", 1e-10, opt), symmetric("spectral.symmetry", 1e-10, opt),
        embed("spectral.embedding", 1e-9, opt), diag("spectral.diagonal", 1e-9, opt),
        kirch("spectral.kirchhoff", 1e-9, opt), psd("spectral.psd", 1e-10, opt);
    const auto graphs = detail::random_instances(opt.seed ^ 0x5eed01, opt.instances.value_or(100), 2, opt.n_max.value_or(12));
    for (const auto& g : graphs) {
        const auto b = build_spectral(g);
        routes.observe(route_disagreement(b), g);
        mp.observe(std::max(moore_penrose_residual(b.laplacian, b.lplus), moore_penrose_residual(b.laplacian, b.lplus_eigen)), g);
        centered.observe(std::max(centering_residual(b.lplus), centering_residual(b.laplacian)), g);
        symmetric.observe(std::max(symmetry_residual(b.lplus), symmetry_residual(b.laplacian)), g);
        embed.observe(embedding_residual(b), g);
        diag.observe((spectral_diagonal(b) - b.lplus.diagonal()).cwiseAbs().maxCoeff(), g);
        const auto k = kirchhoff_index(b);
        kirch.observe(std::max(std::abs(k.value - k.spectral),
                               std::abs(k.value - topological_centrality(b).cwiseInverse().sum())),
                      g);
        psd.observe(std::max(0.0, -std::min(min_eigenvalue(b.lplus), min_eigenvalue(b.laplacian))), g);
    }
    return {routes.result(), mp.result(), centered.result(), symmetric.result(),
            embed.result(), diag.result(), kirch.result(), psd.result()};
}

/// Average detour overhead through k (from exact hitting times) equals l+_kk.
inline std::vector<CheckResult> check_theorem1(const VerifyOptions& opt)
{
    detail::Recorder avg("theorem1.average_detour", 1e-9, opt), commute("theorem1.commute_resistance", 1e-9, opt),
        rows("theorem1.commute_row_sums", 1e-9, opt), weighted("theorem1.weighted", 1e-9, opt);
    const auto graphs = detail::random_instances(opt.seed ^ 0x5eed02, opt.instances.value_or(100), 4, opt.n_max.value_or(12));
    auto run = [&](const Graph& g, detail::Recorder& into, bool extras) {
        const auto b = build_spectral(g);
        const auto t = hitting_times_exact(g);
        const double vol = g.volume();
        double worst = 0.0, worst_c = 0.0, worst_r = 0.0;
        for (NodeId k = 0; k < g.size(); ++k) {
            const auto a = average_detour_overhead(t, vol, b, k);
            worst = std::max(worst, std::abs(a.double_sum - a.lplus_kk));
            if (!extras) continue;
            const auto s = commute_row_sum_identity(t, vol, b, k);
            worst_r = std::max(worst_r, std::abs(s.lhs - s.rhs) / std::max(1.0, std::abs(s.rhs)));
            for (NodeId j = 0; j < g.size(); ++j)
                worst_c = std::max(worst_c, std::abs(t.commute(k, j) - vol * effective_resistance(b, k, j)));
        }
        into.observe(worst, g);
        if (extras) {
            const auto kc = kirchhoff_from_commute(t, vol, b);
            commute.observe(worst_c, g);
            rows.observe(std::max(worst_r, std::abs(kc.lhs - kc.rhs)), g);
        }
    };
    for (const auto& g : graphs) run(g, avg, true);
    SplitMix64 rng(opt.seed ^ 0x5eed12);
    for (std::size_t k = 0; k < 25; ++k)
        run(random_weighted_connected_graph(detail::pick_size(rng, 4, std::min<std::size_t>(opt.n_max.value_or(10), 10)), 0.4, 0.25, 4.0, rng),
            weighted, false);
    return {avg.result(), commute.result(), rows.result(), weighted.result()};
}

/// Hitting-form and commute-form detour overheads agree, and the overhead
/// is symmetric in source and destination.
inline std::vector<CheckResult> check_detour_equivalence(const VerifyOptions& opt)
{
    detail::Recorder eq("detour.commute_form", 1e-9, opt), sym("detour.symmetry", 1e-9, opt);
    const auto graphs = detail::random_instances(opt.seed ^ 0x5eed03, opt.instances.value_or(100), 3,
                                                 std::min<std::size_t>(opt.n_max.value_or(8), 8));
    for (const auto& g : graphs) {
        const auto t = hitting_times_exact(g);
        double e = 0.0, s = 0.0;
        for (NodeId i = 0; i < g.size(); ++i)
            for (NodeId k = 0; k < g.size(); ++k)
                for (NodeId j = 0; j < g.size(); ++j) {
                    const double d = detour_overhead(t, i, k, j);
                    e = std::max(e, std::abs(d - detour_overhead_commute(t, i, k, j)));
                    s = std::max(s, std::abs(d - detour_overhead(t, j, k, i)));
                }
        eq.observe(e, g);
        sym.observe(s, g);
    }
    return {eq.result(), sym.result()};
}

/// Recurrence overhead from sink-grounded voltages equals the detour
/// overhead from exact hitting times; circuit laws hold.
inline std::vector<CheckResult> check_theorem2(const VerifyOptions& opt)
{
    detail::Recorder thm("theorem2.recurrence", 1e-9, opt), visits("theorem2.visits_absorbing_chain", 1e-9, opt),
        circuit("theorem2.superposition_reciprocity", 1e-9, opt), kcl("theorem2.kcl", 1e-9, opt),
        positive("theorem2.return_positive", 0.0, opt);
    const auto graphs = detail::random_instances(opt.seed ^ 0x5eed04, opt.instances.value_or(60), 3,
                                                 std::min<std::size_t>(opt.n_max.value_or(10), 10));
    for (const auto& g : graphs) {
        const auto b = build_spectral(g);
        const auto t = hitting_times_exact(g);
        const std::size_t n = g.size();
        double w = 0.0, wv = 0.0, wk = 0.0, neg = 0.0;
        std::vector<std::array<NodeId, 3>> triples;
        for (NodeId i = 0; i < n; ++i)
            for (NodeId k = 0; k < n; ++k)
                for (NodeId j = 0; j < n; ++j) {
                    const double scale = std::max(1.0, std::abs(detour_overhead(t, i, k, j)));
                    w = std::max(w, std::abs(recurrence_overhead(b, g, i, k, j) - detour_overhead(t, i, k, j)) / scale);
                    triples.push_back({i, k, j});
                }
        // Visits from the absorbing chain: N = (I - Q)^-1 with j absorbing.
        const Eigen::MatrixXd a = g.adjacency_matrix();
        for (NodeId j = 0; j < n; ++j) {
            std::vector<Eigen::Index> keep;
            for (NodeId x = 0; x < n; ++x)
                if (x != j) keep.push_back(static_cast<Eigen::Index>(x));
            Eigen::MatrixXd q = a(keep, keep);
            for (std::size_t r = 0; r < keep.size(); ++r) q.row(static_cast<Eigen::Index>(r)) /= g.degree(static_cast<NodeId>(keep[r]));
            const Eigen::MatrixXd fundamental =
                (Eigen::MatrixXd::Identity(q.rows(), q.cols()) - q).partialPivLu().inverse();
            for (std::size_t r = 0; r < keep.size(); ++r) {
                const auto u = visit_counts(g, voltages(b, static_cast<NodeId>(keep[r]), j));
                for (std::size_t c = 0; c < keep.size(); ++c)
                    wv = std::max(wv, std::abs(u(keep[c]) - fundamental(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) /
                                          std::max(1.0, fundamental(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))));
                wv = std::max(wv, std::abs(u(static_cast<Eigen::Index>(j))));
            }
        }
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = 0; j < n; ++j) {
                if (i == j) continue;
                const auto p = voltages(b, i, j);
                wk = std::max(wk, kcl_residual(g, p));
                const double u = visit_counts(g, p)(static_cast<Eigen::Index>(i));
                if (!(u > 0.0)) neg = 1.0;
            }
        thm.observe(w, g);
        visits.observe(wv, g);
        circuit.observe(verify_circuit_identities(b, triples).max_residual(), g);
        kcl.observe(wk, g);
        positive.observe(neg, g);
    }
    return {thm.result(), visits.result(), circuit.result(), kcl.result(), positive.result()};
}

/// diag(L+) from the bi-partition forest census equals the spectral one.
inline std::vector<CheckResult> check_theorem3(const VerifyOptions& opt)
{
    detail::Recorder diag("theorem3.forest_diagonal", 1e-9, opt), lemma2("theorem3.root_sum", 0.0, opt),
        trees("theorem3.tree_count_routes", 1e-6, opt);
    SplitMix64 rng(opt.seed ^ 0x5eed05);
    const std::size_t want = opt.instances.value_or(500);
    const std::size_t hi = std::min<std::size_t>(opt.n_max.value_or(7), kMaxEnumerationNodes);
    for (std::size_t done = 0; done < want; ++done) {
        const Graph g = random_connected_graph(detail::pick_size(rng, 2, hi), 0.5, rng);
        const auto census = forest_census(g);
        const auto exact = lplus_diag_via_forests(census);
        const auto b = build_spectral(g);
        double w = 0.0;
        std::uint64_t rooted = 0;
        for (NodeId i = 0; i < g.size(); ++i) {
            w = std::max(w, std::abs(exact[i].value() - b.lplus(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))));
            rooted += census.eps_rooted[i];
        }
        diag.observe(w, g);
        // Each two-tree forest has two roots.
        lemma2.observe(rooted == 2 * census.eps_n2 ? 0.0 : 1.0, g);
        const double st = static_cast<double>(spanning_tree_count(g));
        trees.observe(std::abs(spanning_tree_weight(g) - st) / st, g);
    }
    return {diag.result(), lemma2.result(), trees.result()};
}

/// Closed form on trees, tree center, and SPD = Omega on trees.
inline std::vector<CheckResult> check_corollary1(const VerifyOptions& opt)
{
    detail::Recorder closed("corollary1.tree_diagonal", 1e-9, opt), center("corollary1.center_contains_argmax", 0.0, opt),
        spd("corollary1.spd_equals_resistance", 1e-9, opt), ident("corollary1.distance_sum_identity", 1e-9, opt);
    SplitMix64 rng(opt.seed ^ 0x5eed06);
    const std::size_t count = opt.instances.value_or(100);
    const std::size_t hi = opt.n_max.value_or(12);
    for (std::size_t c = 0; c < count; ++c) {
        const Graph t = random_tree(detail::pick_size(rng, 2, hi), rng);
        const auto b = build_spectral(t);
        const auto tc = tree_centrality(t);
        double w = 0.0;
        for (NodeId i = 0; i < t.size(); ++i)
            w = std::max(w, std::abs(tc[i] - b.lplus(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))));
        closed.observe(w, t);

        const auto cstar = topological_centrality(b);
        const auto centers = tree_center(t);
        const double best = cstar.maxCoeff();
        double miss = 0.0;
        for (Eigen::Index i = 0; i < cstar.size(); ++i)
            if (best - cstar(i) <= 1e-9 * best &&
                std::find(centers.begin(), centers.end(), static_cast<NodeId>(i)) == centers.end())
                miss = 1.0;
        center.observe(miss, t);

        const auto d = shortest_path_distances(t);
        const auto omega = resistance_matrix(b);
        spd.observe((d - omega).cwiseAbs().maxCoeff(), t);
        const double n = static_cast<double>(t.size());
        const Eigen::VectorXd rhs = (d.rowwise().sum().array() - b.lplus.trace()) / n;
        ident.observe((rhs - b.lplus.diagonal()).cwiseAbs().maxCoeff(), t);
    }
    return {closed.result(), center.result(), spd.result(), ident.result()};
}

/// The star minimizes K over all labeled trees on n <= 8 nodes, and K_5
/// minimizes K over all 728 connected graphs on 5 nodes.
inline std::vector<CheckResult> check_extremal(const VerifyOptions& opt)
{
    detail::Recorder stars("extremal.star_min_tree", 1e-9, opt), complete("extremal.complete_min_k5", 1e-9, opt),
        census("extremal.k5_census", 0.0, opt);
    auto kirchhoff = [](const Graph& g) { return lplus_rank_correction(g.laplacian()).trace(); };
    const std::size_t hi = std::min<std::size_t>(opt.n_max.value_or(8), 8);
    for (std::size_t n = 3; n <= hi; ++n) {
        double best = std::numeric_limits<double>::infinity();
        Graph arg;
        for_each_labeled_tree(n, [&](const Graph& t) {
            const double k = kirchhoff(t);
            if (k < best) {
                best = k;
                arg = t;
            }
        });
        const Graph star = star_graph(n);
        stars.observe(std::max(0.0, kirchhoff(star) - best), arg);
    }
    double other = std::numeric_limits<double>::infinity();
    Graph arg;
    std::size_t seen = 0;
    const Graph k5 = complete_graph(5);
    for_each_connected_graph(5, [&](const Graph& g) {
        ++seen;
        if (g.edge_count() == 10) return;
        const double k = kirchhoff(g);
        if (k < other) {
            other = k;
            arg = g;
        }
    });
    complete.observe(std::max(0.0, kirchhoff(k5) - other), arg);
    census.observe(seen == 728 ? 0.0 : 1.0, k5);
    return {stars.result(), complete.result(), census.result()};
}

/// Monte Carlo hitting times agree with the exact ones, and the estimate
/// does not depend on the worker count.
inline std::vector<CheckResult> check_monte_carlo(const VerifyOptions& opt)
{
    detail::Recorder within("montecarlo.within_4se", 4.0, opt), det("montecarlo.worker_independent", 0.0, opt),
        visits("montecarlo.visits_within_4se", 4.0, opt);
    const std::uint64_t runs = 100000;
    const std::vector<std::pair<Graph, std::pair<NodeId, NodeId>>> cases{
        {path_graph(3), {0, 2}}, {path_graph(3), {1, 0}}, {complete_graph(4), {0, 1}}, {star_graph(4), {1, 2}}};
    for (const auto& [g, pair] : cases) {
        const auto [i, j] = pair;
        const auto exact = hitting_times_exact(g).hitting(i, j);
        const auto one = estimate_hitting_mc(g, i, j, runs, opt.seed, 1);
        const auto many = estimate_hitting_mc(g, i, j, runs, opt.seed, std::max(2U, opt.workers));
        within.observe(one.std_error > 0 ? std::abs(one.mean - exact) / one.std_error : std::abs(one.mean - exact) * 1e12, g);
        det.observe(one.mean == many.mean && one.std_error == many.std_error ? 0.0 : 1.0, g);

        const auto b = build_spectral(g);
        const auto u = visit_counts(g, voltages(b, i, j));
        for (NodeId k = 0; k < g.size(); ++k) {
            const auto est = estimate_visits_mc(g, i, j, k, runs / 4, opt.seed + k);
            const double expect = u(static_cast<Eigen::Index>(k));
            visits.observe(est.std_error > 0 ? std::abs(est.mean - expect) / est.std_error : std::abs(est.mean - expect) * 1e12, g);
        }
    }
    return {within.result(), det.result(), visits.result()};
}

/// Subgraph centrality against its power series; random-walk betweenness
/// against per-pair grounded solves that never form L+.
inline std::vector<CheckResult> check_zoo(const VerifyOptions& opt)
{
    detail::Recorder sc("zoo.subgraph_series", 1e-9, opt), rb("zoo.rb_direct_solve", 1e-9, opt);
    const auto graphs = detail::random_instances(opt.seed ^ 0x5eed07, opt.instances.value_or(50), 3,
                                                 std::min<std::size_t>(opt.n_max.value_or(10), 10));
    for (const auto& g : graphs) {
        const Eigen::MatrixXd a = g.adjacency_matrix();
        const auto n = a.rows();
        // Series until the terms vanish (at least 30).
        Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n), sum = term;
        for (int k = 1; k < 200; ++k) {
            term = term * a / static_cast<double>(k);
            sum += term;
            if (k >= 30 && term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
        }
        const Eigen::VectorXd series = sum.diagonal();
        sc.observe(((subgraph_centrality(g) - series).array().abs() / series.array().max(1.0)).maxCoeff(), g);

        Eigen::VectorXd direct = Eigen::VectorXd::Zero(n);
        const Eigen::MatrixXd lap = g.laplacian();
        for (Eigen::Index s = 0; s < n; ++s)
            for (Eigen::Index t = s + 1; t < n; ++t) {
                // Ground t, inject at s.
                std::vector<Eigen::Index> keep;
                for (Eigen::Index x = 0; x < n; ++x)
                    if (x != t) keep.push_back(x);
                Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n - 1);
                rhs(s < t ? s : s - 1) = 1.0;
                const Eigen::VectorXd part = lap(keep, keep).llt().solve(rhs);
                Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
                for (std::size_t q = 0; q < keep.size(); ++q) v(keep[q]) = part(static_cast<Eigen::Index>(q));
                for (Eigen::Index x = 0; x < n; ++x) {
                    if (x == s || x == t) continue;
                    double through = 0.0;
                    for (const auto& nb : g.neighbors(static_cast<NodeId>(x)))
                        through += std::abs(nb.weight * (v(x) - v(static_cast<Eigen::Index>(nb.node))));
                    direct(x) += 0.5 * through;
                }
            }
        if (n >= 3) direct /= static_cast<double>((n - 1) * (n - 2)) / 2.0;
        rb.observe((randomwalk_betweenness(g) - direct).cwiseAbs().maxCoeff(), g);
    }
    return {sc.result(), rb.result()};
}

struct Suite {
    const char* name;
    std::vector<CheckResult> (*run)(const VerifyOptions&);
};

inline const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all{
        {"spectral", check_spectral},   {"theorem1", check_theorem1},   {"detour", check_detour_equivalence},
        {"theorem2", check_theorem2},   {"theorem3", check_theorem3},   {"corollary1", check_corollary1},
        {"extremal", check_extremal},   {"montecarlo", check_monte_carlo}, {"zoo", check_zoo},
    };
    return all;
}

}  // namespace lpcent

#endif  // LPCENT_VERIFY_HPP
