// Random-walk quantities on a weighted graph: exact hitting and commute
// times, detour overheads, and a seeded Monte Carlo walk simulator.
//
// A walk at i moves to neighbor k with probability a_ik / d(i).

#ifndef LPCENT_WALKS_HPP
#define LPCENT_WALKS_HPP

#include "lpcent/graph.hpp"
#include "lpcent/random.hpp"
#include "lpcent/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace lpcent {

struct HittingTable {
    Eigen::MatrixXd hitting;  ///< hitting(i, j): expected steps of walk i -> j
    Eigen::MatrixXd commute;  ///< hitting + hitting'
};

/// Exact hitting times by first-step analysis. For each target j the
/// system h_i = 1 + sum_k p_ik h_k (i != j, h_j = 0) is multiplied through
/// by d(i), which gives L_{-j} h = d_{-j} with L_{-j} the Laplacian minus
/// row and column j. That matrix is positive definite on connected graphs.
inline HittingTable hitting_times_exact(const Graph& g)
{
    require_connected(g, "hitting_times_exact");
    const auto n = static_cast<Eigen::Index>(g.size());
    const Eigen::MatrixXd lap = g.laplacian();
    Eigen::VectorXd deg(n);
    for (Eigen::Index i = 0; i < n; ++i) deg(i) = g.degree(static_cast<NodeId>(i));

    HittingTable t;
    t.hitting = Eigen::MatrixXd::Zero(n, n);
    if (n == 1) {
        t.commute = t.hitting;
        return t;
    }
    std::vector<Eigen::Index> keep;
    keep.reserve(static_cast<std::size_t>(n - 1));
    for (Eigen::Index j = 0; j < n; ++j) {
        keep.clear();
        for (Eigen::Index i = 0; i < n; ++i)
            if (i != j) keep.push_back(i);
        Eigen::MatrixXd reduced = lap(keep, keep);
        Eigen::VectorXd rhs = deg(keep);
        Eigen::LLT<Eigen::MatrixXd> llt(reduced);
        if (llt.info() != Eigen::Success) throw Error("hitting_times_exact: singular reduced Laplacian");
        Eigen::VectorXd h = llt.solve(rhs);
        for (std::size_t a = 0; a < keep.size(); ++a) t.hitting(keep[a], j) = h(static_cast<Eigen::Index>(a));
    }
    t.commute = t.hitting + t.hitting.transpose();
    return t;
}

/// Delta H^{i->k->j} = H_ik + H_kj - H_ij.
inline double detour_overhead(const HittingTable& t, NodeId i, NodeId k, NodeId j)
{
    return t.hitting(i, k) + t.hitting(k, j) - t.hitting(i, j);
}

/// The same overhead written with commute times, (C_ik + C_kj - C_ij) / 2.
inline double detour_overhead_commute(const HittingTable& t, NodeId i, NodeId k, NodeId j)
{
    return 0.5 * (t.commute(i, k) + t.commute(k, j) - t.commute(i, j));
}

struct AverageDetour {
    double double_sum = 0.0;  ///< (1/(n^2 Vol)) sum_i sum_j Delta H^{i->k->j}
    double lplus_kk = 0.0;
};

/// Average detour overhead through transit k over all n^2 ordered (i, j),
/// including i = j and i = k = j terms, next to l+_kk.
inline AverageDetour average_detour_overhead(const HittingTable& t, double volume,
                                             const SpectralBundle& b, NodeId k)
{
    const auto n = t.hitting.rows();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            sum += detour_overhead(t, static_cast<NodeId>(i), k, static_cast<NodeId>(j));
    const double nn = static_cast<double>(n);
    return {sum / (nn * nn * volume), b.lplus(k, k)};
}

inline AverageDetour average_detour_overhead(const Graph& g, const SpectralBundle& b, NodeId k)
{
    return average_detour_overhead(hitting_times_exact(g), g.volume(), b, k);
}

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// sum_j C_kj against Vol (n l+_kk + Tr L+).
inline IdentitySides commute_row_sum_identity(const HittingTable& t, double volume,
                                              const SpectralBundle& b, NodeId k)
{
    const double n = static_cast<double>(b.size());
    return {t.commute.row(static_cast<Eigen::Index>(k)).sum(),
            volume * (n * b.lplus(k, k) + b.lplus.trace())};
}

/// sum_k sum_j C_kj / (2 n Vol) against K = Tr L+.
inline IdentitySides kirchhoff_from_commute(const HittingTable& t, double volume, const SpectralBundle& b)
{
    const double n = static_cast<double>(b.size());
    return {t.commute.sum() / (2.0 * n * volume), b.lplus.trace()};
}

// ---------------------------------------------------------------------------
// Monte Carlo

struct WalkEstimate {
    double mean = 0.0;
    double std_error = 0.0;  ///< sample stdev / sqrt(runs)
    std::uint64_t runs = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kWalkStepCap = 10'000'000;

namespace detail {

/// Cumulative neighbor weights for O(log deg) weighted steps.
class WalkSampler {
public:
    explicit WalkSampler(const Graph& g) : g_(g), cum_(g.size())
    {
        for (NodeId u = 0; u < g.size(); ++u) {
            double acc = 0.0;
            for (const auto& nb : g.neighbors(u)) cum_[u].push_back(acc += nb.weight);
        }
    }

    NodeId step(NodeId u, SplitMix64& rng) const
    {
        const auto nbrs = g_.neighbors(u);
        if (g_.unweighted()) return nbrs[rng.below(nbrs.size())].node;
        const auto& c = cum_[u];
        const double x = rng.uniform() * c.back();
        auto it = std::upper_bound(c.begin(), c.end(), x);
        if (it == c.end()) --it;
        return nbrs[static_cast<std::size_t>(it - c.begin())].node;
    }

private:
    const Graph& g_;
    std::vector<std::vector<double>> cum_;
};

/// Runs `runs` independent samples, each a function of (run seed) only,
/// spread over `workers` threads. Results are merged in run order, so the
/// estimate is bit-identical for any worker count.
template <class Sample>
WalkEstimate monte_carlo(std::uint64_t runs, std::uint64_t seed, unsigned workers, Sample sample)
{
    if (runs == 0) throw Error("monte_carlo: runs must be >= 1");
    std::vector<double> values(runs);
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(runs, 256))));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t r = w; r < runs; r += workers) {
                SplitMix64 rng(run_seed(seed, r));
                values[r] = sample(rng);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    // Welford, in run-index order.
    double mean = 0.0, m2 = 0.0;
    std::uint64_t count = 0;
    for (double x : values) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }
    WalkEstimate est;
    est.mean = mean;
    est.runs = runs;
    est.seed = seed;
    est.std_error = runs > 1 ? std::sqrt(m2 / static_cast<double>(runs - 1) / static_cast<double>(runs)) : 0.0;
    return est;
}

}  // namespace detail

/// Monte Carlo estimate of H_ij. Run r uses seed run_seed(seed, r).
/// Throws if a single walk exceeds kWalkStepCap steps.
inline WalkEstimate estimate_hitting_mc(const Graph& g, NodeId i, NodeId j, std::uint64_t runs,
                                        std::uint64_t seed, unsigned workers = 1)
{
    require_connected(g, "estimate_hitting_mc");
    if (i >= g.size() || j >= g.size()) throw Error("estimate_hitting_mc: node out of range");
    detail::WalkSampler sampler(g);
    return detail::monte_carlo(runs, seed, workers, [&](SplitMix64& rng) {
        std::uint64_t steps = 0;
        NodeId u = i;
        while (u != j) {
            if (++steps > kWalkStepCap) throw Error("estimate_hitting_mc: step cap exceeded");
            u = sampler.step(u, rng);
        }
        return static_cast<double>(steps);
    });
}

/// Monte Carlo estimate of the expected number of visits to `k` by the
/// walk i -> j, counting the start and stopping on arrival at j.
inline WalkEstimate estimate_visits_mc(const Graph& g, NodeId i, NodeId j, NodeId k,
                                       std::uint64_t runs, std::uint64_t seed, unsigned workers = 1)
{
    require_connected(g, "estimate_visits_mc");
    if (i >= g.size() || j >= g.size() || k >= g.size()) throw Error("estimate_visits_mc: node out of range");
    detail::WalkSampler sampler(g);
    return detail::monte_carlo(runs, seed, workers, [&](SplitMix64& rng) {
        std::uint64_t steps = 0, visits = 0;
        NodeId u = i;
        while (u != j) {
            if (u == k) ++visits;
            if (++steps > kWalkStepCap) throw Error("estimate_visits_mc: step cap exceeded");
            u = sampler.step(u, rng);
        }
        return static_cast<double>(visits);
    });
}

// ---------------------------------------------------------------------------
// Dense-regime approximation

enum class DegreeConvention {
    source,  ///< H_ij ~ Vol / d(i)
    target,  ///< H_ij ~ Vol / d(j)
};

struct DenseApproximation {
    double hitting = 0.0;
    double commute = 0.0;  ///< Vol (1/d(i) + 1/d(j)), convention-free
};

/// Degree-only approximation of hitting and commute times, meaningful
/// only for dense graphs.
inline DenseApproximation approx_hitting_dense(const Graph& g, NodeId i, NodeId j,
                                               DegreeConvention convention = DegreeConvention::source)
{
    const double vol = g.volume();
    const double di = g.degree(i), dj = g.degree(j);
    if (di == 0.0 || dj == 0.0) throw Error("approx_hitting_dense: isolated node");
    return {vol / (convention == DegreeConvention::source ? di : dj), vol * (1.0 / di + 1.0 / dj)};
}

}  // namespace lpcent

#endif  // LPCENT_WALKS_HPP
