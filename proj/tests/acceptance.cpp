// Acceptance criteria 1-9. One PASS/FAIL line per criterion; exit status
// is nonzero when any criterion fails. Tolerances are pinned here and do
// not follow the verify defaults.

#include "lpcent/lpcent.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace lpcent;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kIdentityTol = 1e-9;
constexpr double kRouteTol = 1e-8;
constexpr double kMoorePenroseTol = 1e-9;
constexpr double kCenteringTol = 1e-10;
constexpr double kMonteCarloSigmas = 4.0;
constexpr std::uint64_t kMonteCarloRuns = 100000;
constexpr double kDetourSeconds = 60.0;
constexpr double kExtremalSeconds = 120.0;
constexpr double kStretchBand = 0.02;

struct Outcome {
    bool passed = true;
    std::string detail;
};

class Criterion {
public:
    explicit Criterion(Outcome& out) : out_(out) {}

    /// Records `measured <= limit` under `what`.
    void at_most(const std::string& what, double measured, double limit)
    {
        const bool ok = measured <= limit;
        note(what, measured, limit, ok);
    }

    void require(const std::string& what, bool ok)
    {
        out_.passed = out_.passed && ok;
        append(what + (ok ? " ok" : " VIOLATED"));
    }

    void append(const std::string& text)
    {
        if (!out_.detail.empty()) out_.detail += "; ";
        out_.detail += text;
    }

    /// Checks a verify result against a pinned limit.
    void check(const CheckResult& r, double limit)
    {
        at_most(r.name + "[" + std::to_string(r.instances) + "]", r.residual, limit);
        if (!(r.residual <= limit)) append("instance:\n" + r.worst_instance);
    }

private:
    void note(const std::string& what, double measured, double limit, bool ok)
    {
        out_.passed = out_.passed && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s=%.3g (<= %.3g)", what.c_str(), measured, limit);
        append(buf);
    }

    Outcome& out_;
};

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name)
{
    for (const auto& r : rs)
        if (r.name == name) return r;
    throw Error("no check named " + name);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VerifyOptions options()
{
    VerifyOptions opt;
    opt.seed = kSeed;
    return opt;
}

// Cross-criterion state: the detour instances of criterion 1 feed criterion 2 too.
std::vector<CheckResult> theorem1_results;

Outcome criterion1()
{
    Outcome out;
    Criterion c(out);
    auto opt = options();
    opt.instances = 100;
    opt.n_max = 12;
    const auto t0 = std::chrono::steady_clock::now();
    theorem1_results = check_theorem1(opt);
    const double elapsed = seconds_since(t0);
    c.check(find(theorem1_results, "theorem1.average_detour"), kIdentityTol);
    c.at_most("seconds", elapsed, kDetourSeconds);
    return out;
}

Outcome criterion2()
{
    Outcome out;
    Criterion c(out);
    c.check(find(theorem1_results, "theorem1.commute_resistance"), kIdentityTol);
    auto opt = options();
    opt.n_max = 8;
    const auto rs = check_detour_equivalence(opt);
    c.check(find(rs, "detour.commute_form"), kIdentityTol);
    c.check(find(rs, "detour.symmetry"), kIdentityTol);
    return out;
}

Outcome criterion3()
{
    Outcome out;
    Criterion c(out);
    auto opt = options();
    opt.n_max = 10;
    const auto rs = check_theorem2(opt);
    c.check(find(rs, "theorem2.recurrence"), kIdentityTol);
    c.check(find(rs, "theorem2.superposition_reciprocity"), kIdentityTol);
    return out;
}

Outcome criterion4()
{
    Outcome out;
    Criterion c(out);
    auto opt = options();
    opt.instances = 500;
    opt.n_max = 7;
    c.check(find(check_theorem3(opt), "theorem3.forest_diagonal"), kIdentityTol);
    const std::vector<std::pair<Graph, std::vector<Rational>>> hand{
        {path_graph(3), {{5, 9}, {2, 9}, {5, 9}}},
        {complete_graph(3), {{2, 9}, {2, 9}, {2, 9}}},
        {star_graph(4), {{3, 16}, {11, 16}, {11, 16}, {11, 16}}},
        {path_graph(4), {{7, 8}, {3, 8}, {3, 8}, {7, 8}}},
    };
    bool exact = true;
    for (const auto& [g, want] : hand) exact = exact && lplus_diag_via_forests(g) == want;
    c.require("exact rationals on P3, K3, S4, P4", exact);
    return out;
}

Outcome criterion5()
{
    Outcome out;
    Criterion c(out);
    auto opt = options();
    opt.instances = 100;
    opt.n_max = 12;
    const auto rs = check_corollary1(opt);
    c.check(find(rs, "corollary1.tree_diagonal"), kIdentityTol);
    c.check(find(rs, "corollary1.center_contains_argmax"), 0.0);
    const Graph p4 = path_graph(4);
    const auto cstar = topological_centrality(build_spectral(p4));
    const bool tie = tree_center(p4) == std::vector<NodeId>{1, 2} && std::abs(cstar(1) - cstar(2)) <= 1e-12 &&
                     cstar(1) > cstar(0) && cstar(2) > cstar(3);
    c.require("P4 center {1,2} with tied argmax C*", tie);
    return out;
}

Outcome criterion6()
{
    Outcome out;
    Criterion c(out);
    const std::vector<std::pair<std::string, Graph>> graphs{{"P3", path_graph(3)}, {"K4", complete_graph(4)}};
    for (const auto& [name, g] : graphs) {
        const NodeId target = g.size() - 1;
        const double exact = hitting_times_exact(g).hitting(0, static_cast<Eigen::Index>(target));
        const auto one = estimate_hitting_mc(g, 0, target, kMonteCarloRuns, kSeed, 1);
        const auto four = estimate_hitting_mc(g, 0, target, kMonteCarloRuns, kSeed, 4);
        const auto again = estimate_hitting_mc(g, 0, target, kMonteCarloRuns, kSeed, 1);
        c.at_most(name + " |mean-exact|/se", std::abs(one.mean - exact) / one.std_error, kMonteCarloSigmas);
        c.require(name + " worker-independent",
                  one.mean == four.mean && one.std_error == four.std_error && one.mean == again.mean);
    }
    return out;
}

Outcome criterion7()
{
    Outcome out;
    Criterion c(out);
    auto opt = options();
    opt.n_max = 8;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rs = check_extremal(opt);
    const double elapsed = seconds_since(t0);
    c.check(find(rs, "extremal.star_min_tree"), kIdentityTol);
    c.check(find(rs, "extremal.complete_min_k5"), kIdentityTol);
    c.check(find(rs, "extremal.k5_census"), 0.0);
    c.at_most("seconds", elapsed, kExtremalSeconds);
    return out;
}

Outcome criterion8()
{
    Outcome out;
    Criterion c(out);
    const Graph g = gen_core_gateway(reference_topology(kSeed));
    c.require("preset constraints", reference_constraint_violations(g).empty());
    const Graph g1 = pert_preset(g, Pert::one);
    const Graph g2 = pert_preset(g1, Pert::two);
    const auto r1 = sensitivity_report(g, g1);
    const auto r2 = sensitivity_report(g1, g2);
    using D = Direction;
    const std::vector<std::pair<const char*, D>> want1{{"kstar", D::down}, {"randic", D::up}, {"gc", D::down},
                                                       {"sc", D::up},      {"gb", D::up},     {"rb", D::up}};
    const std::vector<std::pair<const char*, D>> want2{{"kstar", D::up}, {"randic", D::flat}, {"gc", D::up},
                                                       {"sc", D::down},  {"gb", D::down},     {"rb", D::up}};
    std::string got1, got2;
    bool ok = true;
    for (const auto& [name, d] : want1) {
        ok = ok && r1.direction(name) == d;
        got1 += std::string(got1.empty() ? "" : ",") + name + ":" + arrow(r1.direction(name));
    }
    for (const auto& [name, d] : want2) {
        ok = ok && r2.direction(name) == d;
        got2 += std::string(got2.empty() ? "" : ",") + name + ":" + arrow(r2.direction(name));
    }
    c.require("PERT-I {" + got1 + "} PERT-II {" + got2 + "}", ok);
    c.require("PERT-II randic delta exactly 0", r2.delta("randic") == 0.0);

    // Reported, not gated.
    char buf[256];
    const double d1 = r1.delta("randic"), d2 = r1.delta("kstar"), d3 = r2.delta("kstar");
    const bool within = std::abs(d1 - 0.029) <= kStretchBand && std::abs(d2 + 0.045) <= kStretchBand &&
                        std::abs(d3 - 0.036) <= kStretchBand;
    std::snprintf(buf, sizeof buf,
                  "stretch (not gated): dR1(G->G1)=%.4f vs 0.029, dK*(G->G1)=%.4f vs -0.045, dK*(G1->G2)=%.4f "
                  "vs 0.036, all within %.2f: %s; the preset adjacency is a reconstruction",
                  d1, d2, d3, kStretchBand, within ? "yes" : "no");
    c.append(buf);
    return out;
}

Outcome criterion9()
{
    Outcome out;
    Criterion c(out);
    const auto rs = check_spectral(options());
    c.check(find(rs, "spectral.routes"), kRouteTol);
    c.check(find(rs, "spectral.moore_penrose"), kMoorePenroseTol);
    c.check(find(rs, "spectral.centering"), kCenteringTol);

    // Every fixed instance used elsewhere in this binary.
    const Graph preset = gen_core_gateway(reference_topology(kSeed));
    const Graph g1 = pert_preset(preset, Pert::one);
    double routes = 0.0, mp = 0.0, centered = 0.0;
    for (const Graph& g : {path_graph(3), complete_graph(3), star_graph(4), path_graph(4), complete_graph(4),
                           complete_graph(5), star_graph(8), preset, g1, pert_preset(g1, Pert::two)}) {
        const auto b = build_spectral(g);
        routes = std::max(routes, route_disagreement(b));
        mp = std::max({mp, moore_penrose_residual(b.laplacian, b.lplus), moore_penrose_residual(b.laplacian, b.lplus_eigen)});
        centered = std::max(centered, centering_residual(b.lplus));
    }
    c.at_most("fixed routes", routes, kRouteTol);
    c.at_most("fixed moore_penrose", mp, kMoorePenroseTol);
    c.at_most("fixed centering", centered, kCenteringTol);
    return out;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"average detour overhead equals l+_kk", criterion1},
        {"commute time equals Vol times resistance; detour forms agree and are symmetric", criterion2},
        {"electrical recurrence overhead equals detour overhead", criterion3},
        {"forest census diagonal equals spectral diagonal", criterion4},
        {"tree closed form and tree center", criterion5},
        {"Monte Carlo hitting times", criterion6},
        {"extremal Kirchhoff index", criterion7},
        {"perturbation sensitivity directions", criterion8},
        {"spectral self-consistency", criterion9},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.passed) ++failures;
        std::printf("%s criterion %zu: %s | %s\n", out.passed ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    out.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
