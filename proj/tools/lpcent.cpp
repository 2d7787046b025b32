// lpcent: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or IO error.

#include "lpcent/lpcent.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lpcent;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct IoError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load(const std::string& path)
{
    try {
        return parse_edge_list(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& output)
{
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw IoError("cannot write " + output);
    out << text;
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

NodeId node_by_label(const Graph& g, const std::string& label)
{
    if (auto id = g.find_label(label)) return *id;
    throw IoError("no node labeled '" + label + "'");
}

json centrality_json(const Graph& g)
{
    const auto b = build_spectral(g);
    json out = spectral_json(g, b);
    const auto r = centrality_report(g, b);
    json idx;
    for (const auto& [name, v] : r.indices()) idx[name] = to_std(*v);
    out["centrality"] = idx;
    out["graph"]["randic"] = r.randic;
    return out;
}

std::string analyze_text(const Graph& g)
{
    const auto b = build_spectral(g);
    const auto cstar = topological_centrality(b);
    const auto k = kirchhoff_index(b);
    std::ostringstream os;
    os << "nodes " << g.size() << "\nedges " << g.edge_count() << "\nvolume " << fmt(g.volume()) << '\n';
    os << "kirchhoff " << fmt(k.value) << "\nkstar " << fmt(k.inverse) << '\n';
    os << "node\tlplus_diag\tcstar\n";
    for (NodeId i = 0; i < g.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        os << g.label(i) << '\t' << fmt(b.lplus(ii, ii)) << '\t' << fmt(cstar(ii)) << '\n';
    }
    return os.str();
}

Eigen::VectorXd metric_values(const Graph& g, const std::string& metric)
{
    const auto r = centrality_report(g);
    if (metric == "lplus") return r.lplus_diag;
    for (const auto& [name, v] : r.indices())
        if (name == metric) return *v;
    throw IoError("unknown metric '" + metric + "'");
}

std::vector<std::size_t> parse_sizes(const std::string& csv)
{
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size()) throw IoError("bad subnet size '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

int run_verify(const VerifyOptions& opt, const std::vector<std::string>& only, std::ostream& os)
{
    std::size_t total = 0, failed = 0;
    auto wanted = [&](const std::string& name) {
        if (only.empty()) return true;
        for (const auto& o : only)
            if (name == o || name.rfind(o + ".", 0) == 0) return true;
        return false;
    };
    bool any = false;
    for (const auto& s : suites()) {
        bool suite_hit = only.empty();
        for (const auto& o : only)
            if (o == s.name || o.rfind(std::string(s.name) + ".", 0) == 0) suite_hit = true;
        if (!suite_hit) continue;
        any = true;
        for (const auto& r : s.run(opt)) {
            if (!wanted(r.name) && !wanted(s.name)) continue;
            ++total;
            const bool ok = r.passed();
            if (!ok) ++failed;
            os << (ok ? "PASS " : "FAIL ") << r.name << " residual=" << fmt(r.residual)
               << " tolerance=" << fmt(r.tolerance) << " instances=" << r.instances << '\n';
            if (!ok) {
                os << "  failing instance:\n";
                std::istringstream lines(r.worst_instance);
                for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
            }
        }
    }
    if (!any) throw IoError("--only matched no suite");
    os << (total - failed) << '/' << total << " checks passed\n";
    return failed == 0 ? kOk : kVerifyFailed;
}

std::string forests_report(const Graph& g)
{
    const auto census = forest_census(g);
    const auto exact = lplus_diag_via_forests(census);
    const auto b = build_spectral(g);
    std::ostringstream os;
    os << "eps_n1 " << census.eps_n1 << "\neps_n2 " << census.eps_n2 << '\n';
    os << "node\teps_rooted\tforest\tspectral\tresidual\n";
    double worst = 0.0;
    for (NodeId i = 0; i < g.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const double res = std::abs(exact[i].value() - b.lplus(ii, ii));
        worst = std::max(worst, res);
        os << g.label(i) << '\t' << census.eps_rooted[i] << '\t' << exact[i].num << '/' << exact[i].den << '\t'
           << fmt(b.lplus(ii, ii)) << '\t' << fmt(res) << '\n';
    }
    os << "max_residual " << fmt(worst) << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Laplacian pseudo-inverse centrality toolkit"};
    app.require_subcommand(1);
    app.footer("Weighted shortest paths use edge length 1/w; unweighted graphs use hop count.");

    std::uint64_t seed = 42;
    bool as_json = false;
    std::string output;
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("-o,--output", output, "Output file (default stdout)");
    app.fallthrough();

    std::string input, input2;

    auto* analyze = app.add_subcommand("analyze", "L+ diagonal, C*, Kirchhoff index and comparison indices");
    bool as_csv = false;
    analyze->add_option("file", input, "Edge list")->required();
    analyze->add_flag("--csv", as_csv, "Comparison CSV");

    auto* compare = app.add_subcommand("compare", "CSV of degree, GC, SC, GB, RB and C*, raw and max-normalized");
    compare->add_option("file", input, "Edge list")->required();

    auto* walk = app.add_subcommand("walk", "Exact and Monte Carlo hitting times");
    std::string source, target, convention = "source-degree";
    std::uint64_t runs = 100000;
    unsigned workers = 1;
    walk->add_option("file", input, "Edge list")->required();
    walk->add_option("--source", source, "Start node label")->required();
    walk->add_option("--target", target, "Target node label")->required();
    walk->add_option("--runs", runs, "Monte Carlo runs")->capture_default_str();
    walk->add_option("--workers", workers, "Worker threads")->capture_default_str();
    walk->add_option("--convention", convention, "Degree in the dense approximation")
        ->check(CLI::IsMember({"source-degree", "target-degree"}))
        ->capture_default_str();

    auto* een = app.add_subcommand("een", "Equivalent electrical network");
    een->require_subcommand(1);
    auto* een_export = een->add_subcommand("export", "Netlist with one resistor per edge");
    een_export->add_option("file", input, "Edge list")->required();

    auto* verify = app.add_subcommand("verify", "Run the identity suites on seeded random instances");
    std::vector<std::string> only;
    double tolerance = 0.0;
    std::size_t n_max = 0, instances = 0;
    verify->add_option("--only", only, "Suite or check names");
    verify->add_option("--tolerance", tolerance, "Override every tolerance");
    verify->add_option("--n", n_max, "Largest random instance");
    verify->add_option("--instances", instances, "Random instances per suite");
    verify->add_option("--workers", workers, "Worker threads for Monte Carlo")->capture_default_str();
    auto* verify_forests = verify->add_subcommand("forests", "Forest census of one graph against the spectral route");
    verify_forests->add_option("file", input, "Edge list (unweighted, at most 14 nodes)")->required();

    auto* gen = app.add_subcommand("gen", "Core/gateway/subnet topology");
    std::string preset = "paper", subnets, wiring = "star";
    std::size_t core = 4, gateways = 10;
    double chords = 0.0;
    gen->add_option("--preset", preset, "paper or none")
        ->check(CLI::IsMember({"paper", "none"}))
        ->capture_default_str();
    gen->add_option("--core", core, "Core ring size")->capture_default_str();
    gen->add_option("--gateways", gateways, "Gateway count")->capture_default_str();
    gen->add_option("--subnets", subnets, "Comma-separated subnet sizes, one per gateway");
    gen->add_option("--wiring", wiring, "star or clique")->check(CLI::IsMember({"star", "clique"}));
    gen->add_option("--chord-p", chords, "Intra-subnet chord probability (star wiring)");

    auto* perturb = app.add_subcommand("perturb", "Degree-preserving rewire of the preset topology");
    std::string pert;
    perturb->add_option("file", input, "Edge list")->required();
    perturb->add_option("--preset", pert, "pert1 or pert2")->required()->check(CLI::IsMember({"pert1", "pert2"}));

    auto* sensitivity = app.add_subcommand("sensitivity", "Relative change of graph descriptors");
    sensitivity->add_option("before", input, "Edge list")->required();
    sensitivity->add_option("after", input2, "Edge list")->required();

    auto* dot = app.add_subcommand("export-dot", "Graphviz DOT colored by a metric");
    std::string metric = "cstar";
    dot->add_option("file", input, "Edge list")->required();
    dot->add_option("--metric", metric, "degree, gc, sc, gb, rb, cstar or lplus")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            const Graph g = load(input);
            if (as_csv)
                emit(comparison_csv(g, centrality_report(g)), output);
            else if (as_json)
                emit(centrality_json(g).dump(2) + "\n", output);
            else
                emit(analyze_text(g), output);
        } else if (*compare) {
            const Graph g = load(input);
            emit(comparison_csv(g, centrality_report(g)), output);
        } else if (*walk) {
            const Graph g = load(input);
            const NodeId i = node_by_label(g, source), j = node_by_label(g, target);
            const double exact = hitting_times_exact(g).hitting(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            const auto est = estimate_hitting_mc(g, i, j, runs, seed, workers);
            const auto conv = convention == "target-degree" ? DegreeConvention::target : DegreeConvention::source;
            const auto approx = approx_hitting_dense(g, i, j, conv);
            if (as_json) {
                json out{{"source", source}, {"target", target}, {"exact", exact}, {"estimate", to_json(est)},
                         {"dense_approximation", {{"convention", convention}, {"hitting", approx.hitting}, {"commute", approx.commute}}}};
                emit(out.dump(2) + "\n", output);
            } else {
                std::ostringstream os;
                os << "exact " << fmt(exact) << "\nmean " << fmt(est.mean) << "\nstd_error " << fmt(est.std_error)
                   << "\nruns " << est.runs << "\nseed " << est.seed << "\ndense_" << convention << ' '
                   << fmt(approx.hitting) << "\ndense_commute " << fmt(approx.commute) << '\n';
                emit(os.str(), output);
            }
        } else if (*een) {
            emit(een_netlist(load(input)), output);
        } else if (*verify) {
            if (*verify_forests) {
                emit(forests_report(load(input)), output);
                return kOk;
            }
            VerifyOptions opt;
            opt.seed = seed;
            opt.workers = workers;
            if (verify->count("--tolerance")) opt.tolerance = tolerance;
            if (verify->count("--n")) opt.n_max = n_max;
            if (verify->count("--instances")) opt.instances = instances;
            std::ostringstream os;
            const int code = run_verify(opt, only, os);
            emit(os.str(), output);
            return code;
        } else if (*gen) {
            TopologySpec spec;
            if (preset == "paper") {
                spec = reference_topology(seed);
            } else {
                spec.core_size = core;
                spec.gateway_count = gateways;
                spec.subnet_sizes = subnets.empty() ? std::vector<std::size_t>(gateways, 4) : parse_sizes(subnets);
                spec.wiring = wiring == "clique" ? SubnetWiring::clique : SubnetWiring::star;
                spec.chord_probability = chords;
                spec.seed = seed;
            }
            emit(to_edge_list(gen_core_gateway(spec)), output);
        } else if (*perturb) {
            emit(to_edge_list(pert_preset(load(input), pert == "pert1" ? Pert::one : Pert::two)), output);
        } else if (*sensitivity) {
            const auto r = sensitivity_report(load(input), load(input2));
            if (as_json) {
                emit(to_json(r).dump(2) + "\n", output);
            } else {
                std::ostringstream os;
                os << "descriptor\tbefore\tafter\tdelta\tdirection\n";
                const auto b = r.before.values(), a = r.after.values();
                for (std::size_t k = 0; k < Descriptors::names.size(); ++k)
                    os << Descriptors::names[k] << '\t' << fmt(b[k]) << '\t' << fmt(a[k]) << '\t' << fmt(r.deltas[k])
                       << '\t' << arrow(r.directions[k]) << '\n';
                emit(os.str(), output);
            }
        } else if (*dot) {
            const Graph g = load(input);
            emit(export_dot(g, metric_values(g, metric), metric), output);
        }
    } catch (const std::exception& e) {
        std::cerr << "lpcent: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
