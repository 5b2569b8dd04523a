// arbor: command-line front end for the arboricity library.

#include "arbor/chain.hpp"
#include "arbor/coloring.hpp"
#include "arbor/constructive.hpp"
#include "arbor/generators.hpp"
#include "arbor/io.hpp"
#include "arbor/reproduce.hpp"
#include "arbor/solver.hpp"
#include "arbor/structure.hpp"
#include "arbor/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace arbor;

namespace {

enum Exit : int {
    kOk = 0,
    kNegative = 1, // infeasible or verification failed
    kBudget = 2,
    kUsage = 64,
    kFormat = 65,
};

int to_int(const std::string &text, const std::string &what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError("expected an integer for " + what + ", got '" + text + "'");
    return value;
}

std::map<Vertex, int> parse_loads(const std::vector<std::string> &specs)
{
    std::map<Vertex, int> loads;
    for (const auto &s : specs) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw InputError("load constraint must look like vertex:count, got '" + s + "'");
        loads[to_int(s.substr(0, colon), "vertex")] = to_int(s.substr(colon + 1), "load");
    }
    return loads;
}

Budget budget_from(std::uint64_t nodes, double seconds)
{
    Budget b;
    if (const char *env = std::getenv("ARBOR_BUDGET_NODES"))
        b.nodes = std::strtoull(env, nullptr, 10);
    if (nodes)
        b.nodes = nodes;
    if (seconds > 0)
        b.wall_time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    return b;
}

ForestClass class_from(const std::string &text)
{
    if (auto cls = parse_forest_class(text))
        return *cls;
    throw InputError("unknown class '" + text + "' (forest, wif, if, sf, wisf, isf, matching, im)");
}

CoverMode mode_from(const std::string &text)
{
    if (auto mode = parse_cover_mode(text))
        return *mode;
    throw InputError("unknown mode '" + text + "' (cover, partition)");
}

/// Writes to `path`, or stdout when path is empty or "-".
template <typename F>
void emit(const std::string &path, F &&write)
{
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path);
    write(out);
}

Graph generate(const std::string &family, const std::vector<std::string> &args, std::uint64_t seed,
               std::optional<std::int64_t> truncate, std::vector<std::string> &roles)
{
    auto arg = [&](std::size_t i) {
        if (i >= args.size())
            throw InputError("family '" + family + "' needs more arguments");
        return to_int(args[i], family + " argument");
    };
    auto labeled = [&](LabeledGraph lg) {
        roles = std::move(lg.roles);
        return std::move(lg.graph);
    };
    if (family == "complete")
        return complete(arg(0));
    if (family == "complete-bipartite")
        return complete_bipartite(arg(0), arg(1));
    if (family == "complete-multipartite") {
        std::vector<int> parts;
        for (std::size_t i = 0; i < args.size(); ++i)
            parts.push_back(arg(i));
        return complete_multipartite(parts);
    }
    if (family == "cycle")
        return cycle(arg(0));
    if (family == "path")
        return path(arg(0));
    if (family == "path-power")
        return path_power(arg(0), arg(1));
    if (family == "double-wheel")
        return labeled(double_wheel(arg(0)).labeled);
    if (family == "gk")
        return labeled(gk(arg(0)).labeled);
    if (family == "prop2")
        return labeled(prop2_gadget(arg(0)).labeled);
    if (family == "planar-gadget")
        return labeled(planar_ia_gadget());
    if (family == "degenerate-lb")
        return labeled(degenerate_lb_graph(arg(0), truncate).labeled);
    if (family == "random-degenerate")
        return random_degenerate(arg(0), arg(1), seed);
    if (family == "random") {
        if (args.size() < 2)
            throw InputError("random needs n and p");
        return random_graph(arg(0), std::stod(args[1]), seed);
    }
    if (family == "subdivide") {
        if (args.empty())
            throw InputError("subdivide needs a graph file");
        return subdivide_once(load_graph(args[0]));
    }
    throw InputError("unknown family '" + family + "'");
}

void print_summary(std::ostream &out, const SolveResult &r)
{
    out << "status " << tag(r.status) << "\n";
    if (r.status == SolveStatus::Feasible)
        out << "parts " << r.certificate->k() << "\n";
    if (r.status == SolveStatus::BudgetExhausted)
        out << "bounds " << r.lower << ".." << r.upper << "\n";
    out << "nodes " << r.stats.nodes << "\n" << "seconds " << r.stats.seconds << "\n";
}

int exit_for(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Feasible: return kOk;
    case SolveStatus::Infeasible: return kNegative;
    case SolveStatus::BudgetExhausted: return kBudget;
    }
    return kNegative;
}

int report_cover(const Graph &g, const CoverCertificate &cert, const std::string &out_path, const std::string &what)
{
    auto report = verify_certificate(g, cert);
    emit(out_path, [&](std::ostream &o) { write_certificate(o, cert); });
    std::cerr << what << ": " << cert.k() << " parts of class " << tag(cert.cls) << ", "
              << (report.valid() ? "verified" : "NOT verified") << "\n";
    for (const auto &line : report.diagnostics())
        std::cerr << "  " << line << "\n";
    return report.valid() ? kOk : kNegative;
}

ColoringCertificate coloring_or_compute(const Graph &g, const std::string &path, bool acyclic, Budget budget)
{
    if (!path.empty())
        return load_coloring(path, g.order());
    auto r = acyclic ? acyclic_chromatic_number(g, budget) : chromatic_number(g, budget);
    if (r.status != SolveStatus::Feasible)
        throw std::runtime_error("could not compute a colouring within budget");
    return *r.certificate;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact and constructive covers of graphs by forest-like classes"};
    app.require_subcommand(1);

    std::uint64_t budget_nodes = 0;
    double time_limit = 0;
    app.add_option("--budget-nodes", budget_nodes, "Search node budget per decision (env ARBOR_BUDGET_NODES)");
    app.add_option("--time-limit", time_limit, "Wall-clock seconds per decision");

    // gen
    auto *gen = app.add_subcommand("gen", "Generate a graph family");
    std::string family, gen_out, roles_out;
    std::vector<std::string> gen_args;
    std::uint64_t seed = 1;
    std::optional<std::int64_t> truncate;
    gen->add_option("family", family,
                    "complete, complete-bipartite, complete-multipartite, cycle, path, path-power, double-wheel, "
                    "gk, prop2, planar-gadget, degenerate-lb, random-degenerate, random, subdivide")
        ->required();
    gen->add_option("args", gen_args, "Family parameters");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
    gen->add_option("--roles", roles_out, "Write vertex roles to this file");
    gen->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen->add_option("--truncate", truncate, "Truncated N for degenerate-lb");

    // param / decide
    std::string graph_path, cls_text = "forest", mode_text = "cover", cert_out;
    std::vector<std::string> caps, floors;
    auto add_solver_options = [&](CLI::App *cmd) {
        cmd->add_option("graph", graph_path, "Graph file")->required();
        cmd->add_option("-c,--class", cls_text, "Class tag")->capture_default_str();
        cmd->add_option("-m,--mode", mode_text, "cover or partition")->capture_default_str();
        cmd->add_option("--cert", cert_out, "Write the certificate here (default stdout)");
        cmd->add_option("--load-cap", caps, "vertex:max parts containing it");
        cmd->add_option("--load-floor", floors, "vertex:min parts containing it");
    };
    auto *param = app.add_subcommand("param", "Compute the minimum number of parts");
    add_solver_options(param);
    auto *decide = app.add_subcommand("decide", "Decide whether k parts suffice");
    add_solver_options(decide);
    int k = 0;
    decide->add_option("-k", k, "Number of parts")->required();

    // build
    auto *build = app.add_subcommand("build", "Run a constructive upper-bound builder");
    std::string method, build_cert, build_coloring, build_out;
    int modulus = 2;
    build->add_option("method", method, "layers, degen, acyclic-pairs, acyclic-matchings, leaf-split, minor-coloring")
        ->required();
    build->add_option("graph", graph_path, "Graph file")->required();
    build->add_option("--cert", build_cert, "Input cover certificate (layers, leaf-split)");
    build->add_option("--coloring", build_coloring, "Input vertex colouring (computed when omitted)");
    build->add_option("--modulus", modulus, "Layer modulus for layers: 2 or 3")->capture_default_str();
    build->add_option("-o,--output", build_out, "Output file (default stdout)");

    // certify
    auto *certify = app.add_subcommand("certify", "Verify a cover certificate or colouring");
    std::string certificate_path;
    certify->add_option("graph", graph_path, "Graph file")->required();
    certify->add_option("certificate", certificate_path, "Certificate or colouring file")->required();

    // chain
    auto *chain = app.add_subcommand("chain", "Compute all parameters and check the inequalities");
    chain->add_option("graph", graph_path, "Graph file")->required();
    bool seed_bounds = false;
    chain->add_flag("--seed-bounds", seed_bounds,
                    "Start later searches at values implied by earlier ones (assumes the inequalities)");

    // reproduce
    auto *repro = app.add_subcommand("reproduce", "Run the acceptance criteria");
    bool extended = false;
    std::string golden;
    repro->add_flag("--extended", extended, "Add the long-running rows");
    repro->add_option("--seed", seed, "Seed for the random rows")->capture_default_str();
    repro->add_option("--golden", golden, "Golden tree file for criterion 13");

    // dot
    auto *dot = app.add_subcommand("dot", "Render a graph in DOT");
    std::string dot_cert;
    dot->add_option("graph", graph_path, "Graph file")->required();
    dot->add_option("--cert", dot_cert, "Colour edges by this certificate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Budget budget = budget_from(budget_nodes, time_limit);

        if (*gen) {
            std::vector<std::string> roles;
            Graph g = generate(family, gen_args, seed, truncate, roles);
            emit(gen_out, [&](std::ostream &o) { write_graph(o, g); });
            if (!roles_out.empty()) {
                if (roles.empty())
                    throw InputError("family '" + family + "' has no roles");
                emit(roles_out, [&](std::ostream &o) { write_roles(o, roles); });
            }
            return kOk;
        }

        if (*param || *decide) {
            SolveRequest req;
            req.graph = load_graph(graph_path);
            req.cls = class_from(cls_text);
            req.mode = mode_from(mode_text);
            req.load_caps = parse_loads(caps);
            req.load_floors = parse_loads(floors);
            req.budget = budget;
            if (*decide)
                req.k = k;
            auto r = *decide ? decide_cover(req) : min_cover(req);
            if (*param && r.status == SolveStatus::Feasible)
                std::cout << r.k << "\n";
            if (r.status == SolveStatus::Feasible && (*decide || !cert_out.empty()))
                emit(cert_out, [&](std::ostream &o) { write_certificate(o, *r.certificate); });
            print_summary(std::cerr, r);
            return exit_for(r.status);
        }

        if (*build) {
            Graph g = load_graph(graph_path);
            if (method == "layers") {
                if (build_cert.empty())
                    throw InputError("layers needs --cert");
                return report_cover(g, split_layers(g, load_certificate(build_cert), modulus), build_out, method);
            }
            if (method == "degen") {
                auto built = degeneracy_star_cover(g);
                std::cerr << "degeneracy " << built.coloring.ordering.d << "\n";
                return report_cover(g, built.cover, build_out, method);
            }
            if (method == "acyclic-pairs" || method == "acyclic-matchings") {
                auto col = coloring_or_compute(g, build_coloring, true, budget);
                auto built = method == "acyclic-pairs" ? acyclic_pairs_cover(g, col) : acyclic_matching_cover(g, col);
                std::cerr << col.colors << " colour classes, " << built.slots << " slots\n";
                return report_cover(g, built.cover, build_out, method);
            }
            if (method == "leaf-split") {
                if (build_cert.empty())
                    throw InputError("leaf-split needs --cert with star forests");
                auto col = build_coloring.empty() ? greedy_coloring(g) : load_coloring(build_coloring, g.order());
                return report_cover(g, leaf_color_split(g, load_certificate(build_cert), col), build_out, method);
            }
            if (method == "minor-coloring") {
                // colours G as a half-shallow minor of sd_1(G)
                Graph host = subdivide_once(g);
                auto dec = subdivision_star_decomposition(g);
                auto phi = chromatic_number(host, budget);
                SolveRequest req;
                req.graph = host;
                req.cls = ForestClass::InducedStarForest;
                req.budget = budget;
                auto stars = min_cover(req);
                if (phi.status != SolveStatus::Feasible || stars.status != SolveStatus::Feasible) {
                    std::cerr << "budget exhausted on the host graph\n";
                    return kBudget;
                }
                auto psi = shallow_minor_coloring(host, dec, *phi.certificate, *stars.certificate);
                emit(build_out, [&](std::ostream &o) { write_coloring(o, psi.coloring); });
                bool ok = verify_coloring(psi.minor, psi.coloring);
                std::cerr << "largest colour " << psi.coloring.colors << ", " << (ok ? "verified" : "NOT verified")
                          << "\n";
                return ok ? kOk : kNegative;
            }
            throw InputError("unknown build method '" + method + "'");
        }

        if (*certify) {
            Graph g = load_graph(graph_path);
            std::ifstream probe(certificate_path);
            std::string first;
            probe >> first;
            if (first == "col") {
                auto col = load_coloring(certificate_path, g.order());
                bool ok = false;
                try {
                    ok = verify_coloring(g, col);
                } catch (const InputError &e) {
                    std::cout << "invalid: " << e.what() << "\n";
                    return kNegative;
                }
                std::cout << (ok ? "valid" : "invalid") << " " << tag(col.kind) << " colouring with " << col.colors
                          << " colours\n";
                return ok ? kOk : kNegative;
            }
            auto cert = load_certificate(certificate_path);
            VerifyReport report;
            try {
                report = verify_certificate(g, cert);
            } catch (const InputError &e) {
                std::cout << "invalid: " << e.what() << "\n";
                return kNegative;
            }
            std::cout << (report.valid() ? "valid" : "invalid") << " " << tag(cert.mode) << " by " << cert.k() << " "
                      << tag(cert.cls) << " parts\n";
            for (const auto &line : report.diagnostics())
                std::cout << "  " << line << "\n";
            return report.valid() ? kOk : kNegative;
        }

        if (*chain) {
            Graph g = load_graph(graph_path);
            ParameterOptions options;
            options.budget = budget;
            options.chain_seeding = seed_bounds;
            auto report = compute_parameters(g, options);
            for (auto p : all_parameters) {
                std::cout << name(p) << " ";
                if (auto it = report.values.find(p); it != report.values.end())
                    std::cout << it->second << "\n";
                else
                    std::cout << "unresolved\n";
            }
            auto violations = check_inequality_chain(report.values);
            for (const auto &v : violations)
                std::cout << "violation: " << v << "\n";
            if (!violations.empty())
                return kNegative;
            return report.unresolved.empty() ? kOk : kBudget;
        }

        if (*repro) {
            ReproduceOptions options;
            options.extended = extended;
            options.seed = seed;
            if (!golden.empty())
                options.golden_tree = golden;
            options.on_result = [](const CriterionResult &row) { print_result(std::cout, row); };
            auto rows = reproduce(options);
            bool ok = all_gating_passed(rows);
            std::cout << (ok ? "all gating criteria passed" : "some gating criteria FAILED") << "\n";
            return ok ? kOk : kNegative;
        }

        if (*dot) {
            Graph g = load_graph(graph_path);
            if (dot_cert.empty()) {
                std::cout << to_dot(g);
            } else {
                auto cert = load_certificate(dot_cert);
                std::cout << to_dot(g, &cert);
            }
            return kOk;
        }
    } catch (const FormatError &e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kFormat;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    }
    return kUsage;
}
