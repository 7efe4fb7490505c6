// oddcol: generators, colourers, validators, exact solves, bound evaluators
// and the experiment harness.

#include "oddcol/acceptance.hpp"
#include "oddcol/audit.hpp"
#include "oddcol/bounds.hpp"
#include "oddcol/constructions.hpp"
#include "oddcol/exact.hpp"
#include "oddcol/greedy.hpp"
#include "oddcol/io.hpp"
#include "oddcol/plan.hpp"
#include "oddcol/sampler.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace oddcol;

namespace
{

/// Bad input from the command line or a file: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

PairGH load_pair(const std::string &graph, const std::string &hyper)
{
    Graph g = load_graph(graph);
    if (hyper.empty())
        return neighbourhood_pair(g);
    return PairGH(std::move(g), load_hypergraph(hyper));
}

VertexSet load_subset(const std::string &path, int n)
{
    if (path.empty())
        return complement(n, {});
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    VertexSet s;
    for (Vertex v; in >> v;)
        s.push_back(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// Writes c only if it passes the validator for `variant`.
void emit_colouring(const PairGH &p, const Colouring &c, Variant variant, const std::string &path)
{
    if (!validate(p, c, variant))
        throw std::logic_error("refusing to write an invalid " + variant.name() + " colouring");
    if (path.empty() || path == "-")
        write_colouring(std::cout, c);
    else
        save_colouring(path, c);
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string family;
    std::vector<long long> params;
    std::string out = "-";
    std::string hyper;
    std::string design;
};

int run_gen(const GenArgs &a)
{
    ConstructionSpec spec = ConstructionSpec::parse(a.family);
    spec.params.insert(spec.params.end(), a.params.begin(), a.params.end());
    const Graph g = build(spec);
    if (a.out == "-")
        write_graph(std::cout, g);
    else
        save_graph(a.out, g);
    if (!a.hyper.empty())
        save_hypergraph(a.hyper, neighbourhood_hypergraph(g));
    if (!a.design.empty()) {
        if (spec.family != "steiner" || spec.params.size() != 2)
            throw UsageError("--design needs the steiner family with q and block size");
        save_hypergraph(a.design, steiner_system(static_cast<int>(spec.params[0]), static_cast<int>(spec.params[1]))
                                      .as_hypergraph());
    }
    return 0;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
    std::string graph, hyper, colouring, variant = "odd";
    int h = 1;
};

int run_validate(const ValidateArgs &a)
{
    const PairGH p = load_pair(a.graph, a.hyper);
    const Colouring c = load_colouring(a.colouring, p.graph.order());
    const AuditResult r = validate(p, c, Variant::parse(a.variant, a.h));
    std::cout << "kind,constraint,detail\n";
    for (const auto &v : r.violations)
        std::cout << to_string(v.kind) << ',' << v.constraint << ',' << v.detail << '\n';
    return r.ok ? 0 : 1;
}

// ---------------------------------------------------------------- colour

struct ColourArgs {
    std::string graph, hyper, subset, out;
    std::string order = "input";
    std::string variant = "two-phase";
    int k = 0;
    int h = 1;
    std::uint64_t cap = 1'000'000;
    std::uint64_t seed = 0;
};

int run_colour_greedy(const ColourArgs &a)
{
    const PairGH p = load_pair(a.graph, a.hyper);
    const auto order = parse_order(p.graph, a.order);
    const bool hodd = a.h > 1 || !a.hyper.empty();
    const Colouring c = hodd ? greedy_hodd(p, a.h, order) : greedy_odd(p.graph, order);
    emit_colouring(p, c, hodd ? Variant::hodd(a.h) : Variant::odd(), a.out);
    // k goes wherever the colouring does not
    (a.out.empty() || a.out == "-" ? std::cerr : std::cout) << "k = " << c.used() << '\n';
    return 0;
}

int run_colour_lll(const ColourArgs &a)
{
    const PairGH p = load_pair(a.graph, a.hyper);
    const Graph &g = p.graph;
    const int n = g.order();
    const ResampleOptions opts{.cap = a.cap, .seed = a.seed};
    TrialRecord rec;
    rec.instance = a.graph;
    rec.algorithm = a.variant;
    rec.seed = a.seed;
    rec.cap = a.cap;

    const VertexSet s = load_subset(a.subset, n);
    const std::vector<char> in = membership(n, s);
    // sigma0: greedy proper colouring of G - S, zero on S
    const VertexSet rest = complement(n, s);
    Colouring base(n, 0);
    {
        const Graph outside = g.induced(rest);
        const Colouring c = greedy_proper(outside, identity_order(outside.order()));
        for (std::size_t i = 0; i < rest.size(); ++i)
            base.colour[rest[i]] = c.colour[i];
        base.k = rest.empty() ? 0 : *std::max_element(c.colour.begin(), c.colour.end());
    }
    Colouring sigma1(n, 0);
    {
        const Graph inside = g.induced(s);
        const Colouring c = greedy_proper(inside, identity_order(inside.order()));
        for (std::size_t i = 0; i < s.size(); ++i)
            sigma1.colour[s[i]] = c.colour[i];
        sigma1.k = s.empty() ? 0 : *std::max_element(c.colour.begin(), c.colour.end());
    }
    int inner_delta = 0;
    for (Vertex v : s) {
        int d = 0;
        for (Vertex u : g.neighbours(v))
            d += in[u];
        inner_delta = std::max(inner_delta, d);
    }

    SolveOutcome out;
    Variant variant = Variant::odd();
    if (a.variant == "two-phase") {
        if (!a.hyper.empty())
            throw UsageError("two-phase works on the neighbourhood hypergraph; drop --hyper");
        rec.k = a.k;
        out = two_phase_colour(g, a.k, opts);
    } else if (a.variant == "chi") {
        const int eta = a.k - base.k - inner_delta;
        rec.k = a.k;
        out = chi_bound_colour(p, s, base, eta, opts);
    } else if (a.variant == "product") {
        if (sigma1.k == 0)
            throw UsageError("product needs a nonempty S");
        const int eta = (a.k - base.k) / sigma1.k;
        rec.k = base.k + eta * sigma1.k;
        out = product_colour(p, s, base, sigma1, eta, opts);
    } else if (a.variant == "hodd") {
        variant = a.h == 1 ? Variant::odd() : Variant::hodd(a.h);
        out = hodd_delta_colour(p, s, base, a.h, opts);
    } else if (a.variant == "hodd-product") {
        variant = a.h == 1 ? Variant::odd() : Variant::hodd(a.h);
        out = hodd_product_colour(p, s, base, sigma1, a.h, opts);
    } else {
        throw UsageError("unknown lll variant '" + a.variant + "'");
    }
    rec.status = out.status;
    rec.iterations = out.work;
    rec.millis = out.millis;
    if (out.certificate) {
        rec.k = out.certificate->k;
        emit_colouring(p, *out.certificate, variant, a.out.empty() ? "-" : a.out);
    }
    std::cerr << trial_csv_header(true) << '\n' << trial_csv_row(rec, true) << '\n';
    if (!a.out.empty() && a.out != "-")
        std::cout << trial_csv_header(true) << '\n' << trial_csv_row(rec, true) << '\n';
    return out.sat() ? 0 : 3;
}

// ---------------------------------------------------------------- exact

struct ExactArgs {
    std::string graph, hyper, variant = "odd", out;
    int h = 1;
    int k = 0;
    std::uint64_t nodes = 100'000'000;
    double seconds = 300.0;
    int threads = 1;
};

void exact_row(const std::string &instance, const std::string &variant, int k, Status status, std::uint64_t nodes,
               double ms)
{
    std::cout << "instance,variant,k,status,nodes,ms\n"
              << instance << ',' << variant << ',' << k << ',' << to_string(status) << ',' << nodes << ','
              << num(ms) << '\n';
}

int run_exact(const ExactArgs &a, bool minimise)
{
    const PairGH p = load_pair(a.graph, a.hyper);
    const Variant variant = Variant::parse(a.variant, a.h);
    ExactBudget budget{a.nodes, a.seconds, a.threads};
    if (minimise) {
        const auto r = chromatic_number(p, variant, budget);
        exact_row(a.graph, variant.name(), r.value, r.status, r.nodes, r.millis);
        if (r.certificate && !a.out.empty())
            emit_colouring(p, *r.certificate, variant, a.out);
        return r.status == Status::gave_up ? 3 : 0;
    }
    if (a.k < 1)
        throw UsageError("--k must be at least 1");
    const auto r = decide(p, variant, a.k, budget);
    exact_row(a.graph, variant.name(), a.k, r.status, r.work, r.millis);
    if (r.certificate && !a.out.empty())
        emit_colouring(p, *r.certificate, variant, a.out);
    return r.status == Status::gave_up ? 3 : 0;
}

// ---------------------------------------------------------------- bounds

double arg_double(const std::vector<std::string> &args, std::size_t i)
{
    if (i >= args.size())
        throw UsageError("missing argument " + std::to_string(i + 1));
    std::size_t used = 0;
    const double x = std::stod(args[i], &used);
    if (used != args[i].size())
        throw UsageError("not a number: " + args[i]);
    return x;
}

int arg_int(const std::vector<std::string> &args, std::size_t i)
{
    const double x = arg_double(args, i);
    if (x != std::floor(x) || std::abs(x) > 2e9)
        throw UsageError("not an integer: " + args[i]);
    return static_cast<int>(x);
}

void expect_args(const std::vector<std::string> &args, std::size_t count, const std::string &usage)
{
    if (args.size() != count)
        throw UsageError("usage: bounds " + usage);
}

int run_bound(const std::string &name, const std::vector<std::string> &args)
{
    if (name == "eta-odd") {
        expect_args(args, 1, "eta-odd <delta>");
        std::cout << bounds::eta_odd(arg_int(args, 0)) << '\n';
    } else if (name == "lambert-wm1") {
        expect_args(args, 1, "lambert-wm1 <y>");
        std::cout << num(bounds::lambert_wm1(arg_double(args, 0))) << '\n';
    } else if (name == "m-star") {
        expect_args(args, 1, "m-star <delta>");
        std::cout << bounds::m_star(arg_int(args, 0)) << '\n';
    } else if (name == "walk-tail") {
        expect_args(args, 3, "walk-tail <n> <k> <tau>");
        const auto b = bounds::walk_tail_bound(arg_int(args, 0), arg_int(args, 1), arg_double(args, 2));
        std::cout << num(b.prob()) << " raw " << num(b.raw) << '\n';
    } else if (name == "all-even") {
        expect_args(args, 2, "all-even <m> <tau>");
        const auto b = bounds::all_even_bound(arg_int(args, 0), arg_double(args, 1));
        std::cout << num(b.prob()) << " raw " << num(b.raw) << '\n';
    } else if (name == "few-odd") {
        expect_args(args, 3, "few-odd <m> <t> <tau>");
        const auto b = bounds::few_odd_bound(arg_int(args, 0), arg_int(args, 1), arg_double(args, 2));
        std::cout << num(b.prob()) << " raw " << num(b.raw) << '\n';
    } else if (name == "chernoff-lower") {
        expect_args(args, 2, "chernoff-lower <mu> <dev>");
        std::cout << num(bounds::chernoff_lower(arg_double(args, 0), arg_double(args, 1))) << '\n';
    } else if (name == "chernoff-upper") {
        expect_args(args, 2, "chernoff-upper <mu> <dev>");
        std::cout << num(bounds::chernoff_upper(arg_double(args, 0), arg_double(args, 1))) << '\n';
    } else if (name == "eta-hodd") {
        expect_args(args, 3, "eta-hodd <h> <eps> <delta_h>");
        const auto r = bounds::eta_hodd(arg_int(args, 0), arg_int(args, 1), arg_int(args, 2));
        std::cout << "t " << r.t << " m " << r.m << " eta " << r.eta << " eta_real " << num(r.eta_real)
                  << " closed_bound " << num(r.closed_bound) << " within " << (r.within_closed_bound ? 1 : 0)
                  << '\n';
    } else if (name == "stirling") {
        expect_args(args, 1, "stirling <n>");
        std::cout << (bounds::stirling_check(arg_int(args, 0)) ? "true" : "false") << '\n';
    } else if (name == "greedy-hodd") {
        expect_args(args, 3, "greedy-hodd <h> <dG> <dH>");
        std::cout << bounds::greedy_hodd_bound(arg_int(args, 0), arg_int(args, 1), arg_int(args, 2)) << '\n';
    } else {
        throw UsageError("unknown bound '" + name + "'");
    }
    return 0;
}

/// Grid lines: `walk <n> <k> <tau> [samples] [seed]`,
/// `chernoff-lower|chernoff-upper <n> <p> <dev> [samples] [seed]`.
int run_bounds_verify(const std::string &grid)
{
    std::ifstream in(grid);
    if (!in)
        throw UsageError("cannot open " + grid);
    std::cout << "formula,params,analytic,empirical,ci,ok\n";
    bool all = true;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#')
            continue;
        const std::string formula = tok[0];
        tok.erase(tok.begin());
        if (tok.size() < 3 || tok.size() > 5)
            throw ParseError(number, "expected `<formula> <a> <b> <c> [samples] [seed]`");
        const std::uint64_t samples = tok.size() > 3 ? static_cast<std::uint64_t>(arg_double(tok, 3)) : 1'000'000;
        const std::uint64_t seed = tok.size() > 4 ? static_cast<std::uint64_t>(arg_double(tok, 4)) : number;
        double analytic = 0, empirical = 0, ci = 0;
        if (formula == "walk") {
            bounds::WalkConfig cfg;
            cfg.steps = arg_int(tok, 0);
            cfg.level = arg_int(tok, 1);
            cfg.tau = arg_double(tok, 2);
            analytic = bounds::walk_tail_bound(cfg.steps, cfg.level, cfg.tau).prob();
            const auto est = bounds::simulate_walk(cfg, samples, seed);
            empirical = est.p_at_most_level;
            ci = est.half_width_99;
        } else if (formula == "chernoff-lower" || formula == "chernoff-upper") {
            const int n = arg_int(tok, 0);
            const double p = arg_double(tok, 1), dev = arg_double(tok, 2);
            const bool lower = formula == "chernoff-lower";
            analytic = lower ? bounds::chernoff_lower(n * p, dev) : bounds::chernoff_upper(n * p, dev);
            const auto est = lower ? bounds::simulate_binomial_lower(n, p, dev, samples, seed)
                                   : bounds::simulate_binomial_upper(n, p, dev, samples, seed);
            empirical = est.p;
            ci = est.half_width_99;
        } else {
            throw ParseError(number, "unknown formula '" + formula + "'");
        }
        const bool ok = empirical <= analytic + 3 * ci;
        all = all && ok;
        std::string params;
        for (std::size_t i = 0; i < 3; ++i)
            params += (i ? " " : "") + tok[i];
        std::cout << formula << ',' << params << ',' << num(analytic) << ',' << num(empirical) << ',' << num(ci) << ','
                  << (ok ? "true" : "false") << '\n';
    }
    return all ? 0 : 1;
}

// ---------------------------------------------------------------- plan

int run_plan_file(const std::string &path, const std::string &out, int threads, bool timing)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    const std::string dir = std::filesystem::path(path).parent_path().string();
    const auto rows = parse_plan(in, dir.empty() ? "." : dir);
    const auto records = run_plan(rows, threads);
    if (out.empty() || out == "-") {
        write_trials_csv(std::cout, records, timing);
    } else {
        std::ofstream os(out);
        if (!os)
            throw UsageError("cannot write " + out);
        write_trials_csv(os, records, timing);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Odd, proper conflict-free and h-odd colourings: generators, solvers and checks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a graph from a construction family");
    gen_cmd->add_option("family", gen.family, "Family, optionally with parameters (cycle:5)")->required();
    gen_cmd->add_option("params", gen.params, "Integer parameters");
    gen_cmd->add_option("-o,--output", gen.out, "Graph file (- for stdout)");
    gen_cmd->add_option("--hyper", gen.hyper, "Also write the neighbourhood hypergraph");
    gen_cmd->add_option("--design", gen.design, "steiner only: write the design as a hypergraph");

    ValidateArgs val;
    auto *val_cmd = app.add_subcommand("validate", "Check a colouring; exit 0 iff valid");
    val_cmd->add_option("-g,--graph", val.graph)->required();
    val_cmd->add_option("--hyper", val.hyper, "Hypergraph (default: neighbourhood hypergraph)");
    val_cmd->add_option("-c,--colouring", val.colouring)->required();
    val_cmd->add_option("--variant", val.variant, "proper|odd|pcf|hodd|hodd(N)");
    val_cmd->add_option("--h-odd", val.h, "h for hodd");

    ColourArgs col;
    auto *col_cmd = app.add_subcommand("colour", "Colour a graph");
    col_cmd->require_subcommand(1);
    auto *greedy_cmd = col_cmd->add_subcommand("greedy", "Greedy odd (or h-odd) colouring");
    greedy_cmd->add_option("-g,--graph", col.graph)->required();
    greedy_cmd->add_option("--hyper", col.hyper, "Hypergraph for h-odd colouring");
    greedy_cmd->add_option("--h-odd", col.h, "h > 1 selects h-odd greedy");
    greedy_cmd->add_option("--order", col.order, "input|degen|random:<seed>");
    greedy_cmd->add_option("-o,--output", col.out, "Colouring file (default stdout)");
    auto *lll_cmd = col_cmd->add_subcommand("lll", "Resampling colourers");
    lll_cmd->add_option("-g,--graph", col.graph)->required();
    lll_cmd->add_option("--hyper", col.hyper);
    lll_cmd->add_option("--subset", col.subset, "File with the vertices of S (default: all)");
    lll_cmd->add_option("--variant", col.variant, "two-phase|chi|product|hodd|hodd-product");
    lll_cmd->add_option("--k", col.k, "Palette size (two-phase, chi, product)");
    lll_cmd->add_option("--h-odd", col.h, "h for hodd variants");
    lll_cmd->add_option("--cap", col.cap, "Resampling cap");
    lll_cmd->add_option("--seed", col.seed);
    lll_cmd->add_option("-o,--output", col.out, "Colouring file (default stdout)");

    ExactArgs ex;
    auto add_exact = [&](CLI::App *cmd) {
        cmd->add_option("-g,--graph", ex.graph)->required();
        cmd->add_option("--hyper", ex.hyper);
        cmd->add_option("--variant", ex.variant, "proper|odd|pcf|hodd|hodd(N)");
        cmd->add_option("--h-odd", ex.h);
        cmd->add_option("--nodes", ex.nodes, "Node budget");
        cmd->add_option("--seconds", ex.seconds, "Time budget");
        cmd->add_option("--threads", ex.threads);
        cmd->add_option("-o,--output", ex.out, "Write the certificate here");
    };
    auto *exact_cmd = app.add_subcommand("exact", "Decide whether a k-colouring exists");
    add_exact(exact_cmd);
    exact_cmd->add_option("--k", ex.k)->required();
    auto *exact_min_cmd = app.add_subcommand("exact-min", "Exact chromatic parameter");
    add_exact(exact_min_cmd);

    std::string bound_name, grid;
    std::vector<std::string> bound_args;
    auto *bounds_cmd = app.add_subcommand("bounds", "Evaluate a bound, or `verify --grid <file>`");
    bounds_cmd->add_option("name", bound_name,
                           "eta-odd|lambert-wm1|m-star|walk-tail|all-even|few-odd|chernoff-lower|chernoff-upper|"
                           "eta-hodd|stirling|greedy-hodd|verify")
        ->required();
    bounds_cmd->add_option("args", bound_args)->allow_extra_args();
    bounds_cmd->add_option("--grid", grid, "Grid file for verify");

    std::string plan_path, plan_out;
    int plan_threads = 1;
    bool plan_timing = false;
    auto *plan_cmd = app.add_subcommand("plan", "Run an experiment plan");
    plan_cmd->add_option("file", plan_path)->required();
    plan_cmd->add_option("-o,--output", plan_out, "CSV file (default stdout)");
    plan_cmd->add_option("--threads", plan_threads);
    plan_cmd->add_flag("--timing", plan_timing, "Add a wall-time column (not reproducible)");

    std::string filter, mutate;
    auto *repro_cmd = app.add_subcommand("repro", "Run the acceptance suite");
    repro_cmd->add_option("--filter", filter, "Criterion id or tag (exact, greedy, sampler, bounds, audit)");
    repro_cmd->add_option("--mutate", mutate, "skip-witness: break greedy on purpose");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*val_cmd)
            return run_validate(val);
        if (*greedy_cmd)
            return run_colour_greedy(col);
        if (*lll_cmd)
            return run_colour_lll(col);
        if (*exact_cmd)
            return run_exact(ex, false);
        if (*exact_min_cmd)
            return run_exact(ex, true);
        if (*bounds_cmd) {
            if (bound_name == "verify") {
                if (grid.empty())
                    throw UsageError("bounds verify needs --grid <file>");
                return run_bounds_verify(grid);
            }
            return run_bound(bound_name, bound_args);
        }
        if (*plan_cmd)
            return run_plan_file(plan_path, plan_out, plan_threads, plan_timing);
        if (*repro_cmd) {
            AcceptanceConfig cfg;
            if (mutate == "skip-witness")
                cfg.skip_witness = true;
            else if (!mutate.empty())
                throw UsageError("unknown mutation '" + mutate + "'");
            const int failed = run_acceptance(std::cout, filter, cfg);
            return failed == 0 ? 0 : 1;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
