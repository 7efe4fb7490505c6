#include "oddcol/plan.hpp"

#include "oddcol/audit.hpp"
#include "oddcol/bounds.hpp"
#include "oddcol/constructions.hpp"
#include "oddcol/exact.hpp"
#include "oddcol/greedy.hpp"
#include "oddcol/io.hpp"

#include <atomic>
#include <filesystem>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

namespace oddcol
{

namespace
{

bool known_algorithm(const std::string &a)
{
    return a == "greedy" || a == "greedy-degen" || a == "lll" || a == "two-phase" || a == "chi" || a == "product" ||
           a.rfind("exact-", 0) == 0;
}

Graph load_instance(const std::string &instance)
{
    if (std::filesystem::exists(instance))
        return load_graph(instance);
    return build(ConstructionSpec::parse(instance));
}

std::string csv_field(std::string text)
{
    for (char &ch : text)
        if (ch == ',' || ch == '\n' || ch == '\r')
            ch = ';';
    return text;
}

std::string format_double(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

/// Palette used by the odd-colouring theorem for this maximum degree.
int theorem_palette(int delta) { return delta + bounds::eta_odd(std::max(delta, 3)); }

void fill_from(TrialRecord &r, const SolveOutcome &out)
{
    r.status = out.status;
    r.iterations = out.work;
    r.millis = out.millis;
}

} // namespace

std::vector<PlanRow> parse_plan(std::istream &in, const std::string &base_dir)
{
    std::vector<PlanRow> rows;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#' || first == "c")
            continue;
        PlanRow row;
        row.instance = first;
        long long k = 0;
        if (!(ls >> row.algorithm >> k >> row.seed >> row.cap))
            throw ParseError(number, "expected `<graph-or-genspec> <algo> <k> <seed> <cap>`");
        std::string extra;
        if (ls >> extra)
            throw ParseError(number, "trailing token '" + extra + "'");
        if (k < 0 || k > 1'000'000)
            throw ParseError(number, "k out of range");
        row.k = static_cast<int>(k);
        if (!known_algorithm(row.algorithm))
            throw ParseError(number, "unknown algorithm '" + row.algorithm + "'");
        if (row.algorithm.rfind("exact-", 0) == 0) {
            try {
                Variant::parse(row.algorithm.substr(6));
            } catch (const std::exception &e) {
                throw ParseError(number, e.what());
            }
        }
        const std::filesystem::path path = std::filesystem::path(base_dir) / row.instance;
        if (std::filesystem::exists(path)) {
            row.instance = path.string();
        } else {
            try {
                check_spec(ConstructionSpec::parse(row.instance));
            } catch (const std::exception &) {
                throw ParseError(number, "'" + row.instance + "' is neither a file nor a construction spec");
            }
        }
        rows.push_back(row);
    }
    return rows;
}

TrialRecord run_trial(const PlanRow &row)
{
    TrialRecord r;
    r.instance = row.instance;
    r.algorithm = row.algorithm;
    r.k = row.k;
    r.seed = row.seed;
    r.cap = row.cap;
    try {
        const Graph g = load_instance(row.instance);
        const ResampleOptions opts{.cap = row.cap, .seed = row.seed};
        const std::string &a = row.algorithm;
        if (a == "greedy" || a == "greedy-degen") {
            const auto order = a == "greedy" ? identity_order(g.order()) : degeneracy_order(g);
            const Colouring c = greedy_odd(g, order);
            const int used = c.used();
            r.k = used;
            r.status = is_odd_colouring(g, c) && (row.k == 0 || used <= row.k) ? Status::sat : Status::gave_up;
        } else if (a == "lll" || a == "two-phase") {
            r.k = row.k > 0 ? row.k : theorem_palette(g.max_degree());
            fill_from(r, two_phase_colour(g, r.k, opts));
        } else if (a == "chi") {
            const PairGH p = neighbourhood_pair(g);
            const int eta = row.k - g.max_degree();
            fill_from(r, chi_bound_colour(p, complement(g.order(), {}), Colouring(g.order(), 0), eta, opts));
        } else if (a == "product") {
            const PairGH p = neighbourhood_pair(g);
            const Colouring inner = greedy_proper(g, identity_order(g.order()));
            const int k1 = std::max(1, *std::max_element(inner.colour.begin(), inner.colour.end()));
            Colouring sigma1 = inner;
            sigma1.k = k1;
            const int eta = row.k / k1;
            r.k = eta * k1;
            fill_from(r, product_colour(p, complement(g.order(), {}), Colouring(g.order(), 0), sigma1, eta, opts));
        } else {
            const PairGH p = neighbourhood_pair(g);
            ExactBudget budget;
            if (row.cap > 0)
                budget.nodes = row.cap;
            fill_from(r, decide(p, Variant::parse(a.substr(6)), row.k, budget));
        }
    } catch (const std::exception &e) {
        r.status = Status::gave_up;
        r.error = e.what();
    }
    return r;
}

std::vector<TrialRecord> run_plan(const std::vector<PlanRow> &rows, int threads)
{
    std::vector<TrialRecord> records(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < rows.size(); i = next++)
            records[i] = run_trial(rows[i]);
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < std::max(1, threads); ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto &f : pool)
        f.get();
    return records;
}

std::string trial_csv_header(bool timing)
{
    return std::string("instance,algorithm,k,seed,cap,status,iterations,error") + (timing ? ",ms" : "");
}

std::string trial_csv_row(const TrialRecord &r, bool timing)
{
    std::ostringstream os;
    os << csv_field(r.instance) << ',' << r.algorithm << ',' << r.k << ',' << r.seed << ',' << r.cap << ','
       << to_string(r.status) << ',' << r.iterations << ',' << csv_field(r.error);
    if (timing)
        os << ',' << format_double(r.millis);
    return os.str();
}

void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &records, bool timing)
{
    out << trial_csv_header(timing) << '\n';
    for (const auto &r : records)
        out << trial_csv_row(r, timing) << '\n';
}

} // namespace oddcol
