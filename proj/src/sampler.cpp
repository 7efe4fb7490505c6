#include "oddcol/sampler.hpp"

#include "oddcol/audit.hpp"
#include "oddcol/bounds.hpp"
#include "oddcol/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iterator>
#include <limits>
#include <set>
#include <stdexcept>

namespace oddcol
{

namespace
{

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Violated constraints, scanned lowest index first or at random.
class ViolationSet
{
public:
    void update(int cid, bool violated)
    {
        if (violated)
            set_.insert(cid);
        else
            set_.erase(cid);
    }
    bool empty() const { return set_.empty(); }
    int pick(Rng &rng, bool random_scan) const
    {
        if (!random_scan)
            return *set_.begin();
        return *std::next(set_.begin(), static_cast<std::ptrdiff_t>(rng.below(set_.size())));
    }

private:
    std::set<int> set_;
};

void intersect_sorted(std::span<const Vertex> a, std::span<const Vertex> b, std::vector<Vertex> &out)
{
    out.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

int max_degree_within(const Graph &g, const std::vector<char> &in)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in[v])
            continue;
        int d = 0;
        for (Vertex u : g.neighbours(v))
            d += in[u];
        best = std::max(best, d);
    }
    return best;
}

/// eps and Delta of H[S].
std::pair<int, int> restricted_shape(const PairGH &p, const VertexSet &s)
{
    const Hypergraph sub = induced_subhypergraph(p.hyper, s);
    return {sub.min_edge_size(), sub.max_degree()};
}

void check_subset(const PairGH &p, const VertexSet &s)
{
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("vertex set must be sorted without repeats");
    if (!s.empty() && (s.front() < 0 || s.back() >= p.graph.order()))
        throw std::invalid_argument("vertex set out of range");
}

void check_epsilon(int eps, int eta)
{
    if (2LL * eps < eta)
        throw std::invalid_argument("epsilon too small: eps(H[S]) = " + std::to_string(eps) + " < eta/2 = " +
                                    std::to_string(eta) + "/2");
}

/// base must be 0 on S, in [1, base.k] elsewhere and proper on G - S.
void check_frozen(const Graph &g, const std::vector<char> &in, const Colouring &base, const char *what)
{
    if (base.order() != g.order())
        throw std::invalid_argument(std::string(what) + " has the wrong size");
    for (Vertex v = 0; v < g.order(); ++v) {
        const Colour c = base.colour[v];
        if (in[v] ? c != unassigned : (c < 1 || c > base.k))
            throw std::invalid_argument(std::string(what) + " must colour exactly the vertices outside S");
        if (!in[v])
            for (Vertex u : g.neighbours(v))
                if (!in[u] && base.colour[u] == c)
                    throw std::invalid_argument(std::string(what) + " is not proper on G - S");
    }
}

/// sigma1 must colour S within [1, sigma1.k] properly on G[S].
void check_inner(const Graph &g, const std::vector<char> &in, const Colouring &sigma1)
{
    if (sigma1.order() != g.order())
        throw std::invalid_argument("sigma1 has the wrong size");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in[v])
            continue;
        const Colour c = sigma1.colour[v];
        if (c < 1 || c > sigma1.k)
            throw std::invalid_argument("sigma1 must colour every vertex of S");
        for (Vertex u : g.neighbours(v))
            if (in[u] && sigma1.colour[u] == c)
                throw std::invalid_argument("sigma1 is not proper on G[S]");
    }
}

using AvailableFn = std::function<void(const OddAudit &, Vertex, std::vector<Colour> &)>;

/// Colours S at random from the available lists, then resamples M(e) of
/// violated hyperedges (fewer than min{h,|e|} odd colours).
SolveOutcome resample_pair(const PairGH &p, const VertexSet &s, Colouring start, int h, int m,
                           const AvailableFn &available, bool fixed_labels, const ResampleOptions &opts)
{
    const auto t0 = Clock::now();
    Rng rng(opts.seed);
    OddAudit audit = OddAudit::for_hypergraph(p.hyper, std::move(start));
    std::vector<Colour> avail;
    auto draw = [&](Vertex x) {
        available(audit, x, avail);
        if (avail.empty())
            throw std::logic_error("empty available list");
        audit.recolour(x, unassigned, avail[rng.below(avail.size())]);
    };
    for (Vertex x : s)
        draw(x);

    std::vector<std::vector<Vertex>> restricted(p.hyper.size());
    for (std::size_t e = 0; e < p.hyper.size(); ++e)
        intersect_sorted(p.hyper.edge(e), s, restricted[e]);
    const ResampleSchedule schedule = make_schedule(restricted, m, opts.cap, opts.seed);

    ViolationSet violated;
    for (int e = 0; e < audit.constraint_count(); ++e)
        violated.update(e, !audit.satisfied(e, h));

    SolveOutcome out;
    if (fixed_labels && !violated.empty()) {
        out.status = Status::gave_up;
        out.millis = millis_since(t0);
        return out;
    }
    while (!violated.empty()) {
        if (out.work >= opts.cap) {
            out.status = Status::gave_up;
            out.millis = millis_since(t0);
            return out;
        }
        const int e = violated.pick(rng, opts.random_scan);
        if (schedule.resample[e].empty()) {
            // nothing of this edge lies in S
            out.status = Status::gave_up;
            out.millis = millis_since(t0);
            return out;
        }
        for (Vertex x : schedule.resample[e]) {
            audit.recolour(x, audit.colour(x), unassigned);
            draw(x);
        }
        for (int f : schedule.dependents[e])
            violated.update(f, !audit.satisfied(f, h));
        ++out.work;
    }

    const Colouring &result = audit.colouring();
    const Variant variant = h == 1 ? Variant::odd() : Variant::hodd(h);
    if (!validate(p, result, variant))
        throw std::logic_error("resampler produced an invalid " + variant.name() + " colouring");
    out.status = Status::sat;
    out.certificate = result;
    out.millis = millis_since(t0);
    return out;
}

SolveOutcome delta_colour(const PairGH &p, const VertexSet &s, const Colouring &base, int eta, int h, int m,
                          const ResampleOptions &opts)
{
    const int n = p.graph.order();
    const std::vector<char> in = membership(n, s);
    check_frozen(p.graph, in, base, "base");
    const int k = base.k + max_degree_within(p.graph, in) + eta;
    Colouring start(n, k);
    start.colour = base.colour;
    std::vector<char> banned;
    AvailableFn available = [&](const OddAudit &a, Vertex x, std::vector<Colour> &out) {
        banned.assign(k + 1, 0);
        for (Vertex u : p.graph.neighbours(x))
            banned[a.colour(u)] = 1;
        out.clear();
        for (Colour c = 1; c <= k; ++c)
            if (!banned[c])
                out.push_back(c);
    };
    return resample_pair(p, s, std::move(start), h, m, available, false, opts);
}

SolveOutcome labelled_colour(const PairGH &p, const VertexSet &s, const Colouring &sigma0, const Colouring &sigma1,
                             int eta, int h, int m, const ResampleOptions &opts)
{
    const int n = p.graph.order();
    const std::vector<char> in = membership(n, s);
    check_frozen(p.graph, in, sigma0, "sigma0");
    check_inner(p.graph, in, sigma1);
    const int k0 = sigma0.k;
    const int k = k0 + eta * sigma1.k;
    Colouring start(n, k);
    start.colour = sigma0.colour;
    AvailableFn available = [&](const OddAudit &, Vertex x, std::vector<Colour> &out) {
        out.clear();
        const Colour first = k0 + (sigma1.colour[x] - 1) * eta;
        for (int label = 1; label <= eta; ++label)
            out.push_back(first + label);
    };
    return resample_pair(p, s, std::move(start), h, m, available, eta == 1, opts);
}

bounds::HoddParams hodd_params(const PairGH &p, const VertexSet &s, int h)
{
    if (h < 1)
        throw std::invalid_argument("h must be at least 1");
    const auto [eps, delta_h] = restricted_shape(p, s);
    if (h >= 2 && std::min(h - 1, eps - h + 1) < 1)
        throw std::invalid_argument("edge too small for h: need eps(H[S]) >= h");
    return bounds::eta_hodd(h, std::max(eps, 1), delta_h);
}

} // namespace

ResampleSchedule make_schedule(const std::vector<std::vector<Vertex>> &constraints, int m, std::uint64_t cap,
                               std::uint64_t seed)
{
    if (m < 0)
        throw std::invalid_argument("resample size must be nonnegative");
    ResampleSchedule sched;
    sched.cap = cap;
    sched.seed = seed;
    Vertex top = -1;
    for (const auto &e : constraints)
        if (!e.empty())
            top = std::max(top, *std::max_element(e.begin(), e.end()));
    std::vector<std::vector<int>> containing(static_cast<std::size_t>(top + 1));
    for (std::size_t i = 0; i < constraints.size(); ++i)
        for (Vertex v : constraints[i])
            containing[v].push_back(static_cast<int>(i));

    sched.resample.resize(constraints.size());
    sched.dependents.resize(constraints.size());
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        std::vector<Vertex> sorted = constraints[i];
        std::sort(sorted.begin(), sorted.end());
        sorted.resize(std::min(sorted.size(), static_cast<std::size_t>(m)));
        auto &deps = sched.dependents[i];
        for (Vertex v : sorted)
            deps.insert(deps.end(), containing[v].begin(), containing[v].end());
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        sched.resample[i] = std::move(sorted);
    }
    return sched;
}

SolveOutcome two_phase_colour(const Graph &g, int k, const ResampleOptions &opts)
{
    const auto t0 = Clock::now();
    const int n = g.order();
    const int delta = g.max_degree();
    if (k < delta + 1)
        throw std::invalid_argument("two-phase colouring needs k >= Delta + 1");
    const int eta = k - delta;
    const int m = std::max(1, eta / 2);

    const DegreeSplit split = vplus_split(g, k);
    const std::vector<char> plus = membership(n, split.vplus);
    const std::vector<char> plusplus = membership(n, split.vplusplus);
    std::vector<char> dominated(n, 0);
    for (Vertex v : split.vminus) {
        auto nb = g.neighbours(v);
        dominated[v] = !nb.empty() && std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return plus[u] != 0; });
    }

    Rng rng(opts.seed);
    OddAudit audit = OddAudit::for_graph(g, Colouring(n, k));
    std::vector<char> banned;
    std::vector<Colour> avail;

    // x must be uncoloured; a dominated neighbour whose other neighbours are
    // all coloured and which has a single odd colour protects it
    auto available = [&](Vertex x) {
        banned.assign(k + 1, 0);
        for (Vertex u : g.neighbours(x)) {
            if (plus[u])
                banned[audit.colour(u)] = 1;
            if (dominated[u] && audit.coloured_count(u) == g.degree(u) - 1 && audit.odd_count(u) == 1)
                banned[*audit.witness(u)] = 1;
        }
        avail.clear();
        for (Colour c = 1; c <= k; ++c)
            if (!banned[c])
                avail.push_back(c);
        if (avail.empty())
            throw std::logic_error("no admissible colour left in phase 1");
    };

    for (Vertex x : split.vplus) {
        available(x);
        audit.recolour(x, unassigned, opts.random_start ? avail[rng.below(avail.size())] : avail.front());
    }

    std::vector<std::vector<Vertex>> constraints(n);
    for (Vertex v : split.vplusplus) {
        auto nb = g.neighbours(v);
        constraints[v].assign(nb.begin(), nb.end());
    }
    const ResampleSchedule schedule = make_schedule(constraints, m, opts.cap, opts.seed);

    SolveOutcome out;
    ViolationSet violated;
    for (Vertex v : split.vplusplus)
        violated.update(v, audit.odd_count(v) == 0);
    while (!violated.empty()) {
        if (out.work >= opts.cap) {
            out.status = Status::gave_up;
            out.millis = millis_since(t0);
            return out;
        }
        const int v = violated.pick(rng, opts.random_scan);
        for (Vertex x : schedule.resample[v]) {
            audit.recolour(x, audit.colour(x), unassigned);
            available(x);
            audit.recolour(x, unassigned, avail[rng.below(avail.size())]);
        }
        for (int u : schedule.dependents[v])
            if (plusplus[u])
                violated.update(u, audit.odd_count(u) == 0);
        ++out.work;
    }

    // phase 2: each neighbour forbids its colour and, if critical, its witness
    for (Vertex v : split.vminus) {
        banned.assign(k + 1, 0);
        for (Vertex u : g.neighbours(v)) {
            banned[audit.colour(u)] = 1;
            if (audit.odd_count(u) == 1)
                banned[*audit.witness(u)] = 1;
        }
        Colour pick = unassigned;
        for (Colour c = 1; c <= k && pick == unassigned; ++c)
            if (!banned[c])
                pick = c;
        if (pick == unassigned)
            throw std::logic_error("no colour left in phase 2");
        audit.recolour(v, unassigned, pick);
    }

    if (!is_odd_colouring(g, audit.colouring()))
        throw std::logic_error("two-phase colourer produced an invalid odd colouring");
    out.status = Status::sat;
    out.certificate = audit.colouring();
    out.millis = millis_since(t0);
    return out;
}

SolveOutcome chi_bound_colour(const PairGH &p, const VertexSet &s, const Colouring &base, int eta,
                              const ResampleOptions &opts)
{
    check_subset(p, s);
    if (eta < 1)
        throw std::invalid_argument("eta must be positive");
    check_epsilon(restricted_shape(p, s).first, eta);
    return delta_colour(p, s, base, eta, 1, (eta + 1) / 2, opts);
}

SolveOutcome product_colour(const PairGH &p, const VertexSet &s, const Colouring &sigma0, const Colouring &sigma1,
                            int eta, const ResampleOptions &opts)
{
    check_subset(p, s);
    if (eta < 1)
        throw std::invalid_argument("eta must be positive");
    check_epsilon(restricted_shape(p, s).first, eta);
    return labelled_colour(p, s, sigma0, sigma1, eta, 1, (eta + 1) / 2, opts);
}

SolveOutcome hodd_delta_colour(const PairGH &p, const VertexSet &s, const Colouring &base, int h,
                               const ResampleOptions &opts)
{
    check_subset(p, s);
    const bounds::HoddParams params = hodd_params(p, s, h);
    if (h == 1)
        return chi_bound_colour(p, s, base, params.eta, opts);
    return delta_colour(p, s, base, params.eta, h, params.m, opts);
}

SolveOutcome hodd_product_colour(const PairGH &p, const VertexSet &s, const Colouring &sigma0,
                                 const Colouring &sigma1, int h, const ResampleOptions &opts)
{
    check_subset(p, s);
    const bounds::HoddParams params = hodd_params(p, s, h);
    if (h == 1)
        return product_colour(p, s, sigma0, sigma1, params.eta, opts);
    return labelled_colour(p, s, sigma0, sigma1, params.eta, h, params.m, opts);
}

SubsetSample sample_subset(const PairGH &p, int m, int retries, std::uint64_t seed)
{
    if (m < 1)
        throw std::invalid_argument("m must be positive");
    const Graph &g = p.graph;
    const int n = g.order();
    const int dg = g.max_degree();
    const int eps = p.hyper.min_edge_size();
    const int delta = dg + p.hyper.max_degree();
    const int r = dg > 0 ? std::min(eps, dg) : eps;
    if (r < 1)
        throw std::invalid_argument("subset sampling needs eps(H) >= 1");
    const double log_delta = std::log(std::max(delta, 1));
    SubsetSample out;
    out.probability = (m + std::sqrt(11.0 * m * log_delta)) / r;
    out.degree_limit = (static_cast<double>(dg) / r) * (m + std::sqrt(60.0 * m * log_delta));
    if (out.probability > 1.0)
        throw std::invalid_argument("inclusion probability exceeds 1; m is too large for r = " + std::to_string(r));

    Rng rng(seed);
    std::vector<char> in(n);
    for (out.attempts = 1; out.attempts <= retries; ++out.attempts) {
        for (Vertex v = 0; v < n; ++v)
            in[v] = rng.bernoulli(out.probability);
        int worst = std::numeric_limits<int>::max();
        for (const auto &e : p.hyper.edges()) {
            int hit = 0;
            for (Vertex v : e)
                hit += in[v];
            worst = std::min(worst, hit);
        }
        if (p.hyper.size() == 0)
            worst = 0;
        const int degree = max_degree_within(g, in);
        if ((p.hyper.size() == 0 || worst >= m) && degree <= out.degree_limit) {
            out.found = true;
            out.epsilon = worst;
            out.max_degree = degree;
            for (Vertex v = 0; v < n; ++v)
                if (in[v])
                    out.vertices.push_back(v);
            return out;
        }
    }
    out.attempts = retries;
    return out;
}

} // namespace oddcol
