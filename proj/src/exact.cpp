#include "oddcol/exact.hpp"

#include "oddcol/constructions.hpp"
#include "oddcol/greedy.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <mutex>
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

/// Budget and cancellation shared by all workers of one decide call.
struct Control {
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_limit = 0;
    Clock::time_point deadline;
};

class Search
{
public:
    Search(const PairGH &p, Variant variant, int k, const std::vector<Vertex> &order, Control &control)
        : g_(p.graph)
        , h_(p.hyper)
        , variant_(variant)
        , k_(k)
        , order_(order)
        , control_(control)
        , colour_(p.graph.order(), unassigned)
    {
        const bool constrained = variant.kind != Variant::Kind::proper;
        const std::size_t edges = constrained ? h_.size() : 0;
        required_.assign(edges, 0);
        uncoloured_.assign(edges, 0);
        metric_.assign(edges, 0);
        counts_.assign(edges * static_cast<std::size_t>(k + 1), 0);
        for (std::size_t i = 0; i < edges; ++i) {
            const int size = static_cast<int>(h_.edge(i).size());
            uncoloured_[i] = size;
            switch (variant.kind) {
            case Variant::Kind::hodd: required_[i] = std::min(variant.h, size); break;
            default: required_[i] = 1; break;  // an empty edge can never be met
            }
            if (metric_[i] + uncoloured_[i] < required_[i])
                infeasible_ = true;
        }
    }

    bool infeasible() const { return infeasible_; }

    /// Applies v := c if it is proper and keeps every touched hyperedge
    /// repairable; otherwise leaves the state unchanged.
    bool try_assign(Vertex v, Colour c)
    {
        for (Vertex u : g_.neighbours(v))
            if (colour_[u] == c)
                return false;
        colour_[v] = c;
        if (counts_.empty())
            return true;
        bool ok = true;
        for (int e : h_.incident(v)) {
            bump(e, c, +1);
            if (metric_[e] + uncoloured_[e] < required_[e])
                ok = false;
        }
        if (!ok)
            unassign(v);
        return ok;
    }

    void unassign(Vertex v)
    {
        const Colour c = colour_[v];
        colour_[v] = unassigned;
        if (!counts_.empty())
            for (int e : h_.incident(v))
                bump(e, c, -1);
    }

    /// Depth-first search from `depth`; true iff a full colouring was found.
    bool run(std::size_t depth, int max_used)
    {
        if (depth == order_.size())
            return true;
        const Vertex v = order_[depth];
        const int limit = std::min(k_, max_used + 1);
        for (Colour c = 1; c <= limit; ++c) {
            if (control_.stop.load(std::memory_order_relaxed))
                return false;
            if (++local_nodes_ % 1024 == 0)
                flush_nodes();
            if (!try_assign(v, c))
                continue;
            if (run(depth + 1, std::max(max_used, c)))
                return true;
            unassign(v);
        }
        return false;
    }

    void flush_nodes()
    {
        const auto total = control_.nodes.fetch_add(local_nodes_ - flushed_) + (local_nodes_ - flushed_);
        flushed_ = local_nodes_;
        if (total > control_.node_limit || Clock::now() > control_.deadline) {
            control_.exhausted = true;
            control_.stop = true;
        }
    }

    Colouring certificate() const
    {
        Colouring c(g_.order(), k_);
        c.colour = colour_;
        return c;
    }

private:
    void bump(int e, Colour c, int delta)
    {
        int &count = counts_[static_cast<std::size_t>(e) * (k_ + 1) + c];
        const int before = count;
        count += delta;
        uncoloured_[e] -= delta;
        if (variant_.kind == Variant::Kind::pcf) {
            metric_[e] += (count == 1) - (before == 1);
        } else {
            metric_[e] += (count % 2) - (before % 2);
        }
    }

    const Graph &g_;
    const Hypergraph &h_;
    Variant variant_;
    int k_;
    const std::vector<Vertex> &order_;
    Control &control_;

    std::vector<Colour> colour_;
    std::vector<int> required_;
    std::vector<int> uncoloured_;
    std::vector<int> metric_;  // odd colours, or colours seen exactly once for pcf
    std::vector<int> counts_;
    bool infeasible_ = false;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t flushed_ = 0;
};

/// Feasible prefixes of the given depth, with their largest colour.
void collect_prefixes(Search &s, const std::vector<Vertex> &order, std::size_t depth, std::size_t target,
                      int max_used, int k, std::vector<Colour> &prefix,
                      std::vector<std::pair<std::vector<Colour>, int>> &out)
{
    if (prefix.size() == target || prefix.size() == order.size()) {
        out.emplace_back(prefix, max_used);
        return;
    }
    const Vertex v = order[depth];
    for (Colour c = 1; c <= std::min(k, max_used + 1); ++c) {
        if (!s.try_assign(v, c))
            continue;
        prefix.push_back(c);
        collect_prefixes(s, order, depth + 1, target, std::max(max_used, c), k, prefix, out);
        prefix.pop_back();
        s.unassign(v);
    }
}

void check_certificate(const PairGH &p, const Colouring &c, Variant variant)
{
    if (!validate(p, c, variant))
        throw std::logic_error("exact solver produced an invalid " + variant.name() + " certificate");
}

} // namespace

SolveOutcome decide(const PairGH &p, Variant variant, int k, const ExactBudget &budget)
{
    if (k < 1)
        throw std::invalid_argument("decide requires k >= 1");
    if (variant.kind == Variant::Kind::hodd && variant.h < 1)
        throw std::invalid_argument("hodd requires h >= 1");
    const auto start = Clock::now();
    SolveOutcome out;

    Control control;
    control.node_limit = budget.nodes;
    control.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.seconds));
    const std::vector<Vertex> order = degeneracy_order(p.graph);

    auto finish = [&](Status status, std::optional<Colouring> cert) {
        out.status = status;
        if (cert) {
            check_certificate(p, *cert, variant);
            out.certificate = std::move(cert);
        }
        out.work = control.nodes.load();
        out.millis = millis_since(start);
        return out;
    };

    Search root(p, variant, k, order, control);
    if (root.infeasible())
        return finish(Status::unsat, std::nullopt);

    if (budget.threads <= 1 || order.size() < 4) {
        const bool found = root.run(0, 0);
        root.flush_nodes();
        if (found)
            return finish(Status::sat, root.certificate());
        return finish(control.exhausted ? Status::gave_up : Status::unsat, std::nullopt);
    }

    // split at the shallowest depth giving enough independent subtrees
    std::vector<std::pair<std::vector<Colour>, int>> prefixes;
    for (std::size_t depth = 2; depth <= order.size(); ++depth) {
        prefixes.clear();
        std::vector<Colour> prefix;
        collect_prefixes(root, order, 0, depth, 0, k, prefix, prefixes);
        if (prefixes.size() >= static_cast<std::size_t>(4 * budget.threads) || depth == order.size())
            break;
    }

    std::atomic<std::size_t> next{0};
    std::optional<Colouring> found;
    std::mutex found_lock;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size() || control.stop)
                return;
            Search s(p, variant, k, order, control);
            const auto &[cols, max_used] = prefixes[i];
            for (std::size_t d = 0; d < cols.size(); ++d)
                s.try_assign(order[d], cols[d]);
            const bool ok = s.run(cols.size(), max_used);
            s.flush_nodes();
            if (ok) {
                std::lock_guard lock(found_lock);
                if (!found)
                    found = s.certificate();
                control.stop = true;
                return;
            }
        }
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < budget.threads; ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto &f : pool)
        f.get();
    if (found)
        return finish(Status::sat, std::move(found));
    return finish(control.exhausted ? Status::gave_up : Status::unsat, std::nullopt);
}

int clique_number(const Graph &g)
{
    // Bron-Kerbosch with pivoting on vertex bitsets would be faster; plain
    // recursion with greedy-colour bounds is plenty for desk-scale graphs.
    int best = g.order() > 0 ? 1 : 0;
    std::vector<Vertex> current;
    std::function<void(std::vector<Vertex> &)> expand = [&](std::vector<Vertex> &cand) {
        while (!cand.empty()) {
            if (static_cast<int>(current.size() + cand.size()) <= best)
                return;
            const Vertex v = cand.back();
            cand.pop_back();
            current.push_back(v);
            std::vector<Vertex> next;
            for (Vertex u : cand)
                if (g.adjacent(u, v))
                    next.push_back(u);
            best = std::max(best, static_cast<int>(current.size()));
            expand(next);
            current.pop_back();
        }
    };
    std::vector<Vertex> all = degeneracy(g).peeling_order;
    expand(all);
    return best;
}

ChromaticResult chromatic_number(const PairGH &p, Variant variant, const ExactBudget &budget)
{
    const auto start = Clock::now();
    ChromaticResult out;
    const int n = p.graph.order();
    if (n == 0) {
        out.status = Status::sat;
        out.certificate = Colouring(0, 0);
        return out;
    }
    // a rainbow colouring satisfies every variant unless an edge is empty
    for (int k = std::max(1, clique_number(p.graph)); k <= n; ++k) {
        SolveOutcome step = decide(p, variant, k, budget);
        out.nodes += step.work;
        if (step.status == Status::gave_up) {
            out.status = Status::gave_up;
            out.millis = millis_since(start);
            return out;
        }
        if (step.sat()) {
            out.status = Status::sat;
            out.value = k;
            out.certificate = std::move(step.certificate);
            out.millis = millis_since(start);
            return out;
        }
    }
    out.status = Status::unsat;
    out.millis = millis_since(start);
    return out;
}

LowerBoundReport verify_lower_bound(const LowerBoundCase &c, const ExactBudget &budget)
{
    const auto start = Clock::now();
    LowerBoundReport r;
    const auto &q = c.params;
    auto need = [&](std::size_t count) {
        if (q.size() != count)
            throw std::invalid_argument("lower-bound case '" + c.name + "' takes " + std::to_string(count) +
                                        " parameters");
    };
    Graph g;
    Variant variant;
    if (c.name == "multipartite") {
        need(3);
        g = multipartite_gadget(q[0], q[1], q[2]);
        variant = Variant::odd();
        r.bound = q[0] * (q[1] + 1);
        r.instance = "multipartite:" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]);
    } else if (c.name == "steiner") {
        need(2);
        const int points = q[0], h = q[1];
        if (h != 1 && h != 2)
            throw std::invalid_argument("steiner lower bound needs h in {1, 2} (block size h+1)");
        g = steiner_incidence(points, h + 1);
        variant = Variant::hodd(h);
        r.bound = h * ((points - 1) / h) + 1;
        r.instance = "steiner:" + std::to_string(points) + "," + std::to_string(h + 1);
    } else if (c.name == "rook") {
        need(2);
        const int n = q[0], t = q[1];
        const int delta = 2 * n - 2;
        if (t < 1 || t > delta)
            throw std::invalid_argument("rook lower bound needs 1 <= t <= 2n-2");
        g = rook(n);
        variant = Variant::hodd(delta + 1 - t);
        // strict bound chi > (delta^2 / 2) / (t + 1)
        r.bound = (delta * delta) / (2 * (t + 1)) + 1;
        r.instance = "rook:" + std::to_string(n);
    } else {
        throw std::invalid_argument("unknown lower-bound case '" + c.name + "'");
    }
    r.variant = variant.name();
    const PairGH pair = neighbourhood_pair(g);

    if (r.bound - 1 >= 1) {
        const SolveOutcome below = decide(pair, variant, r.bound - 1, budget);
        r.below = below.status;
        r.nodes += below.work;
    } else {
        r.below = Status::unsat;  // no colouring with zero colours
    }
    const ChromaticResult best = chromatic_number(pair, variant, budget);
    r.nodes += best.nodes;
    if (best.status == Status::sat) {
        r.optimum = best.value;
        r.at_optimum = Status::sat;
    } else {
        r.at_optimum = best.status;
    }
    r.consistent = r.below == Status::unsat && r.at_optimum == Status::sat && r.optimum >= r.bound;
    r.millis = millis_since(start);
    return r;
}

} // namespace oddcol
