#include "oddcol/greedy.hpp"

#include "oddcol/audit.hpp"
#include "oddcol/random.hpp"

#include <algorithm>
#include <numeric>

namespace oddcol
{

namespace
{

void require_permutation(int n, std::span<const Vertex> order)
{
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order is not a permutation of the vertices");
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order is not a permutation of the vertices");
        seen[v] = 1;
    }
}

/// Per-colour count of neighbours forbidding that colour for a vertex.
class Forbidden
{
public:
    explicit Forbidden(int k) : count_(k + 1, 0) {}

    void clear()
    {
        for (Colour c : touched_)
            count_[c] = 0;
        touched_.clear();
    }

    void add(Colour c)
    {
        if (count_[c]++ == 0)
            touched_.push_back(c);
    }

    int count(Colour c) const { return count_[c]; }
    int distinct() const { return static_cast<int>(touched_.size()); }

    /// Smallest colour in [1, k] nobody forbids, or 0.
    Colour smallest_free() const
    {
        for (Colour c = 1; c < static_cast<int>(count_.size()); ++c)
            if (count_[c] == 0)
                return c;
        return unassigned;
    }

private:
    std::vector<int> count_;
    std::vector<Colour> touched_;
};

void collect_forbidden(const Graph &g, const OddAudit &audit, Vertex v, bool witnesses, Forbidden &out)
{
    out.clear();
    for (Vertex u : g.neighbours(v)) {
        if (audit.colour(u) != unassigned)
            out.add(audit.colour(u));
        if (witnesses)
            if (auto w = audit.witness(u))
                out.add(*w);
    }
}

void check_greedy_invariant(const Graph &g, const OddAudit &audit)
{
    const OddAudit fresh = OddAudit::for_graph(g, audit.colouring());
    if (!(fresh == audit))
        throw InvariantError("incremental audit diverged from recomputation");
    for (Vertex u = 0; u < g.order(); ++u) {
        bool has_coloured_neighbour = false;
        for (Vertex w : g.neighbours(u)) {
            if (audit.colour(w) == unassigned)
                continue;
            has_coloured_neighbour = true;
            if (audit.colour(u) == audit.colour(w))
                throw InvariantError("monochromatic edge " + std::to_string(u) + "-" + std::to_string(w));
        }
        if (has_coloured_neighbour && audit.odd_count(u) == 0)
            throw InvariantError("vertex " + std::to_string(u) + " lost its odd colour");
    }
}

} // namespace

int greedy_odd_palette(int max_degree)
{
    return 3 * max_degree / 2 + 2;
}

Colouring greedy_odd(const Graph &g, std::span<const Vertex> order, const GreedyOptions &opts,
                     GreedyStats *stats)
{
    const int n = g.order();
    require_permutation(n, order);
    const int k = greedy_odd_palette(g.max_degree());
    const bool witnesses = !opts.skip_witness_protection;

    OddAudit audit = OddAudit::for_graph(g, Colouring(n, k));
    Forbidden forbidden(k);

    for (Vertex v : order) {
        collect_forbidden(g, audit, v, witnesses, forbidden);
        if (Colour c = forbidden.smallest_free(); c != unassigned) {
            audit.recolour(v, unassigned, c);
        } else {
            // Every colour is forbidden. Y = coloured critical neighbours,
            // each forbidding its own colour and its witness.
            const auto own_witness = audit.witness(v);
            Vertex chosen = -1;
            for (Vertex y : g.neighbours(v)) {
                const Colour cy = audit.colour(y);
                if (cy == unassigned || !audit.witness(y))
                    continue;
                if (forbidden.count(cy) != 1)
                    continue;
                if (own_witness && *own_witness == cy)
                    continue;
                chosen = y;
                break;
            }
            if (chosen < 0)
                throw InvariantError("no recolourable neighbour for vertex " + std::to_string(v));

            const Colour stolen = audit.colour(chosen);
            audit.recolour(chosen, stolen, unassigned);
            audit.recolour(v, unassigned, stolen);

            collect_forbidden(g, audit, chosen, witnesses, forbidden);
            const Colour fresh = forbidden.smallest_free();
            if (fresh == unassigned)
                throw InvariantError("no colour left for recoloured vertex " + std::to_string(chosen));
            audit.recolour(chosen, unassigned, fresh);
            if (stats)
                ++stats->steals;
        }
        if (opts.check_invariant)
            check_greedy_invariant(g, audit);
    }
    return audit.colouring();
}

int greedy_hodd_palette(const PairGH &p, int h)
{
    return h * p.hyper.max_degree() + p.graph.max_degree() + 1;
}

Colouring greedy_hodd(const PairGH &p, int h, std::span<const Vertex> order)
{
    if (h < 1)
        throw std::invalid_argument("h must be at least 1");
    const int n = p.graph.order();
    require_permutation(n, order);
    const int k = greedy_hodd_palette(p, h);

    OddAudit audit = OddAudit::for_hypergraph(p.hyper, Colouring(n, k));
    Forbidden forbidden(k);
    for (Vertex v : order) {
        forbidden.clear();
        for (Vertex u : p.graph.neighbours(v))
            if (audit.colour(u) != unassigned)
                forbidden.add(audit.colour(u));
        for (int e : audit.containing(v)) {
            // protect up to h odd colours so the count cannot drop below h
            int protect = h;
            for (Colour c = 1; c <= k && protect > 0; ++c)
                if (audit.is_odd(e, c)) {
                    forbidden.add(c);
                    --protect;
                }
        }
        const Colour c = forbidden.smallest_free();
        if (c == unassigned)
            throw InvariantError("greedy_hodd ran out of colours at vertex " + std::to_string(v));
        audit.recolour(v, unassigned, c);
    }
    return audit.colouring();
}

Colouring greedy_proper(const Graph &g, std::span<const Vertex> order)
{
    const int n = g.order();
    require_permutation(n, order);
    Colouring c(n, 0);
    Forbidden forbidden(g.max_degree() + 1);
    for (Vertex v : order) {
        forbidden.clear();
        for (Vertex u : g.neighbours(v))
            if (c.colour[u] != unassigned)
                forbidden.add(c.colour[u]);
        c.colour[v] = forbidden.smallest_free();
        c.k = std::max(c.k, c.colour[v]);
    }
    return c;
}

std::vector<Vertex> identity_order(int n)
{
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::vector<Vertex> degeneracy_order(const Graph &g)
{
    auto order = degeneracy(g).peeling_order;
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<Vertex> random_order(int n, std::uint64_t seed)
{
    auto order = identity_order(n);
    Rng rng(seed);
    rng.shuffle(std::span<Vertex>(order));
    return order;
}

std::vector<Vertex> parse_order(const Graph &g, const std::string &spec)
{
    if (spec == "input")
        return identity_order(g.order());
    if (spec == "degen")
        return degeneracy_order(g);
    if (spec.starts_with("random:"))
        return random_order(g.order(), std::stoull(spec.substr(7)));
    throw std::invalid_argument("unknown order '" + spec + "' (input|degen|random:<seed>)");
}

} // namespace oddcol
