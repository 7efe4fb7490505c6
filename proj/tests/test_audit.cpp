#include "doctest.h"

#include "oddcol/audit.hpp"
#include "oddcol/constructions.hpp"
#include "oddcol/random.hpp"

#include <map>

using namespace oddcol;

namespace
{

Colouring make(int k, std::vector<Colour> colours)
{
    Colouring c(static_cast<int>(colours.size()), k);
    c.colour = std::move(colours);
    return c;
}

// Naive validators: count colours with a map, no shared code with audit.
bool naive_proper(const Graph &g, const Colouring &c)
{
    for (auto [u, v] : g.edges())
        if (c.colour[u] == c.colour[v])
            return false;
    return true;
}

std::map<Colour, int> tally(const Colouring &c, std::span<const Vertex> x)
{
    std::map<Colour, int> t;
    for (Vertex v : x)
        ++t[c.colour[v]];
    return t;
}

int naive_odd_count(const Colouring &c, std::span<const Vertex> x)
{
    int odd = 0;
    for (auto [col, n] : tally(c, x))
        odd += n % 2;
    return odd;
}

bool naive_odd(const Graph &g, const Colouring &c)
{
    if (!naive_proper(g, c))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0 && naive_odd_count(c, g.neighbours(v)) == 0)
            return false;
    return true;
}

bool naive_pcf(const Graph &g, const Colouring &c)
{
    if (!naive_proper(g, c))
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            continue;
        bool once = false;
        for (auto [col, n] : tally(c, g.neighbours(v)))
            once = once || n == 1;
        if (!once)
            return false;
    }
    return true;
}

bool naive_hodd(const PairGH &p, const Colouring &c, int h)
{
    if (!naive_proper(p.graph, c))
        return false;
    for (const auto &e : p.hyper.edges())
        if (naive_odd_count(c, e) < std::min<int>(h, static_cast<int>(e.size())))
            return false;
    return true;
}

Colouring random_total(Rng &rng, int n, int k)
{
    Colouring c(n, k);
    for (auto &x : c.colour)
        x = 1 + static_cast<Colour>(rng.below(k));
    return c;
}

} // namespace

TEST_CASE("is_proper examples")
{
    CHECK(is_proper(cycle(5), make(3, {1, 2, 1, 2, 3})));
    CHECK(is_proper(complete(3), make(3, {1, 2, 3})));
    const std::vector<Edge> one{{0, 1}};
    const auto r = is_proper(Graph(2, one), make(1, {1, 1}));
    CHECK_FALSE(r);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::improper_edge);
    CHECK_THROWS_WITH(is_proper(cycle(5), make(3, {1, 2, 0, 2, 3})), "colouring not total");
}

TEST_CASE("odd_colours")
{
    const Colouring c = make(3, {2, 3, 1, 1, 1, 2, 2});
    CHECK(odd_colours(c, VertexSet{0, 1}) == std::vector<Colour>{2, 3});
    CHECK(odd_colours(c, VertexSet{2, 3}).empty());
    CHECK(odd_colours(c, VertexSet{2, 3, 4, 5, 6}) == std::vector<Colour>{1});
    const Colouring partial = make(3, {1, 0});
    CHECK_THROWS(odd_colours(partial, VertexSet{0, 1}));
}

TEST_CASE("odd and pcf examples")
{
    const Graph c5 = cycle(5);
    const auto bad = is_odd_colouring(c5, make(3, {1, 2, 1, 2, 3}));
    CHECK_FALSE(bad);
    bool saw_v2 = false;
    for (const auto &v : bad.violations)
        saw_v2 = saw_v2 || (v.kind == ViolationKind::no_odd_colour && v.constraint == 1);
    CHECK(saw_v2);
    CHECK(is_odd_colouring(c5, make(5, {1, 2, 3, 4, 5})));
    CHECK(is_pcf_colouring(c5, make(5, {1, 2, 3, 4, 5})));
    CHECK(is_odd_colouring(complete(4), make(4, {3, 1, 4, 2})));

    const Graph star = complete_bipartite(1, 3);
    const auto centre = is_pcf_colouring(star, make(3, {1, 2, 2, 2}));
    CHECK_FALSE(centre);
    CHECK(centre.violations.at(0).kind == ViolationKind::no_unique_colour);
    CHECK(centre.violations.at(0).constraint == 0);
    CHECK(is_pcf_colouring(star, make(3, {1, 2, 2, 3})));
    // three 2s: odd but not pcf
    CHECK(is_odd_colouring(star, make(3, {1, 2, 2, 2})));

    // isolated vertices carry no constraint
    CHECK(is_odd_colouring(empty_graph(3), make(1, {1, 1, 1})));
}

TEST_CASE("h-odd examples")
{
    const PairGH three(empty_graph(3), Hypergraph(3, {{0, 1, 2}}));
    CHECK(is_h_odd_colouring(three, make(3, {1, 2, 3}), 3));
    const PairGH four(empty_graph(4), Hypergraph(4, {{0, 1, 2, 3}}));
    const auto r = is_h_odd_colouring(four, make(3, {1, 1, 2, 3}), 3);
    CHECK_FALSE(r);
    CHECK(r.violations.at(0).kind == ViolationKind::too_few_odd_colours);
    CHECK(is_h_odd_colouring(four, make(3, {1, 1, 2, 3}), 2));

    // empty edges: vacuous for h-odd, a distinct violation for odd and pcf
    const PairGH empty_edge(empty_graph(2), Hypergraph(2, {{}, {0}}));
    const Colouring c = make(1, {1, 1});
    CHECK(is_h_odd_colouring(empty_edge, c, 2));
    const auto odd = is_odd_colouring(empty_edge, c);
    CHECK_FALSE(odd);
    CHECK(odd.violations.at(0).kind == ViolationKind::empty_edge);
    CHECK_FALSE(is_pcf_colouring(empty_edge, c));
}

TEST_CASE("validators agree with naive counting on random colourings")
{
    Rng rng(11);
    int odd_seen = 0, pcf_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Graph g = random_gnp(n, 0.15 + 0.5 * rng.uniform(), rng.next());
        const int k = 1 + static_cast<int>(rng.below(n + 1));
        const Colouring c = random_total(rng, n, k);
        const PairGH p = neighbourhood_pair(g);
        const bool proper = is_proper(g, c).ok, odd = is_odd_colouring(g, c).ok, pcf = is_pcf_colouring(g, c).ok;
        CHECK(proper == naive_proper(g, c));
        CHECK(odd == naive_odd(g, c));
        CHECK(pcf == naive_pcf(g, c));
        // pcf => odd => proper
        CHECK((!pcf || odd));
        CHECK((!odd || proper));
        odd_seen += odd;
        pcf_seen += pcf;
        // h = 1 with the neighbourhood hypergraph is the odd notion
        CHECK(is_h_odd_colouring(p, c, 1).ok == odd);
        CHECK(is_odd_colouring(p, c).ok == odd);
        CHECK(is_pcf_colouring(p, c).ok == pcf);
        for (int h = 1; h <= 4; ++h)
            CHECK(is_h_odd_colouring(p, c, h).ok == naive_hodd(p, c, h));
        // |U(X)| has the parity of |X|
        for (Vertex v = 0; v < n; ++v)
            CHECK(static_cast<int>(odd_colours(c, g.neighbours(v)).size()) % 2 == g.degree(v) % 2);
    }
    CHECK(odd_seen > 20);
    CHECK(pcf_seen > 10);
}

TEST_CASE("violations are exhaustive")
{
    // every edge of K4 is monochromatic
    const auto r = is_proper(complete(4), make(1, {1, 1, 1, 1}));
    CHECK(r.violations.size() == 6);
}

TEST_CASE("variant names")
{
    CHECK(Variant::hodd(2).name() == "hodd(2)");
    CHECK(Variant::parse("hodd", 3) == Variant::hodd(3));
    CHECK(Variant::parse("hodd(4)") == Variant::hodd(4));
    CHECK(Variant::parse("pcf") == Variant::pcf());
    CHECK_THROWS(Variant::parse("nonsense"));
}

TEST_CASE("incremental audit")
{
    const Graph g = random_gnp(25, 0.2, 5);
    Rng rng(3);
    const int k = 5;
    Colouring c(g.order(), k);
    OddAudit audit = OddAudit::for_graph(g, c);
    const OddAudit empty = audit;

    SUBCASE("recolour then undo restores the state")
    {
        audit.recolour(3, 0, 2);
        audit.recolour(3, 2, 0);
        CHECK(audit == empty);
    }
    SUBCASE("from-scratch agreement over 1000 random steps")
    {
        for (int step = 0; step < 1000; ++step) {
            const Vertex v = static_cast<Vertex>(rng.below(g.order()));
            audit.recolour(v, audit.colour(v), static_cast<Colour>(rng.below(k + 1)));
            REQUIRE(audit == OddAudit::for_graph(g, audit.colouring()));
            const int cid = static_cast<int>(rng.below(g.order()));
            int coloured = 0;
            for (Vertex u : g.neighbours(cid))
                coloured += audit.colour(u) != unassigned;
            CHECK(audit.coloured_count(cid) == coloured);
            const auto odd = audit.odd_colours(cid);
            CHECK(static_cast<int>(odd.size()) == audit.odd_count(cid));
            CHECK(audit.witness(cid).has_value() == (odd.size() == 1));
            if (odd.size() == 1)
                CHECK(*audit.witness(cid) == odd[0]);
        }
    }
    SUBCASE("mismatched old colour throws")
    {
        CHECK_THROWS_AS(audit.recolour(0, 3, 1), std::logic_error);
    }
    SUBCASE("a vertex in no constraint changes nothing")
    {
        const PairGH p(empty_graph(3), Hypergraph(3, {{0, 1}}));
        OddAudit h = OddAudit::for_hypergraph(p.hyper, Colouring(3, 2));
        const OddAudit before = h;
        h.recolour(2, 0, 1);
        CHECK(h.odd_count(0) == before.odd_count(0));
        CHECK(h.coloured_count(0) == before.coloured_count(0));
    }
}

TEST_CASE("audit record")
{
    const Graph g = complete_bipartite(1, 3);
    const OddAudit a = OddAudit::for_graph(g, make(3, {1, 2, 2, 3}));
    const OddRecord r = a.record(0, 2);
    CHECK(r.odd == std::vector<Colour>{3});
    CHECK(r.witness == std::optional<Colour>{3});
    CHECK(r.required == 2);
    CHECK_FALSE(r.satisfied);
    CHECK(a.required(1, 5) == 1);
}
