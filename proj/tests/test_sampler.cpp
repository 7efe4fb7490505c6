#include "doctest.h"

#include "oddcol/audit.hpp"
#include "oddcol/bounds.hpp"
#include "oddcol/constructions.hpp"
#include "oddcol/greedy.hpp"
#include "oddcol/random.hpp"
#include "oddcol/sampler.hpp"

#include <set>

using namespace oddcol;

namespace
{

ResampleOptions seeded(std::uint64_t seed, std::uint64_t cap = 1'000'000)
{
    ResampleOptions o;
    o.seed = seed;
    o.cap = cap;
    return o;
}

VertexSet everything(int n) { return complement(n, {}); }

Hypergraph random_wide_hypergraph(Rng &rng, int n, int edges, int min_size, int max_size)
{
    std::vector<std::vector<Vertex>> es;
    for (int i = 0; i < edges; ++i) {
        std::vector<Vertex> e = everything(n);
        rng.shuffle(std::span<Vertex>(e));
        e.resize(min_size + rng.below(max_size - min_size + 1));
        es.push_back(e);
    }
    return Hypergraph(n, es);
}

bool same(const SolveOutcome &a, const SolveOutcome &b)
{
    return a.status == b.status && a.work == b.work && a.certificate == b.certificate;
}

} // namespace

TEST_CASE("resample schedule")
{
    Rng rng(1);
    std::vector<std::vector<Vertex>> cons;
    for (int i = 0; i < 30; ++i) {
        std::vector<Vertex> e = everything(25);
        rng.shuffle(std::span<Vertex>(e));
        e.resize(rng.below(9));
        cons.push_back(e);
    }
    const ResampleSchedule s = make_schedule(cons, 3, 77, 5);
    CHECK(s.cap == 77);
    CHECK(s.seed == 5);
    for (std::size_t i = 0; i < cons.size(); ++i) {
        std::vector<Vertex> sorted = cons[i];
        std::sort(sorted.begin(), sorted.end());
        sorted.resize(std::min<std::size_t>(3, sorted.size()));
        CHECK(s.resample[i] == sorted);
        // every constraint meeting M(e), by brute force
        std::vector<int> expect;
        for (std::size_t j = 0; j < cons.size(); ++j)
            for (Vertex v : cons[j])
                if (std::find(sorted.begin(), sorted.end(), v) != sorted.end()) {
                    expect.push_back(static_cast<int>(j));
                    break;
                }
        CHECK(s.dependents[i] == expect);
    }
}

TEST_CASE("two-phase colourer")
{
    SUBCASE("C5 with k = 5 is pure phase 2")
    {
        const auto out = two_phase_colour(cycle(5), 5, seeded(1));
        REQUIRE(out.sat());
        CHECK(out.work == 0);
        CHECK(is_odd_colouring(cycle(5), *out.certificate));
    }
    SUBCASE("cliques with k = Delta + 1")
    {
        for (int n = 2; n <= 9; ++n) {
            const auto out = two_phase_colour(complete(n), n, seeded(n));
            REQUIRE(out.sat());
            CHECK(out.certificate->used() == n);
        }
    }
    SUBCASE("palette below Delta + 1 is rejected")
    {
        CHECK_THROWS_AS(two_phase_colour(cycle(5), 2, seeded(1)), std::invalid_argument);
    }
    SUBCASE("random starts force resampling and stay valid")
    {
        std::uint64_t total = 0;
        int sat = 0;
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            Rng rng(seed);
            const int d = 4 + static_cast<int>(rng.below(8));
            const Graph g = random_regular(40, d % 2 ? d + 1 : d, seed);
            const int k = g.max_degree() + 1 + static_cast<int>(rng.below(g.max_degree() + 4));
            ResampleOptions o = seeded(seed, 20'000);
            o.random_start = true;
            o.random_scan = seed % 2 == 1;
            const auto out = two_phase_colour(g, k, o);
            if (out.sat()) {
                ++sat;
                CHECK(is_odd_colouring(g, *out.certificate));
                CHECK(out.certificate->k == k);
            }
            total += out.work;
            CHECK(same(out, two_phase_colour(g, k, o)));
        }
        CHECK(sat > 50);
        CHECK(total > 0);
    }
    SUBCASE("mixed degrees exercise both phases")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Graph g = random_gnp(60, 0.12, seed);
            const int k = g.max_degree() + 6;
            ResampleOptions o = seeded(seed, 50'000);
            o.random_start = true;
            const auto out = two_phase_colour(g, k, o);
            CHECK(out.status != Status::unsat);
            if (out.sat())
                CHECK(is_odd_colouring(g, *out.certificate));
        }
    }
    SUBCASE("64-regular graph with the theorem palette")
    {
        const Graph g = random_regular(1000, 64, 11);
        ResampleOptions o = seeded(3);
        o.random_start = true;
        const auto out = two_phase_colour(g, 64 + bounds::eta_odd(64), o);
        REQUIRE(out.sat());
        CHECK(is_odd_colouring(g, *out.certificate));
    }
}

TEST_CASE("chi-bound colourer")
{
    SUBCASE("64-regular neighbourhood hypergraph, S = V")
    {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const Graph g = random_regular(1000, 64, 20 + seed);
            const PairGH p = neighbourhood_pair(g);
            const auto out = chi_bound_colour(p, everything(1000), Colouring(1000, 0), 35, seeded(seed));
            REQUIRE(out.sat());
            CHECK(out.certificate->k == 99);
            CHECK(is_odd_colouring(g, *out.certificate));
        }
    }
    SUBCASE("one edge, no graph edges")
    {
        const PairGH p(empty_graph(6), Hypergraph(6, {{0, 1, 2, 3, 4, 5}}));
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto out = chi_bound_colour(p, everything(6), Colouring(6, 0), 4, seeded(seed));
            REQUIRE(out.sat());
            CHECK(out.certificate->k == 4);
        }
    }
    SUBCASE("frozen part and palette arithmetic")
    {
        const Graph g = random_gnp(40, 0.2, 3);
        const PairGH p = neighbourhood_pair(g);
        // S = even vertices, base = greedy proper colouring of the odd ones
        VertexSet s, rest;
        for (Vertex v = 0; v < 40; ++v)
            (v % 2 ? rest : s).push_back(v);
        const Colouring outside = greedy_proper(g.induced(rest), identity_order(20));
        Colouring base(40, outside.k);
        for (std::size_t i = 0; i < rest.size(); ++i)
            base.colour[rest[i]] = outside.colour[i];
        const int eps = induced_subhypergraph(p.hyper, s).min_edge_size();
        if (eps >= 1) {
            const auto out = chi_bound_colour(p, s, base, 2 * eps, seeded(1));
            int inner = 0;
            const Graph gs = g.induced(s);
            inner = gs.max_degree();
            if (out.sat()) {
                CHECK(out.certificate->k == base.k + inner + 2 * eps);
                for (Vertex v : rest)
                    CHECK(out.certificate->colour[v] == base.colour[v]);
            }
        }
        CHECK_THROWS(chi_bound_colour(p, s, Colouring(40, 3), 2, seeded(1)));
    }
    SUBCASE("epsilon guard")
    {
        const PairGH p = neighbourhood_pair(cycle(6));
        CHECK_THROWS_WITH_AS(chi_bound_colour(p, everything(6), Colouring(6, 0), 5, seeded(1)),
                             doctest::Contains("epsilon too small"), std::invalid_argument);
    }
}

TEST_CASE("product colourer")
{
    SUBCASE("eta = 1 only succeeds if already odd")
    {
        // C5 with sigma1 = (1,2,3,4,5) is odd; with (1,2,1,2,3) it is not
        const PairGH p = neighbourhood_pair(cycle(5));
        Colouring rainbow(5, 5), two(5, 3);
        rainbow.colour = {1, 2, 3, 4, 5};
        two.colour = {1, 2, 1, 2, 3};
        const auto good = product_colour(p, everything(5), Colouring(5, 0), rainbow, 1, seeded(1));
        REQUIRE(good.sat());
        CHECK(good.work == 0);
        CHECK(good.certificate->colour == rainbow.colour);
        const auto bad = product_colour(p, everything(5), Colouring(5, 0), two, 1, seeded(1));
        CHECK(bad.status == Status::gave_up);
        CHECK(bad.work == 0);
    }
    SUBCASE("K_{8,8} with its 2-colouring")
    {
        const Graph g = complete_bipartite(8, 8);
        const PairGH p = neighbourhood_pair(g);
        Colouring halves(16, 2);
        for (Vertex v = 0; v < 16; ++v)
            halves.colour[v] = v < 8 ? 1 : 2;
        // eta = 24 exceeds 2 eps = 16 and is refused
        CHECK_THROWS_WITH(product_colour(p, everything(16), Colouring(16, 0), halves, 24, seeded(1)),
                          doctest::Contains("epsilon too small"));
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto out = product_colour(p, everything(16), Colouring(16, 0), halves, 16, seeded(seed));
            REQUIRE(out.sat());
            CHECK(out.certificate->k == 32);
            for (Vertex v = 0; v < 16; ++v)
                CHECK((out.certificate->colour[v] - 1) / 16 == halves.colour[v] - 1);
        }
    }
    SUBCASE("sigma1 must be proper on S")
    {
        const PairGH p = neighbourhood_pair(cycle(5));
        Colouring flat(5, 1);
        std::fill(flat.colour.begin(), flat.colour.end(), 1);
        CHECK_THROWS(product_colour(p, everything(5), Colouring(5, 0), flat, 1, seeded(1)));
    }
}

TEST_CASE("h = 1 reduces to the odd colourers")
{
    int sat = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const int n = 30;
        const Graph g = random_gnp(n, 0.08, rng.next());
        const Hypergraph h = random_wide_hypergraph(rng, n, 12, 16, 26);
        const PairGH p(g, h);
        const VertexSet s = everything(n);
        const int eta = bounds::eta_hodd(1, h.min_edge_size(), h.max_degree()).eta;
        const Colouring base(n, 0);
        const auto a = hodd_delta_colour(p, s, base, 1, seeded(seed, 5000));
        const auto b = chi_bound_colour(p, s, base, eta, seeded(seed, 5000));
        CHECK(same(a, b));
        sat += a.sat();

        const Colouring inner = greedy_proper(g, identity_order(n));
        const auto c = hodd_product_colour(p, s, base, inner, 1, seeded(seed, 5000));
        const auto d = product_colour(p, s, base, inner, eta, seeded(seed, 5000));
        CHECK(same(c, d));
    }
    CHECK(sat > 40);
}

TEST_CASE("h-odd colourers")
{
    SUBCASE("h = |e| on every edge")
    {
        Rng rng(4);
        const Hypergraph h = random_wide_hypergraph(rng, 20, 10, 3, 3);
        const PairGH p(empty_graph(20), h);
        const auto out = hodd_delta_colour(p, everything(20), Colouring(20, 0), 3, seeded(2));
        REQUIRE(out.sat());
        CHECK(is_h_odd_colouring(p, *out.certificate, 3));
    }
    SUBCASE("rook L(K6,6)")
    {
        const Graph g = rook(6);
        const PairGH p = neighbourhood_pair(g);
        const int delta = 10, t = 5, h = delta - t + 1;
        const auto params = bounds::eta_hodd(h, 10, 10);
        const auto out = hodd_delta_colour(p, everything(36), Colouring(36, 0), h, seeded(1));
        REQUIRE(out.sat());
        CHECK(out.certificate->k == delta + params.eta);
        CHECK(is_h_odd_colouring(p, *out.certificate, h));
    }
    SUBCASE("h-odd gadget with its natural 2-colouring")
    {
        const Graph g = hodd_gadget(2, 2, 2);
        const PairGH p = neighbourhood_pair(g);
        Colouring natural(10, 2);
        for (Vertex v = 0; v < 8; ++v)
            natural.colour[v] = 1 + v / 4;
        natural.colour[8] = 2;  // Y vertex of part 0
        natural.colour[9] = 1;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto out = hodd_product_colour(p, everything(10), Colouring(10, 0), natural, 2, seeded(seed));
            REQUIRE(out.sat());
            CHECK(out.certificate->k == 64);
            CHECK(is_h_odd_colouring(p, *out.certificate, 2));
        }
    }
    SUBCASE("edges smaller than h")
    {
        const PairGH p = neighbourhood_pair(cycle(6));
        CHECK_THROWS(hodd_delta_colour(p, everything(6), Colouring(6, 0), 3, seeded(1)));
    }
}

TEST_CASE("random subsets")
{
    SUBCASE("all edges equal to V, no graph edges")
    {
        std::vector<std::vector<Vertex>> edges(3, everything(50));
        const PairGH p(empty_graph(50), Hypergraph(50, edges));
        const SubsetSample s = sample_subset(p, 5, 10, 1);
        REQUIRE(s.found);
        CHECK(static_cast<int>(s.vertices.size()) >= 5);
        CHECK(s.max_degree == 0);
        CHECK(s.epsilon == static_cast<int>(s.vertices.size()));
    }
    SUBCASE("64-regular neighbourhood hypergraph")
    {
        const Graph g = random_regular(1000, 64, 5);
        const PairGH p = neighbourhood_pair(g);
        int found = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const SubsetSample s = sample_subset(p, 20, 100, seed);
            if (!s.found)
                continue;
            ++found;
            CHECK(s.epsilon >= 20);
            CHECK(s.max_degree <= s.degree_limit);
            CHECK(s.epsilon == induced_subhypergraph(p.hyper, s.vertices).min_edge_size());
            CHECK(s.max_degree == g.induced(s.vertices).max_degree());
        }
        CHECK(found >= 19);
        const SubsetSample a = sample_subset(p, 20, 100, 7), b = sample_subset(p, 20, 100, 7);
        CHECK(a.vertices == b.vertices);
    }
    SUBCASE("m above r is a parameter error")
    {
        const PairGH p = neighbourhood_pair(random_regular(30, 4, 1));
        CHECK_THROWS_AS(sample_subset(p, 5, 10, 1), std::invalid_argument);
    }
}
