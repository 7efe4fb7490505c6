#include "doctest.h"

#include "oddcol/constructions.hpp"
#include "oddcol/hypergraph.hpp"
#include "oddcol/io.hpp"
#include "oddcol/random.hpp"

#include <sstream>

using namespace oddcol;

namespace
{

// max over nonempty vertex subsets of the minimum induced degree
int degeneracy_by_subsets(const Graph &g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int low = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1u))
                continue;
            int d = 0;
            for (Vertex u : g.neighbours(v))
                d += mask >> u & 1u;
            low = std::min(low, d);
        }
        best = std::max(best, low);
    }
    return best;
}

} // namespace

TEST_CASE("graph construction rejects malformed edge lists")
{
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    const std::vector<Edge> range{{0, 3}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, dup), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, range), std::invalid_argument);
}

TEST_CASE("graph accessors")
{
    const Graph g = cycle(5);
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 2);
    CHECK(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(0, 2));
    for (Vertex v = 0; v < 5; ++v)
        for (Vertex u : g.neighbours(v))
            CHECK(g.adjacent(u, v));
    const Graph path = g.induced(VertexSet{0, 1, 2});
    CHECK(path.order() == 3);
    CHECK(path.size() == 2);
    CHECK(g.without(VertexSet{0}).size() == 3);
}

TEST_CASE("degeneracy matches the subset definition")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.below(10));
        const Graph g = random_gnp(n, rng.uniform(), seed);
        const Degeneracy d = degeneracy(g);
        CHECK(d.value == degeneracy_by_subsets(g));
        std::vector<Vertex> sorted = d.peeling_order;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == complement(n, {}));
    }
    CHECK(degeneracy(complete(6)).value == 5);
    CHECK(degeneracy(cycle(7)).value == 2);
    CHECK(degeneracy(empty_graph(0)).value == 0);
}

TEST_CASE("degree split")
{
    // star K_{1,6} with k = 8: the centre has 2*6 >= 8, leaves do not
    const Graph star = complete_bipartite(1, 6);
    const DegreeSplit s = vplus_split(star, 8);
    CHECK(s.vplus == VertexSet{0});
    CHECK(s.vminus.size() == 6);
    CHECK(s.vplusplus.empty());
    const DegreeSplit all = vplus_split(complete(5), 5);
    CHECK(all.vminus.empty());
    CHECK(all.vplusplus.size() == 5);
    // deg < k/2 is strict: degree 2 with k = 4 is high
    CHECK(vplus_split(cycle(5), 4).vminus.empty());
    CHECK(vplus_split(cycle(5), 5).vplus.empty());
    CHECK_THROWS_AS(vplus_split(cycle(5), 0), std::invalid_argument);
}

TEST_CASE("hypergraph basics and neighbourhood hypergraph")
{
    const Hypergraph h(4, {{2, 0}, {}, {1, 2, 3}, {0, 2}});
    CHECK(h.size() == 4);
    CHECK(h.edge(0)[0] == 0);
    CHECK(h.min_edge_size() == 0);
    CHECK(h.degree(2) == 3);
    CHECK(h.max_degree() == 3);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{5}}), std::invalid_argument);

    // isolated vertex 3 contributes no edge
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    const Graph g(4, edges);
    const Hypergraph nh = neighbourhood_hypergraph(g);
    CHECK(nh.size() == 3);
    CHECK(nh.min_edge_size() == 1);
    CHECK(nh.max_degree() == 2);

    const Hypergraph sub = induced_subhypergraph(Hypergraph(4, {{0, 1, 2}, {3}}), VertexSet{0, 2});
    CHECK(sub.order() == 2);
    CHECK(sub.edge(0).size() == 2);
    CHECK(sub.edge(1).empty());

    CHECK_THROWS_AS(PairGH(cycle(5), Hypergraph(4)), std::invalid_argument);
}

TEST_CASE("graph file round trip")
{
    const Graph g = rook(3);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);

    std::istringstream with_comments("c hello\n\np 3 2\nc mid\ne 0 1\n\ne 1 2\n");
    CHECK(read_graph(with_comments).size() == 2);

    std::istringstream short_count("p 3 2\ne 0 1\n");
    CHECK_THROWS_AS(read_graph(short_count), ParseError);
    std::istringstream junk("p 3 1\nx 0 1\n");
    CHECK_THROWS_AS(read_graph(junk), ParseError);
    std::istringstream loop("p 3 1\ne 1 1\n");
    CHECK_THROWS(read_graph(loop));
}

TEST_CASE("hypergraph file round trip keeps empty edges")
{
    const Hypergraph h(5, {{0, 1}, {}, {2, 3, 4}});
    std::stringstream ss;
    write_hypergraph(ss, h);
    const Hypergraph back = read_hypergraph(ss);
    CHECK(back == h);
    CHECK(back.edge(1).empty());

    std::istringstream bad("h 3 1\n0 7\n");
    CHECK_THROWS_AS(read_hypergraph(bad), ParseError);
}

TEST_CASE("colouring file round trip")
{
    Colouring c(4, 5);
    c.colour = {1, 5, 2, 0};
    std::stringstream ss;
    write_colouring(ss, c);
    const Colouring back = read_colouring(ss, 4);
    CHECK(back == c);

    std::istringstream twice("0 1\n0 2\n");
    CHECK_THROWS_AS(read_colouring(twice, 2), ParseError);
    std::istringstream zero("0 0\n");
    CHECK_THROWS_AS(read_colouring(zero, 2), ParseError);
    std::istringstream range("2 1\n");
    CHECK_THROWS_AS(read_colouring(range, 2), ParseError);
    std::istringstream no_header("0 3\n1 1\n");
    CHECK(read_colouring(no_header, 2).k == 3);
}

TEST_CASE("rng is reproducible and bounded")
{
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());
    Rng r(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i)
        ++hits[r.below(7)];
    for (int h : hits)
        CHECK(h > 800);
}
