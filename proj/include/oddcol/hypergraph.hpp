#ifndef ODDCOL_HYPERGRAPH_HPP
#define ODDCOL_HYPERGRAPH_HPP

#include "oddcol/graph.hpp"

#include <span>
#include <vector>

namespace oddcol
{

/// Edge list over a shared vertex universe [0, n).
///
/// Edges are sorted vertex sets; identical edges and empty edges are kept.
class Hypergraph
{
public:
    Hypergraph() = default;
    explicit Hypergraph(int n) : n_(n), incidence_(n) {}

    /// Throws std::invalid_argument for out-of-range or repeated vertices
    /// within an edge. Each edge is sorted on insertion.
    Hypergraph(int n, std::vector<std::vector<Vertex>> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    std::span<const Vertex> edge(std::size_t i) const { return edges_[i]; }
    const std::vector<std::vector<Vertex>> &edges() const { return edges_; }

    /// Indices of the edges containing v.
    std::span<const int> incident(Vertex v) const { return incidence_[v]; }
    int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

    int max_degree() const { return max_degree_; }

    /// Minimum edge size; 0 for an edge-free hypergraph.
    int min_edge_size() const { return min_edge_size_; }

    bool operator==(const Hypergraph &o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
    std::vector<std::vector<int>> incidence_;
    int max_degree_ = 0;
    int min_edge_size_ = 0;
};

/// Graph-hypergraph pair on a common vertex set.
struct PairGH {
    Graph graph;
    Hypergraph hyper;

    PairGH() = default;
    /// Throws std::invalid_argument if the vertex universes differ.
    PairGH(Graph g, Hypergraph h);
};

/// One edge N(v) per non-isolated vertex, in vertex order.
Hypergraph neighbourhood_hypergraph(const Graph &g);

/// The pair (G, neighbourhood hypergraph of G).
PairGH neighbourhood_pair(const Graph &g);

/// H[S] = (S, {e & S}). Vertex i of the result is s[i]; empty
/// intersections are kept so edge indices line up with h.
Hypergraph induced_subhypergraph(const Hypergraph &h, std::span<const Vertex> s);

} // namespace oddcol

#endif // ODDCOL_HYPERGRAPH_HPP
