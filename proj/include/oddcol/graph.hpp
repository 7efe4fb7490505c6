#ifndef ODDCOL_GRAPH_HPP
#define ODDCOL_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace oddcol
{

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph stored as sorted adjacency lists.
///
/// Immutable after construction. Vertex identifiers are dense and 0-based.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// endpoints outside [0, n).
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }

    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// G[s]; vertex i of the result is s[i].
    Graph induced(std::span<const Vertex> s) const;

    /// G with the vertices of s removed, re-indexed like induced(complement).
    Graph without(std::span<const Vertex> s) const;

    bool operator==(const Graph &other) const { return adjacency_ == other.adjacency_; }

private:
    void finalise();

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    int max_degree_ = 0;
    int min_degree_ = 0;
};

struct Degeneracy {
    int value = 0;
    /// Vertices in the order they were peeled (minimum degree first).
    std::vector<Vertex> peeling_order;
};

/// Iterative minimum-degree peeling.
Degeneracy degeneracy(const Graph &g);

struct DegreeSplit {
    VertexSet vminus;     // deg(v) < k/2
    VertexSet vplus;      // V \ vminus
    VertexSet vplusplus;  // v in vplus with N(v) inside vplus
};

/// Low/high degree split used by the two-phase colourer. Requires k >= 1.
DegreeSplit vplus_split(const Graph &g, int k);

/// Complement of s in [0, n). s must be sorted.
VertexSet complement(int n, std::span<const Vertex> s);

/// Membership mask of s over [0, n).
std::vector<char> membership(int n, std::span<const Vertex> s);

} // namespace oddcol

#endif // ODDCOL_GRAPH_HPP
