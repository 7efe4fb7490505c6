#include "oddcol/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oddcol
{

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges)
    : n_(n)
    , edges_(std::move(edges))
    , incidence_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    min_edge_size_ = edges_.empty() ? 0 : std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto &e = edges_[i];
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("repeated vertex in hyperedge");
        for (Vertex v : e) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("hyperedge vertex out of range");
            incidence_[v].push_back(static_cast<int>(i));
        }
        min_edge_size_ = std::min(min_edge_size_, static_cast<int>(e.size()));
    }
    for (const auto &inc : incidence_)
        max_degree_ = std::max(max_degree_, static_cast<int>(inc.size()));
}

PairGH::PairGH(Graph g, Hypergraph h)
    : graph(std::move(g))
    , hyper(std::move(h))
{
    if (graph.order() != hyper.order())
        throw std::invalid_argument("graph and hypergraph vertex counts differ");
}

Hypergraph neighbourhood_hypergraph(const Graph &g)
{
    std::vector<std::vector<Vertex>> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) {
            auto nb = g.neighbours(v);
            edges.emplace_back(nb.begin(), nb.end());
        }
    return Hypergraph(g.order(), std::move(edges));
}

PairGH neighbourhood_pair(const Graph &g)
{
    return PairGH(g, neighbourhood_hypergraph(g));
}

Hypergraph induced_subhypergraph(const Hypergraph &h, std::span<const Vertex> s)
{
    std::vector<int> index(h.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= h.order())
            throw std::invalid_argument("subset vertex outside universe");
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(h.size());
    for (const auto &e : h.edges()) {
        std::vector<Vertex> cut;
        for (Vertex v : e)
            if (index[v] >= 0)
                cut.push_back(index[v]);
        edges.push_back(std::move(cut));
    }
    return Hypergraph(static_cast<int>(s.size()), std::move(edges));
}

} // namespace oddcol
