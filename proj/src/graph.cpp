#include "oddcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddcol
{

Graph::Graph(int n)
    : adjacency_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    finalise();
}

Graph::Graph(int n, std::span<const Edge> edges)
    : adjacency_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto &adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw std::invalid_argument("duplicate edge");
    }
    finalise();
}

void Graph::finalise()
{
    edge_count_ = 0;
    max_degree_ = 0;
    min_degree_ = adjacency_.empty() ? 0 : static_cast<int>(adjacency_[0].size());
    for (const auto &adj : adjacency_) {
        const int d = static_cast<int>(adj.size());
        edge_count_ += adj.size();
        max_degree_ = std::max(max_degree_, d);
        min_degree_ = std::min(min_degree_, d);
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto &a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> s) const
{
    std::vector<int> index(order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i)
        index[s[i]] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : adjacency_[s[i]])
            if (index[w] > static_cast<int>(i))
                sub.emplace_back(static_cast<int>(i), index[w]);
    return Graph(static_cast<int>(s.size()), sub);
}

Graph Graph::without(std::span<const Vertex> s) const
{
    const VertexSet rest = complement(order(), s);
    return induced(rest);
}

Degeneracy degeneracy(const Graph &g)
{
    const int n = g.order();
    Degeneracy out;
    out.peeling_order.reserve(n);
    if (n == 0)
        return out;

    // bucket queue keyed by current degree
    std::vector<int> deg(n);
    std::vector<std::vector<Vertex>> buckets(g.max_degree() + 1);
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        buckets[deg[v]].push_back(v);
    }
    std::vector<char> removed(n, 0);
    int low = 0;
    while (static_cast<int>(out.peeling_order.size()) < n) {
        low = std::max(0, low - 1);
        while (buckets[low].empty())
            ++low;
        const Vertex v = buckets[low].back();
        buckets[low].pop_back();
        if (removed[v] || deg[v] != low)
            continue;  // stale entry
        removed[v] = 1;
        out.value = std::max(out.value, low);
        out.peeling_order.push_back(v);
        for (Vertex w : g.neighbours(v))
            if (!removed[w]) {
                --deg[w];
                buckets[deg[w]].push_back(w);
            }
    }
    return out;
}

DegreeSplit vplus_split(const Graph &g, int k)
{
    if (k < 1)
        throw std::invalid_argument("vplus_split requires k >= 1");
    DegreeSplit out;
    std::vector<char> plus(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        // deg(v) < k/2  <=>  2 deg(v) < k
        if (2 * g.degree(v) < k) {
            out.vminus.push_back(v);
        } else {
            out.vplus.push_back(v);
            plus[v] = 1;
        }
    }
    for (Vertex v : out.vplus) {
        auto nb = g.neighbours(v);
        if (std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return plus[w]; }))
            out.vplusplus.push_back(v);
    }
    return out;
}

VertexSet complement(int n, std::span<const Vertex> s)
{
    std::vector<char> in = membership(n, s);
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (!in[v])
            out.push_back(v);
    return out;
}

std::vector<char> membership(int n, std::span<const Vertex> s)
{
    std::vector<char> in(n, 0);
    for (Vertex v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex outside universe");
        in[v] = 1;
    }
    return in;
}

} // namespace oddcol
