#include "oddcol/constructions.hpp"

#include "oddcol/random.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oddcol
{

namespace
{

void require(bool ok, const std::string &what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

/// C(n, r), saturating at limit + 1.
long long binomial_capped(int n, int r, long long limit)
{
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    long double acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > static_cast<long double>(limit))
            return limit + 1;
    }
    return static_cast<long long>(acc + 0.5L);
}

/// Adds the complete multipartite core on `parts` consecutive parts.
void add_multipartite_core(std::vector<Edge> &edges, int parts, int part_size)
{
    for (int i = 0; i < parts; ++i)
        for (int j = i + 1; j < parts; ++j)
            for (int a = 0; a < part_size; ++a)
                for (int b = 0; b < part_size; ++b)
                    edges.emplace_back(i * part_size + a, j * part_size + b);
}

/// Lexicographic r-subsets of [0, n).
template <typename F>
void for_each_subset(int n, int r, F &&visit)
{
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i)
        idx[i] = i;
    for (;;) {
        visit(std::as_const(idx));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

SteinerSystem bose_triple_system(int q)
{
    // q = 6n + 3; idempotent commutative quasigroup on Z_{2n+1}
    const int n = (q - 3) / 6;
    const int v = 2 * n + 1;
    auto point = [v](int x, int i) { return (i % 3) * v + x; };
    auto op = [n, v](int x, int y) { return ((n + 1) * (x + y)) % v; };

    SteinerSystem s{q, 3, {}};
    for (int x = 0; x < v; ++x)
        s.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            for (int i = 0; i < 3; ++i)
                s.blocks.push_back({point(x, i), point(y, i), point(op(x, y), i + 1)});
    return s;
}

SteinerSystem skolem_triple_system(int q)
{
    // q = 6n + 1; half-idempotent commutative quasigroup on Z_{2n} obtained
    // by renaming the symbols of the Z_{2n} addition table
    const int n = (q - 1) / 6;
    const int v = 2 * n;
    const int infinity = q - 1;
    auto point = [v](int x, int i) { return (i % 3) * v + x; };
    auto op = [n, v](int x, int y) {
        const int s = (x + y) % v;
        return s % 2 == 0 ? s / 2 : n + (s - 1) / 2;
    };

    SteinerSystem s{q, 3, {}};
    for (int x = 0; x < n; ++x)
        s.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < 3; ++i)
            s.blocks.push_back({infinity, point(n + x, i), point(x, i + 1)});
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            for (int i = 0; i < 3; ++i)
                s.blocks.push_back({point(x, i), point(y, i), point(op(x, y), i + 1)});
    return s;
}

} // namespace

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n)
{
    require(n >= 0, "complete needs n >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 0 && b >= 0, "complete_bipartite needs a, b >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph empty_graph(int n)
{
    require(n >= 0, "empty graph needs n >= 0");
    return Graph(n);
}

Graph subdivision_complete(int t)
{
    require(t >= 2, "subdivision_complete needs t >= 2");
    std::vector<Edge> edges;
    int next = t;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            edges.emplace_back(i, next);
            edges.emplace_back(j, next);
            ++next;
        }
    return Graph(next, edges);
}

Graph multipartite_gadget(int k0, int n0, int part_size)
{
    require(k0 >= 1, "multipartite_gadget needs k0 >= 1");
    require(n0 >= 1 && part_size >= n0, "multipartite_gadget needs part_size >= n0 >= 1");
    const long long per_part = binomial_capped(part_size, n0, 1000000);
    require(per_part <= 1000000, "multipartite_gadget: C(part_size, n0) exceeds 10^6");

    std::vector<Edge> edges;
    add_multipartite_core(edges, k0, part_size);
    int next = k0 * part_size;
    for (int i = 0; i < k0; ++i)
        for_each_subset(part_size, n0, [&](const std::vector<int> &subset) {
            for (int a : subset)
                edges.emplace_back(i * part_size + a, next);
            ++next;
        });
    return Graph(next, edges);
}

Graph hodd_gadget(int k0, int n0, int h)
{
    require(k0 >= 1 && n0 >= 1 && h >= 1, "hodd_gadget needs k0, n0, h >= 1");
    const int part_size = h * n0;
    std::vector<Edge> edges;
    add_multipartite_core(edges, k0, part_size);
    int next = k0 * part_size;
    for (int i = 0; i < k0; ++i)
        for (int a = 0; a < n0; ++a)
            for (int b = a + 1; b < n0; ++b) {
                for (int x = 0; x < h; ++x) {
                    edges.emplace_back(i * part_size + a * h + x, next);
                    edges.emplace_back(i * part_size + b * h + x, next);
                }
                ++next;
            }
    return Graph(next, edges);
}

Graph SteinerSystem::incidence() const
{
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (Vertex p : blocks[b])
            edges.emplace_back(p, points + static_cast<int>(b));
    return Graph(points + static_cast<int>(blocks.size()), edges);
}

Hypergraph SteinerSystem::as_hypergraph() const
{
    return Hypergraph(points, blocks);
}

bool covers_pairs_once(const SteinerSystem &s)
{
    const int q = s.points;
    std::vector<int> cover(static_cast<std::size_t>(q) * q, 0);
    for (const auto &b : s.blocks) {
        if (static_cast<int>(b.size()) != s.block_size)
            return false;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (i == j)
                    continue;
                if (b[i] < 0 || b[i] >= q || b[i] == b[j])
                    return false;
                ++cover[static_cast<std::size_t>(b[i]) * q + b[j]];
            }
    }
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (x != y && cover[static_cast<std::size_t>(x) * q + y] != 1)
                return false;
    return true;
}

SteinerSystem steiner_system(int q, int block_size)
{
    SteinerSystem s;
    if (block_size == 2) {
        require(q >= 2, "steiner block size 2 needs q >= 2");
        s = {q, 2, {}};
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                s.blocks.push_back({i, j});
    } else if (block_size == 3) {
        if (q < 3 || (q % 6 != 1 && q % 6 != 3))
            throw std::domain_error("steiner triple systems need q = 1 or 3 (mod 6)");
        s = q % 6 == 3 ? bose_triple_system(q) : skolem_triple_system(q);
    } else {
        throw std::invalid_argument("only block sizes 2 and 3 are constructed");
    }
    for (auto &b : s.blocks)
        std::sort(b.begin(), b.end());
    if (!covers_pairs_once(s))
        throw std::logic_error("steiner construction failed pair coverage");
    return s;
}

Graph steiner_incidence(int q, int block_size)
{
    return steiner_system(q, block_size).incidence();
}

Graph rook(int n)
{
    require(n >= 2, "rook needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = i * n + j;
            for (int j2 = j + 1; j2 < n; ++j2)
                edges.emplace_back(v, i * n + j2);
            for (int i2 = i + 1; i2 < n; ++i2)
                edges.emplace_back(v, i2 * n + j);
        }
    return Graph(n * n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed)
{
    require(n >= 1 && d >= 0 && d < n, "random_regular needs 0 <= d < n");
    require((static_cast<long long>(n) * d) % 2 == 0, "random_regular needs n*d even");
    Rng rng(seed);

    for (;;) {
        std::vector<Vertex> points;
        points.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i)
                points.push_back(v);
        std::vector<std::vector<Vertex>> adj(n);
        auto linked = [&](Vertex u, Vertex v) { return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end(); };

        bool stuck = false;
        std::size_t failures = 0;
        while (!points.empty() && !stuck) {
            std::size_t i = rng.below(points.size());
            std::size_t j = rng.below(points.size());
            const Vertex u = points[i];
            const Vertex v = points[j];
            if (i != j && u != v && !linked(u, v)) {
                adj[u].push_back(v);
                adj[v].push_back(u);
                if (i < j)
                    std::swap(i, j);
                points[i] = points.back();
                points.pop_back();
                points[j] = points.back();
                points.pop_back();
                failures = 0;
                continue;
            }
            if (++failures < 64 * points.size() + 256)
                continue;
            // many rejections in a row: check whether any legal pair is left
            stuck = true;
            for (std::size_t a = 0; a < points.size() && stuck; ++a)
                for (std::size_t b = a + 1; b < points.size(); ++b)
                    if (points[a] != points[b] && !linked(points[a], points[b])) {
                        stuck = false;
                        break;
                    }
            failures = 0;
        }
        if (stuck)
            continue;  // restart from scratch
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : adj[u])
                if (u < v)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }
}

Graph random_gnp(int n, double p, std::uint64_t seed)
{
    require(n >= 0 && p >= 0.0 && p <= 1.0, "random_gnp needs n >= 0 and p in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_bounded_degree(int n, int max_deg, int attempts, std::uint64_t seed)
{
    require(n >= 0 && max_deg >= 0 && attempts >= 0, "random_bounded_degree needs non-negative parameters");
    Rng rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Edge> edges;
    for (int a = 0; a < attempts && n >= 2; ++a) {
        const Vertex u = static_cast<Vertex>(rng.below(n));
        const Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v || deg[u] >= max_deg || deg[v] >= max_deg)
            continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
            continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++deg[u];
        ++deg[v];
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

ConstructionSpec ConstructionSpec::parse(const std::string &text)
{
    ConstructionSpec spec;
    const auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family.empty())
        throw std::invalid_argument("empty construction family");
    if (colon == std::string::npos)
        return spec;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("bad construction parameter '" + item + "'");
        }
    }
    return spec;
}

std::string ConstructionSpec::to_string() const
{
    std::string out = family;
    for (std::size_t i = 0; i < params.size(); ++i)
        out += (i ? "," : ":") + std::to_string(params[i]);
    return out;
}

int family_arity(const std::string &family)
{
    static const std::map<std::string, int> arity = {
        {"cycle", 1},        {"complete", 1},    {"bipartite", 2},   {"empty", 1},
        {"subdivision", 1},  {"multipartite", 3}, {"hodd-gadget", 3}, {"steiner", 2},
        {"rook", 1},         {"regular", 3},     {"gnp", 3},
    };
    const auto it = arity.find(family);
    if (it == arity.end())
        throw std::invalid_argument("unknown construction family '" + family + "'");
    return it->second;
}

void check_spec(const ConstructionSpec &spec)
{
    const int count = family_arity(spec.family);
    if (spec.params.size() != static_cast<std::size_t>(count))
        throw std::invalid_argument("family '" + spec.family + "' takes " + std::to_string(count) +
                                    " parameter(s)");
}

Graph build(const ConstructionSpec &spec)
{
    check_spec(spec);
    const auto &p = spec.params;
    auto i = [&](std::size_t idx) { return static_cast<int>(p[idx]); };
    const auto &f = spec.family;
    if (f == "cycle") return cycle(i(0));
    if (f == "complete") return complete(i(0));
    if (f == "bipartite") return complete_bipartite(i(0), i(1));
    if (f == "empty") return empty_graph(i(0));
    if (f == "subdivision") return subdivision_complete(i(0));
    if (f == "multipartite") return multipartite_gadget(i(0), i(1), i(2));
    if (f == "hodd-gadget") return hodd_gadget(i(0), i(1), i(2));
    if (f == "steiner") return steiner_incidence(i(0), i(1));
    if (f == "rook") return rook(i(0));
    if (f == "regular") return random_regular(i(0), i(1), static_cast<std::uint64_t>(p[2]));
    return random_gnp(i(0), static_cast<double>(p[1]) / 1000.0, static_cast<std::uint64_t>(p[2]));
}

} // namespace oddcol
