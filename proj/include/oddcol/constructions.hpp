#ifndef ODDCOL_CONSTRUCTIONS_HPP
#define ODDCOL_CONSTRUCTIONS_HPP

#include "oddcol/graph.hpp"
#include "oddcol/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oddcol
{

// Every generator throws std::invalid_argument on parameters outside its
// domain. Vertex layout is fixed and documented per generator so colouring
// files stay stable.

Graph cycle(int n);                         // n >= 3
Graph complete(int n);                      // n >= 0
Graph complete_bipartite(int a, int b);     // parts [0,a) and [a,a+b)
Graph empty_graph(int n);

/// K_t with each edge subdivided once. Branch vertices 0..t-1, then one
/// vertex per pair {i<j} in lexicographic order. t >= 2.
Graph subdivision_complete(int t);

/// Complete k0-partite core with parts of size part_size (part i occupies
/// [i*part_size, (i+1)*part_size)), then, part by part, one vertex for each
/// n0-subset of the part (lexicographic) adjacent to exactly that subset.
/// Requires part_size >= n0 >= 1 and C(part_size, n0) <= 10^6.
Graph multipartite_gadget(int k0, int n0, int part_size);

/// Complete k0-partite core on parts of size h*n0, each split into n0
/// consecutive blocks of size h; then, part by part, one vertex per
/// unordered pair of blocks adjacent to both blocks (degree 2h).
Graph hodd_gadget(int k0, int n0, int h);

/// A Steiner 2-design S(2, block_size; q) on points 0..q-1.
struct SteinerSystem {
    int points = 0;
    int block_size = 0;
    std::vector<std::vector<Vertex>> blocks;

    /// Bipartite incidence graph: points 0..q-1, blocks q..q+b-1.
    Graph incidence() const;
    /// The design as a hypergraph on the points.
    Hypergraph as_hypergraph() const;
};

/// block_size 2: all pairs of [q], q >= 2. block_size 3: Bose (q = 3 mod 6)
/// or Skolem (q = 1 mod 6) triple system, q >= 3. The pair-coverage
/// property is verified before returning.
SteinerSystem steiner_system(int q, int block_size);

Graph steiner_incidence(int q, int block_size);

/// True iff every pair of points lies in exactly one block and every block
/// has the declared size.
bool covers_pairs_once(const SteinerSystem &s);

/// L(K_{n,n}): vertex i*n + j is cell (i, j); adjacent iff same row or
/// column. n >= 2.
Graph rook(int n);

/// Random d-regular simple graph on n vertices via the pairing model.
/// Requires n*d even and 0 <= d < n.
Graph random_regular(int n, int d, std::uint64_t seed);

/// G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Random graph with n vertices and maximum degree at most max_deg: edges
/// are proposed uniformly and kept while both endpoints have room.
Graph random_bounded_degree(int n, int max_deg, int attempts, std::uint64_t seed);

/// Family tag plus integer parameters, e.g. "cycle:5", "regular:1000,64,7".
struct ConstructionSpec {
    std::string family;
    std::vector<long long> params;

    static ConstructionSpec parse(const std::string &text);
    std::string to_string() const;
};

/// Builds the graph named by a spec. Families: cycle n, complete n,
/// bipartite a b, subdivision t, multipartite k0 n0 part, hodd-gadget k0 n0 h,
/// steiner q b, rook n, regular n d seed, gnp n permille seed, empty n.
Graph build(const ConstructionSpec &spec);

/// Throws invalid_argument for an unknown family or wrong parameter count.
void check_spec(const ConstructionSpec &spec);

} // namespace oddcol

#endif // ODDCOL_CONSTRUCTIONS_HPP
