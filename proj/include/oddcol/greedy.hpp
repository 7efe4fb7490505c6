#ifndef ODDCOL_GREEDY_HPP
#define ODDCOL_GREEDY_HPP

#include "oddcol/colouring.hpp"
#include "oddcol/graph.hpp"
#include "oddcol/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcol
{

/// Raised when a step the construction guarantees turns out impossible.
/// Never a property of the input; always an implementation bug.
class InvariantError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct GreedyOptions {
    /// After every step, recompute the induction invariant from scratch
    /// and throw InvariantError if it fails. Quadratic; for tests.
    bool check_invariant = false;

    /// Mutation hook for the repro suite: ignore the witness colours of
    /// critical neighbours. Output is then usually not odd.
    bool skip_witness_protection = false;
};

struct GreedyStats {
    int steals = 0;  // steps that took the colour of a critical neighbour y
};

/// Palette used by greedy_odd: floor(3 Delta / 2) + 2.
int greedy_odd_palette(int max_degree);

/// Odd colouring with at most floor(3 Delta/2) + 2 colours.
///
/// Vertices are coloured in `order`. The forbidden set of the next vertex v
/// holds the colours of its coloured neighbours and the witness colour of
/// every critical neighbour (exactly one odd colour among its coloured
/// neighbours). If every colour is forbidden, v takes the colour of the
/// first neighbour y (ascending id) that forbids two colours, is the only
/// neighbour forbidding its colour, and whose colour is not the witness of
/// v; y is then recoloured. The smallest allowed colour is always chosen.
///
/// Throws std::invalid_argument if order is not a permutation of V.
Colouring greedy_odd(const Graph &g, std::span<const Vertex> order, const GreedyOptions &opts = {},
                     GreedyStats *stats = nullptr);

/// Palette used by greedy_hodd: h Delta(H) + Delta(G) + 1.
int greedy_hodd_palette(const PairGH &p, int h);

/// h-odd colouring with at most h Delta(H) + Delta(G) + 1 colours.
///
/// Each vertex avoids the colours of its coloured graph neighbours and, for
/// every incident hyperedge, that edge's current odd colours (the h smallest
/// if there are more than h).
Colouring greedy_hodd(const PairGH &p, int h, std::span<const Vertex> order);

/// Proper colouring along `order`, smallest free colour. Palette is the
/// number of colours used.
Colouring greedy_proper(const Graph &g, std::span<const Vertex> order);

/// 0, 1, ..., n-1.
std::vector<Vertex> identity_order(int n);

/// Reverse of the degeneracy peeling order.
std::vector<Vertex> degeneracy_order(const Graph &g);

/// Uniformly shuffled order from a 64-bit seed.
std::vector<Vertex> random_order(int n, std::uint64_t seed);

/// Parses "input", "degen" or "random:<seed>".
std::vector<Vertex> parse_order(const Graph &g, const std::string &spec);

} // namespace oddcol

#endif // ODDCOL_GREEDY_HPP
