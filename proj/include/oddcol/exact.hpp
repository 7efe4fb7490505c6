#ifndef ODDCOL_EXACT_HPP
#define ODDCOL_EXACT_HPP

#include "oddcol/audit.hpp"
#include "oddcol/hypergraph.hpp"
#include "oddcol/outcome.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oddcol
{

struct ExactBudget {
    std::uint64_t nodes = 100'000'000;
    double seconds = 300.0;
    /// Worker threads. With more than one, the search tree is split at a
    /// shallow prefix; the SAT/UNSAT answer is unaffected but which
    /// certificate is found may vary between thread counts.
    int threads = 1;
};

/// Is there a k-colouring of the pair of the given variant?
///
/// Backtracking over vertices in degeneracy order (last peeled first).
/// Properness is checked on every assignment. A hyperedge with c odd
/// colours (pcf: colours seen once) and u uncoloured members is pruned when
/// c + u < min{h, |e|}. The first vertex gets colour 1 and a new colour is
/// only ever the largest used so far plus one. SAT certificates are
/// revalidated before returning.
SolveOutcome decide(const PairGH &p, Variant variant, int k, const ExactBudget &budget = {});

struct ChromaticResult {
    Status status = Status::gave_up;  // sat: value is exact; unsat: no k works
    int value = 0;
    std::optional<Colouring> certificate;
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

/// Smallest k with a SAT decide, scanning upward from the clique number.
ChromaticResult chromatic_number(const PairGH &p, Variant variant, const ExactBudget &budget = {});

/// Size of a maximum clique (exact, for small graphs).
int clique_number(const Graph &g);

/// Lower-bound family checked by verify_lower_bound.
struct LowerBoundCase {
    std::string name;          // "multipartite", "steiner" or "rook"
    std::vector<int> params;   // multipartite: k0 n0 part; steiner: q h; rook: n t
};

struct LowerBoundReport {
    std::string instance;
    std::string variant;
    int bound = 0;            // claimed lower bound on the chromatic parameter
    Status below = Status::gave_up;  // decide(bound - 1)
    int optimum = 0;          // exact value, 0 if not determined
    Status at_optimum = Status::gave_up;
    std::uint64_t nodes = 0;
    double millis = 0.0;
    bool consistent = false;  // below == UNSAT and optimum >= bound
};

/// Builds the construction, checks decide(bound-1) is UNSAT and computes
/// the exact optimum.
///   multipartite (k0, n0, part): odd, bound k0 (n0 + 1)
///   steiner (q, h): incidence of S(2, h+1; q), hodd(h), bound h ((q-1)/h) + 1
///   rook (n, t): L(K_{n,n}), hodd(2n-1-t), bound floor(((2n-2)^2/2)/(t+1)) + 1
LowerBoundReport verify_lower_bound(const LowerBoundCase &c, const ExactBudget &budget = {});

} // namespace oddcol

#endif // ODDCOL_EXACT_HPP
