#ifndef ODDCOL_SAMPLER_HPP
#define ODDCOL_SAMPLER_HPP

#include "oddcol/hypergraph.hpp"
#include "oddcol/outcome.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oddcol
{

/// Resample sets M(e) and their dependency neighbourhoods.
struct ResampleSchedule {
    std::vector<std::vector<Vertex>> resample;  // M(e): the m smallest ids of e
    std::vector<std::vector<int>> dependents;   // constraints meeting M(e), sorted
    std::uint64_t cap = 1'000'000;
    std::uint64_t seed = 0;
};

/// Builds M(e) from sorted constraints with |M(e)| = min(m, |e|).
ResampleSchedule make_schedule(const std::vector<std::vector<Vertex>> &constraints, int m, std::uint64_t cap,
                               std::uint64_t seed);

/// One row of an experiment.
struct TrialRecord {
    std::string instance;
    std::string algorithm;
    int k = 0;
    std::uint64_t seed = 0;
    std::uint64_t cap = 0;
    Status status = Status::gave_up;
    std::uint64_t iterations = 0;
    double millis = 0.0;
    std::string error;  // set when the trial threw
};

struct ResampleOptions {
    std::uint64_t cap = 1'000'000;
    std::uint64_t seed = 0;
    bool random_scan = false;  // pick the violated constraint at random, not lowest index
    bool random_start = false; // two-phase: uniform initial colours instead of smallest available
};

/// Odd k-colouring of g, k >= Delta(g)+1.
///
/// Phase 1 colours V+ (deg >= k/2) properly, keeps every V- vertex whose
/// neighbourhood lies in V+ odd and resamples M(v) for V++ vertices without
/// an odd colour. Phase 2 colours V- greedily.
SolveOutcome two_phase_colour(const Graph &g, int k, const ResampleOptions &opts);

/// Odd colouring of the pair with palette base.k + Delta(G[S]) + eta.
/// base is a full-size colouring, proper on G - S and 0 on S.
/// Throws "epsilon too small" unless 2 eps(H[S]) >= eta.
SolveOutcome chi_bound_colour(const PairGH &p, const VertexSet &s, const Colouring &base, int eta,
                              const ResampleOptions &opts);

/// Odd colouring with palette sigma0.k + eta * sigma1.k. A vertex v of S gets
/// sigma0.k + (sigma1(v) - 1) eta + x_v with label x_v in [eta].
SolveOutcome product_colour(const PairGH &p, const VertexSet &s, const Colouring &sigma0,
                            const Colouring &sigma1, int eta, const ResampleOptions &opts);

/// h-odd analogue of chi_bound_colour with m and eta from bounds::eta_hodd.
/// h = 1 is chi_bound_colour with eta = eta_hodd(1, ...).eta.
SolveOutcome hodd_delta_colour(const PairGH &p, const VertexSet &s, const Colouring &base, int h,
                               const ResampleOptions &opts);

/// h-odd analogue of product_colour.
SolveOutcome hodd_product_colour(const PairGH &p, const VertexSet &s, const Colouring &sigma0,
                                 const Colouring &sigma1, int h, const ResampleOptions &opts);

struct SubsetSample {
    bool found = false;
    VertexSet vertices;
    int epsilon = 0;           // eps(H[S]) achieved
    int max_degree = 0;        // Delta(G[S]) achieved
    int attempts = 0;
    double probability = 0.0;  // inclusion probability p
    double degree_limit = 0.0; // D
};

/// Random subset with every hyperedge meeting S in >= m vertices and
/// Delta(G[S]) <= D, by independent inclusion with probability p.
/// Throws std::invalid_argument if p > 1.
SubsetSample sample_subset(const PairGH &p, int m, int retries, std::uint64_t seed);

} // namespace oddcol

#endif // ODDCOL_SAMPLER_HPP
