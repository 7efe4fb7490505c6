#ifndef ODDCOL_BOUNDS_HPP
#define ODDCOL_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <map>

namespace oddcol::bounds
{

// All evaluators throw std::domain_error outside their stated domain.

/// ceil(4 (ln d + ln ln d + 3)); d >= 3.
int eta_odd(int delta);

/// Lower branch W_{-1}(y) for y in [-1/e, 0): the x <= -1 with x e^x = y,
/// found by bracketed bisection to |x e^x - y| <= 1e-12 |y|.
double lambert_wm1(double y);

/// ceil(-2 W_{-1}(-1 / (2 sqrt(2) e d))); d >= 2.
int m_star(int delta);

/// A probability bound as evaluated (raw) and clamped to [0, 1].
struct Bound {
    double raw = 0.0;
    double log_raw = 0.0;
    double prob() const { return raw < 1.0 ? raw : 1.0; }
};

/// sqrt(2) C(n,k) ((2n-2k)/(e tau))^((n-k)/2); 0 <= k <= n, tau > 0.
Bound walk_tail_bound(int n, int k, double tau);

/// sqrt(2) (2m/(e tau))^(m/2); m >= 1, tau > 0.
Bound all_even_bound(int m, double tau);

/// sqrt(2) C(m,t) (2t/(e tau))^(t/2); m >= 1, 0 <= t <= m, tau > 0.
Bound few_odd_bound(int m, int t, double tau);

/// exp(-dev^2 / (2 mu)); 0 <= dev < mu.
double chernoff_lower(double mu, double dev);

/// exp(-dev^2 / (2 (mu + dev))); dev > 0, mu >= 0.
double chernoff_upper(double mu, double dev);

/// Parameters of the h-odd resampling argument.
struct HoddParams {
    int t = 0;
    int m = 0;
    double eta_real = 0.0;
    int eta = 0;               // palette surplus actually used (ceil of eta_real)
    double closed_bound = 0.0; // 32(h-1) or 2e^2 eps^(2+1/ln dH)/(eps-h+1)
    bool wide_edges = false;   // eps >= 2(h-1): the 32(h-1) case
    bool within_closed_bound = false;
};

/// t = min{h-1, eps-h+1}, m = h-1+t, eta = 2t((m/t) C(m,t))^(2/t).
/// For h = 1 the odd-colouring value is used instead: t = m = 0 and
/// eta = eta_odd(max(delta_h, 3)). Throws "edge too small for h" if
/// h >= 2 and t <= 0.
HoddParams eta_hodd(int h, int eps, int delta_h);

/// ln(n!) - ln((n/2)!) <= ln(sqrt 2) + (n/2) ln(2n/e); n even, 2..300.
bool stirling_check(int n);

/// h dH + dG + 1.
long long greedy_hodd_bound(long long h, long long dG, long long dH);

/// Parameters of the biased +-1 walk.
struct WalkConfig {
    enum class Policy { adversarial, custom };

    int steps = 0;      // n
    int level = 0;      // k, the level whose lower tail is estimated
    double tau = 1.0;   // may be +infinity
    long long start = 0;
    Policy policy = Policy::adversarial;
    /// custom policy: probability of a -1 step given (step index, state).
    std::function<double(int, long long)> down_probability;
};

struct WalkEstimate {
    std::map<long long, std::uint64_t> histogram;  // S_n -> count
    std::uint64_t samples = 0;
    double p_at_most_level = 0.0;  // empirical P(S_n <= k)
    double half_width_99 = 0.0;    // normal-approximation 99% half-width
};

/// Monte-Carlo estimate of the law of S_n. The adversarial policy steps
/// down with probability min(1, s/tau). A custom policy is checked against
/// s/tau at every step and a violation throws std::domain_error.
/// Samples are split into fixed shards with seeds seed+shard, run on
/// worker threads and merged in shard order.
WalkEstimate simulate_walk(const WalkConfig &cfg, std::uint64_t samples, std::uint64_t seed);

/// Empirical tail of a Binomial(n, p) sum.
struct TailEstimate {
    double p = 0.0;
    double half_width_99 = 0.0;
};
TailEstimate simulate_binomial_lower(int n, double p, double dev, std::uint64_t samples, std::uint64_t seed);
TailEstimate simulate_binomial_upper(int n, double p, double dev, std::uint64_t samples, std::uint64_t seed);

/// 2.5758... times the binomial standard error.
double half_width_99(double p, std::uint64_t samples);

} // namespace oddcol::bounds

#endif // ODDCOL_BOUNDS_HPP
