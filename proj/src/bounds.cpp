#include "oddcol/bounds.hpp"

#include "oddcol/random.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace oddcol::bounds
{

namespace
{

constexpr double e = std::numbers::e;
constexpr double ln_sqrt2 = 0.34657359027997265471;  // ln(2)/2
constexpr int shards = 16;

void domain(bool ok, const char *what)
{
    if (!ok)
        throw std::domain_error(what);
}

double log_binomial(int n, int k)
{
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

Bound from_log(double log_raw)
{
    return {std::exp(log_raw), log_raw};
}

/// Runs `shard(index, shard_samples, shard_seed)` over fixed shards on a
/// small pool and returns the results in shard order.
template <typename R, typename F>
std::vector<R> run_shards(std::uint64_t samples, std::uint64_t seed, F shard)
{
    std::vector<std::uint64_t> quota(shards, samples / shards);
    for (std::uint64_t i = 0; i < samples % shards; ++i)
        ++quota[i];
    const unsigned workers = std::max(1u, std::min<unsigned>(shards, std::thread::hardware_concurrency()));
    std::vector<R> results(shards);
    for (int base = 0; base < shards; base += static_cast<int>(workers)) {
        std::vector<std::future<R>> batch;
        for (int i = base; i < std::min<int>(shards, base + static_cast<int>(workers)); ++i)
            batch.push_back(std::async(std::launch::async, shard, i, quota[i], seed + static_cast<std::uint64_t>(i)));
        for (std::size_t j = 0; j < batch.size(); ++j)
            results[base + j] = batch[j].get();
    }
    return results;
}

} // namespace

int eta_odd(int delta)
{
    domain(delta >= 3, "eta_odd requires delta >= 3");
    const long double d = delta;
    const long double value = 4.0L * (std::log(d) + std::log(std::log(d)) + 3.0L);
    return static_cast<int>(std::ceil(value));
}

double lambert_wm1(double y)
{
    const double branch = -1.0 / e;
    domain(y < 0.0 && y >= branch - 1e-15, "lambert_wm1 requires -1/e <= y < 0");
    if (y <= branch)
        return -1.0;
    auto f = [](double x) { return x * std::exp(x); };
    double lo = -2.0;
    while (f(lo) <= y)
        lo *= 2.0;
    double hi = -1.0;
    // f is decreasing on (-inf, -1]: f(lo) > y >= f(hi)
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (f(mid) > y)
            lo = mid;
        else
            hi = mid;
    }
    return std::abs(f(lo) - y) < std::abs(f(hi) - y) ? lo : hi;
}

int m_star(int delta)
{
    domain(delta >= 2, "m_star requires delta >= 2");
    const double y = -1.0 / (2.0 * std::numbers::sqrt2 * e * delta);
    return static_cast<int>(std::ceil(-2.0 * lambert_wm1(y)));
}

Bound walk_tail_bound(int n, int k, double tau)
{
    domain(k >= 0 && k <= n, "walk_tail_bound requires 0 <= k <= n");
    domain(tau > 0.0, "walk_tail_bound requires tau > 0");
    double log_raw = ln_sqrt2 + log_binomial(n, k);
    if (n > k) {
        const double half = (n - k) / 2.0;
        log_raw += half * (std::log(2.0 * (n - k)) - 1.0 - std::log(tau));
    }
    return from_log(log_raw);
}

Bound all_even_bound(int m, double tau)
{
    domain(m >= 1, "all_even_bound requires m >= 1");
    domain(tau > 0.0, "all_even_bound requires tau > 0");
    return from_log(ln_sqrt2 + (m / 2.0) * (std::log(2.0 * m) - 1.0 - std::log(tau)));
}

Bound few_odd_bound(int m, int t, double tau)
{
    domain(m >= 1 && t >= 0 && t <= m, "few_odd_bound requires m >= 1 and 0 <= t <= m");
    domain(tau > 0.0, "few_odd_bound requires tau > 0");
    double log_raw = ln_sqrt2 + log_binomial(m, t);
    if (t > 0)
        log_raw += (t / 2.0) * (std::log(2.0 * t) - 1.0 - std::log(tau));
    return from_log(log_raw);
}

double chernoff_lower(double mu, double dev)
{
    domain(dev >= 0.0 && dev < mu, "chernoff_lower requires 0 <= dev < mu");
    return std::exp(-dev * dev / (2.0 * mu));
}

double chernoff_upper(double mu, double dev)
{
    domain(dev > 0.0 && mu >= 0.0, "chernoff_upper requires dev > 0 and mu >= 0");
    return std::exp(-dev * dev / (2.0 * (mu + dev)));
}

HoddParams eta_hodd(int h, int eps, int delta_h)
{
    domain(h >= 1, "eta_hodd requires h >= 1");
    domain(eps >= 1, "eta_hodd requires eps >= 1");
    HoddParams out;
    if (h == 1) {
        out.eta = eta_odd(std::max(delta_h, 3));
        out.eta_real = out.eta;
        out.closed_bound = out.eta;
        out.wide_edges = true;
        out.within_closed_bound = true;
        return out;
    }
    out.t = std::min(h - 1, eps - h + 1);
    if (out.t <= 0)
        throw std::domain_error("edge too small for h");
    out.m = h - 1 + out.t;
    const double t = out.t;
    const double log_eta =
        std::log(2.0 * t) + (2.0 / t) * (std::log(out.m / t) + log_binomial(out.m, out.t));
    out.eta_real = std::exp(log_eta);
    // absorb rounding so exact integers (e.g. 32 at h = 2) are not bumped up
    out.eta = static_cast<int>(std::ceil(out.eta_real * (1.0 - 1e-12)));

    out.wide_edges = eps >= 2 * (h - 1);
    if (out.wide_edges) {
        out.closed_bound = 32.0 * (h - 1);
    } else if (delta_h >= 2) {
        out.closed_bound =
            2.0 * e * e * std::pow(static_cast<double>(eps), 2.0 + 1.0 / std::log(static_cast<double>(delta_h))) /
            (eps - h + 1);
    } else {
        out.closed_bound = std::numeric_limits<double>::infinity();
    }
    out.within_closed_bound = out.eta <= out.closed_bound;
    return out;
}

bool stirling_check(int n)
{
    domain(n >= 2 && n <= 300, "stirling_check requires 2 <= n <= 300");
    domain(n % 2 == 0, "stirling_check requires even n");
    const double lhs = std::lgamma(n + 1.0) - std::lgamma(n / 2.0 + 1.0);
    const double rhs = ln_sqrt2 + (n / 2.0) * (std::log(2.0 * n) - 1.0);
    return lhs <= rhs;
}

long long greedy_hodd_bound(long long h, long long dG, long long dH)
{
    domain(h >= 0 && dG >= 0 && dH >= 0, "greedy_hodd_bound requires non-negative arguments");
    return h * dH + dG + 1;
}

double half_width_99(double p, std::uint64_t samples)
{
    if (samples == 0)
        return 1.0;
    return 2.5758293035489004 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

WalkEstimate simulate_walk(const WalkConfig &cfg, std::uint64_t samples, std::uint64_t seed)
{
    domain(cfg.steps >= 0 && cfg.level >= 0 && cfg.level <= cfg.steps, "walk requires 0 <= k <= n");
    domain(cfg.tau > 0.0, "walk requires tau > 0");
    domain(cfg.start >= 0, "walk requires S0 >= 0");
    if (cfg.policy == WalkConfig::Policy::custom && !cfg.down_probability)
        throw std::domain_error("custom walk policy without a transition rule");

    using Histogram = std::map<long long, std::uint64_t>;
    auto shard = [&cfg](int, std::uint64_t quota, std::uint64_t shard_seed) {
        Rng rng(shard_seed);
        Histogram hist;
        for (std::uint64_t s = 0; s < quota; ++s) {
            long long state = cfg.start;
            for (int i = 0; i < cfg.steps; ++i) {
                const double cap = std::isinf(cfg.tau) ? 0.0 : static_cast<double>(state) / cfg.tau;
                double down;
                if (cfg.policy == WalkConfig::Policy::adversarial) {
                    down = std::min(1.0, cap);
                } else {
                    down = cfg.down_probability(i, state);
                    if (down < 0.0 || down > 1.0 || down > cap + 1e-12)
                        throw std::domain_error("walk policy exceeds s/tau at step " + std::to_string(i));
                }
                state += (down > 0.0 && rng.uniform() < down) ? -1 : 1;
            }
            ++hist[state];
        }
        return hist;
    };

    WalkEstimate out;
    for (const auto &hist : run_shards<Histogram>(samples, seed, shard))
        for (auto [value, count] : hist)
            out.histogram[value] += count;
    out.samples = samples;
    std::uint64_t low = 0;
    for (auto [value, count] : out.histogram)
        if (value <= cfg.level)
            low += count;
    out.p_at_most_level = samples ? static_cast<double>(low) / samples : 0.0;
    out.half_width_99 = half_width_99(out.p_at_most_level, samples);
    return out;
}

namespace
{

TailEstimate binomial_tail(int n, double p, std::uint64_t samples, std::uint64_t seed,
                           const std::function<bool(int)> &event)
{
    domain(n >= 0 && p >= 0.0 && p <= 1.0, "binomial tail requires n >= 0 and p in [0,1]");
    auto shard = [&](int, std::uint64_t quota, std::uint64_t shard_seed) {
        Rng rng(shard_seed);
        std::uint64_t hits = 0;
        for (std::uint64_t s = 0; s < quota; ++s) {
            int sum = 0;
            for (int i = 0; i < n; ++i)
                sum += rng.bernoulli(p);
            hits += event(sum);
        }
        return hits;
    };
    std::uint64_t hits = 0;
    for (auto h : run_shards<std::uint64_t>(samples, seed, shard))
        hits += h;
    TailEstimate out;
    out.p = samples ? static_cast<double>(hits) / samples : 0.0;
    out.half_width_99 = half_width_99(out.p, samples);
    return out;
}

} // namespace

TailEstimate simulate_binomial_lower(int n, double p, double dev, std::uint64_t samples, std::uint64_t seed)
{
    const double mu = n * p;
    return binomial_tail(n, p, samples, seed, [=](int s) { return s <= mu - dev; });
}

TailEstimate simulate_binomial_upper(int n, double p, double dev, std::uint64_t samples, std::uint64_t seed)
{
    const double mu = n * p;
    return binomial_tail(n, p, samples, seed, [=](int s) { return s >= mu + dev; });
}

} // namespace oddcol::bounds
