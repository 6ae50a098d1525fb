#pragma once

#include <cstdint>

#include "alperm/exact.hpp"
#include "alperm/random.hpp"

namespace alperm {

/// Two-parameter exchangeable random-partition family used as the
/// importance-sampling proposal.
///
/// Admissible regimes:
///   - 0 <= a < 1 with theta > -a (a = 0 is the one-parameter family), or
///   - a < 0 with theta = -m*a for an integer m >= 1, in which case every
///     sampled partition has at most m blocks.
struct PitmanEwensParams {
    double a = 0.0;
    double theta = 1.0;

    static PitmanEwensParams ewens(double theta) { return {0.0, theta}; }

    /// Simplest proposal confined to partitions with at most k blocks.
    static PitmanEwensParams restricted(int k) { return {-1.0, static_cast<double>(k)}; }

    bool admissible() const {
        if (a >= 0.0) return a < 1.0 && theta > -a;
        const double m = theta / -a;
        return std::abs(m - std::round(m)) <= 1e-9 && std::round(m) >= 1.0;
    }

    /// m in the restricted regime, 0 when unrestricted.
    int block_cap() const {
        if (a >= 0.0) return 0;
        return static_cast<int>(std::llround(theta / -a));
    }

    void validate() const {
        if (!admissible()) throw std::invalid_argument("PitmanEwensParams: inadmissible (a, theta)");
    }

    friend bool operator==(const PitmanEwensParams&, const PitmanEwensParams&) = default;
};

/// One random partition of {0..n-1} by sequential seating: element i joins an
/// existing block b with probability (|b|-a)/(i+theta) and opens a new block
/// with probability (theta + a*k)/(i+theta), k the current block count.
inline SetPartition pe_sample(int n, const PitmanEwensParams& params, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("pe_sample: n must be >= 1");
    params.validate();
    std::vector<std::vector<int>> blocks;
    blocks.push_back({0});
    for (int i = 1; i < n; ++i) {
        const double total = static_cast<double>(i) + params.theta;
        const double u = rng.u01() * total;
        double acc = 0.0;
        int chosen = -1;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            acc += static_cast<double>(blocks[b].size()) - params.a;
            if (u < acc) {
                chosen = static_cast<int>(b);
                break;
            }
        }
        if (chosen < 0) {
            const double new_mass = params.theta + params.a * static_cast<double>(blocks.size());
            if (new_mass > 1e-15) {
                blocks.push_back({i});
                continue;
            }
            chosen = static_cast<int>(blocks.size()) - 1;  // rounding remainder
        }
        blocks[static_cast<std::size_t>(chosen)].push_back(i);
    }
    SetPartition pi;
    pi.blocks = std::move(blocks);  // seating order is already canonical
    return pi;
}

/// Exchangeable partition probability of pi under (a, theta): the product of
/// new-block weights over (theta+1) rising, times the within-block rising
/// factorials of (1-a). Sums to one over all partitions of the ground set
/// (over the at-most-m-block ones in the restricted regime).
inline double pe_prob(const SetPartition& pi, const PitmanEwensParams& params) {
    params.validate();
    const int n = pi.n();
    const int k = pi.block_count();
    double num = 1.0;
    for (int i = 1; i < k; ++i) num *= params.theta + static_cast<double>(i) * params.a;
    double blocks = 1.0;
    for (const auto& b : pi.blocks)
        blocks *= rising_factorial(1.0 - params.a, static_cast<int>(b.size()) - 1);
    return num * blocks / rising_factorial(params.theta + 1.0, n - 1);
}

/// Monte-Carlo estimate with its sampling uncertainty. Deterministic given
/// (seed, n_samples, params, matrix).
struct EstimateReport {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    double target_alpha = 0.0;
    PitmanEwensParams params;

    double relative_std_error() const {
        return estimate == 0.0 ? INFINITY : std_error / std::abs(estimate);
    }

    friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

/// The raw importance weights of the partition estimator:
/// w_j = (-alpha) falling-factorial at the block count, times the product of
/// block determinants, over the proposal probability. Exposed so weight-level
/// properties can be checked directly.
inline std::vector<double> partition_is_weights(const Matrix& M, double alpha,
                                                const PitmanEwensParams& params, std::int64_t n_samples,
                                                std::uint64_t seed) {
    params.validate();
    if (n_samples < 1) throw std::invalid_argument("partition_is_weights: need n_samples >= 1");
    const int n = M.n();
    std::vector<double> weights(static_cast<std::size_t>(n_samples));
    for (std::int64_t j = 0; j < n_samples; ++j) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(j)));
        const SetPartition pi = pe_sample(n, params, rng);
        const double p = pe_prob(pi, params);
        if (!(p > 0.0)) throw std::runtime_error("partition_is_weights: proposal probability underflow");
        const double w =
            (falling_factorial(Complex(-alpha), pi.block_count()) * det_masked(M, pi)).real() / p;
        weights[static_cast<std::size_t>(j)] = w;
    }
    return weights;
}

namespace detail {

struct MeanStdErr {
    double mean = 0.0;
    double std_error = 0.0;
};

inline MeanStdErr mean_and_std_error(const std::vector<double>& x) {
    const auto n = static_cast<double>(x.size());
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double variance = x.size() > 1 ? ss / (n - 1.0) : 0.0;
    return {mean, std::sqrt(variance / n)};
}

}  // namespace detail

/// Importance sampling over random partitions: unbiased for the
/// alpha-permanent when the weights are averaged (the estimate is
/// (-1)^n times the sample mean). The standard error uses the unbiased
/// sample variance.
inline EstimateReport is_estimate_partitions(const Matrix& M, double alpha,
                                             const PitmanEwensParams& params, std::int64_t n_samples,
                                             std::uint64_t seed) {
    if (n_samples < 2) throw std::invalid_argument("is_estimate_partitions: need n_samples >= 2");
    const std::vector<double> w = partition_is_weights(M, alpha, params, n_samples, seed);
    const auto [mean, se] = detail::mean_and_std_error(w);
    EstimateReport r;
    r.estimate = (M.n() % 2 == 0 ? 1.0 : -1.0) * mean;
    r.std_error = se;
    r.n_samples = n_samples;
    r.seed = seed;
    r.target_alpha = alpha;
    r.params = params;
    return r;
}

/// Baseline estimator drawing permutations uniformly: each draw contributes
/// n! times its cycle-weighted diagonal product.
inline EstimateReport is_estimate_permutations_uniform(const Matrix& M, double alpha,
                                                       std::int64_t n_samples, std::uint64_t seed) {
    if (n_samples < 2)
        throw std::invalid_argument("is_estimate_permutations_uniform: need n_samples >= 2");
    const int n = M.n();
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;
    std::vector<double> w(static_cast<std::size_t>(n_samples));
    std::vector<int> perm(n);
    for (std::int64_t j = 0; j < n_samples; ++j) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(j)));
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) {
            int pick = static_cast<int>(rng.u01() * (i + 1));
            if (pick > i) pick = i;
            std::swap(perm[i], perm[pick]);
        }
        const Permutation sigma{std::vector<int>(perm)};
        Complex prod{1.0, 0.0};
        for (int i = 0; i < n; ++i) prod *= M(i, sigma[i]);
        w[static_cast<std::size_t>(j)] =
            nfact * (pow_int(Complex(alpha), sigma.cycle_count()) * prod).real();
    }
    const auto [mean, se] = detail::mean_and_std_error(w);
    EstimateReport r;
    r.estimate = mean;
    r.std_error = se;
    r.n_samples = n_samples;
    r.seed = seed;
    r.target_alpha = alpha;
    r.params = PitmanEwensParams{};
    return r;
}

}  // namespace alperm
