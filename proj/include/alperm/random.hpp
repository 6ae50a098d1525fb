#pragma once

#include <cmath>
#include <cstdint>

#include "alperm/matrix.hpp"

namespace alperm {

/// SplitMix64: tiny, seedable, platform-independent generator. Per-sample
/// streams are derived by mixing (seed, stream index), so results never
/// depend on how work is split across threads.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one draw per call, pair cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v;
        do {
            u = u01();
        } while (u <= 0.0);
        v = u01();
        const double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(6.283185307179586477 * v);
        have_spare_ = true;
        return r * std::cos(6.283185307179586477 * v);
    }

private:
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Deterministic sub-stream key for sample `stream` of run `seed`.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    g.next();
    return g.next();
}

inline Matrix random_complex_matrix(int n, SplitMix64& rng) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = Complex{2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0};
    return m;
}

inline Matrix random_real_matrix(int n, SplitMix64& rng) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 2.0 * rng.u01() - 1.0;
    return m;
}

/// Random symmetric positive semi-definite matrix: Gram matrix G^T G of a
/// square standard-Gaussian factor.
inline Matrix random_psd_matrix(int n, SplitMix64& rng) {
    std::vector<double> g(static_cast<std::size_t>(n) * n);
    for (auto& x : g) x = rng.normal();
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += g[k * n + i] * g[k * n + j];
            m(i, j) = acc;
        }
    return m;
}

}  // namespace alperm
