#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "alperm/bigint.hpp"
#include "alperm/core.hpp"

namespace alperm {

inline constexpr int kMaxPermutationN = 12;   // n! guard
inline constexpr int kMaxSetPartitionN = 14;  // Bell-number guard

/// x(x-1)...(x-j+1); empty product (=1) for j = 0.
inline Complex falling_factorial(Complex x, int j) {
    Complex p{1.0, 0.0};
    for (int i = 0; i < j; ++i) p *= x - static_cast<double>(i);
    return p;
}

/// x(x+1)...(x+j-1); empty product (=1) for j = 0.
inline Complex rising_factorial(Complex x, int j) {
    Complex p{1.0, 0.0};
    for (int i = 0; i < j; ++i) p *= x + static_cast<double>(i);
    return p;
}

inline double falling_factorial(double x, int j) { return falling_factorial(Complex(x), j).real(); }
inline double rising_factorial(double x, int j) { return rising_factorial(Complex(x), j).real(); }

/// Bijection on {0..n-1} in one-line notation: images[i] is where i maps.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : images(std::move(one_line)) {
        const int n = static_cast<int>(images.size());
        if (n == 0) throw std::invalid_argument("Permutation: empty one-line notation");
        std::vector<char> seen(n, 0);
        for (int v : images) {
            if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        Permutation p;
        p.images.resize(n);
        std::iota(p.images.begin(), p.images.end(), 0);
        return p;
    }

    int size() const { return static_cast<int>(images.size()); }
    int operator[](int i) const { return images[i]; }

    /// Number of cycles, fixed points included.
    int cycle_count() const {
        const int n = size();
        std::vector<char> seen(n, 0);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = images[j]) seen[j] = 1;
        }
        return cycles;
    }

    int fixed_point_count() const {
        int c = 0;
        for (int i = 0; i < size(); ++i)
            if (images[i] == i) ++c;
        return c;
    }

    /// Cycle lengths, weakly decreasing.
    std::vector<int> cycle_type() const {
        const int n = size();
        std::vector<char> seen(n, 0);
        std::vector<int> lens;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = images[j]) {
                seen[j] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end(), std::greater<int>());
        return lens;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Partition of {0..n-1} into disjoint non-empty blocks. Canonical form:
/// blocks ordered by least element, elements ascending within a block.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    SetPartition() = default;

    /// Canonicalizes and validates that the blocks cover {0..n-1} disjointly.
    static SetPartition from_blocks(std::vector<std::vector<int>> raw) {
        SetPartition p;
        p.blocks = std::move(raw);
        int n = 0;
        for (auto& b : p.blocks) {
            if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
            std::sort(b.begin(), b.end());
            n += static_cast<int>(b.size());
        }
        std::sort(p.blocks.begin(), p.blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        std::vector<char> seen(n, 0);
        for (const auto& b : p.blocks)
            for (int v : b) {
                if (v < 0 || v >= n || seen[v])
                    throw std::invalid_argument("SetPartition: blocks do not partition {0..n-1}");
                seen[v] = 1;
            }
        return p;
    }

    /// Builds from a restricted growth string (rgs[0] = 0, rgs[i] <= max+1).
    static SetPartition from_rgs(const std::vector<int>& rgs) {
        int k = 0;
        for (int v : rgs) k = std::max(k, v + 1);
        SetPartition p;
        p.blocks.resize(k);
        for (int i = 0; i < static_cast<int>(rgs.size()); ++i) p.blocks[rgs[i]].push_back(i);
        return p;  // RGS numbering is already canonical
    }

    /// Partition induced by the cycles of a permutation.
    static SetPartition of_cycles(const Permutation& s) {
        const int n = s.size();
        std::vector<char> seen(n, 0);
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = s[j]) {
                seen[j] = 1;
                cyc.push_back(j);
            }
            blocks.push_back(std::move(cyc));
        }
        return from_blocks(std::move(blocks));
    }

    static SetPartition singletons(int n) {
        SetPartition p;
        p.blocks.resize(n);
        for (int i = 0; i < n; ++i) p.blocks[i] = {i};
        return p;
    }

    static SetPartition one_block(int n) {
        SetPartition p;
        p.blocks.resize(1);
        p.blocks[0].resize(n);
        std::iota(p.blocks[0].begin(), p.blocks[0].end(), 0);
        return p;
    }

    int n() const {
        int total = 0;
        for (const auto& b : blocks) total += static_cast<int>(b.size());
        return total;
    }

    int block_count() const { return static_cast<int>(blocks.size()); }

    std::vector<int> block_sizes_desc() const {
        std::vector<int> sizes;
        sizes.reserve(blocks.size());
        for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        return sizes;
    }

    /// element -> index of its block.
    std::vector<int> block_index() const {
        std::vector<int> idx(n(), -1);
        for (int b = 0; b < block_count(); ++b)
            for (int v : blocks[b]) idx[v] = b;
        return idx;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Visits all n! permutations of {0..n-1} exactly once, in lexicographic
/// order of one-line notation.
template <typename F>
void for_each_permutation(int n, F&& visit) {
    if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
    if (n > kMaxPermutationN)
        throw size_limit_error("for_each_permutation: n > " + std::to_string(kMaxPermutationN));
    Permutation p = Permutation::identity(n);
    do {
        visit(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.images.begin(), p.images.end()));
}

/// Visits every partition of {0..n-1} with at most max_blocks blocks
/// (max_blocks = 0 means unrestricted), in restricted-growth-string
/// lexicographic order.
template <typename F>
void for_each_set_partition(int n, int max_blocks, F&& visit) {
    if (n < 1) throw std::invalid_argument("for_each_set_partition: n must be >= 1");
    if (n > kMaxSetPartitionN)
        throw size_limit_error("for_each_set_partition: n > " + std::to_string(kMaxSetPartitionN));
    if (max_blocks < 0) throw std::invalid_argument("for_each_set_partition: max_blocks must be >= 1");
    const int cap = (max_blocks == 0) ? n : std::min(max_blocks, n);
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            visit(SetPartition::from_rgs(rgs));
            return;
        }
        const int hi = std::min(used + 1, cap);
        for (int b = 0; b < hi; ++b) {
            rgs[pos] = b;
            self(self, pos + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
}

template <typename F>
void for_each_set_partition(int n, F&& visit) {
    for_each_set_partition(n, 0, std::forward<F>(visit));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline std::vector<SetPartition> all_set_partitions(int n, int max_blocks = 0) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, max_blocks, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

inline BigUInt factorial(int n) {
    BigUInt f{1};
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
    return f;
}

inline BigUInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigUInt{};
    if (k > n - k) k = n - k;
    // multiplicative form, dividing at each step would need division; build
    // from Pascal's rule on a single row instead
    std::vector<BigUInt> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

namespace detail {

inline constexpr int kStirlingCap = 100;

inline const std::vector<std::vector<BigUInt>>& stirling2_table() {
    static const std::vector<std::vector<BigUInt>> table = [] {
        std::vector<std::vector<BigUInt>> t(kStirlingCap + 1);
        t[0] = {BigUInt{1}};
        for (int n = 1; n <= kStirlingCap; ++n) {
            t[n].assign(static_cast<std::size_t>(n) + 1, BigUInt{});
            for (int k = 1; k <= n; ++k) {
                BigUInt v = t[n - 1][k - 1];
                if (k <= n - 1) v += t[n - 1][k] * static_cast<std::uint32_t>(k);
                t[n][k] = std::move(v);
            }
        }
        return t;
    }();
    return table;
}

inline constexpr int kRencontresCap = 20;

// c(n,k,l) packed as [n][k][l]; filled once, read-only afterwards.
inline const std::vector<std::vector<std::vector<BigUInt>>>& rencontres_table() {
    static const std::vector<std::vector<std::vector<BigUInt>>> table = [] {
        const int N = kRencontresCap;
        std::vector<std::vector<std::vector<BigUInt>>> t(
            N + 1, std::vector<std::vector<BigUInt>>(N + 1, std::vector<BigUInt>(N + 1)));
        t[0][0][0] = 1;
        for (int n = 1; n <= N; ++n)
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= k; ++l) {
                    BigUInt v;
                    if (k >= 1 && l >= 1) v += t[n - 1][k - 1][l - 1];
                    if (n - l - 1 > 0) v += t[n - 1][k][l] * static_cast<std::uint32_t>(n - l - 1);
                    if (l + 1 <= n - 1) v += t[n - 1][k][l + 1] * static_cast<std::uint32_t>(l + 1);
                    t[n][k][l] = std::move(v);
                }
        return t;
    }();
    return table;
}

}  // namespace detail

/// Stirling number of the second kind: partitions of {1..n} with exactly k
/// blocks. Zero outside 0 <= k <= n.
inline BigUInt stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return BigUInt{};
    if (n > detail::kStirlingCap)
        throw size_limit_error("stirling2: n > " + std::to_string(detail::kStirlingCap));
    return detail::stirling2_table()[n][k];
}

/// Number of partitions of {1..n} with at most k blocks.
inline BigUInt bell_upto(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("bell_upto: need 1 <= k <= n");
    BigUInt total;
    for (int j = 1; j <= std::min(k, n); ++j) total += stirling2(n, j);
    return total;
}

inline BigUInt bell(int n) { return bell_upto(n, n); }

/// Generalized rencontres number: permutations of {1..n} with exactly k
/// cycles and exactly l fixed points.
inline BigUInt rencontres_c(int n, int k, int l) {
    if (n < 1) throw std::invalid_argument("rencontres_c: n must be >= 1");
    if (n > detail::kRencontresCap)
        throw size_limit_error("rencontres_c: n > " + std::to_string(detail::kRencontresCap));
    if (k < 0 || l < 0 || k > n || l > k) return BigUInt{};
    return detail::rencontres_table()[n][k][l];
}

/// Permutations of {1..n} with k cycles and no fixed point.
inline BigUInt derangement_g(int n, int k) { return rencontres_c(n, k, 0); }

/// Permutations of {1..n} with exactly l fixed points.
inline BigUInt rencontres_f(int n, int l) {
    if (n < 1) throw std::invalid_argument("rencontres_f: n must be >= 1");
    if (l < 0 || l > n) return BigUInt{};
    BigUInt total;
    for (int k = 0; k <= n; ++k) total += rencontres_c(n, k, l);
    return total;
}

/// True iff every cycle of s lies inside a single block of p.
inline bool refines(const Permutation& s, const SetPartition& p) {
    if (s.size() != p.n()) throw std::invalid_argument("refines: mismatched ground sets");
    const std::vector<int> idx = p.block_index();
    const int n = s.size();
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        const int home = idx[i];
        for (int j = i; !seen[j]; j = s[j]) {
            seen[j] = 1;
            if (idx[j] != home) return false;
        }
    }
    return true;
}

/// True iff every block of fine is contained in a block of coarse.
inline bool refines_partition(const SetPartition& fine, const SetPartition& coarse) {
    if (fine.n() != coarse.n()) throw std::invalid_argument("refines_partition: mismatched ground sets");
    const std::vector<int> idx = coarse.block_index();
    for (const auto& b : fine.blocks) {
        const int home = idx[b.front()];
        for (int v : b)
            if (idx[v] != home) return false;
    }
    return true;
}

/// Number of blocks of p meeting the ground subset `cell` (the block count
/// of the restriction p|_cell).
inline int restrict_block_count(const SetPartition& p, const std::vector<int>& cell) {
    const int n = p.n();
    const std::vector<int> idx = p.block_index();
    std::vector<char> hit(p.block_count(), 0);
    int count = 0;
    for (int v : cell) {
        if (v < 0 || v >= n) throw std::invalid_argument("restrict_block_count: element outside ground set");
        if (!hit[idx[v]]) {
            hit[idx[v]] = 1;
            ++count;
        }
    }
    return count;
}

}  // namespace alperm
