#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "alperm/combinatorics.hpp"

namespace alperm {

inline constexpr int kMaxCharacterN = 10;

/// Weakly decreasing positive parts summing to n. Labels both conjugacy
/// classes (as cycle types) and irreducible characters of the symmetric
/// group.
struct IntegerPartition {
    std::vector<int> parts;

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("IntegerPartition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("IntegerPartition: parts must be weakly decreasing");
        }
    }

    static IntegerPartition single_row(int n) { return IntegerPartition(std::vector<int>{n}); }
    static IntegerPartition single_column(int n) {
        return IntegerPartition(std::vector<int>(static_cast<std::size_t>(n), 1));
    }
    static IntegerPartition of_cycle_type(const Permutation& s) {
        return IntegerPartition(s.cycle_type());
    }
    static IntegerPartition of_block_sizes(const SetPartition& pi) {
        return IntegerPartition(pi.block_sizes_desc());
    }

    int sum() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int count() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    friend bool operator<(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts < b.parts;
    }
};

/// All partitions of n in the canonical order used throughout: descending
/// lexicographic (single row first, single column last).
inline std::vector<IntegerPartition> integer_partitions(int n) {
    if (n < 0) throw std::invalid_argument("integer_partitions: n must be >= 0");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            IntegerPartition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Size of the conjugacy class with cycle type nu: n!/z_nu with
/// z_nu = prod over part sizes j of j^m_j m_j!.
inline long long conjugacy_class_size(const IntegerPartition& nu) {
    const int n = nu.sum();
    long long z = 1;
    int run = 0;
    for (std::size_t i = 0; i < nu.parts.size(); ++i) {
        z *= nu.parts[i];
        ++run;
        const bool end_of_run = (i + 1 == nu.parts.size()) || nu.parts[i + 1] != nu.parts[i];
        if (end_of_run) {
            for (int m = 2; m <= run; ++m) z *= m;
            run = 0;
        }
    }
    return static_cast<long long>(factorial(n).to_u64()) / z;
}

namespace detail {

// First-column hook lengths (beta set) of lambda, strictly decreasing.
inline std::vector<int> beta_set(const std::vector<int>& parts) {
    const int m = static_cast<int>(parts.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = parts[i] + (m - 1 - i);
    return beta;
}

inline std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        const int p = beta[i] - (m - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

// Murnaghan-Nakayama on the abacus: removing a border strip of length t is
// moving one bead down by t; the sign is (-1)^(beads jumped over).
inline long long mn_character(const std::vector<int>& lambda, const std::vector<int>& nu,
                              std::size_t nu_pos,
                              std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (nu_pos == nu.size()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, nu_pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int t = nu[nu_pos];
    const std::vector<int> beta = beta_set(lambda);
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        const long long sub = mn_character(partition_from_beta(std::move(nb)), nu, nu_pos + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace detail

/// Irreducible character of the symmetric group: chi_lambda evaluated on the
/// conjugacy class of cycle type nu (Murnaghan-Nakayama recursion).
inline long long character(const IntegerPartition& lambda, const IntegerPartition& nu) {
    if (lambda.sum() != nu.sum())
        throw std::invalid_argument("character: lambda and nu must partition the same n");
    if (lambda.sum() > kMaxCharacterN)
        throw size_limit_error("character: n > " + std::to_string(kMaxCharacterN));
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return detail::mn_character(lambda.parts, nu.parts, 0, memo);
}

/// Full character table of the symmetric group on n letters. Rows are
/// irreducibles, columns are conjugacy classes, both in canonical partition
/// order.
struct CharacterTable {
    int n = 0;
    std::vector<IntegerPartition> partitions;
    std::vector<std::vector<long long>> values;  // values[lambda][nu]
    std::vector<long long> class_sizes;

    int index_of(const IntegerPartition& p) const {
        for (int i = 0; i < static_cast<int>(partitions.size()); ++i)
            if (partitions[i] == p) return i;
        throw std::invalid_argument("CharacterTable: partition not of this n");
    }

    long long chi(const IntegerPartition& lambda, const IntegerPartition& nu) const {
        return values[index_of(lambda)][index_of(nu)];
    }
};

namespace detail {

inline CharacterTable build_character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.partitions = integer_partitions(n);
    const int p = static_cast<int>(t.partitions.size());
    t.values.assign(p, std::vector<long long>(p, 0));
    t.class_sizes.resize(p);
    for (int j = 0; j < p; ++j) t.class_sizes[j] = conjugacy_class_size(t.partitions[j]);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) t.values[i][j] = character(t.partitions[i], t.partitions[j]);
    return t;
}

}  // namespace detail

/// Cached table per n; built once, read-only afterwards.
inline const CharacterTable& character_table(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    if (n > kMaxCharacterN)
        throw size_limit_error("character_table: n > " + std::to_string(kMaxCharacterN));
    static std::mutex mu;
    static std::unique_ptr<CharacterTable> cache[kMaxCharacterN + 1];
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) cache[n] = std::make_unique<CharacterTable>(detail::build_character_table(n));
    return *cache[n];
}

}  // namespace alperm
