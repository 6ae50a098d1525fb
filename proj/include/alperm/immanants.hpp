#pragma once

#include "alperm/characters.hpp"
#include "alperm/exact.hpp"

namespace alperm {

/// Character-weighted permutation sum. The single-row label gives the
/// permanent, the single-column label the determinant.
inline Complex immanant(const Matrix& M, const IntegerPartition& lambda) {
    const int n = M.n();
    if (lambda.sum() != n) throw std::invalid_argument("immanant: lambda must partition n");
    detail::check_engine_guard("immanant", n, 9);
    const CharacterTable& table = character_table(n);
    const int row = table.index_of(lambda);
    // class lookup by cycle type, keyed on the sorted cycle lengths
    std::map<std::vector<int>, int> class_of;
    for (int j = 0; j < static_cast<int>(table.partitions.size()); ++j)
        class_of[table.partitions[j].parts] = j;
    Complex total{0.0, 0.0};
    for_each_permutation(n, [&](const Permutation& s) {
        const long long chi = table.values[row][class_of.at(s.cycle_type())];
        if (chi == 0) return;
        Complex prod{1.0, 0.0};
        for (int j = 0; j < n; ++j) prod *= M(j, s[j]);
        total += static_cast<double>(chi) * prod;
    });
    return total;
}

/// Coefficient of the immanant labeled lambda in the expansion of the
/// alpha-permanent: the class-averaged pairing of alpha^(cycle count) with
/// chi_lambda.
inline Complex c_lambda(Complex alpha, const IntegerPartition& lambda) {
    const int n = lambda.sum();
    detail::check_engine_guard("c_lambda", n, 9);
    const CharacterTable& table = character_table(n);
    const int row = table.index_of(lambda);
    Complex total{0.0, 0.0};
    for (int j = 0; j < static_cast<int>(table.partitions.size()); ++j) {
        const long long chi = table.values[row][j];
        if (chi == 0) continue;
        total += static_cast<double>(table.class_sizes[j] * chi) *
                 pow_int(alpha, table.partitions[j].count());
    }
    return total / factorial(n).to_double();
}

/// Immanant-basis coefficients of the alpha-permanent, in canonical
/// partition order.
struct CoefficientVector {
    Complex alpha;
    std::vector<IntegerPartition> partitions;
    std::vector<Complex> c;
};

namespace detail {

inline double det_double(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    double sign = 1.0, prod = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (a[piv][k] == 0.0) return 0.0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        prod *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return sign * prod;
}

inline std::vector<std::vector<double>> minor_matrix(const std::vector<std::vector<double>>& a,
                                                     int drop_row, int drop_col) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> m(n - 1, std::vector<double>(n - 1));
    for (int i = 0, r = 0; i < n; ++i) {
        if (i == drop_row) continue;
        for (int j = 0, c = 0; j < n; ++j) {
            if (j == drop_col) continue;
            m[r][c++] = a[i][j];
        }
        ++r;
    }
    return m;
}

/// Adjugate assembled entry by entry from signed minor determinants, so that
/// adjugate(a) * a = det(a) * I.
inline std::vector<std::vector<double>> adjugate_by_minors(
    const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 1) return {{1.0}};
    std::vector<std::vector<double>> adj(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double minor = det_double(minor_matrix(a, j, i));
            adj[i][j] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

/// System matrix of the coefficient equations: row nu (a class), column
/// lambda (an irreducible), entry chi_lambda(nu). One row per class states
/// that the coefficient mix of characters reproduces alpha^(cycle count).
inline std::vector<std::vector<double>> coefficient_system(const CharacterTable& table) {
    const int p = static_cast<int>(table.partitions.size());
    std::vector<std::vector<double>> s(p, std::vector<double>(p));
    for (int nu = 0; nu < p; ++nu)
        for (int lambda = 0; lambda < p; ++lambda)
            s[nu][lambda] = static_cast<double>(table.values[lambda][nu]);
    return s;
}

}  // namespace detail

/// Solves for the immanant-basis coefficients through the literal
/// minor-determinant route: c = adjugate(S) * A / det(S), where S is the
/// coefficient system built from the character table and A holds
/// alpha^(number of parts) per class. Exists to cross-check c_lambda, not
/// for speed.
inline CoefficientVector solve_coefficients(Complex alpha, int n) {
    detail::check_engine_guard("solve_coefficients", n, 8);
    const CharacterTable& table = character_table(n);
    const int p = static_cast<int>(table.partitions.size());
    const auto system = detail::coefficient_system(table);
    const auto adj = detail::adjugate_by_minors(system);
    const double d = detail::det_double(system);
    std::vector<Complex> target(p);
    for (int nu = 0; nu < p; ++nu) target[nu] = pow_int(alpha, table.partitions[nu].count());
    CoefficientVector out;
    out.alpha = alpha;
    out.partitions = table.partitions;
    out.c.assign(p, Complex{0.0, 0.0});
    for (int i = 0; i < p; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < p; ++j) acc += adj[i][j] * target[j];
        out.c[i] = acc / d;
    }
    return out;
}

/// alpha-permanent as the coefficient-weighted sum of immanants.
inline Complex per_via_immanants(const Matrix& M, Complex alpha) {
    const int n = M.n();
    detail::check_engine_guard("per_via_immanants", n, 8);
    Complex total{0.0, 0.0};
    for (const IntegerPartition& lambda : integer_partitions(n))
        total += c_lambda(alpha, lambda) * immanant(M, lambda);
    return total;
}

/// Double expansion: immanants of every block diagonal projection, weighted
/// by coefficients at -beta and falling factorials of -alpha/beta.
inline Complex per_immanant_decomposition_rhs(const Matrix& M, Complex alpha, Complex beta) {
    const int n = M.n();
    detail::check_engine_guard("per_immanant_decomposition_rhs", n, 6);
    if (beta == Complex{0.0, 0.0})
        throw std::invalid_argument("per_immanant_decomposition_rhs: beta must be nonzero");
    const Complex ratio = -alpha / beta;
    Complex total{0.0, 0.0};
    for (const IntegerPartition& lambda : integer_partitions(n)) {
        const Complex coeff = c_lambda(-beta, lambda);
        if (coeff == Complex{0.0, 0.0}) continue;
        Complex inner{0.0, 0.0};
        for_each_set_partition(n, [&](const SetPartition& pi) {
            inner += falling_factorial(ratio, pi.block_count()) * immanant(mask(M, pi), lambda);
        });
        total += coeff * inner;
    }
    return total;
}

struct MobiusSides {
    Complex lhs, rhs;
};

/// Both sides of the partition-lattice inversion identity at a fixed pi.
///
/// Left: the diagonal-product mass of permutations whose cycles are exactly
/// the blocks of pi, times the class-averaged pairing sum (1/n! of the
/// written-out double character sum, which is what makes the two sides
/// balance). Right: the Moebius-weighted sum of beta-permanents of the
/// refinements of pi.
inline MobiusSides mobius_identity_sides(const Matrix& M, Complex beta, const SetPartition& pi) {
    const int n = M.n();
    if (pi.n() != n) throw std::invalid_argument("mobius_identity_sides: dimension mismatch");
    detail::check_engine_guard("mobius_identity_sides", n, 6);
    const CharacterTable& table = character_table(n);
    const int p = static_cast<int>(table.partitions.size());
    const int pi_class = table.index_of(IntegerPartition::of_block_sizes(pi));

    Complex matched_mass{0.0, 0.0};
    for_each_permutation(n, [&](const Permutation& s) {
        if (SetPartition::of_cycles(s) != pi) return;
        Complex prod{1.0, 0.0};
        for (int j = 0; j < n; ++j) prod *= M(j, s[j]);
        matched_mass += prod;
    });

    Complex pairing{0.0, 0.0};
    for (int nu = 0; nu < p; ++nu) {
        Complex class_sum{0.0, 0.0};
        for (int c = 0; c < p; ++c)
            class_sum += static_cast<double>(table.class_sizes[c] * table.values[nu][c]) *
                         pow_int(beta, table.partitions[c].count());
        pairing += static_cast<double>(table.values[nu][pi_class]) * class_sum;
    }
    pairing /= factorial(n).to_double();

    Complex rhs{0.0, 0.0};
    for_each_set_partition(n, [&](const SetPartition& finer) {
        if (!refines_partition(finer, pi)) return;
        double moebius = 1.0;
        for (const auto& b : pi.blocks) {
            const int r = restrict_block_count(finer, b);
            moebius *= ((r - 1) % 2 == 0 ? 1.0 : -1.0) * factorial(r - 1).to_double();
        }
        rhs += per_alpha_masked(M, finer, beta) * moebius;
    });

    return MobiusSides{matched_mass * pairing, rhs};
}

}  // namespace alperm
