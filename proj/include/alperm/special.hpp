#pragma once

#include "alperm/exact.hpp"

namespace alperm {

/// (n1+n2)-dimensional two-level block pattern: the top-left n1 x n1 block is
/// constant a11, the bottom-right n2 x n2 block a22, and the off-diagonal
/// rectangles a12 / a21.
struct BlockSpec {
    Complex a11, a12, a21, a22;
    int n1 = 1, n2 = 1;
};

/// n x n matrix with diagonal a and off-diagonal b.
struct HomSymSpec {
    Complex a, b;
    int n = 1;
};

inline Matrix permutation_matrix(const Permutation& s) {
    Matrix P(s.size());
    for (int i = 0; i < s.size(); ++i) P(i, s[i]) = 1.0;
    return P;
}

inline Matrix partition_matrix(const SetPartition& pi) {
    const std::vector<int> idx = pi.block_index();
    const int n = pi.n();
    Matrix P(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (idx[i] == idx[j]) P(i, j) = 1.0;
    return P;
}

inline Matrix block2_matrix(const BlockSpec& spec) {
    if (spec.n1 < 1 || spec.n2 < 1) throw std::invalid_argument("block2_matrix: n1,n2 must be >= 1");
    const int n = spec.n1 + spec.n2;
    Matrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool ti = i < spec.n1, tj = j < spec.n1;
            A(i, j) = ti ? (tj ? spec.a11 : spec.a12) : (tj ? spec.a21 : spec.a22);
        }
    return A;
}

inline Matrix homsym_matrix(const HomSymSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("homsym_matrix: n must be >= 1");
    Matrix A(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) A(i, j) = (i == j) ? spec.a : spec.b;
    return A;
}

/// alpha-permanent of a permutation matrix: alpha to the cycle count.
inline Complex per_alpha_permutation_matrix(const Permutation& s, Complex alpha) {
    return pow_int(alpha, s.cycle_count());
}

/// alpha-permanent of a partition's 0/1 matrix: product over blocks of the
/// rising factorial of alpha at the block size.
inline Complex per_alpha_partition_matrix(const SetPartition& pi, Complex alpha) {
    Complex prod{1.0, 0.0};
    for (const auto& b : pi.blocks) prod *= rising_factorial(alpha, static_cast<int>(b.size()));
    return prod;
}

/// Closed form for the two-level block matrix.
///
/// The cross-term ratio is rho = a12*a21 / (a11*a22) and the rising-factorial
/// quotient is evaluated in the cancelled form (alpha+j)^(n1-j rising) times
/// alpha^(n2 rising), which stays finite for every alpha including negative
/// integers.
inline Complex per_alpha_block2(const BlockSpec& spec, Complex alpha) {
    if (spec.n1 < 1 || spec.n2 < 1) throw std::invalid_argument("per_alpha_block2: n1,n2 must be >= 1");
    if (spec.a11 == Complex{0.0, 0.0} || spec.a22 == Complex{0.0, 0.0})
        throw std::invalid_argument(
            "per_alpha_block2: zero diagonal entry; use a generic engine instead");
    const Complex rho = spec.a12 * spec.a21 / (spec.a11 * spec.a22);
    const int jmax = std::min(spec.n1, spec.n2);
    Complex sum{0.0, 0.0};
    double jfact = 1.0;
    Complex rho_pow{1.0, 0.0};
    for (int j = 0; j <= jmax; ++j) {
        if (j > 0) {
            jfact *= j;
            rho_pow *= rho;
        }
        sum += rising_factorial(alpha + static_cast<double>(j), spec.n1 - j) *
               falling_factorial(static_cast<double>(spec.n1), j) *
               falling_factorial(static_cast<double>(spec.n2), j) * rho_pow / jfact;
    }
    return pow_int(spec.a11, spec.n1) * pow_int(spec.a22, spec.n2) *
           rising_factorial(alpha, spec.n2) * sum;
}

/// Closed form for the homogeneously symmetric matrix via generalized
/// rencontres numbers: a^n sum over cycle count k and fixed-point count l of
/// c(n,k,l) alpha^k d^(n-l), d = b/a.
inline Complex per_alpha_homsym(const HomSymSpec& spec, Complex alpha) {
    if (spec.n < 1) throw std::invalid_argument("per_alpha_homsym: n must be >= 1");
    if (spec.a == Complex{0.0, 0.0})
        throw std::invalid_argument("per_alpha_homsym: zero diagonal; d = b/a undefined");
    detail::check_engine_guard("per_alpha_homsym", spec.n, 10);
    const int n = spec.n;
    const Complex d = spec.b / spec.a;
    std::vector<Complex> d_pow(n + 1);
    d_pow[0] = 1.0;
    for (int t = 1; t <= n; ++t) d_pow[t] = d_pow[t - 1] * d;
    Complex sum{0.0, 0.0};
    Complex alpha_pow{1.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        alpha_pow *= alpha;
        Complex inner{0.0, 0.0};
        for (int l = 0; l <= n; ++l) {
            const BigUInt c = rencontres_c(n, k, l);
            if (c.is_zero()) continue;
            inner += c.to_double() * d_pow[n - l];
        }
        sum += alpha_pow * inner;
    }
    return pow_int(spec.a, n) * sum;
}

}  // namespace alperm
