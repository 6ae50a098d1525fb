#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "alperm/combinatorics.hpp"
#include "alperm/matrix.hpp"

namespace alperm {

/// Determinant by LU with scaled partial pivoting. A pivot column whose best
/// candidate falls below 1e-12 times its row norm is treated as exactly
/// singular and the determinant reported as 0.
inline Complex det(const Matrix& M) {
    const int n = M.n();
    std::vector<Complex> a(M.entries());
    std::vector<double> norm(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) norm[i] = std::max(norm[i], std::abs(a[i * n + j]));
        if (norm[i] == 0.0) return Complex{0.0, 0.0};
    }
    double sign = 1.0;
    Complex prod{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a[k * n + k]) / norm[k];
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(a[i * n + k]) / norm[i];
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (std::abs(a[piv * n + k]) <= 1e-12 * norm[piv]) return Complex{0.0, 0.0};
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            std::swap(norm[k], norm[piv]);
            sign = -sign;
        }
        const Complex pivot = a[k * n + k];
        prod *= pivot;
        for (int i = k + 1; i < n; ++i) {
            const Complex f = a[i * n + k] / pivot;
            if (f == Complex{0.0, 0.0}) continue;
            for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return sign * prod;
}

/// Hadamard product M . pi: entries whose row and column indices live in
/// different blocks of pi are zeroed (block diagonal projection of M).
inline Matrix mask(const Matrix& M, const SetPartition& pi) {
    if (M.n() != pi.n()) throw std::invalid_argument("mask: dimension mismatch");
    const std::vector<int> idx = pi.block_index();
    Matrix out(M.n());
    for (int i = 0; i < M.n(); ++i)
        for (int j = 0; j < M.n(); ++j)
            if (idx[i] == idx[j]) out(i, j) = M(i, j);
    return out;
}

namespace detail {

inline void check_engine_guard(const char* who, int n, int cap) {
    if (n > cap)
        throw size_limit_error(std::string(who) + ": n > " + std::to_string(cap));
}

}  // namespace detail

/// Direct evaluation of the alpha-permanent: the cycle-count-weighted
/// permutation sum. Exact reference engine; everything else is checked
/// against it.
inline Complex per_alpha_def(const Matrix& M, Complex alpha) {
    const int n = M.n();
    detail::check_engine_guard("per_alpha_def", n, kMaxPermutationN);
    std::vector<Complex> alpha_pow(n + 1);
    alpha_pow[0] = 1.0;
    for (int k = 1; k <= n; ++k) alpha_pow[k] = alpha_pow[k - 1] * alpha;
    Complex total{0.0, 0.0};
    for_each_permutation(n, [&](const Permutation& s) {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < n; ++j) prod *= M(j, s[j]);
        total += alpha_pow[s.cycle_count()] * prod;
    });
    return total;
}

/// alpha-permanent of the principal submatrix M[idx]; the empty index set
/// gives the empty product 1.
inline Complex per_alpha_submatrix(const Matrix& M, const std::vector<int>& idx, Complex alpha) {
    if (idx.empty()) return Complex{1.0, 0.0};
    return per_alpha_def(M.submatrix(idx), alpha);
}

namespace detail {

// Expansion along the last row. The diagonal term closes a cycle (factor
// alpha); an off-diagonal term contracts the matrix: column j inherits the
// removed column so the open path keeps its bookkeeping, and no cycle is
// credited until it actually closes.
inline Complex per_alpha_cofactor_rec(const Matrix& M, Complex alpha) {
    const int n = M.n();
    if (n == 1) return alpha * M(0, 0);
    const int last = n - 1;
    Matrix minor(n - 1);
    for (int i = 0; i < last; ++i)
        for (int j = 0; j < last; ++j) minor(i, j) = M(i, j);
    Complex acc = alpha * M(last, last) * per_alpha_cofactor_rec(minor, alpha);
    for (int j = 0; j < last; ++j) {
        if (M(last, j) == Complex{0.0, 0.0}) continue;  // exact-zero subtree
        Matrix contracted = minor;
        for (int i = 0; i < last; ++i) contracted(i, j) = M(i, last);
        acc += M(last, j) * per_alpha_cofactor_rec(contracted, alpha);
    }
    return acc;
}

}  // namespace detail

/// Cofactor-style recursion for the alpha-permanent; same arithmetic content
/// as per_alpha_def in a different summation order.
inline Complex per_alpha_cofactor(const Matrix& M, Complex alpha) {
    detail::check_engine_guard("per_alpha_cofactor", M.n(), kMaxPermutationN);
    return detail::per_alpha_cofactor_rec(M, alpha);
}

/// Product over the blocks of pi of the alpha-permanents of the submatrices
/// M[b]; equals per_alpha of the masked matrix without materializing it.
inline Complex per_alpha_masked(const Matrix& M, const SetPartition& pi, Complex alpha) {
    if (M.n() != pi.n()) throw std::invalid_argument("per_alpha_masked: dimension mismatch");
    Complex prod{1.0, 0.0};
    for (const auto& b : pi.blocks) {
        detail::check_engine_guard("per_alpha_masked", static_cast<int>(b.size()), kMaxPermutationN);
        prod *= per_alpha_submatrix(M, b, alpha);
    }
    return prod;
}

/// Product of the block determinants det M[b]; this is det of the masked
/// matrix, which is block diagonal up to a symmetric permutation.
inline Complex det_masked(const Matrix& M, const SetPartition& pi) {
    if (M.n() != pi.n()) throw std::invalid_argument("det_masked: dimension mismatch");
    Complex prod{1.0, 0.0};
    for (const auto& b : pi.blocks) {
        if (b.size() == 1) {
            prod *= M(b[0], b[0]);
        } else {
            prod *= det(M.submatrix(b));
        }
    }
    return prod;
}

/// Right-hand side of the decomposition identity: the partition sum of
/// falling-factorial weights times masked alpha-permanents. Equals
/// per_alpha_def(M, alpha * beta).
inline Complex rhs_decomposition(const Matrix& M, Complex alpha, Complex beta) {
    const int n = M.n();
    detail::check_engine_guard("rhs_decomposition", n, 10);
    Complex total{0.0, 0.0};
    for_each_set_partition(n, [&](const SetPartition& pi) {
        total += falling_factorial(beta, pi.block_count()) * per_alpha_masked(M, pi, alpha);
    });
    return total;
}

namespace detail {

/// Negative-integer detection used to dispatch the truncated branch: the
/// real part must be exactly a negative integer and the imaginary part
/// negligible.
inline bool is_negative_integer(Complex beta, int& k_out) {
    const double re = beta.real();
    if (std::abs(beta.imag()) >= 1e-12) return false;
    if (!(re < 0.0) || re != std::round(re)) return false;
    k_out = static_cast<int>(-re);
    return true;
}

}  // namespace detail

/// beta-permanent through block determinants: (-1)^n times the partition sum
/// of (-beta) falling-factorial weights and products of block determinants.
/// For beta = -k (k a positive integer) the weights vanish beyond k blocks,
/// so only partitions with at most k blocks are enumerated.
inline Complex per_alpha_via_det(const Matrix& M, Complex beta) {
    const int n = M.n();
    int k = 0;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    Complex total{0.0, 0.0};
    if (detail::is_negative_integer(beta, k)) {
        detail::check_engine_guard("per_alpha_via_det", n, kMaxSetPartitionN);
        for_each_set_partition(n, std::min(k, n), [&](const SetPartition& pi) {
            total += falling_factorial(Complex(static_cast<double>(k)), pi.block_count()) *
                     det_masked(M, pi);
        });
    } else {
        detail::check_engine_guard("per_alpha_via_det", n, 10);
        for_each_set_partition(n, [&](const SetPartition& pi) {
            total += falling_factorial(-beta, pi.block_count()) * det_masked(M, pi);
        });
    }
    return sign * total;
}

/// Right-hand side of the sum identity: over all subsets b of the row index
/// set, the alpha-permanent of the matrix taking row i from A when i is in b
/// and from B otherwise. Equals per_alpha_def(A + B, alpha).
inline Complex rhs_sum_identity(const Matrix& A, const Matrix& B, Complex alpha) {
    if (A.n() != B.n()) throw std::invalid_argument("rhs_sum_identity: dimension mismatch");
    const int n = A.n();
    detail::check_engine_guard("rhs_sum_identity", n, 10);
    Complex total{0.0, 0.0};
    Matrix mixed(n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        for (int i = 0; i < n; ++i) {
            const Matrix& src = (bits >> i) & 1u ? A : B;
            for (int j = 0; j < n; ++j) mixed(i, j) = src(i, j);
        }
        total += per_alpha_def(mixed, alpha);
    }
    return total;
}

/// Right-hand side of the shifted-identity corollary: subset sum of
/// alpha^(n-|b|) per_alpha A[b], with the empty subset contributing 1.
/// Equals per_alpha_def(A + I, alpha).
inline Complex per_alpha_plus_identity(const Matrix& A, Complex alpha) {
    const int n = A.n();
    detail::check_engine_guard("per_alpha_plus_identity", n, kMaxPermutationN);
    Complex total{0.0, 0.0};
    std::vector<int> idx;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        idx.clear();
        for (int i = 0; i < n; ++i)
            if ((bits >> i) & 1u) idx.push_back(i);
        total += pow_int(alpha, n - static_cast<int>(idx.size())) * per_alpha_submatrix(A, idx, alpha);
    }
    return total;
}

/// Right-hand side of the product identity: the sum over all row selections
/// x in [n]^n of per_alpha(B_x) times the matching product of A entries,
/// where row j of B_x is row x_j of B. Equals per_alpha_def(A * B, alpha).
inline Complex rhs_product_identity(const Matrix& A, const Matrix& B, Complex alpha) {
    if (A.n() != B.n()) throw std::invalid_argument("rhs_product_identity: dimension mismatch");
    const int n = A.n();
    detail::check_engine_guard("rhs_product_identity", n, 7);
    Complex total{0.0, 0.0};
    std::vector<int> x(n, 0);
    Matrix bx(n);
    for (;;) {
        Complex aprod{1.0, 0.0};
        for (int j = 0; j < n; ++j) aprod *= A(j, x[j]);
        if (aprod != Complex{0.0, 0.0}) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) bx(i, j) = B(x[i], j);
            total += per_alpha_def(bx, alpha) * aprod;
        }
        int pos = n - 1;
        while (pos >= 0 && x[pos] == n - 1) x[pos--] = 0;
        if (pos < 0) break;
        ++x[pos];
    }
    return total;
}

enum class Engine { definition, cofactor, det_decomposition };

struct AlphaPermanentResult {
    Complex value;
    Engine method;
    std::int64_t terms_evaluated;
};

/// Dispatch to one of the three exact engines, reporting how many terms the
/// chosen summation visited.
inline AlphaPermanentResult per_alpha(const Matrix& M, Complex alpha, Engine engine) {
    const int n = M.n();
    AlphaPermanentResult r{};
    r.method = engine;
    switch (engine) {
        case Engine::definition:
            r.value = per_alpha_def(M, alpha);
            r.terms_evaluated = static_cast<std::int64_t>(factorial(n).to_u64());
            break;
        case Engine::cofactor:
            r.value = per_alpha_cofactor(M, alpha);
            r.terms_evaluated = static_cast<std::int64_t>(factorial(n).to_u64());
            break;
        case Engine::det_decomposition: {
            r.value = per_alpha_via_det(M, alpha);
            int k = 0;
            if (detail::is_negative_integer(alpha, k))
                r.terms_evaluated =
                    static_cast<std::int64_t>(bell_upto(n, std::min(k, n)).to_u64());
            else
                r.terms_evaluated = static_cast<std::int64_t>(bell(n).to_u64());
            break;
        }
    }
    return r;
}

}  // namespace alperm
