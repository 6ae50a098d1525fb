#pragma once

// Independent brute-force oracles used by the test suites. Everything here
// is deliberately written from the definitions, not by calling the library
// code paths under test.

#include <map>
#include <vector>

#include "alperm/combinatorics.hpp"
#include "alperm/matrix.hpp"

namespace oracles {

using alperm::Complex;
using alperm::Matrix;
using alperm::Permutation;

// Signed permutation sum, the textbook determinant definition.
inline Complex det_by_definition(const Matrix& m) {
    const int n = m.n();
    Complex total{0.0, 0.0};
    alperm::for_each_permutation(n, [&](const Permutation& s) {
        // parity via cycle count: sign = (-1)^(n - #cycles)
        const int inversions_parity = (n - s.cycle_count()) % 2;
        Complex prod{1.0, 0.0};
        for (int j = 0; j < n; ++j) prod *= m(j, s[j]);
        total += (inversions_parity == 0 ? 1.0 : -1.0) * prod;
    });
    return total;
}

// Plain permanent: unweighted permutation sum.
inline Complex permanent_by_definition(const Matrix& m) {
    const int n = m.n();
    Complex total{0.0, 0.0};
    alperm::for_each_permutation(n, [&](const Permutation& s) {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < n; ++j) prod *= m(j, s[j]);
        total += prod;
    });
    return total;
}

// Histogram of cycle counts over all of S_n (unsigned Stirling numbers of
// the first kind, by enumeration).
inline std::map<int, long long> cycle_count_histogram(int n) {
    std::map<int, long long> hist;
    alperm::for_each_permutation(n, [&](const Permutation& s) { ++hist[s.cycle_count()]; });
    return hist;
}

// Number of permutations of [n] with exactly k cycles and l fixed points,
// by enumeration.
inline long long count_cycle_fixed(int n, int k, int l) {
    long long count = 0;
    alperm::for_each_permutation(n, [&](const Permutation& s) {
        if (s.cycle_count() == k && s.fixed_point_count() == l) ++count;
    });
    return count;
}

inline bool close(Complex a, Complex b, double rel = 1e-8, double abs_floor = 1e-10) {
    return alperm::relative_error(a, b, abs_floor) <= rel;
}

}  // namespace oracles
