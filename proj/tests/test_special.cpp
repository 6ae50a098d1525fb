#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alperm/random.hpp"
#include "alperm/special.hpp"
#include "support/oracles.hpp"

using namespace alperm;
using oracles::close;

namespace {

Complex random_alpha(SplitMix64& rng) {
    return Complex{3.0 * rng.u01() - 1.5, 3.0 * rng.u01() - 1.5};
}

Complex random_nonzero(SplitMix64& rng) {
    for (;;) {
        const Complex z{2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0};
        if (std::abs(z) > 0.1) return z;
    }
}

}  // namespace

TEST_CASE("permutation matrices") {
    SplitMix64 rng(31);
    const Complex alpha = random_alpha(rng);

    CHECK(per_alpha_permutation_matrix(Permutation::identity(4), alpha) == pow_int(alpha, 4));
    CHECK(per_alpha_permutation_matrix(Permutation({1, 2, 3, 4, 0}), alpha) == alpha);

    for (int n = 2; n <= 5; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            CHECK(close(per_alpha_def(permutation_matrix(s), alpha),
                        per_alpha_permutation_matrix(s, alpha), 1e-12));
        });
}

TEST_CASE("partition matrices") {
    SplitMix64 rng(32);
    const Complex alpha = random_alpha(rng);

    CHECK(per_alpha_partition_matrix(SetPartition::singletons(5), alpha) == pow_int(alpha, 5));
    CHECK(close(per_alpha_partition_matrix(SetPartition::one_block(5), alpha),
                rising_factorial(alpha, 5), 1e-12));

    for (int n = 2; n <= 6; ++n)
        for_each_set_partition(n, [&](const SetPartition& pi) {
            CHECK(close(per_alpha_def(partition_matrix(pi), alpha),
                        per_alpha_partition_matrix(pi, alpha), 1e-10));
        });
}

TEST_CASE("two-level block closed form: smallest case expands by hand") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        BlockSpec spec;
        spec.a11 = random_nonzero(rng);
        spec.a12 = random_alpha(rng);
        spec.a21 = random_alpha(rng);
        spec.a22 = random_nonzero(rng);
        spec.n1 = spec.n2 = 1;
        const Complex alpha = random_alpha(rng);
        const Complex expected =
            alpha * alpha * spec.a11 * spec.a22 + alpha * spec.a12 * spec.a21;
        CHECK(close(per_alpha_block2(spec, alpha), expected, 1e-12));
    }
}

TEST_CASE("two-level block closed form: zero off-diagonal factorizes") {
    SplitMix64 rng(34);
    BlockSpec spec;
    spec.a11 = random_nonzero(rng);
    spec.a22 = random_nonzero(rng);
    spec.a12 = spec.a21 = Complex{0.0, 0.0};
    spec.n1 = 3;
    spec.n2 = 2;
    const Complex alpha = random_alpha(rng);
    const Complex expected = rising_factorial(alpha, 3) * rising_factorial(alpha, 2) *
                             pow_int(spec.a11, 3) * pow_int(spec.a22, 2);
    CHECK(close(per_alpha_block2(spec, alpha), expected, 1e-12));
}

TEST_CASE("two-level block closed form matches brute force") {
    SplitMix64 rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        BlockSpec spec;
        spec.a11 = random_nonzero(rng);
        spec.a12 = random_alpha(rng);
        spec.a21 = random_alpha(rng);
        spec.a22 = random_nonzero(rng);
        spec.n1 = 1 + static_cast<int>(rng.u01() * 5);
        spec.n2 = 1 + static_cast<int>(rng.u01() * (6 - spec.n1));
        const Complex alpha = random_alpha(rng);
        CHECK(close(per_alpha_block2(spec, alpha), per_alpha_def(block2_matrix(spec), alpha), 1e-9));
    }

    // negative-integer alpha goes through the cancelled rising-factorial form
    BlockSpec spec{Complex(1.5), Complex(0.5), Complex(-0.25), Complex(2.0), 3, 2};
    for (double a : {-1.0, -2.0, -3.0})
        CHECK(close(per_alpha_block2(spec, Complex(a)), per_alpha_def(block2_matrix(spec), Complex(a)),
                    1e-9));
}

TEST_CASE("two-level block closed form is swap-symmetric") {
    SplitMix64 rng(36);
    for (int trial = 0; trial < 20; ++trial) {
        BlockSpec spec;
        spec.a11 = random_nonzero(rng);
        spec.a12 = random_alpha(rng);
        spec.a21 = random_alpha(rng);
        spec.a22 = random_nonzero(rng);
        spec.n1 = 1 + static_cast<int>(rng.u01() * 4);
        spec.n2 = 1 + static_cast<int>(rng.u01() * 4);
        BlockSpec swapped{spec.a22, spec.a21, spec.a12, spec.a11, spec.n2, spec.n1};
        const Complex alpha = random_alpha(rng);
        CHECK(close(per_alpha_block2(spec, alpha), per_alpha_block2(swapped, alpha), 1e-10));
    }
}

TEST_CASE("two-level block rejects zero diagonal entries") {
    BlockSpec spec{Complex(0.0), Complex(1.0), Complex(1.0), Complex(1.0), 2, 2};
    CHECK_THROWS_AS(per_alpha_block2(spec, Complex(1.0)), std::invalid_argument);
}

TEST_CASE("homogeneously symmetric closed form") {
    SplitMix64 rng(37);

    // b = 0: diagonal matrix
    HomSymSpec diag{random_nonzero(rng), Complex(0.0), 5};
    const Complex alpha = random_alpha(rng);
    CHECK(close(per_alpha_homsym(diag, alpha), pow_int(alpha, 5) * pow_int(diag.a, 5), 1e-12));

    // n = 2: two permutations
    HomSymSpec two{random_nonzero(rng), random_alpha(rng), 2};
    CHECK(close(per_alpha_homsym(two, alpha),
                alpha * alpha * two.a * two.a + alpha * two.b * two.b, 1e-12));

    for (int trial = 0; trial < 60; ++trial) {
        HomSymSpec spec{random_nonzero(rng), random_alpha(rng), 1 + static_cast<int>(rng.u01() * 7)};
        const Complex a = random_alpha(rng);
        CHECK(close(per_alpha_homsym(spec, a), per_alpha_def(homsym_matrix(spec), a), 1e-10));
    }

    CHECK_THROWS_AS(per_alpha_homsym(HomSymSpec{Complex(0.0), Complex(1.0), 3}, alpha),
                    std::invalid_argument);
    CHECK_THROWS_AS(per_alpha_homsym(HomSymSpec{Complex(1.0), Complex(1.0), 11}, alpha),
                    size_limit_error);
}

TEST_CASE("all-ones consistency between closed forms") {
    SplitMix64 rng(38);
    for (int n = 1; n <= 8; ++n) {
        const Complex alpha = random_alpha(rng);
        CHECK(close(per_alpha_homsym(HomSymSpec{Complex(1.0), Complex(1.0), std::min(n, 10)}, alpha),
                    rising_factorial(alpha, std::min(n, 10)), 1e-10));
    }
}
