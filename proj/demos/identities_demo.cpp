// Walks through the main identities on a small random matrix: the three
// exact engines, the partition decomposition, the determinant route, and the
// immanant expansion all landing on the same number.

#include <cstdio>

#include "alperm/immanants.hpp"
#include "alperm/random.hpp"

using namespace alperm;

int main() {
    SplitMix64 rng(2024);
    const Matrix m = random_complex_matrix(5, rng);
    const Complex alpha{-1.3, 0.4};

    const Complex by_def = per_alpha_def(m, alpha);
    std::printf("definition engine        %12.8f %+12.8fi\n", by_def.real(), by_def.imag());

    const Complex by_cof = per_alpha_cofactor(m, alpha);
    std::printf("cofactor recursion       %12.8f %+12.8fi\n", by_cof.real(), by_cof.imag());

    const Complex by_det = per_alpha_via_det(m, alpha);
    std::printf("determinant route        %12.8f %+12.8fi\n", by_det.real(), by_det.imag());

    // split alpha into beta * gamma and recombine through the decomposition
    const Complex beta{0.5, 0.25};
    const Complex gamma = alpha / beta;
    const Complex recombined = rhs_decomposition(m, gamma, beta);
    std::printf("decomposition (b*g)      %12.8f %+12.8fi\n", recombined.real(), recombined.imag());

    const Complex by_imm = per_via_immanants(m, alpha);
    std::printf("immanant expansion       %12.8f %+12.8fi\n", by_imm.real(), by_imm.imag());

    std::printf("max pairwise deviation   %g\n",
                std::max({relative_error(by_def, by_cof), relative_error(by_def, by_det),
                          relative_error(by_def, recombined), relative_error(by_def, by_imm)}));
    return 0;
}
