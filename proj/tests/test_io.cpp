#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alperm/exact.hpp"
#include "alperm/fixtures.hpp"
#include "alperm/io.hpp"
#include "alperm/random.hpp"

using namespace alperm;

TEST_CASE("dense csv round trip is value-identical") {
    SplitMix64 rng(61);
    for (int n : {1, 3, 6}) {
        const Matrix m = random_real_matrix(n, rng);
        const Matrix back = parse_matrix_csv(format_matrix_csv(m), MatrixFormat::dense);
        CHECK(back == m);
    }
}

TEST_CASE("upper-triangular parse mirrors across the diagonal") {
    const Matrix m = parse_matrix_csv("1,2,3\n4,5\n6\n", MatrixFormat::upper);
    REQUIRE(m.n() == 3);
    CHECK(m(0, 1) == Complex(2.0));
    CHECK(m(1, 0) == Complex(2.0));
    CHECK(m(2, 0) == Complex(3.0));
    CHECK(m(1, 1) == Complex(4.0));
    CHECK(m(2, 2) == Complex(6.0));
    CHECK(m.is_symmetric());
}

TEST_CASE("parse failures are loud") {
    CHECK_THROWS_AS(parse_matrix_csv("1,2\n3\n", MatrixFormat::dense), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_csv("1,2\n3,x\n", MatrixFormat::dense), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_csv("1,2\n3,nan\n", MatrixFormat::dense), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_csv("1,2,3\n4,5\n6,7\n", MatrixFormat::upper),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_csv("", MatrixFormat::dense), std::invalid_argument);
    CHECK_THROWS_AS(read_matrix_csv("/nonexistent/file.csv", MatrixFormat::dense),
                    std::invalid_argument);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_complex("-2") == Complex(-2.0));
    CHECK(parse_complex("0.5,-1.25") == Complex(0.5, -1.25));
    CHECK_THROWS_AS(parse_complex("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
}

TEST_CASE("bundled benchmark matrix files match the embedded fixture") {
    const std::string dir = ALPERM_DATA_DIR;
    const Matrix dense = read_matrix_csv(dir + "/X1.csv", MatrixFormat::dense);
    const Matrix upper = read_matrix_csv(dir + "/X1_upper.csv", MatrixFormat::upper);
    CHECK(dense == fixtures::x1());
    CHECK(upper == fixtures::x1());
}

TEST_CASE("benchmark fixture is symmetric positive definite") {
    const Matrix& x1 = fixtures::x1();
    CHECK(x1.is_symmetric());
    CHECK(x1.is_real());
    // all leading principal minors positive
    std::vector<int> idx;
    for (int k = 0; k < x1.n(); ++k) {
        idx.push_back(k);
        CHECK(det(x1.submatrix(idx)).real() > 0.0);
    }
}

TEST_CASE("complex matrices have no csv form") {
    Matrix z(2);
    z(0, 1) = Complex(0.0, 1.0);
    CHECK_THROWS_AS(format_matrix_csv(z), std::invalid_argument);
}
