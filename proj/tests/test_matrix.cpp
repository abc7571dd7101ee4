#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "support/oracles.hpp"
#include "support/test_utils.hpp"
#include "zetaverify/identity.hpp"
#include "zetaverify/rational_matrix.hpp"

using zv::BigRational;
using zv::RationalMatrix;

TEST_CASE("build_matrix(2) has the exact documented entries") {
    RationalMatrix m = zv::build_matrix(2);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m.at(0, 0) == BigRational(1, 18));
    CHECK(m.at(0, 1) == BigRational(1, 270));
    CHECK(m.at(1, 0) == BigRational(0));
    CHECK(m.at(1, 1) == BigRational(1));
}

TEST_CASE("build_matrix(3) is 4x4 with the expected diagonal") {
    RationalMatrix m = zv::build_matrix(3);
    REQUIRE(m.rows() == 4);
    CHECK(m.at(0, 0) == BigRational(1, 30));   // A_2/5
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(m.at(i, i) == BigRational(1));
    CHECK_THROWS_AS(zv::build_matrix(1), zv::InvalidN);
}

TEST_CASE("matrices from build_matrix are upper triangular") {
    for (long n = 2; n <= 6; ++n) {
        RationalMatrix m = zv::build_matrix(n);
        CHECK(m.is_upper_triangular());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                CHECK(m.at(i, j).is_zero());
    }
}

TEST_CASE("determinants are the diagonal product, verified without assuming it") {
    CHECK(zv::determinant(RationalMatrix::identity(3)) == BigRational(1));
    for (long n = 2; n <= 10; ++n) {
        BigRational det = zv::determinant(zv::build_matrix(n));
        CHECK(det == BigRational(1, 6 * (2 * n - 1)));
        CHECK(!det.is_zero());      // the invertibility claim, checked
    }
}

TEST_CASE("determinant guards and degenerate cases") {
    CHECK_THROWS_AS(zv::determinant(RationalMatrix(2, 3)), zv::NotSquare);
    RationalMatrix singular(2, 2);
    singular.at(0, 0) = BigRational(1, 2);
    singular.at(0, 1) = BigRational(1, 3);
    singular.at(1, 0) = BigRational(3, 2);
    singular.at(1, 1) = BigRational(1);      // row 2 = 3 * row 1
    CHECK(zv::determinant(singular) == BigRational(0));
    // zero leading pivot forces a row swap
    RationalMatrix swap2(2, 2);
    swap2.at(0, 1) = BigRational(1);
    swap2.at(1, 0) = BigRational(1);
    CHECK(zv::determinant(swap2) == BigRational(-1));
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(13579u);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = dim(rng);
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = BigRational(num(rng), den(rng));
        CHECK(zv::determinant(m) == oracles::determinant_cofactor(m));
    }
}

TEST_CASE("apply_matrix row 1 reproduces the normalized recurrence") {
    auto out = zv::apply_matrix(2, 30);
    REQUIRE(out.size() == 2);
    zv::IdentityReport ratio = zv::verify_ratio_recurrence(2, 30);
    CHECK(out[0].certainly_intersects(ratio.rhs));
    CHECK(testutil::mid_distance(out[0], ratio.rhs) <= 1e-25);

    // first entry sits below ratio(7) by the measured normalized residual
    zv::PrecisionReal expected = zv::odd_ratio(7, 40).value -
                                 testutil::ref("2.025843953238284628240047010873075236731558119e-06");
    CHECK(out[0].certainly_intersects(expected));
}

TEST_CASE("apply_matrix identity rows pass inputs through bit-for-bit") {
    for (long n : {2L, 3L}) {
        auto out = zv::apply_matrix(n, 30);
        const std::size_t dim = out.size();
        for (std::size_t j = 1; j < dim; ++j) {
            zv::PrecisionReal input =
                zv::odd_ratio(4 * n - 1 - 2 * static_cast<long>(j + 1), 30).value;
            CHECK(mpfr_equal_p(out[j].midpoint_raw(), input.midpoint_raw()));
            CHECK(mpfr_equal_p(out[j].radius_raw(), input.radius_raw()));
        }
    }
}
