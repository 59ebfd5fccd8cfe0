#include <doctest.h>

#include <random>

#include "equidist/error.hpp"
#include "equidist/exact_linalg.hpp"
#include "oracles.hpp"

using namespace equidist;

namespace {

ExactMatrix from_oracle(const oracle::Matrix& a) {
    std::vector<BigInt> e;
    for (const auto& row : a)
        for (auto v : row) e.emplace_back(v);
    return ExactMatrix(a.size(), a.front().size(), std::move(e));
}

oracle::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    oracle::Matrix a(rows, std::vector<long long>(cols));
    for (auto& row : a)
        for (auto& v : row) v = d(rng);
    return a;
}

}  // namespace

TEST_CASE("det_exact examples") {
    CHECK(det_exact(ExactMatrix::identity(3)) == 1);
    CHECK(det_exact(ExactMatrix{{2, 1}, {1, 2}}) == 3);
    CHECK(det_exact(ExactMatrix{{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}) == 20);
    CHECK(oracle::laplace_det({{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}) == 20);
    CHECK(det_exact(ExactMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det_exact(ExactMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(det_exact(ExactMatrix(2, 3)), InvalidInput);
}

TEST_CASE("structured_det examples") {
    CHECK(structured_det({0, 5, 3}) == 125);
    CHECK(structured_det({4, 0, 2}) == 0);
    CHECK(structured_det({1, 2, 3}) == 20);
    CHECK(structured_det({1, 2, 3}) == det_exact(StructuredMatrixSpec{1, 2, 3}.materialize()));
    CHECK_THROWS_AS(structured_det({1, 1, 0}), InvalidInput);
}

TEST_CASE("materialize has diagonal theta+gamma and off-diagonal theta") {
    const auto a = StructuredMatrixSpec{-2, 7, 4}.materialize();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(a(i, j) == (i == j ? 5 : -2));
}

TEST_CASE("closed-form determinant matches elimination and cofactor expansion") {
    for (int theta = -3; theta <= 3; ++theta)
        for (int gamma = -3; gamma <= 3; ++gamma)
            for (std::size_t m = 1; m <= 7; ++m) {
                const StructuredMatrixSpec spec{theta, gamma, m};
                const BigInt closed = structured_det(spec);
                CHECK(closed == det_exact(spec.materialize()));
                CHECK(closed == oracle::laplace_det(oracle::structured(theta, gamma, m)));
            }
}

TEST_CASE("rank_exact examples") {
    CHECK(rank_exact(ExactMatrix::identity(4)) == 4);
    CHECK(rank_exact(ExactMatrix::all_ones(3)) == 1);
    CHECK(rank_exact(StructuredMatrixSpec{0, 4, 4}.materialize()) == 4);
    CHECK(rank_exact(ExactMatrix{{0, 0, 0}, {0, 0, 0}}) == 0);
    CHECK(rank_exact(ExactMatrix{{0, 0, 1}, {0, 0, 2}, {1, 0, 0}}) == 2);
    CHECK(rank_exact(ExactMatrix{{1, 2, 3, 4}}) == 1);
}

TEST_CASE("det_exact agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto a = random_matrix(rng, n, n, -4, 4);
        CHECK(det_exact(from_oracle(a)) == oracle::laplace_det(a));
    }
}

TEST_CASE("determinant transpose invariance and row-swap sign") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 6;
        ExactMatrix a = from_oracle(random_matrix(rng, n, n, -9, 9));
        const BigInt d = det_exact(a);
        CHECK(det_exact(a.transpose()) == d);
        a.swap_rows(0, n - 1);
        CHECK(det_exact(a) == -d);
    }
}

TEST_CASE("rank invariants on random integer matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 1 + (trial / 7) % 7;
        // Small entry range so that rank deficiency actually occurs.
        const ExactMatrix a = from_oracle(random_matrix(rng, rows, cols, -1, 1));
        const std::size_t r = rank_exact(a);
        CHECK(r <= std::min(rows, cols));
        CHECK(rank_exact(a.transpose()) == r);
        CHECK(rank_exact(a * a.transpose()) <= r);
        if (rows == cols) CHECK((det_exact(a) != 0) == (r == rows));
    }
}

TEST_CASE("is_positive_definite_structured examples") {
    CHECK(is_positive_definite_structured({0, 4, 5}));
    // Minors 1, 0, -4.
    CHECK_FALSE(is_positive_definite_structured({-1, 2, 3}));
    CHECK(is_positive_definite_structured({2, 6, 4}));
    CHECK(is_positive_definite_structured({-5, 7, 1}));  // single minor 2
    CHECK_FALSE(is_positive_definite_structured({0, 0, 1}));
}

TEST_CASE("structured definiteness matches the spectrum gamma (m-1 times), gamma + m theta") {
    for (int theta = -6; theta <= 6; ++theta)
        for (int gamma = -6; gamma <= 6; ++gamma)
            for (std::size_t m = 2; m <= 12; ++m) {
                const bool spectral = gamma > 0 && gamma + static_cast<long long>(m) * theta > 0;
                CHECK(is_positive_definite_structured({theta, gamma, m}) == spectral);
            }
}

TEST_CASE("ExactMatrix construction errors") {
    CHECK_THROWS_AS(ExactMatrix(0, 3), InvalidInput);
    CHECK_THROWS_AS(ExactMatrix(2, 2, std::vector<BigInt>(3)), InvalidInput);
    CHECK_THROWS_AS((ExactMatrix{{1, 2}, {3}}), InvalidInput);
    CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 3), InvalidInput);
}

TEST_CASE("big determinants stay exact") {
    // det(2^40 I_5) = 2^200.
    const BigInt expected = BigInt(1) << 200;
    CHECK(structured_det({0, std::int64_t{1} << 40, 5}) == expected);
    CHECK(det_exact(StructuredMatrixSpec{0, std::int64_t{1} << 40, 5}.materialize()) == expected);
}
