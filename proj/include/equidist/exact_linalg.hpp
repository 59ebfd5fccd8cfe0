#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace equidist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static ExactMatrix identity(std::size_t m);
    static ExactMatrix all_ones(std::size_t m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<BigInt>& entries() const noexcept { return entries_; }

    ExactMatrix transpose() const;
    void swap_rows(std::size_t a, std::size_t b);

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

/// theta * J_m + gamma * I_m.
struct StructuredMatrixSpec {
    std::int64_t theta = 0;
    std::int64_t gamma = 0;
    std::size_t m = 1;

    ExactMatrix materialize() const;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws InvalidInput for non-square input.
BigInt det_exact(const ExactMatrix& a);

/// Rank over the rationals by fraction-free elimination with full pivoting.
std::size_t rank_exact(const ExactMatrix& a);

/// Closed form (gamma + m*theta) * gamma^(m-1).
BigInt structured_det(const StructuredMatrixSpec& spec);

/// Sylvester's criterion on the closed-form leading minors
/// (gamma + k*theta) * gamma^(k-1), k = 1..m.
bool is_positive_definite_structured(const StructuredMatrixSpec& spec);

}  // namespace equidist
