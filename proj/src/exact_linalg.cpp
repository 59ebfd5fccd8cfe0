#include "equidist/exact_linalg.hpp"

#include <string>
#include <utility>

#include "equidist/error.hpp"

namespace equidist {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : ExactMatrix(rows, cols, std::vector<BigInt>(rows * cols)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw InvalidInput("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) {
        throw InvalidInput("matrix expects " + std::to_string(rows_ * cols_) + " entries, got " +
                           std::to_string(entries_.size()));
    }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw InvalidInput("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
        for (long long v : row) entries_.emplace_back(v);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t m) {
    ExactMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) a(i, i) = 1;
    return a;
}

ExactMatrix ExactMatrix::all_ones(std::size_t m) {
    return ExactMatrix(m, m, std::vector<BigInt>(m * m, BigInt(1)));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw InvalidInput("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                           std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    ExactMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
        }
    }
    return p;
}

ExactMatrix StructuredMatrixSpec::materialize() const {
    if (m == 0) throw InvalidInput("structured matrix order must be positive");
    ExactMatrix a(m, m, std::vector<BigInt>(m * m, BigInt(theta)));
    for (std::size_t i = 0; i < m; ++i) a(i, i) += gamma;
    return a;
}

BigInt det_exact(const ExactMatrix& a) {
    if (!a.is_square()) {
        throw InvalidInput("determinant of non-square " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           " matrix");
    }
    const std::size_t n = a.rows();
    ExactMatrix w = a;
    BigInt previous_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        // Every entry after this step is a (k+2)-order minor, so the division is exact.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / previous_pivot;
            }
            w(i, k) = 0;
        }
        previous_pivot = w(k, k);
    }
    return sign < 0 ? BigInt(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

std::size_t rank_exact(const ExactMatrix& a) {
    ExactMatrix w = a;
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    std::vector<std::size_t> col_of(cols);
    for (std::size_t c = 0; c < cols; ++c) col_of[c] = c;

    BigInt previous_pivot = 1;
    std::size_t r = 0;
    for (; r < rows && r < cols; ++r) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i) {
            for (std::size_t j = r; j < cols; ++j) {
                if (w(i, col_of[j]) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rows) break;
        w.swap_rows(r, pi);
        std::swap(col_of[r], col_of[pj]);

        const BigInt pivot = w(r, col_of[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt lead = w(i, col_of[r]);
            for (std::size_t j = r + 1; j < cols; ++j) {
                BigInt& e = w(i, col_of[j]);
                e = (e * pivot - lead * w(r, col_of[j])) / previous_pivot;
            }
            w(i, col_of[r]) = 0;
        }
        previous_pivot = pivot;
    }
    return r;
}

BigInt structured_det(const StructuredMatrixSpec& spec) {
    if (spec.m == 0) throw InvalidInput("structured matrix order must be positive");
    BigInt head = BigInt(spec.gamma) + BigInt(spec.theta) * spec.m;
    return head * boost::multiprecision::pow(BigInt(spec.gamma), static_cast<unsigned>(spec.m - 1));
}

bool is_positive_definite_structured(const StructuredMatrixSpec& spec) {
    if (spec.m == 0) throw InvalidInput("structured matrix order must be positive");
    const int gamma_sign = (spec.gamma > 0) - (spec.gamma < 0);
    for (std::size_t k = 1; k <= spec.m; ++k) {
        const BigInt head = BigInt(spec.gamma) + BigInt(spec.theta) * k;
        int sign = (head > 0) - (head < 0);
        // gamma^(k-1) contributes gamma_sign^(k-1), with 0^0 = 1.
        if (k > 1) sign *= (gamma_sign == 0) ? 0 : ((k - 1) % 2 == 0 ? 1 : gamma_sign);
        if (sign <= 0) return false;
    }
    return true;
}

}  // namespace equidist
