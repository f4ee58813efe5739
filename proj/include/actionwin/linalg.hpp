#pragma once

#include <cstddef>
#include <vector>

#include "actionwin/field.hpp"

namespace actionwin {

/// Dense row-major matrix over a FieldSpec. Sizes in this library are desk
/// scale (tens of rows), so everything is plain Gaussian elimination.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const FieldSpec& field, std::size_t rows,
                               const std::vector<std::vector<Scalar>>& columns);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> column(std::size_t c) const;

    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;

    std::size_t rank() const;
    /// Basis of the right kernel, one vector per free column of the RREF.
    std::vector<std::vector<Scalar>> nullspace() const;
    /// Throws Error(DivisionByZero) when singular.
    Matrix inverse() const;

    bool is_upper_triangular() const;

private:
    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> reduce_rows();

    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank of the span of the given vectors (each of length `dim`).
std::size_t span_rank(const FieldSpec& field, std::size_t dim,
                      const std::vector<std::vector<Scalar>>& vectors);

}  // namespace actionwin
