#include "actionwin/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "actionwin/error.hpp"

namespace actionwin {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows,
                            const std::vector<std::vector<Scalar>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("from_columns: ragged column");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::size_t> Matrix::reduce_rows() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
        }
        Scalar scale = at(row, col).inv();
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= scale;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            Scalar factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) {
                if (!at(row, c).is_zero()) at(r, c) -= factor * at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.reduce_rows().size();
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    Matrix rref = *this;
    auto pivots = rref.reduce_rows();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free] = Scalar::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -rref.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = Scalar::one(field_);
    }
    auto pivots = aug.reduce_rows();
    if (pivots.size() < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_)) {
        throw Error(ErrorCode::DivisionByZero, "matrix is singular");
    }
    Matrix out(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
    }
    return out;
}

bool Matrix::is_upper_triangular() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < r && c < cols_; ++c) {
            if (!at(r, c).is_zero()) return false;
        }
    }
    return true;
}

std::size_t span_rank(const FieldSpec& field, std::size_t dim,
                      const std::vector<std::vector<Scalar>>& vectors) {
    if (vectors.empty() || dim == 0) return 0;
    // Vectors as rows: fewer columns to sweep when dim is small.
    Matrix m(field, vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = vectors[r][c];
    }
    return m.rank();
}

}  // namespace actionwin
