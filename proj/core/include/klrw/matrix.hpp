#pragma once

#include "klrw/rational.hpp"

#include <optional>
#include <vector>

namespace klrw {

// Dense exact-rational matrix.  Row reduction, kernels and inverses are all
// exact; rank decisions never see a rounding error.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    Matrix transposed() const;

    // Reduced row echelon form (in place copy), returns pivot columns.
    std::pair<Matrix, std::vector<int>> rref() const;
    int rank() const;
    std::optional<Matrix> inverse() const;

    // Columns span the kernel {x : Ax = 0}.
    Matrix kernel_basis() const;
    // Columns span the column space.
    Matrix image_basis() const;

    // Horizontal concatenation [A | B].
    Matrix augmented(const Matrix& o) const;
    Matrix column(int c) const;
    Matrix columns(const std::vector<int>& idx) const;

    // True when v (a column) lies in the column span.
    bool in_column_span(const Matrix& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// dim span(columns of A).
int column_rank(const Matrix& a);

// Basis completion: returns indices of standard basis vectors extending the
// column span of A to the whole space.
std::vector<int> complete_to_basis(const Matrix& a);

} // namespace klrw
