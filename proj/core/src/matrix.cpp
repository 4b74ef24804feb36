#include "klrw/matrix.hpp"

#include <stdexcept>

namespace klrw {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    Matrix r = *this;
    for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    Matrix r = *this;
    for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] -= o.data_[i];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::pair<Matrix, std::vector<int>> Matrix::rref() const {
    Matrix m = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        Rational inv = 1 / m.at(row, col);
        for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

int Matrix::rank() const { return static_cast<int>(rref().second.size()); }

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto [red, pivots] = augmented(identity(rows_)).rref();
    if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix inv(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) inv.at(i, j) = red.at(i, cols_ + j);
    return inv;
}

Matrix Matrix::kernel_basis() const {
    auto [red, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            basis.at(pivots[r], static_cast<int>(k)) = -red.at(static_cast<int>(r), fc);
        }
    }
    return basis;
}

Matrix Matrix::image_basis() const {
    auto pivots = transposed().rref().second;
    // pivots of A^T's rref index independent rows of A^T = columns of A
    return columns(pivots);
}

Matrix Matrix::augmented(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::column(int c) const {
    Matrix r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k)
        for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(k)) = at(i, idx[k]);
    return r;
}

bool Matrix::in_column_span(const Matrix& v) const {
    if (v.rows() != rows_) throw std::invalid_argument("shape mismatch");
    return rank() == augmented(v).rank();
}

int column_rank(const Matrix& a) { return a.rank(); }

std::vector<int> complete_to_basis(const Matrix& a) {
    Matrix work = a;
    std::vector<int> chosen;
    int need = a.rows() - a.rank();
    for (int i = 0; i < a.rows() && static_cast<int>(chosen.size()) < need; ++i) {
        Matrix e(a.rows(), 1);
        e.at(i, 0) = 1;
        if (!work.in_column_span(e)) {
            work = work.augmented(e);
            chosen.push_back(i);
        }
    }
    return chosen;
}

} // namespace klrw
