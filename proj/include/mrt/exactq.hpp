#pragma once

// Exact rational and integer linear algebra.
//
// Every routine here is exact (GMP rationals / integers) and pivots
// deterministically: columns are scanned left to right and the first row
// (ascending) holding a nonzero entry becomes the pivot row.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace mrt {

using Rat = mpq_class;
using Int = mpz_class;

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t nrows, std::size_t ncols)
        : nrows_(nrows), ncols_(ncols), data_(nrows * ncols, T(0)) {}

    /// Builds from nested rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Builds from columns of equal length.
    static Matrix from_columns(const std::vector<std::vector<T>>& cols,
                               std::size_t nrows) {
        Matrix m(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != nrows)
                throw std::invalid_argument("Matrix::from_columns: length mismatch");
            for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return nrows_; }
    [[nodiscard]] std::size_t cols() const { return ncols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * ncols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * ncols_ + j];
    }

    [[nodiscard]] std::vector<T> column(std::size_t j) const {
        std::vector<T> c(nrows_);
        for (std::size_t i = 0; i < nrows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    [[nodiscard]] Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix m(nrows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < nrows_; ++i) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(ncols_, nrows_);
        for (std::size_t i = 0; i < nrows_; ++i)
            for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.ncols_ != b.nrows_)
            throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix c(a.nrows_, b.ncols_);
        for (std::size_t i = 0; i < a.nrows_; ++i)
            for (std::size_t k = 0; k < a.ncols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.ncols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.nrows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.ncols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

  private:
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rat>;
using ZMatrix = Matrix<Int>;
using QVector = std::vector<Rat>;

/// Reduced row echelon form with the pivot columns it found.
struct Echelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);
std::size_t rank(const ZMatrix& m);

/// Coefficients c with sum_j c_j * basis[j] == v, or nullopt when v is
/// outside the span.  With a dependent basis the free coefficients are 0.
/// Throws std::invalid_argument on a length mismatch.
std::optional<QVector> in_span(const QVector& v, const std::vector<QVector>& basis);

/// Right-kernel basis, one vector per free column (ascending).  Each vector
/// is scaled so that its first nonzero entry is positive.
std::vector<QVector> kernel_basis(const QMatrix& m);

struct SmithForm {
    std::vector<Int> diagonal;  // d1 | d2 | ... , all positive
    std::size_t rank = 0;
};

SmithForm smith_normal_form(ZMatrix m);

/// Scales each column by the lcm of its denominators.  Ranks and column
/// dependencies are unchanged.
ZMatrix clear_denominators(const QMatrix& m);

QMatrix to_rational(const ZMatrix& m);

}  // namespace mrt
