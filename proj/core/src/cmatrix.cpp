#include "cstarmod/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace cstarmod {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("CMatrix: entry count does not match rows*cols");
    }
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    CMatrix out(m, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw DimensionMismatch("CMatrix::from_rows: ragged rows");
        }
        std::size_t j = 0;
        for (const auto& v : row) {
            out(i, j++) = v;
        }
        ++i;
    }
    return out;
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(1.0, 0.0);
    }
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (!same_shape(other)) {
        throw DimensionMismatch("CMatrix: shape mismatch in addition");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (!same_shape(other)) {
        throw DimensionMismatch("CMatrix: shape mismatch in subtraction");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix& CMatrix::operator*=(const Complex& scalar) {
    for (auto& v : data_) {
        v *= scalar;
    }
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix& b) {
    a -= b;
    return a;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("CMatrix: inner dimensions do not match in product");
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

CMatrix operator*(const Complex& scalar, CMatrix a) {
    a *= scalar;
    return a;
}

CMatrix operator*(CMatrix a, const Complex& scalar) {
    a *= scalar;
    return a;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.same_shape(b) && a.data() == b.data();
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

double frobenius_norm(const CMatrix& a) {
    double sum = 0.0;
    for (const auto& v : a.data()) {
        sum += std::norm(v);
    }
    return std::sqrt(sum);
}

double max_abs(const CMatrix& a) {
    double best = 0.0;
    for (const auto& v : a.data()) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

bool is_finite(const CMatrix& a) {
    for (const auto& v : a.data()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

double hermitian_defect(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("hermitian_defect: matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

void set_block(CMatrix& a, std::size_t row, std::size_t col, const CMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            a(row + i, col + j) = b(i, j);
        }
    }
}

CMatrix get_block(const CMatrix& a, std::size_t row, std::size_t col,
                  std::size_t rows, std::size_t cols) {
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = a(row + i, col + j);
        }
    }
    return out;
}

CMatrix vstack(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionMismatch("vstack: column counts differ");
    }
    CMatrix out(a.rows() + b.rows(), a.cols());
    set_block(out, 0, 0, a);
    set_block(out, a.rows(), 0, b);
    return out;
}

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionMismatch("hstack: row counts differ");
    }
    CMatrix out(a.rows(), a.cols() + b.cols());
    set_block(out, 0, 0, a);
    set_block(out, 0, a.cols(), b);
    return out;
}

} // namespace cstarmod
