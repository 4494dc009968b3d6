#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cstarmod/errors.hpp"

namespace cstarmod {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Zero-dimensional shapes (0xn, mx0, 0x0)
// are valid and behave as the corresponding empty linear maps.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    // Nested initializer list, e.g. CMatrix::from_rows({{1.0, 0.0}, {0.0, 1.0}}).
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    bool same_shape(const CMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(const Complex& scalar);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const Complex& scalar, CMatrix a);
CMatrix operator*(CMatrix a, const Complex& scalar);
bool operator==(const CMatrix& a, const CMatrix& b);

// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);

double frobenius_norm(const CMatrix& a);
double max_abs(const CMatrix& a);
bool is_finite(const CMatrix& a);

// max |a_ij - conj(a_ji)| over all entries; 0 for the empty matrix.
double hermitian_defect(const CMatrix& a);

// Places b as a sub-block of a at (row, col). Caller guarantees it fits.
void set_block(CMatrix& a, std::size_t row, std::size_t col, const CMatrix& b);
CMatrix get_block(const CMatrix& a, std::size_t row, std::size_t col,
                  std::size_t rows, std::size_t cols);

// [a; b] stacked vertically. Column counts must agree.
CMatrix vstack(const CMatrix& a, const CMatrix& b);

// [a | b] side by side. Row counts must agree.
CMatrix hstack(const CMatrix& a, const CMatrix& b);

} // namespace cstarmod
