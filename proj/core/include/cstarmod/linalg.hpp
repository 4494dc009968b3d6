#pragma once

#include <cstddef>
#include <vector>

#include "cstarmod/cmatrix.hpp"

namespace cstarmod {

struct EigResult {
    std::vector<double> eigenvalues; // descending; ties keep original column order
    CMatrix u;                       // unitary, a = u * diag(eigenvalues) * u^*
};

struct SvdResult {
    CMatrix u;                 // m x k, orthonormal columns
    std::vector<double> sigma; // k = min(m,n) values, descending, >= 0
    CMatrix v;                 // n x k, orthonormal columns
};

// Eigendecomposition of a Hermitian matrix by cyclic Jacobi with complex
// rotations. `tol` bounds the admissible Hermitian defect of the input;
// a negative value selects 1e-9 * (1 + max_abs(a)).
EigResult hermitian_eig(const CMatrix& a, double tol = -1.0);

SvdResult svd(const CMatrix& a);

// Moore-Penrose pseudoinverse. Singular values sigma_i <= rel_cut * sigma_max
// are treated as zero, where rel_cut is `rank_tol` when positive and
// max(m,n) * machine epsilon otherwise.
CMatrix mat_pinv(const CMatrix& a, double rank_tol = 0.0);

// Hermitian PSD square root; eigenvalues in [-tol, 0) are clamped to zero,
// anything below -tol raises NotPSD. Negative `tol` selects
// 1e-9 * (1 + max_abs(a)).
CMatrix psd_sqrt(const CMatrix& a, double tol = -1.0);

// Count of sigma[i] > max(m,n) * eps * sigma[0]; zero when sigma is empty or
// sigma[0] == 0. Requires sigma descending and nonnegative.
std::size_t numerical_rank(const std::vector<double>& sigma, std::size_t m, std::size_t n);

// Largest singular value (0 for empty shapes).
double op_norm(const CMatrix& a);

} // namespace cstarmod
