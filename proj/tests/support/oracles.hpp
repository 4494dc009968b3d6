#pragma once

// Independent reference computations for cross-checking the library: these
// deliberately avoid svd/mat_pinv and go through Gaussian elimination and
// power iteration instead, so an agreement is evidence rather than an echo.

#include "cstarmod/cmatrix.hpp"

namespace cstarmod::oracles {

// Solve a·x = b by Gaussian elimination with partial pivoting (a square,
// well conditioned by construction at the call sites).
CMatrix solve(const CMatrix& a, const CMatrix& b);

// Regularized pseudoinverse (a*a + delta·I)^{-1}·a*. For delta → 0 this
// converges to the Moore-Penrose inverse; at delta = 1e-10 it agrees with it
// to ~1e-4 on matrices whose nonzero singular values are ≥ 0.1.
CMatrix regularized_pinv(const CMatrix& a, double delta = 1e-10);

// Largest singular value by power iteration on a*a.
double power_norm(const CMatrix& a, int iterations = 200);

// Normal-equations projector w·(w*w + delta·I)^{-1}·w* onto the column space
// of w (full column rank at the call sites).
CMatrix normal_projector(const CMatrix& w, double delta = 1e-12);

} // namespace cstarmod::oracles
