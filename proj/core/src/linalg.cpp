#include "cstarmod/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cstarmod {

namespace {

constexpr int kMaxSweeps = 100;
// Relative floor below which a Gram-derived singular value carries no
// information (sqrt of the eigensolver's convergence threshold, with margin).
constexpr double kSigmaSnapRel = 1e-6;

double off_diagonal_norm(const CMatrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) sum += std::norm(m(i, j));
        }
    }
    return std::sqrt(sum);
}

// One two-sided rotation on rows/columns (p, q) of the Hermitian working
// copy m, accumulated into v. Zeroes m(p,q) exactly.
void jacobi_rotate(CMatrix& m, CMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = m.rows();
    const Complex beta = m(p, q);
    const double r = std::abs(beta);
    if (r == 0.0) return;
    const Complex phase = beta / r; // e^{i phi}

    // Diagonalize the phase-reduced real 2x2 [[alpha, r], [r, gamma]].
    const double alpha = m(p, p).real();
    const double gamma = m(q, q).real();
    const double tau = (gamma - alpha) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Unitary on coordinates (p,q): [[c, s], [-s*conj(phase), c*conj(phase)]].
    const Complex u_qp = -s * std::conj(phase);
    const Complex u_qq = c * std::conj(phase);

    // m <- U^* m U
    for (std::size_t k = 0; k < n; ++k) {
        const Complex mkp = m(k, p);
        const Complex mkq = m(k, q);
        m(k, p) = c * mkp + u_qp * mkq;
        m(k, q) = s * mkp + u_qq * mkq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex mpk = m(p, k);
        const Complex mqk = m(q, k);
        m(p, k) = c * mpk + std::conj(u_qp) * mqk;
        m(q, k) = s * mpk + std::conj(u_qq) * mqk;
    }
    m(p, q) = Complex(0.0, 0.0);
    m(q, p) = Complex(0.0, 0.0);
    m(p, p) = Complex(m(p, p).real(), 0.0);
    m(q, q) = Complex(m(q, q).real(), 0.0);

    // v <- v U
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp + u_qp * vkq;
        v(k, q) = s * vkp + u_qq * vkq;
    }
}

// Appends orthonormal columns to u (written starting at column `have`) until
// it has `want` columns, drawing candidate directions from the standard basis.
void complete_orthonormal_columns(CMatrix& u, std::size_t have, std::size_t want) {
    const std::size_t m = u.rows();
    std::size_t next = have;
    for (std::size_t seed = 0; seed < m && next < want; ++seed) {
        std::vector<Complex> cand(m, Complex(0.0, 0.0));
        cand[seed] = Complex(1.0, 0.0);
        // Two Gram-Schmidt passes keep the result orthonormal to machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < next; ++j) {
                Complex proj(0.0, 0.0);
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(u(i, j)) * cand[i];
                for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * u(i, j);
            }
        }
        double norm2 = 0.0;
        for (const auto& val : cand) norm2 += std::norm(val);
        const double norm = std::sqrt(norm2);
        if (norm > 0.1) {
            for (std::size_t i = 0; i < m; ++i) u(i, next) = cand[i] / norm;
            ++next;
        }
    }
}

} // namespace

EigResult hermitian_eig(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("hermitian_eig: matrix is not square");
    }
    if (tol < 0.0) tol = 1e-9 * (1.0 + max_abs(a));
    if (hermitian_defect(a) > tol) {
        throw NotHermitian("hermitian_eig: Hermitian defect exceeds tolerance");
    }

    const std::size_t n = a.rows();
    // Exact symmetrization so the iteration sees a true Hermitian matrix.
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    CMatrix v = CMatrix::identity(n);

    const double stop = 1e-14 * frobenius_norm(m);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(m) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(m, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return m(i, i).real() > m(j, j).real();
    });

    EigResult out;
    out.eigenvalues.resize(n);
    out.u = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = m(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.u(i, k) = v(i, order[k]);
        }
    }
    return out;
}

SvdResult svd(const CMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n) {
        SvdResult t = svd(adjoint(a));
        return SvdResult{std::move(t.v), std::move(t.sigma), std::move(t.u)};
    }

    // m >= n: eigendecompose the small Gram matrix a^* a.
    const CMatrix gram = adjoint(a) * a;
    EigResult eig = hermitian_eig(gram, -1.0);

    SvdResult out;
    out.sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.sigma[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    }
    out.v = std::move(eig.u);

    // The Gram route computes sigma as the square root of an eigenvalue whose
    // absolute error is around the sweep threshold, so anything below
    // ~sqrt(threshold)·sigma_max is indistinguishable from an exact zero.
    // Snap those, or downstream pseudoinverses amplify pure noise directions
    // by 1/sigma.
    if (!out.sigma.empty() && out.sigma[0] > 0.0) {
        const double snap = kSigmaSnapRel * out.sigma[0];
        for (double& s : out.sigma)
            if (s <= snap) s = 0.0;
    }

    const std::size_t r = numerical_rank(out.sigma, m, n);
    out.u = CMatrix(m, n);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            Complex acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * out.v(j, k);
            out.u(i, k) = acc / out.sigma[k];
        }
    }
    // Columns for zero singular directions: any orthonormal completion works.
    complete_orthonormal_columns(out.u, r, n);
    return out;
}

CMatrix mat_pinv(const CMatrix& a, double rank_tol) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SvdResult s = svd(a);
    const double sigma_max = s.sigma.empty() ? 0.0 : s.sigma[0];
    const double rel_cut = rank_tol > 0.0
        ? rank_tol
        : static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon();
    const double cut = rel_cut * sigma_max;

    // a^+ = v diag(1/sigma_i on the support) u^*
    CMatrix out(n, m);
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
        if (!(s.sigma[k] > cut)) continue;
        const double inv = 1.0 / s.sigma[k];
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = s.v(i, k) * inv;
            for (std::size_t j = 0; j < m; ++j) {
                out(i, j) += vik * std::conj(s.u(j, k));
            }
        }
    }
    return out;
}

CMatrix psd_sqrt(const CMatrix& a, double tol) {
    if (tol < 0.0) tol = 1e-9 * (1.0 + max_abs(a));
    EigResult eig = hermitian_eig(a, tol);
    const std::size_t n = a.rows();
    for (double lambda : eig.eigenvalues) {
        if (lambda < -tol) {
            throw NotPSD("psd_sqrt: eigenvalue below -tol");
        }
    }
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex uik = eig.u(i, k) * root;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += uik * std::conj(eig.u(j, k));
            }
        }
    }
    // Symmetrize away rounding in the congruence products.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex sym = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = sym;
            out(j, i) = std::conj(sym);
        }
        out(i, i) = Complex(out(i, i).real(), 0.0);
    }
    return out;
}

std::size_t numerical_rank(const std::vector<double>& sigma, std::size_t m, std::size_t n) {
    if (sigma.empty() || sigma[0] == 0.0) return 0;
    const double cut = static_cast<double>(std::max(m, n)) *
                       std::numeric_limits<double>::epsilon() * sigma[0];
    std::size_t r = 0;
    for (double s : sigma) {
        if (s > cut) ++r;
    }
    return r;
}

double op_norm(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    SvdResult s = svd(a);
    return s.sigma.empty() ? 0.0 : s.sigma[0];
}

} // namespace cstarmod
