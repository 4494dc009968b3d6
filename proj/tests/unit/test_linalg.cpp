#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cstarmod/linalg.hpp"
#include "cstarmod/random_gen.hpp"
#include "../support/oracles.hpp"

using namespace cstarmod;

namespace {

double offdiag_abs(const CMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

double unitary_defect(const CMatrix& u) {
    const CMatrix g = adjoint(u) * u;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.cols(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? Complex(1, 0) : Complex(0, 0))));
    return worst;
}

CMatrix random_hermitian(Rng& rng, std::size_t n) {
    const CMatrix a = random_matrix(rng, n, n);
    CMatrix h = a + adjoint(a);
    h *= Complex(0.5, 0.0);
    return h;
}

} // namespace

TEST_SUITE("hermitian eigensolver") {
    TEST_CASE("identity has unit eigenvalues") {
        const EigResult r = hermitian_eig(CMatrix::identity(2));
        CHECK(r.eigenvalues == std::vector<double>{1.0, 1.0});
        CHECK(r.u == CMatrix::identity(2));
    }

    TEST_CASE("diagonal matrices are returned sorted descending") {
        const CMatrix a = CMatrix::from_rows({{Complex(1, 0), Complex(0, 0)},
                                              {Complex(0, 0), Complex(3, 0)}});
        const EigResult r = hermitian_eig(a);
        CHECK(r.eigenvalues == std::vector<double>{3.0, 1.0});
        // Eigenvector columns follow the sort.
        CHECK((r.u(0, 0) == Complex(0, 0)));
        CHECK((r.u(1, 0) == Complex(1, 0)));
    }

    TEST_CASE("symmetric exchange matrix splits into +1/-1") {
        const CMatrix a = CMatrix::from_rows({{Complex(0, 0), Complex(1, 0)},
                                              {Complex(1, 0), Complex(0, 0)}});
        const EigResult r = hermitian_eig(a);
        REQUIRE(r.eigenvalues.size() == 2);
        CHECK(r.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(r.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
    }

    TEST_CASE("random Hermitian matrices reconstruct and diagonalize") {
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + rng.index(7);
            const CMatrix a = random_hermitian(rng, n);
            const EigResult r = hermitian_eig(a);
            CHECK(unitary_defect(r.u) <= 1e-12);
            CMatrix lambda(n, n);
            for (std::size_t i = 0; i < n; ++i) lambda(i, i) = Complex(r.eigenvalues[i], 0.0);
            const CMatrix recon = r.u * lambda * adjoint(r.u);
            CHECK(max_abs(recon - a) <= 1e-12 * (1.0 + max_abs(a)));
            const CMatrix diag = adjoint(r.u) * a * r.u;
            CHECK(offdiag_abs(diag) <= 1e-12 * (1.0 + max_abs(a)));
        }
    }

    TEST_CASE("eigenvalues are invariant under unitary conjugation") {
        Rng rng(12);
        const CMatrix a = random_hermitian(rng, 5);
        const CMatrix u = svd(random_matrix(rng, 5, 5)).u; // unitary factor
        const EigResult ra = hermitian_eig(a);
        const EigResult rb = hermitian_eig(u * a * adjoint(u));
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(ra.eigenvalues[i] == doctest::Approx(rb.eigenvalues[i]).epsilon(1e-9));
        }
    }

    TEST_CASE("rejects non-Hermitian and non-square input") {
        CHECK_THROWS_AS(hermitian_eig(CMatrix(2, 3)), DimensionMismatch);
        const CMatrix bad = CMatrix::from_rows({{Complex(0, 0), Complex(1, 0)},
                                                {Complex(2, 0), Complex(0, 0)}});
        CHECK_THROWS_AS(hermitian_eig(bad), NotHermitian);
        // A generous explicit tolerance admits the same matrix.
        CHECK_NOTHROW(hermitian_eig(bad, 2.0));
    }

    TEST_CASE("empty matrix yields empty decomposition") {
        const EigResult r = hermitian_eig(CMatrix(0, 0));
        CHECK(r.eigenvalues.empty());
        CHECK(r.u.rows() == 0);
    }
}

TEST_SUITE("svd") {
    TEST_CASE("identity") {
        const SvdResult s = svd(CMatrix::identity(2));
        CHECK(s.sigma == std::vector<double>{1.0, 1.0});
    }

    TEST_CASE("zero rectangular matrix") {
        const SvdResult s = svd(CMatrix(2, 3));
        CHECK(s.sigma == std::vector<double>{0.0, 0.0});
        CHECK(s.u.rows() == 2);
        CHECK(s.v.rows() == 3);
        // Completion still delivers orthonormal columns.
        CHECK(unitary_defect(s.u) <= 1e-12);
        CHECK(unitary_defect(s.v) <= 1e-12);
    }

    TEST_CASE("random matrices reconstruct with orthonormal factors") {
        Rng rng(21);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t m = 1 + rng.index(8);
            const std::size_t n = 1 + rng.index(8);
            const CMatrix a = random_matrix(rng, m, n);
            const SvdResult s = svd(a);
            REQUIRE(s.sigma.size() == std::min(m, n));
            CHECK(std::is_sorted(s.sigma.rbegin(), s.sigma.rend()));
            CHECK(unitary_defect(s.u) <= 1e-12);
            CHECK(unitary_defect(s.v) <= 1e-12);
            CMatrix usv(m, n);
            for (std::size_t k = 0; k < s.sigma.size(); ++k) {
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        usv(i, j) += s.u(i, k) * Complex(s.sigma[k], 0.0) * std::conj(s.v(j, k));
            }
            CHECK(max_abs(usv - a) <= 1e-10 * (1.0 + max_abs(a)));
        }
    }

    TEST_CASE("largest singular value matches power iteration") {
        Rng rng(22);
        for (int trial = 0; trial < 10; ++trial) {
            const CMatrix a = random_matrix(rng, 4, 6);
            const double direct = op_norm(a);
            const double oracle = oracles::power_norm(a);
            CHECK(direct == doctest::Approx(oracle).epsilon(1e-8));
        }
    }

    TEST_CASE("sigma agrees with the Gram spectrum on full-rank input") {
        Rng rng(23);
        const CMatrix a = random_matrix(rng, 5, 3);
        const SvdResult s = svd(a);
        const EigResult g = hermitian_eig(adjoint(a) * a);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(s.sigma[i] == doctest::Approx(std::sqrt(std::max(g.eigenvalues[i], 0.0)))
                                    .epsilon(1e-9));
        }
    }

    TEST_CASE("true rank deficiency produces exact zero sigma") {
        Rng rng(24);
        // Rank-1 outer product embedded in 4x4.
        const CMatrix col = random_matrix(rng, 4, 1);
        const CMatrix row = random_matrix(rng, 1, 4);
        const CMatrix a = col * row;
        const SvdResult s = svd(a);
        CHECK(s.sigma[0] > 0.0);
        for (std::size_t k = 1; k < 4; ++k) CHECK(s.sigma[k] == 0.0);
        CHECK(unitary_defect(s.u) <= 1e-12);
        CHECK(numerical_rank(s.sigma, 4, 4) == 1);
    }
}

TEST_SUITE("pseudoinverse") {
    TEST_CASE("identity and zero") {
        CHECK(mat_pinv(CMatrix::identity(2)) == CMatrix::identity(2));
        const CMatrix z = mat_pinv(CMatrix(2, 3));
        CHECK(z.rows() == 3);
        CHECK(z.cols() == 2);
        CHECK(max_abs(z) == 0.0);
    }

    TEST_CASE("diagonal case forced by the Penrose equations") {
        const CMatrix a = CMatrix::from_rows({{Complex(2, 0), Complex(0, 0)},
                                              {Complex(0, 0), Complex(0, 0)}});
        const CMatrix p = mat_pinv(a);
        CHECK((p(0, 0) == Complex(0.5, 0.0)));
        CHECK((p(0, 1) == Complex(0.0, 0.0)));
        CHECK((p(1, 0) == Complex(0.0, 0.0)));
        CHECK((p(1, 1) == Complex(0.0, 0.0)));
    }

    TEST_CASE("Penrose identities hold for random shapes up to 8x8") {
        Rng rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t m = 1 + rng.index(8);
            const std::size_t n = 1 + rng.index(8);
            const CMatrix a = random_matrix(rng, m, n);
            const CMatrix p = mat_pinv(a);
            const double budget = 1e-10 * (1.0 + max_abs(a));
            CHECK(max_abs(a * p * a - a) <= budget);
            CHECK(max_abs(p * a * p - p) <= budget);
            CHECK(hermitian_defect(a * p) <= budget);
            CHECK(hermitian_defect(p * a) <= budget);
        }
    }

    TEST_CASE("involution: pinv of pinv returns the original") {
        Rng rng(32);
        const CMatrix a = random_matrix(rng, 4, 6);
        CHECK(max_abs(mat_pinv(mat_pinv(a)) - a) <= 1e-8 * (1.0 + max_abs(a)));
    }

    TEST_CASE("agrees with the regularized-inverse oracle on well-separated input") {
        Rng rng(33);
        int used = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const CMatrix a = random_matrix(rng, 5, 3);
            const SvdResult s = svd(a);
            if (s.sigma.back() < 0.1) continue; // oracle guard
            ++used;
            const CMatrix direct = mat_pinv(a);
            const CMatrix reg = oracles::regularized_pinv(a);
            CHECK(max_abs(direct - reg) <= 1e-4);
        }
        CHECK(used > 10); // the guard must not have eaten the test
    }

    TEST_CASE("explicit rank tolerance truncates small singular values") {
        const CMatrix a = CMatrix::from_rows({{Complex(1, 0), Complex(0, 0)},
                                              {Complex(0, 0), Complex(1e-3, 0)}});
        const CMatrix strict = mat_pinv(a);
        CHECK(strict(1, 1).real() == doctest::Approx(1e3).epsilon(1e-12));
        CHECK(strict(1, 1).imag() == 0.0);
        const CMatrix truncated = mat_pinv(a, 1e-2);
        CHECK((truncated(1, 1) == Complex(0.0, 0.0)));
    }
}

TEST_SUITE("psd square root") {
    TEST_CASE("identity and diagonal") {
        CHECK(psd_sqrt(CMatrix::identity(2)) == CMatrix::identity(2));
        const CMatrix a = CMatrix::from_rows({{Complex(4, 0), Complex(0, 0)},
                                              {Complex(0, 0), Complex(9, 0)}});
        const CMatrix b = psd_sqrt(a);
        CHECK((b(0, 0) == Complex(2, 0)));
        CHECK((b(1, 1) == Complex(3, 0)));
    }

    TEST_CASE("squares back to random PSD input") {
        Rng rng(41);
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = 1 + rng.index(6);
            const CMatrix c = random_matrix(rng, n, n);
            const CMatrix a = adjoint(c) * c;
            const CMatrix b = psd_sqrt(a);
            CHECK(hermitian_defect(b) == 0.0); // symmetrized exactly
            CHECK(max_abs(b * b - a) <= 1e-9 * (1.0 + max_abs(a)));
        }
    }

    TEST_CASE("rejects genuinely indefinite input") {
        const CMatrix a = CMatrix::from_rows({{Complex(-1, 0)}});
        CHECK_THROWS_AS(psd_sqrt(a), NotPSD);
        // Slightly negative eigenvalues inside the tolerance are clamped.
        const CMatrix b = CMatrix::from_rows({{Complex(-1e-12, 0)}});
        CHECK((psd_sqrt(b)(0, 0) == Complex(0.0, 0.0)));
    }
}

TEST_SUITE("numerical rank and operator norm") {
    TEST_CASE("counts strictly above the relative threshold") {
        CHECK(numerical_rank({5.0, 2.0, 0.0}, 3, 3) == 2);
        CHECK(numerical_rank({0.0, 0.0}, 2, 2) == 0);
        CHECK(numerical_rank({1.0, 1e-18}, 2, 2) == 1);
        CHECK(numerical_rank({}, 0, 0) == 0);
    }

    TEST_CASE("operator norm of simple matrices") {
        CHECK(op_norm(CMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(op_norm(CMatrix(0, 2)) == 0.0);
        const CMatrix a = CMatrix::from_rows({{Complex(0, 0), Complex(2, 0)},
                                              {Complex(0, 0), Complex(0, 0)}});
        CHECK(op_norm(a) == doctest::Approx(2.0).epsilon(1e-14));
    }
}
