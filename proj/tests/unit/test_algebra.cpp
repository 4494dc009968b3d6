#include <doctest.h>

#include <cmath>

#include "cstarmod/algebra.hpp"
#include "cstarmod/random_gen.hpp"

using namespace cstarmod;

TEST_SUITE("block algebra") {
    TEST_CASE("dims define the algebra; zero-dimensional blocks are rejected") {
        const BlockAlgebra a({1, 2});
        CHECK(a.block_count() == 2);
        CHECK(a.dims() == std::vector<std::size_t>{1, 2});
        CHECK_THROWS_AS(BlockAlgebra({1, 0}), DimensionMismatch);
    }

    TEST_CASE("the empty direct sum is a legal algebra") {
        const BlockAlgebra zero;
        CHECK(zero.block_count() == 0);
        const AlgElem e = AlgElem::identity(zero);
        CHECK(e.block_count() == 0);
        CHECK(alg_max_abs(e) == 0.0);
        CHECK(alg_equal(e + e, e));
        CHECK(alg_positive(e));
    }

    TEST_CASE("element construction validates block shapes") {
        const BlockAlgebra a({1, 2});
        CHECK_NOTHROW(AlgElem(a, {CMatrix(1, 1), CMatrix(2, 2)}));
        CHECK_THROWS_AS(AlgElem(a, {CMatrix(1, 1), CMatrix(3, 3)}), AlgebraMismatch);
        CHECK_THROWS_AS(AlgElem(a, {CMatrix(1, 1)}), AlgebraMismatch);
    }

    TEST_CASE("star is an involutive antihomomorphism") {
        Rng rng(101);
        const BlockAlgebra alg({2, 3});
        const AlgElem a = random_element(rng, alg);
        const AlgElem b = random_element(rng, alg);
        CHECK(alg_equal(star(star(a)), a));
        CHECK(alg_max_abs(star(a * b) - star(b) * star(a)) <= 1e-13);
    }
}

TEST_SUITE("seminorms") {
    TEST_CASE("supports are sorted, deduplicated and validated") {
        const BlockAlgebra a({1, 2, 3});
        const Seminorm p(a, {2, 0, 2});
        CHECK(p.support() == std::vector<std::size_t>{0, 2});
        CHECK(p.contains(0));
        CHECK(!p.contains(1));
        CHECK_THROWS_AS(Seminorm(a, {3}), AlgebraMismatch);
    }

    TEST_CASE("subsumption is support inclusion") {
        const BlockAlgebra a({1, 2, 3});
        const Seminorm full = Seminorm::full(a);
        const Seminorm p(a, {0, 2});
        const Seminorm q(a, {2});
        CHECK(full.subsumes(p));
        CHECK(p.subsumes(q));
        CHECK(!q.subsumes(p));
        CHECK(p.subsumes(p));
    }

    TEST_CASE("value is the largest block operator norm over the support") {
        const BlockAlgebra alg({1, 2});
        AlgElem a = AlgElem::identity(alg);
        a.block(0)(0, 0) = Complex(5, 0);
        const Seminorm full = Seminorm::full(alg);
        CHECK(alg_seminorm(full, a) == doctest::Approx(5.0).epsilon(1e-14));
        CHECK(alg_seminorm(Seminorm(alg, {1}), a) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(alg_seminorm(Seminorm(alg, {}), a) == 0.0);
    }

    TEST_CASE("C*-identity p(a*a) = p(a)^2") {
        Rng rng(102);
        const BlockAlgebra alg({2, 3});
        const Seminorm full = Seminorm::full(alg);
        for (int trial = 0; trial < 10; ++trial) {
            const AlgElem a = random_element(rng, alg);
            const double p = alg_seminorm(full, a);
            CHECK(alg_seminorm(full, star(a) * a) == doctest::Approx(p * p).epsilon(1e-9));
        }
    }
}

TEST_SUITE("positivity") {
    TEST_CASE("identity and squares are positive, negatives are not") {
        Rng rng(103);
        const BlockAlgebra alg({1, 3});
        CHECK(alg_positive(AlgElem::identity(alg)));
        const AlgElem a = random_element(rng, alg);
        CHECK(alg_positive(star(a) * a));
        CHECK(!alg_positive(Complex(-1, 0) * (star(a) * a + AlgElem::identity(alg))));
        CHECK(!alg_positive(a + a)); // generic element is not even Hermitian
    }
}

TEST_SUITE("localization of the algebra") {
    TEST_CASE("localized algebra keeps exactly the support blocks") {
        const BlockAlgebra alg({1, 2, 3});
        const Seminorm p(alg, {0, 2});
        CHECK(localized_algebra(p).dims() == std::vector<std::size_t>{1, 3});
        CHECK(localized_algebra(Seminorm(alg, {})).block_count() == 0);
    }

    TEST_CASE("element localization picks blocks bit-for-bit") {
        Rng rng(104);
        const BlockAlgebra alg({1, 2, 3});
        const AlgElem a = random_element(rng, alg);
        const AlgElem ap = alg_localize(Seminorm(alg, {0, 2}), a);
        CHECK(ap.block_count() == 2);
        CHECK(ap.block(0) == a.block(0));
        CHECK(ap.block(1) == a.block(2));
    }

    TEST_CASE("connecting morphisms compose functorially") {
        Rng rng(105);
        const BlockAlgebra alg({1, 2, 2});
        const AlgElem a = random_element(rng, alg);
        const Seminorm p(alg, {0, 1, 2});
        const Seminorm q(alg, {0, 2});
        const Seminorm r(alg, {2});
        const AlgElem aq = alg_connect(p, q, alg_localize(p, a));
        CHECK(alg_equal(aq, alg_localize(q, a)));
        // Two-step and one-step paths coincide exactly.
        CHECK(alg_equal(alg_connect(q, r, aq), alg_connect(p, r, alg_localize(p, a))));
        // sigma_pp is the identity.
        CHECK(alg_equal(alg_connect(p, p, alg_localize(p, a)), alg_localize(p, a)));
    }

    TEST_CASE("connect requires comparable supports and matching carriers") {
        Rng rng(106);
        const BlockAlgebra alg({1, 2});
        const AlgElem a = random_element(rng, alg);
        const Seminorm p(alg, {0});
        const Seminorm q(alg, {1});
        CHECK_THROWS_AS(alg_connect(p, q, alg_localize(p, a)), NotComparable);
        // The operand must already live over the source quotient.
        CHECK_THROWS_AS(alg_connect(p, p, a), AlgebraMismatch);
    }
}

TEST_SUITE("element pseudoinverse") {
    TEST_CASE("blockwise diagonal example") {
        const BlockAlgebra alg({2});
        AlgElem a(alg);
        a.block(0)(0, 0) = Complex(2, 0);
        const AlgElem b = elem_pinv(a);
        CHECK((b.block(0)(0, 0) == Complex(0.5, 0)));
        CHECK((b.block(0)(1, 1) == Complex(0, 0)));
    }

    TEST_CASE("satisfies the four Penrose identities blockwise") {
        Rng rng(107);
        const BlockAlgebra alg({1, 2, 3});
        for (int trial = 0; trial < 10; ++trial) {
            const AlgElem a = random_element(rng, alg);
            const AlgElem b = elem_pinv(a);
            const double budget = 1e-10 * (1.0 + alg_max_abs(a));
            CHECK(alg_max_abs(a * b * a - a) <= budget);
            CHECK(alg_max_abs(b * a * b - b) <= budget);
            CHECK(alg_max_abs(star(a * b) - a * b) <= budget);
            CHECK(alg_max_abs(star(b * a) - b * a) <= budget);
        }
    }
}
