#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gcop/representations.hpp"

using namespace gcop;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// commutator residual away from the cutoff boundary row/column
double boundary_free_residual(const ComplexMatrix& got, const ComplexMatrix& want) {
    const int d = static_cast<int>(got.rows());
    double r = 0.0;
    for (int i = 0; i + 1 < d; ++i)
        for (int j = 0; j + 1 < d; ++j) r = std::max(r, std::abs(got(i, j) - want(i, j)));
    return r;
}

} // namespace

TEST_CASE("AlgebraSpec validation") {
    CHECK_NOTHROW(AlgebraSpec::heisenberg_weyl().validate());
    CHECK_NOTHROW(AlgebraSpec::su11(0.25).validate());
    CHECK_NOTHROW(AlgebraSpec::su2(0.5).validate());
    CHECK_NOTHROW(AlgebraSpec::su2(3.0).validate());
    CHECK_THROWS_AS(AlgebraSpec::su11(0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSpec::su11(-1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSpec::su2(0.3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSpec::su2(0.0).validate(), std::invalid_argument);
    CHECK(AlgebraSpec::su2(1.5).two_j() == 3);
    CHECK(AlgebraSpec::su2(1.5).su2_dim() == 4);
}

TEST_CASE("su(2) J=1/2 matrices") {
    const LadderOperators ops = ladder_matrices(AlgebraSpec::su2(0.5), 2);
    CHECK(ops.raise(1, 0) == Complex(1.0, 0.0));
    CHECK(ops.raise(0, 0) == Complex(0.0, 0.0));
    CHECK(ops.raise(0, 1) == Complex(0.0, 0.0));
    CHECK(ops.raise(1, 1) == Complex(0.0, 0.0));
    CHECK(ops.diag(0, 0) == Complex(-0.5, 0.0));
    CHECK(ops.diag(1, 1) == Complex(0.5, 0.0));
}

TEST_CASE("Heisenberg-Weyl raising coefficients") {
    const LadderOperators ops = ladder_matrices(AlgebraSpec::heisenberg_weyl(), 3);
    CHECK(ops.raise(1, 0).real() == doctest::Approx(std::sqrt(1.0)));
    CHECK(ops.raise(2, 1).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(ops.diag(2, 2) == Complex(2.0, 0.0));
}

TEST_CASE("su(1,1) K=1/4 raising coefficient") {
    const LadderOperators ops = ladder_matrices(AlgebraSpec::su11(0.25), 2);
    CHECK(ops.raise(1, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("su(2) dimension must be 2J+1") {
    CHECK_THROWS_AS(ladder_matrices(AlgebraSpec::su2(0.5), 3), std::invalid_argument);
    CHECK_THROWS_AS(ladder_matrices(AlgebraSpec::heisenberg_weyl(), 1),
                    std::invalid_argument);
}

TEST_CASE("adjoint pairing and non-negative ladder entries") {
    const AlgebraSpec specs[] = {AlgebraSpec::heisenberg_weyl(), AlgebraSpec::su11(0.75),
                                 AlgebraSpec::su2(2.5)};
    for (const AlgebraSpec& spec : specs) {
        const int dim = spec.kind == Algebra::SU2 ? spec.su2_dim() : 16;
        const LadderOperators ops = ladder_matrices(spec, dim);
        CHECK(max_abs(ops.raise - ops.lower.adjoint()) == 0.0); // constructed, exact
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                CHECK(ops.lower(i, j).imag() == 0.0);
                CHECK(ops.lower(i, j).real() >= 0.0);
            }
        }
    }
}

TEST_CASE("commutators away from the cutoff boundary") {
    const double tol = 1e-12;

    const struct {
        AlgebraSpec spec;
        double pm_sign; // [raise, lower] = sign * 2 * diag
    } cases[] = {
        {AlgebraSpec::heisenberg_weyl(), 0.0}, // [a+, a] = -1, checked separately
        {AlgebraSpec::su11(0.25), -1.0},
        {AlgebraSpec::su11(2.5), -1.0},
    };

    for (const auto& c : cases) {
        const int dim = 24;
        const LadderOperators ops = ladder_matrices(c.spec, dim);
        const ComplexMatrix dr = ops.diag * ops.raise - ops.raise * ops.diag;
        const ComplexMatrix dl = ops.diag * ops.lower - ops.lower * ops.diag;
        CHECK(boundary_free_residual(dr, ops.raise) <= tol);
        CHECK(boundary_free_residual(dl, -ops.lower) <= tol);
        const ComplexMatrix rl = ops.raise * ops.lower - ops.lower * ops.raise;
        if (c.pm_sign != 0.0) {
            CHECK(boundary_free_residual(rl, c.pm_sign * 2.0 * ops.diag) <= tol);
        } else {
            CHECK(boundary_free_residual(rl, -ComplexMatrix::Identity(dim, dim)) <= tol);
        }
    }

    // su(2) is finite dimensional: exact everywhere including the boundary
    const AlgebraSpec su2 = AlgebraSpec::su2(2.0);
    const LadderOperators ops = ladder_matrices(su2, su2.su2_dim());
    CHECK(max_abs(ops.diag * ops.raise - ops.raise * ops.diag - ops.raise) <= tol);
    CHECK(max_abs(ops.diag * ops.lower - ops.lower * ops.diag + ops.lower) <= tol);
    CHECK(max_abs(ops.raise * ops.lower - ops.lower * ops.raise - 2.0 * ops.diag) <= tol);
}

TEST_CASE("generator examples and anti-Hermiticity") {
    {
        const ComplexMatrix g =
            generator(AlgebraSpec::heisenberg_weyl(), 2, Complex(1.0, 0.0));
        CHECK(g(0, 0) == Complex(0.0, 0.0));
        CHECK(g(0, 1) == Complex(-1.0, 0.0));
        CHECK(g(1, 0) == Complex(1.0, 0.0));
        CHECK(g(1, 1) == Complex(0.0, 0.0));
    }
    {
        const ComplexMatrix g = generator(AlgebraSpec::su2(0.5), 2, Complex(0.0, 1.0));
        CHECK(g(0, 1) == Complex(0.0, 1.0));
        CHECK(g(1, 0) == Complex(0.0, 1.0));
    }
    {
        const ComplexMatrix g = generator(AlgebraSpec::su11(1.0), 8, Complex{});
        CHECK(max_abs(g) == 0.0);
    }
    for (double t : {0.0, 0.7}) {
        const ComplexMatrix g =
            generator(AlgebraSpec::su11(0.75), 32, Complex(0.4, -1.1), t);
        CHECK(max_abs(g + g.adjoint()) == 0.0); // exact by construction
    }
}
