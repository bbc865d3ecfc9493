#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gcop/closed_form.hpp"
#include "gcop/special_functions.hpp"

using namespace gcop;

namespace {

double cdist(Complex a, Complex b) { return std::abs(a - b); }

// spin-1/2 operator, exponentiated by hand: the generator squares to -|z|^2 I
Complex spin_half_exact(int n, int m, Complex z) {
    const double az = std::abs(z);
    if (az == 0.0) return n == m ? 1.0 : 0.0;
    const double c = std::cos(az);
    const double s = std::sin(az);
    if (n == m) return c;
    if (n == 1 && m == 0) return z * s / az;
    return -std::conj(z) * s / az;
}

} // namespace

TEST_CASE("frame examples") {
    {
        const DisplacementFrame f = frame(AlgebraSpec::su11(1.0), Complex{});
        CHECK(f.zeta_or_eta == Complex{});
        CHECK(f.kappa == Complex{});
        CHECK_FALSE(f.eta_pole);
    }
    {
        const DisplacementFrame f = frame(AlgebraSpec::su11(1.0), Complex(1.0, 0.0));
        CHECK(f.kappa.real() == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
        CHECK(f.kappa.imag() == 0.0);
        CHECK(f.zeta_or_eta.real() == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
        CHECK(std::abs(f.zeta_or_eta) < 1.0);
        CHECK(std::abs(f.kappa - std::cosh(1.0) * f.zeta_or_eta) <= 1e-15);
    }
    {
        const DisplacementFrame f = frame(AlgebraSpec::su11(0.25), Complex(-0.7, 1.9));
        CHECK(std::abs(f.zeta_or_eta) < 1.0);
        const double az = std::abs(Complex(-0.7, 1.9));
        CHECK(std::abs(f.kappa - std::cosh(az) * f.zeta_or_eta) <= 1e-14);
        CHECK(std::norm(f.kappa) ==
              doctest::Approx(std::sinh(az) * std::sinh(az)).epsilon(1e-13));
    }
    {
        const double half_pi = std::acos(0.0);
        const DisplacementFrame f = frame(AlgebraSpec::su2(0.5), Complex(half_pi, 0.0));
        CHECK(f.eta_pole);
        CHECK(f.kappa.real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::isnan(f.zeta_or_eta.real()));
    }
    {
        const DisplacementFrame f = frame(AlgebraSpec::su2(1.0), Complex(0.3, 0.4));
        CHECK_FALSE(f.eta_pole);
        CHECK(std::abs(f.kappa - std::cos(0.5) * f.zeta_or_eta) <= 1e-15);
        CHECK(std::norm(f.kappa) == doctest::Approx(std::sin(0.5) * std::sin(0.5)));
    }
    {
        const DisplacementFrame f =
            frame(AlgebraSpec::heisenberg_weyl(), Complex(0.2, -0.7));
        CHECK(f.kappa == Complex(0.2, -0.7));
    }
}

TEST_CASE("u_element golden values") {
    CHECK(u_element(3, 3, Complex{}) == Complex(1.0, 0.0));
    CHECK(u_element(2, 3, Complex{}) == Complex(0.0, 0.0));
    CHECK(cdist(u_element(0, 0, Complex(1.0, 0.0)), std::exp(-0.5)) <= 1e-15);
    CHECK(cdist(u_element(2, 0, Complex(1.0, 0.0)), std::exp(-0.5) / std::sqrt(2.0)) <=
          1e-15);
    // n <= m branch: <0|U|2> = e^{-1/2} (-conj(z))^2 / sqrt(2)
    CHECK(cdist(u_element(0, 2, Complex(0.0, 1.0)), -std::exp(-0.5) / std::sqrt(2.0)) <=
          1e-15);
}

TEST_CASE("u_element diagonal is e^{-|z|^2/2} L_n(|z|^2)") {
    for (int n : {0, 1, 2, 5, 9}) {
        for (const Complex z : {Complex(0.5, 0.0), Complex(0.3, -0.8), Complex(0.0, 1.7)}) {
            const double x = std::norm(z);
            const Complex want = std::exp(-0.5 * x) * laguerre_assoc(n, 0, x);
            CHECK(cdist(u_element(n, n, z), want) <= 1e-13);
        }
    }
}

TEST_CASE("v_element golden values") {
    CHECK(v_element(0.25, 0, 0, Complex{}) == Complex(1.0, 0.0));
    {
        // <K,0|V(1)|K,0> = (1+sinh^2 1)^{-K} = cosh(1)^{-2} for K = 1
        const double want = std::pow(std::cosh(1.0), -2.0);
        CHECK(cdist(v_element(1.0, 0, 0, Complex(1.0, 0.0)), want) <= 1e-14);
    }
    {
        // K=1/4, n=1, m=0, z=0.5; two independent routes:
        // (a) the formula collapses to sqrt(1/(2K)) kappa (2K) (1+|kappa|^2)^{-K-1/2}
        const double kap = std::sinh(0.5);
        const double direct =
            std::sqrt(2.0) * kap * 0.5 * std::pow(1.0 + kap * kap, -0.75);
        // (b) squeezed-vacuum expansion: <2|S(r)|0> = (tanh r / sqrt(2)) / sqrt(cosh r)
        const double squeezed =
            std::tanh(0.5) / std::sqrt(2.0) / std::sqrt(std::cosh(0.5));
        CHECK(direct == doctest::Approx(squeezed).epsilon(1e-14));
        CHECK(cdist(v_element(0.25, 1, 0, Complex(0.5, 0.0)), direct) <= 1e-14);
    }
    CHECK_THROWS_AS(v_element(0.0, 0, 0, Complex(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(v_element(-0.5, 0, 0, Complex(1.0, 0.0)), std::domain_error);
}

TEST_CASE("w_element golden values") {
    CHECK(w_element(3.0, 0, 0, Complex{}) == Complex(1.0, 0.0));
    {
        // J=1/2: compare all four entries against the hand exponential
        for (const Complex z : {Complex(0.7, 0.0), Complex(0.2, -0.4), Complex(0.0, 1.1),
                                Complex(2.0, 0.0), Complex(-1.3, 2.6)}) {
            for (int n = 0; n <= 1; ++n)
                for (int m = 0; m <= 1; ++m)
                    CHECK(cdist(w_element(0.5, n, m, z), spin_half_exact(n, m, z)) <=
                          1e-13);
        }
    }
    {
        // J=1, n=2, m=0: collapses to kappa^2
        const double q = std::acos(0.0) / 2.0; // pi/4
        CHECK(cdist(w_element(1.0, 2, 0, Complex(q, 0.0)), Complex(0.5, 0.0)) <= 1e-14);
    }
    {
        // |z| = pi/2 (|kappa| = 1): still defined through the analytic limit
        const double half_pi = std::acos(0.0);
        CHECK(cdist(w_element(0.5, 1, 0, Complex(half_pi, 0.0)), Complex(1.0, 0.0)) <=
              1e-14);
        CHECK(std::abs(w_element(0.5, 0, 0, Complex(half_pi, 0.0))) <= 1e-14);
    }
    {
        // past the pole the sign of cos|z| matters: <0|W(2)|0> = cos 2 < 0
        CHECK(cdist(w_element(0.5, 0, 0, Complex(2.0, 0.0)), std::cos(2.0)) <= 1e-14);
    }
    CHECK_THROWS_AS(w_element(0.3, 0, 0, Complex{}), std::invalid_argument);
    CHECK_THROWS_AS(w_element(1.0, 3, 0, Complex{}), std::out_of_range);
}

TEST_CASE("element dispatch") {
    ElementQuery q;
    q.algebra = AlgebraSpec::heisenberg_weyl();
    CHECK(element(q) == Complex(1.0, 0.0));

    q.algebra = AlgebraSpec::su2(0.5);
    q.z = Complex(1.0, 0.0);
    CHECK(cdist(element(q), std::cos(1.0)) <= 1e-15);

    q.algebra = AlgebraSpec::su11(1.0);
    q.t = 0.3;
    CHECK_THROWS_AS(element(q), NoClosedFormError);

    q.t = 0.0;
    q.n = -1;
    CHECK_THROWS_AS(element(q), std::out_of_range);
}

TEST_CASE("conjugation symmetry element(n,m,z) == conj(element(m,n,-z))") {
    const Complex zs[] = {Complex(0.8, 0.0), Complex(0.0, -1.2), Complex(0.6, 0.9),
                          Complex(-1.4, 0.3)};
    for (const Complex& z : zs) {
        for (int n = 0; n <= 7; ++n) {
            for (int m = 0; m <= 7; ++m) {
                CHECK(cdist(u_element(n, m, z), std::conj(u_element(m, n, -z))) <= 1e-12);
                CHECK(cdist(v_element(0.75, n, m, z), std::conj(v_element(0.75, m, n, -z)))
                      <= 1e-12);
                if (n <= 4 && m <= 4)
                    CHECK(cdist(w_element(2.0, n, m, z), std::conj(w_element(2.0, m, n, -z)))
                          <= 1e-12);
            }
        }
    }
}

TEST_CASE("column unitarity, small cases") {
    // su(2): exact finite sum
    for (double j : {0.5, 1.5}) {
        const int tj = static_cast<int>(2 * j);
        for (const Complex z : {Complex(0.9, 0.0), Complex(0.4, -1.0)}) {
            for (int m = 0; m <= tj; ++m) {
                double total = 0.0;
                for (int n = 0; n <= tj; ++n) total += std::norm(w_element(j, n, m, z));
                CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
    // HW and su(1,1) with generous tails
    for (const Complex z : {Complex(0.5, 0.0), Complex(0.0, 1.0)}) {
        for (int m = 0; m <= 3; ++m) {
            double hw = 0.0, su11 = 0.0;
            for (int k = 0; k <= m + 80; ++k) {
                hw += std::norm(u_element(k, m, z));
                su11 += std::norm(v_element(0.75, k, m, z));
            }
            CHECK(hw == doctest::Approx(1.0).epsilon(1e-11));
            CHECK(su11 == doctest::Approx(1.0).epsilon(1e-11));
        }
    }
}
