#include "gcop/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gcop/special_functions.hpp"

namespace gcop {
namespace {

constexpr double kSingularFTol = 1e-12;

Complex int_power(Complex base, int p) {
    Complex result(1.0, 0.0);
    while (p > 0) {
        if (p & 1) result *= base;
        base *= base;
        p >>= 1;
    }
    return result;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string fmt(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.9g%+.9gi", z.real(), z.imag());
    return buf;
}

ExchangeParams exchange_params(Complex a, Complex b, Complex c, double sign) {
    const Complex eb = std::exp(b);
    const Complex f = std::exp(-b) + sign * a * c * eb;
    if (std::abs(f) <= kSingularFTol)
        throw SingularExchangeError("exchange relation is singular: e^{-b} -/+ a c e^{b} = 0");
    ExchangeParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.x = c * eb / f;
    p.y = -std::log(f); // principal branch
    p.z_out = a * eb / f;
    return p;
}

// 2x2 fundamental triples (Weyl basis). The su(1,1) lowering matrix carries
// the -1 entry; both triples satisfy the same commutation relations as the
// spin reps, which is all the exchange relation uses.
struct Fundamental {
    ComplexMatrix plus, minus, three;
};

Fundamental fundamental_rep(Algebra kind) {
    Fundamental f;
    f.plus = ComplexMatrix::Zero(2, 2);
    f.minus = ComplexMatrix::Zero(2, 2);
    f.three = ComplexMatrix::Zero(2, 2);
    f.plus(0, 1) = 1.0;
    f.minus(1, 0) = kind == Algebra::SU11 ? -1.0 : 1.0;
    f.three(0, 0) = 0.5;
    f.three(1, 1) = -0.5;
    return f;
}

ComplexMatrix exp_nilpotent2(const ComplexMatrix& a) {
    return ComplexMatrix::Identity(2, 2) + a; // a^2 = 0 for the Weyl matrices
}

double normalized_max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

} // namespace

IdentityCheck make_check(std::string name, std::string params, double residual, double tol) {
    IdentityCheck c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.residual = residual;
    c.tol = tol;
    c.passed = residual <= tol;
    return c;
}

ExchangeParams exchange_params_su11(Complex a, Complex b, Complex c) {
    return exchange_params(a, b, c, -1.0);
}

ExchangeParams exchange_params_su2(Complex a, Complex b, Complex c) {
    return exchange_params(a, b, c, +1.0);
}

double stable_block_residual(const ComplexMatrix& a, const ComplexMatrix& b,
                             int index_sum_cap) {
    const int d = static_cast<int>(std::min(a.rows(), b.rows()));
    double diff = 0.0;
    double scale = 1.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j + i <= index_sum_cap && j < d; ++j) {
            diff = std::max(diff, std::abs(a(i, j) - b(i, j)));
            scale = std::max(scale, std::abs(a(i, j)));
        }
    }
    return diff / scale;
}

ExchangeResiduals exchange_residuals(const AlgebraSpec& spec, Complex a, Complex b,
                                     Complex c, int dim) {
    spec.validate();
    if (spec.kind == Algebra::HeisenbergWeyl)
        throw std::invalid_argument("exchange_residuals: defined for su(1,1) and su(2) only");

    const ExchangeParams p = spec.kind == Algebra::SU11 ? exchange_params_su11(a, b, c)
                                                        : exchange_params_su2(a, b, c);

    ExchangeResiduals r;
    {
        const Fundamental f = fundamental_rep(spec.kind);
        const ComplexMatrix lhs = exp_nilpotent2(a * f.minus)
                                  * expm_diagonal(2.0 * b * f.three)
                                  * exp_nilpotent2(c * f.plus);
        const ComplexMatrix rhs = exp_nilpotent2(p.x * f.plus)
                                  * expm_diagonal(2.0 * p.y * f.three)
                                  * exp_nilpotent2(p.z_out * f.minus);
        r.fundamental = normalized_max_diff(lhs, rhs);
    }
    {
        const int d = spec.kind == Algebra::SU2 ? spec.su2_dim() : dim;
        const LadderOperators ops = ladder_matrices(spec, std::max(d, 2));
        const ComplexMatrix lhs = expm_single_band(a * ops.lower)
                                  * expm_diagonal(2.0 * b * ops.diag)
                                  * expm_single_band(c * ops.raise);
        const ComplexMatrix rhs = expm_single_band(p.x * ops.raise)
                                  * expm_diagonal(2.0 * p.y * ops.diag)
                                  * expm_single_band(p.z_out * ops.lower);
        const int cap = spec.kind == Algebra::SU2 ? 2 * d : d / 4;
        r.spin_rep = stable_block_residual(lhs, rhs, cap);
    }
    return r;
}

IdentityCheck verify_exchange(const AlgebraSpec& spec, Complex a, Complex b, Complex c,
                              int dim, double tol) {
    const ExchangeResiduals r = exchange_residuals(spec, a, b, c, dim);
    std::string params = std::string(spec.name());
    if (spec.kind != Algebra::HeisenbergWeyl) params += " spin=" + fmt(spec.spin);
    params += " a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c);
    return make_check("exchange", std::move(params),
                      std::max(r.fundamental, r.spin_rep), tol);
}

IdentityCheck verify_disentangling(const AlgebraSpec& spec, Complex z, int dim,
                                   double tol) {
    spec.validate();
    const int d = spec.kind == Algebra::SU2 ? spec.su2_dim() : dim;
    const LadderOperators ops = ladder_matrices(spec, std::max(d, 2));
    const ComplexMatrix direct = expm_antihermitian(generator(spec, std::max(d, 2), z));

    ComplexMatrix normal, anti;
    const double az = std::abs(z);
    switch (spec.kind) {
    case Algebra::HeisenbergWeyl: {
        const double h = 0.5 * az * az;
        const ComplexMatrix up = expm_single_band(z * ops.raise);
        const ComplexMatrix dn = expm_single_band(-std::conj(z) * ops.lower);
        normal = std::exp(-h) * (up * dn);
        anti = std::exp(h) * (dn * up);
        break;
    }
    case Algebra::SU11: {
        const Complex zeta = az == 0.0 ? Complex{} : std::tanh(az) * (z / az);
        const double lam = std::log1p(-std::norm(zeta)); // log(1 - |zeta|^2)
        const ComplexMatrix up = expm_single_band(zeta * ops.raise);
        const ComplexMatrix dn = expm_single_band(-std::conj(zeta) * ops.lower);
        normal = up * expm_diagonal(Complex(lam) * ops.diag) * dn;
        anti = dn * expm_diagonal(Complex(-lam) * ops.diag) * up;
        break;
    }
    case Algebra::SU2: {
        if (az != 0.0 && std::abs(std::cos(az)) <= 1e-12)
            throw std::domain_error("verify_disentangling: su(2) tan variable pole at cos|z| = 0");
        const Complex eta = az == 0.0 ? Complex{} : std::tan(az) * (z / az);
        const double lam = std::log1p(std::norm(eta)); // log(1 + |eta|^2)
        const ComplexMatrix up = expm_single_band(eta * ops.raise);
        const ComplexMatrix dn = expm_single_band(-std::conj(eta) * ops.lower);
        normal = up * expm_diagonal(Complex(lam) * ops.diag) * dn;
        anti = dn * expm_diagonal(Complex(-lam) * ops.diag) * up;
        break;
    }
    }

    const int cap = spec.kind == Algebra::SU2 ? 2 * d : d / 4;
    const double res = std::max({stable_block_residual(direct, normal, cap),
                                 stable_block_residual(direct, anti, cap),
                                 stable_block_residual(normal, anti, cap)});
    std::string params = std::string(spec.name());
    if (spec.kind != Algebra::HeisenbergWeyl) params += " spin=" + fmt(spec.spin);
    params += " z=" + fmt(z) + " dim=" + std::to_string(std::max(d, 2));
    return make_check("disentangling", std::move(params), res, tol);
}

IdentityCheck bch_check(Complex z, int dim, double tol) {
    const AlgebraSpec spec = AlgebraSpec::heisenberg_weyl();
    const LadderOperators ops = ladder_matrices(spec, dim);
    const ComplexMatrix direct = expm_antihermitian(generator(spec, dim, z));
    const ComplexMatrix split = std::exp(-0.5 * std::norm(z))
                                * (expm_single_band(z * ops.raise)
                                   * expm_single_band(-std::conj(z) * ops.lower));
    const double res = stable_block_residual(direct, split, dim / 4);
    return make_check("bch", "z=" + fmt(z) + " dim=" + std::to_string(dim), res, tol);
}

IdentityCheck factorization_check(int m, int big_n, Complex z, Complex w, int kmax,
                                  double tol) {
    if (m < 0 || big_n < 0)
        throw std::domain_error("factorization_check: m and N must be non-negative");
    const Complex zw = z + w;
    if (big_n >= 1 && zw == Complex{})
        throw std::domain_error("factorization_check: N >= 1 requires z + w != 0");

    const double x = std::norm(z);
    const double v = std::norm(w);
    const double lhs = laguerre_assoc(m, big_n, std::norm(zw));

    constexpr double kTailCut = 1e-14;
    Complex finite_part{};
    Complex tail{};
    int tail_start = 0;
    Complex tail_coeff(1.0, 0.0);
    int laguerre_deg = 0; // degree of the two Laguerre factors in the tail

    if (big_n == 0) {
        for (int k = 0; k <= m; ++k) {
            const double ratio = std::exp(log_factorial(k) - log_factorial(m));
            finite_part += ratio * int_power(-z * std::conj(w), m - k)
                           * laguerre_assoc(k, m - k, x) * laguerre_assoc(k, m - k, v);
        }
        tail_start = m;
        laguerre_deg = m;
    } else {
        const Complex zr = z / zw;
        const Complex wr = w / zw;
        Complex s1{};
        for (int k = 0; k <= m; ++k) {
            const double ratio = std::exp(log_factorial(k) - log_factorial(m));
            s1 += ratio * int_power(-z * std::conj(w), m - k)
                  * laguerre_assoc(k, m + big_n - k, x) * laguerre_assoc(k, m - k, v);
        }
        Complex s2{};
        for (int k = m + 1; k <= m + big_n; ++k) {
            s2 += int_power(z, m + big_n - k) * int_power(w, k - m)
                  * laguerre_assoc(k, m + big_n - k, x) * laguerre_assoc(m, k - m, v);
        }
        finite_part = int_power(zr, big_n) * s1 + int_power(Complex(1.0) / zw, big_n) * s2;
        tail_start = m + big_n;
        laguerre_deg = m + big_n;
        tail_coeff = int_power(wr, big_n); // folded into the tail terms below
    }

    // Infinite tail: sum_{k > tail_start} (tail_start!/k!) (-conj(z) w)^{k-tail_start}
    //   L_{laguerre_deg}^{(k-tail_start)}(x) L_m^{(k-m)}(v);
    // stop after three consecutive terms below the cutoff.
    Complex coeff(1.0, 0.0);
    int small_run = 0;
    bool converged = false;
    for (int k = tail_start + 1; k <= kmax; ++k) {
        coeff *= -std::conj(z) * w / static_cast<double>(k);
        const Complex term = tail_coeff * coeff
                             * laguerre_assoc(laguerre_deg, k - tail_start, x)
                             * laguerre_assoc(m, k - m, v);
        tail += term;
        small_run = std::abs(term) < kTailCut ? small_run + 1 : 0;
        if (small_run >= 3) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw std::runtime_error("factorization_check: k-tail not converged by kmax");

    const Complex rhs = std::exp(std::conj(z) * w) * (finite_part + tail);
    const double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    std::string params = "m=" + std::to_string(m) + " N=" + std::to_string(big_n)
                         + " z=" + fmt(z) + " w=" + fmt(w);
    return make_check("factorization", std::move(params), res, tol);
}

IdentityCheck group_law_check(Complex z, Complex w, int n, int m, int kmax,
                              double tol) {
    if (n < 0 || m < 0)
        throw std::out_of_range("group_law_check: negative index");
    const Complex lhs = u_element(n, m, z + w);
    Complex sum{};
    for (int k = 0; k <= kmax; ++k) sum += u_element(n, k, z) * u_element(k, m, w);
    const Complex phase = std::exp(-0.5 * (z * std::conj(w) - std::conj(z) * w));
    const double res = std::abs(lhs - phase * sum);
    std::string params = "n=" + std::to_string(n) + " m=" + std::to_string(m)
                         + " z=" + fmt(z) + " w=" + fmt(w)
                         + " kmax=" + std::to_string(kmax);
    return make_check("group_law", std::move(params), res, tol);
}

} // namespace gcop
