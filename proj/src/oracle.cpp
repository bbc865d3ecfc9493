#include "gcop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace gcop {
namespace {

constexpr double kAntiHermitianTol = 1e-13;

bool is_strictly_upper_band(const ComplexMatrix& a) {
    const int d = static_cast<int>(a.rows());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (j != i + 1 && a(i, j) != Complex{}) return false;
    return true;
}

bool is_strictly_lower_band(const ComplexMatrix& a) {
    const int d = static_cast<int>(a.rows());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j + 1 && a(i, j) != Complex{}) return false;
    return true;
}

int starting_dim(const AlgebraSpec& spec, int n_max, int m_max, const OracleConfig& cfg) {
    int d = cfg.dim0 > 0 ? cfg.dim0 : n_max + m_max + 32;
    d = std::max(d, n_max + m_max + 2);
    d = std::max(d, std::max(n_max, m_max) + 2);
    (void)spec;
    return d;
}

} // namespace

ComplexMatrix expm_antihermitian(const ComplexMatrix& g) {
    if (g.rows() != g.cols())
        throw std::invalid_argument("expm_antihermitian: matrix must be square");
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    const double defect = (g + g.adjoint()).cwiseAbs().maxCoeff();
    if (defect > kAntiHermitianTol * scale)
        throw std::invalid_argument("expm_antihermitian: input is not anti-Hermitian");

    // G = iH with H Hermitian; exp(G) = V diag(e^{i lambda}) V^H
    const ComplexMatrix h = Complex(0.0, -1.0) * g;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("expm_antihermitian: eigendecomposition failed");

    const Eigen::VectorXd lam = es.eigenvalues();
    Eigen::VectorXcd phases(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        phases(i) = std::polar(1.0, lam(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix expm_single_band(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("expm_single_band: matrix must be square");
    const int d = static_cast<int>(a.rows());
    const bool upper = is_strictly_upper_band(a);
    if (!upper && !is_strictly_lower_band(a))
        throw std::invalid_argument("expm_single_band: expected a single off-diagonal band");

    // (e^A)_{i,i+p} = prod of the p band entries / p!, built incrementally.
    ComplexMatrix e = ComplexMatrix::Identity(d, d);
    for (int i = 0; i < d; ++i) {
        Complex entry(1.0, 0.0);
        for (int p = 1; i + p < d; ++p) {
            const int r = upper ? i + p - 1 : i + p;
            const int c = upper ? i + p : i + p - 1;
            entry *= a(r, c) / static_cast<double>(p);
            if (upper)
                e(i, i + p) = entry;
            else
                e(i + p, i) = entry;
        }
    }
    return e;
}

ComplexMatrix expm_diagonal(const ComplexMatrix& a) {
    const int d = static_cast<int>(a.rows());
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) e(i, i) = std::exp(a(i, i));
    return e;
}

Complex truncated_element(const AlgebraSpec& spec, int n, int m, Complex z,
                          double t, int dim) {
    const ComplexMatrix u = expm_antihermitian(generator(spec, dim, z, t));
    return u(n, m);
}

OracleResult oracle_element(const ElementQuery& q, const OracleConfig& cfg) {
    q.validate();
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("oracle_element: tol must be positive");
    if (cfg.growth < 2) throw std::invalid_argument("oracle_element: growth must be >= 2");

    if (q.algebra.kind == Algebra::SU2) {
        const int d = q.algebra.su2_dim();
        const int dim = std::max(d, 2);
        OracleResult r;
        r.value = truncated_element(q.algebra, q.n, q.m, q.z, q.t, dim);
        r.dim_used = dim;
        r.est_error = 0.0; // exact dimension, no truncation
        return r;
    }

    int dim = starting_dim(q.algebra, q.n, q.m, cfg);
    if (dim > cfg.dim_max)
        throw NoConvergenceError("oracle_element: starting cutoff exceeds dim_max", 0.0, dim);
    Complex prev = truncated_element(q.algebra, q.n, q.m, q.z, q.t, dim);
    while (true) {
        const long long next = static_cast<long long>(dim) * cfg.growth;
        if (next > cfg.dim_max)
            throw NoConvergenceError("oracle_element: no convergence within dim_max",
                                     std::numeric_limits<double>::quiet_NaN(), dim);
        const int dim2 = static_cast<int>(next);
        const Complex cur = truncated_element(q.algebra, q.n, q.m, q.z, q.t, dim2);
        const double diff = std::abs(cur - prev);
        if (diff <= cfg.tol) return {cur, dim2, diff};
        prev = cur;
        dim = dim2;
    }
}

OracleBlock oracle_block(const AlgebraSpec& spec, Complex z, double t,
                         int n_max, int m_max, const OracleConfig& cfg) {
    spec.validate();
    if (n_max < 0 || m_max < 0)
        throw std::out_of_range("oracle_block: negative index bound");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("oracle_block: tol must be positive");
    if (cfg.growth < 2) throw std::invalid_argument("oracle_block: growth must be >= 2");

    const int rows = n_max + 1;
    const int cols = m_max + 1;

    if (spec.kind == Algebra::SU2) {
        const int dim = spec.su2_dim();
        if (n_max >= dim || m_max >= dim)
            throw std::out_of_range("oracle_block: su(2) indices must lie in [0, 2J]");
        OracleBlock b;
        b.values = expm_antihermitian(generator(spec, dim, z, t)).block(0, 0, rows, cols);
        b.est_error = Eigen::MatrixXd::Zero(rows, cols);
        b.dim_used = dim;
        return b;
    }

    int dim = starting_dim(spec, n_max, m_max, cfg);
    if (dim > cfg.dim_max)
        throw NoConvergenceError("oracle_block: starting cutoff exceeds dim_max", 0.0, dim);
    ComplexMatrix prev =
        expm_antihermitian(generator(spec, dim, z, t)).block(0, 0, rows, cols);
    while (true) {
        const long long next = static_cast<long long>(dim) * cfg.growth;
        if (next > cfg.dim_max)
            throw NoConvergenceError("oracle_block: no convergence within dim_max",
                                     std::numeric_limits<double>::quiet_NaN(), dim);
        const int dim2 = static_cast<int>(next);
        const ComplexMatrix cur =
            expm_antihermitian(generator(spec, dim2, z, t)).block(0, 0, rows, cols);
        const Eigen::MatrixXd diff = (cur - prev).cwiseAbs();
        if (diff.maxCoeff() <= cfg.tol) return {cur, diff, dim2};
        prev = cur;
        dim = dim2;
    }
}

} // namespace gcop
