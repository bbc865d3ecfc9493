#ifndef GCOP_ORACLE_HPP
#define GCOP_ORACLE_HPP

#include <stdexcept>
#include <string>

#include "gcop/closed_form.hpp"

namespace gcop {

struct OracleConfig {
    double tol = 1e-10; // element-stability tolerance between successive cutoffs
    int dim0 = 0;       // starting cutoff; 0 means n+m+32
    int dim_max = 2048; // hard cap
    int growth = 2;     // cutoff multiplier
};

struct OracleResult {
    Complex value{};
    int dim_used = 0;
    double est_error = 0.0; // |value(D) - value(D/growth)|
};

struct NoConvergenceError : std::runtime_error {
    double est_error;
    int dim_reached;
    NoConvergenceError(const std::string& msg, double est, int dim)
        : std::runtime_error(msg), est_error(est), dim_reached(dim) {}
};

/// exp(G) for anti-Hermitian G via the eigendecomposition of the Hermitian
/// matrix -iG; the result is unitary up to roundoff. Rejects input whose
/// anti-Hermitian defect exceeds 1e-13 relative to the largest entry.
ComplexMatrix expm_antihermitian(const ComplexMatrix& g);

/// Exact exponential of a matrix whose nonzeros all sit on the first sub-
/// or superdiagonal (nilpotent, so the series terminates); entrywise product
/// formula, no truncation error.
ComplexMatrix expm_single_band(const ComplexMatrix& a);

/// Entrywise exponential of a diagonal matrix.
ComplexMatrix expm_diagonal(const ComplexMatrix& a);

/// <n| exp(generator(spec, dim, z, t)) |m> at one fixed cutoff.
Complex truncated_element(const AlgebraSpec& spec, int n, int m, Complex z,
                          double t, int dim);

/// Ground-truth element. su(2) is evaluated exactly at dim 2J+1
/// (est_error 0); the infinite-dimensional families grow the cutoff by
/// cfg.growth until two successive values agree within cfg.tol, and throw
/// NoConvergenceError if cfg.dim_max is exhausted first.
OracleResult oracle_element(const ElementQuery& q, const OracleConfig& cfg = {});

/// Whole top-left block (n_max+1) x (m_max+1) of the exponential, stabilized
/// with the same doubling rule applied to every entry at once. Cheaper than
/// per-element calls when sweeping index grids.
struct OracleBlock {
    ComplexMatrix values;
    Eigen::MatrixXd est_error;
    int dim_used = 0;
};
OracleBlock oracle_block(const AlgebraSpec& spec, Complex z, double t,
                         int n_max, int m_max, const OracleConfig& cfg = {});

} // namespace gcop

#endif
