#ifndef GCOP_REPRESENTATIONS_HPP
#define GCOP_REPRESENTATIONS_HPP

#include <complex>

#include <Eigen/Dense>

namespace gcop {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Algebra { HeisenbergWeyl, SU11, SU2 };

/// Which ladder family, plus its spin label. spin is K for SU11 (any
/// positive real), J for SU2 (2J must be a positive integer) and unused
/// for HeisenbergWeyl.
struct AlgebraSpec {
    Algebra kind = Algebra::HeisenbergWeyl;
    double spin = 0.0;

    static AlgebraSpec heisenberg_weyl() { return {Algebra::HeisenbergWeyl, 0.0}; }
    static AlgebraSpec su11(double k) { return {Algebra::SU11, k}; }
    static AlgebraSpec su2(double j) { return {Algebra::SU2, j}; }

    void validate() const; // throws std::invalid_argument on a bad spin
    int two_j() const;     // SU2 only
    int su2_dim() const { return two_j() + 1; }
    bool finite_dimensional() const { return kind == Algebra::SU2; }
    const char* name() const;
};

/// Dense matrix realization of a ladder triple on the truncated basis
/// |0..dim-1>, row = bra index, column = ket index. lower(n-1, n) and
/// raise(n+1, n) carry the (real, non-negative) ladder coefficients and
/// raise is the exact conjugate transpose of lower.
struct LadderOperators {
    ComplexMatrix lower;
    ComplexMatrix raise;
    ComplexMatrix diag;

    int dim() const { return static_cast<int>(diag.rows()); }
};

/// Builds the truncated triple. dim must be >= 2; for SU2 it must equal
/// 2J+1 exactly (the representation is finite dimensional).
LadderOperators ladder_matrices(const AlgebraSpec& spec, int dim);

/// z * raise - conj(z) * lower, plus 2it * diag when t != 0.
/// Anti-Hermitian by construction (exactly, entrywise).
ComplexMatrix generator(const AlgebraSpec& spec, int dim, Complex z, double t = 0.0);

} // namespace gcop

#endif
