#ifndef GCOP_IDENTITIES_HPP
#define GCOP_IDENTITIES_HPP

#include <string>

#include "gcop/oracle.hpp"

namespace gcop {

/// Input triple (a, b, c) of e^{a X-} e^{2b X3} e^{c X+} together with the
/// normal-ordered output triple (x, y, z_out) of e^{x X+} e^{2y X3} e^{z X-}.
struct ExchangeParams {
    Complex a, b, c;
    Complex x, y, z_out;
};

struct SingularExchangeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct IdentityCheck {
    std::string name;
    std::string params;
    double residual = 0.0;
    double tol = 0.0;
    bool passed = false;
};

IdentityCheck make_check(std::string name, std::string params, double residual, double tol);

/// su(1,1): f = e^{-b} - a c e^{b}; x = c e^{b}/f, y = -log f (principal),
/// z_out = a e^{b}/f. Throws SingularExchangeError when |f| <= 1e-12.
ExchangeParams exchange_params_su11(Complex a, Complex b, Complex c);

/// su(2) variant: f = e^{-b} + a c e^{b}.
ExchangeParams exchange_params_su2(Complex a, Complex b, Complex c);

/// Max-norm difference between the two orderings, normalized by
/// max(1, scale of the left side), in (i) the 2x2 fundamental rep and
/// (ii) the truncated (su(1,1)) or exact (su(2)) spin rep.
struct ExchangeResiduals {
    double fundamental = 0.0;
    double spin_rep = 0.0;
};
ExchangeResiduals exchange_residuals(const AlgebraSpec& spec, Complex a, Complex b,
                                     Complex c, int dim = 128);

/// Combined check (larger of the two residuals).
IdentityCheck verify_exchange(const AlgebraSpec& spec, Complex a, Complex b, Complex c,
                              int dim = 128, double tol = 1e-8);

/// Direct exponential vs both ordered triple products (normal and
/// anti-normal), and the two orderings against each other, on the stable
/// top-left block for truncated reps. su(2) requires cos|z| != 0 and is
/// only valid on the principal patch |z| < pi/2.
IdentityCheck verify_disentangling(const AlgebraSpec& spec, Complex z,
                                   int dim = 128, double tol = 1e-8);

/// e^{z a+ - conj(z) a} vs e^{-|z|^2/2} e^{z a+} e^{-conj(z) a} on the
/// truncated Fock space (the elementary splitting; valid because the
/// commutator is central).
IdentityCheck bch_check(Complex z, int dim = 128, double tol = 1e-9);

/// Laguerre factorization: L_m^{(N)}(|z+w|^2) against the three-sum
/// (N >= 1, needs z+w != 0) or two-sum (N = 0) expansion, infinite tail
/// truncated once three consecutive terms fall below 1e-14 in magnitude.
/// Throws std::runtime_error if kmax is exhausted before that happens.
IdentityCheck factorization_check(int m, int big_n, Complex z, Complex w, int kmax,
                                  double tol = 1e-8);

/// Composition law of the coherent operator through closed-form elements:
/// u(n,m,z+w) vs phase * sum_k u(n,k,z) u(k,m,w), k up to kmax.
IdentityCheck group_law_check(Complex z, Complex w, int n, int m, int kmax,
                              double tol = 1e-10);

/// max |a-b| over the index region i+j <= index_sum_cap, divided by
/// max(1, max |a| over the same region).
double stable_block_residual(const ComplexMatrix& a, const ComplexMatrix& b,
                             int index_sum_cap);

} // namespace gcop

#endif
