#ifndef GCOP_CLOSED_FORM_HPP
#define GCOP_CLOSED_FORM_HPP

#include <stdexcept>

#include "gcop/representations.hpp"

namespace gcop {

/// One matrix element <n| op(z, t) |m>. t != 0 has no closed form and is
/// only accepted by the oracle.
struct ElementQuery {
    AlgebraSpec algebra;
    int n = 0;
    int m = 0;
    Complex z{};
    double t = 0.0;

    void validate() const; // index ranges per algebra
};

/// The displacement z together with its two derived variables: the
/// disentangling variable (tanh- or tan-scaled) and kappa (sinh- or
/// sin-scaled). kappa is entire in z; the su(2) tan variable has poles
/// at cos|z| = 0, flagged via eta_pole (kappa is still valid there).
struct DisplacementFrame {
    Complex z{};
    Complex zeta_or_eta{};
    Complex kappa{};
    bool eta_pole = false;
};

struct NoClosedFormError : std::domain_error {
    using std::domain_error::domain_error;
};

DisplacementFrame frame(const AlgebraSpec& spec, Complex z);

/// <n| e^{z a+ - conj(z) a} |m> on the boson Fock space.
Complex u_element(int n, int m, Complex z);

/// <K,n| e^{z K+ - conj(z) K-} |K,m> for the su(1,1) spin-K ladder, any K > 0.
Complex v_element(double k, int n, int m, Complex z);

/// <J,n| e^{z J+ - conj(z) J-} |J,m> for the su(2) spin-J ladder, 2J a
/// positive integer, 0 <= n, m <= 2J.
Complex w_element(double j, int n, int m, Complex z);

/// Dispatch on q.algebra. Throws NoClosedFormError when q.t != 0.
Complex element(const ElementQuery& q);

} // namespace gcop

#endif
