#include "gcop/representations.hpp"

#include <cmath>
#include <stdexcept>

namespace gcop {

void AlgebraSpec::validate() const {
    switch (kind) {
    case Algebra::HeisenbergWeyl:
        return;
    case Algebra::SU11:
        if (!(spin > 0.0))
            throw std::invalid_argument("AlgebraSpec: su(1,1) spin K must be positive");
        return;
    case Algebra::SU2: {
        const double tj = 2.0 * spin;
        const long long r = std::llround(tj);
        if (r < 1 || std::abs(tj - static_cast<double>(r)) > 1e-9)
            throw std::invalid_argument("AlgebraSpec: su(2) requires 2J to be a positive integer");
        return;
    }
    }
    throw std::invalid_argument("AlgebraSpec: unknown algebra kind");
}

int AlgebraSpec::two_j() const {
    if (kind != Algebra::SU2)
        throw std::invalid_argument("AlgebraSpec: two_j() is only defined for su(2)");
    validate();
    return static_cast<int>(std::llround(2.0 * spin));
}

const char* AlgebraSpec::name() const {
    switch (kind) {
    case Algebra::HeisenbergWeyl: return "hw";
    case Algebra::SU11: return "su11";
    case Algebra::SU2: return "su2";
    }
    return "?";
}

LadderOperators ladder_matrices(const AlgebraSpec& spec, int dim) {
    spec.validate();
    if (dim < 2) throw std::invalid_argument("ladder_matrices: dim must be >= 2");
    if (spec.kind == Algebra::SU2 && dim != spec.su2_dim())
        throw std::invalid_argument("ladder_matrices: su(2) requires dim == 2J+1");

    LadderOperators ops;
    ops.lower = ComplexMatrix::Zero(dim, dim);
    ops.diag = ComplexMatrix::Zero(dim, dim);

    for (int n = 0; n < dim; ++n) {
        double low = 0.0;  // coefficient of |n> -> |n-1>
        double diag = 0.0;
        switch (spec.kind) {
        case Algebra::HeisenbergWeyl:
            low = std::sqrt(static_cast<double>(n));
            diag = n;
            break;
        case Algebra::SU11:
            low = std::sqrt(n * (2.0 * spec.spin + n - 1.0));
            diag = spec.spin + n;
            break;
        case Algebra::SU2:
            low = std::sqrt(n * (2.0 * spec.spin - n + 1.0));
            diag = -spec.spin + n;
            break;
        }
        if (n > 0) ops.lower(n - 1, n) = low;
        ops.diag(n, n) = diag;
    }
    ops.raise = ops.lower.adjoint();
    return ops;
}

ComplexMatrix generator(const AlgebraSpec& spec, int dim, Complex z, double t) {
    const LadderOperators ops = ladder_matrices(spec, dim);
    ComplexMatrix g = z * ops.raise - std::conj(z) * ops.lower;
    if (t != 0.0) g += Complex(0.0, 2.0 * t) * ops.diag;
    return g;
}

} // namespace gcop
