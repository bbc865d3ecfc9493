#include "gcop/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gcop/special_functions.hpp"

namespace gcop {
namespace {

constexpr double kEtaPoleCosTol = 1e-12;

Complex int_power(Complex base, int p) {
    Complex result(1.0, 0.0);
    while (p > 0) {
        if (p & 1) result *= base;
        base *= base;
        p >>= 1;
    }
    return result;
}

// Phase carried by kappa^{n-m} (n >= m) resp. (-conj(kappa))^{m-n} (n < m);
// |kappa|^{|n-m|} stays in the log-magnitude accumulators of the callers.
Complex direction_phase(Complex z, int n, int m) {
    const Complex dir = z / std::abs(z);
    const int d = std::abs(n - m);
    return n >= m ? int_power(dir, d) : int_power(-std::conj(dir), d);
}

} // namespace

void ElementQuery::validate() const {
    algebra.validate();
    if (n < 0 || m < 0) throw std::out_of_range("ElementQuery: negative index");
    if (algebra.kind == Algebra::SU2) {
        const int tj = algebra.two_j();
        if (n > tj || m > tj)
            throw std::out_of_range("ElementQuery: su(2) indices must lie in [0, 2J]");
    }
}

DisplacementFrame frame(const AlgebraSpec& spec, Complex z) {
    spec.validate();
    DisplacementFrame f;
    f.z = z;
    if (z == Complex{}) return f; // analytic limit: all derived variables vanish
    const double az = std::abs(z);
    const Complex dir = z / az;
    switch (spec.kind) {
    case Algebra::HeisenbergWeyl:
        f.zeta_or_eta = z;
        f.kappa = z;
        break;
    case Algebra::SU11:
        f.zeta_or_eta = std::tanh(az) * dir;
        f.kappa = std::sinh(az) * dir;
        break;
    case Algebra::SU2:
        f.kappa = std::sin(az) * dir;
        if (std::abs(std::cos(az)) <= kEtaPoleCosTol) {
            f.eta_pole = true;
            f.zeta_or_eta = Complex(std::numeric_limits<double>::quiet_NaN(),
                                    std::numeric_limits<double>::quiet_NaN());
        } else {
            f.zeta_or_eta = std::tan(az) * dir;
        }
        break;
    }
    return f;
}

Complex u_element(int n, int m, Complex z) {
    if (n < 0 || m < 0) throw std::out_of_range("u_element: negative index");
    if (z == Complex{}) return n == m ? 1.0 : 0.0;

    const double az = std::abs(z);
    const double x = az * az;
    const int p = std::min(n, m);
    const int d = std::abs(n - m);

    const double lag = laguerre_assoc(p, d, x);
    const double log_mag = -0.5 * x
                           + 0.5 * (log_factorial(p) - log_factorial(std::max(n, m)))
                           + d * std::log(az);
    return direction_phase(z, n, m) * lag * std::exp(log_mag);
}

Complex v_element(double k, int n, int m, Complex z) {
    if (!(k > 0.0)) throw std::domain_error("v_element: spin K must be positive");
    if (n < 0 || m < 0) throw std::out_of_range("v_element: negative index");
    if (z == Complex{}) return n == m ? 1.0 : 0.0;

    const double az = std::abs(z);
    const double kap = std::sinh(az); // |kappa|
    const double y = kap * kap;       // |kappa|^2
    const double u = 1.0 + y;         // cosh^2 |z|
    const int p = std::min(n, m);
    const int d = std::abs(n - m);

    // every log combination below is grouped symmetrically in (n, m), so the
    // conjugation symmetry element(n,m,z) = conj(element(m,n,-z)) survives
    // rounding exactly
    const double pref_log =
        0.5 * ((log_factorial(n) + log_factorial(m))
               - (log_gamma_ratio(2.0 * k, n) + log_gamma_ratio(2.0 * k, m)));
    const double power_log = d * std::log(kap) - (k + 0.5 * (n + m)) * std::log(u);

    // T_j = Gamma(2K+n+m-j)/Gamma(2K) u^j y^{p-j} / ((m-j)!(n-j)!j!), built by
    // term ratios relative to T_0. The alternating sum cancels by many orders
    // once min(n,m) grows at |z| ~ 1, so the ratios and the signed sum run in
    // quad precision (plain arithmetic only, no library calls).
    using quad = __float128;
    const quad uq = u;
    const quad yq = y;
    quad term = 1.0; // T_j / T_0
    quad alt = 1.0;  // sum of (-1)^j T_j / T_0
    for (int j = 0; j < p; ++j) {
        term *= static_cast<quad>(m - j) * static_cast<quad>(n - j) * uq
                / (static_cast<quad>(2.0 * k + (n + m - j - 1)) * static_cast<quad>(j + 1)
                   * yq);
        alt += (j & 1) ? term : -term; // sign of term j+1
    }
    const double signed_sum = static_cast<double>(alt) * ((p & 1) ? -1.0 : 1.0);
    const double t0_log = log_gamma_ratio(2.0 * k, n + m)
                          - (log_factorial(m) + log_factorial(n)) + p * std::log(y);

    return direction_phase(z, n, m) * signed_sum
           * std::exp(pref_log + power_log + t0_log);
}

Complex w_element(double j_spin, int n, int m, Complex z) {
    const AlgebraSpec spec = AlgebraSpec::su2(j_spin);
    const int tj = spec.two_j(); // validates 2J
    if (n < 0 || m < 0 || n > tj || m > tj)
        throw std::out_of_range("w_element: indices must lie in [0, 2J]");
    if (z == Complex{}) return n == m ? 1.0 : 0.0;

    const double az = std::abs(z);
    const double s = std::sin(az);
    const double c = std::cos(az);
    const double y = s * s; // |kappa|^2
    const int p = std::min(n, m);
    const int d = std::abs(n - m);
    const int j0 = std::max(0, n + m - tj); // starred-sum restriction

    if (s == 0.0 && d > 0) return 0.0; // kappa vanishes, off-diagonal element dies

    const double pref_log =
        0.5 * ((log_factorial(n) + log_factorial(m))
               - ((log_factorial(tj) - log_factorial(tj - n))
                  + (log_factorial(tj) - log_factorial(tj - m))));

    // The prefactor power (1-|kappa|^2)^{J-(n+m)/2} is merged into each term;
    // the combined exponent 2J-n-m+2j is a non-negative integer for every
    // admissible j, and the signed cosine keeps the branch right past |z| = pi/2.
    const double log_y = y > 0.0 ? std::log(y) : 0.0;
    const double log_c = c != 0.0 ? std::log(std::abs(c)) : 0.0;
    std::vector<double> term_log;
    std::vector<double> term_sign;
    term_log.reserve(p - j0 + 1);
    term_sign.reserve(p - j0 + 1);
    for (int j = j0; j <= p; ++j) {
        const int ce = tj - n - m + 2 * j; // exponent of cos|z|
        if (c == 0.0 && ce > 0) continue;
        if (y == 0.0 && p - j > 0) continue;
        const double tl = log_factorial(tj) - log_factorial(tj - n - m + j)
                          - (log_factorial(m - j) + log_factorial(n - j)) - log_factorial(j)
                          + (c == 0.0 ? 0.0 : ce * log_c)
                          + (y == 0.0 ? 0.0 : (p - j) * log_y);
        double sign = ((p - j) & 1) ? -1.0 : 1.0;
        if (c < 0.0 && (ce & 1)) sign = -sign;
        term_log.push_back(tl);
        term_sign.push_back(sign);
    }
    if (term_log.empty()) return 0.0;

    const double lmax = *std::max_element(term_log.begin(), term_log.end());
    long double acc = 0.0L;
    for (std::size_t i = 0; i < term_log.size(); ++i)
        acc += static_cast<long double>(term_sign[i])
               * std::exp(static_cast<long double>(term_log[i] - lmax));

    const double sd_sign = (s < 0.0 && (d & 1)) ? -1.0 : 1.0;
    const double log_sd = d > 0 ? d * std::log(std::abs(s)) : 0.0;
    return direction_phase(z, n, m) * sd_sign * static_cast<double>(acc)
           * std::exp(pref_log + log_sd + lmax);
}

Complex element(const ElementQuery& q) {
    q.validate();
    if (q.t != 0.0)
        throw NoClosedFormError("element: no closed form for t != 0, use the oracle");
    switch (q.algebra.kind) {
    case Algebra::HeisenbergWeyl: return u_element(q.n, q.m, q.z);
    case Algebra::SU11: return v_element(q.algebra.spin, q.n, q.m, q.z);
    case Algebra::SU2: return w_element(q.algebra.spin, q.n, q.m, q.z);
    }
    throw std::invalid_argument("element: unknown algebra");
}

} // namespace gcop
