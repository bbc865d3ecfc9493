#ifndef GCOP_SPECIAL_FUNCTIONS_HPP
#define GCOP_SPECIAL_FUNCTIONS_HPP

namespace gcop {

/// Compensated (Kahan) accumulator; used for the alternating series below.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Binomial coefficient C(n, k). Exact 64-bit integer arithmetic while the
/// intermediate products fit; log-gamma fallback beyond that boundary.
/// Returns 0 for k < 0 or k > n.
double binomial(long long n, long long k);

/// Associated Laguerre polynomial
///   L_n^(alpha)(x) = sum_{j=0}^{n} (-1)^j C(n+alpha, n-j) x^j / j!
/// summed in ascending j with compensated accumulation. L_0 == 1 exactly.
/// Throws std::domain_error for n < 0, alpha < 0 or non-finite x.
double laguerre_assoc(int n, int alpha, double x);

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1) as a running product;
/// 1 for n = 0. log_gamma_ratio is the companion log-space variant.
double pochhammer(double a, int n);

/// Falling factorial N! / (N-n)! = N (N-1) ... (N-n+1); 1 for n = 0.
/// Throws std::domain_error unless 0 <= n <= N.
double falling_factorial(int big_n, int n);

/// log(Gamma(a+k) / Gamma(a)) for a > 0, k >= 0. Overflow-free route for
/// the factorial/Pochhammer ratios appearing in the matrix elements.
double log_gamma_ratio(double a, int k);

/// log(n!) for n >= 0.
double log_factorial(int n);

} // namespace gcop

#endif
