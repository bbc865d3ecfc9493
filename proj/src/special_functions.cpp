#include "gcop/special_functions.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace gcop {

double binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (long long i = 1; i <= k; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (acc > std::numeric_limits<std::uint64_t>::max() / factor) {
            // past the exact-integer boundary
            return std::exp(std::lgamma(static_cast<double>(n) + 1.0) -
                            std::lgamma(static_cast<double>(k) + 1.0) -
                            std::lgamma(static_cast<double>(n - k) + 1.0));
        }
        acc = acc * factor / static_cast<std::uint64_t>(i); // divides exactly
    }
    return static_cast<double>(acc);
}

double laguerre_assoc(int n, int alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre_assoc: n must be non-negative");
    if (alpha < 0) throw std::domain_error("laguerre_assoc: alpha must be non-negative");
    if (!std::isfinite(x)) throw std::domain_error("laguerre_assoc: x must be finite");
    if (n == 0) return 1.0;

    // Ascending j with compensated accumulation; extended precision keeps the
    // cancellation of the alternating terms well below the double target.
    long double sum = 0.0L, carry = 0.0L;
    long double xp = 1.0L; // (-x)^j / j!
    for (int j = 0; j <= n; ++j) {
        const long double term = static_cast<long double>(binomial(n + alpha, n - j)) * xp;
        const long double y = term - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        xp *= -static_cast<long double>(x) / (j + 1);
    }
    return static_cast<double>(sum);
}

double pochhammer(double a, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be non-negative");
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a + i;
    return prod;
}

double falling_factorial(int big_n, int n) {
    if (n < 0 || n > big_n)
        throw std::domain_error("falling_factorial: need 0 <= n <= N");
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= static_cast<double>(big_n - i);
    return prod;
}

double log_gamma_ratio(double a, int k) {
    if (!(a > 0.0)) throw std::domain_error("log_gamma_ratio: a must be positive");
    if (k < 0) throw std::domain_error("log_gamma_ratio: k must be non-negative");
    if (k <= 256) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += std::log(a + i);
        return s;
    }
    return std::lgamma(a + k) - std::lgamma(a);
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be non-negative");
    return std::lgamma(n + 1.0);
}

} // namespace gcop
