#ifndef GCOP_VERIFY_HPP
#define GCOP_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "gcop/identities.hpp"

namespace gcop {

struct SuiteResult {
    std::string suite;
    std::vector<IdentityCheck> checks;
    int max_dim_used = 0;
    double wall_seconds = 0.0;

    int total() const { return static_cast<int>(checks.size()); }
    int failed() const;
    int passed() const { return total() - failed(); }
    const IdentityCheck* worst_check() const; // largest residual/tol ratio
};

struct VerifyOptions {
    std::uint64_t seed = 12345;
    int m_max = -1; // cap on swept indices / polynomial degrees; <0 = suite default
    double oracle_tol = 1e-10;
    int dim_max = 2048;
};

/// Canonical suite order; the positions match the numbered criteria the
/// acceptance runner prints.
const std::vector<std::string>& suite_names();

/// Subset exercised by the `identities` CLI command.
const std::vector<std::string>& identity_suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);

} // namespace gcop

#endif
