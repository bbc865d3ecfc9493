// Acceptance runner: executes every verification suite at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>
#include <exception>

#include "gcop/verify.hpp"

int main() {
    gcop::VerifyOptions opt; // pinned defaults: seed 12345, oracle tol 1e-10
    const std::vector<std::string>& names = gcop::suite_names();

    int exit_code = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        try {
            const gcop::SuiteResult s = gcop::run_suite(names[i], opt);
            const gcop::IdentityCheck* w = s.worst_check();
            std::printf("[%s] %2zu. %-14s checks=%4d failed=%d worst=%.3g (tol %.3g)%s%s [%.2fs]\n",
                        s.failed() == 0 ? "PASS" : "FAIL", i + 1, s.suite.c_str(),
                        s.total(), s.failed(), w ? w->residual : 0.0, w ? w->tol : 0.0,
                        w ? " at " : "", w ? w->params.c_str() : "", s.wall_seconds);
            if (s.failed() > 0) {
                exit_code = 1;
                for (const gcop::IdentityCheck& c : s.checks)
                    if (!c.passed)
                        std::printf("        failed: %s %s residual=%.6g (tol %.3g)\n",
                                    c.name.c_str(), c.params.c_str(), c.residual, c.tol);
            }
        } catch (const std::exception& e) {
            std::printf("[FAIL] %2zu. %-14s aborted: %s\n", i + 1, names[i].c_str(),
                        e.what());
            exit_code = 1;
        }
    }
    return exit_code;
}
