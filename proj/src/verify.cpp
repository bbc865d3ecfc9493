#include "gcop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "gcop/special_functions.hpp"

namespace gcop {
namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string fmt(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.9g%+.9gi", z.real(), z.imag());
    return buf;
}

/// Seeded uniform generator with a fixed bit-to-double mapping, so reports
/// are reproducible independent of the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    Complex disk(double rmax) {
        const double r = rmax * std::sqrt(uniform());
        const double th = 2.0 * 3.14159265358979323846 * uniform();
        return std::polar(r, th);
    }

private:
    std::mt19937_64 gen_;
};

Rng suite_rng(const VerifyOptions& opt, int suite_index) {
    return Rng(opt.seed + 1000003ULL * static_cast<std::uint64_t>(suite_index));
}

const std::vector<double> kKSet = {0.25, 0.75, 1.0, 2.5};
const std::vector<double> kJSet = {0.5, 1.0, 1.5, 3.0, 5.0};
const std::vector<double> kJSetExchange = {0.5, 1.0, 1.5, 5.0};

/// The displacement set {0.25, 0.5, 1, 2} x {1, i, (1+i)/sqrt(2)},
/// optionally filtered by magnitude.
std::vector<Complex> standard_z_set(double max_mag) {
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex dirs[] = {Complex(1.0, 0.0), Complex(0.0, 1.0),
                            Complex(inv_sqrt2, inv_sqrt2)};
    const double mags[] = {0.25, 0.5, 1.0, 2.0};
    std::vector<Complex> out;
    for (double mag : mags)
        for (const Complex& d : dirs)
            if (mag <= max_mag + 1e-12) out.push_back(mag * d);
    return out;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i)
        out[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    return out;
}

OracleConfig oracle_cfg(const VerifyOptions& opt) {
    OracleConfig cfg;
    cfg.tol = opt.oracle_tol;
    cfg.dim_max = opt.dim_max;
    return cfg;
}

int cap_index(int suite_default, const VerifyOptions& opt) {
    return opt.m_max >= 0 ? std::min(suite_default, opt.m_max) : suite_default;
}

// ---- criterion 1: HW closed form vs oracle -------------------------------

SuiteResult suite_hw_oracle(const VerifyOptions& opt) {
    SuiteResult s{"hw_oracle", {}, 0, 0.0};
    const int nm = cap_index(20, opt);
    const AlgebraSpec spec = AlgebraSpec::heisenberg_weyl();
    for (const Complex& z : standard_z_set(2.0)) {
        const OracleBlock blk = oracle_block(spec, z, 0.0, nm, nm, oracle_cfg(opt));
        s.max_dim_used = std::max(s.max_dim_used, blk.dim_used);
        double worst = 0.0;
        for (int n = 0; n <= nm; ++n)
            for (int m = 0; m <= nm; ++m)
                worst = std::max(worst, std::abs(u_element(n, m, z) - blk.values(n, m)));
        s.checks.push_back(make_check(
            "hw_closed_vs_oracle",
            "z=" + fmt(z) + " nm<=" + std::to_string(nm) + " dim=" + std::to_string(blk.dim_used),
            worst, 1e-9));
    }
    return s;
}

// ---- criterion 2: su(1,1) closed form vs oracle ---------------------------

SuiteResult suite_su11_oracle(const VerifyOptions& opt) {
    SuiteResult s{"su11_oracle", {}, 0, 0.0};
    const int nm = cap_index(15, opt);
    for (double k : kKSet) {
        const AlgebraSpec spec = AlgebraSpec::su11(k);
        for (const Complex& z : standard_z_set(1.5)) {
            const OracleBlock blk = oracle_block(spec, z, 0.0, nm, nm, oracle_cfg(opt));
            s.max_dim_used = std::max(s.max_dim_used, blk.dim_used);
            double worst = 0.0;
            for (int n = 0; n <= nm; ++n)
                for (int m = 0; m <= nm; ++m)
                    worst = std::max(worst,
                                     std::abs(v_element(k, n, m, z) - blk.values(n, m)));
            s.checks.push_back(make_check(
                "su11_closed_vs_oracle",
                "K=" + fmt(k) + " z=" + fmt(z) + " nm<=" + std::to_string(nm)
                    + " dim=" + std::to_string(blk.dim_used),
                worst, 1e-8));
        }
    }
    return s;
}

// ---- criterion 3: su(2) closed form vs exact exponential ------------------

SuiteResult suite_su2_oracle(const VerifyOptions& opt) {
    SuiteResult s{"su2_oracle", {}, 0, 0.0};
    const std::vector<double> grid = linspace(-1.2, 1.2, 5);
    for (double j : kJSet) {
        const AlgebraSpec spec = AlgebraSpec::su2(j);
        const int tj = spec.two_j();
        const int nm = cap_index(tj, opt);
        for (double re : grid) {
            for (double im : grid) {
                const Complex z(re, im);
                const OracleBlock blk = oracle_block(spec, z, 0.0, nm, nm, oracle_cfg(opt));
                s.max_dim_used = std::max(s.max_dim_used, blk.dim_used);
                double worst = 0.0;
                for (int n = 0; n <= nm; ++n)
                    for (int m = 0; m <= nm; ++m)
                        worst = std::max(worst,
                                         std::abs(w_element(j, n, m, z) - blk.values(n, m)));
                s.checks.push_back(make_check(
                    "su2_closed_vs_exact", "J=" + fmt(j) + " z=" + fmt(z), worst, 1e-10));
            }
        }
    }
    return s;
}

// ---- criterion 4: conjugation symmetry ------------------------------------

SuiteResult suite_conjugation(const VerifyOptions& opt) {
    SuiteResult s{"conjugation", {}, 0, 0.0};
    const double tol = 1e-12;

    const int nm_hw = cap_index(20, opt);
    for (const Complex& z : standard_z_set(2.0)) {
        double worst = 0.0;
        for (int n = 0; n <= nm_hw; ++n)
            for (int m = 0; m <= nm_hw; ++m)
                worst = std::max(worst, std::abs(u_element(n, m, z)
                                                 - std::conj(u_element(m, n, -z))));
        s.checks.push_back(make_check("conjugation_hw", "z=" + fmt(z), worst, tol));
    }

    const int nm_su11 = cap_index(15, opt);
    for (double k : kKSet) {
        for (const Complex& z : standard_z_set(1.5)) {
            double worst = 0.0;
            for (int n = 0; n <= nm_su11; ++n)
                for (int m = 0; m <= nm_su11; ++m)
                    worst = std::max(worst, std::abs(v_element(k, n, m, z)
                                                     - std::conj(v_element(k, m, n, -z))));
            s.checks.push_back(
                make_check("conjugation_su11", "K=" + fmt(k) + " z=" + fmt(z), worst, tol));
        }
    }

    const std::vector<double> grid = linspace(-1.2, 1.2, 5);
    for (double j : kJSet) {
        const int tj = AlgebraSpec::su2(j).two_j();
        const int nm = cap_index(tj, opt);
        for (double re : grid) {
            for (double im : grid) {
                const Complex z(re, im);
                double worst = 0.0;
                for (int n = 0; n <= nm; ++n)
                    for (int m = 0; m <= nm; ++m)
                        worst = std::max(worst, std::abs(w_element(j, n, m, z)
                                                         - std::conj(w_element(j, m, n, -z))));
                s.checks.push_back(
                    make_check("conjugation_su2", "J=" + fmt(j) + " z=" + fmt(z), worst, tol));
            }
        }
    }
    return s;
}

// ---- criterion 5: column unitarity ----------------------------------------

SuiteResult suite_unitarity(const VerifyOptions& opt) {
    SuiteResult s{"unitarity", {}, 0, 0.0};

    // su(2): exact finite sums
    const std::vector<double> grid = linspace(-1.2, 1.2, 5);
    for (double j : kJSet) {
        const int tj = AlgebraSpec::su2(j).two_j();
        for (double re : grid) {
            for (double im : grid) {
                const Complex z(re, im);
                double worst = 0.0;
                for (int m = 0; m <= tj; ++m) {
                    KahanSum total;
                    for (int n = 0; n <= tj; ++n) total.add(std::norm(w_element(j, n, m, z)));
                    worst = std::max(worst, std::abs(total.value() - 1.0));
                }
                s.checks.push_back(make_check("unitarity_su2",
                                              "J=" + fmt(j) + " z=" + fmt(z), worst, 1e-12));
            }
        }
    }

    // Heisenberg-Weyl: fixed tail cutoff m+60
    const int m_hw = cap_index(10, opt);
    for (const Complex& z : standard_z_set(1.5)) {
        double worst = 0.0;
        for (int m = 0; m <= m_hw; ++m) {
            KahanSum total;
            for (int k = 0; k <= m + 60; ++k) total.add(std::norm(u_element(k, m, z)));
            worst = std::max(worst, std::abs(total.value() - 1.0));
        }
        s.checks.push_back(make_check("unitarity_hw", "z=" + fmt(z) + " tail=m+60",
                                      worst, 1e-10));
    }

    // su(1,1): the column mass spreads with K and |z| (negative-binomial-like
    // tail), so the cutoff is extended adaptively past m+60 until the terms
    // are negligible.
    const int m_su11 = cap_index(10, opt);
    for (double k : kKSet) {
        for (const Complex& z : standard_z_set(1.5)) {
            double worst = 0.0;
            int deepest = 0;
            for (int m = 0; m <= m_su11; ++m) {
                KahanSum total;
                int consec_small = 0;
                int idx = 0;
                for (; idx < 4000; ++idx) {
                    const double term = std::norm(v_element(k, idx, m, z));
                    total.add(term);
                    consec_small = (idx >= m + 60 && term < 1e-15) ? consec_small + 1 : 0;
                    if (consec_small >= 3) break;
                }
                deepest = std::max(deepest, idx);
                worst = std::max(worst, std::abs(total.value() - 1.0));
            }
            s.checks.push_back(make_check(
                "unitarity_su11",
                "K=" + fmt(k) + " z=" + fmt(z) + " tail<=" + std::to_string(deepest),
                worst, 1e-10));
        }
    }
    return s;
}

// ---- criterion 6: Laguerre factorization -----------------------------------

SuiteResult suite_factorization(const VerifyOptions& opt) {
    SuiteResult s{"factorization", {}, 0, 0.0};
    Rng rng = suite_rng(opt, 6);
    const int m_cap = cap_index(8, opt);
    for (int point = 0; point < 20; ++point) {
        Complex z, w;
        do {
            z = rng.disk(1.0);
            w = rng.disk(1.0);
        } while (std::abs(z + w) < 0.2);
        for (int big_n = 0; big_n <= 4; ++big_n) {
            for (int m = 0; m <= m_cap; ++m) {
                s.checks.push_back(
                    factorization_check(m, big_n, z, w, m + big_n + 120, 1e-8));
            }
        }
    }
    return s;
}

// ---- criterion 7: group law -------------------------------------------------

SuiteResult suite_group_law(const VerifyOptions& opt) {
    SuiteResult s{"group_law", {}, 0, 0.0};
    Rng rng = suite_rng(opt, 7);
    const int nm = cap_index(6, opt);
    for (int point = 0; point < 10; ++point) {
        const Complex z = rng.disk(1.0);
        const Complex w = rng.disk(1.0);
        double worst = 0.0;
        for (int n = 0; n <= nm; ++n)
            for (int m = 0; m <= nm; ++m)
                worst = std::max(worst,
                                 group_law_check(z, w, n, m, n + m + 60, 1e-10).residual);
        s.checks.push_back(make_check(
            "group_law", "z=" + fmt(z) + " w=" + fmt(w) + " nm<=" + std::to_string(nm),
            worst, 1e-10));
    }
    return s;
}

// ---- criterion 8: exchange relations ---------------------------------------

SuiteResult suite_exchange(const VerifyOptions& opt) {
    SuiteResult s{"exchange", {}, 0, 0.0};
    const int dim = std::min(128, opt.dim_max);

    // su(1,1): the sampled domain keeps f away from 0 and from the log
    // branch cut, and caps |a c e^{2b}|: that product drives both the
    // convergence of the anti-normally ordered series on the truncated
    // space and the phase cancellation in its partial sums (see the
    // measured conditioning thresholds in the tests).
    {
        Rng rng = suite_rng(opt, 8);
        int accepted = 0;
        while (accepted < 50) {
            const Complex a = rng.disk(0.8);
            const Complex b = rng.disk(0.8);
            const Complex c = rng.disk(0.8);
            const Complex f = std::exp(-b) - a * c * std::exp(b);
            if (std::abs(f) <= 0.1 || std::abs(std::arg(f)) >= 3.0) continue;
            if (std::abs(a * c * std::exp(2.0 * b)) > 0.1) continue;
            ++accepted;
            bool first = true;
            for (double k : kKSet) {
                const ExchangeResiduals r =
                    exchange_residuals(AlgebraSpec::su11(k), a, b, c, dim);
                const std::string pt = "a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c);
                if (first) {
                    s.checks.push_back(
                        make_check("exchange_su11_2x2", pt, r.fundamental, 1e-12));
                    first = false;
                }
                s.checks.push_back(make_check("exchange_su11_spin",
                                              "K=" + fmt(k) + " " + pt, r.spin_rep, 1e-8));
            }
            s.max_dim_used = std::max(s.max_dim_used, dim);
        }
    }

    // su(2): exact finite dimensions. Small |f| inflates the normal-ordered
    // parameters (x, z ~ 1/|f|, diagonal ~ |f|^{-2J}) and with them the
    // rounding of the 2J+1-dimensional products, so the documented domain
    // keeps |f| > 0.2.
    {
        Rng rng = suite_rng(opt, 9);
        int accepted = 0;
        while (accepted < 50) {
            const Complex a = rng.disk(0.8);
            const Complex b = rng.disk(0.8);
            const Complex c = rng.disk(0.8);
            const Complex f = std::exp(-b) + a * c * std::exp(b);
            if (std::abs(f) <= 0.2) continue;
            ++accepted;
            bool first = true;
            for (double j : kJSetExchange) {
                const ExchangeResiduals r =
                    exchange_residuals(AlgebraSpec::su2(j), a, b, c, dim);
                const std::string pt = "a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c);
                if (first) {
                    s.checks.push_back(
                        make_check("exchange_su2_2x2", pt, r.fundamental, 1e-12));
                    first = false;
                }
                s.checks.push_back(make_check("exchange_su2_spin",
                                              "J=" + fmt(j) + " " + pt, r.spin_rep, 1e-8));
            }
        }
    }
    return s;
}

// ---- criterion 9: disentangling formulas -----------------------------------

SuiteResult suite_disentangling(const VerifyOptions& opt) {
    SuiteResult s{"disentangling", {}, 0, 0.0};
    const int dim = std::min(128, opt.dim_max);
    Rng rng = suite_rng(opt, 10);

    for (int i = 0; i < 10; ++i) {
        const Complex z = rng.disk(1.2);
        s.checks.push_back(
            verify_disentangling(AlgebraSpec::heisenberg_weyl(), z, dim, 1e-8));
        s.checks.push_back(bch_check(z, dim, 1e-9));
    }
    // The su(1,1) anti-normal ordering blows up on the truncated space once
    // sinh^2|z| approaches 1 (growing middle factor), and its partial sums
    // cancel violently well before that; |z| <= 0.45 at D=64 keeps the
    // stable-block residual two orders under the tolerance.
    const int dim_su11 = std::min(64, opt.dim_max);
    for (int i = 0; i < 10; ++i) {
        const Complex z = rng.disk(0.45);
        const double k = kKSet[i % kKSet.size()];
        s.checks.push_back(verify_disentangling(AlgebraSpec::su11(k), z, dim_su11, 1e-8));
    }
    for (int i = 0; i < 10; ++i) {
        // principal patch of the tan variable, radius limited so the
        // (1+|eta|^2)^{2J} amplification stays benign at J = 5
        const Complex z = rng.disk(1.0);
        const double j = kJSet[i % kJSet.size()];
        s.checks.push_back(verify_disentangling(AlgebraSpec::su2(j), z, dim, 1e-8));
    }
    s.max_dim_used = dim;
    return s;
}

// ---- criterion 10: extended operators (t != 0) ------------------------------

SuiteResult suite_extended(const VerifyOptions& opt) {
    SuiteResult s{"extended", {}, 0, 0.0};
    Rng rng = suite_rng(opt, 11);
    const OracleConfig cfg = oracle_cfg(opt);
    const int nm = cap_index(4, opt);

    for (int i = 0; i < 10; ++i) {
        const Complex z = rng.disk(1.0);
        const double t = rng.uniform(-1.0, 1.0);
        const double k = kKSet[i % kKSet.size()];
        const double j = kJSet[i % kJSet.size()];
        const AlgebraSpec su11 = AlgebraSpec::su11(k);
        const AlgebraSpec su2 = AlgebraSpec::su2(j);
        const std::string pt = "z=" + fmt(z) + " t=" + fmt(t);

        {
            const OracleBlock blk = oracle_block(su11, z, t, nm, nm, cfg);
            s.max_dim_used = std::max(s.max_dim_used, blk.dim_used);
            const ComplexMatrix u =
                expm_antihermitian(generator(su11, blk.dim_used, z, t));
            const double unit_res =
                (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols()))
                    .cwiseAbs()
                    .maxCoeff();
            s.checks.push_back(make_check("extended_su11_unitarity",
                                          "K=" + fmt(k) + " " + pt + " dim="
                                              + std::to_string(blk.dim_used),
                                          unit_res, 1e-11));

            const OracleBlock blk0 = oracle_block(su11, z, 0.0, nm, nm, cfg);
            double worst = 0.0;
            for (int n = 0; n <= nm; ++n)
                for (int m = 0; m <= nm; ++m)
                    worst = std::max(worst,
                                     std::abs(v_element(k, n, m, z) - blk0.values(n, m)));
            s.checks.push_back(make_check("extended_su11_t0_reduction",
                                          "K=" + fmt(k) + " " + pt, worst, 1e-9));
        }
        {
            const int d = su2.su2_dim();
            const ComplexMatrix u = expm_antihermitian(generator(su2, d, z, t));
            const double unit_res =
                (u * u.adjoint() - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
            s.checks.push_back(make_check("extended_su2_unitarity",
                                          "J=" + fmt(j) + " " + pt, unit_res, 1e-11));

            const int nm2 = std::min(nm, su2.two_j());
            const OracleBlock blk0 = oracle_block(su2, z, 0.0, nm2, nm2, cfg);
            double worst = 0.0;
            for (int n = 0; n <= nm2; ++n)
                for (int m = 0; m <= nm2; ++m)
                    worst = std::max(worst,
                                     std::abs(w_element(j, n, m, z) - blk0.values(n, m)));
            s.checks.push_back(make_check("extended_su2_t0_reduction",
                                          "J=" + fmt(j) + " " + pt, worst, 1e-9));
        }
    }
    return s;
}

} // namespace

int SuiteResult::failed() const {
    int count = 0;
    for (const IdentityCheck& c : checks)
        if (!c.passed) ++count;
    return count;
}

const IdentityCheck* SuiteResult::worst_check() const {
    const IdentityCheck* worst = nullptr;
    double worst_ratio = -1.0;
    for (const IdentityCheck& c : checks) {
        const double ratio = c.tol > 0.0 ? c.residual / c.tol : c.residual;
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst = &c;
        }
    }
    return worst;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "hw_oracle",  "su11_oracle",   "su2_oracle", "conjugation",   "unitarity",
        "factorization", "group_law", "exchange",   "disentangling", "extended"};
    return names;
}

const std::vector<std::string>& identity_suite_names() {
    static const std::vector<std::string> names = {"factorization", "group_law",
                                                   "exchange", "disentangling"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult s;
    if (name == "hw_oracle") s = suite_hw_oracle(opt);
    else if (name == "su11_oracle") s = suite_su11_oracle(opt);
    else if (name == "su2_oracle") s = suite_su2_oracle(opt);
    else if (name == "conjugation") s = suite_conjugation(opt);
    else if (name == "unitarity") s = suite_unitarity(opt);
    else if (name == "factorization") s = suite_factorization(opt);
    else if (name == "group_law") s = suite_group_law(opt);
    else if (name == "exchange") s = suite_exchange(opt);
    else if (name == "disentangling") s = suite_disentangling(opt);
    else if (name == "extended") s = suite_extended(opt);
    else throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    s.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(run_suite(n, opt));
    return out;
}

} // namespace gcop
