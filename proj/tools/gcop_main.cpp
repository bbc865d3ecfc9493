// gcop: evaluate coherent-operator matrix elements (closed form and
// truncated-exponential oracle), sweep grids, and run the verification
// suites. Exit codes: 0 success, 2 verification failure, 3 oracle
// non-convergence, 4 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcop/report.hpp"

namespace {

using gcop::Complex;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& s) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw UsageError("expected complex value as 're,im', got '" + s + "'");
    char* end = nullptr;
    const double re = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + comma) throw UsageError("bad real part in '" + s + "'");
    const std::string ims = s.substr(comma + 1);
    const double im = std::strtod(ims.c_str(), &end);
    if (*end != '\0') throw UsageError("bad imaginary part in '" + s + "'");
    return {re, im};
}

gcop::AlgebraSpec make_spec(const std::string& algebra, double spin, bool spin_set) {
    if (algebra == "hw") return gcop::AlgebraSpec::heisenberg_weyl();
    if (algebra == "su11") {
        if (!spin_set) throw UsageError("--spin is required for su11");
        return gcop::AlgebraSpec::su11(spin);
    }
    if (algebra == "su2") {
        if (!spin_set) throw UsageError("--spin is required for su2");
        return gcop::AlgebraSpec::su2(spin);
    }
    throw UsageError("unknown algebra '" + algebra + "' (expected hw, su11 or su2)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

void emit_error_record(const std::string& code, const std::string& message) {
    nlohmann::ordered_json e;
    e["error"] = code;
    e["message"] = message;
    std::cout << e.dump() << '\n';
}

// --- element ---------------------------------------------------------------

struct ElementArgs {
    std::string algebra;
    double spin = 0.0;
    bool spin_set = false;
    int n = 0, m = 0;
    std::string z = "0,0";
    double t = 0.0;
    bool use_oracle = false;
    double tol = 1e-10;
    int dim0 = 0;
    int dim_max = 2048;
    std::string format = "text";
    std::string out;
};

int run_element(const ElementArgs& a) {
    gcop::ElementQuery q;
    q.algebra = make_spec(a.algebra, a.spin, a.spin_set);
    q.n = a.n;
    q.m = a.m;
    q.z = parse_complex(a.z);
    q.t = a.t;
    q.validate();

    if (a.format != "text" && a.format != "json")
        throw UsageError("--format must be text or json for element");

    const bool oracle_only = q.t != 0.0;
    std::optional<Complex> closed;
    if (!oracle_only) closed = gcop::element(q);

    std::optional<gcop::OracleResult> oracle;
    if (a.use_oracle || oracle_only) {
        gcop::OracleConfig cfg;
        cfg.tol = a.tol;
        cfg.dim0 = a.dim0;
        cfg.dim_max = a.dim_max;
        oracle = gcop::oracle_element(q, cfg);
    }

    if (a.format == "json") {
        nlohmann::ordered_json o;
        o["algebra"] = a.algebra;
        if (q.algebra.kind != gcop::Algebra::HeisenbergWeyl) o["spin"] = q.algebra.spin;
        o["n"] = q.n;
        o["m"] = q.m;
        o["z"] = {{"re", q.z.real()}, {"im", q.z.imag()}};
        o["t"] = q.t;
        if (closed)
            o["closed"] = {{"re", closed->real()}, {"im", closed->imag()}};
        if (oracle) {
            o["oracle"] = {{"re", oracle->value.real()},
                           {"im", oracle->value.imag()},
                           {"est_error", oracle->est_error},
                           {"dim_used", oracle->dim_used}};
        }
        if (closed && oracle) o["abs_diff"] = std::abs(*closed - oracle->value);
        write_output(a.out, o.dump(2) + "\n");
    } else {
        std::string text;
        if (closed) text += "closed = " + gcop::format_complex_pair(*closed) + "\n";
        if (oracle) {
            text += "oracle = " + gcop::format_complex_pair(oracle->value) +
                    " est_error=" + gcop::format_g17(oracle->est_error) +
                    " dim=" + std::to_string(oracle->dim_used) + "\n";
        }
        if (closed && oracle)
            text += "abs_diff = " + gcop::format_g17(std::abs(*closed - oracle->value)) +
                    "\n";
        write_output(a.out, text);
    }
    return 0;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
    std::string algebra;
    double spin = 0.0;
    bool spin_set = false;
    int n_min = 0, n_max = 0, m_min = 0, m_max = 0;
    double re_min = 0.0, re_max = 0.0;
    int re_steps = 1;
    double im_min = 0.0, im_max = 0.0;
    int im_steps = 1;
    double t = 0.0;
    std::string source = "closed";
    double tol = 1e-10;
    int dim_max = 2048;
    std::string format = "csv";
    std::string out;
};

double grid_point(double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
}

int run_sweep(const SweepArgs& a) {
    const gcop::AlgebraSpec spec = make_spec(a.algebra, a.spin, a.spin_set);
    if (a.re_steps < 1 || a.im_steps < 1) throw UsageError("grid steps must be >= 1");
    if (a.n_min < 0 || a.m_min < 0 || a.n_max < a.n_min || a.m_max < a.m_min)
        throw UsageError("bad index range");
    if (a.source != "closed" && a.source != "oracle" && a.source != "both")
        throw UsageError("--source must be closed, oracle or both");

    std::vector<std::string> sources;
    if (a.t != 0.0) {
        sources = {"oracle"}; // no closed form exists for t != 0
    } else if (a.source == "both") {
        sources = {"closed", "oracle"};
    } else {
        sources = {a.source};
    }

    gcop::OracleConfig cfg;
    cfg.tol = a.tol;
    cfg.dim_max = a.dim_max;

    std::vector<gcop::SweepRow> rows;
    for (int n = a.n_min; n <= a.n_max; ++n) {
        for (int m = a.m_min; m <= a.m_max; ++m) {
            for (int i = 0; i < a.re_steps; ++i) {
                for (int j = 0; j < a.im_steps; ++j) {
                    const Complex z(grid_point(a.re_min, a.re_max, a.re_steps, i),
                                    grid_point(a.im_min, a.im_max, a.im_steps, j));
                    for (const std::string& source : sources) {
                        gcop::SweepRow r;
                        r.algebra = a.algebra;
                        r.spin = spec.kind == gcop::Algebra::HeisenbergWeyl ? 0.0
                                                                            : spec.spin;
                        r.n = n;
                        r.m = m;
                        r.re_z = z.real();
                        r.im_z = z.imag();
                        r.t = a.t;
                        r.source = source;
                        r.status = "ok";
                        try {
                            gcop::ElementQuery q;
                            q.algebra = spec;
                            q.n = n;
                            q.m = m;
                            q.z = z;
                            q.t = a.t;
                            Complex value;
                            if (source == "closed") {
                                value = gcop::element(q);
                            } else {
                                const gcop::OracleResult res = gcop::oracle_element(q, cfg);
                                value = res.value;
                                r.has_est = true;
                                r.est_error = res.est_error;
                            }
                            r.has_value = true;
                            r.re_val = value.real();
                            r.im_val = value.imag();
                            r.abs2 = std::norm(value);
                            if (spec.kind == gcop::Algebra::SU2 &&
                                gcop::frame(spec, z).eta_pole)
                                r.status = "pole"; // kappa form still valid, tan variable is not
                        } catch (const gcop::NoConvergenceError&) {
                            r.status = "noconv";
                        } catch (const std::exception&) {
                            r.status = "error";
                        }
                        rows.push_back(std::move(r));
                    }
                }
            }
        }
    }

    if (a.format == "json") {
        write_output(a.out, gcop::sweep_json(rows).dump(2) + "\n");
    } else if (a.format == "csv") {
        std::string text = gcop::sweep_csv_header() + "\n";
        for (const gcop::SweepRow& r : rows) text += gcop::sweep_csv_line(r) + "\n";
        write_output(a.out, text);
    } else {
        throw UsageError("--format must be csv or json for sweep");
    }
    return 0;
}

// --- verify / identities -----------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> suites;
    std::uint64_t seed = 12345;
    int m_max = -1;
    double oracle_tol = 1e-10;
    int dim_max = 2048;
    std::string format = "text";
    std::string out;
    bool timing = false;
    bool no_checks = false;
};

int run_verify(const VerifyArgs& a, bool identities_only) {
    if (a.format != "text" && a.format != "json")
        throw UsageError("--format must be text or json for verify/identities");
    const std::vector<std::string>& all =
        identities_only ? gcop::identity_suite_names() : gcop::suite_names();
    std::vector<std::string> names;
    if (a.suites.empty()) {
        names = all;
    } else {
        for (const std::string& s : a.suites) {
            if (std::find(all.begin(), all.end(), s) == all.end())
                throw UsageError("unknown suite '" + s + "'");
            names.push_back(s);
        }
    }

    gcop::VerifyOptions opt;
    opt.seed = a.seed;
    opt.m_max = a.m_max;
    opt.oracle_tol = a.oracle_tol;
    opt.dim_max = a.dim_max;

    const std::vector<gcop::SuiteResult> results = gcop::run_suites(names, opt);
    int failed = 0;
    for (const gcop::SuiteResult& s : results) failed += s.failed();

    if (a.format == "json") {
        write_output(a.out,
                     gcop::report_json(results, opt.seed, !a.no_checks, a.timing).dump(2) +
                         "\n");
    } else {
        write_output(a.out, gcop::report_text(results));
    }
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix elements of coherent and generalized coherent operators"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "", "key=value file mirroring the flags, one [section] per subcommand");

    ElementArgs el;
    CLI::App* element = app.add_subcommand("element", "evaluate one matrix element");
    element->add_option("--algebra", el.algebra, "hw | su11 | su2")->required();
    CLI::Option* el_spin = element->add_option("--spin", el.spin, "K (su11) or J (su2)");
    element->add_option("-n,--bra", el.n, "bra index");
    element->add_option("-m,--ket", el.m, "ket index");
    element->add_option("--z", el.z, "displacement as re,im")->required();
    element->add_option("--t", el.t, "phase parameter of the extended operator");
    element->add_flag("--oracle", el.use_oracle, "also evaluate the oracle");
    element->add_option("--tol", el.tol, "oracle stability tolerance");
    element->add_option("--dim0", el.dim0, "oracle starting cutoff (0 = auto)");
    element->add_option("--dim-max", el.dim_max, "oracle cutoff cap");
    element->add_option("--format", el.format, "text | json");
    element->add_option("--out", el.out, "output file (default stdout)");

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand("sweep", "tabulate elements over a grid");
    sweep->add_option("--algebra", sw.algebra, "hw | su11 | su2")->required();
    CLI::Option* sw_spin = sweep->add_option("--spin", sw.spin, "K (su11) or J (su2)");
    sweep->add_option("--n-min", sw.n_min);
    sweep->add_option("--n-max", sw.n_max);
    sweep->add_option("--m-min", sw.m_min);
    sweep->add_option("--m-max", sw.m_max);
    sweep->add_option("--re-min", sw.re_min);
    sweep->add_option("--re-max", sw.re_max);
    sweep->add_option("--re-steps", sw.re_steps);
    sweep->add_option("--im-min", sw.im_min);
    sweep->add_option("--im-max", sw.im_max);
    sweep->add_option("--im-steps", sw.im_steps);
    sweep->add_option("--t", sw.t, "phase parameter (forces the oracle)");
    sweep->add_option("--source", sw.source, "closed | oracle | both");
    sweep->add_option("--tol", sw.tol, "oracle stability tolerance");
    sweep->add_option("--dim-max", sw.dim_max, "oracle cutoff cap");
    sweep->add_option("--format", sw.format, "csv | json");
    sweep->add_option("--out", sw.out, "output file (default stdout)");

    VerifyArgs vf;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", vf.suites, "subset of suites (repeatable)");
    verify->add_option("--seed", vf.seed, "seed for randomized sweeps");
    verify->add_option("--m-max", vf.m_max, "cap swept indices / degrees");
    verify->add_option("--oracle-tol", vf.oracle_tol, "oracle stability tolerance");
    verify->add_option("--dim-max", vf.dim_max, "oracle cutoff cap");
    verify->add_option("--format", vf.format, "text | json");
    verify->add_option("--out", vf.out, "output file (default stdout)");
    verify->add_flag("--timing", vf.timing, "include wall-clock in JSON reports");
    verify->add_flag("--no-checks", vf.no_checks, "omit per-check records from JSON");

    VerifyArgs id;
    CLI::App* identities =
        app.add_subcommand("identities", "run only the identity suites");
    identities->add_option("--suite", id.suites, "subset of identity suites");
    identities->add_option("--seed", id.seed, "seed for randomized sweeps");
    identities->add_option("--m-max", id.m_max, "cap swept indices / degrees");
    identities->add_option("--oracle-tol", id.oracle_tol, "oracle stability tolerance");
    identities->add_option("--dim-max", id.dim_max, "oracle cutoff cap");
    identities->add_option("--format", id.format, "text | json");
    identities->add_option("--out", id.out, "output file (default stdout)");
    identities->add_flag("--timing", id.timing, "include wall-clock in JSON reports");
    identities->add_flag("--no-checks", id.no_checks, "omit per-check records from JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 4;
    }

    // hard cap override from the environment
    if (const char* env = std::getenv("ORACLE_DIM_MAX")) {
        const int cap = std::atoi(env);
        if (cap < 2) {
            emit_error_record("usage", "ORACLE_DIM_MAX must be an integer >= 2");
            return 4;
        }
        el.dim_max = cap;
        sw.dim_max = cap;
        vf.dim_max = cap;
        id.dim_max = cap;
    }
    el.spin_set = el_spin->count() > 0;
    sw.spin_set = sw_spin->count() > 0;

    try {
        if (element->parsed()) return run_element(el);
        if (sweep->parsed()) return run_sweep(sw);
        if (verify->parsed()) return run_verify(vf, false);
        if (identities->parsed()) return run_verify(id, true);
        emit_error_record("usage", "no subcommand given");
        return 4;
    } catch (const gcop::NoConvergenceError& e) {
        emit_error_record("no_convergence", e.what());
        return 3;
    } catch (const UsageError& e) {
        emit_error_record("usage", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        emit_error_record("usage", e.what());
        return 4;
    } catch (const std::out_of_range& e) {
        emit_error_record("usage", e.what());
        return 4;
    } catch (const std::domain_error& e) {
        emit_error_record("usage", e.what());
        return 4;
    } catch (const std::exception& e) {
        emit_error_record("internal", e.what());
        return 1;
    }
}
