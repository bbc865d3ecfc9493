#include "gcop/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gcop {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    out.push_back(field);
    return out;
}

double parse_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

} // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex_pair(Complex z) {
    return format_g17(z.real()) + "," + format_g17(z.imag());
}

std::string sweep_csv_header() {
    return "algebra,spin,n,m,re_z,im_z,t,re_val,im_val,abs2,source,est_error,status";
}

std::string sweep_csv_line(const SweepRow& r) {
    std::string line = r.algebra;
    line += ',' + format_g17(r.spin);
    line += ',' + std::to_string(r.n);
    line += ',' + std::to_string(r.m);
    line += ',' + format_g17(r.re_z);
    line += ',' + format_g17(r.im_z);
    line += ',' + format_g17(r.t);
    if (r.has_value) {
        line += ',' + format_g17(r.re_val);
        line += ',' + format_g17(r.im_val);
        line += ',' + format_g17(r.abs2);
    } else {
        line += ",,,";
    }
    line += ',' + r.source;
    line += ',';
    if (r.has_est) line += format_g17(r.est_error);
    line += ',' + r.status;
    return line;
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
    std::vector<SweepRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            if (line != sweep_csv_header())
                throw std::runtime_error("parse_sweep_csv: unexpected header");
            header = false;
            continue;
        }
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 13) throw std::runtime_error("parse_sweep_csv: bad field count");
        SweepRow r;
        r.algebra = f[0];
        r.spin = parse_double(f[1]);
        r.n = std::atoi(f[2].c_str());
        r.m = std::atoi(f[3].c_str());
        r.re_z = parse_double(f[4]);
        r.im_z = parse_double(f[5]);
        r.t = parse_double(f[6]);
        r.has_value = !f[7].empty();
        if (r.has_value) {
            r.re_val = parse_double(f[7]);
            r.im_val = parse_double(f[8]);
            r.abs2 = parse_double(f[9]);
        }
        r.source = f[10];
        r.has_est = !f[11].empty();
        if (r.has_est) r.est_error = parse_double(f[11]);
        r.status = f[12];
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json o;
        o["algebra"] = r.algebra;
        o["spin"] = r.spin;
        o["n"] = r.n;
        o["m"] = r.m;
        o["z"] = {{"re", r.re_z}, {"im", r.im_z}};
        o["t"] = r.t;
        if (r.has_value) {
            o["value"] = {{"re", r.re_val}, {"im", r.im_val}};
            o["abs2"] = r.abs2;
        }
        o["source"] = r.source;
        if (r.has_est) o["est_error"] = r.est_error;
        o["status"] = r.status;
        arr.push_back(std::move(o));
    }
    nlohmann::ordered_json root;
    root["rows"] = std::move(arr);
    return root;
}

nlohmann::ordered_json check_json(const IdentityCheck& c) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["params"] = c.params;
    o["residual"] = c.residual;
    o["tol"] = c.tol;
    o["passed"] = c.passed;
    return o;
}

nlohmann::ordered_json report_json(const std::vector<SuiteResult>& suites,
                                   std::uint64_t seed, bool include_checks,
                                   bool include_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    int total = 0, failed = 0;
    for (const SuiteResult& s : suites) {
        nlohmann::ordered_json o;
        o["suite"] = s.suite;
        o["total"] = s.total();
        o["passed"] = s.passed();
        o["failed"] = s.failed();
        if (const IdentityCheck* w = s.worst_check()) {
            o["worst_residual"] = w->residual;
            o["worst_tol"] = w->tol;
            o["worst_check"] = w->name;
            o["worst_params"] = w->params;
        }
        if (s.max_dim_used > 0) o["max_oracle_dim"] = s.max_dim_used;
        if (include_timing) o["wall_seconds"] = s.wall_seconds;
        if (include_checks) {
            nlohmann::ordered_json cs = nlohmann::ordered_json::array();
            for (const IdentityCheck& c : s.checks) cs.push_back(check_json(c));
            o["checks"] = std::move(cs);
        }
        arr.push_back(std::move(o));
        total += s.total();
        failed += s.failed();
    }
    nlohmann::ordered_json root;
    root["seed"] = seed;
    root["total"] = total;
    root["passed"] = total - failed;
    root["failed"] = failed;
    root["suites"] = std::move(arr);
    return root;
}

std::string report_text(const std::vector<SuiteResult>& suites) {
    std::ostringstream out;
    int total = 0, failed = 0;
    for (const SuiteResult& s : suites) {
        total += s.total();
        failed += s.failed();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-14s", s.suite.c_str());
        out << (s.failed() == 0 ? "[PASS] " : "[FAIL] ") << buf << " checks=" << s.total()
            << " failed=" << s.failed();
        if (const IdentityCheck* w = s.worst_check()) {
            std::snprintf(buf, sizeof buf, " worst=%.3g (tol %.3g)", w->residual, w->tol);
            out << buf << " at " << w->params;
        }
        std::snprintf(buf, sizeof buf, " [%.2fs]", s.wall_seconds);
        out << buf << '\n';
        if (s.failed() > 0) {
            for (const IdentityCheck& c : s.checks) {
                if (c.passed) continue;
                std::snprintf(buf, sizeof buf, "%.6g (tol %.3g)", c.residual, c.tol);
                out << "    failed: " << c.name << ' ' << c.params << " residual=" << buf
                    << '\n';
            }
        }
    }
    out << (failed == 0 ? "PASS" : "FAIL") << ": " << (total - failed) << '/' << total
        << " checks passed\n";
    return out.str();
}

} // namespace gcop
