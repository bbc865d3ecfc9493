#ifndef GCOP_REPORT_HPP
#define GCOP_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gcop/verify.hpp"

namespace gcop {

/// 17 significant digits: lossless double round-trip in text form.
std::string format_g17(double x);

/// "re,im", both components with 17 significant digits.
std::string format_complex_pair(Complex z);

/// One sweep output record. Optional numeric fields serialize as empty
/// CSV cells when absent.
struct SweepRow {
    std::string algebra;
    double spin = 0.0;
    int n = 0;
    int m = 0;
    double re_z = 0.0;
    double im_z = 0.0;
    double t = 0.0;
    bool has_value = false;
    double re_val = 0.0;
    double im_val = 0.0;
    double abs2 = 0.0;
    std::string source; // "closed" | "oracle"
    bool has_est = false;
    double est_error = 0.0;
    std::string status; // "ok" | "pole" | "noconv" | "error"
};

std::string sweep_csv_header();
std::string sweep_csv_line(const SweepRow& r);
std::vector<SweepRow> parse_sweep_csv(const std::string& text);

nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows);
nlohmann::ordered_json check_json(const IdentityCheck& c);
nlohmann::ordered_json report_json(const std::vector<SuiteResult>& suites,
                                   std::uint64_t seed, bool include_checks,
                                   bool include_timing);
std::string report_text(const std::vector<SuiteResult>& suites);

} // namespace gcop

#endif
