#pragma once

// Serialization of sweep tables, state dumps, and verification reports.
// CSV is UTF-8, comma-separated, LF line endings, fixed header row, numbers
// in fixed-precision scientific with 12 significant digits, so identical
// inputs give byte-identical files.

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "nlcs/observables.hpp"
#include "nlcs/sweeps.hpp"
#include "nlcs/verify.hpp"

namespace nlcs {

/// 12 significant digits, scientific. The stable CSV number format.
inline std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

// The undefined-q marker: "nan" in CSV, null in JSON.
inline constexpr const char* kUndefinedCsvToken = "nan";

inline void write_variance_csv(const std::vector<VarianceRow>& rows, std::ostream& out) {
    out << "m,alpha,var_x,var_p,dim_used\n";
    for (const VarianceRow& r : rows)
        out << r.m << ',' << format_sci(r.alpha) << ',' << format_sci(r.var_x) << ','
            << format_sci(r.var_p) << ',' << r.dim_used << '\n';
}

inline void write_mandel_csv(const std::vector<MandelRow>& rows, std::ostream& out) {
    out << "m,abs_alpha,mandel_q,dim_used\n";
    for (const MandelRow& r : rows) {
        out << r.m << ',' << format_sci(r.abs_alpha) << ',';
        if (r.mandel_q)
            out << format_sci(*r.mandel_q);
        else
            out << kUndefinedCsvToken;
        out << ',' << r.dim_used << '\n';
    }
}

inline nlohmann::ordered_json variance_rows_json(const std::vector<VarianceRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VarianceRow& r : rows)
        arr.push_back({{"m", r.m},
                       {"alpha", r.alpha},
                       {"var_x", r.var_x},
                       {"var_p", r.var_p},
                       {"dim_used", r.dim_used}});
    return arr;
}

inline nlohmann::ordered_json mandel_rows_json(const std::vector<MandelRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const MandelRow& r : rows) {
        nlohmann::ordered_json obj = {{"m", r.m}, {"abs_alpha", r.abs_alpha}};
        if (r.mandel_q)
            obj["mandel_q"] = *r.mandel_q;
        else
            obj["mandel_q"] = nullptr;
        obj["dim_used"] = r.dim_used;
        arr.push_back(obj);
    }
    return arr;
}

/// State dump: one row per occupation with real part, imaginary part and
/// probability; footer with norm, dimension and truncation loss.
inline void write_state_csv(const FockState& s, std::ostream& out) {
    out << "n,re,im,prob\n";
    for (std::size_t n = 0; n < s.dim(); ++n)
        out << n << ',' << format_sci(s[n].real()) << ',' << format_sci(s[n].imag())
            << ',' << format_sci(std::norm(s[n])) << '\n';
    out << "# norm," << format_sci(norm(s)) << '\n';
    out << "# dim," << s.dim() << '\n';
    out << "# truncation_loss," << format_sci(s.truncation_loss()) << '\n';
}

inline nlohmann::ordered_json state_json(const FockState& s) {
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < s.dim(); ++n)
        amps.push_back({{"n", n},
                        {"re", s[n].real()},
                        {"im", s[n].imag()},
                        {"prob", std::norm(s[n])}});
    return {{"amplitudes", amps},
            {"norm", norm(s)},
            {"dim", s.dim()},
            {"truncation_loss", s.truncation_loss()}};
}

/// One line per check: status, name, measured residual, tolerance.
inline void write_verify_report(const VerifyReport& report, std::ostream& out) {
    for (const VerifyCheck& c : report.checks)
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name
            << "  residual=" << format_sci(c.residual)
            << "  tol=" << format_sci(c.tolerance) << '\n';
    out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
}

}  // namespace nlcs
