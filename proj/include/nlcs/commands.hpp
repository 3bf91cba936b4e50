#pragma once

// Command-level entry points shared by the CLI binary and the test suites:
// sweep specs with JSON-config overlay, the fig1/fig2 sweep runners, and the
// single-state dump.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nlcs/io.hpp"
#include "nlcs/sweeps.hpp"

namespace nlcs {

enum class OutputFormat { csv, json };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

inline StateKind parse_family(const std::string& s) {
    if (s == "coherent") return StateKind::coherent;
    if (s == "added") return StateKind::photon_added;
    if (s == "negative") return StateKind::negative_m;
    throw std::invalid_argument("unknown family '" + s +
                                "' (expected coherent, added or negative)");
}

inline std::string family_name(StateKind kind) {
    switch (kind) {
        case StateKind::coherent: return "coherent";
        case StateKind::photon_added: return "added";
        case StateKind::negative_m: return "negative";
    }
    return "?";
}

/// Everything a fig1/fig2 run needs. The JSON config schema mirrors these
/// field names (policy flattened to tail_tol / max_dim).
struct SweepSpec {
    StateKind family = StateKind::negative_m;
    std::vector<unsigned> m_values = {1, 5, 10};
    double alpha_min = 0.0;
    double alpha_max = 4.0;
    double alpha_step = 0.05;
    double alpha_phase = 0.0;
    TruncationPolicy policy{};
    std::string output_path;  // empty: stdout
    OutputFormat format = OutputFormat::csv;

    void validate() const {
        if (!(alpha_step > 0.0)) throw std::invalid_argument("SweepSpec: alpha_step must be > 0");
        if (!(alpha_min <= alpha_max))
            throw std::invalid_argument("SweepSpec: alpha_min must be <= alpha_max");
        if (m_values.empty() && family != StateKind::coherent)
            throw std::invalid_argument("SweepSpec: m_values must be nonempty");
        if (!policy.valid()) throw std::invalid_argument("SweepSpec: invalid truncation policy");
    }

    AlphaGrid grid() const { return {alpha_min, alpha_max, alpha_step}; }
};

inline SweepSpec default_fig1_spec() { return SweepSpec{}; }

inline SweepSpec default_fig2_spec() {
    SweepSpec spec;
    spec.alpha_max = 5.0;
    return spec;
}

/// Overlay a JSON config onto a spec; unknown keys are rejected.
inline void apply_config(SweepSpec& spec, const nlohmann::json& cfg) {
    for (const auto& [key, value] : cfg.items()) {
        if (key == "family")
            spec.family = parse_family(value.get<std::string>());
        else if (key == "m_values")
            spec.m_values = value.get<std::vector<unsigned>>();
        else if (key == "alpha_min")
            spec.alpha_min = value.get<double>();
        else if (key == "alpha_max")
            spec.alpha_max = value.get<double>();
        else if (key == "alpha_step")
            spec.alpha_step = value.get<double>();
        else if (key == "alpha_phase")
            spec.alpha_phase = value.get<double>();
        else if (key == "tail_tol")
            spec.policy.tail_tol = value.get<double>();
        else if (key == "max_dim")
            spec.policy.max_dim = value.get<std::size_t>();
        else if (key == "output_path")
            spec.output_path = value.get<std::string>();
        else if (key == "format")
            spec.format = parse_format(value.get<std::string>());
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

inline void apply_config_file(SweepSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    nlohmann::json cfg;
    in >> cfg;
    apply_config(spec, cfg);
}

namespace detail {

inline void deliver(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
    out << payload;
    if (!out) throw std::runtime_error("write failed for '" + output_path + "'");
}

}  // namespace detail

/// Quadrature-variance sweep (columns m, alpha, var_x, var_p, dim_used),
/// serialized per the spec's format. Returns the serialized payload.
inline std::string render_fig1(const SweepSpec& spec) {
    spec.validate();
    const auto rows =
        variance_sweep(spec.family, spec.m_values, spec.grid(), spec.alpha_phase, spec.policy);
    std::ostringstream out;
    if (spec.format == OutputFormat::csv)
        write_variance_csv(rows, out);
    else
        out << variance_rows_json(rows).dump(2) << '\n';
    return out.str();
}

/// Mandel-q sweep (columns m, abs_alpha, mandel_q, dim_used).
inline std::string render_fig2(const SweepSpec& spec) {
    spec.validate();
    const auto rows =
        mandel_sweep(spec.family, spec.m_values, spec.grid(), spec.alpha_phase, spec.policy);
    std::ostringstream out;
    if (spec.format == OutputFormat::csv)
        write_mandel_csv(rows, out);
    else
        out << mandel_rows_json(rows).dump(2) << '\n';
    return out.str();
}

inline void run_fig1(const SweepSpec& spec) { detail::deliver(render_fig1(spec), spec.output_path); }
inline void run_fig2(const SweepSpec& spec) { detail::deliver(render_fig2(spec), spec.output_path); }

/// One-state dump request.
struct StateRequest {
    StateKind family = StateKind::coherent;
    double alpha_abs = 0.0;
    double alpha_phase = 0.0;
    unsigned m = 0;
    std::optional<std::size_t> dim_override;
    TruncationPolicy policy{};
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
};

inline std::string render_state(const StateRequest& req) {
    const StateFamily family(req.family, alpha_on_ray(req.alpha_abs, req.alpha_phase), req.m);
    const std::size_t dim =
        req.dim_override ? *req.dim_override
                         : choose_dim(family.alpha, signed_m(family), req.policy);
    const FockState s = make_state(family, dim, req.policy.tail_tol);
    std::ostringstream out;
    if (req.format == OutputFormat::csv)
        write_state_csv(s, out);
    else
        out << state_json(s).dump(2) << '\n';
    return out.str();
}

inline void run_state(const StateRequest& req) {
    detail::deliver(render_state(req), req.output_path);
}

}  // namespace nlcs
