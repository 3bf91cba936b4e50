// nlcs: construct photon-added and negative-m nonlinear coherent states in a
// truncated Fock space, verify their algebraic identities, and run the
// squeezing / photon-statistics sweeps.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlcs/commands.hpp"
#include "nlcs/io.hpp"
#include "nlcs/verify.hpp"

namespace {

struct SweepFlags {
    std::string config;
    std::string family;
    std::vector<unsigned> m_values;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    double alpha_step = 0.0;
    double alpha_phase = 0.0;
    double tail_tol = 0.0;
    std::size_t max_dim = 0;
    std::string out;
    std::string format;

    CLI::Option* opt_family = nullptr;
    CLI::Option* opt_m = nullptr;
    CLI::Option* opt_alpha_min = nullptr;
    CLI::Option* opt_alpha_max = nullptr;
    CLI::Option* opt_alpha_step = nullptr;
    CLI::Option* opt_alpha_phase = nullptr;
    CLI::Option* opt_tail_tol = nullptr;
    CLI::Option* opt_max_dim = nullptr;
    CLI::Option* opt_out = nullptr;
    CLI::Option* opt_format = nullptr;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
    cmd->add_option("--config", f.config, "JSON config file (flags override it)");
    f.opt_family = cmd->add_option("--family", f.family, "coherent|added|negative");
    f.opt_m = cmd->add_option("--m", f.m_values, "deformation order m (repeatable)");
    f.opt_alpha_min = cmd->add_option("--alpha-min", f.alpha_min, "grid start");
    f.opt_alpha_max = cmd->add_option("--alpha-max", f.alpha_max, "grid end (inclusive)");
    f.opt_alpha_step = cmd->add_option("--alpha-step", f.alpha_step, "grid step");
    f.opt_alpha_phase =
        cmd->add_option("--alpha-phase", f.alpha_phase, "phase of alpha in radians");
    f.opt_tail_tol = cmd->add_option("--tail-tol", f.tail_tol, "truncation tail tolerance");
    f.opt_max_dim = cmd->add_option("--max-dim", f.max_dim, "truncation dimension cap");
    f.opt_out = cmd->add_option("--out", f.out, "output file (default stdout)");
    f.opt_format = cmd->add_option("--format", f.format, "csv|json");
}

// Precedence: built-in defaults, then the config file, then explicit flags.
nlcs::SweepSpec build_spec(nlcs::SweepSpec spec, const SweepFlags& f) {
    if (!f.config.empty()) nlcs::apply_config_file(spec, f.config);
    if (f.opt_family->count()) spec.family = nlcs::parse_family(f.family);
    if (f.opt_m->count()) spec.m_values = f.m_values;
    if (f.opt_alpha_min->count()) spec.alpha_min = f.alpha_min;
    if (f.opt_alpha_max->count()) spec.alpha_max = f.alpha_max;
    if (f.opt_alpha_step->count()) spec.alpha_step = f.alpha_step;
    if (f.opt_alpha_phase->count()) spec.alpha_phase = f.alpha_phase;
    if (f.opt_tail_tol->count()) spec.policy.tail_tol = f.tail_tol;
    if (f.opt_max_dim->count()) spec.policy.max_dim = f.max_dim;
    if (f.opt_out->count()) spec.output_path = f.out;
    if (f.opt_format->count()) spec.format = nlcs::parse_format(f.format);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"photon-added and negative-m nonlinear coherent states"};
    app.require_subcommand(1);

    // state: dump one state vector
    auto* state_cmd = app.add_subcommand("state", "construct one state and dump it");
    nlcs::StateRequest state_req;
    std::string state_family = "coherent";
    std::string state_format = "csv";
    std::size_t state_dim = 0;
    state_cmd->add_option("--family", state_family, "coherent|added|negative");
    state_cmd->add_option("--alpha", state_req.alpha_abs, "|alpha|")->required();
    state_cmd->add_option("--alpha-phase", state_req.alpha_phase, "phase of alpha in radians");
    state_cmd->add_option("--m", state_req.m, "deformation order m");
    auto* state_dim_opt = state_cmd->add_option("--dim", state_dim, "override the chosen dimension");
    state_cmd->add_option("--tail-tol", state_req.policy.tail_tol, "truncation tail tolerance");
    state_cmd->add_option("--max-dim", state_req.policy.max_dim, "truncation dimension cap");
    state_cmd->add_option("--out", state_req.output_path, "output file (default stdout)");
    state_cmd->add_option("--format", state_format, "csv|json");

    // fig1 / fig2: sweep commands
    auto* fig1_cmd = app.add_subcommand("fig1", "quadrature-variance sweep over alpha");
    SweepFlags fig1_flags;
    add_sweep_flags(fig1_cmd, fig1_flags);

    auto* fig2_cmd = app.add_subcommand("fig2", "Mandel-q sweep over |alpha|");
    SweepFlags fig2_flags;
    add_sweep_flags(fig2_cmd, fig2_flags);

    // verify: run the invariant suite
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    nlcs::VerifyOptions verify_opt;
    verify_cmd->add_option("--alpha", verify_opt.alphas, "grid alpha values (repeatable)");
    verify_cmd->add_option("--m", verify_opt.ms, "grid m values (repeatable)");
    verify_cmd->add_option("--tail-tol", verify_opt.policy.tail_tol,
                           "verification truncation tail tolerance");
    verify_cmd->add_option("--max-dim", verify_opt.policy.max_dim, "truncation dimension cap");
    verify_cmd->add_option("--corrupt-f", verify_opt.f_weight_corruption,
                           "self-test hook: offset added to every f(n,m) weight");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*state_cmd) {
            state_req.family = nlcs::parse_family(state_family);
            state_req.format = nlcs::parse_format(state_format);
            if (state_dim_opt->count()) state_req.dim_override = state_dim;
            nlcs::run_state(state_req);
            return 0;
        }
        if (*fig1_cmd) {
            nlcs::run_fig1(build_spec(nlcs::default_fig1_spec(), fig1_flags));
            return 0;
        }
        if (*fig2_cmd) {
            nlcs::run_fig2(build_spec(nlcs::default_fig2_spec(), fig2_flags));
            return 0;
        }
        if (*verify_cmd) {
            const nlcs::VerifyReport report = nlcs::run_verification(verify_opt);
            nlcs::write_verify_report(report, std::cout);
            return report.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
