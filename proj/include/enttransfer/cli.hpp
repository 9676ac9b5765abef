#ifndef ENTTRANSFER_CLI_HPP
#define ENTTRANSFER_CLI_HPP

#include <array>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enttransfer/asymptotic.hpp"
#include "enttransfer/catalysis.hpp"
#include "enttransfer/core_math.hpp"
#include "enttransfer/errors.hpp"
#include "enttransfer/grid.hpp"
#include "enttransfer/majorization.hpp"
#include "enttransfer/probabilistic.hpp"
#include "enttransfer/table.hpp"
#include "enttransfer/transfer.hpp"

namespace enttransfer::cli {

enum class Format { csv, json };

struct SweepConfig {
    std::string command;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> dbeta;
    std::string preset;
    std::size_t grid_points = 401;
    double tol = 1e-9;
    double n = 1e6;
    double dbeta_min = 1e-3;
    double dbeta_max = 0.2;
    SolverOptions solver{};
    std::string output_path;
    Format format = Format::csv;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;

/// Bad command line or configuration.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
  Angle literal: a real ("0.5", "1e-3") or a ratio ("1/5"). With
  pi_fraction set the value is a multiple of pi, so "1/5" means pi/5.
  The command line applies pi_fraction to --alpha and --beta only; --dbeta
  is always plain radians.
*/
inline double parse_angle(const std::string& text, bool pi_fraction)
{
    auto parse_real = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse angle '" + text + "'");
        }
        if (used != s.size())
            throw UsageError("cannot parse angle '" + text + "'");
        return v;
    };
    double value;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const double num = parse_real(text.substr(0, slash));
        const double den = parse_real(text.substr(slash + 1));
        if (den == 0.0)
            throw UsageError("zero denominator in angle '" + text + "'");
        value = num / den;
    } else {
        value = parse_real(text);
    }
    return pi_fraction ? value * std::numbers::pi : value;
}

namespace detail {

inline double require(const std::optional<double>& v, const char* name)
{
    if (!v)
        throw UsageError(std::string("missing required option --") + name);
    return *v;
}

inline void require_grid(const SweepConfig& cfg)
{
    if (cfg.grid_points < 2)
        throw UsageError("--grid-points must be at least 2");
}

inline std::string status_of(const std::string& error)
{
    return error.empty() ? "ok" : "error: " + error;
}

inline Cell angle_cell(const std::optional<SchmidtAngle>& a)
{
    if (a)
        return a->radians();
    return Missing{};
}

struct Outcome {
    Table table;
    std::size_t failed_points = 0;
};

inline Outcome feasible(const SweepConfig& cfg)
{
    const TransferProblem p = make_problem(require(cfg.alpha, "alpha"), require(cfg.beta, "beta"),
                                           require(cfg.dbeta, "dbeta"), cfg.solver);
    const MajorizationReport r = majorizes(p.spectrum_before(), p.spectrum_after(), cfg.solver.feasibility_tol);
    Table t({"alpha", "beta", "dbeta", "dalpha", "alpha_star", "slack1", "slack2", "slack3", "feasible"});
    t.add_row({p.alpha.radians(), p.beta.radians(), p.dbeta, p.dalpha,
               alpha_star(p.beta, p.dbeta).radians(), r.slacks[0], r.slacks[1], r.slacks[2], r.feasible});
    return {std::move(t)};
}

inline Outcome fslacks(const SweepConfig& cfg)
{
    const TransferProblem p = make_problem(require(cfg.alpha, "alpha"), require(cfg.beta, "beta"),
                                           require(cfg.dbeta, "dbeta"), cfg.solver);
    const FSlacks s = f_slacks(p);
    Table t({"alpha", "beta", "dbeta", "dalpha", "f1", "f2", "f3", "regime", "f2_regime_formula",
             "catalysis_possible"});
    t.add_row({p.alpha.radians(), p.beta.radians(), p.dbeta, p.dalpha, s.f1, s.f2, s.f3,
               std::string(to_string(s.regime_of_f2)), f2_regime_formula(p),
               catalysis_possible(p, cfg.solver.feasibility_tol)});
    return {std::move(t)};
}

inline Outcome beta_c(const SweepConfig& cfg)
{
    const double dbeta = require(cfg.dbeta, "dbeta");
    Table t({"dbeta", "beta_c"});
    t.add_row({dbeta, solve_beta_c(dbeta, cfg.tol).radians()});
    return {std::move(t)};
}

inline RegionOptions region_options(const SweepConfig& cfg)
{
    RegionOptions opts;
    opts.beta_c_tol = cfg.tol;
    opts.solver = cfg.solver;
    return opts;
}

inline Outcome region(const SweepConfig& cfg)
{
    const double beta = require(cfg.beta, "beta");
    const double dbeta = require(cfg.dbeta, "dbeta");
    const RegionOptions opts = region_options(cfg);
    const CatalysisRegion r = f3_roots(SchmidtAngle(beta), dbeta, opts);
    Table t({"beta", "dbeta", "beta_c", "nonempty", "lower_root", "upper_root"});
    const Cell bc = dbeta > 0.0 ? Cell{solve_beta_c(dbeta, cfg.tol).radians()} : Cell{Missing{}};
    t.add_row({beta, dbeta, bc, r.nonempty, angle_cell(r.lower_root), angle_cell(r.upper_root)});
    return {std::move(t)};
}

inline Outcome pmax(const SweepConfig& cfg)
{
    const TransferProblem p = make_problem(require(cfg.alpha, "alpha"), require(cfg.beta, "beta"),
                                           require(cfg.dbeta, "dbeta"), cfg.solver);
    const ProbabilityResult r = p_max(p);
    Table t({"alpha", "beta", "dbeta", "dalpha", "p_max", "binding_term", "ratio1", "ratio2", "ratio3"});
    t.add_row({p.alpha.radians(), p.beta.radians(), p.dbeta, p.dalpha, r.p_max,
               static_cast<long long>(r.binding_term), r.ratios.at(0), r.ratios.at(1), r.ratios.at(2)});
    return {std::move(t)};
}

inline Outcome asymptotic(const SweepConfig& cfg)
{
    const CopyLedger l = asymptotic_ledger(SchmidtAngle(require(cfg.alpha, "alpha")),
                                           SchmidtAngle(require(cfg.beta, "beta")),
                                           require(cfg.dbeta, "dbeta"), cfg.n, cfg.solver);
    Table t({"n", "alpha", "beta", "dbeta", "dalpha", "singlets_from_donor", "donor_copies_needed",
             "surplus_donor_copies", "acceptor_intermediate_copies", "final_acceptor_copies",
             "total_ebits_initial", "total_ebits_final"});
    const auto totals = l.stage_totals();
    t.add_row({l.n, l.alpha, l.beta, l.dbeta, l.dalpha, l.singlets_from_donor, l.donor_copies_needed,
               l.surplus_donor_copies, l.acceptor_intermediate_copies, l.final_acceptor_copies,
               totals.front(), totals.back()});
    return {std::move(t)};
}

// f1, f2, f3 (and f3 x 10) against alpha, dbeta = 0.01, three donor angles.
inline Outcome sweep_fig1(const SweepConfig& cfg)
{
    constexpr double dbeta = 0.01;
    const std::array<double, 3> betas{std::numbers::pi / 10.0, 0.5, std::numbers::pi / 5.0};
    Table t({"beta", "dbeta", "alpha", "dalpha", "f1", "f2", "f3", "f3x10", "regime", "status"});
    std::size_t failed = 0;
    for (double beta : betas) {
        const double a_max = max_acceptor_angle(SchmidtAngle(beta), dbeta, cfg.solver);
        for (double alpha : linspace(0.0, a_max, cfg.grid_points)) {
            try {
                const TransferProblem p = make_problem(alpha, beta, dbeta, cfg.solver);
                const FSlacks s = f_slacks(p);
                t.add_row({beta, dbeta, alpha, p.dalpha, s.f1, s.f2, s.f3, 10.0 * s.f3,
                           std::string(to_string(s.regime_of_f2)), std::string("ok")});
            } catch (const std::exception& e) {
                ++failed;
                t.add_row({beta, dbeta, alpha, Missing{}, Missing{}, Missing{}, Missing{}, Missing{},
                           Missing{}, status_of(e.what())});
            }
        }
    }
    return {std::move(t), failed};
}

// beta_c against dbeta.
inline Outcome sweep_fig2(const SweepConfig& cfg)
{
    Table t({"dbeta", "beta_c", "status"});
    std::size_t failed = 0;
    for (double dbeta : linspace(cfg.dbeta_min, cfg.dbeta_max, cfg.grid_points)) {
        try {
            t.add_row({dbeta, solve_beta_c(dbeta, cfg.tol).radians(), std::string("ok")});
        } catch (const std::exception& e) {
            ++failed;
            t.add_row({dbeta, Missing{}, status_of(e.what())});
        }
    }
    return {std::move(t), failed};
}

// Root pairs of f3 against beta for four dbeta values.
inline Outcome sweep_fig3(const SweepConfig& cfg)
{
    const std::array<double, 4> dbetas{0.2, 0.1, 0.01, 0.001};
    Table t({"dbeta", "beta", "beta_c", "nonempty", "lower_root", "upper_root", "status"});
    std::size_t failed = 0;
    for (const RegionRow& row : region_sweep(dbetas, BetaGrid{cfg.grid_points, kQuarterPi}, region_options(cfg))) {
        if (!row.region) {
            ++failed;
            t.add_row({row.dbeta, row.beta, row.beta_c, false, Missing{}, Missing{}, status_of(row.error)});
            continue;
        }
        t.add_row({row.dbeta, row.beta, row.beta_c, row.region->nonempty, angle_cell(row.region->lower_root),
                   angle_cell(row.region->upper_root), std::string("ok")});
    }
    return {std::move(t), failed};
}

// p_max against alpha for beta = pi/10, dbeta = 0.01.
inline Outcome sweep_fig4(const SweepConfig& cfg)
{
    constexpr double dbeta = 0.01;
    constexpr double beta = std::numbers::pi / 10.0;
    Table t({"beta", "dbeta", "alpha", "dalpha", "p_max", "binding_term", "status"});
    std::size_t failed = 0;
    for (const PmaxRow& row : pmax_sweep(SchmidtAngle(beta), dbeta, cfg.grid_points, cfg.solver)) {
        if (!row.result) {
            ++failed;
            t.add_row({beta, dbeta, row.alpha, Missing{}, Missing{}, Missing{}, status_of(row.error)});
            continue;
        }
        t.add_row({beta, dbeta, row.alpha, row.dalpha, row.result->p_max,
                   static_cast<long long>(row.result->binding_term), std::string("ok")});
    }
    return {std::move(t), failed};
}

inline Outcome dispatch(const SweepConfig& cfg)
{
    const std::string& c = cfg.command;
    if (c == "feasible") return feasible(cfg);
    if (c == "fslacks") return fslacks(cfg);
    if (c == "beta-c") return beta_c(cfg);
    if (c == "region") return region(cfg);
    if (c == "pmax") return pmax(cfg);
    if (c == "asymptotic") return asymptotic(cfg);
    if (c == "sweep") {
        detail::require_grid(cfg);
        if (cfg.preset == "fig1") return sweep_fig1(cfg);
        if (cfg.preset == "fig2") return sweep_fig2(cfg);
        if (cfg.preset == "fig3") return sweep_fig3(cfg);
        if (cfg.preset == "fig4") return sweep_fig4(cfg);
        throw UsageError("sweep needs --preset fig1|fig2|fig3|fig4");
    }
    throw UsageError("unknown command '" + c + "'");
}

} // namespace detail

/// Execute one command; results go to cfg.output_path or `out`.
inline int run(const SweepConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!(cfg.tol > 0.0)) {
        err << "error: --tol must be positive\n";
        return kExitUsage;
    }
    detail::Outcome outcome{Table({})};
    try {
        outcome = detail::dispatch(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InfeasibleHeadroom& e) {
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInfeasible;
    }

    auto emit = [&](std::ostream& os) {
        if (cfg.format == Format::json)
            outcome.table.write_json(os);
        else
            outcome.table.write_csv(os);
    };
    if (cfg.output_path.empty()) {
        emit(out);
    } else {
        std::ofstream file(cfg.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.output_path << " for writing\n";
            return kExitInfeasible;
        }
        emit(file);
    }
    if (outcome.failed_points > 0)
        err << "warning: " << outcome.failed_points << " grid point(s) failed; see status column\n";
    return kExitOk;
}

/*
  Parse argv into a SweepConfig and run it. A key = value config file given
  with --config supplies defaults; command-line flags override it.
*/
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr)
{
    CLI::App app{"Entanglement transfer between pure two-qubit states"};
    app.set_config("--config", "", "key = value configuration file");

    SweepConfig cfg;
    std::string alpha, beta, dbeta, format = "csv";
    bool pi_fraction = false;

    app.add_option("command", cfg.command, "feasible | fslacks | beta-c | region | pmax | asymptotic | sweep")
        ->required()
        ->check(CLI::IsMember({"feasible", "fslacks", "beta-c", "region", "pmax", "asymptotic", "sweep"}));
    app.add_option("--alpha", alpha, "acceptor angle (radians)");
    app.add_option("--beta", beta, "donor angle (radians)");
    app.add_option("--dbeta", dbeta, "donor angle decrease (radians)");
    app.add_flag("--pi-fraction", pi_fraction, "read --alpha/--beta as multiples of pi, e.g. --beta 1/5 for pi/5");
    app.add_option("--preset", cfg.preset, "sweep preset")->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    app.add_option("--grid-points", cfg.grid_points, "grid resolution for sweeps")->check(CLI::Range(2, 10000000));
    app.add_option("--tol", cfg.tol, "angle tolerance of the beta_c bisection")->check(CLI::PositiveNumber);
    app.add_option("--entropy-tol", cfg.solver.entropy_tol, "entropy residual of the balance solver")
        ->check(CLI::PositiveNumber);
    app.add_option("--angle-tol", cfg.solver.angle_tol, "bracket width of the balance solver")
        ->check(CLI::PositiveNumber);
    app.add_option("--feasibility-tol", cfg.solver.feasibility_tol, "slack tolerance for verdicts")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--n", cfg.n, "number of copies (asymptotic)")->check(CLI::PositiveNumber);
    app.add_option("--dbeta-min", cfg.dbeta_min, "lower end of the fig2 dbeta grid");
    app.add_option("--dbeta-max", cfg.dbeta_max, "upper end of the fig2 dbeta grid");
    app.add_option("-o,--output", cfg.output_path, "output file (default: stdout)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (!alpha.empty()) cfg.alpha = parse_angle(alpha, pi_fraction);
        if (!beta.empty()) cfg.beta = parse_angle(beta, pi_fraction);
        if (!dbeta.empty()) cfg.dbeta = parse_angle(dbeta, false);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.format = format == "json" ? Format::json : Format::csv;
    return run(cfg, out, err);
}

} // namespace enttransfer::cli

#endif // ENTTRANSFER_CLI_HPP
