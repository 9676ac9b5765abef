#ifndef ENTTRANSFER_CATALYSIS_HPP
#define ENTTRANSFER_CATALYSIS_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enttransfer/bisection.hpp"
#include "enttransfer/core_math.hpp"
#include "enttransfer/errors.hpp"
#include "enttransfer/grid.hpp"
#include "enttransfer/transfer.hpp"

namespace enttransfer {

/*
  Incomparability test for the total initial and final states:

      f1 >= 0,  f2 < 0,  f3 >= 0.

  This is the necessary condition for a catalyst to help; for these 4x4
  spectra it is treated as deciding. f2 must be negative by more than `tol`,
  so the swap point alpha* (f2 = 0) is not counted as catalytic.
*/
inline bool catalysis_possible(const TransferProblem& p, double tol = 1e-12)
{
    const FSlacks s = f_slacks(p);
    return s.f1 >= -tol && s.f2 < -tol && s.f3 >= -tol;
}

/*
  Residual of the threshold condition at alpha = alpha* (where dalpha = dbeta):

      (sin b / sin(b - dbeta))^2 - ln tan(b - dbeta) / ln tan b

  Positive just above dbeta, negative just below pi/4.
*/
inline double beta_c_residual(double beta, double dbeta)
{
    const double ratio = std::sin(beta) / std::sin(beta - dbeta);
    return ratio * ratio - std::log(std::tan(beta - dbeta)) / std::log(std::tan(beta));
}

/// Critical donor angle above which a catalytic window in alpha opens.
inline SchmidtAngle solve_beta_c(double dbeta, double tol = 1e-9)
{
    if (std::isnan(dbeta) || dbeta <= 0.0 || dbeta >= kQuarterPi)
        throw DomainError("solve_beta_c: dbeta must lie in (0, pi/4)");
    if (!(tol > 0.0))
        throw DomainError("solve_beta_c: tol must be positive");
    const double lo = dbeta * (1.0 + 1e-3);
    const double hi = kQuarterPi - 1e-12;
    auto residual = [dbeta](double b) { return beta_c_residual(b, dbeta); };
    return SchmidtAngle(bisect(residual, lo, hi, {tol, std::numeric_limits<double>::infinity(), 300}, "solve_beta_c"));
}

struct CatalysisRegion {
    SchmidtAngle beta;
    double dbeta = 0.0;
    std::optional<SchmidtAngle> lower_root;
    std::optional<SchmidtAngle> upper_root;
    bool nonempty = false;

    bool contains(double alpha) const
    {
        return nonempty && lower_root->radians() < alpha && alpha < upper_root->radians();
    }
};

struct RegionOptions {
    /// Bisection tolerance for the threshold angle.
    double beta_c_tol = 1e-9;
    /// Bisection tolerance for the lower root of f3.
    double root_tol = 1e-12;
    /// Distance from beta_c inside which the two roots are reported as merged.
    double degenerate_window = 1e-6;
    /// Offset of the lower bracket start from alpha = 0.
    double epsilon = 1e-6;
    SolverOptions solver{};
};

/*
  The two roots of f3 = 0 (with dalpha re-solved at every trial alpha). The
  upper root is alpha* = beta - dbeta. The lower one is bracketed on
  [epsilon, alpha* - delta], where delta starts at epsilon and shrinks until
  f3 is positive at the right end.

  Below beta_c the region is empty; within `degenerate_window` of beta_c
  both roots are reported at alpha*.
*/
inline CatalysisRegion f3_roots(SchmidtAngle beta, double dbeta, const RegionOptions& opts = {})
{
    CatalysisRegion region{beta, dbeta, std::nullopt, std::nullopt, false};
    const SchmidtAngle a_star = alpha_star(beta, dbeta);
    if (dbeta <= 0.0)
        return region;

    const double beta_c = solve_beta_c(dbeta, opts.beta_c_tol).radians();
    const double b = beta.radians();
    if (b <= beta_c + opts.beta_c_tol) {
        if (std::abs(b - beta_c) <= opts.degenerate_window) {
            region.lower_root = a_star;
            region.upper_root = a_star;
        }
        return region;
    }

    auto f3 = [&](double a) { return f_slacks(make_problem(a, b, dbeta, opts.solver)).f3; };

    double right = -1.0;
    for (double delta = opts.epsilon; delta >= 1e-13; delta *= 0.1) {
        const double x = a_star.radians() - delta;
        if (x > opts.epsilon && f3(x) > 0.0) {
            right = x;
            break;
        }
    }
    region.upper_root = a_star;
    if (right < 0.0) {
        region.lower_root = a_star;
        return region;
    }

    const double lower = bisect(f3, opts.epsilon, right, {opts.root_tol, std::numeric_limits<double>::infinity(), 300}, "f3_roots");
    region.lower_root = SchmidtAngle(lower);
    region.nonempty = lower < a_star.radians();
    return region;
}

/// Donor-angle grid for region sweeps: `points` values over [beta_c, hi].
struct BetaGrid {
    std::size_t points = 100;
    double hi = kQuarterPi;
};

struct RegionRow {
    double dbeta = 0.0;
    double beta_c = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    std::optional<CatalysisRegion> region;
    std::string error;
};

/*
  Root pairs behind the beta_c-vs-dbeta and roots-vs-beta figures. For each
  dbeta the beta grid starts at beta_c (the degenerate point) and runs to
  grid.hi. Failures are recorded per row and the sweep continues.
*/
inline std::vector<RegionRow> region_sweep(std::span<const double> dbeta_values, const BetaGrid& grid,
                                           const RegionOptions& opts = {})
{
    std::vector<RegionRow> rows;
    for (double dbeta : dbeta_values) {
        double beta_c = 0.0;
        try {
            beta_c = solve_beta_c(dbeta, opts.beta_c_tol).radians();
        } catch (const std::exception& e) {
            rows.push_back({dbeta, std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(), std::nullopt, e.what()});
            continue;
        }
        for (double beta : linspace(beta_c, grid.hi, grid.points)) {
            RegionRow row{dbeta, beta_c, beta, std::nullopt, {}};
            try {
                row.region = f3_roots(SchmidtAngle(beta), dbeta, opts);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace enttransfer

#endif // ENTTRANSFER_CATALYSIS_HPP
