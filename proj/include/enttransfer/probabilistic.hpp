#ifndef ENTTRANSFER_PROBABILISTIC_HPP
#define ENTTRANSFER_PROBABILISTIC_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "enttransfer/core_math.hpp"
#include "enttransfer/grid.hpp"
#include "enttransfer/majorization.hpp"
#include "enttransfer/transfer.hpp"

namespace enttransfer {

struct ProbabilityResult {
    double p_max = 1.0;
    /// 1-based index k of the binding tail ratio E_k(before) / E_k(after),
    /// where E_k is the sum of all coefficients after the first k.
    std::size_t binding_term = 1;
    /// All d-1 tail ratios; excluded terms hold +infinity.
    std::vector<double> ratios;
};

/*
  Maximum probability of converting `before` into `after` by LOCC on a
  single copy: the minimum over k = 1..d-1 of

      (lambda_{k+1} + ... + lambda_d) / (lambda'_{k+1} + ... + lambda'_d),

  capped at 1. For d = 4 the three terms are (1 - l1)/(1 - l1'),
  (1 - l1 - l2)/(1 - l1' - l2') and l4/l4'.

  Zero tails in `after`: 0/0 counts as 1, x/0 with x > 0 is excluded.
*/
inline ProbabilityResult max_conversion_probability(const SchmidtVector& before, const SchmidtVector& after)
{
    const std::size_t d = std::max(before.dimension(), after.dimension());
    const SchmidtVector lhs = before.padded(d);
    const SchmidtVector rhs = after.padded(d);

    // Tails summed from the small end so they keep relative precision.
    std::vector<double> tail_before(d + 1, 0.0), tail_after(d + 1, 0.0);
    for (std::size_t i = d; i-- > 0;) {
        tail_before[i] = tail_before[i + 1] + lhs[i];
        tail_after[i] = tail_after[i + 1] + rhs[i];
    }

    ProbabilityResult result;
    result.ratios.reserve(d - 1);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < d; ++k) {
        double ratio;
        if (tail_after[k] > 0.0)
            ratio = tail_before[k] / tail_after[k];
        else
            ratio = tail_before[k] > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
        result.ratios.push_back(ratio);
        if (ratio < best) {
            best = ratio;
            result.binding_term = k;
        }
    }
    result.p_max = std::min(best, 1.0);
    return result;
}

inline ProbabilityResult p_max(const TransferProblem& p)
{
    return max_conversion_probability(p.spectrum_before(), p.spectrum_after());
}

struct PmaxRow {
    double alpha = 0.0;
    double dalpha = std::numeric_limits<double>::quiet_NaN();
    std::optional<ProbabilityResult> result;
    std::string error;
};

/*
  p_max over `points` equally spaced acceptor angles in [0, alpha_max], where
  alpha_max is the largest acceptor that can absorb the donor's loss. The
  swap point alpha* is merged into the grid (in order) when it is not
  already a grid node, so the curve's maximum is always sampled.
*/
inline std::vector<PmaxRow> pmax_sweep(SchmidtAngle beta, double dbeta, std::size_t points,
                                       const SolverOptions& opts = {})
{
    const double a_max = max_acceptor_angle(beta, dbeta, opts);
    std::vector<double> grid = linspace(0.0, a_max, points);
    const double a_star = alpha_star(beta, dbeta).radians();
    if (a_star <= a_max && std::find(grid.begin(), grid.end(), a_star) == grid.end())
        grid.insert(std::upper_bound(grid.begin(), grid.end(), a_star), a_star);

    std::vector<PmaxRow> rows;
    rows.reserve(grid.size());
    for (double a : grid) {
        PmaxRow row{a};
        try {
            const TransferProblem problem = make_problem(a, beta.radians(), dbeta, opts);
            row.dalpha = problem.dalpha;
            row.result = p_max(problem);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace enttransfer

#endif // ENTTRANSFER_PROBABILISTIC_HPP
