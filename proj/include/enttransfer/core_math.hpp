#ifndef ENTTRANSFER_CORE_MATH_HPP
#define ENTTRANSFER_CORE_MATH_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "enttransfer/bisection.hpp"
#include "enttransfer/errors.hpp"

namespace enttransfer {

inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// Values this close outside [0, pi/4] are rounding dust and get clamped.
inline constexpr double kAngleSlack = 1e-12;

/*
  Angle theta in [0, pi/4] describing the two-qubit pure state
  cos(theta)|00> + sin(theta)|11>. Its Schmidt coefficients
  {cos^2 theta, sin^2 theta} are automatically in decreasing order.
*/
class SchmidtAngle {
public:
    constexpr SchmidtAngle() = default;

    explicit SchmidtAngle(double theta)
    {
        if (std::isnan(theta) || theta < -kAngleSlack || theta > kQuarterPi + kAngleSlack)
            throw DomainError("SchmidtAngle: theta = " + std::to_string(theta) + " outside [0, pi/4]");
        theta_ = theta < 0.0 ? 0.0 : (theta > kQuarterPi ? kQuarterPi : theta);
    }

    constexpr double radians() const noexcept { return theta_; }
    double cos_sq() const noexcept { return 0.5 * (1.0 + std::cos(2.0 * theta_)); }
    double sin_sq() const noexcept { return 0.5 * (1.0 - std::cos(2.0 * theta_)); }

    friend constexpr auto operator<=>(SchmidtAngle, SchmidtAngle) = default;

private:
    double theta_ = 0.0;
};

/// Entanglement in ebits.
struct Entanglement {
    double ebits = 0.0;
    friend constexpr auto operator<=>(Entanglement, Entanglement) = default;
};

namespace detail {

// -p log2 p with the 0 log 0 = 0 convention.
inline double plogp(double p)
{
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

// Entropy of {p, q} where q = 1 - p is supplied separately so that the
// small member of the pair keeps full relative precision.
inline double pair_entropy(double p, double q)
{
    return plogp(p) + plogp(q);
}

// H[cos^2 theta] for any real theta; no range check.
inline double angle_entropy(double theta)
{
    const double c2 = std::cos(2.0 * theta);
    return pair_entropy(0.5 * (1.0 + c2), 0.5 * (1.0 - c2));
}

} // namespace detail

/// Shannon entropy of {x, 1-x} in bits.
inline Entanglement binary_entropy(double x)
{
    if (std::isnan(x) || x < 0.0 || x > 1.0)
        throw DomainError("binary_entropy: x = " + std::to_string(x) + " outside [0, 1]");
    if (x == 0.0 || x == 1.0)
        return {0.0};
    return {detail::pair_entropy(x, 1.0 - x)};
}

/// Entropy of entanglement of the state parametrized by theta.
inline Entanglement entanglement_of(SchmidtAngle theta)
{
    return {detail::pair_entropy(theta.cos_sq(), theta.sin_sq())};
}

/// Tolerances shared by the solvers. Defaults are the library defaults.
struct SolverOptions {
    /// Entropy residual accepted by the entropy-balance solver.
    double entropy_tol = 1e-12;
    /// Bracket width at which the entropy-balance bisection stops.
    double angle_tol = 1e-15;
    /// Prefix-sum / f-slack values >= -feasibility_tol count as satisfied.
    double feasibility_tol = 1e-12;
    /// Schmidt coefficients above this count toward the Schmidt number.
    double zero_threshold = 1e-12;
};

/// Entanglement the donor gives up when its angle drops from beta to beta - dbeta.
inline double donor_entanglement_loss(SchmidtAngle beta, double dbeta)
{
    if (std::isnan(dbeta) || dbeta < 0.0 || dbeta > beta.radians())
        throw DomainError("dbeta = " + std::to_string(dbeta) + " must lie in [0, beta]");
    return detail::angle_entropy(beta.radians()) - detail::angle_entropy(beta.radians() - dbeta);
}

/*
  Angle increment dalpha of the acceptor that balances the donor's loss:

      H[cos^2 beta] + H[cos^2 alpha] = H[cos^2(beta - dbeta)] + H[cos^2(alpha + dalpha)]

  The map d -> H[cos^2(alpha + d)] is strictly increasing on [0, pi/4 - alpha],
  so bisection on that interval finds the unique root.
*/
inline double solve_delta_alpha(SchmidtAngle alpha, SchmidtAngle beta, double dbeta,
                                const SolverOptions& opts = {})
{
    const double gain = donor_entanglement_loss(beta, dbeta);
    if (gain <= 0.0)
        return 0.0;

    const double a = alpha.radians();
    const double target = detail::angle_entropy(a) + gain;
    if (target > 1.0 + opts.entropy_tol)
        throw InfeasibleHeadroom("acceptor at alpha = " + std::to_string(a) +
                                 " has no room for " + std::to_string(gain) + " ebits");

    const double span = kQuarterPi - a;
    if (target >= 1.0)
        return span;

    auto residual = [&](double d) { return detail::angle_entropy(a + d) - target; };
    return bisect(residual, 0.0, span, {opts.angle_tol, opts.entropy_tol, 300}, "solve_delta_alpha");
}

/*
  Largest acceptor angle that can still absorb the donor's loss, i.e. the
  alpha with alpha + dalpha(alpha) = pi/4. The feasible acceptor range is
  [0, max_acceptor_angle].
*/
inline double max_acceptor_angle(SchmidtAngle beta, double dbeta, const SolverOptions& opts = {})
{
    const double gain = donor_entanglement_loss(beta, dbeta);
    if (gain <= 0.0)
        return kQuarterPi;
    if (gain >= 1.0)
        return 0.0;
    auto residual = [&](double a) { return detail::angle_entropy(a) + gain - 1.0; };
    double root = bisect(residual, 0.0, kQuarterPi, {opts.angle_tol, 0.0, 300}, "max_acceptor_angle");
    // Stay on the feasible side of the boundary.
    while (root > 0.0 && residual(root) > 0.0)
        root = std::nextafter(root, 0.0);
    return root;
}

} // namespace enttransfer

#endif // ENTTRANSFER_CORE_MATH_HPP
