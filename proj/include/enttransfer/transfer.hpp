#ifndef ENTTRANSFER_TRANSFER_HPP
#define ENTTRANSFER_TRANSFER_HPP

#include <cmath>
#include <string>
#include <string_view>

#include "enttransfer/core_math.hpp"
#include "enttransfer/errors.hpp"
#include "enttransfer/majorization.hpp"

namespace enttransfer {

/*
  Donor |psi_beta> loses dbeta of angle, acceptor |phi_alpha> gains dalpha,
  with dalpha fixed by entropy balance. Build through make_problem() so that
  dalpha is always consistent with the other three parameters.
*/
struct TransferProblem {
    SchmidtAngle alpha;
    SchmidtAngle beta;
    double dbeta = 0.0;
    double dalpha = 0.0;

    SchmidtAngle donor_after() const { return SchmidtAngle(beta.radians() - dbeta); }
    SchmidtAngle acceptor_after() const { return SchmidtAngle(alpha.radians() + dalpha); }

    SchmidtVector spectrum_before() const { return schmidt_vector_of_pair(alpha, beta); }
    SchmidtVector spectrum_after() const { return schmidt_vector_of_pair(acceptor_after(), donor_after()); }
};

inline TransferProblem make_problem(double alpha, double beta, double dbeta, const SolverOptions& opts = {})
{
    TransferProblem p{SchmidtAngle(alpha), SchmidtAngle(beta), dbeta, 0.0};
    p.dalpha = solve_delta_alpha(p.alpha, p.beta, dbeta, opts);
    return p;
}

enum class F2Regime { below, middle, above };

inline std::string_view to_string(F2Regime r)
{
    switch (r) {
    case F2Regime::below: return "below";
    case F2Regime::middle: return "middle";
    case F2Regime::above: return "above";
    }
    return "?";
}

struct FSlacks {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    F2Regime regime_of_f2 = F2Regime::middle;

    bool all_nonnegative(double tol = 1e-12) const { return f1 >= -tol && f2 >= -tol && f3 >= -tol; }
};

inline F2Regime f2_regime(const TransferProblem& p)
{
    const double a = p.alpha.radians(), b = p.beta.radians();
    if (a < b - p.dalpha - p.dbeta)
        return F2Regime::below;
    if (a > b)
        return F2Regime::above;
    return F2Regime::middle;
}

/*
  Square-root form of the three majorization inequalities, evaluated on the
  numerically sorted spectra:

    f1 = sqrt(l1') - sqrt(l1)
    f2 = sqrt(l1' + l2') - sqrt(l1 + l2)
    f3 = sqrt(l4) - sqrt(l4')
*/
inline FSlacks f_slacks(const TransferProblem& p)
{
    const SchmidtVector before = p.spectrum_before();
    const SchmidtVector after = p.spectrum_after();
    FSlacks s;
    s.f1 = std::sqrt(after[0]) - std::sqrt(before[0]);
    s.f2 = std::sqrt(after[0] + after[1]) - std::sqrt(before[0] + before[1]);
    s.f3 = std::sqrt(before[3]) - std::sqrt(after[3]);
    s.regime_of_f2 = f2_regime(p);
    return s;
}

/// Piecewise closed form of f2; a cross-check for the sort-based value.
inline double f2_regime_formula(const TransferProblem& p)
{
    const double a = p.alpha.radians(), b = p.beta.radians();
    switch (f2_regime(p)) {
    case F2Regime::below: return std::cos(a + p.dalpha) - std::cos(a);
    case F2Regime::middle: return std::cos(b - p.dbeta) - std::cos(a);
    case F2Regime::above: return std::cos(b - p.dbeta) - std::cos(b);
    }
    return 0.0;
}

namespace detail {

// ln tan(alpha) / ln tan(alpha + dalpha), i.e. the factor that implicit
// differentiation of the entropy balance contributes to both derivatives:
//   sin(2a) ln tan a = sin(2(a+da)) ln tan(a+da) (1 + d(da)/da).
inline double log_tan_ratio(const TransferProblem& p, const char* who)
{
    const double a = p.alpha.radians();
    const double g = a + p.dalpha;
    if (a <= 0.0)
        throw SingularPoint(std::string(who) + ": closed form is singular at alpha = 0");
    if (g >= kQuarterPi)
        throw SingularPoint(std::string(who) + ": closed form is singular at alpha + dalpha = pi/4");
    return std::log(std::tan(a)) / std::log(std::tan(g));
}

} // namespace detail

/// df1/dalpha along the entropy-balance curve (dalpha re-solved with alpha).
inline double df1_dalpha(const TransferProblem& p)
{
    const double ratio = detail::log_tan_ratio(p, "df1_dalpha");
    const double a = p.alpha.radians(), b = p.beta.radians();
    const double g = a + p.dalpha;
    return std::sin(a) * (std::cos(b) - std::cos(b - p.dbeta) * std::cos(a) / std::cos(g) * ratio);
}

/// df3/dalpha along the entropy-balance curve.
inline double df3_dalpha(const TransferProblem& p)
{
    const double ratio = detail::log_tan_ratio(p, "df3_dalpha");
    const double a = p.alpha.radians(), b = p.beta.radians();
    const double g = a + p.dalpha;
    return std::cos(a) * (std::sin(b) - std::sin(a) * std::sin(b - p.dbeta) / std::sin(g) * ratio);
}

/// The swap point: the acceptor starts exactly where the donor ends.
inline SchmidtAngle alpha_star(SchmidtAngle beta, double dbeta)
{
    if (std::isnan(dbeta) || dbeta < 0.0 || dbeta > beta.radians())
        throw DomainError("alpha_star: dbeta must lie in [0, beta]");
    return SchmidtAngle(beta.radians() - dbeta);
}

/// Deterministic single-copy transfer is possible iff the final spectrum majorizes the initial one.
inline bool reliable_transfer_possible(const TransferProblem& p, double tol = 1e-12)
{
    return majorizes(p.spectrum_before(), p.spectrum_after(), tol).feasible;
}

} // namespace enttransfer

#endif // ENTTRANSFER_TRANSFER_HPP
