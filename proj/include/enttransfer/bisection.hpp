#ifndef ENTTRANSFER_BISECTION_HPP
#define ENTTRANSFER_BISECTION_HPP

#include <cmath>
#include <string>

#include "enttransfer/errors.hpp"

namespace enttransfer {

struct BisectionOptions {
    /// Stop once the bracket is at most this wide...
    double x_tol = 1e-15;
    /// ...and the residual at the midpoint is at most this large.
    double f_tol = 1e-12;
    int max_iterations = 300;
};

/*
  Bracketed bisection for a continuous f with f(lo) and f(hi) of opposite
  sign (or one of them exactly zero).

  The loop ends when both tolerances are met, or when the bracket cannot be
  split any further in double precision. The latter is not an error: the
  returned point is then the best representable approximation.

  Throws BracketError when the end-point residuals share a sign.
*/
template <class F>
double bisect(const F& f, double lo, double hi, const BisectionOptions& opts = {},
              const char* context = "bisect")
{
    if (!(lo <= hi))
        throw DomainError(std::string(context) + ": empty interval");

    double f_lo = f(lo);
    if (f_lo == 0.0)
        return lo;
    double f_hi = f(hi);
    if (f_hi == 0.0)
        return hi;
    if (std::isnan(f_lo) || std::isnan(f_hi) || std::signbit(f_lo) == std::signbit(f_hi))
        throw BracketError(std::string(context) + ": no sign change in bracket", lo, hi, f_lo, f_hi);

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            return std::abs(f_lo) < std::abs(f_hi) ? lo : hi;

        const double f_mid = f(mid);
        if (f_mid == 0.0)
            return mid;
        if (hi - lo <= opts.x_tol && std::abs(f_mid) <= opts.f_tol)
            return mid;

        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    return mid;
}

} // namespace enttransfer

#endif // ENTTRANSFER_BISECTION_HPP
