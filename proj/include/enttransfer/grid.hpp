#ifndef ENTTRANSFER_GRID_HPP
#define ENTTRANSFER_GRID_HPP

#include <cstddef>
#include <vector>

#include "enttransfer/errors.hpp"

namespace enttransfer {

/// Equally spaced grid of `points` values over [lo, hi].
inline std::vector<double> linspace(double lo, double hi, std::size_t points)
{
    if (points < 2)
        throw DomainError("linspace: need at least 2 points");
    std::vector<double> out(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

} // namespace enttransfer

#endif // ENTTRANSFER_GRID_HPP
