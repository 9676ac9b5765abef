#ifndef ENTTRANSFER_MAJORIZATION_HPP
#define ENTTRANSFER_MAJORIZATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "enttransfer/core_math.hpp"
#include "enttransfer/errors.hpp"

namespace enttransfer {

/*
  Squared Schmidt coefficients of a bipartite pure state, in nonincreasing
  order. Construction sorts the input (stable) and checks that it is a
  probability vector: entries in [0, 1] summing to 1 within 1e-12.
*/
class SchmidtVector {
public:
    static constexpr double kSumTolerance = 1e-12;

    explicit SchmidtVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw DomainError("SchmidtVector: empty coefficient list");
        double total = 0.0;
        for (double c : coeffs_) {
            if (std::isnan(c) || c < 0.0 || c > 1.0)
                throw DomainError("SchmidtVector: coefficient " + std::to_string(c) + " outside [0, 1]");
            total += c;
        }
        if (std::abs(total - 1.0) > kSumTolerance)
            throw DomainError("SchmidtVector: coefficients sum to " + std::to_string(total));
        std::stable_sort(coeffs_.begin(), coeffs_.end(), std::greater<>());
    }

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::size_t dimension() const noexcept { return coeffs_.size(); }
    double operator[](std::size_t i) const { return coeffs_.at(i); }

    std::size_t schmidt_number(double zero_threshold = 1e-12) const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [&](double c) { return c > zero_threshold; }));
    }

    /// Running sums of the first k coefficients, k = 1..d.
    std::vector<double> prefix_sums() const
    {
        std::vector<double> out(coeffs_.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out[i] = acc += coeffs_[i];
        return out;
    }

    /// Copy zero-padded up to dimension d (no-op if already at least d).
    SchmidtVector padded(std::size_t d) const
    {
        SchmidtVector copy = *this;
        if (copy.coeffs_.size() < d)
            copy.coeffs_.resize(d, 0.0);
        return copy;
    }

    /// Schmidt vector of the tensor product of two states.
    friend SchmidtVector tensor(const SchmidtVector& a, const SchmidtVector& b)
    {
        std::vector<double> out;
        out.reserve(a.dimension() * b.dimension());
        for (double x : a.coeffs_)
            for (double y : b.coeffs_)
                out.push_back(x * y);
        return SchmidtVector(std::move(out));
    }

private:
    std::vector<double> coeffs_;
};

struct MajorizationReport {
    /// slacks[k-1] = sum_{i<=k} after_i - sum_{i<=k} before_i, k = 1..d-1.
    std::vector<double> slacks;
    bool feasible = true;
};

/*
  The four squared Schmidt coefficients of
  (cos a|00> + sin a|11>) (x) (cos b|00> + sin b|11>), sorted numerically.
*/
inline SchmidtVector schmidt_vector_of_pair(SchmidtAngle alpha, SchmidtAngle beta)
{
    const double ca = alpha.cos_sq(), sa = alpha.sin_sq();
    const double cb = beta.cos_sq(), sb = beta.sin_sq();
    return SchmidtVector({ca * cb, ca * sb, sa * cb, sa * sb});
}

/*
  Nielsen's criterion: `before` can be converted into `after` by LOCC iff
  every prefix sum of `after` is at least the matching prefix sum of
  `before`. The shorter vector is zero-padded. The k = d prefix is 1 on both
  sides and is not reported.
*/
inline MajorizationReport majorizes(const SchmidtVector& before, const SchmidtVector& after,
                                    double tol = 1e-12)
{
    const std::size_t d = std::max(before.dimension(), after.dimension());
    const SchmidtVector lhs = before.padded(d);
    const SchmidtVector rhs = after.padded(d);

    MajorizationReport report;
    report.slacks.reserve(d - 1);
    double sum_before = 0.0, sum_after = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        sum_before += lhs[k];
        sum_after += rhs[k];
        const double slack = sum_after - sum_before;
        report.slacks.push_back(slack);
        if (slack < -tol)
            report.feasible = false;
    }
    return report;
}

/*
  Schmidt-number bookkeeping for moving entanglement out of a donor into
  initially unentangled systems. LOCC cannot raise the Schmidt number, and
  the Schmidt number of a product of pure states is the product of the
  factors' Schmidt numbers.
*/
inline bool schmidt_numbers_allow(std::size_t initial_total, std::size_t donor_after,
                                  std::size_t acceptor_after)
{
    return donor_after * acceptor_after <= initial_total;
}

/*
  Can part of the donor's entanglement be moved to a product acceptor?

  partial = true: the donor keeps its Schmidt number r while the acceptor
  becomes entangled (Schmidt number >= 2), so the final count is at least
  2r > r. Always impossible.

  partial = false: full transfer, i.e. swapping the donor onto the acceptor
  systems. The final count is 1 * r = r, which is allowed and is realised
  by two local SWAPs.
*/
inline bool transfer_to_product_possible(const SchmidtVector& donor, bool partial,
                                         double zero_threshold = 1e-12)
{
    const std::size_t r = donor.schmidt_number(zero_threshold);
    if (partial)
        return r >= 1 && schmidt_numbers_allow(r, r, 2);
    return schmidt_numbers_allow(r, 1, r);
}

} // namespace enttransfer

#endif // ENTTRANSFER_MAJORIZATION_HPP
