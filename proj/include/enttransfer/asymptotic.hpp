#ifndef ENTTRANSFER_ASYMPTOTIC_HPP
#define ENTTRANSFER_ASYMPTOTIC_HPP

#include <array>
#include <cmath>
#include <string>

#include "enttransfer/core_math.hpp"
#include "enttransfer/errors.hpp"

namespace enttransfer {

/*
  Copy accounting for the many-copy protocol. All counts are asymptotic
  rates (real numbers); sublinear corrections are dropped.

    1. donor:    n psi_beta            -> n H(beta) singlets
    2. donor:    singlets              -> n + surplus copies of psi_{beta-dbeta}
    3. acceptor: n phi_alpha           -> intermediate copies of psi_{beta-dbeta}
    4. acceptor: intermediate + surplus -> n phi_{alpha+dalpha}
*/
struct CopyLedger {
    double n = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double dbeta = 0.0;
    double dalpha = 0.0;

    double singlets_from_donor = 0.0;
    double donor_copies_needed = 0.0;
    double surplus_donor_copies = 0.0;
    double acceptor_intermediate_copies = 0.0;
    double final_acceptor_copies = 0.0;

    // Per-copy ebits of the states involved.
    double e_donor = 0.0;
    double e_donor_after = 0.0;
    double e_acceptor = 0.0;
    double e_acceptor_after = 0.0;

    /// Total ebits held by both parties after each of the four stages,
    /// preceded by the initial total.
    std::array<double, 5> stage_totals() const
    {
        const double acceptor_in = n * e_acceptor;
        return {
            n * e_donor + acceptor_in,
            singlets_from_donor + acceptor_in,
            (donor_copies_needed + surplus_donor_copies) * e_donor_after + acceptor_in,
            donor_copies_needed * e_donor_after +
                (acceptor_intermediate_copies + surplus_donor_copies) * e_donor_after,
            donor_copies_needed * e_donor_after + final_acceptor_copies * e_acceptor_after,
        };
    }
};

inline CopyLedger asymptotic_ledger(SchmidtAngle alpha, SchmidtAngle beta, double dbeta, double n,
                                    const SolverOptions& opts = {})
{
    if (std::isnan(n) || n <= 0.0)
        throw DomainError("asymptotic_ledger: n must be positive");
    if (std::isnan(dbeta) || dbeta < 0.0 || dbeta > beta.radians())
        throw DomainError("asymptotic_ledger: dbeta must lie in [0, beta]");
    if (beta.radians() - dbeta <= 0.0)
        throw DegenerateDilution("asymptotic_ledger: beta - dbeta = 0 leaves a product intermediate state");

    CopyLedger ledger;
    ledger.n = n;
    ledger.alpha = alpha.radians();
    ledger.beta = beta.radians();
    ledger.dbeta = dbeta;
    ledger.dalpha = solve_delta_alpha(alpha, beta, dbeta, opts);

    ledger.e_donor = entanglement_of(beta).ebits;
    ledger.e_donor_after = entanglement_of(SchmidtAngle(beta.radians() - dbeta)).ebits;
    ledger.e_acceptor = entanglement_of(alpha).ebits;
    ledger.e_acceptor_after = entanglement_of(SchmidtAngle(alpha.radians() + ledger.dalpha)).ebits;

    ledger.singlets_from_donor = n * ledger.e_donor;
    ledger.donor_copies_needed = n;
    ledger.surplus_donor_copies = n * (ledger.e_donor / ledger.e_donor_after - 1.0);
    ledger.acceptor_intermediate_copies = n * ledger.e_acceptor / ledger.e_donor_after;
    ledger.final_acceptor_copies = n;
    return ledger;
}

} // namespace enttransfer

#endif // ENTTRANSFER_ASYMPTOTIC_HPP
