#pragma once

#include "gsp2/orbital.hpp"

#include <string>

namespace gsp2 {

// Parameters of the closed-form evaluations.  q is the residue cardinality
// of the base of the relevant pair (q0^2 for the H2 pairings).
struct ClosedParams {
    long long q0 = 3;
    int N1 = 0, N2 = 0, X = 0, N = 0, n = 0;
    int kappaB1B2 = +1;  // square-class sign of B1 B2 (TIIIDAD)
    int kappaB = +1;     // square-class sign of B over F_A (TIVAD ramified)
    bool ram = false;    // quartic chain: E/F_A ramified?
};

// The closed-form orbital-integral values of the six comparisons, evaluated
// exactly.  For TIA the value is the sum over the two conjugacy classes.
// The TIIIDAD value carries the sign -kappa(-1) in front of the two-power
// so that it matches the honest enumeration for every odd q0 (at q0 = 3 mod 4
// this is the familiar +2 kappa(B1 B2) ... form).
Rational closed_orbital(TorusFamily fam, const ClosedParams& P);

// Unstable combination for TIA: O_delta - O_delta_pi.
Rational closed_unstable_TIA(const ClosedParams& P);

// Transfer factor as exact data: value = half * eps-part * kappa * q0^jac,
// where the quarter-turn eps_quarter records i^k and contributes
// (-1)^(k/2) for even k; for odd k the leftover i is evaluated as -kappa(-1)
// (the square-root branch fixed by the workbench).
struct TransferFactor {
    Rational value;
    int eps_quarter = 0;      // exponent of i carried by the eps-part
    int kappa_sign = +1;
    int half_num = 1, half_den = 1;  // half_flag: 1, 1/2 or -1/2
    Rational jac_exponent;    // exponent of q0 in (D_G/D_H)^(1/2)
};

// Computed from the definition (eps extensions, kappa, discriminant ratio);
// throws on a norm mismatch and cross-checks against the closed value.
TransferFactor transfer_factor(const TorusPoint& h, const TorusPoint& g);

// The claimed closed value of the transfer factor for the pair of h (same
// for both stable-class representatives of the target; the swapped-source
// TIA pairing negates on the twisted class).
Rational transfer_factor_closed(TorusFamily h_fam, ExtKind kind, const ClosedParams& P);

struct MatchingReport {
    Rational lhs, rhs;
    bool pass = false;
    bool closed_pass = false;  // the same identity on closed forms only
    std::string detail;
};

// Fundamental-Lemma matching at one G-regular H-side point: both sides by
// enumeration, transfer factor from its definition.
MatchingReport matching_report(const TorusPoint& h);

// The unstable matching at a TIA coordinate pair: checks
// SO(swapped source) = Delta * (O_delta - O_delta_pi).
MatchingReport unstable_matching_report(const TorusPoint& h_swapped, const TorusPoint& g);

}  // namespace gsp2
