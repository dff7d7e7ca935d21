#pragma once

#include "gsp2/counting.hpp"
#include "gsp2/norms.hpp"
#include "gsp2/rational.hpp"
#include "gsp2/torus.hpp"

#include <string>
#include <vector>

namespace gsp2 {

// One contribution cell of an orbital-integral ledger: the (m, r)-cell signs,
// coset index and intertwiner count, with value = sum of sign * index * count.
struct LedgerCell {
    int m = 0;
    int j1 = 0, j2 = -1;   // j2 < 0 for single-index families
    int eps_class = 0;     // 0: trivial square class, 1: the non-square rep
    int rho = 0;           // conjugacy-class twist (TIA only)
    int sign = +1;         // (-1)^m * eps(r)
    long long index = 0;   // coset index [R_T : T cap r K0 r^-1]
    long long count = 0;   // intertwiner count of the cell
};

struct OrbitalResult {
    Rational value;
    std::vector<LedgerCell> ledger;
    int m_bound = 0, j1_bound = 0, j2_bound = 0;

    Rational recompute() const {
        Rational v(0);
        for (const auto& c : ledger) v += Rational(c.sign) * Rational(c.index) * Rational(c.count);
        return v;
    }
};

// eps-twisted orbital integral of 1_K at a G-side point (one conjugacy class;
// the point's rho selects the class for TIA).  Enumerates the coset cells of
// the family's decomposition with one extra verification layer beyond each
// support bound; a nonzero out-of-bound contribution raises support_error.
struct support_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OrbitalResult twisted_orbital_G(const TorusPoint& delta);

// Stable-class version: the value summed over the conjugacy classes when
// include_twist_partner is set (only TIA has a second class).
OrbitalResult twisted_orbital_G_stable(const TorusPoint& delta, bool include_twist_partner);

// Stable orbital integral of 1_{K_H} at an H-side point: sum over the
// conjugacy classes in the stable class.
OrbitalResult stable_orbital_H(const TorusPoint& h);

// Orbital integral of a single H1 conjugacy class (rho fixed); used by the
// unstable-combination checks.
OrbitalResult orbital_H1_class(const TorusPoint& h);

// O_delta - O_delta_pi for a TIA point (delta = rho 0 class).
Rational unstable_combination(const TorusPoint& tia);

// Number of worker threads used for cell evaluation (ENDOSCOPY_THREADS, or 1).
int worker_threads();

}  // namespace gsp2
