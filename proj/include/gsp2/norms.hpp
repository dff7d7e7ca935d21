#pragma once

#include "gsp2/torus.hpp"

namespace gsp2 {

// The explicit norm correspondence on the elliptic families:
//   T1A  -> TIA      (phi^A(g), z)        -> [phi^A(z), phi^A(g)]
//   T1AD -> TIIIAAD  (phi^AD(z), g)       -> [phi^A(g), phi^AD(z)]
//   T2D  -> TIIIDAD  (phi^{FA:D}(l), c)   -> c [phi^D(l sl), phi^AD(l stl)]
//   T2D  -> TIVAD    (quartic)            -> c * (l sl) in the quartic torus
TorusPoint norm_image(const TorusPoint& h);

// Central elements: (diag(z,z), z) and (1, z)* are norms of diag(z,z,z,z);
// verified directly in tests.

// true iff the dual-map image of the H-side diagonal data agrees with the
// eigenvalue multiset of the G-side point, at precision M-2.
bool is_norm(const TorusPoint& h, const TorusPoint& g);

// Conjugacy classes within the stable class: {t, t_pi} for T1A and TIA,
// {t} for every other family.
std::vector<TorusPoint> stable_class_reps(const TorusPoint& t);

}  // namespace gsp2
