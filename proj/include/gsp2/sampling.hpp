#pragma once

#include "gsp2/torus.hpp"

namespace gsp2 {

// Deterministic constructors of random torus points with prescribed derived
// valuations.  Each samples coordinates, rebuilds the point, asserts that the
// derived data match the request and retries a bounded number of times.

// TIA coordinates: two unramified legs with equal norms, unit a-parts = 1 mod
// pi, ord Im = (N1, N2) >= 1 and ord(a1 - a2) = X.  Feasibility: X = 2 min
// when N1 != N2; X >= 2N when N1 = N2.
TorusPoint sample_TIA(const Workspace& W, Sampler& rng, int N1, int N2, int X, int rho = 0);

// The matched H1 source (gl-slot = inner leg, E-slot = outer leg).
TorusPoint h1_source_of_TIA(const TorusPoint& g);

// TIIIAAD: unramified outer leg (N1 >= 1), ramified inner leg (N2 >= 0);
// X = min(2 N1, 2 N2 + 1) is forced.
TorusPoint sample_TIIIAAD(const Workspace& W, Sampler& rng, int N1, int N2);
TorusPoint h1_source_of_TIIIAAD(const TorusPoint& g);

// T2D biquadratic source with n = min(N1, N2) and the requested square class
// of B1 B2; the matched TIIIDAD target has X = 2N + 1 automatically.
TorusPoint sample_T2D_biquad(const Workspace& W, Sampler& rng, int N1, int N2, int kappaB1B2);

// T2D quartic source with n = N (and kappaB over F_A in the ramified case).
TorusPoint sample_T2D_quartic(const Workspace& W, Sampler& rng, bool ram, int N, int kappaB);

// Standalone H1 points (for the stable-side sweeps).
TorusPoint sample_T1A(const Workspace& W, Sampler& rng, int n_gl, int rho = 0);
TorusPoint sample_T1AD(const Workspace& W, Sampler& rng, int N2);

}  // namespace gsp2
