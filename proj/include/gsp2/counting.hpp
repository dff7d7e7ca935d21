#pragma once

#include "gsp2/gsp.hpp"
#include "gsp2/tower.hpp"

#include <optional>

namespace gsp2 {

// #{w in SL(2, Z/p^m) : M1 w = w (e M2 e) mod p^m}, the intertwiner count of
// one (m, r)-cell of the pair-group enumeration.  M1, M2 are the exactly
// conjugated 2x2 blocks of r^-1 delta r; non-integral blocks give 0.
// m = 0 counts the single trivial coset.
long long count_sl2_conj(const std::optional<M2F>& M1, const std::optional<M2F>& M2, int m);

// |SL(2, Z/p^m)| by enumeration (cached); the scalar-block cells equal this.
long long sl2_order(const FieldPtr& F, int m);

// Quartic-chain analogue: #{y : y sigma(y) = 1, det y = 1,
// M y = y sigma(M) mod pi^m} over R_{F_A}/pi^m, parametrized by
// y = (y1, sqrt(A) b; sqrt(A) c, sigma(y1)).
long long count_sigma_unitary(const std::optional<M2Q>& M, int m);

// Exact p^k-shift helpers for block construction: x * pi^k for k >= 0, or
// exact division for k < 0 (nullopt if not divisible).
std::optional<Fp> shift_pk(const Fp& x, int k);
std::optional<Q2> shift_pk(const Q2& x, int k);

}  // namespace gsp2
