#pragma once

#include "gsp2/biquad.hpp"
#include "gsp2/matrix.hpp"
#include "gsp2/padic.hpp"
#include "gsp2/quad.hpp"

#include <optional>

namespace gsp2 {

using M2F = Mat2<Fp>;
using M4F = Mat4<Fp>;
using M2Q = Mat2<Q2>;  // 2x2 over F_A

// GSp(2) with the antidiagonal form J = antidiag(1, 1, -1, -1):
// {g : tg J g = lambda(g) J}.
M4F symplectic_form(const FieldPtr& F);

struct GspElement {
    M4F g;
    Fp lambda;
};

// Returns the similitude factor when g satisfies the symplectic identity
// exactly at working precision; nullopt otherwise.
std::optional<Fp> similitude(const M4F& g);

GspElement make_gsp(const M4F& g);  // throws if not a similitude

// phi^B_rho(a + b sqrt(B)) = (a, b B rho; b / rho, a); rho = 1 gives phi^B.
M2F phi_quad(const Q2& xi);
M2F phi_quad_rho(const Q2& xi, const Fp& rho_inv_times, int rho_val);  // see .cpp

// phi with the twist rho = pi^k (k >= 0): (a, b B pi^k; b pi^-k, a); requires
// pi^k | b.
std::optional<M2F> phi_quad_pw(const Q2& xi, int k);

// Block interleave [g1, g2]: outer corners from g1, middle block g2.
M4F bracket(const M2F& g1, const M2F& g2);

// The embedding of 2x2 matrices over F_A into GL(4, F) used for the quartic
// family: x = x1 + x2 / sqrt(A) coordinates, mapped blockwise.
M4F embed_CA(const M2Q& h);

// Multiplication by l = x + y sqrt(D) on E = F_A(sqrt(D)) as a 2x2 matrix
// over F_A.
M2Q phi_FA(const Q2& x, const Q2& y, const Q2& D);

bool is_integral(const M4F& g);
bool is_integral2(const M2F& g);

// Topological unipotence of delta in K: the reduction mod pi is unipotent,
// i.e. (delta - 1)^4 = 0 over the residue field.
bool topologically_unipotent(const M4F& g);

// Kazhdan decomposition delta = s u = u s with s of order prime to p and
// u topologically unipotent: s = delta^c with c = 1 mod d, c = 0 mod p^(M+2),
// d the prime-to-p part of the order of the reduction.
struct KazhdanParts {
    M4F s, u;
};
KazhdanParts kazhdan_decompose(const M4F& delta);

M4F mat4_identity(const FieldPtr& F);
M2F mat2_identity(const FieldPtr& F);
M4F mat4_pow(const M4F& g, unsigned long long e);
std::optional<M4F> mat4_inverse(const M4F& g);
std::optional<M2F> mat2_inverse(const M2F& g);

}  // namespace gsp2
