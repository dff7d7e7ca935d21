#include "gsp2/gsp.hpp"

namespace gsp2 {

M4F symplectic_form(const FieldPtr& F) {
    M4F J;
    Fp z = Fp::zero(F), one = Fp::one(F);
    for (auto& x : J.e) x = z;
    J.at(0, 3) = one;
    J.at(1, 2) = one;
    J.at(2, 1) = -one;
    J.at(3, 0) = -one;
    return J;
}

M4F mat4_identity(const FieldPtr& F) {
    M4F I;
    Fp z = Fp::zero(F);
    for (auto& x : I.e) x = z;
    for (int i = 0; i < 4; ++i) I.at(i, i) = Fp::one(F);
    return I;
}

M2F mat2_identity(const FieldPtr& F) {
    Fp z = Fp::zero(F), one = Fp::one(F);
    return M2F(one, z, z, one);
}

std::optional<Fp> similitude(const M4F& g) {
    const FieldPtr& F = g.e[0].F;
    M4F J = symplectic_form(F);
    M4F m = g.transpose() * J * g;
    // m must equal lambda * J exactly
    Fp lam = m.at(0, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Fp expect = J.at(i, j) * lam;
            if (!(m.at(i, j) == expect)) return std::nullopt;
        }
    return lam;
}

GspElement make_gsp(const M4F& g) {
    auto lam = similitude(g);
    if (!lam) throw std::domain_error("matrix is not a symplectic similitude");
    return GspElement{g, *lam};
}

M2F phi_quad(const Q2& xi) {
    return M2F(xi.a, xi.b * xi.B, xi.b, xi.a);
}

std::optional<M2F> phi_quad_pw(const Q2& xi, int k) {
    auto bl = xi.b.div_pk(k);
    if (!bl) return std::nullopt;
    return M2F(xi.a, xi.b.times_pk(k) * xi.B, *bl, xi.a);
}

M4F bracket(const M2F& g1, const M2F& g2) {
    const FieldPtr& F = g1.e[0].F;
    if (!(g1.det() == g2.det())) throw std::domain_error("not in C0: determinant mismatch");
    M4F r;
    Fp z = Fp::zero(F);
    for (auto& x : r.e) x = z;
    r.at(0, 0) = g1.at(0, 0);
    r.at(0, 3) = g1.at(0, 1);
    r.at(3, 0) = g1.at(1, 0);
    r.at(3, 3) = g1.at(1, 1);
    r.at(1, 1) = g2.at(0, 0);
    r.at(1, 2) = g2.at(0, 1);
    r.at(2, 1) = g2.at(1, 0);
    r.at(2, 2) = g2.at(1, 1);
    return r;
}

M2Q phi_FA(const Q2& x, const Q2& y, const Q2& D) {
    return M2Q(x, y * D, y, x);
}

M4F embed_CA(const M2Q& h) {
    // For entries z = z1 + z2 / sqrt(A) of h (so z = z1 + (z2/A) sqrt(A)),
    // the 4x4 image interleaves the coordinates blockwise:
    //   row pattern per the standard restriction-of-scalars embedding with
    //   the symplectic form antidiag(1,1,-1,-1).
    const FieldPtr& F = h.e[0].F;
    Fp A(F, F->eps0);
    Fp Ai = A.inv();
    // z = a + b sqrt(A) stored as Q2; here z1 = a, z2 = b A (b = z2/A)
    auto z1 = [&](const Q2& z) { return z.a; };
    auto z2 = [&](const Q2& z) { return z.b * A; };
    const Q2 &a = h.at(0, 0), &b = h.at(0, 1), &c = h.at(1, 0), &d = h.at(1, 1);
    M4F r;
    r.at(0, 0) = z1(a);      r.at(0, 1) = z2(a) * Ai; r.at(0, 2) = z2(b);      r.at(0, 3) = z1(b);
    r.at(1, 0) = z2(a);      r.at(1, 1) = z1(a);      r.at(1, 2) = z1(b) * A;  r.at(1, 3) = z2(b);
    r.at(2, 0) = z2(c) * Ai; r.at(2, 1) = z1(c) * Ai; r.at(2, 2) = z1(d);      r.at(2, 3) = z2(d) * Ai;
    r.at(3, 0) = z1(c);      r.at(3, 1) = z2(c) * Ai; r.at(3, 2) = z2(d);      r.at(3, 3) = z1(d);
    return r;
}

bool is_integral(const M4F&) { return true; }  // residues are integral by type
bool is_integral2(const M2F&) { return true; }

bool topologically_unipotent(const M4F& g) {
    const FieldPtr& F = g.e[0].F;
    // (g - 1)^4 = 0 mod pi
    M4F n = g - mat4_identity(F);
    auto reduce_zero = [&](const M4F& m) {
        for (const auto& x : m.e)
            if (x.r % (unsigned long long)F->p != 0) return false;
        return true;
    };
    M4F n2 = n * n;
    return reduce_zero(n2 * n2);
}

M4F mat4_pow(const M4F& g, unsigned long long e) {
    const FieldPtr& F = g.e[0].F;
    M4F r = mat4_identity(F), b = g;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {
// cofactor inverse over the residue ring; valid only for unit determinant
std::optional<M4F> inv4(const M4F& g) {
    const FieldPtr& F = g.e[0].F;
    // Gauss-Jordan over Z/p^M with unit pivots
    M4F a = g, inv = mat4_identity(F);
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a.at(r, col).is_unit()) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < 4; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Fp pi = a.at(col, col).inv();
        for (int j = 0; j < 4; ++j) {
            a.at(col, j) = a.at(col, j) * pi;
            inv.at(col, j) = inv.at(col, j) * pi;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            Fp f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}
}  // namespace

std::optional<M4F> mat4_inverse(const M4F& g) { return inv4(g); }

std::optional<M2F> mat2_inverse(const M2F& g) {
    Fp d = g.det();
    if (!d.is_unit()) return std::nullopt;
    Fp di = d.inv();
    return M2F(g.at(1, 1) * di, -g.at(0, 1) * di, -g.at(1, 0) * di, g.at(0, 0) * di);
}

KazhdanParts kazhdan_decompose(const M4F& delta) {
    const FieldPtr& F = delta.e[0].F;
    long long p = F->p;
    // order d' of the reduction mod pi; strip its p-part
    M4F x = delta;
    auto reduced_is_identity = [&](const M4F& m) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                unsigned long long want = (i == j) ? 1 : 0;
                if (m.at(i, j).r % (unsigned long long)p != want) return false;
            }
        return true;
    };
    long long order = 1;
    M4F y = delta;
    const long long order_cap = 4000000;  // far above max element order of GL4(F_q)
    while (!reduced_is_identity(y)) {
        y = y * delta;
        if (++order > order_cap) throw precision_error("reduction order did not terminate");
    }
    long long d = order;
    while (d % p == 0) d /= p;
    // c = 1 mod d, c = 0 mod p^(M+2):  c = p^(M+2) * (p^-(M+2) mod d)
    // computed as an exponent; use exponent arithmetic mod d only.
    unsigned long long pk = 1;
    for (int i = 0; i < F->M + 2; ++i) pk = pk * (unsigned long long)p % (unsigned long long)d;
    // find inverse of pk mod d
    unsigned long long invpk = 1;
    for (unsigned long long t = 1; t <= (unsigned long long)d; ++t)
        if ((pk * t) % (unsigned long long)d == 1) { invpk = t; break; }
    // exponent c = p^(M+2) * invpk  (as a big integer; apply as repeated pow)
    M4F s = mat4_pow(delta, invpk);
    for (int i = 0; i < F->M + 2; ++i) s = mat4_pow(s, (unsigned long long)p);
    auto si = mat4_inverse(s);
    if (!si) throw precision_error("absolutely semisimple part not invertible");
    M4F u = *si * delta;
    return KazhdanParts{s, u};
}

}  // namespace gsp2
