#pragma once

#include "gsp2/quad.hpp"

namespace gsp2 {

// The biquadratic extension E = F(sqrt(A), sqrt(D)) with the fixed scalars
//   A  = eps0 (unit non-residue),  D = -A^{-1} pi,  AD = A*D = -pi,
// so that sqrt(AD) = sqrt(A) sqrt(D) exactly and N(sqrt(-pi)) = pi.
// Elements are coordinate 4-tuples w.r.t. {1, sqrt(A), sqrt(D), sqrt(AD)}.
struct BiquadCtx {
    FieldPtr F;
    Fp A, D, AD;
    BiquadCtx() = default;
    explicit BiquadCtx(FieldPtr f) : F(std::move(f)) {
        A = Fp(F, F->eps0);
        D = -A.inv();                 // -A^{-1} pi
        D = D.times_pk(1);
        AD = Fp(F, -F->p);            // -pi
    }
    Q2 qA(const Fp& a, const Fp& b) const { return Q2(F, A, 1, a, b); }
    Q2 qD(const Fp& a, const Fp& b) const { return Q2(F, D, 2, a, b); }
    Q2 qAD(const Fp& a, const Fp& b) const { return Q2(F, AD, 2, a, b); }
};

struct E4 {
    const BiquadCtx* C = nullptr;
    Fp x0, x1, x2, x3;  // x0 + x1 sqrt(A) + x2 sqrt(D) + x3 sqrt(AD)

    E4() = default;
    E4(const BiquadCtx& c, Fp a, Fp b, Fp d, Fp e) : C(&c), x0(a), x1(b), x2(d), x3(e) {}

    static E4 zero(const BiquadCtx& c) {
        Fp z = Fp::zero(c.F);
        return E4(c, z, z, z, z);
    }
    static E4 one(const BiquadCtx& c) {
        Fp z = Fp::zero(c.F);
        return E4(c, Fp::one(c.F), z, z, z);
    }
    static E4 from_FA(const BiquadCtx& c, const Q2& u) {  // u = a + b sqrt(A)
        Fp z = Fp::zero(c.F);
        return E4(c, u.a, u.b, z, z);
    }
    static E4 from_FD(const BiquadCtx& c, const Q2& u) {
        Fp z = Fp::zero(c.F);
        return E4(c, u.a, z, u.b, z);
    }
    static E4 from_FAD(const BiquadCtx& c, const Q2& u) {
        Fp z = Fp::zero(c.F);
        return E4(c, u.a, z, z, u.b);
    }

    E4 operator+(const E4& o) const { return E4(*C, x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3); }
    E4 operator-(const E4& o) const { return E4(*C, x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3); }
    E4 operator-() const { return E4(*C, -x0, -x1, -x2, -x3); }
    bool operator==(const E4& o) const {
        return x0 == o.x0 && x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
    }

    // Multiplication from the relations sA^2=A, sD^2=D, sAD = sA sD,
    // sA*sAD = A sD, sD*sAD = D sA.
    E4 operator*(const E4& o) const {
        const Fp &A = C->A, &D = C->D, &AD = C->AD;
        Fp y0 = x0 * o.x0 + A * (x1 * o.x1) + D * (x2 * o.x2) + AD * (x3 * o.x3);
        Fp y1 = x0 * o.x1 + x1 * o.x0 + D * (x2 * o.x3 + x3 * o.x2);
        Fp y2 = x0 * o.x2 + x2 * o.x0 + A * (x1 * o.x3 + x3 * o.x1);
        Fp y3 = x0 * o.x3 + x3 * o.x0 + x1 * o.x2 + x2 * o.x1;
        return E4(*C, y0, y1, y2, y3);
    }

    // Galois group {1, gA, gD, gA gD}: gX negates sqrt(X) (and sqrt(AD) when
    // exactly one of its factors flips).
    E4 gA() const { return E4(*C, x0, -x1, x2, -x3); }
    E4 gD() const { return E4(*C, x0, x1, -x2, -x3); }
    E4 gAD() const { return E4(*C, x0, -x1, -x2, x3); }

    bool is_zero() const { return x0.is_zero() && x1.is_zero() && x2.is_zero() && x3.is_zero(); }

    // Projections: assert the complementary coordinates vanish.
    Q2 to_FA() const {
        if (!x2.is_zero() || !x3.is_zero()) throw precision_error("norm projection failed (F_A)");
        return Q2(C->F, C->A, 1, x0, x1);
    }
    Q2 to_FD() const {
        if (!x1.is_zero() || !x3.is_zero()) throw precision_error("norm projection failed (F_D)");
        return Q2(C->F, C->D, 2, x0, x2);
    }
    Q2 to_FAD() const {
        if (!x1.is_zero() || !x2.is_zero()) throw precision_error("norm projection failed (F_AD)");
        return Q2(C->F, C->AD, 2, x0, x3);
    }

    // Relative norms to the three quadratic subfields.
    Q2 norm_to_FA() const { return ((*this) * gD()).to_FA(); }
    Q2 norm_to_FD() const { return ((*this) * gA()).to_FD(); }
    Q2 norm_to_FAD() const { return ((*this) * gAD()).to_FAD(); }

    // ord_E with the uniformizer of E; e(E/F) = 2, so ord_E(pi) = 2.  Since
    // E/F_D is unramified, ord_E(x) = ord_{F_D}-style min over coordinates.
    int ord_E() const {
        // coordinates w.r.t. {1, sqrt(A)} over F_D: (x0 + x2 sqrt(D)) and
        // (x1 + x3 sqrt(D)); ord_E = min of their F_D-valuations.
        int v0 = std::min(2 * x0.val(), 2 * x2.val() + 1);
        int v1 = std::min(2 * x1.val(), 2 * x3.val() + 1);
        return std::min(v0, v1);
    }
    bool is_unit() const { return ord_E() == 0; }
};

// eps extended to E^x: i^{ord_E x}, exposed as the exponent mod 4.
inline int eps_E_quarter(const E4& x) {
    int v = x.ord_E();
    if (v >= 2 * x.C->F->M) throw precision_error("eps of zero residue");
    return v % 4;
}

}  // namespace gsp2
