#pragma once

#include "gsp2/quad.hpp"

namespace gsp2 {

// The quartic extension E = F_A(sqrt(D)) with D in F_A^x - F_A^x2 - F^x and
// the order-4 automorphism s with  s sqrt(A) = -sqrt(A),  s sqrt(D) = sqrt(sD),
// s^2 sqrt(D) = -sqrt(D).  With F_A/F unramified such an E is automatically
// cyclic over F: sD/D is a square in F_A, and the branch w of its square root
// with w * conj(w) = -1 realizes sqrt(sD) = w sqrt(D) inside E.  The degree-8
// presentation {1, sqrt(D), sqrt(sD), sqrt(D sD)} collapses onto this module
// via sqrt(sD) = w sqrt(D), sqrt(D sD) = w D.
struct QuarticCtx {
    FieldPtr F;
    Fp A;
    Q2 D;        // element of F_A
    Q2 w;        // w^2 = sD/D, w*sigma(w) = -1
    bool ram;    // E/F_A ramified?

    QuarticCtx() = default;
    QuarticCtx(FieldPtr f, const Q2& D_) : F(std::move(f)), A(Fp(F, F->eps0)), D(D_) {
        // sD/D computed on the unit part (the pi-power cancels)
        int v = D.val_ext();
        auto ua = D.a.div_pk(v), ub = D.b.div_pk(v);
        if (!ua || !ub) throw std::invalid_argument("quartic datum: mixed valuation");
        Q2 Du(F, D.B, D.e, *ua, *ub);
        Q2 ratio = Du.conj() * Du.inv();
        auto r = sqrt_FA(ratio);
        if (!r) throw std::domain_error("sD/D is not a square: extension not cyclic over F");
        w = *r;
        Q2 nw = w * w.conj();
        Q2 minus_one = Q2::make(F, A, 1, -1, 0);
        if (!(nw == minus_one)) {
            // N(w) = +1 happens exactly when D in F * (F_A^x)^2, i.e. the
            // biquadratic case, which has no order-4 automorphism
            throw std::domain_error("D lies in F (biquadratic case), no order-4 automorphism");
        }
        if (D.val_ext() != 0 && D.val_ext() != 1)
            throw std::invalid_argument("quartic datum must have ord(D) in {0,1}");
        ram = (D.val_ext() == 1);
    }

    // unramified E/F_A: D a unit non-square of R_{F_A} outside F
    static QuarticCtx unramified(const FieldPtr& F) {
        Fp A(F, F->eps0);
        for (long long a = 1; a < F->p; ++a)
            for (long long b = 1; b < F->p; ++b) {
                Q2 D = Q2::make(F, A, 1, a, b);
                if (kappa_FA(D) != -1) continue;
                try {
                    return QuarticCtx(F, D);
                } catch (const std::domain_error&) {}
            }
        throw std::logic_error("no unramified quartic datum found");
    }

    // ramified E/F_A: D = -eps0' pi with eps0' a non-square unit of R_{F_A}
    // outside F^x
    static QuarticCtx ramified(const FieldPtr& F) {
        Fp A(F, F->eps0);
        for (long long a = 1; a < F->p; ++a)
            for (long long b = 1; b < F->p; ++b) {
                Q2 e0 = Q2::make(F, A, 1, a, b);
                if (kappa_FA(e0) != -1) continue;
                Q2 D = (-e0) * Q2::make(F, A, 1, F->p, 0);
                try {
                    return QuarticCtx(F, D);
                } catch (const std::domain_error&) {}
            }
        throw std::logic_error("no ramified quartic datum found");
    }
};

// Element x + y sqrt(D) of E over F_A.
struct QE4 {
    const QuarticCtx* C = nullptr;
    Q2 x, y;

    QE4() = default;
    QE4(const QuarticCtx& c, const Q2& x_, const Q2& y_) : C(&c), x(x_), y(y_) {}

    static QE4 one(const QuarticCtx& c) {
        return QE4(c, Q2::make(c.F, c.A, 1, 1, 0), Q2::make(c.F, c.A, 1, 0, 0));
    }

    QE4 operator+(const QE4& o) const { return QE4(*C, x + o.x, y + o.y); }
    QE4 operator-(const QE4& o) const { return QE4(*C, x - o.x, y - o.y); }
    QE4 operator*(const QE4& o) const {
        return QE4(*C, x * o.x + y * o.y * C->D, x * o.y + y * o.x);
    }
    QE4 operator-() const { return QE4(*C, -x, -y); }
    bool operator==(const QE4& o) const { return x == o.x && y == o.y; }

    // order-4 automorphism: s(x + y sqrt(D)) = sx + sy * w sqrt(D)
    QE4 sigma() const { return QE4(*C, x.conj(), y.conj() * C->w); }
    QE4 sigma_pow(int k) const {
        QE4 r = *this;
        for (int i = 0; i < ((k % 4) + 4) % 4; ++i) r = r.sigma();
        return r;
    }

    Q2 norm_to_FA() const { return x * x - y * y * C->D; }  // l * s^2(l)

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    // ord_E in E-uniformizer units.
    int ord_E() const {
        if (!C->ram) return std::min(x.val_ext(), y.val_ext());
        return std::min(2 * x.val_ext(), 2 * y.val_ext() + 1);
    }
    bool is_unit() const { return ord_E() == 0; }
};

// kappa on units of R_{F_A} reused for the transfer factors of the ramified
// quartic case: eps_{E/F_A}(unit u) = kappa_FA(u); on B pi^N it evaluates to
// (-1)^N kappa_FA(B).
inline int eps_E_over_FA(const QuarticCtx& C, const Q2& x) {
    int v = x.val_ext();
    if (v >= C.F->M) throw precision_error("eps_{E/F_A} of zero residue");
    Q2 u = x;
    if (v > 0) {
        auto a = x.a.div_pk(v), b = x.b.div_pk(v);
        if (!a || !b) throw precision_error("eps_{E/F_A}: valuation strip failed");
        u = Q2(x.F, x.B, x.e, *a, *b);
    }
    if (!C.ram) {
        // unramified E/F_A: the associated character is unramified, value (-1)^v
        return (v % 2 == 0) ? +1 : -1;
    }
    // ramified: N(E^x) = <e0 pi> x squares where D = -e0 pi, so on units eps
    // agrees with kappa_FA and eps(pi) = kappa_FA(e0).
    auto da = C.D.a.div_pk(1);
    auto db = C.D.b.div_pk(1);
    if (!da || !db) throw precision_error("eps_{E/F_A}: malformed ramified datum");
    Q2 e0 = -Q2(C.F, C.D.B, C.D.e, *da, *db);  // D = -e0 pi
    int eps_pi = kappa_FA(e0);
    int s = kappa_FA(u);
    if (v % 2 != 0) s *= eps_pi;
    return s;
}

}  // namespace gsp2
