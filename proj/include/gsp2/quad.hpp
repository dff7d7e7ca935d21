#pragma once

#include "gsp2/padic.hpp"

#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gsp2 {

// A quadratic extension F(sqrt(B)) of the base field, with elements a+b*sqrt(B)
// at working precision.  e = 1 (unramified, B a unit: B = A = eps0) or
// e = 2 (ramified, ord B = 1: B = AD = -pi or B = D = -A^{-1}pi).
struct Q2 {
    FieldPtr F;
    Fp B;       // the square of the generator
    int e = 1;  // ramification index
    Fp a, b;    // coordinates w.r.t. {1, sqrt(B)}

    Q2() = default;
    Q2(FieldPtr f, Fp B_, int e_, Fp a_, Fp b_)
        : F(std::move(f)), B(B_), e(e_), a(a_), b(b_) {}

    static Q2 make(const FieldPtr& F, const Fp& B, int e, long long a, long long b) {
        return Q2(F, B, e, Fp(F, a), Fp(F, b));
    }
    static Q2 from_base(const FieldPtr& F, const Fp& B, int e, const Fp& a) {
        return Q2(F, B, e, a, Fp::zero(F));
    }

    bool same_ext(const Q2& o) const { return B == o.B && e == o.e; }

    Q2 operator+(const Q2& o) const { return Q2(F, B, e, a + o.a, b + o.b); }
    Q2 operator-(const Q2& o) const { return Q2(F, B, e, a - o.a, b - o.b); }
    Q2 operator*(const Q2& o) const {
        return Q2(F, B, e, a * o.a + b * o.b * B, a * o.b + b * o.a);
    }
    Q2 operator-() const { return Q2(F, B, e, -a, -b); }
    bool operator==(const Q2& o) const { return a == o.a && b == o.b; }

    Q2 conj() const { return Q2(F, B, e, a, -b); }   // Galois involution
    Fp norm() const { return a * a - b * b * B; }    // lands in F
    Fp trace() const { return a + a; }

    // Valuation in uniformizer units of the extension (integer; ram index
    // stored separately so clients can convert to F-normalized halves).
    int val_ext() const {
        int va = a.val(), vb = b.val();
        if (e == 1) return std::min(va, vb);
        return std::min(2 * va, 2 * vb + 1);
    }
    bool is_unit() const { return val_ext() == 0; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    Q2 inv() const {
        Fp n = norm();
        if (!n.is_unit()) throw precision_error("inverse of non-unit in quadratic extension");
        Fp ni = n.inv();
        return Q2(F, B, e, a * ni, -b * ni);
    }

    Q2 pow(unsigned long long k) const {
        Q2 r = from_base(F, B, e, Fp::one(F)), base = *this;
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }
};

// --- residue field of the unramified quadratic: F_{q^2} = F_p[t]/(t^2 - eps0)

struct ResQuad {
    long long p, eps0;
    long long a, b;  // a + b t
};

inline ResQuad rq_mul(const ResQuad& x, const ResQuad& y) {
    long long p = x.p;
    return ResQuad{p, x.eps0,
                   ((x.a * y.a + ((x.b * y.b) % p) * x.eps0) % p + p) % p,
                   ((x.a * y.b + x.b * y.a) % p + p) % p};
}

inline ResQuad rq_pow(ResQuad x, unsigned long long e) {
    ResQuad r{x.p, x.eps0, 1, 0};
    while (e) {
        if (e & 1) r = rq_mul(r, x);
        x = rq_mul(x, x);
        e >>= 1;
    }
    return r;
}

// kappa on units of R_{F_A}: Euler criterion in F_{q^2}.
inline int kappa_FA(const Q2& u) {
    if (u.e != 1) throw std::domain_error("kappa_FA expects the unramified quadratic");
    if (!u.is_unit()) throw std::domain_error("kappa undefined at non-unit");
    long long p = u.F->p;
    ResQuad x{p, u.F->eps0, (long long)(u.a.r % (unsigned long long)p),
              (long long)(u.b.r % (unsigned long long)p)};
    unsigned long long e = (unsigned long long)(p * p - 1) / 2;
    ResQuad r = rq_pow(x, e);
    if (r.b != 0) throw std::logic_error("Euler criterion failed in residue field");
    return r.a == 1 ? +1 : -1;
}

// eps extended to F_A^x: (-1)^{ord_{F_A} x}.
inline int eps_FA(const Q2& x) {
    if (x.e != 1) throw std::domain_error("eps_FA expects the unramified quadratic");
    int v = x.val_ext();
    if (v >= x.F->M) throw precision_error("eps of zero residue");
    return (v % 2 == 0) ? +1 : -1;
}

// Square root of a unit of R_{F_A} (unramified quadratic), when it exists:
// residue root by brute force in F_{q^2}, then Newton lifting.
std::optional<Q2> sqrt_FA(const Q2& u);

// Norm equation N_{F_A/F}(x) = t for a unit target t: search the residue
// level, then Hensel-lift along the a-coordinate.  Errors if no solution
// exists at working precision (cannot happen for units: the unramified norm
// is onto the units).
Q2 solve_norm_FA(const FieldPtr& F, const Fp& target);

// --- enumeration oracles on unit groups ---------------------------------

// [R_ext^x : R_ext(j)^x] where R_ext(j) = R + pi^j sqrt(B) R, computed by
// counting unit residues mod pi^prec; prec >= j+1 makes the count exact.
long long unit_index_enum(const FieldPtr& F, const Fp& B, int e, int j, int prec);

// Transversal of R_ext^x / R_ext(j)^x plus the norm subgroup N(R_ext(j)^x)
// inside (R/pi^prec R)^x, for the paired coset indices.  All sets are small.
struct UnitClassData {
    std::vector<Q2> reps;                       // class representatives
    std::unordered_set<unsigned long long> norm_sub;  // N(R(j)^x) mod pi^prec
    int prec;
};

UnitClassData unit_classes(const FieldPtr& F, const Fp& B, int e, int j, int prec);

// #{(cls1, cls2) : N(cls1)/N(cls2) in N(S1) N(S2)}; this equals
// [ (U1 x U2)' : (S1 x S2)' ] for the norm-matched pair groups.
long long paired_index_enum(const FieldPtr& F, const Fp& B1, int e1, int j1,
                            const Fp& B2, int e2, int j2);

// Whether eps0 lies in N(S1(j1)) N(S2(j2)): exactly then the two square-class
// coset cells of a pair decomposition coincide and only one is enumerated.
bool eps_cells_collapse(const FieldPtr& F, const Fp& B1, int e1, int j1, const Fp& B2, int e2,
                        int j2);

}  // namespace gsp2
