#include "gsp2/torus.hpp"

#include <algorithm>

namespace gsp2 {

std::string family_name(TorusFamily f) {
    switch (f) {
        case TorusFamily::T1A: return "T1A";
        case TorusFamily::T1AD: return "T1AD";
        case TorusFamily::T2D: return "T2D";
        case TorusFamily::TIA: return "TIA";
        case TorusFamily::TIIIAAD: return "TIIIAAD";
        case TorusFamily::TIIIDAD: return "TIIIDAD";
        case TorusFamily::TIVAD: return "TIVAD";
    }
    return "?";
}

std::optional<TorusFamily> family_from_name(const std::string& s) {
    for (auto f : {TorusFamily::T1A, TorusFamily::T1AD, TorusFamily::T2D, TorusFamily::TIA,
                   TorusFamily::TIIIAAD, TorusFamily::TIIIDAD, TorusFamily::TIVAD})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

namespace {

int val_or_M(const Fp& x) { return x.val(); }

Fp unit_part_or_zero(const Fp& x) {
    if (x.is_zero()) return x;
    return x.unit_part();
}

void check_norms_equal(const Fp& n1, const Fp& n2, const char* fam) {
    if (!(n1 == n2)) throw std::domain_error(std::string(fam) + ": norm condition violated");
}

}  // namespace

TorusPoint make_T1A(const Workspace& W, const Q2& gl, const Q2& e_slot, int rho) {
    check_norms_equal(gl.norm(), e_slot.norm(), "T1A");
    if (!gl.is_unit() || !e_slot.is_unit()) throw std::domain_error("T1A: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::T1A;
    t.W = &W;
    t.leg1 = gl;
    t.leg2 = e_slot;
    t.rho = rho;
    t.N1 = val_or_M(e_slot.b);   // outer slot of the norm image
    t.N2 = val_or_M(gl.b);       // inner slot (drives the stable integral)
    t.X = val_or_M(e_slot.a - gl.a);
    t.N = std::min(t.N1, t.N2);
    return t;
}

TorusPoint make_T1AD(const Workspace& W, const Q2& gl_ad, const Q2& e_a) {
    check_norms_equal(gl_ad.norm(), e_a.norm(), "T1AD");
    if (gl_ad.val_ext() != 0 || e_a.val_ext() != 0)
        throw std::domain_error("T1AD: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::T1AD;
    t.W = &W;
    t.leg1 = gl_ad;
    t.leg2 = e_a;
    t.N1 = val_or_M(e_a.b);     // unramified leg (outer in the norm image)
    t.N2 = val_or_M(gl_ad.b);   // ramified leg
    t.X = val_or_M(e_a.a - gl_ad.a);
    t.N = std::min(t.N1, t.N2);
    return t;
}

TorusPoint make_T2D_biquad(const Workspace& W, const E4& l, const Fp& c) {
    if (!l.is_unit() || !c.is_unit()) throw std::domain_error("T2D: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::T2D;
    t.W = &W;
    t.kind = ExtKind::Biquadratic;
    t.l_biq = l;
    t.c = c;
    // l = alpha + beta sqrt(D) over F_A: beta = (x2, x3)
    t.n = std::min(l.x2.val(), l.x3.val());
    // derived data of the matched G-side point
    Q2 xi = (l * l.gA()).to_FD();    // N_{E/F_D} l
    Q2 ze = (l * l.gAD()).to_FAD();  // N_{E/F_AD} l
    t.N1 = val_or_M(xi.b);
    t.N2 = val_or_M(ze.b);
    t.N = std::min(t.N1, t.N2);
    t.X = val_or_M(xi.a - ze.a);
    t.B1 = unit_part_or_zero(xi.b);
    t.B2 = unit_part_or_zero(ze.b);
    return t;
}

TorusPoint make_T2D_quartic(const Workspace& W, bool ram, const QE4& l, const Fp& c) {
    if (!l.is_unit() || !c.is_unit()) throw std::domain_error("T2D: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::T2D;
    t.W = &W;
    t.kind = ram ? ExtKind::QuarticRam : ExtKind::QuarticUnram;
    t.l_qua = l;
    t.c = c;
    t.n = l.y.val_ext();
    // matched G-side data: xi = l * sigma(l) = xi1 + xi2 sqrt(D)
    QE4 xi = l * l.sigma();
    t.xi1 = xi.x;
    t.xi2 = xi.y;
    t.N = xi.y.val_ext();
    t.X = xi.x.b.val();  // ord_{F_A}(xi1 - sigma xi1) = ord of the sqrt(A)-coordinate
    if (!xi.y.is_zero()) {
        int v = xi.y.val_ext();
        auto a = xi.y.a.div_pk(v), b = xi.y.b.div_pk(v);
        t.B_A = Q2(W.F, xi.y.B, xi.y.e, *a, *b);
    }
    return t;
}

TorusPoint make_TIA(const Workspace& W, const Q2& outer, const Q2& inner, int rho, bool strict) {
    check_norms_equal(outer.norm(), inner.norm(), "TIA");
    if (!outer.is_unit() || !inner.is_unit()) throw std::domain_error("TIA: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::TIA;
    t.W = &W;
    t.leg1 = outer;
    t.leg2 = inner;
    t.rho = rho;
    t.N1 = val_or_M(outer.b);
    t.N2 = val_or_M(inner.b);
    t.X = val_or_M(outer.a - inner.a);
    t.N = std::min(t.N1, t.N2);
    t.B1 = unit_part_or_zero(outer.b);
    t.B2 = unit_part_or_zero(inner.b);
    if (strict) {
        if (!is_regular(t)) throw std::domain_error("TIA: non-regular point");
        if (!topologically_unipotent(realize_G(t)))
            throw std::domain_error("TIA: not topologically unipotent");
    }
    return t;
}

TorusPoint make_TIIIAAD(const Workspace& W, const Q2& outer, const Q2& inner, bool strict) {
    check_norms_equal(outer.norm(), inner.norm(), "TIIIAAD");
    if (!outer.is_unit() || inner.val_ext() != 0)
        throw std::domain_error("TIIIAAD: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::TIIIAAD;
    t.W = &W;
    t.leg1 = outer;
    t.leg2 = inner;
    t.N1 = val_or_M(outer.b);
    t.N2 = val_or_M(inner.b);
    t.X = val_or_M(outer.a - inner.a);
    t.N = std::min(t.N1, t.N2);
    t.B1 = unit_part_or_zero(outer.b);
    t.B2 = unit_part_or_zero(inner.b);
    if (strict) {
        if (!is_regular(t)) throw std::domain_error("TIIIAAD: non-regular point");
        if (!topologically_unipotent(realize_G(t)))
            throw std::domain_error("TIIIAAD: not topologically unipotent");
    }
    return t;
}

TorusPoint make_TIIIDAD(const Workspace& W, const Q2& outer, const Q2& inner, const Fp& c,
                        bool strict) {
    check_norms_equal(outer.norm(), inner.norm(), "TIIIDAD");
    if (outer.val_ext() != 0 || inner.val_ext() != 0 || !c.is_unit())
        throw std::domain_error("TIIIDAD: non-unit coordinates");
    TorusPoint t;
    t.fam = TorusFamily::TIIIDAD;
    t.W = &W;
    t.leg1 = outer;
    t.leg2 = inner;
    t.c = c;
    t.N1 = val_or_M(outer.b);
    t.N2 = val_or_M(inner.b);
    t.X = val_or_M(outer.a - inner.a);
    t.N = std::min(t.N1, t.N2);
    t.B1 = unit_part_or_zero(outer.b);
    t.B2 = unit_part_or_zero(inner.b);
    if (strict) {
        if (!is_regular(t)) throw std::domain_error("TIIIDAD: non-regular point");
        if (!topologically_unipotent(realize_G(t)))
            throw std::domain_error("TIIIDAD: not topologically unipotent");
    }
    return t;
}

TorusPoint make_TIVAD(const Workspace& W, bool ram, const Q2& xi1, const Q2& xi2, const Fp& c,
                      bool strict) {
    TorusPoint t;
    t.fam = TorusFamily::TIVAD;
    t.W = &W;
    t.kind = ram ? ExtKind::QuarticRam : ExtKind::QuarticUnram;
    t.xi1 = xi1;
    t.xi2 = xi2;
    t.c = c;
    const QuarticCtx& C = t.qctx();
    // torus condition: N_{E/F_A}(xi1 + xi2 sqrt(D)) lies in F
    Q2 nrm = xi1 * xi1 - xi2 * xi2 * C.D;
    if (!nrm.b.is_zero()) throw std::domain_error("TIVAD: norm condition violated");
    if (!c.is_unit()) throw std::domain_error("TIVAD: non-unit center");
    t.N = xi2.val_ext();
    t.X = xi1.b.val();
    if (!xi2.is_zero()) {
        int v = xi2.val_ext();
        auto a = xi2.a.div_pk(v), b = xi2.b.div_pk(v);
        t.B_A = Q2(W.F, xi2.B, xi2.e, *a, *b);
    }
    if (strict) {
        if (!is_regular(t)) throw std::domain_error("TIVAD: non-regular point");
        if (!topologically_unipotent(realize_G(t)))
            throw std::domain_error("TIVAD: not topologically unipotent");
    }
    return t;
}

M4F realize_G(const TorusPoint& t) {
    const FieldPtr& F = t.W->F;
    switch (t.fam) {
        case TorusFamily::TIA: {
            M2F outer = phi_quad(t.leg1);
            auto inner = phi_quad_pw(t.leg2, t.rho);
            if (!inner) throw precision_error("TIA: twisted leg not integral");
            return bracket(outer, *inner);
        }
        case TorusFamily::TIIIAAD:
            return bracket(phi_quad(t.leg1), phi_quad(t.leg2));
        case TorusFamily::TIIIDAD: {
            M2F g1 = phi_quad(t.leg1);
            M2F g2 = phi_quad(t.leg2);
            M2F cI(t.c, Fp::zero(F), Fp::zero(F), t.c);
            return bracket(cI * g1, cI * g2);
        }
        case TorusFamily::TIVAD: {
            const QuarticCtx& C = t.qctx();
            Q2 cq = Q2::from_base(F, Fp(F, F->eps0), 1, t.c);
            M2Q h = phi_FA(cq * t.xi1, cq * t.xi2, C.D);
            return embed_CA(h);
        }
        default:
            throw std::domain_error("realize_G: not a G-side family");
    }
}

M2F realize_H1_gl(const TorusPoint& t) {
    if (t.fam == TorusFamily::T1A) {
        auto m = phi_quad_pw(t.leg1, t.rho);
        if (!m) throw precision_error("T1A: twisted leg not integral");
        return *m;
    }
    if (t.fam == TorusFamily::T1AD) return phi_quad(t.leg1);
    throw std::domain_error("realize_H1_gl: not an H1 family");
}

M2Q realize_H2_gl(const TorusPoint& t) {
    if (t.fam != TorusFamily::T2D) throw std::domain_error("realize_H2_gl: not T2D");
    const FieldPtr& F = t.W->F;
    if (t.kind == ExtKind::Biquadratic) {
        // l = alpha + beta sqrt(D), alpha = x0 + x1 sqrt(A), beta = x2 + x3 sqrt(A)
        Fp A(F, F->eps0);
        Q2 alpha(F, A, 1, t.l_biq.x0, t.l_biq.x1);
        Q2 beta(F, A, 1, t.l_biq.x2, t.l_biq.x3);
        Q2 D = Q2::from_base(F, A, 1, t.W->bi.D);
        return phi_FA(alpha, beta, D);
    }
    return phi_FA(t.l_qua.x, t.l_qua.y, t.qctx().D);
}

std::vector<E4> eigenvalues_biq(const TorusPoint& t) {
    const BiquadCtx& C = t.W->bi;
    auto fa = [&](const Q2& x) { return E4::from_FA(C, x); };
    switch (t.fam) {
        case TorusFamily::TIA: {
            E4 xi = fa(t.leg1), ze = fa(t.leg2);
            return {xi, ze, ze.gA(), xi.gA()};
        }
        case TorusFamily::TIIIAAD: {
            E4 xi = fa(t.leg1), ze = E4::from_FAD(C, t.leg2);
            return {xi, ze, ze.gD(), xi.gA()};
        }
        case TorusFamily::TIIIDAD: {
            E4 xi = E4::from_FD(C, t.leg1), ze = E4::from_FAD(C, t.leg2);
            E4 cc = E4(C, t.c, Fp::zero(t.W->F), Fp::zero(t.W->F), Fp::zero(t.W->F));
            return {cc * xi, cc * ze, cc * ze.gD(), cc * xi.gD()};
        }
        case TorusFamily::T1A: {
            // image under the H1 dual map: diag(zeta, gamma, s gamma, s zeta)
            E4 gl = fa(t.leg1), es = fa(t.leg2);
            return {es, gl, gl.gA(), es.gA()};
        }
        case TorusFamily::T1AD: {
            E4 gl = E4::from_FAD(C, t.leg1), es = fa(t.leg2);
            return {es, gl, gl.gD(), es.gA()};
        }
        case TorusFamily::T2D: {
            if (t.kind != ExtKind::Biquadratic)
                throw std::domain_error("eigenvalues_biq: quartic T2D uses the quartic carrier");
            // N2 image: diag(c l s l, c l st l, c t l * s l, c t l * st l)
            const E4& l = t.l_biq;
            E4 cc = E4(C, t.c, Fp::zero(t.W->F), Fp::zero(t.W->F), Fp::zero(t.W->F));
            E4 a = cc * l * l.gA();
            E4 b = cc * l * l.gAD();
            return {a, b, b.gD(), a.gD()};
        }
        default:
            throw std::domain_error("eigenvalues_biq: unsupported family");
    }
}

std::vector<QE4> eigenvalues_qua(const TorusPoint& t) {
    const QuarticCtx& C = t.qctx();
    // eigenvalue order respects the similitude pairing t1 t4 = t2 t3
    if (t.fam == TorusFamily::TIVAD) {
        QE4 eta(C, t.xi1, t.xi2);
        Q2 cq = Q2::from_base(t.W->F, Fp(t.W->F, t.W->F->eps0), 1, t.c);
        QE4 cc(C, cq, Q2::make(t.W->F, Fp(t.W->F, t.W->F->eps0), 1, 0, 0));
        return {cc * eta, cc * eta.sigma(), cc * eta.sigma_pow(3), cc * eta.sigma_pow(2)};
    }
    if (t.fam == TorusFamily::T2D && t.kind != ExtKind::Biquadratic) {
        const QE4& l = t.l_qua;
        Q2 cq = Q2::from_base(t.W->F, Fp(t.W->F, t.W->F->eps0), 1, t.c);
        QE4 cc(C, cq, Q2::make(t.W->F, Fp(t.W->F, t.W->F->eps0), 1, 0, 0));
        QE4 x = cc * l * l.sigma();          // c l sl
        return {x, x.sigma(), x.sigma_pow(3), x.sigma_pow(2)};
    }
    throw std::domain_error("eigenvalues_qua: unsupported family");
}

std::vector<E4> norm_image_eigs_biq(const TorusPoint& h) { return eigenvalues_biq(h); }
std::vector<QE4> norm_image_eigs_qua(const TorusPoint& h) { return eigenvalues_qua(h); }

namespace {

// F-normalized valuation of a biquadratic element: ord_E / 2 in halves;
// return doubled value (i.e. ord_E itself) to stay integral.
int ordE_biq(const E4& x) { return x.ord_E(); }

int ordE_qua(const QE4& x) { return x.ord_E(); }

}  // namespace

bool is_regular(const TorusPoint& t) {
    int guard = 2;  // precision margin
    if (t.fam == TorusFamily::TIVAD || (t.fam == TorusFamily::T2D && t.kind != ExtKind::Biquadratic)) {
        auto ev = eigenvalues_qua(t);
        int M = t.W->F->M;
        int e = t.qctx().ram ? 2 : 1;
        for (size_t i = 0; i < ev.size(); ++i)
            for (size_t j = i + 1; j < ev.size(); ++j) {
                QE4 d = ev[i] - ev[j];
                if (d.is_zero() || ordE_qua(d) >= e * (M - guard)) return false;
            }
        return true;
    }
    auto ev = eigenvalues_biq(t);
    int M = t.W->F->M;
    for (size_t i = 0; i < ev.size(); ++i)
        for (size_t j = i + 1; j < ev.size(); ++j) {
            E4 d = ev[i] - ev[j];
            if (d.is_zero() || ordE_biq(d) >= 2 * (M - guard)) return false;
        }
    return true;
}

Rational discriminant_exponent(const TorusPoint& t) {
    // D_H(t) = prod over roots |alpha(t)-1|; exponent of q0 returned (negative).
    switch (t.fam) {
        case TorusFamily::T1A: {
            // two roots on the GL(2) slot: |gl - s gl|^2, unramified leg
            Q2 d = t.leg1 - t.leg1.conj();
            if (d.is_zero()) throw std::domain_error("discriminant zero");
            return Rational(-2) * Rational(d.val_ext());
        }
        case TorusFamily::T1AD: {
            Q2 d = t.leg1 - t.leg1.conj();  // ramified leg: ord_E/2 normalized
            if (d.is_zero()) throw std::domain_error("discriminant zero");
            return Rational(-2) * Rational(d.val_ext(), 2);
        }
        case TorusFamily::T2D: {
            if (t.kind == ExtKind::Biquadratic) {
                E4 d = t.l_biq - t.l_biq.gD();
                if (d.is_zero()) throw std::domain_error("discriminant zero");
                return Rational(-4) * Rational(ordE_biq(d), 2);
            }
            QE4 d = t.l_qua - t.l_qua.sigma_pow(2);
            if (d.is_zero()) throw std::domain_error("discriminant zero");
            int e = t.qctx().ram ? 2 : 1;
            return Rational(-4) * Rational(ordE_qua(d), e);
        }
        case TorusFamily::TIA:
        case TorusFamily::TIIIAAD:
        case TorusFamily::TIIIDAD: {
            auto ev = eigenvalues_biq(t);
            // positive roots: t1/t2, t1/t3, t1/t4, t2/t3 (eigen order t1..t4)
            static const int pairs[4][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}};
            Rational total(0);
            for (auto& pr : pairs) {
                E4 d = ev[pr[0]] - ev[pr[1]];
                if (d.is_zero()) throw std::domain_error("discriminant zero");
                total += Rational(ordE_biq(d), 2);
            }
            return Rational(-2) * total;
        }
        case TorusFamily::TIVAD: {
            auto ev = eigenvalues_qua(t);
            static const int pairs[4][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}};
            int e = t.qctx().ram ? 2 : 1;
            Rational total(0);
            for (auto& pr : pairs) {
                QE4 d = ev[pr[0]] - ev[pr[1]];
                if (d.is_zero()) throw std::domain_error("discriminant zero");
                total += Rational(ordE_qua(d), e);
            }
            return Rational(-2) * total;
        }
    }
    throw std::domain_error("discriminant: unsupported family");
}

}  // namespace gsp2
