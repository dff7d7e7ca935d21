#include "gsp2/closedform.hpp"

namespace gsp2 {

namespace {

Rational qp(long long q, long long k) { return Rational::qpow(q, k); }

Rational mqp(long long q, long long k) {  // (-q)^k
    Rational r = qp(q, k);
    return (k % 2 == 0) ? r : -r;
}

}  // namespace

Rational closed_orbital(TorusFamily fam, const ClosedParams& P) {
    long long q0 = P.q0;
    long long q = q0 * q0;
    switch (fam) {
        case TorusFamily::T1A:
            // ((q+1) q^n - 2) / (q-1), n = ord of the GL2-slot imaginary part
            return (Rational(q0 + 1) * qp(q0, P.n) - Rational(2)) / Rational(q0 - 1);
        case TorusFamily::T1AD:
            return (qp(q0, P.N2 + 1) - Rational(1)) / Rational(q0 - 1);
        case TorusFamily::T2D:
            if (!P.ram)
                return (Rational(q + 1) * qp(q, P.n) - Rational(2)) / Rational(q - 1);
            return (qp(q, P.n + 1) - Rational(1)) / Rational(q - 1);
        case TorusFamily::TIA:
            return mqp(q0, P.N1) * mqp(q0, P.X) *
                   (Rational(q0 + 1) * qp(q0, P.N2) - Rational(2)) / Rational(q0 - 1);
        case TorusFamily::TIIIAAD:
            return mqp(q0, P.N1 + P.X) * (qp(q0, P.N2 + 1) - Rational(1)) / Rational(q0 - 1);
        case TorusFamily::TIIIDAD: {
            // -kappa(-1) * 2 kappa(B1B2) (-1)^N1 q0^(1+N1+N2) (q^(N+1)-1)/(q-1)
            Rational v = Rational(2) * Rational(P.kappaB1B2) * qp(q0, 1 + P.N1 + P.N2) *
                         (qp(q, P.N + 1) - Rational(1)) / Rational(q - 1);
            if (P.N1 % 2 != 0) v = -v;
            if (kappa_minus_one(q0) == +1) v = -v;
            return v;
        }
        case TorusFamily::TIVAD:
            if (!P.ram)
                return mqp(q, P.N) * (Rational(q + 1) * qp(q, P.N) - Rational(2)) /
                       Rational(q - 1);
            return Rational(-2) * Rational(P.kappaB) * mqp(q, P.N) * Rational(q0) *
                   (qp(q, P.N + 1) - Rational(1)) / Rational(q - 1);
    }
    throw std::domain_error("closed_orbital: unknown family");
}

Rational closed_unstable_TIA(const ClosedParams& P) {
    long long q0 = P.q0;
    return mqp(q0, P.N2 + P.X) * (Rational(q0 + 1) * qp(q0, P.N1) - Rational(2)) /
           Rational(q0 - 1);
}

Rational transfer_factor_closed(TorusFamily h_fam, ExtKind kind, const ClosedParams& P) {
    long long q0 = P.q0;
    long long q = q0 * q0;
    switch (h_fam) {
        case TorusFamily::T1A:
            return mqp(q0, -(P.N1 + P.X));
        case TorusFamily::T1AD:
            return mqp(q0, -(P.N1 + P.X));
        case TorusFamily::T2D: {
            if (kind == ExtKind::Biquadratic) {
                Rational v = Rational(1, 2) * Rational(P.kappaB1B2) * qp(q0, -(1 + P.N1 + P.N2));
                if (P.N1 % 2 != 0) v = -v;
                if (kappa_minus_one(q0) == +1) v = -v;
                return v;
            }
            if (kind == ExtKind::QuarticUnram) return mqp(q, -P.N);
            // ramified: -1/2 (-1)^N kappa(B) q^-N q0^-1
            Rational v = Rational(-1, 2) * Rational(P.kappaB) * qp(q, -P.N) * qp(q0, -1);
            if (P.N % 2 != 0) v = -v;
            return v;
        }
        default:
            throw std::domain_error("transfer_factor_closed: not an H-side family");
    }
}

TransferFactor transfer_factor(const TorusPoint& h, const TorusPoint& g) {
    if (!is_norm(h, g)) throw std::domain_error("transfer factor: norm mismatch");
    const FieldPtr& F = h.W->F;
    TransferFactor tf;
    Rational dG = discriminant_exponent(g);
    Rational dH = discriminant_exponent(h);
    tf.jac_exponent = (dG - dH) * Rational(1, 2);
    if (tf.jac_exponent.den != 1)
        throw std::logic_error("transfer factor: non-integral Jacobian exponent");
    long long q0 = F->p;
    Rational jac = qp(q0, (long long)tf.jac_exponent.num);

    auto quarter_value = [&](int k) {
        // i^k with the branch: even k -> (-1)^(k/2); odd k -> (-1)^((k-1)/2) * (-kappa(-1))
        k = ((k % 4) + 4) % 4;
        int v;
        if (k % 2 == 0) v = (k == 0) ? +1 : -1;
        else {
            v = (k == 1) ? +1 : -1;
            v *= -kappa_minus_one(q0);
        }
        return v;
    };

    switch (h.fam) {
        case TorusFamily::T1A: {
            // eps(((xi+sxi)-(zeta+szeta)) (xi-sxi)/(2 sqrt(A))), xi = E-slot
            Q2 xi = h.leg2, ze = h.leg1;
            Fp arg = (xi.a - ze.a) * Fp(F, 2) * xi.b;  // up to units
            if (arg.is_zero()) throw precision_error("transfer factor: eps argument vanishes");
            tf.eps_quarter = (2 * arg.val()) % 4;
            tf.kappa_sign = +1;
            tf.half_num = 1;
            tf.half_den = 1;
            break;
        }
        case TorusFamily::T1AD: {
            Q2 xi = h.leg2, ze = h.leg1;  // xi in F_A, ze in F_AD
            Fp arg = (xi.a - ze.a) * Fp(F, 2) * xi.b;
            if (arg.is_zero()) throw precision_error("transfer factor: eps argument vanishes");
            tf.eps_quarter = (2 * arg.val()) % 4;
            tf.kappa_sign = +1;
            tf.half_num = 1;
            tf.half_den = 1;
            break;
        }
        case TorusFamily::T2D: {
            if (h.kind == ExtKind::Biquadratic) {
                // 1/2 kappa(b1 b2 units) eps_E(b1 sqrt(D)/sqrt(A)) jac
                Fp b1b2 = h.B1 * h.B2;
                tf.kappa_sign = kappa(b1b2);
                // ord_E(b1 sqrt(D)/sqrt(A)) = 2 N1 + 1
                tf.eps_quarter = (2 * h.N1 + 1) % 4;
                tf.half_num = 1;
                tf.half_den = 2;
            } else if (h.kind == ExtKind::QuarticUnram) {
                // eps_E((xi - s^2 xi)/(2 sqrt(D))) with the (-1)^(ord_E) extension
                tf.eps_quarter = (2 * h.N) % 4;
                tf.kappa_sign = +1;
                tf.half_num = 1;
                tf.half_den = 1;
            } else {
                // -1/2 eps_{E/F_A}(xi2) jac
                const QuarticCtx& C = h.W->qu_ram;
                QE4 xi = h.l_qua * h.l_qua.sigma();
                int s = eps_E_over_FA(C, xi.y);
                tf.kappa_sign = s;
                tf.eps_quarter = 0;
                tf.half_num = -1;
                tf.half_den = 2;
            }
            break;
        }
        default:
            throw std::domain_error("transfer factor: not an H-side source");
    }

    tf.value = Rational(tf.half_num, tf.half_den) * Rational(tf.kappa_sign) *
               Rational(quarter_value(tf.eps_quarter)) * jac;

    // cross-check against the claimed closed value
    ClosedParams P;
    P.q0 = q0;
    P.N1 = g.N1;
    P.N2 = g.N2;
    P.X = g.X;
    P.N = g.N;
    P.ram = h.kind == ExtKind::QuarticRam;
    if (h.fam == TorusFamily::T2D && h.kind == ExtKind::Biquadratic)
        P.kappaB1B2 = kappa(g.B1 * g.B2);
    if (h.fam == TorusFamily::T2D && h.kind == ExtKind::QuarticRam) P.kappaB = kappa_FA(g.B_A);
    Rational claimed = transfer_factor_closed(h.fam, h.kind, P);
    if (!(claimed == tf.value))
        throw std::logic_error("transfer factor inconsistency: definition vs closed value");
    return tf;
}

MatchingReport matching_report(const TorusPoint& h) {
    MatchingReport rep;
    TorusPoint g = norm_image(h);
    if (!is_regular(g)) throw std::domain_error("matching: target not regular");
    rep.lhs = stable_orbital_H(h).value;
    TransferFactor tf = transfer_factor(h, g);
    Rational rhs(0);
    for (const auto& rep_g : stable_class_reps(g)) {
        OrbitalResult o = twisted_orbital_G(rep_g);
        rhs += tf.value * o.value;
    }
    rep.rhs = rhs;
    rep.pass = (rep.lhs == rep.rhs);

    // closed-form route
    ClosedParams P;
    P.q0 = h.W->F->p;
    P.N1 = g.N1;
    P.N2 = g.N2;
    P.X = g.X;
    P.N = g.N;
    P.n = h.n;
    // the biquadratic E/F_A is ramified; only the unramified quartic is not
    P.ram = h.kind != ExtKind::QuarticUnram;
    if (h.fam == TorusFamily::T1A) P.n = h.leg1.b.val();
    if (h.fam == TorusFamily::T2D && h.kind == ExtKind::Biquadratic)
        P.kappaB1B2 = kappa(g.B1 * g.B2);
    if (h.fam == TorusFamily::T2D && h.kind != ExtKind::Biquadratic) {
        P.N = g.N;
        if (h.kind == ExtKind::QuarticRam) P.kappaB = kappa_FA(g.B_A);
    }
    Rational closed_lhs = closed_orbital(h.fam, P);
    Rational closed_rhs = transfer_factor_closed(h.fam, h.kind, P) *
                          closed_orbital(g.fam, P);
    rep.closed_pass = (closed_lhs == closed_rhs);
    rep.detail = family_name(h.fam);
    return rep;
}

MatchingReport unstable_matching_report(const TorusPoint& h_swapped, const TorusPoint& g) {
    // h_swapped = (phi^A(outer-of-g), inner-of-g): a norm of the class of g
    // with the swapped pairing; Delta changes sign on the twisted class.
    MatchingReport rep;
    rep.lhs = stable_orbital_H(h_swapped).value;
    // definitional Delta at the pair (evaluated with the source's own data)
    TorusPoint g_for_delta = norm_image(h_swapped);  // = g with slots swapped
    TransferFactor tf = transfer_factor(h_swapped, g_for_delta);
    TorusPoint d0 = g;
    d0.rho = 0;
    TorusPoint d1 = g;
    d1.rho = 1;
    rep.rhs = tf.value * (twisted_orbital_G(d0).value - twisted_orbital_G(d1).value);
    rep.pass = (rep.lhs == rep.rhs);
    rep.closed_pass = rep.pass;
    rep.detail = "TIA-unstable";
    return rep;
}

}  // namespace gsp2
