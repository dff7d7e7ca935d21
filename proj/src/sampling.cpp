#include "gsp2/sampling.hpp"

#include "gsp2/norms.hpp"

namespace gsp2 {

namespace {

struct retry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Fn>
auto with_retries(Fn&& f, int tries = 400) {
    // Construction attempts convert all failures into retries; the caller
    // sees a single clear error when the request is infeasible.
    for (int i = 0; i + 1 < tries; ++i) {
        try {
            return f();
        } catch (const retry_error&) {
        } catch (const std::domain_error&) {
        } catch (const precision_error&) {}
    }
    return f();
}

Fp sqrt_or_retry(const Fp& x) {
    auto r = sqrt_unit(x);
    if (!r) throw retry_error("non-square draw");
    return *r;
}

}  // namespace

TorusPoint sample_TIA(const Workspace& W, Sampler& rng, int N1, int N2, int X, int rho) {
    const FieldPtr& F = W.F;
    if (N1 < 1 || N2 < 1) throw std::domain_error("TIA: unramified legs need N >= 1");
    int N = std::min(N1, N2);
    if (N1 != N2 && X != 2 * N)
        throw std::domain_error("TIA: X = 2 min(N1, N2) is forced when N1 != N2");
    if (N1 == N2 && X < 2 * N)
        throw std::domain_error("TIA: X >= 2N required");
    Fp A(F, F->eps0);
    return with_retries([&] {
        // inner leg
        Fp a2 = rng.one_plus_maximal(F);
        Fp b2 = rng.unit(F).times_pk(N2);
        Q2 inner(F, A, 1, a2, b2);
        Q2 outer;
        if (N1 == N2 && X > 2 * N) {
            // prescribe a1 = a2 + u pi^X, solve b1
            Fp a1 = a2 + rng.unit(F).times_pk(X);
            Fp b1sq = (a1 * a1 - inner.norm()) * A.inv();
            if (b1sq.val() != 2 * N1) throw retry_error("valuation drift");
            Fp b1 = sqrt_or_retry(*b1sq.div_pk(2 * N1)).times_pk(N1);
            outer = Q2(F, A, 1, a1, b1);
        } else {
            // prescribe b1, solve a1
            Fp b1 = rng.unit(F).times_pk(N1);
            Fp a1sq = inner.norm() + A * b1 * b1;
            Fp a1 = sqrt_or_retry(a1sq);
            if (!((a1 - Fp::one(F)).val() >= 1)) a1 = -a1;
            outer = Q2(F, A, 1, a1, b1);
        }
        TorusPoint t = make_TIA(W, outer, inner, rho, true);
        if (t.N1 != N1 || t.N2 != N2 || t.X != X) throw retry_error("derived mismatch");
        return t;
    });
}

TorusPoint h1_source_of_TIA(const TorusPoint& g) {
    return make_T1A(*g.W, g.leg2, g.leg1, 0);
}

TorusPoint sample_TIIIAAD(const Workspace& W, Sampler& rng, int N1, int N2) {
    const FieldPtr& F = W.F;
    if (N1 < 1 || N2 < 0) throw std::domain_error("TIIIAAD: N1 >= 1, N2 >= 0");
    const BiquadCtx& C = W.bi;
    Fp A(F, F->eps0);
    return with_retries([&] {
        Fp a2 = rng.one_plus_maximal(F);
        Fp b2 = rng.unit(F).times_pk(N2);
        Q2 inner(F, C.AD, 2, a2, b2);
        Fp b1 = rng.unit(F).times_pk(N1);
        Fp a1sq = inner.norm() + A * b1 * b1;
        Fp a1 = sqrt_or_retry(a1sq);
        if (!((a1 - Fp::one(F)).val() >= 1)) a1 = -a1;
        Q2 outer(F, A, 1, a1, b1);
        TorusPoint t = make_TIIIAAD(W, outer, inner, true);
        if (t.N1 != N1 || t.N2 != N2) throw retry_error("derived mismatch");
        if (t.X != std::min(2 * N1, 2 * N2 + 1)) throw retry_error("X drift");
        return t;
    });
}

TorusPoint h1_source_of_TIIIAAD(const TorusPoint& g) {
    return make_T1AD(*g.W, g.leg2, g.leg1);
}

TorusPoint sample_T2D_biquad(const Workspace& W, Sampler& rng, int N1, int N2, int kappaB1B2) {
    const FieldPtr& F = W.F;
    const BiquadCtx& C = W.bi;
    return with_retries([&] {
        // l = alpha + beta sqrt(D): alpha = 1 + pi*(..), beta with coordinate
        // valuations (N1, N2)
        Fp x0 = rng.one_plus_maximal(F);
        Fp x1 = rng.unit(F).times_pk(1 + (int)rng.uniform(0, 1));
        Fp x2 = rng.unit(F).times_pk(N1);
        Fp x3 = rng.unit(F).times_pk(N2);
        E4 l(C, x0, x1, x2, x3);
        if (!l.is_unit()) throw retry_error("non-unit l");
        TorusPoint h = make_T2D_biquad(W, l, Fp::one(F));
        if (h.N1 != N1 || h.N2 != N2) throw retry_error("derived mismatch");
        if (h.X != 2 * std::min(N1, N2) + 1) throw retry_error("X drift");
        if (kappa(h.B1 * h.B2) != kappaB1B2) throw retry_error("kappa class");
        TorusPoint g = norm_image(h);
        if (!is_regular(g) || !topologically_unipotent(realize_G(g)))
            throw retry_error("target not usable");
        return h;
    });
}

TorusPoint sample_T2D_quartic(const Workspace& W, Sampler& rng, bool ram, int N, int kappaB) {
    const FieldPtr& F = W.F;
    const QuarticCtx& C = ram ? W.qu_ram : W.qu_unram;
    Fp A(F, F->eps0);
    if (!ram && N < 1) throw std::domain_error("unramified quartic chain needs N >= 1");
    return with_retries([&] {
        Q2 alpha(F, A, 1, rng.one_plus_maximal(F), rng.unit(F).times_pk(1));
        Q2 beta(F, A, 1, rng.unit(F).times_pk(N), rng.unit(F).times_pk(N + (int)rng.uniform(0, 1)));
        QE4 l(C, alpha, beta);
        if (!l.is_unit()) throw retry_error("non-unit l");
        TorusPoint h = make_T2D_quartic(W, ram, l, Fp::one(F));
        if (h.n != N || h.N != N) throw retry_error("derived mismatch");
        int Xexp = ram ? 2 * N + 1 : 2 * N;
        if (h.X != Xexp) throw retry_error("X drift");
        if (ram && kappa_FA(h.B_A) != kappaB) throw retry_error("kappa class");
        TorusPoint g = norm_image(h);
        if (!is_regular(g) || !topologically_unipotent(realize_G(g)))
            throw retry_error("target not usable");
        return h;
    });
}

TorusPoint sample_T1A(const Workspace& W, Sampler& rng, int n_gl, int rho) {
    const FieldPtr& F = W.F;
    Fp A(F, F->eps0);
    return with_retries([&] {
        Fp a1 = rng.one_plus_maximal(F);
        Fp b1 = rng.unit(F).times_pk(n_gl);
        Q2 gl(F, A, 1, a1, b1);
        // E-slot with the same norm; its imaginary valuation is free
        Fp b2 = rng.unit(F).times_pk((int)rng.uniform(0, 1));
        Fp a2sq = gl.norm() + A * b2 * b2;
        Fp a2 = sqrt_or_retry(a2sq);
        Q2 es(F, A, 1, a2, b2);
        TorusPoint t = make_T1A(W, gl, es, rho);
        if (t.leg1.b.val() != n_gl) throw retry_error("derived mismatch");
        return t;
    });
}

TorusPoint sample_T1AD(const Workspace& W, Sampler& rng, int N2) {
    const FieldPtr& F = W.F;
    const BiquadCtx& C = W.bi;
    Fp A(F, F->eps0);
    return with_retries([&] {
        Fp a1 = rng.one_plus_maximal(F);
        Fp b1 = rng.unit(F).times_pk(N2);
        Q2 gl(F, C.AD, 2, a1, b1);
        Fp b2 = rng.unit(F).times_pk(1);
        Fp a2sq = gl.norm() + A * b2 * b2;
        Fp a2 = sqrt_or_retry(a2sq);
        Q2 es(F, A, 1, a2, b2);
        TorusPoint t = make_T1AD(W, gl, es);
        if (t.N2 != N2) throw retry_error("derived mismatch");
        return t;
    });
}

}  // namespace gsp2
