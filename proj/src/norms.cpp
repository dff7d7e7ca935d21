#include "gsp2/norms.hpp"

#include <algorithm>

namespace gsp2 {

TorusPoint norm_image(const TorusPoint& h) {
    const Workspace& W = *h.W;
    switch (h.fam) {
        case TorusFamily::T1A:
            // E-slot becomes the outer block
            return make_TIA(W, h.leg2, h.leg1, 0, false);
        case TorusFamily::T1AD:
            return make_TIIIAAD(W, h.leg2, h.leg1, false);
        case TorusFamily::T2D: {
            if (h.kind == ExtKind::Biquadratic) {
                Q2 xi = (h.l_biq * h.l_biq.gA()).to_FD();
                Q2 ze = (h.l_biq * h.l_biq.gAD()).to_FAD();
                return make_TIIIDAD(W, xi, ze, h.c, false);
            }
            QE4 eta = h.l_qua * h.l_qua.sigma();
            return make_TIVAD(W, h.kind == ExtKind::QuarticRam, eta.x, eta.y, h.c, false);
        }
        default:
            throw std::domain_error("norm_image: source must be an H-side point");
    }
}

namespace {

// canonical reduced key of a biquadratic element at precision M - guard
std::array<unsigned long long, 4> key_biq(const E4& x, int guard) {
    unsigned long long m = x.C->F->pw[x.C->F->M - guard];
    return {x.x0.r % m, x.x1.r % m, x.x2.r % m, x.x3.r % m};
}

std::array<unsigned long long, 4> key_qua(const QE4& x, int guard) {
    unsigned long long m = x.C->F->pw[x.C->F->M - guard];
    return {x.x.a.r % m, x.x.b.r % m, x.y.a.r % m, x.y.b.r % m};
}

template <class K>
bool multiset_equal(std::vector<K> a, std::vector<K> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

bool is_norm(const TorusPoint& h, const TorusPoint& g) {
    const int guard = 2;
    bool g_quartic = g.fam == TorusFamily::TIVAD;
    bool h_quartic = h.fam == TorusFamily::T2D && h.kind != ExtKind::Biquadratic;
    if (g_quartic != h_quartic) return false;
    if (g_quartic) {
        if (h.kind != g.kind) return false;
        auto ev_h = norm_image_eigs_qua(h);
        auto ev_g = eigenvalues_qua(g);
        std::vector<std::array<unsigned long long, 4>> ka, kb;
        for (auto& e : ev_h) ka.push_back(key_qua(e, guard));
        for (auto& e : ev_g) kb.push_back(key_qua(e, guard));
        return multiset_equal(ka, kb);
    }
    auto ev_h = norm_image_eigs_biq(h);
    auto ev_g = eigenvalues_biq(g);
    std::vector<std::array<unsigned long long, 4>> ka, kb;
    for (auto& e : ev_h) ka.push_back(key_biq(e, guard));
    for (auto& e : ev_g) kb.push_back(key_biq(e, guard));
    return multiset_equal(ka, kb);
}

std::vector<TorusPoint> stable_class_reps(const TorusPoint& t) {
    if (t.fam == TorusFamily::TIA || t.fam == TorusFamily::T1A) {
        TorusPoint other = t;
        other.rho = 1 - t.rho;
        return {t, other};
    }
    return {t};
}

}  // namespace gsp2
