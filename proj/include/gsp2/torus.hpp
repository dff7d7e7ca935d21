#pragma once

#include "gsp2/biquad.hpp"
#include "gsp2/gsp.hpp"
#include "gsp2/rational.hpp"
#include "gsp2/tower.hpp"

#include <string>
#include <vector>

namespace gsp2 {

// The elliptic torus families whose points the workbench manipulates.
// G-side: TIA, TIIIAAD, TIIIDAD, TIVAD; H1-side: T1A, T1AD; H2-side: T2D.
enum class TorusFamily { T1A, T1AD, T2D, TIA, TIIIAAD, TIIIDAD, TIVAD };

enum class ExtKind { Biquadratic, QuarticUnram, QuarticRam };

std::string family_name(TorusFamily f);
std::optional<TorusFamily> family_from_name(const std::string& s);

// Shared arithmetic contexts for one run.
struct Workspace {
    FieldPtr F;
    BiquadCtx bi;
    QuarticCtx qu_unram, qu_ram;

    explicit Workspace(FieldPtr f)
        : F(std::move(f)),
          bi(F),
          qu_unram(QuarticCtx::unramified(F)),
          qu_ram(QuarticCtx::ramified(F)) {}
};

// A torus point with its defining extension-field coordinates and derived
// valuation data.  Field usage per family:
//   T1A     : leg_gl (F_A, GL2 slot), leg_e (F_A, E slot), rho in {0,1}
//   T1AD    : leg_gl (F_AD, GL2 slot), leg_e (F_A, E slot)
//   T2D     : l (biquad E4 or quartic QE4), c unit; kind distinguishes
//   TIA     : leg1 (F_A, outer), leg2 (F_A, inner), rho in {0,1}
//   TIIIAAD : leg1 (F_A, outer), leg2 (F_AD, inner)
//   TIIIDAD : leg1 (F_D, outer), leg2 (F_AD, inner), c unit
//   TIVAD   : xi1, xi2 (F_A coords of xi1 + xi2 sqrt(D)), c unit; kind
struct TorusPoint {
    TorusFamily fam;
    const Workspace* W = nullptr;
    ExtKind kind = ExtKind::Biquadratic;

    Q2 leg1, leg2;
    Fp c;
    int rho = 0;

    E4 l_biq;
    QE4 l_qua;
    Q2 xi1, xi2;

    // derived valuations (family-dependent subset is meaningful)
    int N1 = -1, N2 = -1, X = -1, N = -1, n = -1;
    Fp B1, B2;      // unit parts of the imaginary coordinates (base-F legs)
    Q2 B_A;         // unit part of xi2 over F_A (quartic)

    const QuarticCtx& qctx() const {
        return kind == ExtKind::QuarticRam ? W->qu_ram : W->qu_unram;
    }
};

// Builders; strict mode rejects non-regular / non-topologically-unipotent
// points where the enumerations require them.
TorusPoint make_T1A(const Workspace& W, const Q2& gl, const Q2& e_slot, int rho);
TorusPoint make_T1AD(const Workspace& W, const Q2& gl_ad, const Q2& e_a);
TorusPoint make_T2D_biquad(const Workspace& W, const E4& l, const Fp& c);
TorusPoint make_T2D_quartic(const Workspace& W, bool ram, const QE4& l, const Fp& c);
TorusPoint make_TIA(const Workspace& W, const Q2& outer, const Q2& inner, int rho, bool strict);
TorusPoint make_TIIIAAD(const Workspace& W, const Q2& outer, const Q2& inner, bool strict);
TorusPoint make_TIIIDAD(const Workspace& W, const Q2& outer, const Q2& inner, const Fp& c,
                        bool strict);
TorusPoint make_TIVAD(const Workspace& W, bool ram, const Q2& xi1, const Q2& xi2, const Fp& c,
                      bool strict);

// Realized matrices.
M4F realize_G(const TorusPoint& t);                  // G-side families
M2F realize_H1_gl(const TorusPoint& t);              // GL(2, F) component
M2Q realize_H2_gl(const TorusPoint& t);              // GL(2, F_A) component

// Eigenvalue multisets in the smallest tower containing them.  The
// biquadratic families return E4 lists; the quartic family returns QE4.
std::vector<E4> eigenvalues_biq(const TorusPoint& t);
std::vector<QE4> eigenvalues_qua(const TorusPoint& t);

// Eigenvalue data of the dual-map image of an H-side point (the expected
// G-side multiset), in the same carriers.
std::vector<E4> norm_image_eigs_biq(const TorusPoint& h);
std::vector<QE4> norm_image_eigs_qua(const TorusPoint& h);

// Regularity: pairwise eigenvalue differences nonzero at precision M-2.
bool is_regular(const TorusPoint& t);

// Discriminant exponents: D_H(t) = q0^(exponent); exponent is exact.
Rational discriminant_exponent(const TorusPoint& t);

}  // namespace gsp2
