#include "gsp2/orbital.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace gsp2 {

int worker_threads() {
    if (const char* s = std::getenv("ENDOSCOPY_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1 && n <= 256) return n;
    }
    return 1;
}

namespace {

// Evaluate f(i) for i in [0, n) on worker_threads() threads; results must be
// written to preallocated slots so the outcome is order-independent.
template <class Fn>
void parallel_for(int n, Fn&& f) {
    int nt = std::min(worker_threads(), n);
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> ts;
    for (int t = 0; t < nt; ++t)
        ts.emplace_back([&] {
            int i;
            while ((i = next.fetch_add(1)) < n) f(i);
        });
    for (auto& t : ts) t.join();
}

struct IndexCache {
    std::map<std::tuple<long long, unsigned long long, int, int, unsigned long long, int, int>,
             long long>
        paired;
    std::map<std::tuple<long long, unsigned long long, int, int, unsigned long long, int, int>,
             bool>
        collapse;
    std::mutex mu;
};
IndexCache g_cache;

long long paired_index_cached(const FieldPtr& F, const Fp& B1, int e1, int j1, const Fp& B2,
                              int e2, int j2) {
    auto key = std::make_tuple(F->p, B1.r, e1, j1, B2.r, e2, j2);
    {
        std::lock_guard<std::mutex> lk(g_cache.mu);
        auto it = g_cache.paired.find(key);
        if (it != g_cache.paired.end()) return it->second;
    }
    long long v = paired_index_enum(F, B1, e1, j1, B2, e2, j2);
    std::lock_guard<std::mutex> lk(g_cache.mu);
    g_cache.paired[key] = v;
    return v;
}

bool eps_collapse_cached(const FieldPtr& F, const Fp& B1, int e1, int j1, const Fp& B2, int e2,
                         int j2) {
    auto key = std::make_tuple(F->p, B1.r, e1, j1, B2.r, e2, j2);
    {
        std::lock_guard<std::mutex> lk(g_cache.mu);
        auto it = g_cache.collapse.find(key);
        if (it != g_cache.collapse.end()) return it->second;
    }
    bool v = eps_cells_collapse(F, B1, e1, j1, B2, e2, j2);
    std::lock_guard<std::mutex> lk(g_cache.mu);
    g_cache.collapse[key] = v;
    return v;
}

// conjugate the phi^B-shaped block (a, bB; b, a) by diag(1, u pi^k):
// (a, bB u pi^k; b u^-1 pi^-k, a); nullopt when an entry leaves the integers.
std::optional<M2F> conj_block(const Q2& xi, const Fp& u, int k, const Fp& scale) {
    Fp upper_u = xi.b * xi.B * u;
    Fp lower_u = xi.b * u.inv();
    auto upper = shift_pk(upper_u, k);
    auto lower = shift_pk(lower_u, -k);
    if (!upper || !lower) return std::nullopt;
    return M2F(scale * xi.a, scale * *upper, scale * *lower, scale * xi.a);
}

std::optional<M2Q> conj_block_FA(const QuarticCtx& C, const Q2& xi1, const Q2& xi2, const Fp& c,
                                 const Q2& u, int k) {
    Q2 cq = Q2::from_base(C.F, Fp(C.F, C.F->eps0), 1, c);
    Q2 upper_u = xi2 * C.D * u;
    Q2 lower_u = xi2 * u.inv();
    auto upper = shift_pk(upper_u, k);
    auto lower = shift_pk(lower_u, -k);
    if (!upper || !lower) return std::nullopt;
    return M2Q(cq * xi1, cq * *upper, cq * *lower, cq * xi1);
}

// [T0' : T' cap r K' r^-1] for the quartic chain, via the projective chart
// e = x (1 + w sqrt(D)) of T' = {e : N_{E/F_A} e in F^x}: the x-multiplicity
// depends only on the square class of 1 - w^2 D and cancels in the quotient.
long long quartic_torus_index(const QuarticCtx& C, int bound) {
    if (bound <= 0) return 1;
    const FieldPtr& F = C.F;
    int prec = std::min(F->M, bound + 2);
    unsigned long long pm = F->pw[prec];
    long long total = 0, sub = 0;
    Fp A(F, F->eps0);
    for (unsigned long long wa = 0; wa < pm; ++wa)
        for (unsigned long long wb = 0; wb < pm; ++wb) {
            Q2 w(F, A, 1, Fp(F, (long long)wa), Fp(F, (long long)wb));
            Q2 nu = Q2::make(F, A, 1, 1, 0) - w * w * C.D;
            if (!nu.is_unit()) continue;
            if (kappa_FA(nu) != +1) continue;
            ++total;
            if (w.val_ext() >= bound) ++sub;
        }
    if (sub == 0 || total % sub != 0)
        throw std::logic_error("quartic_torus_index: non-exact quotient");
    return total / sub;
}

std::map<std::tuple<long long, bool, int>, long long> g_qt_cache;
std::mutex g_qt_mu;

long long quartic_torus_index_cached(const QuarticCtx& C, int bound) {
    auto key = std::make_tuple(C.F->p, C.ram, bound);
    {
        std::lock_guard<std::mutex> lk(g_qt_mu);
        auto it = g_qt_cache.find(key);
        if (it != g_qt_cache.end()) return it->second;
    }
    long long v = quartic_torus_index(C, bound);
    std::lock_guard<std::mutex> lk(g_qt_mu);
    g_qt_cache[key] = v;
    return v;
}

// [R_E^x : R_E(j)^x] over base F_A (E quadratic over F_A), by stratified
// residue counting at precision j+1.
long long unit_index_FA(const FieldPtr& F, bool ram, int j) {
    if (j == 0) return 1;
    int prec = std::min(F->M, j + 1);
    auto count_with = [&](int bmin) -> long long {
        unsigned long long qa = F->pw[prec] * F->pw[prec];           // |R_A / pi^prec|
        unsigned long long qn = F->pw[prec - 1] * F->pw[prec - 1];   // non-units
        unsigned long long qu = qa - qn;
        unsigned long long nb = (bmin >= prec) ? 1 : F->pw[prec - bmin] * F->pw[prec - bmin];
        if (!ram) {
            unsigned long long nbu = (bmin >= 1) ? 0 : qu;
            return (long long)(qu * nb + qn * nbu);
        }
        return (long long)(qu * nb);
    };
    long long total = count_with(0), sub = count_with(j);
    if (sub == 0 || total % sub != 0) throw std::logic_error("unit_index_FA: non-exact quotient");
    return total / sub;
}

struct SupportBounds {
    int m_supp, j1_supp, j2_supp;
};

Rational assemble(std::vector<LedgerCell>& cells, const SupportBounds& sb, const char* fam) {
    Rational v(0);
    for (auto& c : cells) {
        bool beyond = c.m > sb.m_supp || c.j1 > sb.j1_supp || (c.j2 >= 0 && c.j2 > sb.j2_supp);
        if (beyond && c.count != 0)
            throw support_error(std::string(fam) + ": support check failed");
        v += Rational(c.sign) * Rational(c.index) * Rational(c.count);
    }
    return v;
}

void eval_cells(std::vector<LedgerCell>& cells,
                const std::function<long long(const LedgerCell&)>& counter) {
    parallel_for((int)cells.size(), [&](int i) { cells[i].count = counter(cells[i]); });
}

}  // namespace

// --- G-side twisted orbital integrals --------------------------------------

static OrbitalResult twisted_TIA(const TorusPoint& t) {
    // Both conjugacy classes of the stable class share one coset table: the
    // class integrals are the even and odd (j1 + j2)-parity partial sums,
    // with the twisted-torus measure transported along the conjugation.
    const FieldPtr& F = t.W->F;
    Fp A(F, F->eps0);
    Fp one = Fp::one(F);
    Fp eps0(F, F->eps0);
    OrbitalResult out;
    out.m_bound = t.X + 1;
    out.j1_bound = t.N1 + 1;
    out.j2_bound = t.N2 + 1;
    std::vector<LedgerCell> cells;
    for (int m = 0; m <= out.m_bound; ++m)
        for (int j1 = 0; j1 <= out.j1_bound; ++j1)
            for (int j2 = 0; j2 <= out.j2_bound; ++j2) {
                if ((j1 + j2) % 2 != t.rho % 2) continue;
                bool collapse = eps_collapse_cached(F, A, 1, j1, A, 1, j2);
                for (int ec = 0; ec < (collapse ? 1 : 2); ++ec) {
                    LedgerCell c;
                    c.m = m;
                    c.j1 = j1;
                    c.j2 = j2;
                    c.eps_class = ec;
                    c.rho = t.rho;
                    c.sign = ((m + j1) % 2 == 0) ? +1 : -1;
                    c.index = paired_index_cached(F, A, 1, j1, A, 1, j2);
                    cells.push_back(c);
                }
            }
    eval_cells(cells, [&](const LedgerCell& c) {
        Fp eps_u = c.eps_class == 0 ? one : eps0;
        auto M1 = conj_block(t.leg1, one, c.j1, one);
        auto M2 = conj_block(t.leg2, eps_u, c.j2, one);
        return count_sl2_conj(M1, M2, c.m);
    });
    out.value = assemble(cells, {t.X, t.N1, t.N2}, "TIA");
    out.ledger = std::move(cells);
    return out;
}

static OrbitalResult twisted_TIIIAAD(const TorusPoint& t) {
    const FieldPtr& F = t.W->F;
    const BiquadCtx& C = t.W->bi;
    Fp A(F, F->eps0), one = Fp::one(F), eps0(F, F->eps0);
    OrbitalResult out;
    out.m_bound = t.X + 1;
    out.j1_bound = t.N1 + 1;
    out.j2_bound = t.N2 + 1;
    std::vector<LedgerCell> cells;
    for (int m = 0; m <= out.m_bound; ++m)
        for (int j1 = 0; j1 <= out.j1_bound; ++j1)
            for (int j2 = 0; j2 <= out.j2_bound; ++j2) {
                bool collapse = eps_collapse_cached(F, A, 1, j1, C.AD, 2, j2);
                for (int ec = 0; ec < (collapse ? 1 : 2); ++ec) {
                    LedgerCell c;
                    c.m = m;
                    c.j1 = j1;
                    c.j2 = j2;
                    c.eps_class = ec;
                    c.sign = ((m + j1) % 2 == 0) ? +1 : -1;
                    c.index = paired_index_cached(F, A, 1, j1, C.AD, 2, j2);
                    cells.push_back(c);
                }
            }
    eval_cells(cells, [&](const LedgerCell& c) {
        Fp eps_u = c.eps_class == 0 ? one : eps0;
        auto M1 = conj_block(t.leg1, eps_u, c.j1, one);  // the unramified leg carries eps
        auto M2 = conj_block(t.leg2, one, c.j2, one);
        return count_sl2_conj(M1, M2, c.m);
    });
    out.value = assemble(cells, {t.X, t.N1, t.N2}, "TIIIAAD");
    out.ledger = std::move(cells);
    return out;
}

static OrbitalResult twisted_TIIIDAD(const TorusPoint& t) {
    const FieldPtr& F = t.W->F;
    const BiquadCtx& C = t.W->bi;
    Fp one = Fp::one(F), eps0(F, F->eps0);
    Fp A(F, F->eps0);
    Fp nD_unit = A.inv();  // N(pi_D) = -D = A^-1 pi
    OrbitalResult out;
    out.m_bound = t.X + 1;
    out.j1_bound = t.N1 + 1;
    out.j2_bound = t.N2 + 1;
    std::vector<LedgerCell> cells;
    for (int m = 0; m <= out.m_bound; ++m)
        for (int j1 = 0; j1 <= out.j1_bound; ++j1)
            for (int j2 = 0; j2 <= out.j2_bound; ++j2) {
                bool collapse = eps_collapse_cached(F, C.D, 2, j1, C.AD, 2, j2);
                for (int ec = 0; ec < (collapse ? 1 : 2); ++ec) {
                    LedgerCell c;
                    c.m = m;
                    c.j1 = j1;
                    c.j2 = j2;
                    c.eps_class = ec;
                    c.sign = ((m + c.eps_class) % 2 == 0) ? +1 : -1;
                    c.index = paired_index_cached(F, C.D, 2, j1, C.AD, 2, j2);
                    cells.push_back(c);
                }
            }
    eval_cells(cells, [&](const LedgerCell& c) {
        Fp eps_u = c.eps_class == 0 ? one : eps0;
        Fp u1 = eps_u;
        for (int i = 0; i < c.j1; ++i) u1 = u1 * nD_unit;
        auto M1 = conj_block(t.leg1, u1, c.j1, t.c);
        Fp u2 = eps_u;
        if (c.eps_class) u2 = u2 * A;  // exact determinant matching of the pair
        auto M2 = conj_block(t.leg2, u2, c.j2, t.c);
        return count_sl2_conj(M1, M2, c.m);
    });
    out.value = assemble(cells, {t.X, t.N1, t.N2}, "TIIIDAD");
    out.ledger = std::move(cells);
    return out;
}

static OrbitalResult twisted_TIVAD(const TorusPoint& t) {
    const FieldPtr& F = t.W->F;
    const QuarticCtx& C = t.qctx();
    OrbitalResult out;
    out.m_bound = t.X + 1;
    out.j1_bound = t.N + 1;
    std::vector<LedgerCell> cells;
    Q2 oneA = Q2::make(F, Fp(F, F->eps0), 1, 1, 0);
    // non-square unit representative of R_{F_A}: for the ramified datum,
    // D = -e0 pi, so e0 = -(D / pi)
    Q2 nonsq = C.D;
    if (C.ram) {
        auto da = C.D.a.div_pk(1), db = C.D.b.div_pk(1);
        nonsq = -Q2(F, C.D.B, C.D.e, *da, *db);
    }
    for (int m = 0; m <= out.m_bound; ++m)
        for (int j = 0; j <= out.j1_bound; ++j) {
            int n_eps = C.ram ? 2 : (j == 0 ? 1 : 2);
            for (int ec = 0; ec < n_eps; ++ec) {
                LedgerCell c;
                c.m = m;
                c.j1 = j;
                c.eps_class = ec;
                c.sign = C.ram ? (((m + ec) % 2 == 0) ? +1 : -1)
                               : (((m + j) % 2 == 0) ? +1 : -1);
                c.index = quartic_torus_index_cached(C, j);
                cells.push_back(c);
            }
        }
    eval_cells(cells, [&](const LedgerCell& c) {
        std::optional<M2Q> M;
        if (!C.ram) {
            Q2 u = (c.eps_class == 0) ? oneA : nonsq;
            M = conj_block_FA(C, t.xi1, t.xi2, t.c, u, c.j1);
        } else {
            Q2 u = oneA;
            for (int i = 0; i < c.j1; ++i) u = u * nonsq;
            if (c.eps_class == 1) u = u * nonsq.inv();
            M = conj_block_FA(C, t.xi1, t.xi2, t.c, u, c.j1);
        }
        return count_sigma_unitary(M, c.m);
    });
    out.value = assemble(cells, {t.X, t.N, 1 << 20}, "TIVAD");
    out.ledger = std::move(cells);
    return out;
}

OrbitalResult twisted_orbital_G(const TorusPoint& delta) {
    if (!is_regular(delta)) throw std::domain_error("twisted orbital: non-regular point");
    switch (delta.fam) {
        case TorusFamily::TIA: return twisted_TIA(delta);
        case TorusFamily::TIIIAAD: return twisted_TIIIAAD(delta);
        case TorusFamily::TIIIDAD: return twisted_TIIIDAD(delta);
        case TorusFamily::TIVAD: return twisted_TIVAD(delta);
        default: throw std::domain_error("twisted orbital: not a G-side family");
    }
}

// --- H-side orbital integrals ----------------------------------------------

OrbitalResult orbital_H1_class(const TorusPoint& h) {
    const FieldPtr& F = h.W->F;
    OrbitalResult out;
    std::vector<LedgerCell> cells;
    Fp one = Fp::one(F);
    if (h.fam == TorusFamily::T1A) {
        Fp A(F, F->eps0);
        int ngl = h.leg1.b.val();
        out.j1_bound = ngl + 2;
        for (int j = h.rho; j <= out.j1_bound; j += 2) {
            LedgerCell c;
            c.j1 = j;
            c.rho = h.rho;
            c.sign = +1;
            c.index = unit_index_enum(F, A, 1, j, std::min(F->M, j + 1));
            auto M = conj_block(h.leg1, one, j, one);
            c.count = M ? 1 : 0;
            cells.push_back(c);
        }
        out.value = assemble(cells, {1 << 20, ngl, 1 << 20}, "T1A");
        out.ledger = std::move(cells);
        return out;
    }
    if (h.fam == TorusFamily::T1AD) {
        const BiquadCtx& C = h.W->bi;
        int ngl = h.leg1.b.val();
        out.j1_bound = ngl + 1;
        for (int j = 0; j <= out.j1_bound; ++j) {
            LedgerCell c;
            c.j1 = j;
            c.sign = +1;
            c.index = unit_index_enum(F, C.AD, 2, j, std::min(F->M, j + 1));
            auto M = conj_block(h.leg1, one, j, one);
            c.count = M ? 1 : 0;
            cells.push_back(c);
        }
        out.value = assemble(cells, {1 << 20, ngl, 1 << 20}, "T1AD");
        out.ledger = std::move(cells);
        return out;
    }
    throw std::domain_error("orbital_H1_class: not an H1 family");
}

static OrbitalResult orbital_T2D(const TorusPoint& h) {
    const FieldPtr& F = h.W->F;
    OrbitalResult out;
    std::vector<LedgerCell> cells;
    bool ram = true;
    Q2 beta, D;
    if (h.kind == ExtKind::Biquadratic) {
        Fp A(F, F->eps0);
        beta = Q2(F, A, 1, h.l_biq.x2, h.l_biq.x3);
        D = Q2::from_base(F, A, 1, h.W->bi.D);
        ram = true;  // E/F_A is ramified in the biquadratic configuration
    } else {
        beta = h.l_qua.y;
        D = h.qctx().D;
        ram = h.qctx().ram;
    }
    out.j1_bound = h.n + 1;
    for (int j = 0; j <= out.j1_bound; ++j) {
        LedgerCell c;
        c.j1 = j;
        c.sign = +1;
        c.index = unit_index_FA(F, ram, j);
        auto up = shift_pk(beta * D, j);
        auto lo = shift_pk(beta, -j);
        c.count = (up && lo) ? 1 : 0;
        cells.push_back(c);
    }
    out.value = assemble(cells, {1 << 20, h.n, 1 << 20}, "T2D");
    out.ledger = std::move(cells);
    return out;
}

OrbitalResult stable_orbital_H(const TorusPoint& h) {
    if (h.fam == TorusFamily::T2D) return orbital_T2D(h);
    if (h.fam == TorusFamily::T1AD) return orbital_H1_class(h);
    if (h.fam == TorusFamily::T1A) {
        OrbitalResult a = orbital_H1_class(h);
        TorusPoint other = h;
        other.rho = 1 - h.rho;
        OrbitalResult b = orbital_H1_class(other);
        OrbitalResult out;
        out.value = a.value + b.value;
        out.ledger = a.ledger;
        out.ledger.insert(out.ledger.end(), b.ledger.begin(), b.ledger.end());
        out.j1_bound = std::max(a.j1_bound, b.j1_bound);
        return out;
    }
    throw std::domain_error("stable_orbital_H: not an H-side family");
}

OrbitalResult twisted_orbital_G_stable(const TorusPoint& delta, bool include_twist_partner) {
    OrbitalResult out = twisted_orbital_G(delta);
    if (include_twist_partner && delta.fam == TorusFamily::TIA) {
        TorusPoint other = delta;
        other.rho = 1 - delta.rho;
        OrbitalResult o2 = twisted_orbital_G(other);
        out.value += o2.value;
        out.ledger.insert(out.ledger.end(), o2.ledger.begin(), o2.ledger.end());
    }
    return out;
}

Rational unstable_combination(const TorusPoint& tia) {
    if (tia.fam != TorusFamily::TIA)
        throw std::domain_error("unstable combination defined for the TIA family only");
    TorusPoint d0 = tia;
    d0.rho = 0;
    TorusPoint d1 = tia;
    d1.rho = 1;
    return twisted_orbital_G(d0).value - twisted_orbital_G(d1).value;
}

}  // namespace gsp2
