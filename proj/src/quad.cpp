#include "gsp2/quad.hpp"

#include <algorithm>
#include <deque>

namespace gsp2 {

std::optional<Q2> sqrt_FA(const Q2& u) {
    if (u.e != 1) throw std::domain_error("sqrt_FA expects the unramified quadratic");
    if (!u.is_unit()) return std::nullopt;
    if (kappa_FA(u) != 1) return std::nullopt;
    const FieldPtr& F = u.F;
    long long p = F->p;

    // residue-level root in F_{q^2} by scanning (q^2 <= 49^2 small enough).
    long long ra = -1, rb = -1;
    long long ua = (long long)(u.a.r % (unsigned long long)p);
    long long ub = (long long)(u.b.r % (unsigned long long)p);
    for (long long x = 0; x < p && ra < 0; ++x)
        for (long long y = 0; y < p; ++y) {
            long long na = ((x * x + ((y * y) % p) * F->eps0) % p);
            long long nb = (2 * x * y) % p;
            if (na == ua && nb == ub) { ra = x; rb = y; break; }
        }
    if (ra < 0) return std::nullopt;

    Q2 x = Q2::make(F, u.B, 1, ra, rb);
    Q2 half = Q2::from_base(F, u.B, 1, Fp(F, 2).inv());
    for (int i = 0; i < F->M + 2; ++i) x = (x + u * x.inv()) * half;
    if (!((x * x) == u)) return std::nullopt;
    return x;
}

Q2 solve_norm_FA(const FieldPtr& F, const Fp& target) {
    if (!target.is_unit()) throw std::domain_error("norm target must be a unit");
    long long p = F->p;
    Fp A(F, F->eps0);
    // Residue solution of a^2 - A b^2 = t.
    long long t0 = (long long)(target.r % (unsigned long long)p);
    for (long long a0 = 0; a0 < p; ++a0)
        for (long long b0 = 0; b0 < p; ++b0) {
            if (((a0 * a0 - ((b0 * b0) % p) * F->eps0) % p + p) % p != t0) continue;
            // Lift: fix b, solve a^2 = t + A b^2 by unit square root when the
            // a-slot is a unit; otherwise fix a, solve for b.
            Fp b(F, b0);
            Fp rhs = target + A * b * b;
            if (a0 % p != 0) {
                auto a = sqrt_unit(rhs);
                if (a) return Q2(F, A, 1, *a, b);
            } else {
                Fp a(F, a0);
                Fp rhs2 = (a * a - target) * A.inv();
                auto bb = sqrt_unit(rhs2);
                if (bb) return Q2(F, A, 1, a, *bb);
            }
        }
    throw std::logic_error("unramified norm equation unsolvable at working precision");
}

namespace {

// Iterate pairs (a, b) mod pi^prec.
template <class Fn>
void for_pairs(unsigned long long m, Fn&& f) {
    for (unsigned long long a = 0; a < m; ++a)
        for (unsigned long long b = 0; b < m; ++b) f(a, b);
}

bool pair_is_unit(const LocalField& F, int e, unsigned long long a, unsigned long long b) {
    unsigned long long p = (unsigned long long)F.p;
    if (e == 1) return a % p != 0 || b % p != 0;
    return a % p != 0;
}

}  // namespace

long long unit_index_enum(const FieldPtr& F, const Fp& /*B*/, int e, int j, int prec) {
    if (j == 0) return 1;
    if (prec > F->M) throw precision_error("unit_index: precision too small");
    unsigned long long m = F->pw[prec];
    unsigned long long pj = F->pw[std::min(j, prec)];
    long long total = 0, sub = 0;
    for_pairs(m, [&](unsigned long long a, unsigned long long b) {
        if (!pair_is_unit(*F, e, a, b)) return;
        ++total;
        if (b % pj == 0) ++sub;
    });
    if (sub == 0 || total % sub != 0) throw std::logic_error("unit_index: non-exact quotient");
    return total / sub;
}

UnitClassData unit_classes(const FieldPtr& F, const Fp& B, int e, int j, int prec) {
    if (prec > F->M) throw precision_error("unit_classes: precision too small");
    UnitClassData out;
    out.prec = prec;
    unsigned long long m = F->pw[prec];
    long long p = F->p;

    auto key = [m](unsigned long long a, unsigned long long b) { return a * m + b; };
    Fp Bm(F, (long long)(B.r % m));

    // Multiplication mod pi^prec on coordinate pairs.
    auto mul = [&](unsigned long long xa, unsigned long long xb, unsigned long long ya,
                   unsigned long long yb) {
        unsigned long long a =
            (unsigned long long)((( (unsigned __int128)xa * ya) % m + ((unsigned __int128)xb * yb) % m * (Bm.r % m)) % m);
        unsigned long long b =
            (unsigned long long)((((unsigned __int128)xa * yb) % m + ((unsigned __int128)xb * ya) % m) % m);
        return std::pair<unsigned long long, unsigned long long>(a, b);
    };

    // Generators of S = R(j)^x mod pi^prec (for j >= 1): the base units
    // (primitive root lifts plus 1 + pi^t) and 1 + c pi^(j+t) sqrt(B).
    std::vector<std::pair<unsigned long long, unsigned long long>> gens;
    if (j >= 1) {
        // primitive root mod p^2 generates (Z/p^prec)^x
        long long g = 0;
        unsigned long long p2 = (unsigned long long)(p * p);
        for (long long c = 2; c < p * p && !g; ++c) {
            if (c % p == 0) continue;
            unsigned long long ord = 1, x = (unsigned long long)c % p2;
            unsigned long long y = x;
            while (y != 1) { y = (y * x) % p2; ++ord; }
            if (ord == (unsigned long long)(p * (p - 1))) g = c;
        }
        if (!g) throw std::logic_error("no primitive root");
        gens.push_back({(unsigned long long)g % m, 0});
        for (int t = 1; t < prec; ++t) gens.push_back({(1 + F->pw[t]) % m, 0});
        for (int t = j; t < prec; ++t)
            for (long long c = 1; c < p; ++c)
                gens.push_back({1, ((unsigned long long)c * F->pw[t]) % m});
    }

    // BFS partition of the unit pairs into S-orbits; one representative per
    // orbit.  For j = 0 there is a single class.
    if (j == 0) {
        out.reps.push_back(Q2::make(F, B, e, 1, 0));
    } else {
        std::vector<char> seen(m * m, 0);
        std::vector<unsigned long long> orbit_of_one;
        // close the generator set under multiplication to get S itself
        {
            std::deque<std::pair<unsigned long long, unsigned long long>> q;
            std::unordered_set<unsigned long long> sset;
            q.push_back({1, 0});
            sset.insert(key(1, 0));
            while (!q.empty()) {
                auto [xa, xb] = q.front();
                q.pop_front();
                for (auto& [ga, gb] : gens) {
                    auto [na, nb] = mul(xa, xb, ga, gb);
                    if (sset.insert(key(na, nb)).second) q.push_back({na, nb});
                }
            }
            // sanity: |S| equals the direct count of R(j)^x mod pi^prec
            unsigned long long direct = 0;
            unsigned long long pj = F->pw[std::min(j, prec)];
            for_pairs(m, [&](unsigned long long a, unsigned long long b) {
                if (pair_is_unit(*F, e, a, b) && b % pj == 0) ++direct;
            });
            if (sset.size() != direct)
                throw std::logic_error("unit_classes: generator closure incomplete");
            orbit_of_one.assign(sset.begin(), sset.end());
        }
        for (unsigned long long a = 0; a < m; ++a)
            for (unsigned long long b = 0; b < m; ++b) {
                if (!pair_is_unit(*F, e, a, b) || seen[key(a, b)]) continue;
                out.reps.push_back(Q2(F, B, e, Fp(F, (long long)a), Fp(F, (long long)b)));
                // mark the whole coset x*S
                for (auto s : orbit_of_one) {
                    auto [na, nb] = mul(a, b, s / m, s % m);
                    seen[key(na, nb)] = 1;
                }
            }
    }

    // norm subgroup N(S) mod pi^prec
    {
        std::deque<unsigned long long> q;
        auto norm_res = [&](unsigned long long a, unsigned long long b) {
            unsigned long long n =
                (unsigned long long)((((unsigned __int128)a * a) % m + m * m -
                                      (((unsigned __int128)b * b) % m) * (Bm.r % m) % m) % m);
            return n % m;
        };
        std::unordered_set<unsigned long long>& ns = out.norm_sub;
        ns.insert(1);
        q.push_back(1);
        std::vector<unsigned long long> ngens;
        if (j >= 1) {
            for (auto& [ga, gb] : gens) ngens.push_back(norm_res(ga, gb));
        } else {
            // S is the full unit group: norms of a generating set of U
            long long p_ = p;
            for (long long c = 1; c < p_; ++c) ngens.push_back(norm_res((unsigned long long)c, 1));
            for (long long c = 2; c < p_; ++c) ngens.push_back(norm_res((unsigned long long)c, 0));
            for (int t = 1; t < prec; ++t) {
                ngens.push_back(norm_res((1 + F->pw[t]) % m, 0));
                ngens.push_back(norm_res(1, F->pw[t] % m));
            }
            if (e == 2) ngens.push_back(norm_res(1, 0));
        }
        // include inverses by closing under multiplication until stable
        while (!q.empty()) {
            unsigned long long x = q.front();
            q.pop_front();
            for (auto g : ngens) {
                unsigned long long y = (unsigned long long)(((unsigned __int128)x * g) % m);
                if (out.norm_sub.insert(y).second) q.push_back(y);
            }
        }
    }
    return out;
}

bool eps_cells_collapse(const FieldPtr& F, const Fp& B1, int e1, int j1, const Fp& B2, int e2,
                        int j2) {
    int prec = std::min(F->M, std::max(j1, j2) + 2);
    UnitClassData c1 = unit_classes(F, B1, e1, j1, prec);
    UnitClassData c2 = unit_classes(F, B2, e2, j2, prec);
    unsigned long long m = F->pw[prec];
    unsigned long long target = (unsigned long long)F->eps0 % m;
    for (auto x : c1.norm_sub) {
        // eps0 = x * y for some y in N(S2)?
        Fp xf(F, (long long)x);
        unsigned long long y = (unsigned long long)(((unsigned __int128)target * (xf.inv().r % m)) % m);
        if (c2.norm_sub.count(y)) return true;
    }
    return false;
}

long long paired_index_enum(const FieldPtr& F, const Fp& B1, int e1, int j1, const Fp& B2,
                            int e2, int j2) {
    int prec = std::min(F->M, std::max(j1, j2) + 2);
    UnitClassData c1 = unit_classes(F, B1, e1, j1, prec);
    UnitClassData c2 = unit_classes(F, B2, e2, j2, prec);
    unsigned long long m = F->pw[prec];

    // product subgroup N(S1) N(S2) mod pi^prec
    std::unordered_set<unsigned long long> prod;
    for (auto x : c1.norm_sub)
        for (auto y : c2.norm_sub)
            prod.insert((unsigned long long)(((unsigned __int128)x * y) % m));

    auto norm_mod = [&](const Q2& z) { return (unsigned long long)(z.norm().r % m); };

    long long count = 0;
    for (const auto& a : c1.reps) {
        unsigned long long na = norm_mod(a);
        for (const auto& b : c2.reps) {
            unsigned long long nb = norm_mod(b);
            // na/nb in prod  <=>  exists t in prod with na = nb*t
            // (both na, nb are units mod pi^prec)
            Fp nbf(F, (long long)nb);
            unsigned long long ratio =
                (unsigned long long)(((unsigned __int128)na * (nbf.inv().r % m)) % m);
            if (prod.count(ratio)) ++count;
        }
    }
    return count;
}

}  // namespace gsp2
