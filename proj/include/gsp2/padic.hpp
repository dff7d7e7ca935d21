#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace gsp2 {

// Truncated arithmetic in the ring of integers R of a p-adic field F with
// odd residual characteristic p: every scalar is a residue mod p^M.  The
// working precision M is chosen per computation so that all valuation
// comparisons stay strictly below M; operations that would need valuation
// >= M/2 raise precision_error instead of silently truncating.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LocalField {
    long long p = 3;    // odd prime, residue cardinality q of F
    int M = 8;          // precision: scalars live in Z/p^M
    long long eps0 = 2; // smallest positive quadratic non-residue mod p
    std::vector<unsigned long long> pw; // pw[k] = p^k, k = 0..M

    LocalField(long long p_, int M_) : p(p_), M(M_) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("even residual characteristic unsupported");
        if (M < 1) throw std::invalid_argument("precision must be positive");
        pw.resize(M + 1);
        pw[0] = 1;
        for (int k = 1; k <= M; ++k) {
            unsigned __int128 v = (unsigned __int128)pw[k - 1] * (unsigned long long)p;
            if (v > ~0ULL) throw std::overflow_error("p^M exceeds 64 bits");
            pw[k] = (unsigned long long)v;
        }
        eps0 = find_nonresidue();
    }

    unsigned long long mod() const { return pw[M]; }

    long long find_nonresidue() const {
        for (long long a = 2; a < p; ++a) {
            // Euler criterion in the residue field.
            unsigned long long r = 1, b = (unsigned long long)a, e = (unsigned long long)((p - 1) / 2);
            while (e) {
                if (e & 1) r = (r * b) % (unsigned long long)p;
                b = (b * b) % (unsigned long long)p;
                e >>= 1;
            }
            if (r == (unsigned long long)(p - 1)) return a;
        }
        throw std::logic_error("no quadratic non-residue found");
    }
};

using FieldPtr = std::shared_ptr<const LocalField>;

inline FieldPtr make_field(long long p, int M) { return std::make_shared<LocalField>(p, M); }

// An element of R/p^M.  Valuations are reported as integers in [0, M]; the
// zero residue reports valuation M, printed by callers as ">=M".
struct Fp {
    FieldPtr F;
    unsigned long long r = 0;

    Fp() = default;
    Fp(FieldPtr f, long long v) : F(std::move(f)) {
        long long m = (long long)F->mod();
        long long x = v % m;
        if (x < 0) x += m;
        r = (unsigned long long)x;
    }

    static Fp zero(const FieldPtr& f) { return Fp(f, 0); }
    static Fp one(const FieldPtr& f) { return Fp(f, 1); }

    unsigned long long mod() const { return F->mod(); }

    Fp operator+(const Fp& o) const {
        Fp x(*this);
        x.r += o.r;
        if (x.r >= mod()) x.r -= mod();
        return x;
    }
    Fp operator-(const Fp& o) const {
        Fp x(*this);
        x.r = (x.r >= o.r) ? x.r - o.r : x.r + mod() - o.r;
        return x;
    }
    Fp operator*(const Fp& o) const {
        Fp x(*this);
        x.r = (unsigned long long)(((unsigned __int128)r * o.r) % mod());
        return x;
    }
    Fp operator-() const { Fp x(*this); x.r = r ? mod() - r : 0; return x; }
    bool operator==(const Fp& o) const { return r == o.r; }
    bool operator!=(const Fp& o) const { return r != o.r; }

    bool is_zero() const { return r == 0; }

    // Largest k <= M with p^k | r; M for the zero residue.
    int val() const {
        if (r == 0) return F->M;
        int k = 0;
        unsigned long long x = r;
        while (x % (unsigned long long)F->p == 0) { x /= (unsigned long long)F->p; ++k; }
        return k;
    }
    bool is_unit() const { return r % (unsigned long long)F->p != 0; }

    Fp pow(unsigned long long e) const {
        Fp b(*this), x = Fp::one(F);
        while (e) {
            if (e & 1) x = x * b;
            b = b * b;
            e >>= 1;
        }
        return x;
    }

    // Inverse of a unit mod p^M.
    Fp inv() const {
        if (!is_unit()) throw precision_error("inverse of non-unit");
        // Euler: phi(p^M) = p^(M-1)(p-1)
        unsigned long long phi = (F->pw[F->M - 1]) * (unsigned long long)(F->p - 1);
        return pow(phi - 1);
    }

    // Exact division by p^k; nullopt when not divisible.  The result is
    // known only mod p^(M-k) but is returned embedded in Z/p^M; callers
    // that care track the precision loss themselves.
    std::optional<Fp> div_pk(int k) const {
        if (k == 0) return *this;
        if (k > F->M) return std::nullopt;
        if (r % F->pw[k] != 0) return std::nullopt;
        Fp x(*this);
        x.r = r / F->pw[k];
        return x;
    }

    Fp times_pk(int k) const {
        Fp x(*this);
        if (k >= F->M) { x.r = 0; return x; }
        x.r = (unsigned long long)(((unsigned __int128)r * F->pw[k]) % mod());
        return x;
    }

    // Decompose r = unit * p^val; unit part of zero is an error.
    Fp unit_part() const {
        int k = val();
        if (k >= F->M) throw precision_error("unit part of zero residue");
        return *div_pk(k);
    }
};

// kappa: the nontrivial quadratic character of R^x / (R^x)^2, computed by the
// Euler criterion on the residue.  Errors on non-units.
inline int kappa(const Fp& u) {
    if (!u.is_unit()) throw std::domain_error("kappa undefined at non-unit");
    unsigned long long p = (unsigned long long)u.F->p;
    unsigned long long a = u.r % p, r = 1, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (r * a) % p;
        a = (a * a) % p;
        e >>= 1;
    }
    return r == 1 ? +1 : -1;
}

// kappa(-1) = (-1)^((p-1)/2): +1 iff p = 1 mod 4.
inline int kappa_minus_one(long long p) { return (p % 4 == 1) ? +1 : -1; }

// eps on F^x: the unramified quadratic character, (-1)^ord.  Errors on the
// zero residue (valuation unknown at working precision).
inline int eps_F(const Fp& x) {
    int v = x.val();
    if (v >= x.F->M) throw precision_error("eps of zero residue");
    return (v % 2 == 0) ? +1 : -1;
}

// Square root of a unit square mod p^M by Hensel lifting; nullopt when the
// residue is a non-square.  Non-units are rejected (callers strip valuation
// first).
inline std::optional<Fp> sqrt_unit(const Fp& a) {
    if (!a.is_unit()) return std::nullopt;
    if (kappa(a) != 1) return std::nullopt;
    const auto& F = a.F;
    unsigned long long p = (unsigned long long)F->p;
    // root mod p by Tonelli-Shanks (p odd, small); brute force is fine here.
    unsigned long long a0 = a.r % p, x0 = 0;
    bool found = false;
    for (unsigned long long t = 1; t < p; ++t) {
        if ((t * t) % p == a0) { x0 = t; found = true; break; }
    }
    if (!found) return std::nullopt;
    Fp x(F, (long long)x0);
    // Newton: x <- (x + a/x)/2, doubling the number of correct digits.
    Fp half = Fp(F, 2).inv();
    for (int i = 0; i < F->M + 2; ++i) x = (x + a * x.inv()) * half;
    if (!(x * x == a)) return std::nullopt;
    return x;
}

// Deterministic sampler for randomized property sweeps.
struct Sampler {
    std::mt19937_64 gen;
    explicit Sampler(unsigned long long seed) : gen(seed) {}

    long long uniform(long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(gen);
    }
    Fp unit(const FieldPtr& F) {
        while (true) {
            Fp x(F, uniform(1, (long long)F->mod() - 1));
            if (x.is_unit()) return x;
        }
    }
    // unit with prescribed square class: sign = +1 square, -1 non-square
    Fp unit_with_kappa(const FieldPtr& F, int sign) {
        while (true) {
            Fp x = unit(F);
            if (kappa(x) == sign) return x;
        }
    }
    Fp one_plus_maximal(const FieldPtr& F) {  // element of 1 + pR
        return Fp(F, 1) + Fp(F, uniform(0, (long long)F->mod() / F->p - 1)).times_pk(1);
    }
};

}  // namespace gsp2
