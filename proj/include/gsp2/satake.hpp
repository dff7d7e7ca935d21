#pragma once

#include "gsp2/padic.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace gsp2 {

// A formal monomial: sign i^k (k mod 4) times a product of named character
// symbols raised to half-integer powers (stored doubled, so "q^(1/2)" is
// exps["q"] = 1 and "chi^2" is exps["chi"] = 4).
struct FormalMonomial {
    int quarter = 0;                  // sign = i^quarter
    std::map<std::string, int> exps;  // halved exponents; zero entries erased

    static FormalMonomial one() { return {}; }
    static FormalMonomial sym(const std::string& name, int half_exp = 2, int quarter = 0) {
        FormalMonomial m;
        m.quarter = ((quarter % 4) + 4) % 4;
        if (half_exp) m.exps[name] = half_exp;
        return m;
    }
    static FormalMonomial minus_one() { return sym("", 0, 2); }

    void prune() {
        for (auto it = exps.begin(); it != exps.end();)
            it = it->second == 0 ? exps.erase(it) : std::next(it);
    }

    FormalMonomial operator*(const FormalMonomial& o) const {
        FormalMonomial r = *this;
        r.quarter = (r.quarter + o.quarter) % 4;
        for (auto& [k, v] : o.exps) r.exps[k] += v;
        r.prune();
        return r;
    }
    FormalMonomial inv() const {
        FormalMonomial r;
        r.quarter = (4 - quarter) % 4;
        for (auto& [k, v] : exps) r.exps[k] = -v;
        return r;
    }
    FormalMonomial operator/(const FormalMonomial& o) const { return *this * o.inv(); }
    FormalMonomial operator-() const {
        FormalMonomial r = *this;
        r.quarter = (r.quarter + 2) % 4;
        return r;
    }
    // formal square root: halves every exponent; requires an even sign
    FormalMonomial sqrt() const {
        if (quarter % 2 != 0) throw std::domain_error("formal sqrt of an odd sign");
        FormalMonomial r;
        r.quarter = quarter / 2;  // branch: sqrt(-1) = i
        for (auto& [k, v] : exps) r.exps[k] = v;  // placeholder, fixed below
        for (auto& [k, v] : r.exps) {
            if (v % 2 != 0) throw std::domain_error("formal sqrt of an odd exponent");
            v /= 2;
        }
        return r;
    }

    bool operator==(const FormalMonomial& o) const {
        return quarter == o.quarter && exps == o.exps;
    }
    bool operator<(const FormalMonomial& o) const {
        if (quarter != o.quarter) return quarter < o.quarter;
        return exps < o.exps;
    }
    std::string str() const;
};

enum class GroupTag { GSp4, GL4, LH1, LH2 };

struct SatakeParam {
    std::array<FormalMonomial, 4> e;
    GroupTag tag = GroupTag::GSp4;
    // 1 when the class came from an inert place (a twisted class reduced to
    // diagonal form); metadata only, excluded from equality since classes are
    // always compared after that reduction.
    int galois_slot = 0;

    bool pairing_ok() const { return e[0] * e[3] == e[1] * e[2]; }
    FormalMonomial similitude() const { return e[0] * e[3]; }
    bool operator==(const SatakeParam& o) const { return e == o.e && tag == o.tag; }
    std::string str() const;
};

// The eight Weyl permutations of diag(a, b, l/b, l/a).
const std::array<std::array<int, 4>, 8>& weyl_perms();

// Lexicographically least element of the Weyl orbit; idempotent.
SatakeParam weyl_canonical(const SatakeParam& p);

bool gsp_conjugate(const SatakeParam& a, const SatakeParam& b);

// GL(4)-conjugacy: unordered multiset of entries.
bool gl4_conjugate(const SatakeParam& a, const SatakeParam& b);

// L-group lifts.  Inert place: the Frobenius-Hecke data are
//   H1: (t(tau) = diag(c1, c2), chi') with chi = chi' o N;
//   H2: (a, mu) with t1 = a^2, t2 = (mu/a)^2.
SatakeParam lift_xi1_inert(const FormalMonomial& c1, const FormalMonomial& c2,
                           const FormalMonomial& chi_prime);
SatakeParam lift_xi1_split(const FormalMonomial& c1, const FormalMonomial& c2,
                           const FormalMonomial& chi1, const FormalMonomial& chi2);
SatakeParam lift_xi2_inert(const FormalMonomial& a, const FormalMonomial& mu);
SatakeParam lift_xi2_split(const FormalMonomial& a1, const FormalMonomial& a2,
                           const FormalMonomial& b1, const FormalMonomial& b2);

// Parabolically induced parameters.
SatakeParam induced_borel(const FormalMonomial& alpha, const FormalMonomial& beta,
                          const FormalMonomial& mu);
SatakeParam induced_siegel(const FormalMonomial& omega, const FormalMonomial& t1,
                           const FormalMonomial& t2, const FormalMonomial& mu);
SatakeParam induced_heisenberg(const FormalMonomial& mu, const FormalMonomial& t1,
                               const FormalMonomial& t2);

// Lifting-table verification.
struct TableRow {
    std::string id;
    std::string description;
};

std::vector<TableRow> load_table_rows(const std::string& path);

// Verify one row at both place kinds with `trials` random symbol assignments.
bool verify_table_row(const std::string& row_id, Sampler& rng, int trials,
                      std::string* fail_detail = nullptr);

}  // namespace gsp2
