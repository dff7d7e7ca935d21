#include "gsp2/satake.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace gsp2 {

std::string FormalMonomial::str() const {
    std::ostringstream os;
    static const char* signs[4] = {"", "i*", "-", "-i*"};
    os << signs[quarter];
    if (exps.empty()) os << "1";
    bool first = true;
    for (auto& [k, v] : exps) {
        if (!first) os << "*";
        first = false;
        os << k;
        if (v != 2) {
            os << "^";
            if (v % 2 == 0) os << v / 2;
            else os << "(" << v << "/2)";
        }
    }
    return os.str();
}

std::string SatakeParam::str() const {
    std::ostringstream os;
    os << "diag(";
    for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << e[i].str();
    os << ")";
    return os.str();
}

const std::array<std::array<int, 4>, 8>& weyl_perms() {
    // permutations of the slots of diag(a, b, l/b, l/a): the dihedral group
    // generated by (23), (14) and (12)(34)
    static const std::array<std::array<int, 4>, 8> W = {{
        {0, 1, 2, 3},
        {0, 2, 1, 3},  // (23)
        {3, 1, 2, 0},  // (14)
        {3, 2, 1, 0},  // (14)(23)
        {1, 0, 3, 2},  // (12)(34)
        {1, 3, 0, 2},  // four-cycles
        {2, 0, 3, 1},
        {2, 3, 0, 1},  // (13)(24)
    }};
    return W;
}

SatakeParam weyl_canonical(const SatakeParam& p) {
    if (p.tag != GroupTag::GSp4) throw std::domain_error("weyl_canonical: GSp4 tag required");
    SatakeParam best = p;
    bool first = true;
    for (const auto& w : weyl_perms()) {
        SatakeParam q = p;
        for (int i = 0; i < 4; ++i) q.e[i] = p.e[w[i]];
        if (first || std::lexicographical_compare(q.e.begin(), q.e.end(), best.e.begin(),
                                                  best.e.end())) {
            best = q;
            first = false;
        }
    }
    return best;
}

bool gsp_conjugate(const SatakeParam& a, const SatakeParam& b) {
    if (!a.pairing_ok() || !b.pairing_ok()) return false;
    return weyl_canonical(a) == weyl_canonical(b);
}

bool gl4_conjugate(const SatakeParam& a, const SatakeParam& b) {
    std::array<FormalMonomial, 4> x = a.e, y = b.e;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

SatakeParam lift_xi1_inert(const FormalMonomial& c1, const FormalMonomial& c2,
                           const FormalMonomial& chi_prime) {
    SatakeParam p;
    p.galois_slot = 1;
    p.e = {chi_prime * c1, -(chi_prime * c2), -(chi_prime * c1), chi_prime * c2};
    return p;
}

SatakeParam lift_xi1_split(const FormalMonomial& c1, const FormalMonomial& c2,
                           const FormalMonomial& chi1, const FormalMonomial& chi2) {
    SatakeParam p;
    p.e = {chi1 * c1, chi1 * c2, chi2 * c1, chi2 * c2};
    return p;
}

SatakeParam lift_xi2_inert(const FormalMonomial& a, const FormalMonomial& mu) {
    SatakeParam p;
    p.galois_slot = 1;
    FormalMonomial ma = mu / a;
    p.e = {ma, -ma, -a, a};
    return p;
}

SatakeParam lift_xi2_split(const FormalMonomial& a1, const FormalMonomial& a2,
                           const FormalMonomial& b1, const FormalMonomial& b2) {
    SatakeParam p;
    p.e = {a1, b1, b2, a2};
    return p;
}

SatakeParam induced_borel(const FormalMonomial& alpha, const FormalMonomial& beta,
                          const FormalMonomial& mu) {
    SatakeParam p;
    p.e = {alpha * beta * mu, alpha * mu, beta * mu, mu};
    return p;
}

SatakeParam induced_siegel(const FormalMonomial& omega, const FormalMonomial& t1,
                           const FormalMonomial& t2, const FormalMonomial& mu) {
    SatakeParam p;
    p.e = {mu * omega, mu * t1, mu * t2, mu};
    return p;
}

SatakeParam induced_heisenberg(const FormalMonomial& mu, const FormalMonomial& t1,
                               const FormalMonomial& t2) {
    SatakeParam p;
    p.e = {mu * t1, mu * t2, t1, t2};
    return p;
}

std::vector<TableRow> load_table_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) in.open("../" + path);
    if (!in && std::getenv("GSP2_TABLES")) in.open(std::getenv("GSP2_TABLES"));
    if (!in) throw std::runtime_error("cannot open table fixture: " + path);
    std::vector<TableRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        TableRow r;
        r.id = line.substr(0, bar);
        while (!r.id.empty() && r.id.back() == ' ') r.id.pop_back();
        if (bar != std::string::npos) {
            r.description = line.substr(bar + 1);
            while (!r.description.empty() && r.description.front() == ' ')
                r.description.erase(r.description.begin());
        }
        rows.push_back(r);
    }
    return rows;
}

namespace {

using FM = FormalMonomial;

FM rnd_mono(Sampler& rng, bool allow_sign = true) {
    static const char* base[] = {"u", "v", "w", "t"};
    FM m;
    for (auto* s : base) {
        int h = (int)rng.uniform(-4, 4);
        if (h) m.exps[s] = h;
    }
    if (allow_sign && rng.uniform(0, 1)) m.quarter = 2;
    return m;
}

FM rnd_square(Sampler& rng) {
    FM h = rnd_mono(rng, false);
    return h * h;
}

FM sign_mono(Sampler& rng) {  // random +-1
    FM m;
    m.quarter = rng.uniform(0, 1) ? 2 : 0;
    return m;
}

FM qhalf() { return FM::sym("q", 1); }  // the symbol q^(1/2)

struct RowCheck {
    std::function<bool(Sampler&, std::string*)> run;
};

bool expect_gsp(const SatakeParam& a, const SatakeParam& b, const char* what,
                std::string* why) {
    if (gsp_conjugate(a, b)) return true;
    if (why) *why = std::string(what) + ": " + a.str() + " !~ " + b.str();
    return false;
}

bool expect_gl4(const SatakeParam& a, const SatakeParam& b, const char* what,
                std::string* why) {
    if (gl4_conjugate(a, b)) return true;
    if (why) *why = std::string(what) + ": GL4 " + a.str() + " != " + b.str();
    return false;
}

SatakeParam bracket_diag(const FM& a1, const FM& a2, const FM& b1, const FM& b2) {
    // [diag(a1, a2), diag(b1, b2)] interleaves: diag(a1, b1, b2, a2)
    SatakeParam p;
    p.e = {a1, b1, b2, a2};
    return p;
}

SatakeParam gl4_param(const FM& a, const FM& b, const FM& c, const FM& d) {
    SatakeParam p;
    p.tag = GroupTag::GL4;
    p.e = {a, b, c, d};
    return p;
}

const FM kOne = FM::one();
const FM kMinus = FM::minus_one();

// --- row checks, one place kind at a time --------------------------------

bool row_unstable_pair_twist(Sampler& rng, std::string* why) {
    FM c1 = rnd_mono(rng), c2 = rnd_mono(rng);
    if (c1 == c2 || c1 == -c2) return true;  // skip degenerate draw
    {   // inert
        SatakeParam G = bracket_diag(c1, c2, -c1, -c2);
        SatakeParam H1 = lift_xi1_inert(c1, c2, kOne);
        SatakeParam H2 = lift_xi2_inert(c1, c1 * c2);  // a = c1, mu = omega_tau
        SatakeParam L4 = gl4_param(c1, c2, -c1, -c2);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        if (!expect_gsp(G, H2, "inert H2", why)) return false;
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        SatakeParam G = bracket_diag(c1, c2, c1, c2);
        SatakeParam H1 = lift_xi1_split(c1, c2, kOne, kOne);
        SatakeParam H2 = lift_xi2_split(c1, c2, c1, c2);
        SatakeParam L4 = gl4_param(c1, c2, c1, c2);
        if (!expect_gsp(G, H1, "split H1", why)) return false;
        if (!expect_gsp(G, H2, "split H2", why)) return false;
        if (!expect_gl4(G, L4, "split GL4", why)) return false;
    }
    return true;
}

bool row_unstable_pair_monomial(Sampler& rng, std::string* why) {
    FM ht = rnd_mono(rng, false), hc = rnd_mono(rng, false);
    {   // inert: s = (theta chi)^(1/2) = ht * hc
        FM s = ht * hc;
        SatakeParam G = bracket_diag(s, -s, s, -s);
        SatakeParam H1a = lift_xi1_inert(ht, -ht, hc);   // pi(theta) (x) chi
        SatakeParam H1b = lift_xi1_inert(hc, -hc, ht);   // pi(chi) (x) theta
        SatakeParam L4 = gl4_param(s, -s, s, -s);
        if (!expect_gsp(G, H1a, "inert H1 (theta,chi)", why)) return false;
        if (!expect_gsp(G, H1b, "inert H1 (chi,theta)", why)) return false;
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        FM t1 = rnd_mono(rng), t2 = rnd_mono(rng), x1 = rnd_mono(rng), x2 = rnd_mono(rng);
        SatakeParam G = bracket_diag(t1 * x1, t2 * x2, t1 * x2, t2 * x1);
        SatakeParam H1a = lift_xi1_split(t1, t2, x1, x2);
        SatakeParam H1b = lift_xi1_split(x1, x2, t1, t2);
        SatakeParam L4 = gl4_param(t1 * x1, t2 * x2, t1 * x2, t2 * x1);
        if (!expect_gsp(G, H1a, "split H1 (theta,chi)", why)) return false;
        if (!expect_gsp(G, H1b, "split H1 (chi,theta)", why)) return false;
        if (!expect_gl4(G, L4, "split GL4", why)) return false;
    }
    return true;
}

bool row_stable_xi1_cuspidal(Sampler& rng, std::string* why) {
    FM c1 = rnd_mono(rng), c2 = rnd_mono(rng), h = rnd_mono(rng, false);
    {   // inert: both packet entries lift equally; GL4 image = pi(chi B tau)
        SatakeParam L1 = lift_xi1_inert(c1, c2, h);
        SatakeParam L4 = gl4_param(h * c1, h * c2, -(h * c1), -(h * c2));
        if (!expect_gl4(L1, L4, "inert GL4", why)) return false;
        if (!L1.pairing_ok()) { if (why) *why = "inert pairing"; return false; }
    }
    {   // split: the two entries are Weyl conjugate
        FM x1 = rnd_mono(rng), x2 = rnd_mono(rng);
        SatakeParam La = lift_xi1_split(c1, c2, x1, x2);
        SatakeParam Lb = lift_xi1_split(c1, c2, x2, x1);
        if (!expect_gsp(La, Lb, "split conjugate pair", why)) return false;
        SatakeParam L4 = gl4_param(x1 * c1, x1 * c2, x2 * c1, x2 * c2);
        if (!expect_gl4(La, L4, "split GL4", why)) return false;
    }
    return true;
}

bool row_stable_xi1_onedim(Sampler& rng, std::string* why) {
    FM h = rnd_mono(rng, false), sq = qhalf();
    {   // inert
        SatakeParam G;
        G.e = {-(sq * h), sq * h, h / sq, -(h / sq)};
        SatakeParam H1 = lift_xi1_inert(sq, sq.inv(), h);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        SatakeParam L4 = gl4_param(sq * h, -(sq * h), h / sq, -(h / sq));
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        FM x1 = rnd_mono(rng), x2 = rnd_mono(rng);
        SatakeParam G;
        G.e = {sq * x1, sq * x2, x1 / sq, x2 / sq};
        SatakeParam H1 = lift_xi1_split(sq, sq.inv(), x1, x2);
        if (!expect_gsp(G, H1, "split H1", why)) return false;
    }
    return true;
}

bool row_stable_xi2_cuspidal(Sampler& rng, std::string* why) {
    FM a = rnd_mono(rng), mu = rnd_square(rng) * sign_mono(rng);
    {   // inert: GL4 image of the lift is pi(tau): diag(a, mu/a, -a, -mu/a)
        SatakeParam L = lift_xi2_inert(a, mu);
        if (!L.pairing_ok()) { if (why) *why = "inert pairing"; return false; }
        SatakeParam L4 = gl4_param(a, mu / a, -a, -(mu / a));
        if (!expect_gl4(L, L4, "inert GL4", why)) return false;
    }
    {   // split: omega-compatible pair, sigma-twist conjugacy
        FM a1 = rnd_mono(rng), a2 = rnd_mono(rng), b1 = rnd_mono(rng);
        FM msplit = a1 * a2;
        FM b2 = msplit / b1;
        SatakeParam La = lift_xi2_split(a1, a2, b1, b2);
        SatakeParam Lb = lift_xi2_split(b1, b2, a1, a2);
        if (!expect_gsp(La, Lb, "split sigma-twist", why)) return false;
        SatakeParam L4 = gl4_param(a1, a2, b1, b2);
        if (!expect_gl4(La, L4, "split GL4", why)) return false;
    }
    return true;
}

bool row_stable_xi2_onedim(Sampler& rng, std::string* why) {
    FM h = rnd_mono(rng, false), sq = qhalf();
    FM z = sign_mono(rng);  // zeta(pi): a sign at the inert place
    {   // inert: tau = chi 1_{2,E}: t1 = chi q, a = h q^(1/2); mu = chi * z
        FM a = h * sq;
        FM mu = h * h * z;
        SatakeParam L = lift_xi2_inert(a, mu);
        SatakeParam G;
        G.e = {-(z * sq * h), z * sq * h, h / sq, -(h / sq)};
        if (!expect_gsp(G, L, "inert H2", why)) return false;
        SatakeParam L4 = gl4_param(sq * h, -(sq * h), h / sq, -(h / sq));
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split: chi2 = e' chi1, zeta = e'
        FM x1 = rnd_mono(rng), e = sign_mono(rng);
        FM x2 = e * x1;
        SatakeParam La = lift_xi2_split(x1 * sq, x1 / sq, x2 * sq, x2 / sq);
        SatakeParam Lb = lift_xi2_split(x2 * sq, x2 / sq, x1 * sq, x1 / sq);
        SatakeParam G;
        G.e = {e * sq * x1, e * sq * x2, x1 / sq, x2 / sq};
        if (!expect_gsp(G, La, "split H2", why)) return false;
        if (!expect_gsp(G, Lb, "split H2 twist", why)) return false;
    }
    return true;
}

bool row_induced_borel_eps_eps(Sampler& rng, std::string* why) {
    FM mu = rnd_mono(rng);
    {   // inert
        SatakeParam G = induced_borel(kMinus, kMinus, mu);
        SatakeParam H1 = lift_xi1_inert(mu, mu, kOne);
        SatakeParam H2 = lift_xi2_inert(mu, mu * mu);
        SatakeParam L4 = gl4_param(mu, mu, -mu, -mu);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        if (!expect_gsp(G, H2, "inert H2", why)) return false;
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        SatakeParam G = induced_borel(kOne, kOne, mu);
        SatakeParam H1 = lift_xi1_split(mu, mu, kOne, kOne);
        SatakeParam H2 = lift_xi2_split(mu, mu, mu, mu);
        if (!expect_gsp(G, H1, "split H1", why)) return false;
        if (!expect_gsp(G, H2, "split H2", why)) return false;
    }
    return true;
}

bool row_induced_siegel_ratio(Sampler& rng, std::string* why) {
    FM h = rnd_mono(rng, false), mu = rnd_mono(rng);
    {   // inert: theta chi = mu o N, chi^2 generic
        FM htheta = mu / h;  // sqrt(theta) with theta = mu^2 / chi
        SatakeParam G = induced_siegel(kMinus, kOne, kMinus, mu);
        SatakeParam H1 = lift_xi1_inert(htheta, -htheta, h);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        SatakeParam L4 = gl4_param(mu, -mu, mu, -mu);
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        FM x1 = rnd_mono(rng), x2 = rnd_mono(rng);
        FM th1 = mu / x1, th2 = mu / x2;
        SatakeParam G = induced_siegel(kOne, x2 / x1, x1 / x2, mu);
        SatakeParam H1a = lift_xi1_split(th1, th2, x1, x2);
        SatakeParam H1b = lift_xi1_split(th1, th2, x2, x1);
        if (!expect_gsp(G, H1a, "split H1", why)) return false;
        if (!expect_gsp(G, H1b, "split H1 twist", why)) return false;
        SatakeParam L4 = gl4_param(mu * (x2 / x1), mu * (x1 / x2), mu, mu);
        if (!expect_gl4(G, L4, "split GL4", why)) return false;
    }
    return true;
}

bool row_induced_borel_epsprime(Sampler& rng, std::string* why) {
    FM h = rnd_mono(rng, false), mu = rnd_mono(rng);
    FM zp = sign_mono(rng);  // eps'(pi) at the inert place
    {   // inert
        FM htheta = mu / h;
        SatakeParam G = induced_borel(zp, zp * kMinus, mu);
        SatakeParam H1 = lift_xi1_inert(htheta, -htheta, h);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        SatakeParam L4 = gl4_param(mu, mu * zp * kMinus, -mu, mu * zp);
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split: chi2 = e' chi1, theta_i = mu / chi_i
        FM e = sign_mono(rng);
        FM x1 = rnd_mono(rng), x2 = e * x1;
        SatakeParam G = induced_borel(e, e, mu);
        SatakeParam H1 = lift_xi1_split(mu / x1, mu / x2, x1, x2);
        if (!expect_gsp(G, H1, "split H1", why)) return false;
    }
    return true;
}

bool row_induced_heisenberg_monomial(Sampler& rng, std::string* why) {
    FM h = rnd_mono(rng, false);
    {   // inert: G = 1 x pi(theta)
        SatakeParam G = induced_heisenberg(kOne, h, -h);
        SatakeParam H1 = lift_xi1_inert(h, -h, kOne);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        SatakeParam L4 = gl4_param(h, -h, h, -h);
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        FM t1 = rnd_mono(rng), t2 = rnd_mono(rng);
        SatakeParam G = induced_heisenberg(kOne, t1, t2);
        SatakeParam H1 = lift_xi1_split(t1, t2, kOne, kOne);
        if (!expect_gsp(G, H1, "split H1", why)) return false;
    }
    return true;
}

bool row_induced_heisenberg_twist(Sampler& rng, std::string* why) {
    FM h = rnd_mono(rng, false);
    {   // inert: G = eps x pi(theta); H1 entries I(1,1) (x) theta-conjugates
        SatakeParam G = induced_heisenberg(kMinus, h, -h);
        SatakeParam H1 = lift_xi1_inert(kOne, kOne, h);
        if (!expect_gsp(G, H1, "inert H1", why)) return false;
        SatakeParam L4 = gl4_param(h, -h, -h, h);
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        FM t1 = rnd_mono(rng), t2 = rnd_mono(rng);
        SatakeParam G = induced_heisenberg(kOne, t1, t2);
        SatakeParam H1 = lift_xi1_split(kOne, kOne, t1, t2);
        if (!expect_gsp(G, H1, "split H1", why)) return false;
    }
    return true;
}

bool row_induced_heisenberg_biquadratic(Sampler& rng, std::string* why) {
    // E' a second quadratic field; four decomposition patterns
    {   // E inert, E' inert: chi = mu as symbols
        FM h = rnd_mono(rng, false), ht = rnd_mono(rng, false);
        FM chi = h * h;
        SatakeParam G = induced_heisenberg(kOne, h * ht, -(h * ht));
        SatakeParam H1 = lift_xi1_inert(ht, -ht, h);
        if (!expect_gsp(G, H1, "inert/inert H1", why)) return false;
        (void)chi;
    }
    {   // E inert, E' split: mu2 = -mu1, chi = mu1^2
        FM t1 = rnd_mono(rng), t2 = rnd_mono(rng), m1 = rnd_mono(rng);
        if (t1 * m1 == -(t2 * m1)) return true;  // genericity mu theta != twist
        SatakeParam G = induced_heisenberg(kMinus, m1 * t1, -(m1 * t2));
        SatakeParam H1 = lift_xi1_inert(t1, t2, m1);
        if (!expect_gsp(G, H1, "inert/split H1", why)) return false;
    }
    {   // E split, E' inert: chi2 = -chi1, mu = chi1^2
        FM ht = rnd_mono(rng, false), x1 = rnd_mono(rng);
        SatakeParam G = induced_heisenberg(kMinus, x1 * ht, -(x1 * ht));
        SatakeParam H1 = lift_xi1_split(ht, -ht, x1, -x1);
        if (!expect_gsp(G, H1, "split/inert H1", why)) return false;
    }
    {   // E split, E' split: all characters share the value c
        FM c = rnd_mono(rng), t1 = rnd_mono(rng), t2 = rnd_mono(rng);
        if (c * t1 == c * t2) return true;
        SatakeParam G = induced_heisenberg(kOne, c * t1, c * t2);
        SatakeParam H1 = lift_xi1_split(t1, t2, c, c);
        if (!expect_gsp(G, H1, "split/split H1", why)) return false;
    }
    return true;
}

bool row_induced_heisenberg_nonmonomial(Sampler& rng, std::string* why) {
    FM c1 = rnd_mono(rng), c2 = rnd_mono(rng);
    {   // inert: G = eps x tau; H2 = B tau (x) omega eps
        SatakeParam G = induced_heisenberg(kMinus, c1, c2);
        SatakeParam H2 = lift_xi2_inert(c1, -(c1 * c2));
        if (!expect_gsp(G, H2, "inert H2", why)) return false;
        SatakeParam L4 = gl4_param(c1, c2, -c1, -c2);
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        SatakeParam G = induced_heisenberg(kOne, c1, c2);
        SatakeParam H2 = lift_xi2_split(c1, c2, c1, c2);
        if (!expect_gsp(G, H2, "split H2", why)) return false;
    }
    return true;
}

bool row_induced_borel_one_eps(Sampler& rng, std::string* why) {
    FM mu = rnd_mono(rng);
    {   // inert
        SatakeParam G = induced_borel(kOne, kMinus, mu);
        SatakeParam H2 = lift_xi2_inert(mu, -(mu * mu));
        if (!expect_gsp(G, H2, "inert H2", why)) return false;
        SatakeParam L4 = gl4_param(mu, mu, -mu, -mu);
        if (!expect_gl4(G, L4, "inert GL4", why)) return false;
    }
    {   // split
        SatakeParam G = induced_borel(kOne, kOne, mu);
        SatakeParam H2 = lift_xi2_split(mu, mu, mu, mu);
        if (!expect_gsp(G, H2, "split H2", why)) return false;
    }
    return true;
}

const std::map<std::string, RowCheck>& registry() {
    static const std::map<std::string, RowCheck> R = {
        {"unstable-pair-twist", {row_unstable_pair_twist}},
        {"unstable-pair-monomial", {row_unstable_pair_monomial}},
        {"stable-xi1-cuspidal", {row_stable_xi1_cuspidal}},
        {"stable-xi1-onedim", {row_stable_xi1_onedim}},
        {"stable-xi2-cuspidal", {row_stable_xi2_cuspidal}},
        {"stable-xi2-onedim", {row_stable_xi2_onedim}},
        {"induced-borel-eps-eps", {row_induced_borel_eps_eps}},
        {"induced-siegel-ratio", {row_induced_siegel_ratio}},
        {"induced-borel-epsprime", {row_induced_borel_epsprime}},
        {"induced-heisenberg-monomial", {row_induced_heisenberg_monomial}},
        {"induced-heisenberg-twist", {row_induced_heisenberg_twist}},
        {"induced-heisenberg-biquadratic", {row_induced_heisenberg_biquadratic}},
        {"induced-heisenberg-nonmonomial", {row_induced_heisenberg_nonmonomial}},
        {"induced-borel-one-eps", {row_induced_borel_one_eps}},
    };
    return R;
}

}  // namespace

bool verify_table_row(const std::string& row_id, Sampler& rng, int trials,
                      std::string* fail_detail) {
    auto it = registry().find(row_id);
    if (it == registry().end()) throw std::domain_error("unknown table row: " + row_id);
    for (int i = 0; i < trials; ++i)
        if (!it->second.run(rng, fail_detail)) return false;
    return true;
}

}  // namespace gsp2
