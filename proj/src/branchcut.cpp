#include "cutcheck/branchcut.hpp"

#include <algorithm>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cutcheck/mpoly.hpp"
#include "cutcheck/reim.hpp"
#include "cutcheck/rootisol.hpp"

namespace cutcheck {
namespace {

// Argument shapes the exact routes cannot handle; what() becomes a note on
// the returned (numeric-evidence) set.
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kDegreeCap = 40;

int bp_total_degree(const BPoly& p) {
    int d = -1;
    for (int i = 0; i <= p.deg_y(); ++i) {
        UP c = p.coeff_y(i);
        if (!c.is_zero()) d = std::max(d, c.degree() + i);
    }
    return d;
}

// clause_add with the degree budget enforced on every emitted polynomial.
bool add_checked(Clause& c, const BPoly& p, Rel rel) {
    if (bp_total_degree(p) > kDegreeCap)
        throw Unsupported("condition polynomial exceeds the degree budget");
    return clause_add(c, p, rel);
}

// Pole exclusion: den != 0 with multiplicities stripped. Denominators are
// kept in positive form, so this is exactly the domain restriction.
bool add_nonvanish(Clause& c, const BPoly& den) {
    return add_checked(c, bp_squarefree_total(den), Rel::Ne);
}

std::string occurrence_name(NodeKind kind, const ExprPtr& arg) {
    return node_kind_name(kind) + "(" + expr_to_string(arg) + ")";
}

// Defining cut of kind(w) pulled back through w = (re + i*im)/den. The
// denominator is positive off its zero set, so u REL c clears to
// re - c*den REL 0 with the relation unchanged.
void add_crf_cuts(SemiAlgebraicSet& out, NodeKind kind, const CRF& f) {
    switch (kind) {
        case NodeKind::Sqrt:
        case NodeKind::Log: {
            Clause c;
            if (add_checked(c, f.im, Rel::Eq) && add_checked(c, f.re, Rel::Lt) &&
                add_nonvanish(c, f.den))
                sas_add_clause(out, std::move(c));
            return;
        }
        case NodeKind::Arccosh: {
            Clause c;
            if (add_checked(c, f.im, Rel::Eq) && add_checked(c, f.re - f.den, Rel::Lt) &&
                add_nonvanish(c, f.den))
                sas_add_clause(out, std::move(c));
            return;
        }
        case NodeKind::Arctan: {
            Clause up;
            if (add_checked(up, f.re, Rel::Eq) && add_checked(up, f.im - f.den, Rel::Ge) &&
                add_nonvanish(up, f.den))
                sas_add_clause(out, std::move(up));
            Clause dn;
            if (add_checked(dn, f.re, Rel::Eq) && add_checked(dn, f.im + f.den, Rel::Le) &&
                add_nonvanish(dn, f.den))
                sas_add_clause(out, std::move(dn));
            return;
        }
        default:
            throw std::logic_error("add_crf_cuts: node has no cut");
    }
}

// --- radical arguments -----------------------------------------------------
//
// An argument built from rational pieces and square roots of rational pieces
// is rewritten multilinearly over the distinct radicals r1 = sqrt(S1),
// r2 = sqrt(S2):  A = c0 + c1*r1 + c2*r2 + c3*r1*r2  with rational-function
// coefficients. One active radical admits exact cut clauses; two go through
// auxiliary-variable elimination.

struct RadEnv {
    std::vector<ExprPtr> radicands;
    std::vector<CRF> s;
};

struct RadTerms {
    CRF c[4];
};

CRF crf_zero() { return crf_const(Rat(0)); }

CRF cadd(const CRF& a, const CRF& b) {
    if (crf_is_zero(a)) return b;
    if (crf_is_zero(b)) return a;
    return crf_add(a, b);
}

CRF cmul(const CRF& a, const CRF& b) {
    if (crf_is_zero(a) || crf_is_zero(b)) return crf_zero();
    return crf_mul(a, b);
}

RadTerms rt_zero() {
    return RadTerms{{crf_zero(), crf_zero(), crf_zero(), crf_zero()}};
}

RadTerms rt_mul(const RadTerms& a, const RadTerms& b, const CRF& S1, const CRF& S2) {
    // r1^2 = S1, r2^2 = S2, so r1*(r1 r2) = S1 r2 and r2*(r1 r2) = S2 r1.
    RadTerms r = rt_zero();
    r.c[0] = cadd(cadd(cmul(a.c[0], b.c[0]), cmul(cmul(a.c[1], b.c[1]), S1)),
                  cadd(cmul(cmul(a.c[2], b.c[2]), S2),
                       cmul(cmul(cmul(a.c[3], b.c[3]), S1), S2)));
    r.c[1] = cadd(cadd(cmul(a.c[0], b.c[1]), cmul(a.c[1], b.c[0])),
                  cmul(cadd(cmul(a.c[2], b.c[3]), cmul(a.c[3], b.c[2])), S2));
    r.c[2] = cadd(cadd(cmul(a.c[0], b.c[2]), cmul(a.c[2], b.c[0])),
                  cmul(cadd(cmul(a.c[1], b.c[3]), cmul(a.c[3], b.c[1])), S1));
    r.c[3] = cadd(cadd(cmul(a.c[0], b.c[3]), cmul(a.c[3], b.c[0])),
                  cadd(cmul(a.c[1], b.c[2]), cmul(a.c[2], b.c[1])));
    return r;
}

RadTerms rad_walk(const ExprPtr& e, RadEnv& env) {
    switch (e->kind) {
        case NodeKind::Const: {
            RadTerms t = rt_zero();
            t.c[0] = crf_const(e->cre, e->cim);
            return t;
        }
        case NodeKind::Var: {
            RadTerms t = rt_zero();
            t.c[0] = crf_var(e->var);
            return t;
        }
        case NodeKind::Neg: {
            RadTerms t = rad_walk(e->kids[0], env);
            for (auto& c : t.c) c = crf_is_zero(c) ? c : crf_neg(c);
            return t;
        }
        case NodeKind::Add:
        case NodeKind::Sub: {
            RadTerms a = rad_walk(e->kids[0], env);
            RadTerms b = rad_walk(e->kids[1], env);
            if (e->kind == NodeKind::Sub)
                for (auto& c : b.c) c = crf_is_zero(c) ? c : crf_neg(c);
            RadTerms t = rt_zero();
            for (int i = 0; i < 4; ++i) t.c[i] = cadd(a.c[i], b.c[i]);
            return t;
        }
        case NodeKind::Mul: {
            RadTerms a = rad_walk(e->kids[0], env);
            RadTerms b = rad_walk(e->kids[1], env);
            CRF s1 = env.s.size() > 0 ? env.s[0] : crf_zero();
            CRF s2 = env.s.size() > 1 ? env.s[1] : crf_zero();
            return rt_mul(a, b, s1, s2);
        }
        case NodeKind::Pow: {
            if (e->exponent > 64) throw Unsupported("exponent too large in a radical argument");
            RadTerms b = rad_walk(e->kids[0], env);
            CRF s1 = env.s.size() > 0 ? env.s[0] : crf_zero();
            CRF s2 = env.s.size() > 1 ? env.s[1] : crf_zero();
            RadTerms t = rt_zero();
            t.c[0] = crf_const(Rat(1));
            for (int i = 0; i < e->exponent; ++i) t = rt_mul(t, b, s1, s2);
            return t;
        }
        case NodeKind::Div: {
            RadTerms b = rad_walk(e->kids[1], env);
            if (!crf_is_zero(b.c[1]) || !crf_is_zero(b.c[2]) || !crf_is_zero(b.c[3]))
                throw Unsupported("division by a radical-bearing subexpression");
            RadTerms a = rad_walk(e->kids[0], env);
            for (auto& c : a.c)
                if (!crf_is_zero(c)) c = crf_div(c, b.c[0]);
            return a;
        }
        case NodeKind::Sqrt: {
            const ExprPtr& rad = e->kids[0];
            if (!is_rational_expr(rad))
                throw Unsupported("nested radicals in the argument");
            CRF s = reim_split(rad);
            if (crf_is_zero(s)) return rt_zero();  // sqrt of an identical zero
            int idx = -1;
            for (size_t i = 0; i < env.radicands.size(); ++i)
                if (expr_equal(env.radicands[i], rad)) {
                    idx = (int)i;
                    break;
                }
            if (idx < 0) {
                if (env.radicands.size() >= 2)
                    throw Unsupported("more than two distinct radicals in the argument");
                env.radicands.push_back(rad);
                env.s.push_back(std::move(s));
                idx = (int)env.radicands.size() - 1;
            }
            RadTerms t = rt_zero();
            t.c[idx == 0 ? 1 : 2] = crf_const(Rat(1));
            return t;
        }
        default:
            throw Unsupported("argument mixes in a transcendental subterm (" +
                              node_kind_name(e->kind) + ")");
    }
}

// Fast principal-branch evaluation for evidence notes only; certificates
// never rest on this.
std::complex<double> eval_cd(const ExprPtr& e, std::complex<double> z) {
    using C = std::complex<double>;
    switch (e->kind) {
        case NodeKind::Const: return C(e->cre.get_d(), e->cim.get_d());
        case NodeKind::Var:
            if (e->var == "x") return C(z.real(), 0.0);
            if (e->var == "y") return C(z.imag(), 0.0);
            return z;
        case NodeKind::Neg: return -eval_cd(e->kids[0], z);
        case NodeKind::Add: return eval_cd(e->kids[0], z) + eval_cd(e->kids[1], z);
        case NodeKind::Sub: return eval_cd(e->kids[0], z) - eval_cd(e->kids[1], z);
        case NodeKind::Mul: return eval_cd(e->kids[0], z) * eval_cd(e->kids[1], z);
        case NodeKind::Div: return eval_cd(e->kids[0], z) / eval_cd(e->kids[1], z);
        case NodeKind::Pow: {
            C b = eval_cd(e->kids[0], z), r = 1.0;
            for (int i = 0; i < e->exponent; ++i) r *= b;
            return r;
        }
        case NodeKind::Sqrt: return std::sqrt(eval_cd(e->kids[0], z));
        case NodeKind::Log: return std::log(eval_cd(e->kids[0], z));
        case NodeKind::Exp: return std::exp(eval_cd(e->kids[0], z));
        case NodeKind::Arccosh: return std::acosh(eval_cd(e->kids[0], z));
        case NodeKind::Arctan: return std::atan(eval_cd(e->kids[0], z));
    }
    return {};
}

// Bisect an isolating interval of the squarefree part down to ~1e-14.
Rat refine_root(const UP& sf, const IsolatedRoot& r) {
    if (r.exact) return r.value;
    Rat lo = r.iv.lo, hi = r.iv.hi;
    int slo = sign(sf.eval(lo));
    for (int i = 0; i < 64 && sign(hi - lo) > 0; ++i) {
        Rat mid = (lo + hi) / 2;
        int sm = sign(sf.eval(mid));
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

// Walk the candidate curve cand = 0 and count how many sampled points pass
// the defining cut condition of kind(arg), evaluated numerically.
void attach_numeric_evidence(SemiAlgebraicSet& out, NodeKind kind, const ExprPtr& arg,
                             const BPoly& cand) {
    int on = 0, total = 0;
    for (int j = 0; j < 32; ++j) {
        Rat xj = Rat(-5) + Rat(10 * j, 31);
        UP py = cand.eval_x(xj);
        std::vector<Rat> ys;
        if (py.is_zero()) {
            ys = {Rat(-1), Rat(0), Rat(1)};  // vertical line component
        } else if (py.degree() >= 1) {
            UP sf = squarefree_part(py);
            for (const auto& r : isolate_real_roots(py)) ys.push_back(refine_root(sf, r));
        }
        for (const auto& yv : ys) {
            ++total;
            std::complex<double> A = eval_cd(arg, {xj.get_d(), yv.get_d()});
            double scale = 1.0 + std::abs(A);
            bool hit;
            if (kind == NodeKind::Arctan)
                hit = std::abs(A.real()) < 1e-6 * scale && std::abs(A.imag()) >= 1.0 - 1e-6;
            else
                hit = std::abs(A.imag()) < 1e-6 * scale &&
                      A.real() < (kind == NodeKind::Arccosh ? 1.0 : 0.0) + 1e-9;
            if (hit) ++on;
        }
    }
    std::ostringstream os;
    os << "numeric spot check: " << on << "/" << total
       << " candidate-curve samples satisfy the defining cut condition";
    out.notes.push_back(os.str());
}

// Exact clauses for A = P + Q*sqrt(S). The cut is parametrized as A = J*t
// (J = 1 for the real-interval cuts, J = i for arctan) and the squared
// equation (J t - P)^2 = S Q^2, cleared of denominators, splits into a
// t-linear imaginary part L1*t + L0 and a t-quadratic real part
// K2 t^2 + K1 t + K0. Side conditions on Re/Im((J t - P) conj Q) pin the
// principal branch, making the clauses exact. Returns false when the shape
// needs the auxiliary-variable fallback instead.
bool single_radical_cuts(SemiAlgebraicSet& out, NodeKind kind, const CRF& P, const CRF& Q,
                         const CRF& S) {
    const BPoly &pr = P.re, &pi = P.im, &pd = P.den;
    const BPoly &qr = Q.re, &qi = Q.im, &qd = Q.den;
    const BPoly &sr = S.re, &si = S.im, &sd = S.den;

    BPoly pd2 = pd * pd;
    BPoly sdqd2 = sd * (qd * qd);
    BPoly D = pd2 * sdqd2;
    BPoly wr = qr * qr - qi * qi;                  // Re Q^2 numerator
    BPoly wi = (qr * qi).scaled(Rat(2));           // Im Q^2 numerator
    BPoly ur = sr * wr - si * wi;                  // Re S*Q^2 numerator
    BPoly ui = sr * wi + si * wr;                  // Im S*Q^2 numerator

    BPoly K0 = (pr * pr - pi * pi) * sdqd2 - ur * pd2;
    BPoly L0 = (pr * pi).scaled(Rat(2)) * sdqd2 - ui * pd2;
    BPoly m = pd * sdqd2;
    const bool at = (kind == NodeKind::Arctan);
    BPoly K1 = at ? (pi * m).scaled(Rat(2)) : (pr * m).scaled(Rat(-2));
    BPoly L1 = at ? (pr * m).scaled(Rat(-2)) : (pi * m).scaled(Rat(-2));
    BPoly K2 = at ? -D : D;
    BPoly sg1 = at ? pd * qi : pd * qr;            // sigma(t) = sg1*t + sg0
    BPoly th1 = at ? pd * qr : -(pd * qi);         // tau(t)   = th1*t + th0
    BPoly sg0 = -(pr * qr + pi * qi);
    BPoly th0 = pr * qi - pi * qr;

    if (!L1.is_zero()) {
        // t is pinned rationally: t = -L0/L1. Clear it from K, the range
        // bound, and the branch-side sign.
        BPoly E = K2 * L0 * L0 - K1 * L0 * L1 + K0 * L1 * L1;
        BPoly Sg = (sg0 * L1 - sg1 * L0) * L1;
        BPoly Th = (th0 * L1 - th1 * L0) * L1;
        BPoly R;
        Rel rr;
        if (at) {
            R = L0 * L0 - L1 * L1;  // |t| >= 1
            rr = Rel::Ge;
        } else {
            R = (kind == NodeKind::Arccosh) ? (L0 + L1) * L1 : L0 * L1;  // t < T
            rr = Rel::Gt;
        }
        Clause main;
        if (add_checked(main, E, Rel::Eq) && add_checked(main, R, rr) &&
            add_checked(main, Sg, Rel::Gt) && add_checked(main, L1, Rel::Ne) &&
            add_nonvanish(main, D))
            sas_add_clause(out, std::move(main));
        // sigma = 0 tie: both branch signs project equally, tau decides.
        Clause tie;
        if (add_checked(tie, E, Rel::Eq) && add_checked(tie, R, rr) &&
            add_checked(tie, Sg, Rel::Eq) && add_checked(tie, Th, Rel::Ge) &&
            add_checked(tie, L1, Rel::Ne) && add_nonvanish(tie, D))
            sas_add_clause(out, std::move(tie));
        // Where L1 vanishes pointwise the parametrization degenerates; close
        // over that sublocus coarsely (sound over-approximation).
        Clause closure;
        if (add_checked(closure, L1, Rel::Eq) && add_checked(closure, L0, Rel::Eq) &&
            add_checked(closure, K1 * K1 - (K0 * K2).scaled(Rat(4)), Rel::Ge) &&
            add_nonvanish(closure, D)) {
            closure.over_approx = true;
            sas_add_clause(out, std::move(closure));
            out.notes.push_back(
                "closure clause over-approximates the sublocus where the parameter "
                "coefficient vanishes");
        }
        return true;
    }

    if (K1.is_zero()) {
        // P == 0: the argument is a pure radical multiple Q*sqrt(S) and
        // t^2 = -K0/D (arctan: t^2 = K0/D).
        if (L0.is_zero())
            throw Unsupported("imaginary part of the squared argument vanishes identically");
        if (at) {
            // Either square root serves: the side condition resolves by the
            // sign of Q pointwise, so |t| >= 1 is the whole condition.
            Clause c;
            if (add_checked(c, L0, Rel::Eq) && add_checked(c, K0 - D, Rel::Ge) &&
                add_nonvanish(c, D))
                sas_add_clause(out, std::move(c));
            return true;
        }
        if (kind == NodeKind::Arccosh) {
            // 0 <= t^2 < 1: both roots stay below the threshold, no side split.
            Clause a;
            if (add_checked(a, L0, Rel::Eq) && add_checked(a, K0, Rel::Le) &&
                add_checked(a, -K0 - D, Rel::Lt) && add_nonvanish(a, D))
                sas_add_clause(out, std::move(a));
            // t^2 >= 1 leaves only t = -sqrt(t^2), valid when Re Q < 0
            // (or Re Q = 0 with Im Q >= 0 on the tie).
            Clause b1;
            if (add_checked(b1, L0, Rel::Eq) && add_checked(b1, -K0 - D, Rel::Ge) &&
                add_checked(b1, qr, Rel::Lt) && add_nonvanish(b1, D))
                sas_add_clause(out, std::move(b1));
            Clause b2;
            if (add_checked(b2, L0, Rel::Eq) && add_checked(b2, -K0 - D, Rel::Ge) &&
                add_checked(b2, qr, Rel::Eq) && add_checked(b2, qi, Rel::Ge) &&
                add_nonvanish(b2, D))
                sas_add_clause(out, std::move(b2));
            return true;
        }
        // sqrt/log threshold 0: t < 0 forces the negative root.
        Clause n1;
        if (add_checked(n1, L0, Rel::Eq) && add_checked(n1, K0, Rel::Lt) &&
            add_checked(n1, qr, Rel::Lt) && add_nonvanish(n1, D))
            sas_add_clause(out, std::move(n1));
        Clause n2;
        if (add_checked(n2, L0, Rel::Eq) && add_checked(n2, K0, Rel::Lt) &&
            add_checked(n2, qr, Rel::Eq) && add_checked(n2, qi, Rel::Ge) &&
            add_nonvanish(n2, D))
            sas_add_clause(out, std::move(n2));
        return true;
    }

    // L1 == 0, K1 != 0: a real nonzero offset plus a radical. The parameter
    // elimination is quadratic; fall back to auxiliary variables.
    return false;
}

// Auxiliary-variable elimination: introduce r_i = a_i + i b_i for each
// radical, encode (a_i^2 - b_i^2, 2 a_i b_i) = (Re S_i, Im S_i), clear the
// argument's imaginary part, then project the auxiliaries away through
// Sylvester resultants. Every true cut point survives each resultant, so the
// remaining curve is a sound equality candidate; threshold and branch-side
// conditions are attached as numeric evidence only.
void aux_eliminate(SemiAlgebraicSet& out, NodeKind kind, const RadTerms& t, const RadEnv& env,
                   const ExprPtr& arg) {
    const int k = (int)env.radicands.size();
    const int n = 2 + 2 * k;
    auto mp = [&](const BPoly& p) { return MPoly::from_bpoly(p, n, 0, 1); };
    auto guard = [](const MPoly& p) {
        if (p.total_degree() > 64 || p.term_count() > 20000)
            throw Unsupported("elimination budget exceeded");
    };

    std::vector<MPoly> are(4, MPoly::constant(n, Rat(0))), aim(4, MPoly::constant(n, Rat(0)));
    are[0] = MPoly::constant(n, Rat(1));
    if (k >= 1) {
        are[1] = MPoly::var(n, 2);
        aim[1] = MPoly::var(n, 3);
    }
    if (k >= 2) {
        are[2] = MPoly::var(n, 4);
        aim[2] = MPoly::var(n, 5);
        are[3] = are[1] * are[2] - aim[1] * aim[2];
        aim[3] = are[1] * aim[2] + aim[1] * are[2];
    }

    MPoly E = MPoly::constant(n, Rat(0));
    for (int j = 0; j < 4; ++j) {
        if (crf_is_zero(t.c[j])) continue;
        MPoly scale = MPoly::constant(n, Rat(1));
        for (int l = 0; l < 4; ++l)
            if (l != j && !crf_is_zero(t.c[l])) scale = scale * mp(t.c[l].den);
        E = E + (mp(t.c[j].re) * aim[j] + mp(t.c[j].im) * are[j]) * scale;
    }
    guard(E);

    for (int i = k - 1; i >= 0; --i) {
        const int va = 2 + 2 * i, vb = va + 1;
        MPoly A = MPoly::var(n, va), B = MPoly::var(n, vb);
        MPoly sdm = mp(env.s[i].den);
        MPoly R1 = (A * A - B * B) * sdm - mp(env.s[i].re);
        MPoly R2 = (A * B * sdm).scaled(Rat(2)) - mp(env.s[i].im);
        if (E.degree_in(vb) > 0) {
            E = mp_resultant(E, R2, vb);
            guard(E);
        }
        if (E.degree_in(va) > 0) {
            MPoly ra = mp_resultant(R1, R2, vb);
            guard(ra);
            E = mp_resultant(E, ra, va);
            guard(E);
        }
        if (E.is_zero()) throw Unsupported("elimination degenerated (identically zero resultant)");
    }

    if (E.is_const()) {
        // Nonzero constant: the imaginary part cannot vanish, so no cut.
        out.notes.push_back("parameter elimination proves the cut locus empty");
        return;
    }
    for (int v = 2; v < n; ++v)
        if (E.degree_in(v) > 0) throw Unsupported("elimination left auxiliary variables behind");

    BPoly cand = bp_squarefree_total(E.to_bpoly(0, 1));
    if (bp_total_degree(cand) > kDegreeCap)
        throw Unsupported("candidate polynomial exceeds the degree budget");

    Clause c;
    bool ok = clause_add(c, cand, Rel::Eq);
    BPoly dens = BPoly::constant(Rat(1));
    for (int j = 0; j < 4; ++j)
        if (!crf_is_zero(t.c[j])) dens = dens * t.c[j].den;
    for (const auto& s : env.s) dens = dens * s.den;
    if (ok && !dens.is_const()) {
        BPoly dsf = bp_squarefree_total(dens);
        if (bp_total_degree(dsf) <= kDegreeCap) clause_add(c, dsf, Rel::Ne);
    }
    if (ok) {
        c.over_approx = true;
        sas_add_clause(out, std::move(c));
    }
    out.exact = false;
    out.notes.push_back(
        "equality candidate from auxiliary-variable elimination; threshold and "
        "branch-side conditions are not attached as polynomials");
    attach_numeric_evidence(out, kind, arg, cand);
}

void zero_locus_into(const ExprPtr& e, SemiAlgebraicSet& out) {
    if (is_rational_expr(e)) {
        CRF f = reim_split(e);
        if (crf_is_zero(f))
            throw ZeroDivisorError("identically zero divisor: " + expr_to_string(e));
        Clause c;
        if (add_checked(c, f.re, Rel::Eq) && add_checked(c, f.im, Rel::Eq) &&
            add_nonvanish(c, f.den))
            sas_add_clause(out, std::move(c));
        return;
    }
    switch (e->kind) {
        case NodeKind::Neg:
            zero_locus_into(e->kids[0], out);
            return;
        case NodeKind::Mul:
            zero_locus_into(e->kids[0], out);
            zero_locus_into(e->kids[1], out);
            return;
        case NodeKind::Div:
        case NodeKind::Pow:
        case NodeKind::Sqrt:
        case NodeKind::Arctan:
            zero_locus_into(e->kids[0], out);
            return;
        case NodeKind::Log:
        case NodeKind::Arccosh:
            // zero exactly where the argument is 1
            zero_locus_into(ex_sub(e->kids[0], ex_int(1)), out);
            return;
        case NodeKind::Exp:
            return;  // never zero
        default:
            out.exact = false;
            out.notes.push_back("zero locus of '" + expr_to_string(e) +
                                "' is not algebraic here; numeric evidence only");
            return;
    }
}

}  // namespace

std::string defining_cut(NodeKind kind) {
    switch (kind) {
        case NodeKind::Sqrt:
        case NodeKind::Log:
            return "v = 0 and u < 0";
        case NodeKind::Arccosh:
            return "v = 0 and u < 1";
        case NodeKind::Arctan:
            return "u = 0 and (v >= 1 or v <= -1)";
        default:
            return "(none)";
    }
}

SemiAlgebraicSet cuts_rational_arg(NodeKind kind, const ExprPtr& arg) {
    SemiAlgebraicSet out;
    out.provenance = occurrence_name(kind, arg);
    if (variables_of(arg).empty()) {
        out.notes.push_back("constant argument: no cut in the variable");
        return out;
    }
    add_crf_cuts(out, kind, reim_split(arg));
    return out;
}

SemiAlgebraicSet cuts_radical_arg(NodeKind kind, const ExprPtr& arg) {
    SemiAlgebraicSet out;
    out.provenance = occurrence_name(kind, arg);
    if (variables_of(arg).empty()) {
        out.notes.push_back("constant argument: no cut in the variable");
        return out;
    }
    try {
        RadEnv env;
        RadTerms t = rad_walk(arg, env);
        bool u1 = !crf_is_zero(t.c[1]);
        bool u2 = !crf_is_zero(t.c[2]);
        bool u12 = !crf_is_zero(t.c[3]);
        if (!u1 && !u2 && !u12) {
            // radicals canceled; the argument is rational after all
            add_crf_cuts(out, kind, t.c[0]);
            return out;
        }
        if (u2 && !u1 && !u12) {
            std::swap(t.c[1], t.c[2]);
            std::swap(env.radicands[0], env.radicands[1]);
            std::swap(env.s[0], env.s[1]);
            u1 = true;
            u2 = false;
        }
        if (u1 && !u2 && !u12) {
            if (single_radical_cuts(out, kind, t.c[0], t.c[1], env.s[0])) return out;
            RadEnv one;
            one.radicands.push_back(env.radicands[0]);
            one.s.push_back(env.s[0]);
            out.notes.push_back(
                "real offset plus radical: parameter elimination is quadratic");
            aux_eliminate(out, kind, t, one, arg);
            return out;
        }
        aux_eliminate(out, kind, t, env, arg);
    } catch (const Unsupported& u) {
        out.clauses.clear();
        out.exact = false;
        out.notes.push_back(u.what());
        out.notes.push_back("cut locus not computed exactly; numeric evidence only");
    }
    return out;
}

SemiAlgebraicSet zero_locus(const ExprPtr& e) {
    SemiAlgebraicSet out;
    out.provenance = "zeros of " + expr_to_string(e);
    zero_locus_into(e, out);
    return out;
}

std::vector<SemiAlgebraicSet> expression_cuts(const ExprPtr& e) {
    std::vector<SemiAlgebraicSet> out;
    for (const auto& [kind, arg] : non_analytic_nodes(e)) {
        if (is_rational_expr(arg))
            out.push_back(cuts_rational_arg(kind, arg));
        else
            out.push_back(cuts_radical_arg(kind, arg));
    }
    for (const auto& d : divisor_nodes(e)) {
        SemiAlgebraicSet s = zero_locus(d);
        s.provenance = "pole locus of divisor " + expr_to_string(d);
        out.push_back(std::move(s));
    }
    return out;
}

SemiAlgebraicSet real_discontinuity_locus(const ExprPtr& e) {
    SemiAlgebraicSet out;
    out.provenance = "real discontinuity locus of " + expr_to_string(e);
    for (const auto& [kind, arg] : non_analytic_nodes(e)) {
        switch (kind) {
            case NodeKind::Arctan: {
                if (!is_rational_expr(arg))
                    throw std::invalid_argument(
                        "arctan argument must be rational over the reals");
                CRF f = reim_split(arg);
                if (!f.den.is_const()) {
                    Clause c;
                    if (add_checked(c, bp_squarefree_total(f.den), Rel::Eq))
                        sas_add_clause(out, std::move(c));
                }
                break;
            }
            case NodeKind::Sqrt: {
                if (!is_rational_expr(arg))
                    throw std::invalid_argument(
                        "nested radicals are not supported over the reals");
                CRF f = reim_split(arg);
                Clause boundary;
                if (add_checked(boundary, f.re, Rel::Eq) && add_nonvanish(boundary, f.den))
                    sas_add_clause(out, std::move(boundary));
                Clause excluded;  // radicand < 0: the whole region is outside the domain
                if (add_checked(excluded, f.re, Rel::Lt) && add_nonvanish(excluded, f.den))
                    sas_add_clause(out, std::move(excluded));
                break;
            }
            default:
                throw std::invalid_argument("function not supported over the reals: " +
                                            node_kind_name(kind));
        }
    }
    for (const auto& d : divisor_nodes(e)) {
        SemiAlgebraicSet zs = zero_locus(d);
        if (!zs.exact) out.exact = false;
        for (auto& nt : zs.notes) out.notes.push_back(std::move(nt));
        for (auto& c : zs.clauses) sas_add_clause(out, std::move(c));
    }
    return out;
}

}  // namespace cutcheck
