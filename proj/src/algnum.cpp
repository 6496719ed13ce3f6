#include "cutcheck/algnum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cutcheck {

// --- AlgCtx ---

void AlgCtx::refine_once_unlocked() {
    if (exact) return;
    Rat m = (lo + hi) / 2;
    Rat vm = f.eval(m);
    if (sign(vm) == 0) {
        exact = m;
        return;
    }
    if (sign(f.eval(lo)) != sign(vm)) hi = m;
    else lo = m;
}

void AlgCtx::refine_below_unlocked(const Rat& width) {
    while (!exact && hi - lo > width) refine_once_unlocked();
}

void AlgCtx::shrink_unlocked(UP divisor) {
    // divisor | f, divisor(alpha) == 0; endpoints stay non-roots because they
    // are non-roots of f. The interval still isolates: roots(divisor) is a
    // subset of roots(f) and alpha is the only root of f inside.
    f = up_canonical(std::move(divisor));
}

int AlgCtx::sign_of_unlocked(const UP& q) {
    if (q.is_zero()) return 0;
    if (exact) return sign(q.eval(*exact));
    UP g = upoly_gcd(f, q);
    if (g.degree() >= 1) {
        if (up_sturm_count_rat(g, lo, hi) == 1) {
            shrink_unlocked(g);
            return 0;
        }
    }
    // q(alpha) != 0: refine until the interval evaluation has a definite sign.
    for (;;) {
        RatIv e = up_eval_iv(q, RatIv(lo, hi));
        int s = e.definite_sign();
        if (s != 0) return s;
        refine_once_unlocked();
        if (exact) return sign(q.eval(*exact));
    }
}

// --- AlgNum ---

AlgNum AlgNum::from_root(const UP& squarefree, const RatIv& iv) {
    UP f = up_canonical(squarefree);
    if (f.degree() == 1) {
        // Root of a*x + b is exactly -b/a.
        return AlgNum(-f.coeff(0) / f.coeff(1));
    }
    AlgNum a;
    a.ctx_ = std::make_shared<AlgCtx>(std::move(f), iv.lo, iv.hi);
    return a;
}

AlgNum AlgNum::from_isolated(const UP& squarefree, const IsolatedRoot& r) {
    if (r.exact) return AlgNum(r.value);
    return from_root(squarefree, r.iv);
}

bool AlgNum::is_rational() const {
    if (!ctx_) return true;
    std::lock_guard<std::mutex> g(ctx_->mtx);
    return ctx_->exact.has_value();
}

Rat AlgNum::rational_value() const {
    if (!ctx_) return rat_;
    std::lock_guard<std::mutex> g(ctx_->mtx);
    assert(ctx_->exact);
    return *ctx_->exact;
}

RatIv AlgNum::enclosure() const {
    if (!ctx_) return RatIv(rat_);
    std::lock_guard<std::mutex> g(ctx_->mtx);
    return ctx_->interval_unlocked();
}

void AlgNum::refine_below(const Rat& width) const {
    if (!ctx_) return;
    std::lock_guard<std::mutex> g(ctx_->mtx);
    ctx_->refine_below_unlocked(width);
}

int AlgNum::sgn() const {
    if (!ctx_) return sign(rat_);
    std::lock_guard<std::mutex> g(ctx_->mtx);
    return ctx_->sign_of_unlocked(UP::from_coeffs({Rat(0), Rat(1)}));
}

int AlgNum::sign_of_up_at(const UP& q) const {
    if (!ctx_) return sign(q.eval(rat_));
    std::lock_guard<std::mutex> g(ctx_->mtx);
    return ctx_->sign_of_unlocked(q);
}

int AlgNum::compare(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() || b.is_rational()) {
        if (a.is_rational() && b.is_rational()) {
            Rat va = a.rational_value(), vb = b.rational_value();
            return va < vb ? -1 : (va == vb ? 0 : 1);
        }
        if (b.is_rational()) return a.sign_of_up_at(UP::from_coeffs({-b.rational_value(), Rat(1)}));
        return -b.sign_of_up_at(UP::from_coeffs({-a.rational_value(), Rat(1)}));
    }
    if (a.ctx_ == b.ctx_) return 0;
    // A common root of the defining polynomials inside both intervals means
    // equality; otherwise the numbers differ and refinement separates them.
    {
        std::scoped_lock lk(a.ctx_->mtx, b.ctx_->mtx);
        UP g = upoly_gcd(a.ctx_->f, b.ctx_->f);
        if (g.degree() >= 1) {
            Rat olo = std::max(a.ctx_->lo, b.ctx_->lo);
            Rat ohi = std::min(a.ctx_->hi, b.ctx_->hi);
            if (olo < ohi && up_sturm_count_rat(g, olo, ohi) >= 1) return 0;
        }
    }
    for (;;) {
        if (a.is_rational() || b.is_rational()) return compare(a, b);
        RatIv ia = a.enclosure(), ib = b.enclosure();
        // Open intervals with non-root endpoints: touching suffices.
        if (ia.hi <= ib.lo) return -1;
        if (ib.hi <= ia.lo) return 1;
        a.refine_below(ia.width() / 2);
        b.refine_below(ib.width() / 2);
    }
}

double AlgNum::approx() const {
    RatIv e = enclosure();
    if (e.lo == e.hi) return rat_to_double(e.lo);
    refine_below(Rat(1, 1000000000));
    e = enclosure();
    return rat_to_double(e.mid());
}

UP AlgNum::defining() const {
    if (!ctx_) return UP();
    std::lock_guard<std::mutex> g(ctx_->mtx);
    return ctx_->f;
}

RatIv AlgNum::isolating() const { return enclosure(); }

// --- AFElem ---

AFElem::AFElem(std::shared_ptr<AlgCtx> ctx, UP rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {
    if (ctx_) {
        std::lock_guard<std::mutex> g(ctx_->mtx);
        if (rep_.degree() >= ctx_->f.degree()) rep_ = rep_ % ctx_->f;
    }
}

std::shared_ptr<AlgCtx> AFElem::merged_ctx(const AFElem& a, const AFElem& b) {
    if (a.ctx_ && b.ctx_) {
        assert(a.ctx_ == b.ctx_ && "AFElem: mixing distinct algebraic contexts");
        return a.ctx_;
    }
    return a.ctx_ ? a.ctx_ : b.ctx_;
}

AFElem AFElem::operator-() const {
    AFElem r = *this;
    r.rep_ = -r.rep_;
    return r;
}

AFElem AFElem::operator+(const AFElem& o) const {
    return AFElem(merged_ctx(*this, o), rep_ + o.rep_);
}

AFElem AFElem::operator-(const AFElem& o) const {
    return AFElem(merged_ctx(*this, o), rep_ - o.rep_);
}

AFElem AFElem::operator*(const AFElem& o) const {
    return AFElem(merged_ctx(*this, o), rep_ * o.rep_);
}

bool kis_zero(const AFElem& e) {
    if (!e.ctx_) return e.rep_.is_zero();
    std::lock_guard<std::mutex> g(e.ctx_->mtx);
    UP r = e.rep_.degree() >= e.ctx_->f.degree() ? e.rep_ % e.ctx_->f : e.rep_;
    if (r.is_zero()) return true;
    if (e.ctx_->exact) return sign(r.eval(*e.ctx_->exact)) == 0;
    return e.ctx_->sign_of_unlocked(r) == 0;
}

int ksign(const AFElem& e) {
    if (!e.ctx_) return e.rep_.is_zero() ? 0 : sign(e.rep_.coeff(0));
    std::lock_guard<std::mutex> g(e.ctx_->mtx);
    UP r = e.rep_.degree() >= e.ctx_->f.degree() ? e.rep_ % e.ctx_->f : e.rep_;
    return e.ctx_->sign_of_unlocked(r);
}

namespace {
// s with s*a == gcd(a, b) (mod b), by the iterative half-extended Euclid.
struct HalfExt {
    UP g, s;
};
HalfExt half_ext_gcd(UP a, UP b) {
    UP s0(Rat(1)), s1;
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        UP s2 = s0 - q * s1;
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {a, s0};
}
}  // namespace

AFElem kdiv(const AFElem& a, const AFElem& b) {
    if (!b.ctx_) {
        assert(!b.rep_.is_zero() && "division by zero");
        Rat inv = Rat(1) / b.rep_.coeff(0);
        AFElem r = a;
        r.rep_ = r.rep_.scaled(inv);
        return r;
    }
    std::shared_ptr<AlgCtx> ctx = b.ctx_;
    std::unique_lock<std::mutex> lk(ctx->mtx);
    if (ctx->exact) {
        Rat al = *ctx->exact;
        Rat bv = b.rep_.eval(al);
        assert(sign(bv) != 0 && "division by zero");
        lk.unlock();
        Rat av = a.rep_.is_zero() ? Rat(0) : a.rep_.eval(al);
        return AFElem(ctx, UP(Rat(av / bv)));
    }
    UP brep = b.rep_.degree() >= ctx->f.degree() ? b.rep_ % ctx->f : b.rep_;
    assert(!brep.is_zero() && "division by zero");
    for (;;) {
        HalfExt e = half_ext_gcd(brep, ctx->f);
        if (e.g.degree() == 0) {
            // s*brep == g (const) mod f, so inv = s/g.
            UP inv = e.s.scaled(Rat(1) / e.g.coeff(0));
            lk.unlock();
            return AFElem(ctx, a.rep_ * inv);
        }
        // gcd(brep, f) nontrivial; b is a unit, so alpha is a root of f/g.
        // Split the context and retry with the reduced representative.
        UP cof = ctx->f / e.g;
        ctx->shrink_unlocked(cof);
        brep = brep % ctx->f;
        assert(!brep.is_zero());
    }
}

RatIv AFElem::enclosure(const Rat& w) const {
    if (!ctx_) return RatIv(rep_.is_zero() ? Rat(0) : rep_.coeff(0));
    std::lock_guard<std::mutex> g(ctx_->mtx);
    UP r = rep_.degree() >= ctx_->f.degree() ? rep_ % ctx_->f : rep_;
    for (;;) {
        RatIv iv = up_eval_iv(r, ctx_->interval_unlocked());
        if (iv.width() <= w) return iv;
        if (ctx_->exact) return iv;
        ctx_->refine_once_unlocked();
    }
}

// --- Q(alpha)[y] ---

UPA upa_from_up(const UP& p) {
    std::vector<AFElem> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return UPA::from_coeffs(std::move(c));
}

UPA upa_lift(const std::shared_ptr<AlgCtx>& ctx, const std::vector<UP>& coeffs_in_alpha) {
    std::vector<AFElem> c;
    c.reserve(coeffs_in_alpha.size());
    for (const auto& q : coeffs_in_alpha) c.emplace_back(ctx, q);
    return UPA::from_coeffs(std::move(c));
}

int upa_sign_at(const UPA& P, const Rat& x) { return ksign(P.eval(AFElem(x))); }

namespace {

Rat upa_root_bound(const UPA& P) {
    // 1 + max |c_i| / |lc| via rational enclosures; the leading coefficient is
    // nonzero by the trim invariant, so its enclosure eventually separates.
    AFElem lead = P.coeff(P.degree());
    Rat w(1, 16);
    RatIv le = lead.enclosure(w);
    while (le.contains_zero()) {
        w /= 16;
        le = lead.enclosure(w);
    }
    Rat lmin = std::min(rat_abs(le.lo), rat_abs(le.hi));
    Rat m = 0;
    for (int i = 0; i < P.degree(); ++i) {
        RatIv ce = P.coeff(i).enclosure(Rat(1, 16));
        Rat cmax = std::max(rat_abs(ce.lo), rat_abs(ce.hi));
        m = std::max(m, cmax / lmin);
    }
    return m + 1;
}

int count_roots(const std::vector<UPA>& chain, const Rat& a, const Rat& b) {
    auto sgn_of = [](const AFElem& v) { return ksign(v); };
    return sturm_variations(chain, AFElem(a), sgn_of) - sturm_variations(chain, AFElem(b), sgn_of);
}

void fiber_bisect(const UPA& sf, const std::vector<UPA>& chain, const Rat& a, const Rat& b,
                  int count, std::vector<IsolatedRoot>& out) {
    if (count == 0) return;
    if (count == 1) {
        IsolatedRoot r;
        r.iv = RatIv(a, b);
        out.push_back(std::move(r));
        return;
    }
    Rat m = (a + b) / 2;
    if (ksign(sf.eval(AFElem(m))) == 0) {
        // Exact rational root at the midpoint; carve it out with a margin
        // that keeps the remaining root counts intact.
        Rat w = (b - a) / 4;
        for (;;) {
            Rat ml = m - w, mr = m + w;
            if (ksign(sf.eval(AFElem(ml))) != 0 && ksign(sf.eval(AFElem(mr))) != 0) {
                int cl = count_roots(chain, a, ml);
                int cr = count_roots(chain, mr, b);
                if (cl + cr == count - 1) {
                    fiber_bisect(sf, chain, a, ml, cl, out);
                    IsolatedRoot e;
                    e.exact = true;
                    e.value = m;
                    out.push_back(std::move(e));
                    fiber_bisect(sf, chain, mr, b, cr, out);
                    return;
                }
            }
            w /= 2;
        }
    }
    int cl = count_roots(chain, a, m);
    fiber_bisect(sf, chain, a, m, cl, out);
    fiber_bisect(sf, chain, m, b, count - cl, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_fiber_roots(const UPA& P) {
    std::vector<IsolatedRoot> out;
    if (P.degree() < 1) return out;
    UPA sf = squarefree_part(P).monic();
    if (sf.degree() < 1) return out;
    std::vector<UPA> chain = sturm_chain(sf);
    Rat B = upa_root_bound(sf);
    int total = count_roots(chain, -B, B);
    fiber_bisect(sf, chain, -B, B, total, out);
    return out;
}

int tarski_query(const UPA& P, const UPA& Q, const Rat& a, const Rat& b) {
    // Chain (P, P'Q, negated remainders); variation difference gives
    // sum of sign(Q) over roots of P in (a, b). Field arithmetic, so no
    // specialization pitfalls.
    std::vector<UPA> chain;
    chain.push_back(P);
    UPA second = P.derivative() * Q;
    if (!second.is_zero()) {
        chain.push_back(second);
        for (;;) {
            const UPA& p0 = chain[chain.size() - 2];
            const UPA& p1 = chain[chain.size() - 1];
            UPA r = p0 % p1;
            if (r.is_zero()) break;
            chain.push_back(-r);
        }
    }
    auto sgn_of = [](const AFElem& v) { return ksign(v); };
    return sturm_variations(chain, AFElem(a), sgn_of) - sturm_variations(chain, AFElem(b), sgn_of);
}

}  // namespace cutcheck
