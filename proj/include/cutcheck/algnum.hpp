#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cutcheck/rational.hpp"
#include "cutcheck/rootisol.hpp"
#include "cutcheck/upoly.hpp"

namespace cutcheck {

// Shared state for one real algebraic number alpha: a squarefree defining
// polynomial and an open isolating interval (lo, hi) with non-root endpoints
// containing exactly one root. Refinement bisects; if a bisection midpoint
// turns out to be the root itself, the number collapses to an exact rational.
// The defining polynomial may shrink to a divisor (dynamic splitting) when a
// field operation discovers a factor; the invariant is maintained throughout.
struct AlgCtx {
    UP f;
    Rat lo, hi;
    std::optional<Rat> exact;
    std::mutex mtx;

    AlgCtx(UP poly, Rat l, Rat h) : f(std::move(poly)), lo(std::move(l)), hi(std::move(h)) {}

    RatIv interval_unlocked() const {
        if (exact) return RatIv(*exact);
        return RatIv(lo, hi);
    }
    void refine_once_unlocked();
    void refine_below_unlocked(const Rat& width);
    // Replace f by a divisor that still vanishes at alpha (internal).
    void shrink_unlocked(UP divisor);
    // Exact sign of q(alpha): gcd test for zero, interval refinement otherwise.
    int sign_of_unlocked(const UP& q);
};

// Real algebraic number with a rational fast path.
class AlgNum {
  public:
    AlgNum() : rat_(0) {}
    explicit AlgNum(Rat v) : rat_(std::move(v)) {}
    static AlgNum from_root(const UP& squarefree, const RatIv& iv);
    static AlgNum from_isolated(const UP& squarefree, const IsolatedRoot& r);

    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()
    RatIv enclosure() const;
    void refine_below(const Rat& width) const;
    int sgn() const;
    int sign_of_up_at(const UP& q) const;  // exact sign of q(alpha)
    static int compare(const AlgNum& a, const AlgNum& b);
    double approx() const;

    // Serialization views (defining polynomial is empty for rationals).
    UP defining() const;
    RatIv isolating() const;

  private:
    std::shared_ptr<AlgCtx> ctx_;
    Rat rat_;
};

// Element of Q(alpha) represented as a polynomial in alpha reduced mod f.
// ctx == nullptr means a plain rational; mixing two distinct non-null
// contexts is a programming error. Zero tests and signs are exact.
class AFElem {
  public:
    AFElem() = default;
    AFElem(int v) : rep_(UP(Rat(v))) {}
    AFElem(long v) : rep_(UP(Rat((long)v))) {}
    explicit AFElem(Rat v) : rep_(UP(std::move(v))) {}
    AFElem(std::shared_ptr<AlgCtx> ctx, UP rep);

    const std::shared_ptr<AlgCtx>& ctx() const { return ctx_; }
    const UP& rep() const { return rep_; }

    AFElem operator-() const;
    AFElem operator+(const AFElem& o) const;
    AFElem operator-(const AFElem& o) const;
    AFElem operator*(const AFElem& o) const;
    bool operator==(const AFElem& o) const { return ctx_ == o.ctx_ && rep_ == o.rep_; }

    friend bool kis_zero(const AFElem& e);
    friend int ksign(const AFElem& e);
    friend AFElem kdiv(const AFElem& a, const AFElem& b);

    // Rational enclosure of the value, refined until width <= w (w > 0).
    RatIv enclosure(const Rat& w) const;

  private:
    std::shared_ptr<AlgCtx> ctx_;
    UP rep_;
    static std::shared_ptr<AlgCtx> merged_ctx(const AFElem& a, const AFElem& b);
};

using UPA = UPoly<AFElem>;

UPA upa_from_up(const UP& p);  // rational coefficients
UPA upa_lift(const std::shared_ptr<AlgCtx>& ctx, const std::vector<UP>& coeffs_in_alpha);

// Distinct real roots of P over Q(alpha) (P != 0, degree >= 1 after trim),
// ascending, endpoints of interval results are not roots of the squarefree
// part. Exact throughout.
std::vector<IsolatedRoot> isolate_fiber_roots(const UPA& P);

// Sturm-Tarski query: sum of sign(Q(y)) over the distinct real roots y of the
// squarefree P in (a, b); requires P(a) != 0 and P(b) != 0. When (a, b)
// isolates a single root beta this is exactly sign(Q(beta)).
int tarski_query(const UPA& P, const UPA& Q, const Rat& a, const Rat& b);

int upa_sign_at(const UPA& P, const Rat& x);  // exact sign of P(x)

}  // namespace cutcheck
