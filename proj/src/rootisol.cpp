#include "cutcheck/rootisol.hpp"

#include <algorithm>
#include <cassert>

namespace cutcheck {

namespace {

// Integer polynomial helpers for the 0-1 Descartes test. Coefficient vectors
// are dense, index = exponent, no trailing-zero invariant enforced here.

std::vector<Int> reverse_coeffs(const std::vector<Int>& c) {
    std::vector<Int> r(c.rbegin(), c.rend());
    return r;
}

// In-place Taylor shift p(x) -> p(x+1).
void shift1(std::vector<Int>& c) {
    int n = (int)c.size() - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
}

// p(x) -> 2^n p(x/2): roots double.
std::vector<Int> stretch2(const std::vector<Int>& c) {
    std::vector<Int> r = c;
    int n = (int)r.size() - 1;
    for (int i = 0; i <= n; ++i) r[i] <<= (n - i);
    return r;
}

int sign_variations(const std::vector<Int>& c) {
    int var = 0, prev = 0;
    for (const auto& z : c) {
        int s = sign(z);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Descartes bound on the number of roots of q in the open interval (0, 1):
// variations of (1+x)^n q(1/(1+x)).
int descartes_01(const std::vector<Int>& q) {
    std::vector<Int> r = reverse_coeffs(q);
    shift1(r);
    return sign_variations(r);
}

bool is_zero_at_0(const std::vector<Int>& q) { return sign(q[0]) == 0; }

struct Collector {
    const UP* sf;  // squarefree part, for endpoint checks
    std::vector<IsolatedRoot> out;

    void push_exact(const Rat& v) {
        IsolatedRoot r;
        r.exact = true;
        r.value = v;
        out.push_back(std::move(r));
    }
    // (a, b) holds exactly one root of sf. Repair endpoints that happen to be
    // roots themselves (possible when an adjacent exact root was a bisection
    // midpoint) so the published interval never has a root endpoint.
    void push_interval(Rat a, Rat b) {
        for (;;) {
            bool a_root = sign(sf->eval(a)) == 0;
            bool b_root = sign(sf->eval(b)) == 0;
            if (!a_root && !b_root) break;
            Rat m = (a + b) / 2;
            Rat vm = sf->eval(m);
            if (sign(vm) == 0) {
                push_exact(m);
                return;
            }
            if (a_root) {
                // Unique root r in (a,b), r != a. If sign changes on (m, b)
                // move a up to m, else the root is in (a, m): move b down.
                Rat vb = sf->eval(b);
                if (sign(vb) != 0 && sign(vm) != sign(vb)) a = m;
                else b = m;
            } else {
                Rat va = sf->eval(a);
                if (sign(va) != 0 && sign(vm) != sign(va)) b = m;
                else a = m;
            }
        }
        IsolatedRoot r;
        r.iv = RatIv(std::move(a), std::move(b));
        out.push_back(std::move(r));
    }
};

// Isolate roots of q in (0,1); the map t -> a + (b-a) t sends (0,1) onto the
// source interval (a, b) of the original polynomial.
void vca(const std::vector<Int>& q, const Rat& a, const Rat& b, Collector& col) {
    int v = descartes_01(q);
    if (v == 0) return;
    if (v == 1) {
        col.push_interval(a, b);
        return;
    }
    Rat m = (a + b) / 2;
    std::vector<Int> q0 = stretch2(q);  // roots of q in (0,1/2) -> q0 in (0,1)
    std::vector<Int> q1 = q0;
    shift1(q1);  // roots of q in (1/2,1) -> q1 in (0,1)
    if (is_zero_at_0(q1)) col.push_exact(m);  // q(1/2) == 0
    vca(q0, a, m, col);
    vca(q1, m, b, col);
}

// Positive roots of the integer squarefree polynomial c (no root at 0).
void isolate_positive(const std::vector<Int>& c, const UP& sf, Collector& col) {
    // Cauchy bound, rounded up to a power of two so scaling stays integral.
    Int maxabs = 0;
    int n = (int)c.size() - 1;
    for (int i = 0; i < n; ++i) {
        Int a = abs(c[i]);
        if (a > maxabs) maxabs = a;
    }
    Int lead = abs(c[n]);
    // bound = 1 + maxabs/lead <= 2^k
    Int num = maxabs + lead;  // bound <= num/lead
    unsigned k = 0;
    Int pow2 = 1;
    while (pow2 * lead < num) {
        pow2 <<= 1;
        ++k;
    }
    // q(x) = p(2^k x): coefficient i scaled by 2^(k*i); roots shrink by 2^k.
    std::vector<Int> q = c;
    for (int i = 0; i <= n; ++i) q[i] <<= (unsigned)(k * i);
    (void)sf;
    vca(q, Rat(0), Rat(pow2), col);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UP& p) {
    assert(!p.is_zero());
    UP sf = up_canonical(squarefree_part(p));
    std::vector<IsolatedRoot> result;
    if (sf.degree() <= 0) return result;

    PrimForm pf = up_primitive(sf);
    std::vector<Int> c = pf.prim;

    // Root at zero.
    size_t z = 0;
    while (z < c.size() && sign(c[z]) == 0) ++z;
    bool root_at_zero = z > 0;
    if (z > 0) c.erase(c.begin(), c.begin() + z);

    // Negative roots via p(-x), mirrored.
    std::vector<Int> neg = c;
    for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    UP sf_neg = up_from_ints(neg);
    Collector ncol{&sf_neg, {}};
    if (up_from_ints(neg).degree() >= 1) isolate_positive(neg, sf_neg, ncol);
    for (auto it = ncol.out.rbegin(); it != ncol.out.rend(); ++it) {
        IsolatedRoot r;
        if (it->exact) {
            r.exact = true;
            r.value = -it->value;
        } else {
            r.iv = RatIv(-it->iv.hi, -it->iv.lo);
        }
        result.push_back(std::move(r));
    }

    if (root_at_zero) {
        IsolatedRoot r;
        r.exact = true;
        r.value = 0;
        result.push_back(std::move(r));
    }

    UP sf_pos = up_from_ints(c);
    Collector pcol{&sf_pos, {}};
    if (sf_pos.degree() >= 1) isolate_positive(c, sf_pos, pcol);
    for (auto& r : pcol.out) result.push_back(std::move(r));
    return result;
}

std::vector<IsolatedRoot> isolate_real_roots_in(const UP& p, const Rat& a, const Rat& b) {
    std::vector<IsolatedRoot> all = isolate_real_roots(p);
    std::vector<IsolatedRoot> out;
    UP sf = squarefree_part(p);
    for (auto& r : all) {
        if (r.exact) {
            if (r.value > a && r.value < b) out.push_back(std::move(r));
            continue;
        }
        // Shrink the interval until it is inside (a,b) or clearly outside.
        for (;;) {
            if (r.iv.lo >= b || r.iv.hi <= a) break;              // outside
            if (r.iv.lo >= a && r.iv.hi <= b) {                   // inside
                out.push_back(r);
                break;
            }
            Rat m = r.iv.mid();
            Rat vm = sf.eval(m);
            if (sign(vm) == 0) {
                if (m > a && m < b) {
                    IsolatedRoot e;
                    e.exact = true;
                    e.value = m;
                    out.push_back(std::move(e));
                }
                break;
            }
            if (sign(vm) != sign(sf.eval(r.iv.hi))) r.iv.lo = m;
            else r.iv.hi = m;
        }
    }
    return out;
}

}  // namespace cutcheck
