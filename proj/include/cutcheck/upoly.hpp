#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "cutcheck/rational.hpp"

namespace cutcheck {

// Coefficient-field hooks. UPoly<K> relies on these free functions so the
// same code serves Q and Q(alpha). For Q(alpha) a zero test is a real
// computation (gcd with the defining polynomial), not a representation check;
// that is why trimming goes through kis_zero instead of operator==.
inline bool kis_zero(const Rat& q) { return sign(q) == 0; }
inline int ksign(const Rat& q) { return sign(q); }
inline Rat kdiv(const Rat& a, const Rat& b) { return a / b; }

// Dense univariate polynomial over a field K.
template <class K>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(K constant) {
        if (!kis_zero(constant)) c_.push_back(std::move(constant));
    }
    static UPoly from_coeffs(std::vector<K> coeffs) {
        UPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    // Monomial c * x^e.
    static UPoly monomial(K coeff, int e) {
        UPoly p;
        if (kis_zero(coeff)) return p;
        p.c_.assign(e + 1, K(0));
        p.c_[e] = std::move(coeff);
        return p;
    }

    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const K& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= (int)c_.size()) return K(0);
        return c_[i];
    }
    const std::vector<K>& coeffs() const { return c_; }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& k : r.c_) k = -k;
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return from_coeffs(std::move(r));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return from_coeffs(std::move(r));
    }
    UPoly scaled(const K& k) const {
        if (kis_zero(k)) return UPoly();
        UPoly r = *this;
        for (auto& ci : r.c_) ci = ci * k;
        r.trim();
        return r;
    }
    // x -> x * 2^?  not needed generically; shifting lives in rootisol.

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K((long)i);
        return from_coeffs(std::move(r));
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Quotient and remainder; requires non-zero divisor over a field.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        assert(!d.is_zero());
        UPoly q;
        UPoly r = *this;
        if (r.degree() >= d.degree()) q.c_.assign(r.degree() - d.degree() + 1, K(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K factor = kdiv(r.lc(), d.lc());
            int shift = r.degree() - d.degree();
            q.c_[shift] = factor;
            // r -= factor * x^shift * d, with exact cancellation of the lead.
            for (int i = 0; i <= d.degree(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - factor * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    UPoly operator/(const UPoly& d) const { return divrem(d).first; }
    UPoly operator%(const UPoly& d) const { return divrem(d).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        UPoly r = *this;
        K inv = kdiv(K(1), lc());
        for (auto& k : r.c_) k = k * inv;
        return r;
    }

    void trim() {
        while (!c_.empty() && kis_zero(c_.back())) c_.pop_back();
    }

  private:
    std::vector<K> c_;
};

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
        if (!a.is_zero()) a = a.monic();  // keep coefficient growth in check
    }
    return a.is_zero() ? a : a.monic();
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.degree() <= 0) return p;
    UPoly<K> g = upoly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p / g;
}

// Sturm chain: p, p', then negated remainders down to a constant.
template <class K>
std::vector<UPoly<K>> sturm_chain(const UPoly<K>& p) {
    std::vector<UPoly<K>> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UPoly<K> d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    for (;;) {
        const UPoly<K>& a = chain[chain.size() - 2];
        const UPoly<K>& b = chain[chain.size() - 1];
        UPoly<K> r = a % b;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

// Sign variations of the chain evaluated at x; zeros are skipped.
template <class K, class SignFn>
int sturm_variations(const std::vector<UPoly<K>>& chain, const K& x, SignFn sgn_of) {
    int var = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sgn_of(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

// Distinct real roots of p in (a, b]; requires p(a) != 0.
template <class K, class SignFn>
int sturm_count(const std::vector<UPoly<K>>& chain, const K& a, const K& b, SignFn sgn_of) {
    if (chain.empty()) return 0;
    return sturm_variations(chain, a, sgn_of) - sturm_variations(chain, b, sgn_of);
}

using UP = UPoly<Rat>;

// --- Q-specific helpers (upoly.cpp) ---

// Integer content/primitive form: p = (num/den) * prim with prim an integer
// polynomial with content 1 and positive leading coefficient.
struct PrimForm {
    Rat factor;
    std::vector<Int> prim;
};
PrimForm up_primitive(const UP& p);
UP up_from_ints(const std::vector<Int>& c);

// Canonical form for deduplication: primitive, positive leading coefficient.
UP up_canonical(const UP& p);
bool up_less(const UP& a, const UP& b);  // total order on canonical coeff lists

// 1 + max |a_i / a_n|: every real root lies in (-bound, bound).
Rat up_root_bound(const UP& p);

// Exact interval evaluation by Horner over rational interval arithmetic.
RatIv up_eval_iv(const UP& p, const RatIv& x);

int up_sturm_count_rat(const UP& p, const Rat& a, const Rat& b);  // roots in (a, b]

std::string up_to_string(const UP& p, const std::string& var);

}  // namespace cutcheck
