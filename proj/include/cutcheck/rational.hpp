#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>

namespace cutcheck {

// Exact rational arithmetic. mpq_class keeps values canonical (gcd 1,
// positive denominator), which the rest of the code relies on.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

Rat rat_from_decimal(const std::string& text);  // "1.25" -> 5/4, exact
std::string rat_to_string(const Rat& q);
double rat_to_double(const Rat& q);

Rat rat_pow(const Rat& base, unsigned e);
Rat rat_abs(const Rat& q);

// Largest integer <= q and smallest integer >= q.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// The rational with smallest denominator (then smallest numerator) strictly
// inside (lo, hi), found by Stern-Brocot descent. Requires lo < hi.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// Closed interval with exact rational endpoints. Exact: no rounding anywhere.
struct RatIv {
    Rat lo, hi;

    RatIv() : lo(0), hi(0) {}
    RatIv(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit RatIv(const Rat& point) : lo(point), hi(point) {}

    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    // -1, +1 when the interval has definite sign, 0 when it straddles or touches.
    int definite_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

RatIv riv_add(const RatIv& a, const RatIv& b);
RatIv riv_sub(const RatIv& a, const RatIv& b);
RatIv riv_mul(const RatIv& a, const RatIv& b);
RatIv riv_neg(const RatIv& a);
RatIv riv_scale(const RatIv& a, const Rat& c);

}  // namespace cutcheck
