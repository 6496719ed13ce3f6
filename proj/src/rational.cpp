#include "cutcheck/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcheck {

Rat rat_from_decimal(const std::string& text) {
    // Accepts [digits][.digits], at least one digit overall. Sign handled by
    // the expression grammar, not here.
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        if (text.empty()) throw std::invalid_argument("empty numeric literal");
        return Rat(Int(text, 10));
    }
    std::string ipart = text.substr(0, dot);
    std::string fpart = text.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) throw std::invalid_argument("bad numeric literal: " + text);
    Int num = ipart.empty() ? Int(0) : Int(ipart, 10);
    Int den = 1;
    for (char c : fpart) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad numeric literal: " + text);
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

double rat_to_double(const Rat& q) { return q.get_d(); }

Rat rat_pow(const Rat& base, unsigned e) {
    Rat acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rat rat_abs(const Rat& q) { return abs(q); }

Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (sign(lo) < 0 && sign(hi) > 0) return Rat(0);
    if (sign(hi) <= 0) return -simplest_rational_between(-hi, -lo);
    // 0 <= lo < hi: continued-fraction descent. An integer strictly inside
    // wins; otherwise strip the shared integer part and recurse on the
    // reciprocal of the fractional interval.
    Int q = rat_floor(lo);
    if (Rat(q + 1) < hi) return Rat(q + 1);
    if (lo == Rat(q)) {
        // (q, hi) with hi <= q+1: simplest fractional part is 1/n for the
        // smallest n with 1/n < hi - q.
        Int n = rat_floor(Rat(1) / (hi - Rat(q))) + 1;
        return Rat(q) + Rat(1, n);
    }
    return Rat(q) + Rat(1) / simplest_rational_between(Rat(1) / (hi - Rat(q)), Rat(1) / (lo - Rat(q)));
}

RatIv riv_add(const RatIv& a, const RatIv& b) { return RatIv(a.lo + b.lo, a.hi + b.hi); }
RatIv riv_sub(const RatIv& a, const RatIv& b) { return RatIv(a.lo - b.hi, a.hi - b.lo); }

RatIv riv_mul(const RatIv& a, const RatIv& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return RatIv(lo, hi);
}

RatIv riv_neg(const RatIv& a) { return RatIv(-a.hi, -a.lo); }

RatIv riv_scale(const RatIv& a, const Rat& c) {
    if (sign(c) >= 0) return RatIv(a.lo * c, a.hi * c);
    return RatIv(a.hi * c, a.lo * c);
}

}  // namespace cutcheck
