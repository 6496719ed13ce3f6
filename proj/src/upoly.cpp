#include "cutcheck/upoly.hpp"

#include <sstream>

namespace cutcheck {

PrimForm up_primitive(const UP& p) {
    PrimForm out;
    if (p.is_zero()) {
        out.factor = 0;
        return out;
    }
    // Common denominator, then integer content.
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Int(c.get_den()));
    std::vector<Int> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rat scaled = c * Rat(den);
        assert(scaled.get_den() == 1);
        ints.push_back(Int(scaled.get_num()));
    }
    Int content = 0;
    for (const auto& z : ints) content = gcd(content, z);
    if (sign(ints.back()) < 0) content = -content;
    for (auto& z : ints) z /= content;
    out.factor = Rat(content, den);
    out.factor.canonicalize();
    out.prim = std::move(ints);
    return out;
}

UP up_from_ints(const std::vector<Int>& c) {
    std::vector<Rat> r;
    r.reserve(c.size());
    for (const auto& z : c) r.emplace_back(z);
    return UP::from_coeffs(std::move(r));
}

UP up_canonical(const UP& p) {
    if (p.is_zero()) return p;
    return up_from_ints(up_primitive(p).prim);
}

bool up_less(const UP& a, const UP& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        Rat ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return ca < cb;
    }
    return false;
}

Rat up_root_bound(const UP& p) {
    assert(!p.is_zero());
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, rat_abs(p.coeff(i) / p.lc()));
    return m + 1;
}

RatIv up_eval_iv(const UP& p, const RatIv& x) {
    RatIv acc(Rat(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = riv_mul(acc, x);
        acc = riv_add(acc, RatIv(p.coeff(i)));
    }
    return acc;
}

int up_sturm_count_rat(const UP& p, const Rat& a, const Rat& b) {
    auto chain = sturm_chain(p);
    return sturm_count(chain, a, b, [](const Rat& v) { return sign(v); });
}

std::string up_to_string(const UP& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(i);
        if (sign(c) == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rat a = rat_abs(c);
        bool unit = (a == 1);
        if (i == 0 || !unit) os << rat_to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace cutcheck
