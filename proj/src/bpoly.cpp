#include "cutcheck/bpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cutcheck {

void BPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly BPoly::from_coeffs(std::vector<UP> coeffs) {
    BPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

BPoly BPoly::constant(const Rat& c) { return from_coeffs({UP(c)}); }
BPoly BPoly::var_x() { return from_coeffs({UP::from_coeffs({Rat(0), Rat(1)})}); }
BPoly BPoly::var_y() { return from_coeffs({UP(), UP(Rat(1))}); }
BPoly BPoly::from_x_poly(const UP& p) { return from_coeffs({p}); }

BPoly BPoly::from_y_poly(const UP& p) {
    std::vector<UP> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(UP(q));
    return from_coeffs(std::move(c));
}

int BPoly::deg_x() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

UP BPoly::coeff_y(int i) const {
    if (i < 0 || i >= (int)c_.size()) return UP();
    return c_[i];
}

const UP& BPoly::lc_y() const {
    assert(!c_.empty());
    return c_.back();
}

BPoly BPoly::operator-() const {
    BPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BPoly BPoly::operator+(const BPoly& o) const {
    std::vector<UP> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return from_coeffs(std::move(r));
}

BPoly BPoly::operator-(const BPoly& o) const { return *this + (-o); }

BPoly BPoly::operator*(const BPoly& o) const {
    if (is_zero() || o.is_zero()) return BPoly();
    std::vector<UP> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return from_coeffs(std::move(r));
}

BPoly BPoly::scaled(const Rat& k) const {
    if (sign(k) == 0) return BPoly();
    BPoly r = *this;
    for (auto& c : r.c_) c = c.scaled(k);
    return r;
}

BPoly BPoly::scaled_up(const UP& p) const {
    if (p.is_zero()) return BPoly();
    BPoly r = *this;
    for (auto& c : r.c_) c = c * p;
    return r;
}

BPoly BPoly::shifted_y(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<UP> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return from_coeffs(std::move(r));
}

BPoly BPoly::derivative_y() const {
    if (c_.size() <= 1) return BPoly();
    std::vector<UP> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i].scaled(Rat((long)i));
    return from_coeffs(std::move(r));
}

BPoly BPoly::swap_xy() const {
    std::vector<UP> out(deg_x() + 1 > 0 ? deg_x() + 1 : 0);
    std::vector<std::vector<Rat>> cols(out.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        const auto& row = c_[i].coeffs();
        for (size_t j = 0; j < row.size(); ++j) {
            if (cols[j].size() <= i) cols[j].resize(i + 1, Rat(0));
            cols[j][i] = row[j];
        }
    }
    for (size_t j = 0; j < cols.size(); ++j) out[j] = UP::from_coeffs(std::move(cols[j]));
    return from_coeffs(std::move(out));
}

UP BPoly::eval_y(const Rat& v) const {
    UP acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc.scaled(v) + *it;
    return acc;
}

UP BPoly::eval_x(const Rat& v) const {
    std::vector<Rat> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c.eval(v));
    return UP::from_coeffs(std::move(r));
}

Rat BPoly::eval(const Rat& x, const Rat& y) const { return eval_y(y).eval(x); }

RatIv BPoly::eval_iv(const RatIv& x, const RatIv& y) const {
    RatIv acc{Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = riv_add(riv_mul(acc, y), up_eval_iv(*it, x));
    return acc;
}

BPoly bp_pow(const BPoly& p, int e) {
    assert(e >= 0);
    BPoly r = BPoly::constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

UP bp_content(const BPoly& p) {
    UP g;
    for (const auto& c : p.coeffs()) g = upoly_gcd(g, c);
    return g;
}

BPoly bp_primitive(const BPoly& p) {
    if (p.is_zero()) return p;
    UP ct = bp_content(p);
    std::vector<UP> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        auto [q, rem] = c.divrem(ct);
        assert(rem.is_zero());
        r.push_back(std::move(q));
    }
    return BPoly::from_coeffs(std::move(r));
}

BPoly bp_canonical(const BPoly& p) {
    if (p.is_zero()) return p;
    Int den = 1, num = 0;
    for (const auto& c : p.coeffs())
        for (const auto& q : c.coeffs()) {
            Int d = q.get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    for (const auto& c : p.coeffs())
        for (const auto& q : c.coeffs()) {
            Rat s = q * Rat(den);
            Int n = s.get_num();
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        }
    assert(num != 0);
    BPoly r = p.scaled(Rat(den) / Rat(num));
    if (sign(r.lc_y().lc()) < 0) r = -r;
    return r;
}

bool bp_less(const BPoly& a, const BPoly& b) {
    if (a.deg_y() != b.deg_y()) return a.deg_y() < b.deg_y();
    for (int i = a.deg_y(); i >= 0; --i) {
        UP ca = a.coeff_y(i), cb = b.coeff_y(i);
        if (!(ca == cb)) return up_less(ca, cb);
    }
    return false;
}

namespace {

// Pseudo-remainder in y: some power of lc_y(b) times (a mod b), all in Q[x,y].
// Only used inside the primitive PRS, where the extraneous factor washes out.
BPoly bp_prem(const BPoly& a, const BPoly& b) {
    assert(!b.is_zero());
    if (a.deg_y() < b.deg_y()) return a;
    if (b.deg_y() == 0) return BPoly();
    UP d = b.lc_y();
    BPoly r = a;
    while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
        int s = r.deg_y() - b.deg_y();
        r = r.scaled_up(d) - b.shifted_y(s).scaled_up(r.lc_y());
    }
    return r;
}

UP up_pow(const UP& p, int e) {
    UP r(Rat(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace

BPoly bp_gcd(const BPoly& a, const BPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : bp_canonical(b);
    if (b.is_zero()) return bp_canonical(a);
    UP cg = upoly_gcd(bp_content(a), bp_content(b));
    BPoly u = bp_primitive(a), v = bp_primitive(b);
    if (u.deg_y() < v.deg_y()) std::swap(u, v);
    while (!v.is_zero()) {
        BPoly r = bp_prem(u, v);
        u = std::move(v);
        v = r.is_zero() ? BPoly() : bp_primitive(r);
    }
    return bp_canonical(u.scaled_up(cg));
}

BPoly bp_divide_exact(const BPoly& a, const BPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return a;
    std::vector<UP> qc(a.deg_y() - b.deg_y() + 1);
    BPoly r = a;
    while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
        auto [q, rem] = r.lc_y().divrem(b.lc_y());
        if (!rem.is_zero()) throw std::logic_error("bp_divide_exact: leading coefficient not divisible");
        int s = r.deg_y() - b.deg_y();
        qc[s] = q;
        r = r - b.shifted_y(s).scaled_up(q);
    }
    if (!r.is_zero()) throw std::logic_error("bp_divide_exact: nonzero remainder");
    return BPoly::from_coeffs(std::move(qc));
}

BPoly bp_squarefree_y(const BPoly& p) {
    BPoly pp = bp_primitive(p);
    if (pp.deg_y() <= 1) return pp;
    BPoly g = bp_gcd(pp, pp.derivative_y());
    if (g.is_const()) return pp;
    return bp_divide_exact(pp, g);
}

BPoly bp_squarefree_total(const BPoly& p) {
    if (p.is_zero() || p.is_const()) return p;
    UP c = squarefree_part(bp_content(p));
    if (!p.depends_on_y()) return bp_canonical(BPoly::from_x_poly(c));
    BPoly sf = bp_squarefree_y(p);
    return bp_canonical(sf.scaled_up(c));
}

Rat up_resultant(const UP& a, const UP& b) {
    if (a.is_zero() || b.is_zero()) {
        const UP& other = a.is_zero() ? b : a;
        return other.degree() == 0 ? Rat(1) : Rat(0);
    }
    UP A = a, B = b;
    Rat res(1);
    if (A.degree() < B.degree()) {
        if ((A.degree() * B.degree()) % 2 != 0) res = -res;
        std::swap(A, B);
    }
    for (;;) {
        if (B.degree() == 0) return res * rat_pow(B.lc(), A.degree());
        UP R = A % B;
        if (R.is_zero()) return Rat(0);
        if ((A.degree() * B.degree()) % 2 != 0) res = -res;
        res *= rat_pow(B.lc(), A.degree() - R.degree());
        A = std::move(B);
        B = std::move(R);
    }
}

namespace {

UP lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    UP acc;
    for (size_t i = 0; i < pts.size(); ++i) {
        UP li(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            li = li * UP::from_coeffs({-pts[j].first, Rat(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + li.scaled(pts[i].second / denom);
    }
    return acc;
}

}  // namespace

UP bp_resultant_y(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        const BPoly& other = a.is_zero() ? b : a;
        return (!other.is_zero() && other.deg_y() == 0) ? UP(Rat(1)) : UP();
    }
    int m = a.deg_y(), n = b.deg_y();
    if (n == 0) return up_pow(b.coeff_y(0), m);
    if (m == 0) return up_pow(a.coeff_y(0), n);
    // Specialization commutes with the resultant at any x preserving both
    // y-degrees; the result has x-degree at most n*deg_x(a) + m*deg_x(b).
    int bound = n * std::max(a.deg_x(), 0) + m * std::max(b.deg_x(), 0);
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(bound + 1);
    long k = 0;
    while ((int)pts.size() < bound + 1) {
        Rat x((long)k);
        k = k <= 0 ? -k + 1 : -k;  // 0, 1, -1, 2, -2, ...
        if (sign(a.lc_y().eval(x)) == 0 || sign(b.lc_y().eval(x)) == 0) continue;
        pts.emplace_back(x, up_resultant(a.eval_x(x), b.eval_x(x)));
    }
    return lagrange_interpolate(pts);
}

UP bp_resultant_x(const BPoly& a, const BPoly& b) {
    return bp_resultant_y(a.swap_xy(), b.swap_xy());
}

UP bp_disc_y(const BPoly& a) {
    int m = a.deg_y();
    assert(m >= 1);
    if (m == 1) return UP(Rat(1));
    UP res = bp_resultant_y(a, a.derivative_y());
    auto [q, rem] = res.divrem(a.lc_y());
    assert(rem.is_zero());
    if ((m * (m - 1) / 2) % 2 != 0) q = -q;
    return q;
}

std::string bp_to_string(const BPoly& p, const std::string& xv, const std::string& yv) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg_y(); i >= 0; --i) {
        UP c = p.coeff_y(i);
        if (c.is_zero()) continue;
        std::string piece;
        if (i == 0) {
            piece = up_to_string(c, xv);
        } else {
            std::string pow = yv + (i > 1 ? "^" + std::to_string(i) : "");
            if (c.degree() == 0) {
                Rat k = c.coeff(0);
                if (k == 1) piece = pow;
                else if (k == -1) piece = "-" + pow;
                else piece = rat_to_string(k) + "*" + pow;
            } else {
                piece = "(" + up_to_string(c, xv) + ")*" + pow;
            }
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace cutcheck
