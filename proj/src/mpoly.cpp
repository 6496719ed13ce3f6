#include "cutcheck/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cutcheck {

void MPoly::add_term(const Exps& e, const Rat& c) {
    assert((int)e.size() == n_);
    if (sign(c) == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (sign(it->second) == 0) t_.erase(it);
    }
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

MPoly MPoly::var(int nvars, int idx) {
    MPoly p(nvars);
    Exps e(nvars, 0);
    e[idx] = 1;
    p.add_term(e, Rat(1));
    return p;
}

MPoly MPoly::from_bpoly(const BPoly& p, int nvars, int ix, int iy) {
    MPoly out(nvars);
    for (int i = 0; i <= p.deg_y(); ++i) {
        UP c = p.coeff_y(i);
        for (int j = 0; j <= c.degree(); ++j) {
            if (sign(c.coeff(j)) == 0) continue;
            Exps e(nvars, 0);
            e[ix] = j;
            e[iy] = i;
            out.add_term(e, c.coeff(j));
        }
    }
    return out;
}

bool MPoly::is_const() const {
    if (t_.empty()) return true;
    if (t_.size() != 1) return false;
    const auto& e = t_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MPoly::const_value() const {
    assert(is_const());
    return t_.empty() ? Rat(0) : t_.begin()->second;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[var]);
    return t_.empty() ? -1 : d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

MPoly MPoly::operator-() const {
    MPoly r(n_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert(n_ == o.n_);
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    assert(n_ == o.n_);
    MPoly r(n_);
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : o.t_) {
            Exps e(n_);
            for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::scaled(const Rat& k) const {
    if (sign(k) == 0) return MPoly(n_);
    MPoly r(n_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * k);
    return r;
}

MPoly MPoly::coeff_of(int var, int k) const {
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
        if (e[var] != k) continue;
        Exps e2 = e;
        e2[var] = 0;
        r.add_term(e2, c);
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    assert((int)point.size() == n_);
    Rat acc(0);
    for (const auto& [e, c] : t_) {
        Rat term = c;
        for (int i = 0; i < n_; ++i)
            if (e[i] > 0) term *= rat_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

BPoly MPoly::to_bpoly(int ix, int iy) const {
    std::vector<UP> rows;
    for (const auto& [e, c] : t_) {
        for (int i = 0; i < n_; ++i)
            if (i != ix && i != iy && e[i] != 0)
                throw std::logic_error("to_bpoly: residual auxiliary variable");
        int dy = e[iy], dx = e[ix];
        if ((int)rows.size() <= dy) rows.resize(dy + 1);
        rows[dy] = rows[dy] + UP::monomial(c, dx);
    }
    return BPoly::from_coeffs(std::move(rows));
}

MPoly mp_divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::logic_error("mp_divide_exact: zero divisor");
    MPoly r = a, q(a.nvars());
    const auto& bt = b.terms();
    auto blead = bt.rbegin();  // lex-leading term
    while (!r.is_zero()) {
        auto rlead = r.terms().rbegin();
        MPoly::Exps e(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            e[i] = rlead->first[i] - blead->first[i];
            if (e[i] < 0) throw std::logic_error("mp_divide_exact: not divisible");
        }
        MPoly term(a.nvars());
        term.add_term(e, rlead->second / blead->second);
        q = q + term;
        r = r - term * b;
    }
    return q;
}

MPoly mp_det_bareiss(std::vector<std::vector<MPoly>> m) {
    size_t n = m.size();
    if (n == 0) return MPoly::constant(0, Rat(1));
    int nv = m[0][0].nvars();
    MPoly prev = MPoly::constant(nv, Rat(1));
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MPoly(nv);
            std::swap(m[k], m[p]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = mp_divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sgn < 0 ? -det : det;
}

MPoly mp_resultant(const MPoly& a, const MPoly& b, int var) {
    int da = a.degree_in(var), db = b.degree_in(var);
    int nv = a.nvars();
    if (a.is_zero() || b.is_zero()) return MPoly(nv);
    if (da <= 0 && db <= 0) return MPoly::constant(nv, Rat(1));
    if (da <= 0) {
        // res(const-in-var a, b) = a^db
        MPoly r = MPoly::constant(nv, Rat(1));
        for (int i = 0; i < db; ++i) r = r * a;
        return r;
    }
    if (db <= 0) {
        MPoly r = MPoly::constant(nv, Rat(1));
        for (int i = 0; i < da; ++i) r = r * b;
        return r;
    }
    size_t n = (size_t)(da + db);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(nv)));
    for (int row = 0; row < db; ++row)
        for (int k = 0; k <= da; ++k) m[row][row + k] = a.coeff_of(var, da - k);
    for (int row = 0; row < da; ++row)
        for (int k = 0; k <= db; ++k) m[db + row][row + k] = b.coeff_of(var, db - k);
    return mp_det_bareiss(std::move(m));
}

std::string mp_to_string(const MPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rat ac = rat_abs(c);
        std::string coeff = rat_to_string(ac);
        std::string piece;
        if (mono.empty()) piece = coeff;
        else if (ac == 1) piece = mono;
        else piece = coeff + "*" + mono;
        if (out.empty()) out = (sign(c) < 0 ? "-" : "") + piece;
        else out += (sign(c) < 0 ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace cutcheck
