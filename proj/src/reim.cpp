#include "cutcheck/reim.hpp"

namespace cutcheck {

namespace {

// Rescale by a positive rational so den is integer-primitive. The canonical
// form of a positive-form denominator keeps a positive leading coefficient,
// so the ratio is positive and positivity of den survives.
CRF normalized(BPoly re, BPoly im, BPoly den) {
    if (den.is_zero()) throw ZeroDivisorError("zero denominator expression");
    BPoly dc = bp_canonical(den);
    Rat r = den.lc_y().lc() / dc.lc_y().lc();
    if (!(r == 1)) {
        Rat inv = Rat(1) / r;
        re = re.scaled(inv);
        im = im.scaled(inv);
    }
    return CRF{std::move(re), std::move(im), std::move(dc)};
}

}  // namespace

CRF crf_const(const Rat& re, const Rat& im) {
    return CRF{BPoly::constant(re), BPoly::constant(im), BPoly::constant(Rat(1))};
}

CRF crf_var(const std::string& name) {
    if (name == "z") return CRF{BPoly::var_x(), BPoly::var_y(), BPoly::constant(Rat(1))};
    if (name == "x") return CRF{BPoly::var_x(), BPoly(), BPoly::constant(Rat(1))};
    if (name == "y") return CRF{BPoly::var_y(), BPoly(), BPoly::constant(Rat(1))};
    throw NonRationalError("unknown variable in split: " + name);
}

CRF crf_neg(const CRF& a) { return CRF{-a.re, -a.im, a.den}; }

CRF crf_add(const CRF& a, const CRF& b) {
    return normalized(a.re * b.den + b.re * a.den, a.im * b.den + b.im * a.den, a.den * b.den);
}

CRF crf_sub(const CRF& a, const CRF& b) { return crf_add(a, crf_neg(b)); }

CRF crf_mul(const CRF& a, const CRF& b) {
    return normalized(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.den * b.den);
}

CRF crf_div(const CRF& a, const CRF& b) {
    if (crf_is_zero(b)) throw ZeroDivisorError("zero denominator expression");
    // (a/ad) / (b/bd) = a*bd*conj(b) / (ad*|b|^2): |b|^2 is a sum of squares,
    // so the denominator stays in positive form.
    BPoly norm = b.re * b.re + b.im * b.im;
    return normalized((a.re * b.re + a.im * b.im) * b.den, (a.im * b.re - a.re * b.im) * b.den,
                      a.den * norm);
}

CRF crf_pow(const CRF& a, int e) {
    CRF r = crf_const(Rat(1));
    for (int i = 0; i < e; ++i) r = crf_mul(r, a);
    return r;
}

bool crf_is_zero(const CRF& a) { return a.re.is_zero() && a.im.is_zero(); }

CRF reim_split(const ExprPtr& e) {
    switch (e->kind) {
        case NodeKind::Const:
            return crf_const(e->cre, e->cim);
        case NodeKind::Var:
            return crf_var(e->var);
        case NodeKind::Neg:
            return crf_neg(reim_split(e->kids[0]));
        case NodeKind::Add:
            return crf_add(reim_split(e->kids[0]), reim_split(e->kids[1]));
        case NodeKind::Sub:
            return crf_sub(reim_split(e->kids[0]), reim_split(e->kids[1]));
        case NodeKind::Mul:
            return crf_mul(reim_split(e->kids[0]), reim_split(e->kids[1]));
        case NodeKind::Div:
            return crf_div(reim_split(e->kids[0]), reim_split(e->kids[1]));
        case NodeKind::Pow:
            return crf_pow(reim_split(e->kids[0]), e->exponent);
        default:
            throw NonRationalError("non-rational node in split: " + node_kind_name(e->kind));
    }
}

}  // namespace cutcheck
