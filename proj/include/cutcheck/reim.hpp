#pragma once

#include <stdexcept>

#include "cutcheck/bpoly.hpp"
#include "cutcheck/expr.hpp"

namespace cutcheck {

class NonRationalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class ZeroDivisorError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Real/imaginary split of a rational expression: value = (re + i*im)/den.
// The denominator is shared and kept in positive form: it is built purely
// from products of sums of squares (and positive constants), so den > 0
// everywhere except its zero set (the pole locus). Inequalities on re/den
// and im/den therefore clear without a denominator-sign case split, and
// without introducing spurious denominator factors into cut polynomials.
// No gcd reduction is performed, only positive rational rescaling, which
// preserves the positivity invariant.
struct CRF {
    BPoly re, im, den;
};

CRF crf_const(const Rat& re, const Rat& im = Rat(0));
CRF crf_var(const std::string& name);  // z -> x + iy; x, y -> themselves
CRF crf_neg(const CRF& a);
CRF crf_add(const CRF& a, const CRF& b);
CRF crf_sub(const CRF& a, const CRF& b);
CRF crf_mul(const CRF& a, const CRF& b);
CRF crf_div(const CRF& a, const CRF& b);  // throws ZeroDivisorError on b == 0
CRF crf_pow(const CRF& a, int e);

bool crf_is_zero(const CRF& a);

// Split a rational expression (Const/Var/Neg/Add/Sub/Mul/Div/Pow only).
// Throws NonRationalError on any other node kind.
CRF reim_split(const ExprPtr& e);

}  // namespace cutcheck
