#pragma once

#include <string>
#include <vector>

#include "cutcheck/upoly.hpp"

namespace cutcheck {

// Bivariate polynomial over Q, dense in y: c_[i] in Q[x] multiplies y^i.
// y is the "projection" variable throughout the decomposition code; x is the
// base variable.
class BPoly {
  public:
    BPoly() = default;
    static BPoly from_coeffs(std::vector<UP> coeffs);
    static BPoly constant(const Rat& c);
    static BPoly var_x();
    static BPoly var_y();
    static BPoly from_x_poly(const UP& p);  // p(x) as a bivariate
    static BPoly from_y_poly(const UP& p);  // p(y) as a bivariate

    int deg_y() const { return (int)c_.size() - 1; }  // -1 for zero
    int deg_x() const;
    bool is_zero() const { return c_.empty(); }
    bool is_const() const { return c_.empty() || (c_.size() == 1 && c_[0].degree() <= 0); }
    bool depends_on_y() const { return deg_y() >= 1; }
    UP coeff_y(int i) const;
    const UP& lc_y() const;
    const std::vector<UP>& coeffs() const { return c_; }

    bool operator==(const BPoly& o) const { return c_ == o.c_; }

    BPoly operator-() const;
    BPoly operator+(const BPoly& o) const;
    BPoly operator-(const BPoly& o) const;
    BPoly operator*(const BPoly& o) const;
    BPoly scaled(const Rat& k) const;
    BPoly scaled_up(const UP& p) const;  // multiply every coefficient by p(x)
    BPoly shifted_y(int k) const;        // multiply by y^k

    BPoly derivative_y() const;
    BPoly swap_xy() const;

    UP eval_y(const Rat& v) const;  // P(x, v) as a polynomial in x
    UP eval_x(const Rat& v) const;  // P(v, y) as a polynomial in y
    Rat eval(const Rat& x, const Rat& y) const;
    RatIv eval_iv(const RatIv& x, const RatIv& y) const;

  private:
    void trim();
    std::vector<UP> c_;
};

BPoly bp_pow(const BPoly& p, int e);

// Content/primitive split with the content taken in Q[x]: P = content * pp
// where content is the monic gcd of the y-coefficients and pp has coprime
// y-coefficients. For zero input both parts are zero.
UP bp_content(const BPoly& p);
BPoly bp_primitive(const BPoly& p);

// Canonical form for deduplication: integer coefficients with overall content
// 1 and positive leading coefficient (of the leading y-coefficient).
BPoly bp_canonical(const BPoly& p);
bool bp_less(const BPoly& a, const BPoly& b);

// gcd in Q[x,y] via the primitive pseudo-remainder sequence, canonicalized.
BPoly bp_gcd(const BPoly& a, const BPoly& b);

// Exact quotient; asserts that b divides a.
BPoly bp_divide_exact(const BPoly& a, const BPoly& b);

// pp / gcd(pp, d/dy pp): same zero set in y over each x, but squarefree as a
// polynomial in y. Content is dropped deliberately; callers route x-only
// factors separately.
BPoly bp_squarefree_y(const BPoly& p);

// Squarefree part of the whole polynomial: squarefree part of the x-content
// times the y-squarefree part of the primitive part, canonicalized. Same zero
// set in R^2, multiplicities removed.
BPoly bp_squarefree_total(const BPoly& p);

// Resultant of univariate polynomials over Q (Euclidean recursion).
Rat up_resultant(const UP& a, const UP& b);

// res_y(A, B) as an element of Q[x], by evaluation at interpolation points
// that preserve both y-degrees, then Lagrange reconstruction.
UP bp_resultant_y(const BPoly& a, const BPoly& b);
UP bp_resultant_x(const BPoly& a, const BPoly& b);  // eliminates x, result in y

// disc_y(A) = (-1)^(m(m-1)/2) res_y(A, dA/dy) / lc_y(A), m = deg_y A >= 1.
UP bp_disc_y(const BPoly& a);

std::string bp_to_string(const BPoly& p, const std::string& xv = "x",
                         const std::string& yv = "y");

}  // namespace cutcheck
