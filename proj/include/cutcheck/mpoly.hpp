#pragma once

#include <map>
#include <vector>

#include "cutcheck/bpoly.hpp"

namespace cutcheck {

// Sparse multivariate polynomial over Q with fixed arity. Terms are kept in
// a map ordered lexicographically by exponent vector; the last entry is the
// lex-leading term, which drives exact division (used by fraction-free
// determinant elimination). Only the auxiliary-variable elimination path
// needs more than two variables, so this stays deliberately minimal.
class MPoly {
  public:
    using Exps = std::vector<int>;

    explicit MPoly(int nvars = 0) : n_(nvars) {}
    static MPoly constant(int nvars, const Rat& c);
    static MPoly var(int nvars, int idx);
    static MPoly from_bpoly(const BPoly& p, int nvars, int ix, int iy);

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_const() const;
    Rat const_value() const;
    int degree_in(int var) const;
    int total_degree() const;
    size_t term_count() const { return t_.size(); }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& k) const;
    bool operator==(const MPoly& o) const { return n_ == o.n_ && t_ == o.t_; }

    // Coefficient of var^k, as a polynomial with var's exponent zeroed.
    MPoly coeff_of(int var, int k) const;

    Rat eval(const std::vector<Rat>& point) const;

    // Requires every variable other than ix, iy to be absent.
    BPoly to_bpoly(int ix, int iy) const;

    const std::map<Exps, Rat>& terms() const { return t_; }
    void add_term(const Exps& e, const Rat& c);

  private:
    int n_;
    std::map<Exps, Rat> t_;
};

// Exact quotient under lex term division; throws if not divisible.
MPoly mp_divide_exact(const MPoly& a, const MPoly& b);

// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
MPoly mp_det_bareiss(std::vector<std::vector<MPoly>> m);

// True resultant eliminating `var`, as the Sylvester determinant. Complete
// projection: every common zero of a and b maps into the zero set.
MPoly mp_resultant(const MPoly& a, const MPoly& b, int var);

std::string mp_to_string(const MPoly& p, const std::vector<std::string>& names);

}  // namespace cutcheck
