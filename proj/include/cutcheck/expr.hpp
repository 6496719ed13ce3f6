#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcheck/rational.hpp"

namespace cutcheck {

enum class NodeKind { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Sqrt, Log, Exp, Arccosh, Arctan };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node. Const holds a Gaussian rational re + im*I; Pow
// holds a non-negative integer exponent (negative exponents are normalized to
// a reciprocal at construction).
struct Expr {
    NodeKind kind;
    Rat cre, cim;      // Const only
    std::string var;   // Var only
    int exponent = 0;  // Pow only
    std::vector<ExprPtr> kids;
};

ExprPtr ex_const(Rat re, Rat im = Rat(0));
ExprPtr ex_int(long v);
ExprPtr ex_i();
ExprPtr ex_var(std::string name);
ExprPtr ex_neg(ExprPtr a);
ExprPtr ex_add(ExprPtr a, ExprPtr b);
ExprPtr ex_sub(ExprPtr a, ExprPtr b);
ExprPtr ex_mul(ExprPtr a, ExprPtr b);
ExprPtr ex_div(ExprPtr a, ExprPtr b);
ExprPtr ex_pow(ExprPtr a, int e);
ExprPtr ex_sqrt(ExprPtr a);
ExprPtr ex_log(ExprPtr a);
ExprPtr ex_exp(ExprPtr a);
ExprPtr ex_arccosh(ExprPtr a);
ExprPtr ex_arctan(ExprPtr a);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
std::string expr_to_string(const ExprPtr& e);

// Replace every occurrence of the named variable.
ExprPtr substitute(const ExprPtr& e, const std::string& var, const ExprPtr& replacement);

// True when the tree uses only rational operations (no sqrt/log/exp/arccosh/
// arctan), so an exact Re/Im split applies.
bool is_rational_expr(const ExprPtr& e);

// Kinds with a branch cut. Exp is entire and deliberately absent.
bool has_cut(NodeKind k);

// Distinct (kind, argument) pairs for cut-bearing nodes, in first-encounter
// post-order. Deduplication is structural.
std::vector<std::pair<NodeKind, ExprPtr>> non_analytic_nodes(const ExprPtr& e);

// Denominators of Div nodes, deduplicated structurally, post-order.
std::vector<ExprPtr> divisor_nodes(const ExprPtr& e);

// Number of Sqrt nodes with distinct radicands (nesting counts each level).
int radical_count(const ExprPtr& e);

// Set of variable names appearing in the tree.
std::vector<std::string> variables_of(const ExprPtr& e);

enum class Mode { Complex, Real };

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string msg, size_t pos) : std::runtime_error(std::move(msg)), pos_(pos) {}
    size_t position() const { return pos_; }

  private:
    size_t pos_;
};

// Parse per the published grammar. Complex mode admits the variable z; real
// mode admits x and y. Idents are case-insensitive; I is the imaginary unit;
// decimals are exact.
ExprPtr parse(const std::string& text, Mode mode);

std::string node_kind_name(NodeKind k);

}  // namespace cutcheck
