#pragma once

#include "cutcheck/expr.hpp"
#include "cutcheck/semialg.hpp"

namespace cutcheck {

// Defining cut of a function in its own w = u + iv plane, as printable
// conditions ("v = 0 and u < 0" for log).
std::string defining_cut(NodeKind kind);

// Cut locus of kind(arg) for a rational argument: the defining cut pulled
// back through Re/Im of the argument, denominators cleared, pole locus
// excluded by explicit != 0 conditions. Always exact.
SemiAlgebraicSet cuts_rational_arg(NodeKind kind, const ExprPtr& arg);

// Cut locus when the argument involves square roots of rational expressions.
// One radical in a product/pure shape is handled exactly (including the
// empty-cut detection for sqrt inside sqrt); two radicals go through
// auxiliary-variable elimination with numerically attached evidence; deeper
// nesting or more radicals reports a budget note with a numeric-evidence set.
SemiAlgebraicSet cuts_radical_arg(NodeKind kind, const ExprPtr& arg);

// Zero locus of an expression (denominator of some Div node), used to track
// pole loci. Exact for rational and single-function shapes; transcendental
// mixtures degrade to a numeric-evidence marker set.
SemiAlgebraicSet zero_locus(const ExprPtr& e);

// Union of per-occurrence cut sets plus pole loci of all Div nodes.
std::vector<SemiAlgebraicSet> expression_cuts(const ExprPtr& e);

// Real-mode discontinuity sources: poles of arctan arguments, sqrt domain
// boundaries and excluded regions, and Div pole loci.
SemiAlgebraicSet real_discontinuity_locus(const ExprPtr& e);

}  // namespace cutcheck
