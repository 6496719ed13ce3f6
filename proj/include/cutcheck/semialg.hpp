#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutcheck/bpoly.hpp"

namespace cutcheck {

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

const char* rel_symbol(Rel r);
Rel rel_flip(Rel r);  // relation for -p when p REL 0
bool rel_holds(Rel r, int sgn);

// poly REL 0 with poly canonical (integer primitive, positive lead).
struct Condition {
    BPoly poly;
    Rel rel;
};

// Conjunction of conditions. over_approx marks closure clauses that may
// strictly contain the locus they stand in for (membership tests skip them;
// decompositions still split along them, which is the sound direction).
struct Clause {
    std::vector<Condition> conds;
    bool over_approx = false;
};

// Union of clauses. exact=false marks sets whose inequality side could only
// be attached by numeric sampling (or not at all); notes record why.
struct SemiAlgebraicSet {
    std::vector<Clause> clauses;
    std::string provenance;
    bool exact = true;
    std::vector<std::string> notes;
};

// Append "poly rel 0" to the clause, canonicalizing the polynomial (flipping
// the relation if canonicalization negates). Constant polynomials are
// resolved immediately: returns false if the condition is identically false
// (clause impossible), true otherwise (identically-true conditions vanish).
bool clause_add(Clause& c, const BPoly& poly, Rel rel);

// Add a clause, dropping structural duplicates and impossible clauses.
void sas_add_clause(SemiAlgebraicSet& s, Clause c);

bool clause_holds_at(const Clause& c, const Rat& x, const Rat& y);
bool sas_contains(const SemiAlgebraicSet& s, const Rat& x, const Rat& y);
bool sas_is_empty_syntactically(const SemiAlgebraicSet& s);

std::string condition_to_string(const Condition& c);
std::string clause_to_string(const Clause& c);
std::string sas_to_string(const SemiAlgebraicSet& s);

// All distinct condition polynomials of the given sets, canonical, ordered.
std::vector<BPoly> collect_condition_polys(const std::vector<SemiAlgebraicSet>& sets);

// Conjunction "p1 rel1 0 && p2 rel2 0 && ..." over x,y with polynomial sides,
// e.g. "x^2+y^2>1 && y>0". Exposed for region handling; throws ParseError.
Clause parse_region_clause(const std::string& text);

}  // namespace cutcheck
