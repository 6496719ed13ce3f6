#include "cutcheck/semialg.hpp"

#include <algorithm>

#include "cutcheck/expr.hpp"
#include "cutcheck/reim.hpp"

namespace cutcheck {

const char* rel_symbol(Rel r) {
    switch (r) {
        case Rel::Eq: return "=";
        case Rel::Ne: return "!=";
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Gt: return ">";
        case Rel::Ge: return ">=";
    }
    return "?";
}

Rel rel_flip(Rel r) {
    switch (r) {
        case Rel::Lt: return Rel::Gt;
        case Rel::Le: return Rel::Ge;
        case Rel::Gt: return Rel::Lt;
        case Rel::Ge: return Rel::Le;
        default: return r;
    }
}

bool rel_holds(Rel r, int sgn) {
    switch (r) {
        case Rel::Eq: return sgn == 0;
        case Rel::Ne: return sgn != 0;
        case Rel::Lt: return sgn < 0;
        case Rel::Le: return sgn <= 0;
        case Rel::Gt: return sgn > 0;
        case Rel::Ge: return sgn >= 0;
    }
    return false;
}

bool clause_add(Clause& c, const BPoly& poly, Rel rel) {
    if (poly.is_const()) {
        int s = poly.is_zero() ? 0 : sign(poly.coeff_y(0).coeff(0));
        return rel_holds(rel, s);
    }
    Rel r = rel;
    if (sign(poly.lc_y().lc()) < 0) r = rel_flip(r);
    Condition cond{bp_canonical(poly), r};
    for (const auto& ex : c.conds)
        if (ex.rel == cond.rel && ex.poly == cond.poly) return true;
    c.conds.push_back(std::move(cond));
    return true;
}

void sas_add_clause(SemiAlgebraicSet& s, Clause c) {
    if (c.conds.empty()) return;
    for (const auto& ex : s.clauses) {
        if (ex.conds.size() != c.conds.size()) continue;
        bool same = true;
        for (size_t i = 0; i < c.conds.size() && same; ++i)
            same = ex.conds[i].rel == c.conds[i].rel && ex.conds[i].poly == c.conds[i].poly;
        if (same) return;
    }
    s.clauses.push_back(std::move(c));
}

bool clause_holds_at(const Clause& c, const Rat& x, const Rat& y) {
    for (const auto& cond : c.conds)
        if (!rel_holds(cond.rel, sign(cond.poly.eval(x, y)))) return false;
    return true;
}

bool sas_contains(const SemiAlgebraicSet& s, const Rat& x, const Rat& y) {
    for (const auto& c : s.clauses)
        if (clause_holds_at(c, x, y)) return true;
    return false;
}

bool sas_is_empty_syntactically(const SemiAlgebraicSet& s) { return s.clauses.empty(); }

std::string condition_to_string(const Condition& c) {
    return bp_to_string(c.poly) + " " + rel_symbol(c.rel) + " 0";
}

std::string clause_to_string(const Clause& c) {
    std::string out;
    for (size_t i = 0; i < c.conds.size(); ++i) {
        if (i) out += " ∧ ";
        out += condition_to_string(c.conds[i]);
    }
    return out;
}

std::string sas_to_string(const SemiAlgebraicSet& s) {
    if (s.clauses.empty()) return "(empty)";
    std::string out;
    for (size_t i = 0; i < s.clauses.size(); ++i) {
        if (i) out += "\n∨ ";
        out += clause_to_string(s.clauses[i]);
    }
    return out;
}

std::vector<BPoly> collect_condition_polys(const std::vector<SemiAlgebraicSet>& sets) {
    std::vector<BPoly> out;
    for (const auto& s : sets)
        for (const auto& c : s.clauses)
            for (const auto& cond : c.conds) {
                bool seen = false;
                for (const auto& p : out)
                    if (p == cond.poly) {
                        seen = true;
                        break;
                    }
                if (!seen) out.push_back(cond.poly);
            }
    std::sort(out.begin(), out.end(), bp_less);
    return out;
}

Clause parse_region_clause(const std::string& text) {
    Clause out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t amp = text.find("&&", start);
        std::string part = text.substr(start, amp == std::string::npos ? amp : amp - start);
        size_t op_pos = std::string::npos;
        size_t op_len = 0;
        Rel rel = Rel::Eq;
        for (size_t i = 0; i + 1 <= part.size(); ++i) {
            char a = part[i];
            char b = i + 1 < part.size() ? part[i + 1] : '\0';
            if (a == '<' || a == '>' || a == '=' || a == '!') {
                // Don't confuse != with ! alone; require a comparator shape.
                if (a == '!' && b != '=') continue;
                op_pos = i;
                op_len = (b == '=') ? 2 : 1;
                if (a == '<') rel = op_len == 2 ? Rel::Le : Rel::Lt;
                else if (a == '>') rel = op_len == 2 ? Rel::Ge : Rel::Gt;
                else if (a == '!') rel = Rel::Ne;
                else rel = Rel::Eq;
                break;
            }
        }
        if (op_pos == std::string::npos)
            throw ParseError("region comparison needs <, <=, >, >=, =, or !=", start);
        std::string lhs = part.substr(0, op_pos);
        std::string rhs = part.substr(op_pos + op_len);
        ExprPtr diff;
        try {
            diff = ex_sub(parse(lhs, Mode::Real), parse(rhs, Mode::Real));
        } catch (const ParseError& pe) {
            throw ParseError(std::string("in region: ") + pe.what(), start + pe.position());
        }
        CRF f = reim_split(diff);
        if (!f.im.is_zero()) throw ParseError("region sides must be real", start);
        if (!f.den.is_const()) throw ParseError("region sides must be polynomial", start);
        if (!clause_add(out, f.re, rel)) {
            // Identically false region: represent with an unsatisfiable
            // condition so emptiness is visible rather than silent.
            Clause impossible;
            clause_add(impossible, BPoly::var_x() * BPoly::var_x() + BPoly::constant(Rat(1)),
                       Rel::Lt);
            return impossible;
        }
        if (amp == std::string::npos) break;
        start = amp + 2;
    }
    return out;
}

}  // namespace cutcheck
