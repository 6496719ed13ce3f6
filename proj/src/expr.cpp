#include "cutcheck/expr.hpp"

#include <algorithm>

namespace cutcheck {

namespace {

ExprPtr make(NodeKind k, std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    return e;
}

}  // namespace

ExprPtr ex_const(Rat re, Rat im) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::Const;
    e->cre = std::move(re);
    e->cim = std::move(im);
    return e;
}

ExprPtr ex_int(long v) { return ex_const(Rat(v)); }
ExprPtr ex_i() { return ex_const(Rat(0), Rat(1)); }

ExprPtr ex_var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::Var;
    e->var = std::move(name);
    return e;
}

ExprPtr ex_neg(ExprPtr a) { return make(NodeKind::Neg, {std::move(a)}); }
ExprPtr ex_add(ExprPtr a, ExprPtr b) { return make(NodeKind::Add, {std::move(a), std::move(b)}); }
ExprPtr ex_sub(ExprPtr a, ExprPtr b) { return make(NodeKind::Sub, {std::move(a), std::move(b)}); }
ExprPtr ex_mul(ExprPtr a, ExprPtr b) { return make(NodeKind::Mul, {std::move(a), std::move(b)}); }
ExprPtr ex_div(ExprPtr a, ExprPtr b) { return make(NodeKind::Div, {std::move(a), std::move(b)}); }

ExprPtr ex_pow(ExprPtr a, int e) {
    if (e < 0) return ex_div(ex_int(1), ex_pow(std::move(a), -e));
    if (e == 0) return ex_int(1);
    if (e == 1) return a;
    auto n = std::make_shared<Expr>();
    n->kind = NodeKind::Pow;
    n->exponent = e;
    n->kids = {std::move(a)};
    return n;
}

ExprPtr ex_sqrt(ExprPtr a) { return make(NodeKind::Sqrt, {std::move(a)}); }
ExprPtr ex_log(ExprPtr a) { return make(NodeKind::Log, {std::move(a)}); }
ExprPtr ex_exp(ExprPtr a) { return make(NodeKind::Exp, {std::move(a)}); }
ExprPtr ex_arccosh(ExprPtr a) { return make(NodeKind::Arccosh, {std::move(a)}); }
ExprPtr ex_arctan(ExprPtr a) { return make(NodeKind::Arctan, {std::move(a)}); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::Const:
            return a->cre == b->cre && a->cim == b->cim;
        case NodeKind::Var:
            return a->var == b->var;
        case NodeKind::Pow:
            if (a->exponent != b->exponent) return false;
            break;
        default:
            break;
    }
    if (a->kids.size() != b->kids.size()) return false;
    for (size_t i = 0; i < a->kids.size(); ++i)
        if (!expr_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

namespace {

// Precedence levels for printing: 1 additive, 2 multiplicative, 4 atomic.
// Pow and unary minus have no level of their own; their operands are printed
// parenthesized unless atomic, which keeps printing faithful to the grammar
// (unary minus binds tighter than ^ there).
int print_prec(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Add:
        case NodeKind::Sub:
            return 1;
        case NodeKind::Mul:
        case NodeKind::Div:
            return 2;
        case NodeKind::Neg:
        case NodeKind::Pow:
            return 3;
        case NodeKind::Const:
            if (sign(e.cim) == 0) {
                // A printed slash acts like a division, a leading minus like a
                // negation; both lower the effective precedence.
                if (e.cre.get_den() == 1) return sign(e.cre) < 0 ? 3 : 4;
                return sign(e.cre) < 0 ? 1 : 2;
            }
            if (sign(e.cre) == 0) {
                if (e.cim == 1) return 4;
                if (e.cim == -1) return 3;
                return e.cim.get_den() == 1 ? (sign(e.cim) < 0 ? 1 : 2) : 1;
            }
            return 1;  // "a + b*I"
        default:
            return 4;
    }
}

void print_rec(const Expr& e, std::string& out);

void print_wrapped(const ExprPtr& e, int min_prec, std::string& out) {
    if (print_prec(*e) < min_prec) {
        out += "(";
        print_rec(*e, out);
        out += ")";
    } else {
        print_rec(*e, out);
    }
}

void print_const(const Expr& e, std::string& out) {
    if (sign(e.cim) == 0) {
        out += rat_to_string(e.cre);
        return;
    }
    if (sign(e.cre) == 0) {
        if (e.cim == 1) out += "I";
        else if (e.cim == -1) out += "-I";
        else out += rat_to_string(e.cim) + "*I";
        return;
    }
    out += rat_to_string(e.cre);
    if (sign(e.cim) > 0) {
        out += " + ";
        if (e.cim == 1) out += "I";
        else out += rat_to_string(e.cim) + "*I";
    } else {
        out += " - ";
        if (e.cim == -1) out += "I";
        else out += rat_to_string(-e.cim) + "*I";
    }
}

void print_rec(const Expr& e, std::string& out) {
    switch (e.kind) {
        case NodeKind::Const:
            print_const(e, out);
            return;
        case NodeKind::Var:
            out += e.var;
            return;
        case NodeKind::Neg:
            out += "-";
            print_wrapped(e.kids[0], 4, out);
            return;
        case NodeKind::Add:
            print_wrapped(e.kids[0], 1, out);
            out += " + ";
            print_wrapped(e.kids[1], 2, out);
            return;
        case NodeKind::Sub:
            print_wrapped(e.kids[0], 1, out);
            out += " - ";
            print_wrapped(e.kids[1], 2, out);
            return;
        case NodeKind::Mul:
            print_wrapped(e.kids[0], 2, out);
            out += "*";
            print_wrapped(e.kids[1], 3, out);
            return;
        case NodeKind::Div:
            print_wrapped(e.kids[0], 2, out);
            out += "/";
            print_wrapped(e.kids[1], 3, out);
            return;
        case NodeKind::Pow:
            print_wrapped(e.kids[0], 4, out);
            out += "^" + std::to_string(e.exponent);
            return;
        case NodeKind::Sqrt:
        case NodeKind::Log:
        case NodeKind::Exp:
        case NodeKind::Arccosh:
        case NodeKind::Arctan:
            out += node_kind_name(e.kind) + "(";
            print_rec(*e.kids[0], out);
            out += ")";
            return;
    }
}

}  // namespace

std::string expr_to_string(const ExprPtr& e) {
    std::string out;
    print_rec(*e, out);
    return out;
}

std::string node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Const: return "const";
        case NodeKind::Var: return "var";
        case NodeKind::Neg: return "neg";
        case NodeKind::Add: return "add";
        case NodeKind::Sub: return "sub";
        case NodeKind::Mul: return "mul";
        case NodeKind::Div: return "div";
        case NodeKind::Pow: return "pow";
        case NodeKind::Sqrt: return "sqrt";
        case NodeKind::Log: return "log";
        case NodeKind::Exp: return "exp";
        case NodeKind::Arccosh: return "arccosh";
        case NodeKind::Arctan: return "arctan";
    }
    return "?";
}

ExprPtr substitute(const ExprPtr& e, const std::string& var, const ExprPtr& replacement) {
    switch (e->kind) {
        case NodeKind::Const:
            return e;
        case NodeKind::Var:
            return e->var == var ? replacement : e;
        default: {
            std::vector<ExprPtr> kids;
            kids.reserve(e->kids.size());
            bool changed = false;
            for (const auto& k : e->kids) {
                ExprPtr s = substitute(k, var, replacement);
                changed = changed || s.get() != k.get();
                kids.push_back(std::move(s));
            }
            if (!changed) return e;
            auto n = std::make_shared<Expr>(*e);
            n->kids = std::move(kids);
            return n;
        }
    }
}

bool is_rational_expr(const ExprPtr& e) {
    switch (e->kind) {
        case NodeKind::Sqrt:
        case NodeKind::Log:
        case NodeKind::Exp:
        case NodeKind::Arccosh:
        case NodeKind::Arctan:
            return false;
        default:
            for (const auto& k : e->kids)
                if (!is_rational_expr(k)) return false;
            return true;
    }
}

bool has_cut(NodeKind k) {
    return k == NodeKind::Sqrt || k == NodeKind::Log || k == NodeKind::Arccosh ||
           k == NodeKind::Arctan;
}

namespace {

template <class Pred, class Out>
void collect_postorder(const ExprPtr& e, Pred pred, Out emit) {
    for (const auto& k : e->kids) collect_postorder(k, pred, emit);
    if (pred(e)) emit(e);
}

}  // namespace

std::vector<std::pair<NodeKind, ExprPtr>> non_analytic_nodes(const ExprPtr& e) {
    std::vector<std::pair<NodeKind, ExprPtr>> out;
    collect_postorder(
        e, [](const ExprPtr& n) { return has_cut(n->kind); },
        [&](const ExprPtr& n) {
            for (const auto& [k, a] : out)
                if (k == n->kind && expr_equal(a, n->kids[0])) return;
            out.emplace_back(n->kind, n->kids[0]);
        });
    return out;
}

std::vector<ExprPtr> divisor_nodes(const ExprPtr& e) {
    std::vector<ExprPtr> out;
    collect_postorder(
        e, [](const ExprPtr& n) { return n->kind == NodeKind::Div; },
        [&](const ExprPtr& n) {
            for (const auto& d : out)
                if (expr_equal(d, n->kids[1])) return;
            out.push_back(n->kids[1]);
        });
    return out;
}

int radical_count(const ExprPtr& e) {
    std::vector<ExprPtr> seen;
    collect_postorder(
        e, [](const ExprPtr& n) { return n->kind == NodeKind::Sqrt; },
        [&](const ExprPtr& n) {
            for (const auto& s : seen)
                if (expr_equal(s, n->kids[0])) return;
            seen.push_back(n->kids[0]);
        });
    return (int)seen.size();
}

std::vector<std::string> variables_of(const ExprPtr& e) {
    std::vector<std::string> out;
    collect_postorder(
        e, [](const ExprPtr& n) { return n->kind == NodeKind::Var; },
        [&](const ExprPtr& n) {
            if (std::find(out.begin(), out.end(), n->var) == out.end()) out.push_back(n->var);
        });
    return out;
}

}  // namespace cutcheck
