#ifndef DEFPOW_FORMULA_HPP
#define DEFPOW_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "defpow/structure.hpp"

namespace defpow {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

// Terms of the ring language with signature (0, 1, +, *); integer literals
// abbreviate k-fold sums of 1 and are reduced through the characteristic.
struct TermNode {
    enum class Kind { Var, Zero, One, Lit, IntLit, Add, Mul, Neg };
    Kind kind;
    std::string name;  // Var
    Value lit;         // Lit
    BigInt k;          // IntLit
    Term a, b;
};

inline Term t_var(std::string name) {
    return std::make_shared<TermNode>(TermNode{TermNode::Kind::Var, std::move(name), {}, {}, nullptr, nullptr});
}
inline Term t_zero() {
    return std::make_shared<TermNode>(TermNode{TermNode::Kind::Zero, {}, {}, {}, nullptr, nullptr});
}
inline Term t_one() {
    return std::make_shared<TermNode>(TermNode{TermNode::Kind::One, {}, {}, {}, nullptr, nullptr});
}
inline Term t_lit(Value v) {
    return std::make_shared<TermNode>(TermNode{TermNode::Kind::Lit, {}, std::move(v), {}, nullptr, nullptr});
}
inline Term t_int(BigInt k) {
    return std::make_shared<TermNode>(TermNode{TermNode::Kind::IntLit, {}, {}, std::move(k), nullptr, nullptr});
}
inline Term t_add(Term a, Term b) {
    return std::make_shared<TermNode>(
        TermNode{TermNode::Kind::Add, {}, {}, {}, std::move(a), std::move(b)});
}
inline Term t_mul(Term a, Term b) {
    return std::make_shared<TermNode>(
        TermNode{TermNode::Kind::Mul, {}, {}, {}, std::move(a), std::move(b)});
}
inline Term t_neg(Term a) {
    return std::make_shared<TermNode>(TermNode{TermNode::Kind::Neg, {}, {}, {}, std::move(a), nullptr});
}
inline Term t_sub(Term a, Term b) { return t_add(std::move(a), t_neg(std::move(b))); }
inline Term t_pow(Term base, unsigned n) {
    if (n == 0) return t_one();
    Term acc = base;
    for (unsigned i = 1; i < n; ++i) acc = t_mul(acc, base);
    return acc;
}

// Quantifier witness domains.
struct Domain {
    enum class Kind { All, PolyBox, List, OracleSet };
    Kind kind = Kind::All;
    int max_deg = 0;
    int coeff_lo = 0, coeff_hi = 0;  // PolyBox coefficient range
    bool complete = false;           // caller-asserted for PolyBox/List
    std::vector<Value> values;       // List
    std::string oracle;              // OracleSet
};

inline Domain domain_all() { return {}; }
inline Domain domain_polybox(int max_deg, int lo, int hi, bool complete = false) {
    Domain d;
    d.kind = Domain::Kind::PolyBox;
    d.max_deg = max_deg;
    d.coeff_lo = lo;
    d.coeff_hi = hi;
    d.complete = complete;
    return d;
}
inline Domain domain_list(std::vector<Value> values, bool complete) {
    Domain d;
    d.kind = Domain::Kind::List;
    d.values = std::move(values);
    d.complete = complete;
    return d;
}
inline Domain domain_oracle(std::string tag) {
    Domain d;
    d.kind = Domain::Kind::OracleSet;
    d.oracle = std::move(tag);
    return d;
}

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    enum class Kind { Eq, Divides, And, Or, Not, Implies, Exists, Forall, Oracle };
    Kind kind;
    Term t1, t2;      // Eq / Divides
    Formula f1, f2;   // connectives; f1 also the quantifier body
    std::string var;  // quantifiers
    Domain domain;
    std::string tag;         // Oracle
    std::vector<Term> args;  // Oracle
};

inline Formula f_eq(Term a, Term b) {
    return std::make_shared<FormulaNode>(
        FormulaNode{FormulaNode::Kind::Eq, std::move(a), std::move(b), nullptr, nullptr, {}, {}, {}, {}});
}
inline Formula f_divides(Term a, Term b) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::Divides, std::move(a),
                                                     std::move(b), nullptr, nullptr, {}, {}, {}, {}});
}
inline Formula f_and(Formula a, Formula b) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::And, nullptr, nullptr,
                                                     std::move(a), std::move(b), {}, {}, {}, {}});
}
inline Formula f_or(Formula a, Formula b) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::Or, nullptr, nullptr,
                                                     std::move(a), std::move(b), {}, {}, {}, {}});
}
inline Formula f_not(Formula a) {
    return std::make_shared<FormulaNode>(
        FormulaNode{FormulaNode::Kind::Not, nullptr, nullptr, std::move(a), nullptr, {}, {}, {}, {}});
}
inline Formula f_implies(Formula a, Formula b) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::Implies, nullptr, nullptr,
                                                     std::move(a), std::move(b), {}, {}, {}, {}});
}
inline Formula f_exists(std::string var, Domain d, Formula body) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::Exists, nullptr, nullptr,
                                                     std::move(body), nullptr, std::move(var),
                                                     std::move(d), {}, {}});
}
inline Formula f_forall(std::string var, Domain d, Formula body) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::Forall, nullptr, nullptr,
                                                     std::move(body), nullptr, std::move(var),
                                                     std::move(d), {}, {}});
}
inline Formula f_oracle(std::string tag, std::vector<Term> args) {
    return std::make_shared<FormulaNode>(FormulaNode{FormulaNode::Kind::Oracle, nullptr, nullptr,
                                                     nullptr, nullptr, {}, {}, std::move(tag),
                                                     std::move(args)});
}

// --- free variables -----------------------------------------------------------

inline void collect_term_vars(const Term& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == TermNode::Kind::Var) out.insert(t->name);
    collect_term_vars(t->a, out);
    collect_term_vars(t->b, out);
}

inline void collect_free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    if (!f) return;
    switch (f->kind) {
        case FormulaNode::Kind::Eq:
        case FormulaNode::Kind::Divides: {
            std::set<std::string> vars;
            collect_term_vars(f->t1, vars);
            collect_term_vars(f->t2, vars);
            for (auto& v : vars)
                if (!bound.count(v)) out.insert(v);
            break;
        }
        case FormulaNode::Kind::Oracle: {
            std::set<std::string> vars;
            for (auto& t : f->args) collect_term_vars(t, vars);
            for (auto& v : vars)
                if (!bound.count(v)) out.insert(v);
            break;
        }
        case FormulaNode::Kind::Exists:
        case FormulaNode::Kind::Forall: {
            bool fresh = bound.insert(f->var).second;
            collect_free_vars(f->f1, bound, out);
            if (fresh) bound.erase(f->var);
            break;
        }
        default:
            collect_free_vars(f->f1, bound, out);
            collect_free_vars(f->f2, bound, out);
    }
}

inline std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free_vars(f, bound, out);
    return out;
}

// --- substitution (terms for free variables) -----------------------------------

inline Term substitute_term(const Term& t, const std::string& var, const Term& replacement) {
    if (!t) return t;
    switch (t->kind) {
        case TermNode::Kind::Var:
            return t->name == var ? replacement : t;
        case TermNode::Kind::Add:
            return t_add(substitute_term(t->a, var, replacement), substitute_term(t->b, var, replacement));
        case TermNode::Kind::Mul:
            return t_mul(substitute_term(t->a, var, replacement), substitute_term(t->b, var, replacement));
        case TermNode::Kind::Neg:
            return t_neg(substitute_term(t->a, var, replacement));
        default:
            return t;
    }
}

inline Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
    if (!f) return f;
    switch (f->kind) {
        case FormulaNode::Kind::Eq:
            return f_eq(substitute_term(f->t1, var, replacement), substitute_term(f->t2, var, replacement));
        case FormulaNode::Kind::Divides:
            return f_divides(substitute_term(f->t1, var, replacement),
                             substitute_term(f->t2, var, replacement));
        case FormulaNode::Kind::And:
            return f_and(substitute(f->f1, var, replacement), substitute(f->f2, var, replacement));
        case FormulaNode::Kind::Or:
            return f_or(substitute(f->f1, var, replacement), substitute(f->f2, var, replacement));
        case FormulaNode::Kind::Implies:
            return f_implies(substitute(f->f1, var, replacement), substitute(f->f2, var, replacement));
        case FormulaNode::Kind::Not:
            return f_not(substitute(f->f1, var, replacement));
        case FormulaNode::Kind::Exists:
        case FormulaNode::Kind::Forall: {
            if (f->var == var) return f;  // shadowed
            Formula body = substitute(f->f1, var, replacement);
            return f->kind == FormulaNode::Kind::Exists ? f_exists(f->var, f->domain, body)
                                                        : f_forall(f->var, f->domain, body);
        }
        case FormulaNode::Kind::Oracle: {
            std::vector<Term> args;
            for (auto& t : f->args) args.push_back(substitute_term(t, var, replacement));
            return f_oracle(f->tag, std::move(args));
        }
    }
    return f;
}

// --- printing -------------------------------------------------------------------

inline std::string print_term(const Structure& S, const Term& t, int parent_prec = 0) {
    // precedence: + (1), unary - (2), * (3), atoms (4)
    auto wrap = [&](int prec, const std::string& s) {
        return prec < parent_prec ? "(" + s + ")" : s;
    };
    switch (t->kind) {
        case TermNode::Kind::Var: return t->name;
        case TermNode::Kind::Zero: return "0";
        case TermNode::Kind::One: return "1";
        case TermNode::Kind::Lit: return S.format(t->lit);
        case TermNode::Kind::IntLit: return t->k.to_string();
        case TermNode::Kind::Add: {
            // render a + (-b) as a - b
            if (t->b->kind == TermNode::Kind::Neg)
                return wrap(1, print_term(S, t->a, 1) + " - " + print_term(S, t->b->a, 2));
            return wrap(1, print_term(S, t->a, 1) + " + " + print_term(S, t->b, 1));
        }
        case TermNode::Kind::Mul:
            return wrap(3, print_term(S, t->a, 3) + "*" + print_term(S, t->b, 4));
        case TermNode::Kind::Neg:
            return wrap(2, "-" + print_term(S, t->a, 3));
    }
    return "?";
}

inline std::string print_domain(const Structure& S, const Domain& d) {
    switch (d.kind) {
        case Domain::Kind::All: return "all";
        case Domain::Kind::PolyBox:
            return "poly(deg<=" + std::to_string(d.max_deg) + "; coeffs=" + std::to_string(d.coeff_lo) +
                   ".." + std::to_string(d.coeff_hi) + ")";
        case Domain::Kind::List: {
            std::string out = "list(";
            for (std::size_t i = 0; i < d.values.size(); ++i) {
                if (i) out += ", ";
                out += S.format(d.values[i]);
            }
            return out + ")";
        }
        case Domain::Kind::OracleSet: return d.oracle;
    }
    return "?";
}

inline std::string print_formula(const Structure& S, const Formula& f, int parent_prec = 0) {
    // precedence: quantifiers (0), -> (1), || (2), && (3), ! (4), atoms (5)
    auto wrap = [&](int prec, const std::string& s) {
        return prec < parent_prec ? "(" + s + ")" : s;
    };
    switch (f->kind) {
        case FormulaNode::Kind::Eq:
            return print_term(S, f->t1) + " = " + print_term(S, f->t2);
        case FormulaNode::Kind::Divides:
            return print_term(S, f->t1) + " | " + print_term(S, f->t2);
        case FormulaNode::Kind::And:
            return wrap(3, print_formula(S, f->f1, 3) + " && " + print_formula(S, f->f2, 4));
        case FormulaNode::Kind::Or:
            return wrap(2, print_formula(S, f->f1, 2) + " || " + print_formula(S, f->f2, 3));
        case FormulaNode::Kind::Implies:
            return wrap(1, print_formula(S, f->f1, 2) + " -> " + print_formula(S, f->f2, 1));
        case FormulaNode::Kind::Not:
            return wrap(4, "!" + print_formula(S, f->f1, 5));
        case FormulaNode::Kind::Exists:
        case FormulaNode::Kind::Forall: {
            std::string head = f->kind == FormulaNode::Kind::Exists ? "exists " : "forall ";
            head += f->var;
            if (f->domain.kind != Domain::Kind::All) head += " in " + print_domain(S, f->domain);
            return wrap(0, head + " . " + print_formula(S, f->f1, 0));
        }
        case FormulaNode::Kind::Oracle: {
            std::string out = f->tag + "(";
            for (std::size_t i = 0; i < f->args.size(); ++i) {
                if (i) out += ", ";
                out += print_term(S, f->args[i]);
            }
            return out + ")";
        }
    }
    return "?";
}

// --- structural equality ----------------------------------------------------------

inline bool term_equal(const Term& a, const Term& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TermNode::Kind::Var: return a->name == b->name;
        case TermNode::Kind::Zero:
        case TermNode::Kind::One: return true;
        case TermNode::Kind::Lit: return value_equal(a->lit, b->lit);
        case TermNode::Kind::IntLit: return a->k == b->k;
        case TermNode::Kind::Neg: return term_equal(a->a, b->a);
        default: return term_equal(a->a, b->a) && term_equal(a->b, b->b);
    }
}

inline bool domain_equal(const Domain& a, const Domain& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Domain::Kind::All: return true;
        case Domain::Kind::PolyBox:
            return a.max_deg == b.max_deg && a.coeff_lo == b.coeff_lo && a.coeff_hi == b.coeff_hi &&
                   a.complete == b.complete;
        case Domain::Kind::List: {
            if (a.values.size() != b.values.size() || a.complete != b.complete) return false;
            for (std::size_t i = 0; i < a.values.size(); ++i)
                if (!value_equal(a.values[i], b.values[i])) return false;
            return true;
        }
        case Domain::Kind::OracleSet: return a.oracle == b.oracle;
    }
    return false;
}

inline bool formula_equal(const Formula& a, const Formula& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case FormulaNode::Kind::Eq:
        case FormulaNode::Kind::Divides:
            return term_equal(a->t1, b->t1) && term_equal(a->t2, b->t2);
        case FormulaNode::Kind::Not:
            return formula_equal(a->f1, b->f1);
        case FormulaNode::Kind::Exists:
        case FormulaNode::Kind::Forall:
            return a->var == b->var && domain_equal(a->domain, b->domain) && formula_equal(a->f1, b->f1);
        case FormulaNode::Kind::Oracle: {
            if (a->tag != b->tag || a->args.size() != b->args.size()) return false;
            for (std::size_t i = 0; i < a->args.size(); ++i)
                if (!term_equal(a->args[i], b->args[i])) return false;
            return true;
        }
        default:
            return formula_equal(a->f1, b->f1) && formula_equal(a->f2, b->f2);
    }
}

// --- normal-form transformations ----------------------------------------------

// Negation normal form: push negations to atoms (atoms keep an outer ! when
// negated), eliminating double negations and implications.
inline Formula to_nnf(const Formula& f, bool negate = false) {
    switch (f->kind) {
        case FormulaNode::Kind::Eq:
        case FormulaNode::Kind::Divides:
        case FormulaNode::Kind::Oracle:
            return negate ? f_not(f) : f;
        case FormulaNode::Kind::Not:
            return to_nnf(f->f1, !negate);
        case FormulaNode::Kind::And:
            return negate ? f_or(to_nnf(f->f1, true), to_nnf(f->f2, true))
                          : f_and(to_nnf(f->f1, false), to_nnf(f->f2, false));
        case FormulaNode::Kind::Or:
            return negate ? f_and(to_nnf(f->f1, true), to_nnf(f->f2, true))
                          : f_or(to_nnf(f->f1, false), to_nnf(f->f2, false));
        case FormulaNode::Kind::Implies:
            return negate ? f_and(to_nnf(f->f1, false), to_nnf(f->f2, true))
                          : f_or(to_nnf(f->f1, true), to_nnf(f->f2, false));
        case FormulaNode::Kind::Exists:
            return negate ? f_forall(f->var, f->domain, to_nnf(f->f1, true))
                          : f_exists(f->var, f->domain, to_nnf(f->f1, false));
        case FormulaNode::Kind::Forall:
            return negate ? f_exists(f->var, f->domain, to_nnf(f->f1, true))
                          : f_forall(f->var, f->domain, to_nnf(f->f1, false));
    }
    return f;
}

// Prenex form of an NNF formula over complete domains: hoists quantifiers
// left-to-right, renaming bound variables apart.
inline Formula to_prenex(const Formula& f, int& counter) {
    switch (f->kind) {
        case FormulaNode::Kind::Exists:
        case FormulaNode::Kind::Forall: {
            std::string fresh = "_q" + std::to_string(counter++);
            Formula body = substitute(f->f1, f->var, t_var(fresh));
            Formula inner = to_prenex(body, counter);
            return f->kind == FormulaNode::Kind::Exists ? f_exists(fresh, f->domain, inner)
                                                        : f_forall(fresh, f->domain, inner);
        }
        case FormulaNode::Kind::And:
        case FormulaNode::Kind::Or: {
            Formula lhs = to_prenex(f->f1, counter);
            // hoist from the left operand
            std::vector<const FormulaNode*> quants;
            Formula cursor = lhs;
            while (cursor->kind == FormulaNode::Kind::Exists || cursor->kind == FormulaNode::Kind::Forall) {
                quants.push_back(cursor.get());
                cursor = cursor->f1;
            }
            Formula rhs = to_prenex(f->f2, counter);
            std::vector<const FormulaNode*> rquants;
            Formula rcursor = rhs;
            while (rcursor->kind == FormulaNode::Kind::Exists ||
                   rcursor->kind == FormulaNode::Kind::Forall) {
                rquants.push_back(rcursor.get());
                rcursor = rcursor->f1;
            }
            Formula matrix = f->kind == FormulaNode::Kind::And ? f_and(cursor, rcursor)
                                                               : f_or(cursor, rcursor);
            for (auto it = rquants.rbegin(); it != rquants.rend(); ++it)
                matrix = (*it)->kind == FormulaNode::Kind::Exists
                             ? f_exists((*it)->var, (*it)->domain, matrix)
                             : f_forall((*it)->var, (*it)->domain, matrix);
            for (auto it = quants.rbegin(); it != quants.rend(); ++it)
                matrix = (*it)->kind == FormulaNode::Kind::Exists
                             ? f_exists((*it)->var, (*it)->domain, matrix)
                             : f_forall((*it)->var, (*it)->domain, matrix);
            return matrix;
        }
        default:
            return f;
    }
}

}  // namespace defpow

#endif
