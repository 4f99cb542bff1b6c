#ifndef DEFPOW_EVAL_HPP
#define DEFPOW_EVAL_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "defpow/formula.hpp"
#include "defpow/structure.hpp"

namespace defpow {

using Env = std::map<std::string, Value>;

// Registered decision procedures behind OraclePred atoms; each documents its
// own exactness by returning exact verdicts only where it can.
using OracleFn = std::function<Verdict(const Structure&, const std::vector<Value>&, const Budget&)>;
using OracleRegistry = std::map<std::string, OracleFn>;

struct EvalResult {
    Verdict verdict;
    // witness assignment for a True existential (resp. refuting assignment
    // for a False universal), outermost first
    std::vector<std::pair<std::string, Value>> assignment;
};

inline Value eval_term(const Structure& S, const Term& t, const Env& env) {
    switch (t->kind) {
        case TermNode::Kind::Var: {
            auto it = env.find(t->name);
            if (it == env.end()) throw UnboundVarError(t->name);
            return it->second;
        }
        case TermNode::Kind::Zero: return S.zero();
        case TermNode::Kind::One: return S.one();
        case TermNode::Kind::Lit: return t->lit;
        case TermNode::Kind::IntLit: return S.from_int(t->k);
        case TermNode::Kind::Add: return S.add(eval_term(S, t->a, env), eval_term(S, t->b, env));
        case TermNode::Kind::Mul: return S.mul(eval_term(S, t->a, env), eval_term(S, t->b, env));
        case TermNode::Kind::Neg: return S.neg(eval_term(S, t->a, env));
    }
    throw std::logic_error("eval_term: bad node");
}

class Evaluator {
  public:
    Evaluator(const Structure& S, Budget budget, const OracleRegistry* oracles = nullptr)
        : S_(S), budget_(budget), oracles_(oracles) {}

    EvalResult eval(const Formula& f, Env& env) {
        switch (f->kind) {
            case FormulaNode::Kind::Eq: {
                Value a = eval_term(S_, f->t1, env), b = eval_term(S_, f->t2, env);
                if (value_equal(a, b)) return {verdict_true(S_.format(a) + " = " + S_.format(b)), {}};
                return {verdict_false(S_.format(a) + " != " + S_.format(b)), {}};
            }
            case FormulaNode::Kind::Divides: {
                Value a = eval_term(S_, f->t1, env), b = eval_term(S_, f->t2, env);
                return {S_.divides(a, b, budget_), {}};
            }
            case FormulaNode::Kind::And: {
                EvalResult l = eval(f->f1, env);
                if (l.verdict.is_false()) return l;
                EvalResult r = eval(f->f2, env);
                EvalResult out{kleene_and(l.verdict, r.verdict), {}};
                out.assignment = l.assignment;
                out.assignment.insert(out.assignment.end(), r.assignment.begin(), r.assignment.end());
                return out;
            }
            case FormulaNode::Kind::Or: {
                EvalResult l = eval(f->f1, env);
                if (l.verdict.is_true()) return l;
                EvalResult r = eval(f->f2, env);
                EvalResult out{kleene_or(l.verdict, r.verdict), {}};
                out.assignment = r.verdict.is_true() ? r.assignment : l.assignment;
                return out;
            }
            case FormulaNode::Kind::Implies: {
                EvalResult l = eval(f->f1, env);
                if (l.verdict.is_false())
                    return {verdict_true("antecedent fails: " + l.verdict.evidence), {}};
                EvalResult r = eval(f->f2, env);
                EvalResult out{kleene_implies(l.verdict, r.verdict), {}};
                out.assignment = r.assignment;
                return out;
            }
            case FormulaNode::Kind::Not: {
                EvalResult r = eval(f->f1, env);
                return {kleene_not(r.verdict), r.assignment};
            }
            case FormulaNode::Kind::Exists:
                return quantifier(f, env, true);
            case FormulaNode::Kind::Forall:
                return quantifier(f, env, false);
            case FormulaNode::Kind::Oracle: {
                if (!oracles_) return {verdict_unknown("no oracle registry for " + f->tag), {}};
                auto it = oracles_->find(f->tag);
                if (it == oracles_->end()) return {verdict_unknown("unregistered oracle " + f->tag), {}};
                std::vector<Value> args;
                for (auto& t : f->args) args.push_back(eval_term(S_, t, env));
                return {it->second(S_, args, budget_), {}};
            }
        }
        throw std::logic_error("eval: bad node");
    }

    EvalResult eval_closed(const Formula& f) {
        Env env;
        return eval(f, env);
    }

  private:
    const Structure& S_;
    Budget budget_;
    const OracleRegistry* oracles_;
    long long steps_ = 0;

    struct DomainEnum {
        std::vector<Value> values;
        bool complete = false;
        std::string guard;  // oracle tag when the domain is an oracle set
    };

    DomainEnum enumerate(const Domain& d) {
        DomainEnum out;
        switch (d.kind) {
            case Domain::Kind::All:
                if (S_.is_finite()) {
                    out.values = S_.all_elements();
                    out.complete = true;
                } else {
                    out.values = S_.box(budget_);
                    out.complete = false;
                }
                break;
            case Domain::Kind::PolyBox:
                out.values = S_.poly_box(d.max_deg, d.coeff_lo, d.coeff_hi);
                out.complete = d.complete;
                break;
            case Domain::Kind::List:
                out.values = d.values;
                out.complete = d.complete;
                break;
            case Domain::Kind::OracleSet:
                if (S_.is_finite()) {
                    out.values = S_.all_elements();
                    out.complete = true;  // membership still guarded by the oracle
                } else {
                    out.values = S_.box(budget_);
                    out.complete = false;
                }
                out.guard = d.oracle;
                break;
        }
        return out;
    }

    // Kleene semantics: Exists is True on the first witness, False only when
    // the domain is complete, was fully enumerated and nothing was Unknown.
    EvalResult quantifier(const Formula& f, Env& env, bool existential) {
        DomainEnum dom = enumerate(f->domain);
        bool saw_unknown = false;
        bool budget_hit = false;
        for (const auto& v : dom.values) {
            if (++steps_ > budget_.step_limit) {
                budget_hit = true;
                break;
            }
            Verdict guard_verdict = verdict_true("");
            if (!dom.guard.empty()) {
                if (!oracles_ || !oracles_->count(dom.guard)) {
                    guard_verdict = verdict_unknown("unregistered oracle " + dom.guard);
                } else {
                    guard_verdict = oracles_->at(dom.guard)(S_, {v}, budget_);
                }
                if (guard_verdict.is_false()) continue;  // not in the set, irrelevant either way
            }
            auto saved = env.find(f->var) != env.end() ? std::optional<Value>(env[f->var]) : std::nullopt;
            env[f->var] = v;
            EvalResult r = eval(f->f1, env);
            if (saved) env[f->var] = *saved;
            else env.erase(f->var);

            Verdict combined = existential ? kleene_and(guard_verdict, r.verdict)
                                           : kleene_implies(guard_verdict, r.verdict);
            if (existential && combined.is_true()) {
                EvalResult out{verdict_true(f->var + " = " + S_.format(v) +
                                            (r.verdict.evidence.empty() ? "" : "; " + r.verdict.evidence)),
                               {}};
                out.assignment.emplace_back(f->var, v);
                out.assignment.insert(out.assignment.end(), r.assignment.begin(), r.assignment.end());
                return out;
            }
            if (!existential && combined.is_false()) {
                EvalResult out{verdict_false(f->var + " = " + S_.format(v) +
                                             (r.verdict.evidence.empty() ? "" : "; " + r.verdict.evidence)),
                               {}};
                out.assignment.emplace_back(f->var, v);
                out.assignment.insert(out.assignment.end(), r.assignment.begin(), r.assignment.end());
                return out;
            }
            if (combined.is_unknown()) saw_unknown = true;
        }
        if (budget_hit)
            return {verdict_unknown("quantifier budget exhausted after " + std::to_string(steps_) +
                                    " candidates"),
                    {}};
        if (dom.complete && !saw_unknown) {
            if (existential)
                return {verdict_false("complete domain of " + std::to_string(dom.values.size()) +
                                      " candidates exhausted"),
                        {}};
            return {verdict_true("complete domain of " + std::to_string(dom.values.size()) +
                                 " candidates verified"),
                    {}};
        }
        std::string note = dom.complete ? "a candidate evaluated Unknown" : "witness domain incomplete";
        return {verdict_unknown(note), {}};
    }
};

inline EvalResult eval_formula(const Structure& S, const Formula& f, const Budget& budget,
                               const OracleRegistry* oracles = nullptr) {
    Evaluator ev(S, budget, oracles);
    return ev.eval_closed(f);
}

}  // namespace defpow

#endif
