#ifndef DEFPOW_TESTS_BRUTE_FORCE_HPP
#define DEFPOW_TESTS_BRUTE_FORCE_HPP

#include <random>

#include "defpow/eval.hpp"
#include "defpow/formula.hpp"

// Test-only oracle: classical two-valued evaluation over a finite structure,
// with every quantifier ranging over the full carrier and divisibility decided
// by a multiplication scan. Deliberately independent of Structure::divides and
// of the three-valued evaluator.
namespace defpow::testing {

inline bool brute_divides(const Structure& S, const Value& a, const Value& b) {
    for (const auto& q : S.all_elements())
        if (value_equal(S.mul(a, q), b)) return true;
    return false;
}

inline bool brute_eval(const Structure& S, const Formula& f, Env& env) {
    switch (f->kind) {
        case FormulaNode::Kind::Eq:
            return value_equal(eval_term(S, f->t1, env), eval_term(S, f->t2, env));
        case FormulaNode::Kind::Divides:
            return brute_divides(S, eval_term(S, f->t1, env), eval_term(S, f->t2, env));
        case FormulaNode::Kind::And: return brute_eval(S, f->f1, env) && brute_eval(S, f->f2, env);
        case FormulaNode::Kind::Or: return brute_eval(S, f->f1, env) || brute_eval(S, f->f2, env);
        case FormulaNode::Kind::Implies: return !brute_eval(S, f->f1, env) || brute_eval(S, f->f2, env);
        case FormulaNode::Kind::Not: return !brute_eval(S, f->f1, env);
        case FormulaNode::Kind::Exists: {
            for (const auto& v : S.all_elements()) {
                env[f->var] = v;
                bool ok = brute_eval(S, f->f1, env);
                env.erase(f->var);
                if (ok) return true;
            }
            return false;
        }
        case FormulaNode::Kind::Forall: {
            for (const auto& v : S.all_elements()) {
                env[f->var] = v;
                bool ok = brute_eval(S, f->f1, env);
                env.erase(f->var);
                if (!ok) return false;
            }
            return true;
        }
        case FormulaNode::Kind::Oracle:
            throw std::logic_error("brute_eval: oracle atoms unsupported");
    }
    throw std::logic_error("brute_eval: bad node");
}

// Seeded random closed sentences with AllElements quantifier domains.
class SentenceGenerator {
  public:
    explicit SentenceGenerator(unsigned seed) : rng_(seed) {}

    Formula sentence(int max_depth) {
        vars_.clear();
        counter_ = 0;
        return formula(max_depth, true);
    }

  private:
    std::mt19937 rng_;
    std::vector<std::string> vars_;
    int counter_ = 0;

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    Term term(int depth) {
        int choice = pick(depth > 0 ? 7 : 4);
        switch (choice) {
            case 0: return t_zero();
            case 1: return t_one();
            case 2: return t_int(BigInt(pick(7) - 3));
            case 3:
                if (!vars_.empty()) return t_var(vars_[static_cast<std::size_t>(pick(static_cast<int>(vars_.size())))]);
                return t_int(BigInt(pick(7) - 3));
            case 4: return t_add(term(depth - 1), term(depth - 1));
            case 5: return t_mul(term(depth - 1), term(depth - 1));
            default: return t_neg(term(depth - 1));
        }
    }

    Formula formula(int depth, bool force_quant) {
        int choice = force_quant ? 5 + pick(2) : (depth > 0 ? pick(7) : pick(2));
        switch (choice) {
            case 0: return f_eq(term(2), term(2));
            case 1: return f_divides(term(2), term(2));
            case 2: return f_and(formula(depth - 1, false), formula(depth - 1, false));
            case 3: return f_or(formula(depth - 1, false), formula(depth - 1, false));
            case 4: return f_not(formula(depth - 1, false));
            default: {
                std::string v = "v" + std::to_string(counter_++);
                vars_.push_back(v);
                Formula body = formula(depth - 1, false);
                vars_.pop_back();
                return choice % 2 ? f_exists(v, domain_all(), body) : f_forall(v, domain_all(), body);
            }
        }
    }
};

}  // namespace defpow::testing

#endif
