#ifndef DEFPOW_PARSER_HPP
#define DEFPOW_PARSER_HPP

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "defpow/eval.hpp"
#include "defpow/formula.hpp"

namespace defpow {

// Named formula builders expandable from the text grammar, e.g. psi(f, s).
using MacroFn = std::function<Formula(const Structure&, const std::vector<Term>&)>;
using MacroTable = std::map<std::string, MacroFn>;

// Grammar (ASCII):
//   formula  :=  implies
//   implies  :=  or [ '->' implies ]
//   or       :=  and { '||' and }
//   and      :=  unary { '&&' unary }
//   unary    :=  '!' unary | ('exists'|'forall') VAR ['in' domain] '.' formula | atom
//   atom     :=  '(' formula ')' | NAME '(' terms ')' | term (('='|'!='|'|') term)
//   domain   :=  'all' | 'poly' '(' 'deg' '<=' INT [';' 'coeffs' '=' INT '..' INT] ')'
//                | 'list' '(' terms ')' | NAME
//   term     :=  sum of products of powers over INT, variables, reserved
//                constants (x, y, t, z, t1, ...), and tuple literals like (1,-1)
class FormulaParser {
  public:
    FormulaParser(const Structure& S, std::string text, const MacroTable* macros = nullptr,
                  const std::set<std::string>* oracle_names = nullptr)
        : S_(S), text_(std::move(text)), macros_(macros), oracles_(oracle_names) {
        for (auto& [name, v] : S.constants()) constants_[name] = v;
    }

    Formula parse_formula_all() {
        Formula f = parse_formula();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return f;
    }

    Term parse_term_all() {
        Term t = parse_term();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return t;
    }

  private:
    const Structure& S_;
    std::string text_;
    std::size_t pos_ = 0;
    const MacroTable* macros_;
    const std::set<std::string>* oracles_;
    std::map<std::string, Value> constants_;

    static const std::set<std::string>& keywords() {
        static const std::set<std::string> kw{"exists", "forall", "in", "all", "poly", "list", "deg", "coeffs"};
        return kw;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(const std::string& sym) {
        skip_ws();
        if (text_.compare(pos_, sym.size(), sym) == 0) {
            // for "|" do not swallow the first half of "||"
            if (sym == "|" && pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') return false;
            if (sym == "=" && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') return false;
            pos_ += sym.size();
            return true;
        }
        return false;
    }
    bool peek(const std::string& sym) {
        std::size_t saved = pos_;
        bool ok = eat(sym);
        pos_ = saved;
        return ok;
    }
    void expect(const std::string& sym) {
        if (!eat(sym)) throw ParseError("expected '" + sym + "'", pos_);
    }
    bool peek_ident() {
        skip_ws();
        return pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
    }
    std::string lex_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected identifier", pos_);
        return text_.substr(start, pos_ - start);
    }
    bool peek_int() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    BigInt lex_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return BigInt::from_string(text_.substr(start, pos_ - start));
    }

    Formula parse_formula() { return parse_implies(); }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (eat("->")) return f_implies(lhs, parse_implies());
        return lhs;
    }
    Formula parse_or() {
        Formula lhs = parse_and();
        while (eat("||")) lhs = f_or(lhs, parse_and());
        return lhs;
    }
    Formula parse_and() {
        Formula lhs = parse_unary();
        while (eat("&&")) lhs = f_and(lhs, parse_unary());
        return lhs;
    }

    Formula parse_unary() {
        skip_ws();
        if (eat("!")) return f_not(parse_unary());
        if (peek_ident()) {
            std::size_t saved = pos_;
            std::string word = lex_ident();
            if (word == "exists" || word == "forall") {
                std::string var = lex_ident();
                if (keywords().count(var)) throw ParseError("'" + var + "' cannot be a variable", pos_);
                Domain dom = domain_all();
                std::size_t before_in = pos_;
                if (peek_ident()) {
                    std::string maybe_in = lex_ident();
                    if (maybe_in == "in") dom = parse_domain();
                    else pos_ = before_in;
                }
                expect(".");
                Formula body = parse_formula();
                return word == "exists" ? f_exists(var, dom, body) : f_forall(var, dom, body);
            }
            pos_ = saved;
        }
        return parse_atom();
    }

    Domain parse_domain() {
        skip_ws();
        std::string word = lex_ident();
        if (word == "all") return domain_all();
        if (word == "poly") {
            expect("(");
            std::string dg = lex_ident();
            if (dg != "deg") throw ParseError("expected 'deg'", pos_);
            expect("<=");
            int max_deg = static_cast<int>(lex_int().to_int64());
            int lo = -3, hi = 3;
            if (eat(";")) {
                std::string cf = lex_ident();
                if (cf != "coeffs") throw ParseError("expected 'coeffs'", pos_);
                expect("=");
                bool neg = eat("-");
                lo = static_cast<int>(lex_int().to_int64());
                if (neg) lo = -lo;
                expect("..");
                neg = eat("-");
                hi = static_cast<int>(lex_int().to_int64());
                if (neg) hi = -hi;
            }
            expect(")");
            return domain_polybox(max_deg, lo, hi, false);
        }
        if (word == "list") {
            expect("(");
            std::vector<Value> values;
            if (!peek(")")) {
                do {
                    Term t = parse_term();
                    Env empty;
                    values.push_back(eval_term(S_, t, empty));
                } while (eat(","));
            }
            expect(")");
            return domain_list(std::move(values), true);
        }
        return domain_oracle(word);
    }

    Formula parse_atom() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            // try a parenthesized formula; fall back to a term-level atom
            std::size_t saved = pos_;
            try {
                expect("(");
                Formula inner = parse_formula();
                expect(")");
                skip_ws();
                if (pos_ < text_.size()) {
                    char c = text_[pos_];
                    bool term_continues = c == '+' || c == '*' || c == '^' || c == '=' || c == ',';
                    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '>') term_continues = true;
                    if (c == '|' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '|')) term_continues = true;
                    if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') term_continues = true;
                    if (term_continues) {
                        pos_ = saved;
                        return parse_relational();
                    }
                }
                return inner;
            } catch (const ParseError&) {
                pos_ = saved;
                return parse_relational();
            }
        }
        if (peek_ident()) {
            std::size_t saved = pos_;
            std::string name = lex_ident();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(' && !constants_.count(name)) {
                bool is_macro = macros_ && macros_->count(name);
                bool is_oracle = oracles_ && oracles_->count(name);
                if (is_macro || is_oracle) {
                    expect("(");
                    std::vector<Term> args;
                    if (!peek(")")) {
                        do {
                            args.push_back(parse_term());
                        } while (eat(","));
                    }
                    expect(")");
                    if (is_macro) return macros_->at(name)(S_, args);
                    return f_oracle(name, std::move(args));
                }
            }
            pos_ = saved;
        }
        return parse_relational();
    }

    Formula parse_relational() {
        Term lhs = parse_term();
        if (eat("!=")) return f_not(f_eq(lhs, parse_term()));
        if (eat("=")) return f_eq(lhs, parse_term());
        if (eat("|")) return f_divides(lhs, parse_term());
        throw ParseError("expected '=', '!=' or '|' after term", pos_);
    }

    Term parse_term() {
        Term lhs = parse_multerm();
        while (true) {
            if (eat("+")) lhs = t_add(lhs, parse_multerm());
            else if (peek("->")) break;
            else if (eat("-")) lhs = t_sub(lhs, parse_multerm());
            else break;
        }
        return lhs;
    }
    Term parse_multerm() {
        Term lhs = parse_unary_term();
        while (eat("*")) lhs = t_mul(lhs, parse_unary_term());
        return lhs;
    }
    Term parse_unary_term() {
        if (eat("-")) return t_neg(parse_unary_term());
        return parse_power();
    }
    Term parse_power() {
        Term base = parse_primary();
        if (eat("^")) {
            BigInt e = lex_int();
            if (e.is_negative()) throw ParseError("negative exponent", pos_);
            return t_pow(base, static_cast<unsigned>(e.to_int64()));
        }
        return base;
    }

    Term parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (peek_int()) {
            BigInt k = lex_int();
            if (k.is_zero()) return t_zero();
            if (k.is_one()) return t_one();
            return t_int(k);
        }
        if (text_[pos_] == '(') {
            std::size_t saved = pos_;
            if (auto tup = try_tuple()) return t_lit(*tup);
            pos_ = saved;
            expect("(");
            Term t = parse_term();
            expect(")");
            return t;
        }
        std::string name = lex_ident();
        if (keywords().count(name)) throw ParseError("keyword '" + name + "' in term position", pos_);
        auto it = constants_.find(name);
        if (it != constants_.end()) return t_lit(it->second);
        return t_var(name);
    }

    std::optional<Value> try_tuple() {
        expect("(");
        std::vector<BigInt> entries;
        while (true) {
            skip_ws();
            bool neg = eat("-");
            if (!peek_int()) return std::nullopt;
            BigInt k = lex_int();
            entries.push_back(neg ? -k : k);
            if (eat(",")) continue;
            if (eat(")")) break;
            return std::nullopt;
        }
        if (entries.size() < 2) return std::nullopt;
        try {
            return S_.from_tuple(entries);
        } catch (const BadSpecError& e) {
            throw ParseError(e.what(), pos_);
        }
    }
};

inline Formula parse_formula_text(const Structure& S, const std::string& text,
                                  const MacroTable* macros = nullptr,
                                  const std::set<std::string>* oracle_names = nullptr) {
    FormulaParser p(S, text, macros, oracle_names);
    return p.parse_formula_all();
}

inline Term parse_term_text(const Structure& S, const std::string& text) {
    FormulaParser p(S, text);
    return p.parse_term_all();
}

inline Value parse_value_text(const Structure& S, const std::string& text) {
    Env empty;
    return eval_term(S, parse_term_text(S, text), empty);
}

}  // namespace defpow

#endif
