#ifndef DEFPOW_LPOW_HPP
#define DEFPOW_LPOW_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "defpow/eval.hpp"
#include "defpow/formula.hpp"
#include "defpow/structure.hpp"

namespace defpow {

// Exactness class of a decision: theorem-backed verdicts are two-valued,
// bounded ones may come back Unknown.
struct ExactnessClass {
    bool theorem_backed = false;
    std::string tag;  // which fact backs the verdict (resolvable in docs/claims.md)
};

struct LpowVerdict {
    Verdict verdict;
    ExactnessClass cls;
    // f = u * p^n with (p-1) | (u-1), recorded for True verdicts when available
    std::optional<std::pair<Value, int>> decomposition;
};

// The defining formula of logical powers:
//   s | f  &&  s - 1 | f - 1  &&  forall g . (g | f -> (g | 1 || s | g))
inline Formula psi_formula(const Term& f, const Term& s, Domain divisor_domain = domain_all()) {
    std::set<std::string> used;
    collect_term_vars(f, used);
    collect_term_vars(s, used);
    std::string g = "g";
    while (used.count(g)) g += "_";
    Formula clause3 = f_forall(
        g, divisor_domain,
        f_implies(f_divides(t_var(g), f), f_or(f_divides(t_var(g), t_one()), f_divides(s, t_var(g)))));
    return f_and(f_and(f_divides(s, f), f_divides(t_sub(s, t_one()), t_sub(f, t_one()))), clause3);
}

// --- pow(p) membership ---------------------------------------------------------

struct PowVerdict {
    Verdict verdict;
    int exponent = 0;
};

// Is f a positive power of p? True verdicts carry the exponent. False is
// exact when the power sequence provably leaves f behind: a repeated value
// (cycle), a degree overrun with regular leading coefficient, or an integer
// entry that has outgrown f.
inline PowVerdict decide_pow(const Structure& S, const Value& f, const Value& p, int cap) {
    if (cap < 1) throw BadBoundError("decide_pow: cap must be >= 1");
    const Poly* pf = std::get_if<Poly>(&p);
    const Poly* ff = std::get_if<Poly>(&f);
    bool degree_monotone = pf && !pf->is_constant() && pf->base().is_regular(*pf->leading());
    if (pf && ff && pf->is_constant() && !ff->is_constant())
        return {verdict_false("powers of a constant stay constant"), 0};

    // integer-entry view: ring elements of (products of) Z, or constant
    // polynomials over them; any entry of absolute value >= 2 grows strictly
    auto entry_view = [](const Value& v) -> const RingValue* {
        if (auto* r = std::get_if<RingValue>(&v)) return r;
        if (auto* q = std::get_if<Poly>(&v); q && q->is_constant() && !q->is_zero())
            return &q->coeffs().front();
        return nullptr;
    };
    const RingValue* pr = entry_view(p);
    const RingValue* fr = entry_view(f);
    bool integer_entries =
        pr && fr && pr->payload.size() == fr->payload.size() &&
        (dynamic_cast<const ZRing*>(pr->ring) || dynamic_cast<const ParityRing*>(pr->ring) ||
         dynamic_cast<const ProductRing*>(pr->ring));

    std::vector<Value> seen;
    Value q = p;
    for (int n = 1; n <= cap; ++n) {
        if (value_equal(q, f)) return {verdict_true("exponent " + std::to_string(n)), n};
        for (const auto& s : seen)
            if (value_equal(s, q)) return {verdict_false("powers cycle without reaching f"), 0};
        seen.push_back(q);
        if (degree_monotone) {
            const Poly& qp = std::get<Poly>(q);
            int qd = qp.degree() ? *qp.degree() : 0;
            int fd = ff && ff->degree() ? *ff->degree() : -1;
            if (qd > fd) return {verdict_false("degrees of powers exceed deg f"), 0};
        }
        if (integer_entries) {
            if (const RingValue* qv = entry_view(q)) {
                bool all_small = true;
                bool outgrown = false;
                for (std::size_t i = 0; i < qv->payload.size(); ++i) {
                    if (pr->payload[i].abs() >= BigInt(2)) {
                        all_small = false;
                        if (qv->payload[i].abs() > fr->payload[i].abs()) outgrown = true;
                    }
                }
                if (outgrown)
                    return {verdict_false("an entry of the powers outgrew f"), 0};
                (void)all_small;  // entries in {0,+-1} cycle and are caught above
            }
        }
        q = S.mul(q, p);
    }
    return {verdict_unknown("exponent cap " + std::to_string(cap) + " exhausted"), 0};
}

namespace lpowdetail {

// A clause-3 refuter: g | f, g is not a unit, p does not divide g, all exact.
inline std::optional<std::string> check_refuter(const Structure& S, const Value& g, const Value& f,
                                                const Value& p, const Budget& budget,
                                                bool divides_known = false) {
    if (value_equal(g, S.zero())) return std::nullopt;
    if (!divides_known && S.divides(g, f, budget).tv != TV::True) return std::nullopt;
    if (S.is_unit(g, budget).tv != TV::False) return std::nullopt;
    if (S.divides(p, g, budget).tv != TV::False) return std::nullopt;
    return "divisor " + S.format(g) + " of " + S.format(f) + " is neither a unit nor a multiple of " +
           S.format(p);
}

// Streams candidate divisors g of f (with a divisibility witness where the
// enumeration provides one) to the callback; returns false from the callback
// to stop. Bounded work, deterministic order.
inline void for_each_divisor_candidate(const Structure& S, const Value& f, const Value& p,
                                       const Budget& budget,
                                       const std::function<bool(const Value&, bool)>& cb) {
    auto* ps = dynamic_cast<const PolyStructure*>(&S);
    if (!ps) {
        for (const auto& v : S.box(budget))
            if (!cb(v, false)) return;
        return;
    }
    const Ring& R = ps->base();
    const Poly& pp = std::get<Poly>(p);
    const Poly& fp = std::get<Poly>(f);
    // over a decomposable base a nontrivial idempotent yields the standard
    // divisor of v*x + r through the x |-> v*x + r automorphism
    if (auto e = R.nontrivial_idempotent(); e && pp.degree() && *pp.degree() == 1) {
        RingValue v = *pp.leading(), r = pp.coeff(0);
        Poly g = Poly::from_coeffs(R, {R.add(R.mul(*e, r), R.sub(R.one(), *e)), R.mul(*e, v)});
        if (!cb(Value(g), false)) return;
        Poly g2 =
            Poly::from_coeffs(R, {R.add(R.mul(R.sub(R.one(), *e), r), *e), R.mul(R.sub(R.one(), *e), v)});
        if (!cb(Value(g2), false)) return;
    }
    int fd = fp.degree() ? *fp.degree() : 0;
    if (R.descriptor().is_finite) {
        // factor-pair scan: one multiplication per candidate pair certifies
        // divisibility without a quotient search
        long long steps = 0;
        const long long cap = std::min(budget.step_limit, 500000ll);
        bool stopped = false;
        enumerate_polys(R, fd + budget.divisor_slack, R.elements(), [&](const Poly& g) {
            if (g.is_zero()) return true;
            enumerate_polys(R, fd + budget.nil_slack, R.elements(), [&](const Poly& q) {
                if (++steps > cap) {
                    stopped = true;
                    return false;
                }
                if (g * q == fp && !cb(Value(g), true)) {
                    stopped = true;
                    return false;
                }
                return true;
            });
            return !stopped;
        });
        return;
    }
    long long steps = 0;
    const long long cap = std::min(budget.step_limit, 50000ll);
    enumerate_polys(R, fd + budget.divisor_slack, R.box_elements(budget.coeff_bound), [&](const Poly& g) {
        if (++steps > cap) return false;
        if (g.is_zero()) return true;
        return cb(Value(g), false);
    });
}

}  // namespace lpowdetail

// Decides membership of f in lpow(p) = {h : p | h, p-1 | h-1, every divisor
// of h is a unit or a multiple of p}. Theorem-backed paths are exact; the
// rest is bounded evaluation with witness-assisted refutation.
inline LpowVerdict decide_lpow(const Structure& S, const Value& f, const Value& p,
                               const Budget& budget,
                               const std::optional<Value>& refuter_hint = std::nullopt) {
    // caller-supplied refuting divisor turns Unknown into exact False
    if (refuter_hint) {
        if (auto note = lpowdetail::check_refuter(S, *refuter_hint, f, p, budget))
            return {verdict_false(*note), {true, "witness-assisted refutation"}, std::nullopt};
    }

    // quantum plane: only p = x is supported, with right divisibility
    if (S.kind() == StructureKind::QPlane) {
        const QPlaneElement& pe = std::get<QPlaneElement>(p);
        if (auto k = qp_power_of_x(pe); k && *k == 1) {
            Verdict v = qp_decide_lpow_x(std::get<QPlaneElement>(f), budget);
            LpowVerdict out{v, {!v.is_unknown(), "quantum-plane-x-powers"}, std::nullopt};
            if (v.is_true()) {
                auto n = qp_power_of_x(std::get<QPlaneElement>(f));
                out.decomposition = {S.one(), n ? *n : 1};
            }
            return out;
        }
        return {verdict_unknown("only p = x is decided over quantum planes"),
                {false, "bounded"},
                std::nullopt};
    }

    // hot path for exhaustive scans: p = x over a reduced indecomposable base
    // whose one() is the all-ones payload; everything is decided through the
    // power shape of f without composing ring values
    if (S.kind() == StructureKind::Poly) {
        const Ring& R = static_cast<const PolyStructure&>(S).base();
        const auto& red = R.reduced_fact();
        const auto& ind = R.indecomposable_fact();
        if (R.descriptor().integer_diagonal && red && red->first && ind && ind->first) {
            auto payload_zero = [](const RingValue& v) {
                for (const auto& e : v.payload)
                    if (!e.is_zero()) return false;
                return true;
            };
            auto payload_one = [](const RingValue& v) {
                for (const auto& e : v.payload)
                    if (!e.is_one()) return false;
                return true;
            };
            const Poly& pp = std::get<Poly>(p);
            if (pp.coeffs().size() == 2 && payload_zero(pp.coeff(0)) && payload_one(pp.coeffs()[1])) {
                const Poly& fp = std::get<Poly>(f);
                if (fp.is_zero())
                    return {verdict_false("x is not a unit"), {true, "zero-logical-power"}, std::nullopt};
                const auto& cs = fp.coeffs();
                int d = static_cast<int>(cs.size()) - 1;
                bool is_power = d >= 1 && payload_one(cs.back());
                for (int i = 0; is_power && i < d; ++i)
                    if (!payload_zero(cs[static_cast<std::size_t>(i)])) is_power = false;
                if (!is_power)
                    return {verdict_false("not an x-power"), {true, "x-powers"}, std::nullopt};
                return {verdict_true("f = x^" + std::to_string(d)),
                        {true, "powers-equal-logical-powers-x"},
                        {{S.one(), d}}};
            }
        }
    }

    Value one = S.one();
    Value p_minus_1 = S.sub(p, one);

    // p a unit: lpow(p) = {(p-1)g + 1}, i.e. membership is p-1 | f-1
    if (S.is_unit(p, budget).is_true()) {
        Verdict d = S.divides(p_minus_1, S.sub(f, one), budget);
        if (d.is_true()) {
            // f = u * p with u = f * p^{-1}; (p-1) | (u-1) holds automatically
            LpowVerdict out{verdict_true("p is a unit and p-1 divides f-1: " + d.evidence),
                            {true, "unit-logical-powers"},
                            std::nullopt};
            if (auto pinv = S.try_invert(p, budget)) out.decomposition = {S.mul(f, *pinv), 1};
            return out;
        }
        if (d.is_false())
            return {verdict_false("p is a unit but p-1 does not divide f-1"),
                    {true, "unit-logical-powers"},
                    std::nullopt};
        return {d, {false, "bounded"}, std::nullopt};
    }

    // f = 0: membership forces p-1 (and, away from local rings, p) invertible
    if (value_equal(f, S.zero())) {
        if (S.is_unit(p_minus_1, budget).is_false())
            return {verdict_false("p-1 does not divide -1"), {true, "zero-logical-power"}, std::nullopt};
        if (auto* ps = dynamic_cast<const PolyStructure*>(&S)) {
            (void)ps;
            // x and x+1 are nonunits dividing 0, so p would have to divide 1
            return {verdict_false("p is not a unit, yet x and x+1 divide 0"),
                    {true, "zero-logical-power"},
                    std::nullopt};
        }
        if (S.is_finite()) {
            for (const auto& g : S.all_elements()) {
                if (S.is_unit(g, budget).is_true()) continue;
                if (S.divides(p, g, budget).is_true()) continue;
                return {verdict_false("divisor " + S.format(g) + " of 0 is neither a unit nor a multiple"),
                        {true, "zero-logical-power"},
                        std::nullopt};
            }
            return {verdict_true("all divisors of 0 are units or multiples of p (exhaustive)"),
                    {true, "zero-logical-power"},
                    std::nullopt};
        }
        return {verdict_unknown("zero membership undecided"), {false, "bounded"}, std::nullopt};
    }

    // finite ring structures: evaluate the three clauses exhaustively
    if (S.is_finite() && !dynamic_cast<const PolyStructure*>(&S)) {
        Verdict c1 = S.divides(p, f, budget);
        Verdict c2 = S.divides(p_minus_1, S.sub(f, one), budget);
        if (c1.is_false() || c2.is_false())
            return {verdict_false("a divisibility clause fails"), {true, "exhaustive"}, std::nullopt};
        for (const auto& g : S.all_elements()) {
            if (!S.divides(g, f, budget).is_true()) continue;
            if (S.is_unit(g, budget).is_true()) continue;
            if (S.divides(p, g, budget).is_true()) continue;
            return {verdict_false("divisor " + S.format(g) + " refutes the universal clause"),
                    {true, "exhaustive"},
                    std::nullopt};
        }
        return {verdict_true("exhaustive over all divisors"), {true, "exhaustive"}, std::nullopt};
    }

    auto* ps = dynamic_cast<const PolyStructure*>(&S);

    // f == p: membership reduces to irreducibility of p
    if (value_equal(f, p) && ps) {
        const Poly& pp = std::get<Poly>(p);
        if (pp == Poly::x(ps->base())) {
            Verdict irr = x_irreducible(ps->base(), budget);
            LpowVerdict out{irr, {!irr.is_unknown(), "x-irreducible-iff-indecomposable"}, std::nullopt};
            if (irr.is_true()) out.decomposition = {S.one(), 1};
            return out;
        }
        if (auto* fp = dynamic_cast<const FpZ2Ring*>(&ps->base())) {
            RingValue z = fp->generators()[0].second;
            if (pp == Poly::constant(z))
                return {verdict_true("the maximal-ideal generator is irreducible in R[x]"),
                        {true, "local-ring-zero-divisor"},
                        {{S.one(), 1}}};
        }
    }

    if (ps) {
        const Ring& R = ps->base();
        const Poly& pp = std::get<Poly>(p);
        const Poly& fp = std::get<Poly>(f);
        auto reduced = R.reduced_fact();
        auto indec = R.indecomposable_fact();

        // Parity-ring constants with a single prime entry: lpow = pow
        if (auto* par = dynamic_cast<const ParityRing*>(&R); par && pp.is_constant() && !pp.is_zero()) {
            RingValue c = pp.coeff(0);
            int nontrivial = -1;
            bool shape_ok = true;
            for (int i = 0; i < par->arity(); ++i) {
                if (c.payload[static_cast<std::size_t>(i)].is_one()) continue;
                if (nontrivial >= 0) shape_ok = false;
                nontrivial = i;
            }
            if (shape_ok && nontrivial >= 0) {
                BigInt entry = c.payload[static_cast<std::size_t>(nontrivial)].abs();
                bool prime = entry >= BigInt(2);
                for (BigInt d(2); prime && d * d <= entry; d += BigInt(1))
                    if (entry.divisible_by(d)) prime = false;
                bool unit_congruence = true;
                for (const auto& u : R.units()) {
                    if (R.divides(R.sub(c, R.one()), R.sub(u, R.one())).tv == TV::True && !is_one(u))
                        unit_congruence = false;
                }
                if (prime && unit_congruence && R.is_regular(c)) {
                    auto pw = decide_pow(S, f, p, budget.exp_cap);
                    if (pw.verdict.is_true())
                        return {verdict_true("f = p^" + std::to_string(pw.exponent) +
                                             "; prime-entry constants have lpow = pow"),
                                {true, "pair-ring-integers"},
                                {{S.one(), pw.exponent}}};
                    if (pw.verdict.is_false())
                        return {verdict_false("not a power of p, and lpow(p) = pow(p) here"),
                                {true, "pair-ring-integers"},
                                std::nullopt};
                    return {pw.verdict, {false, "bounded"}, std::nullopt};
                }
            }
        }

        // reduced base, nonconstant p with regular leading coefficient:
        // lpow(p) is contained in pow(p)
        if (reduced && reduced->first && !pp.is_constant() && R.is_regular(*pp.leading())) {
            auto pw = decide_pow(S, f, p, budget.exp_cap);
            if (pw.verdict.is_false())
                return {verdict_false("not a power of p: " + pw.verdict.evidence),
                        {true, "no-infinite-divisibility"},
                        std::nullopt};
            if (pw.verdict.is_unknown()) return {pw.verdict, {false, "bounded"}, std::nullopt};
            int n = pw.exponent;
            // f = p^n; the divisibility clauses hold identically, clause 3 is
            // the question
            bool linear_unit_lead = pp.degree() && *pp.degree() == 1 &&
                                    R.try_invert(*pp.leading()).has_value();
            if (indec && indec->first) {
                if (pp == Poly::x(R))
                    return {verdict_true("f = x^" + std::to_string(n) +
                                         " and powers of x are exactly its logical powers"),
                            {true, "powers-equal-logical-powers-x"},
                            {{S.one(), n}}};
                if (linear_unit_lead)
                    return {verdict_true("f = p^" + std::to_string(n) +
                                         " with p affine over a reduced indecomposable base"),
                            {true, "affine-generators-in-U"},
                            {{S.one(), n}}};
            }
            if (indec && !indec->first) {
                std::optional<std::string> found;
                lpowdetail::for_each_divisor_candidate(
                    S, f, p, budget, [&](const Value& g, bool certain) {
                        found = lpowdetail::check_refuter(S, g, f, p, budget, certain);
                        return !found.has_value();
                    });
                if (found) return {verdict_false(*found), {true, "reducible-generator"}, std::nullopt};
            }
        }
    }

    // bounded evaluation of the defining clauses with refuter search
    Verdict c1 = S.divides(p, f, budget);
    if (c1.is_false())
        return {verdict_false("p does not divide f: " + c1.evidence), {true, "divisibility-clause"},
                std::nullopt};
    Verdict c2 = S.divides(p_minus_1, S.sub(f, one), budget);
    if (c2.is_false())
        return {verdict_false("p-1 does not divide f-1: " + c2.evidence),
                {true, "divisibility-clause"},
                std::nullopt};
    std::optional<std::string> found;
    lpowdetail::for_each_divisor_candidate(S, f, p, budget, [&](const Value& g, bool certain) {
        found = lpowdetail::check_refuter(S, g, f, p, budget, certain);
        return !found.has_value();
    });
    if (found) return {verdict_false(*found), {true, "bounded refutation"}, std::nullopt};
    return {verdict_unknown("no refuting divisor in the search box; membership undecided"),
            {false, "bounded"},
            std::nullopt};
}

// Largest n <= cap with p^n | f (True verdicts only). InfiniteSuspected when
// p^cap still divides f.
struct MaxPowerVerdict {
    int exponent = 0;
    bool infinite_suspected = false;
};

inline MaxPowerVerdict structure_max_power(const Structure& S, const Value& p, const Value& f, int cap,
                                           const Budget& budget) {
    MaxPowerVerdict out;
    Value pk = p;
    for (int n = 1; n <= cap; ++n) {
        if (!S.divides(pk, f, budget).is_true()) return out;
        out.exponent = n;
        pk = S.mul(pk, p);
    }
    out.infinite_suspected = true;
    return out;
}

// --- the sets T and U of affine-like generators --------------------------------

struct TUVerdict {
    Verdict in_T;
    Verdict in_U;
    ExactnessClass cls;
};

inline TUVerdict decide_TU(const Structure& S, const Value& p, const Budget& budget) {
    Value one = S.one();
    if (value_equal(p, S.zero())) {
        auto v = verdict_false("0 is not irreducible");
        return {v, v, {true, "irreducibility-clause"}};
    }
    if (S.is_unit(p, budget).is_true()) {
        auto v = verdict_false("units are not irreducible");
        return {v, v, {true, "irreducibility-clause"}};
    }
    if (auto* ps = dynamic_cast<const PolyStructure*>(&S)) {
        const Ring& R = ps->base();
        const Poly& pp = std::get<Poly>(p);
        auto reduced = R.reduced_fact();
        auto indec = R.indecomposable_fact();
        if (reduced && reduced->first && indec && indec->first && pp.degree() && *pp.degree() == 1 &&
            R.try_invert(*pp.leading())) {
            auto v = verdict_true("p = v*x + r with v a unit over a reduced indecomposable base");
            return {v, v, {true, "affine-generators-in-U"}};
        }
        // a nontrivial factorization with exact nonunit checks refutes irreducibility
        std::optional<Verdict> refuted;
        int pd = pp.degree() ? *pp.degree() : 0;
        if (R.descriptor().is_finite) {
            long long steps = 0;
            const long long cap = std::min(budget.step_limit, 300000ll);
            bool stop = false;
            enumerate_polys(R, pd + budget.divisor_slack, R.elements(), [&](const Poly& g) {
                if (g.is_zero()) return true;
                enumerate_polys(R, pd + budget.nil_slack, R.elements(), [&](const Poly& q) {
                    if (++steps > cap) {
                        stop = true;
                        return false;
                    }
                    if (g * q != pp) return true;
                    if (poly_is_unit(g, budget).tv != TV::False) return true;
                    if (poly_is_unit(q, budget).tv != TV::False) return true;
                    refuted = verdict_false("p = (" + g.format() + ")*(" + q.format() + ")");
                    stop = true;
                    return false;
                });
                return !stop && !refuted;
            });
        } else {
            long long steps = 0;
            const long long cap = std::min(budget.step_limit, 50000ll);
            enumerate_polys(R, pd + budget.divisor_slack, R.box_elements(budget.coeff_bound),
                            [&](const Poly& g) {
                                if (++steps > cap) return false;
                                if (g.is_zero() || g.is_constant()) return true;
                                auto dv = poly_divides(g, pp, budget);
                                if (dv.tv != TV::True) return true;
                                if (poly_is_unit(g, budget).tv != TV::False) return true;
                                if (poly_is_unit(*dv.quotient, budget).tv != TV::False) return true;
                                refuted = verdict_false("p = (" + g.format() + ")*(" +
                                                        dv.quotient->format() + ")");
                                return false;
                            });
        }
        if (refuted) return {*refuted, *refuted, {true, "irreducibility-clause"}};
    }
    auto v = verdict_unknown("membership in T/U undecided within the search budget");
    return {v, v, {false, "bounded"}};
}

}  // namespace defpow

#endif
