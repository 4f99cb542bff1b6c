#include "doctest.h"

#include "defpow/named_formulas.hpp"

using namespace defpow;

namespace {

Poly ipoly(const Ring& R, std::vector<long long> coeffs) {
    std::vector<RingValue> c;
    for (auto v : coeffs) c.push_back(R.from_int(BigInt(v)));
    return Poly::from_coeffs(R, std::move(c));
}

}  // namespace

TEST_CASE("decide_lpow agrees with direct evaluation of the defining formula on finite rings") {
    Budget budget;
    for (const auto& spec : {std::string("zmod:4"), std::string("zmod:6"), std::string("fpz2:2"),
                             std::string("bool:2"), std::string("trunc:1")}) {
        auto S = build_structure(spec);
        auto elems = S->all_elements();
        for (const auto& p : elems) {
            for (const auto& f : elems) {
                auto procedural = decide_lpow(*S, f, p, budget);
                Formula psi = psi_formula(t_lit(f), t_lit(p));
                auto semantic = eval_formula(*S, psi, budget);
                REQUIRE(!procedural.verdict.is_unknown());
                REQUIRE(!semantic.verdict.is_unknown());
                CHECK_MESSAGE(procedural.verdict.tv == semantic.verdict.tv,
                              (spec + ": f = " + S->format(f) + ", p = " + S->format(p)));
            }
        }
    }
}

TEST_CASE("oracle-set quantifier domains guard candidates") {
    auto S = build_structure("poly:int");
    Budget budget;
    // x is in U and equals x: the guarded existential closes exactly
    Formula ex = parse_formula_text(*S, "exists p in U . p = x", nullptr, &default_oracle_names());
    auto r = eval_formula(*S, ex, budget, &default_oracles());
    CHECK(r.verdict.is_true());
    REQUIRE(r.assignment.size() == 1);
    CHECK(value_equal(r.assignment[0].second, Value(Poly::x(*build_ring("int")))));

    // a universal over an incomplete oracle set stays open
    Formula fa = parse_formula_text(*S, "forall p in U . p | p*x", nullptr, &default_oracle_names());
    CHECK(eval_formula(*S, fa, budget, &default_oracles()).verdict.is_unknown());
}

TEST_CASE("exhausted step budgets surface as Unknown, never as a verdict") {
    auto S = build_structure("zmod:6");
    Budget tiny;
    tiny.step_limit = 3;
    Formula f = parse_formula_text(*S, "forall a . forall b . a*b = b*a");
    auto r = eval_formula(*S, f, tiny);
    CHECK(r.verdict.is_unknown());
    CHECK(r.verdict.budget_note.find("budget") != std::string::npos);
}

TEST_CASE("documented error conditions") {
    Budget budget;
    auto Z = build_ring("int");
    CHECK_THROWS_AS((void)poly_divides(Poly::x(*Z), Poly::x(*Z), -1, budget), BadBoundError);
    CHECK_THROWS_AS((void)decide_pow(*build_structure("int"), Value(Z->one()), Value(Z->one()), 0),
                    BadBoundError);
    auto SP = build_structure("poly:int");
    CHECK_THROWS_AS((void)build_beta(*SP, t_var("t")), BadRingError);
    auto SZ = build_structure("zmod:4");
    CHECK_THROWS_AS((void)build_beta(*SZ, t_var("t")), BadRingError);
}

TEST_CASE("zero-divisor divisibility over the torsion polynomial base stays bounded") {
    // no decision procedure is claimed here: searches answer True with a
    // witness or Unknown, never a bare False
    auto R = build_ring("z2t");
    Budget budget;
    RingValue t = R->generators()[0].second;
    Poly tx = Poly::monomial(t, 1);
    Poly tc = Poly::constant(t);
    auto d = poly_divides(tx, tc, budget);
    CHECK(d.tv == TV::Unknown);

    // constructed products always divide back with a verified witness
    Poly f = tx * ipoly(*R, {1, 2});
    auto dv = poly_divides(tx, f, budget);
    REQUIRE(dv.tv == TV::True);
    CHECK(tx * *dv.quotient == f);
}

TEST_CASE("the extraction formula evaluates through the generic evaluator for small exponents") {
    auto S = build_structure("poly:int");
    Budget budget;
    // Lp(t, x) with A = S only pins t modulo x - 1
    Formula l2 = parse_formula_text(*S, "Lp(2, x)", &default_macros(), &default_oracle_names());
    auto r2 = eval_formula(*S, l2, budget, &default_oracles());
    CHECK(r2.verdict.is_true());
    Formula l0 = parse_formula_text(*S, "Lp(0, x)", &default_macros(), &default_oracle_names());
    CHECK(!eval_formula(*S, l0, budget, &default_oracles()).verdict.is_true());
}
