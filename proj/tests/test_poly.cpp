#include "doctest.h"

#include <random>

#include "defpow/poly.hpp"

using namespace defpow;

namespace {

Poly ipoly(const Ring& R, std::vector<long long> coeffs) {
    std::vector<RingValue> c;
    for (auto v : coeffs) c.push_back(R.from_int(BigInt(v)));
    return Poly::from_coeffs(R, std::move(c));
}

Poly random_poly(const Ring& R, int max_deg, std::mt19937& rng) {
    auto elems = R.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> degd(0, max_deg);
    int d = degd(rng);
    std::vector<RingValue> c;
    for (int i = 0; i <= d; ++i) c.push_back(elems[pick(rng)]);
    return Poly::from_coeffs(R, std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto Z = build_ring("int");
    Poly lhs = ipoly(*Z, {-1, 1}) * ipoly(*Z, {1, 1, 1});
    CHECK(lhs == ipoly(*Z, {-1, 0, 0, 1}));  // (x-1)(x^2+x+1) = x^3-1

    auto Z4 = build_ring("zmod:4");
    CHECK(ipoly(*Z4, {1, 2}) * ipoly(*Z4, {1, -2}) == ipoly(*Z4, {1}));

    auto Z2t = build_ring("z2t");
    RingValue t = Z2t->generators()[0].second;
    Poly f = Poly::from_coeffs(*Z2t, {Z2t->zero(), t, t});  // t*(x^2 + x)
    CHECK(is_zero(f.eval(Z2t->from_int(3))));
    CHECK(is_zero(f.eval(Z2t->from_int(-2))));
    CHECK(!f.is_zero());

    CHECK(!ipoly(*Z, {}).degree().has_value());
    CHECK(*ipoly(*Z, {7}).degree() == 0);
    CHECK(*lhs.degree() == 3);
}

TEST_CASE("evaluation is a ring homomorphism in the polynomial argument") {
    auto P = build_ring("parity2");
    std::mt19937 rng(7);
    auto box = P->box_elements(2);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RingValue> ca, cb;
        for (int i = 0; i < 3; ++i) {
            ca.push_back(box[pick(rng)]);
            cb.push_back(box[pick(rng)]);
        }
        Poly f = Poly::from_coeffs(*P, ca), g = Poly::from_coeffs(*P, cb);
        RingValue at = box[pick(rng)];
        CHECK((f + g).eval(at) == P->add(f.eval(at), g.eval(at)));
        CHECK((f * g).eval(at) == P->mul(f.eval(at), g.eval(at)));
    }
}

TEST_CASE("poly divisibility over the integers and fields") {
    auto Z = build_ring("int");
    Budget budget;
    auto d = poly_divides(ipoly(*Z, {-1, 1}), ipoly(*Z, {-1, 0, 0, 1}), budget);
    CHECK(d.tv == TV::True);
    CHECK(*d.quotient == ipoly(*Z, {1, 1, 1}));
    CHECK(poly_divides(ipoly(*Z, {0, 2}), ipoly(*Z, {0, 1}), budget).tv == TV::False);
    CHECK(poly_divides(ipoly(*Z, {0, 1}), ipoly(*Z, {1, 1}), budget).tv == TV::False);
    CHECK(poly_divides(ipoly(*Z, {2}), ipoly(*Z, {4, 6}), budget).tv == TV::True);
    CHECK(poly_divides(ipoly(*Z, {2}), ipoly(*Z, {4, 5}), budget).tv == TV::False);

    auto F5 = build_ring("zmod:5");
    auto df = poly_divides(ipoly(*F5, {1, 2}), ipoly(*F5, {1, 2}) * ipoly(*F5, {3, 1, 4}), budget);
    CHECK(df.tv == TV::True);
    CHECK(*df.quotient == ipoly(*F5, {3, 1, 4}));
}

TEST_CASE("poly divisibility over Z/4 via bounded exhaustive search") {
    auto Z4 = build_ring("zmod:4");
    Budget budget;
    Poly g = ipoly(*Z4, {1, 2});
    Poly one = ipoly(*Z4, {1});
    auto d = poly_divides(g, one, 1, budget);
    REQUIRE(d.tv == TV::True);
    CHECK(g * *d.quotient == one);

    // oracle: independent scan of all quotients of degree <= 1
    bool found = false;
    for (const auto& a : Z4->elements())
        for (const auto& b : Z4->elements())
            if (g * Poly::from_coeffs(*Z4, {a, b}) == one) found = true;
    CHECK(found);

    CHECK(poly_divides(ipoly(*Z4, {0, 1}), one, 3, budget).tv == TV::False);
}

TEST_CASE("poly divisibility over parity rings") {
    auto P = build_ring("parity2");
    Budget budget;
    Poly x = Poly::x(*P);
    CHECK(poly_divides(x, x * x, budget).tv == TV::True);

    // forced quotient parities that disagree across entries refute divisibility
    Poly g = Poly::monomial(P->from_tuple({BigInt(2), BigInt(4)}), 1);
    Poly f = Poly::monomial(P->from_tuple({BigInt(2), BigInt(8)}), 2);
    CHECK(poly_divides(g, f, budget).tv == TV::False);

    // a zero component in the divisor forces a zero component in the dividend
    Poly g2 = Poly::constant(P->from_tuple({BigInt(2), BigInt(0)}));
    Poly f2 = Poly::monomial(P->from_tuple({BigInt(6), BigInt(2)}), 1);
    CHECK(poly_divides(g2, f2, budget).tv == TV::False);
    Poly f3 = Poly::monomial(P->from_tuple({BigInt(6), BigInt(0)}), 1);
    auto d3 = poly_divides(g2, f3, budget);
    CHECK(d3.tv == TV::True);
    CHECK(g2 * *d3.quotient == f3);

    // randomized round trip: f = g*h must divide back with some valid quotient
    std::mt19937 rng(2024);
    auto box = P->box_elements(2);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<RingValue> cg, ch;
        for (int i = 0; i < 2; ++i) cg.push_back(box[pick(rng)]);
        for (int i = 0; i < 3; ++i) ch.push_back(box[pick(rng)]);
        Poly gg = Poly::from_coeffs(*P, cg);
        Poly hh = Poly::from_coeffs(*P, ch);
        if (gg.is_zero()) continue;
        auto dv = poly_divides(gg, gg * hh, budget);
        REQUIRE(dv.tv == TV::True);
        CHECK(gg * *dv.quotient == gg * hh);
    }
}

TEST_CASE("max power dividing") {
    auto Z = build_ring("int");
    Budget budget;
    Poly x = Poly::x(*Z);
    auto r = max_power_dividing(x, ipoly(*Z, {0, 0, 1, 1}), 8, budget);
    CHECK(r.exponent == 2);
    CHECK(!r.infinite_suspected);
    CHECK(max_power_dividing(x, ipoly(*Z, {5}), 8, budget).exponent == 0);

    auto ZZ = build_ring("zxz");
    Poly e = Poly::constant(ZZ->from_tuple({BigInt(1), BigInt(0)}));
    auto ri = max_power_dividing(e, e, 8, budget);
    CHECK(ri.infinite_suspected);
}

TEST_CASE("irreducibility of x") {
    Budget budget;
    CHECK(x_irreducible(*build_ring("int"), budget).is_true());
    CHECK(x_irreducible(*build_ring("zmod:4"), budget).is_true());

    auto v = x_irreducible(*build_ring("zxz"), budget);
    CHECK(v.is_false());
    CHECK(v.evidence.find("(1,0)") != std::string::npos);

    // finite rings: the linear-pair search must agree with indecomposability
    for (const auto& spec :
         {std::string("zmod:2"), std::string("zmod:6"), std::string("zmod:9"), std::string("bool:2"),
          std::string("fpz2:3"), std::string("trunc:2")}) {
        auto R = build_ring(spec);
        CHECK_MESSAGE(x_irreducible(*R, budget).is_true() == check_indecomposable(*R).is_true(), spec);
    }
}

TEST_CASE("polynomial units") {
    Budget budget;
    auto Z = build_ring("int");
    CHECK(poly_is_unit(ipoly(*Z, {-1}), budget).is_true());
    CHECK(poly_is_unit(ipoly(*Z, {1, 1}), budget).is_false());
    CHECK(poly_is_unit(ipoly(*Z, {}), budget).is_false());

    auto Z4 = build_ring("zmod:4");
    CHECK(poly_is_unit(ipoly(*Z4, {1, 2}), budget).is_true());
    CHECK(poly_is_unit(ipoly(*Z4, {2, 2}), budget).is_false());
    CHECK(poly_is_unit(ipoly(*Z4, {1, 1}), budget).is_false());

    auto P = build_ring("parity2");
    CHECK(poly_is_unit(Poly::constant(P->from_tuple({BigInt(1), BigInt(-1)})), budget).is_true());
    CHECK(poly_is_unit(Poly::x(*P), budget).is_false());
}

TEST_CASE("divisors of higher degree annihilate via a power of their leading coefficient") {
    std::mt19937 rng(99);
    for (const auto& spec : {std::string("zmod:4"), std::string("trunc:2")}) {
        auto R = build_ring(spec);
        int applicable = 0;
        for (int trial = 0; trial < 400; ++trial) {
            Poly g = random_poly(*R, 3, rng);
            Poly h = random_poly(*R, 2, rng);
            Poly f = g * h;
            if (g.is_zero() || h.is_zero() || f.is_zero()) continue;
            if (!g.degree() || !f.degree() || *g.degree() <= *f.degree()) continue;
            ++applicable;
            int k = *h.degree();
            RingValue gm = *g.leading();
            RingValue ann = R->one();
            for (int i = 0; i <= k; ++i) ann = R->mul(ann, gm);
            Poly prod = Poly::constant(ann) * f;
            CHECK_MESSAGE(prod.is_zero(), spec);
        }
        CHECK(applicable > 5);
    }
}

TEST_CASE("trailing coefficient bound for powers of x dividing a product") {
    std::mt19937 rng(123);
    auto Z4 = build_ring("zmod:4");
    for (int trial = 0; trial < 300; ++trial) {
        Poly g = random_poly(*Z4, 3, rng);
        Poly h = random_poly(*Z4, 3, rng);
        Poly f = g * h;
        int r = 0;
        while (r <= 8 && is_zero(f.coeff(r)) && !f.is_zero()) ++r;
        if (f.is_zero()) continue;
        // x^r divides gh, so x^r divides g0^r * h
        RingValue g0r = Z4->one();
        for (int i = 0; i < r; ++i) g0r = Z4->mul(g0r, g.coeff(0));
        Poly scaled = Poly::constant(g0r) * h;
        for (int i = 0; i < r; ++i) CHECK(is_zero(scaled.coeff(i)));
    }
    // x^r = gh forces g0^r = g0^{r+1} h_r
    Poly g = ipoly(*Z4, {1, 2});
    Poly h = ipoly(*Z4, {0, 0, 1, -2});  // (1+2x)(x^2-2x^3) = x^2
    Poly f = g * h;
    REQUIRE(f == ipoly(*Z4, {0, 0, 1}));
    int r = 2;
    RingValue g0r = Z4->one(), g0r1 = Z4->one();
    for (int i = 0; i < r; ++i) g0r = Z4->mul(g0r, g.coeff(0));
    for (int i = 0; i <= r; ++i) g0r1 = Z4->mul(g0r1, g.coeff(0));
    CHECK(g0r == Z4->mul(g0r1, h.coeff(r)));
}

TEST_CASE("constant units characterize reduced finite base rings") {
    Budget budget;
    for (const auto& spec : {std::string("zmod:4"), std::string("zmod:5"), std::string("zmod:6"),
                             std::string("zmod:9"), std::string("fpz2:2"), std::string("trunc:2"),
                             std::string("bool:2")}) {
        auto R = build_ring(spec);
        bool reduced = check_reduced(*R).is_true();

        // nonconstant unit found by a pair scan up to degree 2 <=> not reduced
        bool nonconstant_unit = false;
        std::vector<Poly> polys;
        enumerate_polys(*R, 2, R->elements(), [&](const Poly& p) {
            polys.push_back(p);
            return true;
        });
        Poly one = Poly::constant(R->one());
        for (const auto& a : polys) {
            if (a.is_constant()) continue;
            for (const auto& b : polys) {
                if (a * b == one) nonconstant_unit = true;
            }
        }
        CHECK_MESSAGE(nonconstant_unit == !reduced, spec);

        // nonzero nilpotent polynomial of degree <= 2 <=> not reduced
        bool nilpotent_poly = false;
        for (const auto& p : polys) {
            if (p.is_zero()) continue;
            Poly q = p;
            for (int i = 0; i < 4; ++i) q = q * p;
            if (q.is_zero()) nilpotent_poly = true;
        }
        CHECK_MESSAGE(nilpotent_poly == !reduced, spec);
    }
}

TEST_CASE("idempotent polynomials are constant") {
    for (const auto& spec : {std::string("zmod:4"), std::string("zmod:6"), std::string("bool:2"),
                             std::string("fpz2:2"), std::string("trunc:1")}) {
        auto R = build_ring(spec);
        enumerate_polys(*R, 2, R->elements(), [&](const Poly& e) {
            if (e * e == e) {
                CHECK_MESSAGE(e.is_constant(), spec);
                if (!e.is_zero()) CHECK(is_idempotent(e.coeff(0)));
            }
            return true;
        });
    }
}

TEST_CASE("polybox enumeration is deterministic, by degree then lexicographic") {
    auto Z = build_ring("int");
    std::vector<std::string> first;
    enumerate_polys(*Z, 1, Z->box_elements(1), [&](const Poly& p) {
        first.push_back(p.format());
        return first.size() < 8;
    });
    // box order over int is 0, 1, -1; low-degree coefficient index is most significant
    std::vector<std::string> expect{"0", "1", "-1", "x", "-x", "1 + x", "1 - x", "-1 + x"};
    CHECK(first == expect);
}
