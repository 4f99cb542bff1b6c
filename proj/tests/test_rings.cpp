#include "doctest.h"

#include <set>

#include "defpow/catalog.hpp"
#include "defpow/ring.hpp"

using namespace defpow;

namespace {

RingValue tup(const Ring& r, std::vector<long long> entries) {
    std::vector<BigInt> p;
    for (auto e : entries) p.push_back(BigInt(e));
    return r.from_tuple(p);
}

const std::vector<std::string> finite_specs = {
    "zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:6", "zmod:12",
    "bool:1", "bool:3", "fpz2:2", "fpz2:3", "fpz2:5", "trunc:1", "trunc:2",
};

const std::vector<std::string> infinite_specs = {
    "int", "zxz", "parity2", "parityk", "z2t", "quot:2(t-1),t2-1", "prod:int,zmod:4",
};

}  // namespace

TEST_CASE("basic arithmetic on catalog rings") {
    auto Z = build_ring("int");
    CHECK(Z->add(Z->from_int(2), Z->from_int(3)) == Z->from_int(5));

    auto Z4 = build_ring("zmod:4");
    CHECK(Z4->mul(Z4->from_int(2), Z4->from_int(2)) == Z4->zero());

    auto P = build_ring("parity2");
    CHECK(P->mul(tup(*P, {2, 2}), tup(*P, {3, 1})) == tup(*P, {6, 2}));

    CHECK_THROWS_AS((void)Z->add(Z->one(), Z4->one()), MixedRingError);
}

TEST_CASE("unit tests with inverse witnesses") {
    auto Z = build_ring("int");
    CHECK(is_unit(Z->from_int(-1)).is_true());
    CHECK(is_unit(Z->from_int(2)).is_false());

    auto Z4 = build_ring("zmod:4");
    auto inv3 = Z4->try_invert(Z4->from_int(3));
    REQUIRE(inv3.has_value());
    CHECK(*inv3 == Z4->from_int(3));

    auto P = build_ring("parity2");
    CHECK(is_unit(tup(*P, {1, -1})).is_true());
    CHECK(is_unit(tup(*P, {3, 1})).is_false());
}

TEST_CASE("divisibility with quotient witnesses") {
    auto Z = build_ring("int");
    auto d = Z->divides(Z->from_int(3), Z->from_int(24));
    CHECK(d.tv == TV::True);
    CHECK(*d.quotient == Z->from_int(8));
    CHECK(Z->divides(Z->zero(), Z->from_int(5)).tv == TV::False);
    CHECK(Z->divides(Z->zero(), Z->zero()).tv == TV::True);

    auto Z4 = build_ring("zmod:4");
    auto d2 = Z4->divides(Z4->from_int(2), Z4->from_int(2));
    CHECK(d2.tv == TV::True);
    CHECK(Z4->mul(Z4->from_int(2), *d2.quotient) == Z4->from_int(2));
}

TEST_CASE("idempotents and square-zero elements") {
    auto Z6 = build_ring("zmod:6");
    CHECK(is_idempotent(Z6->from_int(3)));
    auto Z4 = build_ring("zmod:4");
    CHECK(square_is_zero(Z4->from_int(2)));
    auto Z = build_ring("int");
    CHECK(!is_idempotent(Z->from_int(2)));
}

TEST_CASE("reduced and indecomposable checks") {
    auto Z4 = build_ring("zmod:4");
    auto red = check_reduced(*Z4);
    CHECK(red.is_false());
    CHECK(red.evidence.find("2") != std::string::npos);
    CHECK(check_indecomposable(*Z4).is_true());

    auto P = build_ring("parity2");
    CHECK(check_reduced(*P).is_true());
    CHECK(check_indecomposable(*P).is_true());

    auto B3 = build_ring("bool:3");
    CHECK(check_reduced(*B3).is_true());
    auto ind = check_indecomposable(*B3);
    CHECK(ind.is_false());
    CHECK(ind.evidence.find("(1,0,0)") != std::string::npos);
}

TEST_CASE("check_reduced matches the square-zero scan on every finite ring") {
    for (const auto& spec : finite_specs) {
        auto R = build_ring(spec);
        bool has_sq_zero = false;
        for (const auto& v : R->elements())
            if (!is_zero(v) && square_is_zero(v)) has_sq_zero = true;
        CHECK_MESSAGE(check_reduced(*R).is_true() == !has_sq_zero, spec);

        bool has_idem = false;
        for (const auto& v : R->elements())
            if (!is_zero(v) && !is_one(v) && is_idempotent(v)) has_idem = true;
        CHECK_MESSAGE(check_indecomposable(*R).is_true() == !has_idem, spec);
    }
}

TEST_CASE("ring axioms: exhaustive on small finite rings, sampled otherwise") {
    for (const auto& spec : {std::string("zmod:6"), std::string("trunc:2"), std::string("fpz2:3"),
                             std::string("parity2"), std::string("z2t"), std::string("quot:2(t-1),t2-1")}) {
        auto R = build_ring(spec);
        auto sample = R->descriptor().is_finite ? R->elements() : R->box_elements(2);
        if (sample.size() > 20) sample.resize(20);
        for (const auto& a : sample) {
            CHECK(R->add(a, R->zero()) == a);
            CHECK(R->mul(a, R->one()) == a);
            CHECK(R->add(a, R->neg(a)) == R->zero());
            for (const auto& b : sample) {
                CHECK(R->add(a, b) == R->add(b, a));
                CHECK(R->mul(a, b) == R->mul(b, a));
                for (const auto& c : sample) {
                    CHECK(R->add(R->add(a, b), c) == R->add(a, R->add(b, c)));
                    CHECK(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)));
                    CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("declared characteristics are minimal") {
    for (const auto& spec : finite_specs) {
        auto R = build_ring(spec);
        CHECK_MESSAGE(characteristic_matches(*R, R->descriptor().characteristic), spec);
    }
    CHECK(build_ring("parity2")->descriptor().characteristic == 0);
    CHECK(build_ring("prod:int,zmod:4")->descriptor().characteristic == 0);
    CHECK(build_ring("bool:3")->descriptor().characteristic == 2);
}

TEST_CASE("catalog entries round-trip through their spec strings") {
    for (const auto& spec : finite_specs) CHECK(build_ring(spec)->id() == spec);
    for (const auto& spec : {std::string("int"), std::string("parity2"), std::string("parityk:3"),
                             std::string("z2t"), std::string("quot:2(t-1),t2-1"),
                             std::string("prod:int,zmod:4")}) {
        CHECK(build_ring(spec)->id() == spec);
    }
    CHECK(build_ring("zxz")->id() == "prod:int,int");
    CHECK(build_ring("zxz").get() == build_ring("prod:int,int").get());
    CHECK(build_ring("parityk")->id() == "parityk:3");
    CHECK_THROWS_AS((void)build_ring("zmod:1"), BadSpecError);
    CHECK_THROWS_AS((void)build_ring("nope"), BadSpecError);
    CHECK_THROWS_AS((void)build_ring("fpz2:4"), BadSpecError);
}

TEST_CASE("parity ring division handles zero entries and parity feasibility") {
    auto P = build_ring("parity2");
    auto d = P->divides(tup(*P, {2, 2}), tup(*P, {6, 2}));
    CHECK(d.tv == TV::True);
    CHECK(*d.quotient == tup(*P, {3, 1}));

    // divisor with a zero entry: dividend entry must vanish, free slot takes the shared parity
    auto d2 = P->divides(tup(*P, {2, 0}), tup(*P, {6, 0}));
    CHECK(d2.tv == TV::True);
    CHECK(P->mul(tup(*P, {2, 0}), *d2.quotient) == tup(*P, {6, 0}));
    CHECK(P->divides(tup(*P, {2, 0}), tup(*P, {6, 2})).tv == TV::False);
    CHECK(P->divides(tup(*P, {2, 4}), tup(*P, {2, 8})).tv == TV::False);  // quotients 1 and 2 disagree

    // oracle: exhaustive small box agreement with the closed-form divides
    auto box = P->box_elements(3);
    for (const auto& a : box) {
        for (const auto& b : box) {
            bool found = false;
            for (const auto& q : P->box_elements(6)) {
                if (P->mul(a, q) == b) {
                    found = true;
                    break;
                }
            }
            auto dv = P->divides(a, b);
            if (found) CHECK(dv.tv == TV::True);
            if (dv.tv == TV::True) CHECK(P->mul(a, *dv.quotient) == b);
        }
    }
}

TEST_CASE("parity units are exactly the sign tuples") {
    auto P = build_ring("parity2");
    std::set<RingValue> expect{tup(*P, {1, 1}), tup(*P, {1, -1}), tup(*P, {-1, 1}), tup(*P, {-1, -1})};
    std::set<RingValue> got;
    for (auto& u : P->units()) {
        got.insert(u);
        CHECK(is_unit(u).is_true());
    }
    CHECK(got == expect);
    // oracle: scan a box for solutions of u*v = 1
    std::set<RingValue> scanned;
    for (const auto& u : P->box_elements(4))
        for (const auto& v : P->box_elements(4))
            if (P->mul(u, v) == P->one()) scanned.insert(u);
    CHECK(scanned == expect);
}

TEST_CASE("z2t arithmetic and units") {
    auto R = build_ring("z2t");
    RingValue t = R->generators()[0].second;
    CHECK(R->format(t) == "t");
    CHECK(R->mul(R->from_int(2), t) == R->zero());                    // 2t = 0
    CHECK(R->mul(t, t) == R->make({BigInt(0), BigInt(0), BigInt(1)}));  // t^2
    CHECK(R->add(t, t) == R->zero());

    // units by brute force over truncated forms, frozen expectation {1, -1}
    std::set<RingValue> units_scanned;
    for (const auto& u : R->box_elements(4))
        for (const auto& v : R->box_elements(4))
            if (R->mul(u, v) == R->one()) units_scanned.insert(u);
    std::set<RingValue> expect{R->one(), R->from_int(-1)};
    CHECK(units_scanned == expect);
    auto unit_list = R->units();
    std::set<RingValue> declared(unit_list.begin(), unit_list.end());
    CHECK(declared == expect);

    // division: exact results cross-checked against a box search
    auto box = R->box_elements(3);
    for (const auto& a : box) {
        for (const auto& b : box) {
            auto dv = R->divides(a, b);
            if (dv.tv == TV::True) CHECK(R->mul(a, *dv.quotient) == b);
            bool found = false;
            for (const auto& q : R->box_elements(5)) {
                if (R->mul(a, q) == b) {
                    found = true;
                    break;
                }
            }
            if (found) CHECK(dv.tv == TV::True);
        }
    }
    CHECK(R->divides(R->from_int(2), t).tv == TV::False);
    CHECK(R->is_regular(R->from_int(3)));
    CHECK(!R->is_regular(R->from_int(2)));
    CHECK(!R->is_regular(t));
    CHECK(R->is_regular(R->add(R->from_int(2), t)));
}

TEST_CASE("quot ring: canonical forms, nilpotent t-1, units") {
    auto R = build_ring("quot:2(t-1),t2-1");
    RingValue t = R->generators()[0].second;
    RingValue pm1 = R->sub(t, R->one());
    CHECK(R->mul(t, t) == R->one());                 // t^2 = 1
    CHECK(R->mul(pm1, pm1) == R->zero());            // (t-1)^2 = 0
    CHECK(!is_zero(pm1));
    CHECK(R->mul(R->from_int(2), pm1) == R->zero()); // 2(t-1) = 0
    CHECK(R->make({BigInt(1), BigInt(2)}) == R->from_int(3));  // 2t = 2

    // divides(t-1, -1) is False; cross-checked by exhaustive search
    CHECK(R->divides(pm1, R->from_int(-1)).tv == TV::False);
    for (const auto& q : R->box_elements(8)) CHECK(R->mul(pm1, q) != R->from_int(-1));

    // (t-1)g + 1 only reaches 1 and t
    std::set<RingValue> reach;
    for (const auto& g : R->box_elements(6)) reach.insert(R->add(R->mul(pm1, g), R->one()));
    CHECK(reach == std::set<RingValue>{R->one(), t});

    std::set<RingValue> units_scanned;
    for (const auto& u : R->box_elements(4))
        for (const auto& v : R->box_elements(4))
            if (R->mul(u, v) == R->one()) units_scanned.insert(u);
    auto unit_list = R->units();
    std::set<RingValue> declared(unit_list.begin(), unit_list.end());
    CHECK(units_scanned == declared);
    CHECK(declared.size() == 4);
    for (const auto& u : R->units()) CHECK(R->is_regular(u));
    CHECK(!R->is_regular(pm1));
    CHECK(!R->is_regular(R->from_int(2)));
}

TEST_CASE("fpz2: dual numbers over a prime field") {
    auto R = build_ring("fpz2:5");
    RingValue z = R->generators()[0].second;
    CHECK(square_is_zero(z));
    CHECK(R->divides(z, z).tv == TV::True);
    for (const auto& v : R->elements()) {
        bool unit = is_unit(v).is_true();
        CHECK(unit == !v.payload[0].is_zero());
        if (unit) {
            auto inv = R->try_invert(v);
            CHECK(R->mul(v, *inv) == R->one());
        }
    }
}

TEST_CASE("divides is reflexive and respects sums and transitivity on True verdicts") {
    for (const auto& spec : {std::string("zmod:6"), std::string("parity2"), std::string("z2t"),
                             std::string("quot:2(t-1),t2-1"), std::string("trunc:2")}) {
        auto R = build_ring(spec);
        auto sample = R->descriptor().is_finite ? R->elements() : R->box_elements(2);
        if (sample.size() > 14) sample.resize(14);
        for (const auto& a : sample) {
            CHECK(R->divides(a, a).tv == TV::True);
            for (const auto& b : sample) {
                auto ab = R->divides(a, b);
                for (const auto& c : sample) {
                    auto ac = R->divides(a, c);
                    if (ab.tv == TV::True && ac.tv == TV::True)
                        CHECK(R->divides(a, R->add(b, c)).tv == TV::True);
                    auto bc = R->divides(b, c);
                    if (ab.tv == TV::True && bc.tv == TV::True)
                        CHECK(R->divides(a, c).tv == TV::True);
                }
            }
        }
    }
}

TEST_CASE("stationary power divisibility forces zero-or-unit on finite reduced indecomposable rings") {
    for (const auto& spec : finite_specs) {
        auto R = build_ring(spec);
        if (!check_reduced(*R).is_true() || !check_indecomposable(*R).is_true()) continue;
        // such rings must be fields, and powers of other elements stay distinct
        for (const auto& c : R->elements()) {
            CHECK((is_zero(c) || is_unit(c).is_true()));
            RingValue p = c;
            for (int m = 0; m <= 4; ++m) {
                RingValue next = R->mul(p, c);
                if (R->divides(next, p).tv == TV::True)
                    CHECK((is_zero(c) || is_unit(c).is_true()));
                p = next;
            }
        }
    }
}
