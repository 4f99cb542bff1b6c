#ifndef DEFPOW_SUITES_HPP
#define DEFPOW_SUITES_HPP

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "defpow/named_formulas.hpp"
#include "defpow/report.hpp"

namespace defpow {

using SuiteFn = std::function<SuiteReport(const Budget&, unsigned)>;

namespace suitedetail {

inline Poly ipoly(const Ring& R, std::vector<long long> coeffs) {
    std::vector<RingValue> c;
    for (auto v : coeffs) c.push_back(R.from_int(BigInt(v)));
    return Poly::from_coeffs(R, std::move(c));
}

inline RingValue tup(const Ring& R, std::vector<long long> entries) {
    std::vector<BigInt> p;
    for (auto e : entries) p.push_back(BigInt(e));
    return R.from_tuple(p);
}

inline std::string fmt_count(long long n) { return std::to_string(n); }

// Exhaustive scan of {f : deg <= max_deg, coeffs in pool} through
// decide_lpow(f, x), parallelized over (degree, leading index) blocks with a
// deterministic merge.
struct LpowScan {
    long long candidates = 0;
    long long trues = 0;
    long long unknowns = 0;
    std::vector<Poly> members;
};

inline LpowScan lpow_x_scan(const PolyStructure& S, const std::vector<RingValue>& pool, int max_deg,
                            const Budget& budget) {
    const Ring& R = S.base();
    LpowScan total;
    Value px{Poly::x(R)};
    {
        // degree < 1: zero polynomial and constants
        Value vf{Poly::zero(R)};
        auto v = decide_lpow(S, vf, px, budget);
        ++total.candidates;
        if (v.verdict.is_true()) total.members.push_back(Poly::zero(R));
        if (v.verdict.is_unknown()) ++total.unknowns;
        for (const auto& c : pool) {
            if (is_zero(c)) continue;
            Poly f = Poly::constant(c);
            auto vc = decide_lpow(S, Value(f), px, budget);
            ++total.candidates;
            if (vc.verdict.is_true()) total.members.push_back(f);
            if (vc.verdict.is_unknown()) ++total.unknowns;
        }
    }
    struct Task {
        int degree;
        std::size_t lead;
    };
    std::vector<Task> tasks;
    for (int d = 1; d <= max_deg; ++d)
        for (std::size_t li = 0; li < pool.size(); ++li)
            if (!is_zero(pool[li])) tasks.push_back({d, li});
    std::atomic<std::size_t> next{0};
    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<LpowScan> partial(tasks.size());
    auto worker = [&]() {
        while (true) {
            std::size_t ti = next.fetch_add(1);
            if (ti >= tasks.size()) return;
            const Task& task = tasks[ti];
            LpowScan local;
            std::vector<RingValue> coeffs(static_cast<std::size_t>(task.degree) + 1, R.zero());
            coeffs.back() = pool[task.lead];
            Value vf{Poly::from_coeffs(R, coeffs)};
            Poly& fp = std::get<Poly>(vf);
            std::vector<std::size_t> idx(static_cast<std::size_t>(task.degree), 0);
            bool first = true;
            while (true) {
                if (first) {
                    for (std::size_t i = 0; i < idx.size(); ++i) fp.raw_coeffs()[i] = pool[idx[i]];
                    first = false;
                }
                auto v = decide_lpow(S, vf, px, budget);
                ++local.candidates;
                if (v.verdict.is_true()) local.members.push_back(fp);
                if (v.verdict.is_unknown()) ++local.unknowns;
                std::size_t pos = idx.size();
                bool done = true;
                while (pos-- > 0) {
                    if (++idx[pos] < pool.size()) {
                        fp.raw_coeffs()[pos] = pool[idx[pos]];
                        done = false;
                        break;
                    }
                    idx[pos] = 0;
                    fp.raw_coeffs()[pos] = pool[0];
                }
                if (done) break;
            }
            partial[ti] = std::move(local);
        }
    };
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    for (auto& p : partial) {
        total.candidates += p.candidates;
        total.unknowns += p.unknowns;
        for (auto& m : p.members) total.members.push_back(m);
    }
    total.trues = static_cast<long long>(total.members.size());
    std::sort(total.members.begin(), total.members.end());
    return total;
}

// Determinant by Laplace expansion; fine for the 5x5 matrices used here.
inline RingValue ring_det(const Ring& R, const std::vector<std::vector<RingValue>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RingValue acc = R.zero();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<RingValue>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RingValue> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        RingValue term = R.mul(m[0][j], ring_det(R, minor));
        acc = j % 2 ? R.sub(acc, term) : R.add(acc, term);
    }
    return acc;
}

inline std::vector<RingValue> parity_pool(const Ring& R, int bound) {
    std::vector<RingValue> pool;
    auto* par = dynamic_cast<const ParityRing*>(&R);
    for (const auto& v : R.box_elements(bound)) {
        bool keep = true;
        for (const auto& e : v.payload)
            if (e.abs() > BigInt(bound)) keep = false;
        if (keep) pool.push_back(v);
    }
    (void)par;
    return pool;
}

inline Poly random_poly(const Ring& R, int max_deg, std::mt19937& rng) {
    auto elems = R.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> degd(0, max_deg);
    int d = degd(rng);
    std::vector<RingValue> c;
    for (int i = 0; i <= d; ++i) c.push_back(elems[pick(rng)]);
    return Poly::from_coeffs(R, std::move(c));
}

inline QPlaneElement random_qp(const QPlaneAlgebra& A, std::mt19937& rng, int max_support,
                               int coeff_bound) {
    std::uniform_int_distribution<int> nterms(1, max_support);
    std::uniform_int_distribution<int> degd(0, 2);
    std::uniform_int_distribution<int> cd(-coeff_bound, coeff_bound);
    QPlaneElement out = QPlaneElement::zero(A);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        out = out + QPlaneElement::monomial(A, degd(rng), degd(rng), A.domain().from_int(BigInt(cd(rng))));
    return out;
}

}  // namespace suitedetail

// ---------------------------------------------------------------------------
// the registered suites
// ---------------------------------------------------------------------------

inline SuiteReport suite_basic_lemma(const Budget& budget, unsigned seed) {
    using namespace suitedetail;
    SuiteReport rep{"basic-lemma"};
    (void)budget;
    for (const auto& spec : {std::string("zmod:4"), std::string("trunc:2")}) {
        auto R = build_ring(spec);
        std::mt19937 rng(seed);
        int applicable = 0, holds = 0;
        for (int trial = 0; trial < 400; ++trial) {
            Poly g = random_poly(*R, 3, rng), h = random_poly(*R, 2, rng);
            Poly f = g * h;
            if (g.is_zero() || h.is_zero() || f.is_zero()) continue;
            if (!g.degree() || !f.degree() || *g.degree() <= *f.degree()) continue;
            ++applicable;
            RingValue ann = R->one();
            for (int i = 0; i <= *h.degree(); ++i) ann = R->mul(ann, *g.leading());
            if ((Poly::constant(ann) * f).is_zero()) ++holds;
        }
        rep.record_bool(spec + "/excess-degree", "divisors of higher degree annihilate f via a power of "
                                                 "their leading coefficient",
                        "annihilator-power-bound", applicable > 5 && holds == applicable,
                        fmt_count(holds) + "/" + fmt_count(applicable) + " randomized instances");
    }
    {
        auto R = build_ring("zmod:4");
        std::mt19937 rng(seed + 1);
        int cases = 0, holds = 0;
        for (int trial = 0; trial < 300; ++trial) {
            Poly g = random_poly(*R, 3, rng), h = random_poly(*R, 3, rng);
            Poly f = g * h;
            if (f.is_zero()) continue;
            int r = 0;
            while (is_zero(f.coeff(r))) ++r;
            if (r == 0) continue;
            ++cases;
            RingValue g0r = R->one();
            for (int i = 0; i < r; ++i) g0r = R->mul(g0r, g.coeff(0));
            Poly scaled = Poly::constant(g0r) * h;
            bool ok = true;
            for (int i = 0; i < r; ++i) ok = ok && is_zero(scaled.coeff(i));
            if (ok) ++holds;
        }
        rep.record_bool("zmod:4/trailing", "x^r | g*h implies x^r | g0^r * h", "trailing-coefficient-bound",
                        cases > 5 && holds == cases, fmt_count(holds) + "/" + fmt_count(cases));

        Poly g = ipoly(*R, {1, 2});
        Poly h = ipoly(*R, {0, 0, 1, -2});
        bool identity = g * h == ipoly(*R, {0, 0, 1});
        RingValue g0r = R->mul(g.coeff(0), g.coeff(0));
        RingValue g0r1 = R->mul(g0r, g.coeff(0));
        identity = identity && g0r == R->mul(g0r1, h.coeff(2));
        rep.record_bool("zmod:4/monic-square", "x^r = g*h forces g0^r = g0^{r+1} h_r",
                        "trailing-coefficient-bound", identity, "(1+2x)(x^2-2x^3) = x^2");
    }
    return rep;
}

inline SuiteReport suite_redunits(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"redunits"};
    for (const auto& spec : {std::string("zmod:4"), std::string("zmod:5"), std::string("zmod:6"),
                             std::string("zmod:9"), std::string("fpz2:2"), std::string("trunc:2"),
                             std::string("bool:2")}) {
        auto R = build_ring(spec);
        bool reduced = check_reduced(*R).is_true();
        std::vector<Poly> polys;
        enumerate_polys(*R, 2, R->elements(), [&](const Poly& p) {
            polys.push_back(p);
            return true;
        });
        bool nonconstant_unit = false;
        Poly one = Poly::constant(R->one());
        std::string witness;
        for (const auto& a : polys) {
            if (a.is_constant()) continue;
            for (const auto& b : polys)
                if (a * b == one) {
                    nonconstant_unit = true;
                    witness = a.format();
                }
        }
        bool nilpotent_poly = false;
        for (const auto& p : polys) {
            if (p.is_zero()) continue;
            Poly q = p;
            for (int i = 0; i < 4; ++i) q = q * p;
            if (q.is_zero()) nilpotent_poly = true;
        }
        rep.record_bool(spec, "R[x] is reduced iff R is reduced iff the units of R[x] are the units of R",
                        "constant-units",
                        (nonconstant_unit == !reduced) && (nilpotent_poly == !reduced),
                        reduced ? "reduced; no nonconstant unit up to degree 2"
                                : "nonconstant unit " + witness);
    }
    {
        auto R = build_ring("zmod:4");
        Budget b = budget;
        rep.record("zmod:4/witness", "1 + 2x is invertible over a nonreduced base", "constant-units",
                   TV::True, poly_is_unit(ipoly(*R, {1, 2}), b));
    }
    return rep;
}

inline SuiteReport suite_bivalente(const Budget& budget, unsigned) {
    SuiteReport rep{"bivalente"};
    std::vector<std::string> roster;
    for (int n = 2; n <= 12; ++n) roster.push_back("zmod:" + std::to_string(n));
    for (int k = 1; k <= 3; ++k) roster.push_back("bool:" + std::to_string(k));
    for (int p : {2, 3, 5}) roster.push_back("fpz2:" + std::to_string(p));
    for (int k = 1; k <= 2; ++k) roster.push_back("trunc:" + std::to_string(k));
    for (const auto& spec : roster) {
        auto R = build_ring(spec);
        Verdict irr = x_irreducible(*R, budget);
        Verdict ind = check_indecomposable(*R);
        bool agree = irr.is_true() == ind.is_true() && !irr.is_unknown() && !ind.is_unknown();
        rep.record_bool(spec, "x is irreducible in R[x] iff R is indecomposable",
                        "x-irreducible-iff-indecomposable", agree,
                        std::string(irr.is_true() ? "irreducible" : "reducible") + "; " +
                            (ind.is_true() ? "indecomposable" : ind.evidence));
    }
    return rep;
}

inline SuiteReport suite_cmdiv(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"cmdiv"};
    for (const auto& spec : {std::string("zmod:2"), std::string("zmod:3"), std::string("zmod:5"),
                             std::string("zmod:7"), std::string("bool:1")}) {
        auto R = build_ring(spec);
        bool ok = true;
        for (const auto& c : R->elements()) {
            RingValue low = R->one();
            for (int m = 0; m <= 4; ++m) {
                RingValue high = R->mul(low, c);
                if (R->divides(high, low).tv == TV::True)
                    ok = ok && (is_zero(c) || is_unit(c).is_true());
                low = high;
            }
            ok = ok && (is_zero(c) || is_unit(c).is_true());  // finite + reduced + indec => field
        }
        rep.record_bool(spec, "stationary power divisibility forces zero-or-unit; the ring is a field",
                        "stationary-power-divisibility", ok, "exhaustive, exponents up to 4");
    }
    for (const auto& spec : {std::string("zmod:4"), std::string("zxz")}) {
        auto R = build_ring(spec);
        Verdict found = verdict_unknown("");
        for (const auto& c : R->descriptor().is_finite ? R->elements() : R->box_elements(2)) {
            if (is_zero(c) || is_unit(c).is_true()) continue;
            RingValue low = R->one();
            for (int m = 0; m <= 4 && !found.is_false(); ++m) {
                RingValue high = R->mul(low, c);
                if (R->divides(high, low).tv == TV::True)
                    found = verdict_false("c = " + R->format(c) + " at exponent " + std::to_string(m));
                low = high;
            }
        }
        rep.record(spec + "/counterexample",
                   "outside reduced indecomposable rings the implication fails",
                   "stationary-power-divisibility", TV::False, found);
    }
    for (const auto& spec : {std::string("int"), std::string("parity2"), std::string("z2t")}) {
        auto R = build_ring(spec);
        bool ok = true;
        for (const auto& c : R->box_elements(budget.int_bound)) {
            RingValue low = R->one();
            for (int m = 0; m <= 4; ++m) {
                RingValue high = R->mul(low, c);
                if (R->divides(high, low).tv == TV::True) ok = ok && (is_zero(c) || is_unit(c).is_true());
                low = high;
            }
        }
        rep.record_bool(spec + "/sampled", "no stationary divisibility among sampled nonunits",
                        "stationary-power-divisibility", ok,
                        "box bound " + std::to_string(budget.int_bound));
    }
    return rep;
}

inline SuiteReport suite_constantfn(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"constantfn"};
    {
        auto Z = build_ring("int");
        rep.record("int/x2", "x^2 separates 0 and 1", "no-vanishing-polynomial", TV::False,
                   is_constant_function(Poly::x(*Z).pow(2), {Z->from_int(BigInt(0)), Z->from_int(BigInt(1))}));
    }
    {
        auto P = build_ring("parity2");
        rep.record("parity2/const", "constants induce constant functions", "no-vanishing-polynomial",
                   TV::True, is_constant_function(Poly::constant(tup(*P, {2, 2})), {P->zero(), P->one()}));
    }
    {
        auto R = build_ring("z2t");
        RingValue t = R->generators()[0].second;
        Poly f = Poly::from_coeffs(*R, {R->zero(), t, t});
        std::vector<RingValue> sample;
        for (int i = -3; i <= 3; ++i) sample.push_back(R->from_int(BigInt(i)));
        rep.record("z2t/t(x2+x)", "t*(x^2+x) vanishes on all integer images yet is nonzero",
                   "no-vanishing-polynomial", TV::Unknown, is_constant_function(f, sample));
        rep.record_bool("z2t/nonvanishing-point", "the theorem survives: f(t) is nonzero",
                        "no-vanishing-polynomial", !is_zero(f.eval(t)) && !f.is_zero(),
                        "f(t) = " + R->format(f.eval(t)));
    }
    {
        auto B = build_ring("bool:3");
        Poly f = Poly::x(*B).pow(2) - Poly::x(*B);
        bool vanishes = true;
        for (const auto& c : B->elements()) vanishes = vanishes && is_zero(f.eval(c));
        rep.record_bool("bool:3/x2-x", "x^2 - x vanishes on the whole Boolean ring yet is nonzero",
                        "boolean-vanishing", vanishes && !f.is_zero(),
                        "checked on all " + fmt_count(static_cast<long long>(B->elements().size())) +
                            " elements");
    }
    {
        auto T = build_ring("trunc:2");
        Poly x = Poly::x(*T);
        Poly f = x.pow(4) - x.pow(2);
        bool vanishes = true;
        for (const auto& c : T->elements()) vanishes = vanishes && is_zero(f.eval(c));
        rep.record_bool("trunc:2/x4-x2", "x^2(x^2-1) vanishes on the truncated ring yet is nonzero",
                        "nilpotent-generators-vanishing", vanishes && !f.is_zero(),
                        "checked on all " + fmt_count(static_cast<long long>(T->elements().size())) +
                            " elements");
    }
    for (const auto& spec : {std::string("int"), std::string("parity2")}) {
        auto R = build_ring(spec);
        bool identity_ok = true, consequence_ok = true;
        for (const auto& a : R->box_elements(3)) {
            for (int m = 2; m <= 4; ++m) {
                // V_a over powers a^0..a^m
                std::vector<std::vector<RingValue>> V;
                std::vector<RingValue> points;
                RingValue pw = R->one();
                for (int i = 0; i <= m; ++i) {
                    points.push_back(pw);
                    pw = R->mul(pw, a);
                }
                for (int i = 0; i <= m; ++i) {
                    std::vector<RingValue> row;
                    RingValue cell = R->one();
                    for (int j = 0; j <= m; ++j) {
                        row.push_back(cell);
                        cell = R->mul(cell, points[static_cast<std::size_t>(i)]);
                    }
                    V.push_back(std::move(row));
                }
                RingValue det = ring_det(*R, V);
                RingValue prod = R->one();
                for (int i = 0; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        prod = R->mul(prod, R->sub(points[static_cast<std::size_t>(j)],
                                                   points[static_cast<std::size_t>(i)]));
                if (det != prod) identity_ok = false;
                if (is_zero(R->mul(a, det)) && !(is_zero(a) || is_unit(a).is_true()))
                    consequence_ok = false;
            }
        }
        rep.record_bool(spec + "/vandermonde", "det V_a equals the pair-difference product",
                        "vandermonde-power-identity", identity_ok, "orders 3 to 5, sampled a");
        rep.record_bool(spec + "/vandermonde-consequence",
                        "a det(V_a) = 0 forces a to be zero or a unit", "stationary-power-divisibility",
                        consequence_ok, "box bound " + std::to_string(budget.int_bound));
    }
    return rep;
}

inline SuiteReport suite_sumnonunits(const Budget& budget, unsigned) {
    SuiteReport rep{"sumnonunits"};
    std::vector<std::string> roster{"zmod:4", "zmod:6", "zmod:9", "zmod:12", "bool:2", "bool:3",
                                    "trunc:1", "trunc:2", "fpz2:2", "fpz2:5", "int", "parity2",
                                    "z2t", "quot:2(t-1),t2-1", "zxz"};
    for (const auto& spec : roster) {
        auto R = build_ring(spec);
        bool first_disjunct = false;
        std::string ev;
        for (const auto& u : R->units()) {
            RingValue um1 = R->sub(u, R->one());
            if (!is_zero(um1) && !is_unit(um1).is_true()) {
                first_disjunct = true;
                ev = "unit " + R->format(u) + " with " + R->format(u) + "-1 neither zero nor a unit";
                break;
            }
        }
        bool second_disjunct = true;
        if (!first_disjunct) {
            auto carrier = R->descriptor().is_finite ? R->elements() : R->box_elements(budget.int_bound);
            auto pool = R->descriptor().is_finite ? R->elements() : R->box_elements(2 * budget.int_bound);
            for (const auto& r : carrier) {
                bool decomposed = false;
                for (const auto& s : pool) {
                    if (is_unit(s).is_true()) continue;
                    RingValue t = R->sub(r, s);
                    if (!is_unit(t).is_true()) {
                        decomposed = true;
                        break;
                    }
                }
                if (!decomposed) {
                    second_disjunct = false;
                    break;
                }
            }
            if (second_disjunct) ev = "every sampled element splits into two nonunits";
        }
        rep.record_bool(spec, "a nonfield has a unit u with u-1 outside {0} and the units, or every "
                              "element is a sum of two nonunits",
                        "sum-of-nonunits", first_disjunct || second_disjunct, ev);
    }
    return rep;
}

inline SuiteReport suite_lpow_x(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"lpow-x"};
    {
        auto S = std::make_shared<PolyStructure>(build_ring("int"));
        std::vector<RingValue> pool;
        for (int a = -3; a <= 3; ++a) pool.push_back(S->base().from_int(BigInt(a)));
        auto scan = lpow_x_scan(*S, pool, 5, budget);
        std::vector<Poly> expect;
        for (int n = 1; n <= 5; ++n) expect.push_back(Poly::x(S->base()).pow(static_cast<unsigned>(n)));
        std::sort(expect.begin(), expect.end());
        rep.record_bool("int/scan", "the logical powers of x among degree-5 box polynomials are x..x^5",
                        "powers-equal-logical-powers-x",
                        scan.members == expect && scan.unknowns == 0,
                        fmt_count(scan.candidates) + " candidates, " + fmt_count(scan.trues) +
                            " members, " + fmt_count(scan.unknowns) + " unknowns");
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("parity2"));
        auto pool = parity_pool(S->base(), 3);
        auto scan = lpow_x_scan(*S, pool, 5, budget);
        std::vector<Poly> expect;
        for (int n = 1; n <= 5; ++n) expect.push_back(Poly::x(S->base()).pow(static_cast<unsigned>(n)));
        std::sort(expect.begin(), expect.end());
        rep.record_bool("parity2/scan",
                        "the logical powers of x among parity-pair box polynomials are x..x^5",
                        "powers-equal-logical-powers-x",
                        scan.members == expect && scan.unknowns == 0,
                        fmt_count(scan.candidates) + " candidates, " + fmt_count(scan.trues) +
                            " members, " + fmt_count(scan.unknowns) + " unknowns");
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("zxz"));
        const Ring& R = S->base();
        Poly x = Poly::x(R);
        Poly witness = Poly::from_coeffs(R, {tup(R, {0, 1}), tup(R, {1, 0})});
        auto v = decide_lpow(*S, Value(x), Value(x), budget, Value(witness));
        rep.record("zxz/witness", "over the full product (1,0)x + (0,1) refutes x as a logical power",
                   "reducible-generator", TV::False, v.verdict);
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("zmod:4"));
        auto v = decide_lpow(*S, Value(Poly::x(S->base())), Value(Poly::x(S->base())), budget);
        rep.record("zmod:4/self", "x stays a logical power of itself over the nonreduced base",
                   "x-irreducible-iff-indecomposable", TV::True, v.verdict);
    }
    return rep;
}

inline SuiteReport suite_TU(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"TU"};
    for (const auto& spec : {std::string("int"), std::string("parity2"), std::string("z2t")}) {
        auto S = std::make_shared<PolyStructure>(build_ring(spec));
        auto v = decide_TU(*S, Value(Poly::x(S->base())), budget);
        rep.record(spec + "/x-in-U", "x belongs to U", "sets-T-U", TV::True, v.in_U);
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("int"));
        const Ring& R = S->base();
        auto v = decide_TU(*S, Value(ipoly(R, {3, -1})), budget);
        rep.record("int/affine", "-x + 3 belongs to U", "affine-generators-in-U", TV::True, v.in_U);
        auto u = decide_TU(*S, Value(ipoly(R, {1})), budget);
        rep.record("int/unit", "the unit 1 is not in T", "irreducibility-clause", TV::False, u.in_T);
        auto sq = decide_TU(*S, Value(Poly::x(R).pow(2)), budget);
        rep.record("int/x2", "x^2 is reducible, hence outside T", "irreducibility-clause", TV::False,
                   sq.in_T);
        auto nl = decide_TU(*S, Value(ipoly(R, {1, 0, 1})), budget);
        rep.record("int/x2+1", "no decision path for the nonlinear x^2 + 1", "sets-T-U", TV::Unknown,
                   nl.in_U);
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("zxz"));
        auto v = decide_TU(*S, Value(Poly::x(S->base())), budget);
        rep.record("zxz/x", "x is reducible over the full product, hence outside T",
                   "irreducibility-clause", TV::False, v.in_T);
    }
    return rep;
}

inline SuiteReport suite_powconst(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"powconst"};
    auto SH = build_structure("poly:parity2");
    const auto& S = dynamic_cast<const PolyStructure&>(*SH);
    const Ring& R = S.base();
    RingValue a = R.from_int(BigInt(2));
    Poly x = Poly::x(R);
    std::vector<std::pair<Poly, Poly>> sample{{x, -x + Poly::constant(R.one())},
                                              {x, x + Poly::from_int(R, BigInt(2))}};
    {
        Poly f = Poly::constant(R.mul(R.mul(a, a), a));
        auto v = powconst_criterion(S, f, a, sample, budget);
        rep.record("parity2/a3", "a^3 passes the sampled power criterion with exponent 3",
                   "constant-power-criterion", TV::True, v.verdict);
        rep.record_bool("parity2/a3-exponent", "the recovered exponent is 3", "constant-power-criterion",
                        v.exponent == 3, "exponent " + std::to_string(v.exponent));
    }
    rep.record("parity2/x", "the indeterminate is rejected through an evaluation mismatch",
               "constant-power-criterion", TV::False, powconst_criterion(S, x, a, sample, budget).verdict);
    rep.record("parity2/a1", "a itself passes with exponent 1", "constant-power-criterion", TV::True,
               powconst_criterion(S, Poly::constant(a), a, sample, budget).verdict);
    {
        RingValue b = tup(R, {3, 3});
        Poly f = Poly::constant(R.mul(b, b));
        auto v = powconst_criterion(S, f, b, sample, budget);
        rep.record("parity2/b2", "(3,3)^2 passes the sampled power criterion",
                   "constant-power-criterion", TV::True, v.verdict);
    }
    return rep;
}

inline SuiteReport suite_extract(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"extract"};
    auto SH = build_structure("poly:int");
    const auto& S = dynamic_cast<const PolyStructure&>(*SH);
    const Ring& R = S.base();
    std::vector<Poly> alpha;
    for (int i = 0; i <= 6; ++i) alpha.push_back(Poly::from_int(R, BigInt(i)));
    std::vector<std::pair<std::string, Poly>> tests;
    for (int i = 0; i <= 6; ++i) tests.emplace_back(std::to_string(i), Poly::from_int(R, BigInt(i)));
    tests.emplace_back("x", Poly::x(R));
    tests.emplace_back("x+1", Poly::x(R) + Poly::constant(R.one()));
    tests.emplace_back("2-again", Poly::from_int(R, BigInt(2)));
    std::set<int> truth;
    bool witnesses_ok = true;
    for (const auto& [name, t] : tests) {
        auto v = extract_Lx_truth(S, t, alpha, budget.exp_cap);
        TV expected = TV::False;
        int as_int = 0;
        if (t.is_constant() && !t.is_zero() && t.coeff(0).payload[0] > BigInt(0) &&
            t.coeff(0).payload[0] <= BigInt(6))
            as_int = static_cast<int>(t.coeff(0).payload[0].to_int64());
        if (as_int >= 1) expected = TV::True;
        rep.record("t=" + name, "membership of t in the extracted exponent set", "exponent-extraction",
                   expected, v.verdict);
        if (v.verdict.is_true()) {
            truth.insert(v.exponent);
            witnesses_ok = witnesses_ok && v.witness_y && v.witness_w &&
                           (*v.witness_y - Poly::constant(R.one())) ==
                               (*v.witness_w * (Poly::x(R) - Poly::constant(R.one())));
        }
    }
    rep.record_bool("truth-set", "the extracted exponents are exactly 1..6", "exponent-extraction",
                    truth == std::set<int>{1, 2, 3, 4, 5, 6}, "cap " + std::to_string(budget.exp_cap));
    rep.record_bool("witnesses", "recorded witnesses re-verify by direct arithmetic",
                    "exponent-extraction", witnesses_ok, "y - 1 = w (x - 1) checked per positive case");
    return rep;
}

inline SuiteReport suite_theta(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"theta"};
    auto SH = build_structure("poly:parity2");
    const auto& S = dynamic_cast<const PolyStructure&>(*SH);
    const Ring& R = S.base();
    Poly x = Poly::x(R);
    std::vector<Poly> samples{x,
                              -x + Poly::constant(R.one()),
                              x + Poly::from_int(R, BigInt(2)),
                              x - Poly::constant(R.one()),
                              Poly::from_coeffs(R, {tup(R, {0, 2}), tup(R, {1, -1})})};
    for (int k : {1, 2, 3}) {
        auto v = decide_theta(S, Poly::from_int(R, BigInt(k)), samples, budget.exp_cap, budget);
        rep.record("t=" + std::to_string(k), "the integer sentence accepts " + std::to_string(k),
                   "integer-sentence", TV::True, v.verdict);
    }
    std::vector<std::pair<std::string, Poly>> refuted{
        {"x", x},
        {"x+1", x + Poly::constant(R.one())},
        {"(3,1)", Poly::constant(tup(R, {3, 1}))},
    };
    for (const auto& [name, t] : refuted) {
        auto v = decide_theta(S, t, samples, budget.exp_cap, budget);
        rep.record("t=" + name, "the integer sentence rejects " + name, "exponent-congruence", TV::False,
                   v.verdict);
    }
    return rep;
}

inline SuiteReport suite_char_p(const Budget&, unsigned) {
    SuiteReport rep{"char-p"};
    for (int n = 2; n <= 12; ++n) {
        auto R = build_ring("zmod:" + std::to_string(n));
        bool red_ind = check_reduced(*R).is_true() && check_indecomposable(*R).is_true();
        bool prime = true;
        for (int d = 2; d < n; ++d)
            if (n % d == 0) prime = false;
        rep.record_bool("zmod:" + std::to_string(n),
                        "reduced and indecomposable exactly at prime characteristic",
                        "prime-characteristic", red_ind == prime, red_ind ? "field" : "not a field");
    }
    for (int p : {2, 3, 5, 7}) {
        auto R = build_ring("zmod:" + std::to_string(p));
        bool ok = true;
        for (int k = 1; k < p; ++k) ok = ok && is_unit(R->from_int(BigInt(k))).is_true();
        rep.record_bool("zmod:" + std::to_string(p) + "/inverses", "every nonzero integer is invertible",
                        "prime-characteristic", ok, "k = 1.." + std::to_string(p - 1));
    }
    for (const auto& spec : {std::string("zmod:6"), std::string("fpz2:3"), std::string("parity2"),
                             std::string("quot:2(t-1),t2-1")}) {
        auto R = build_ring(spec);
        bool ok = true;
        for (int k = -8; k <= 8; ++k) {
            RingValue folded = R->zero();
            for (int i = 0; i < std::abs(k); ++i)
                folded = k > 0 ? R->add(folded, R->one()) : R->sub(folded, R->one());
            ok = ok && folded == R->from_int(BigInt(k));
        }
        rep.record_bool(spec + "/literals", "integer literals equal iterated sums of 1",
                        "integer-literals", ok, "k in [-8, 8]");
    }
    return rep;
}

inline SuiteReport suite_lpow_further(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"lpow-further"};
    {
        auto S = std::make_shared<RingStructure>(build_ring("zmod:5"));
        auto v = decide_lpow(*S, S->zero(), S->zero(), budget);
        rep.record("field/zero", "over a field 0 is a logical power of 0", "zero-logical-power", TV::True,
                   v.verdict);
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("int"));
        auto v = decide_lpow(*S, Value(Poly::zero(S->base())), Value(Poly::zero(S->base())), budget);
        rep.record("poly-int/zero", "outside fields the logical powers of 0 are empty",
                   "zero-logical-power", TV::False, v.verdict);
    }
    {
        auto S = std::make_shared<PolyStructure>(build_ring("int"));
        const Ring& R = S->base();
        Poly minus1 = ipoly(R, {-1});
        bool all = true;
        for (long long c : {1, -1, 3, 5, -7})
            all = all && decide_lpow(*S, Value(ipoly(R, {c})), Value(minus1), budget).verdict.is_true();
        bool excess = decide_lpow(*S, Value(ipoly(R, {3})), Value(minus1), budget).verdict.is_true();
        bool excluded = decide_lpow(*S, Value(ipoly(R, {2})), Value(minus1), budget).verdict.is_false() &&
                        decide_lpow(*S, Value(Poly::x(R)), Value(minus1), budget).verdict.is_false();
        rep.record_bool("int/unit-p", "for the unit -1 the logical powers are 1 + multiples of -2, "
                                      "strictly beyond the nonnegative powers",
                        "unit-logical-powers", all && excess && excluded, "3 = (-1-1)(-1) + 1");
    }
    {
        // self-membership: lpow(p) nonempty iff p belongs to it (finite, exhaustive)
        auto R = build_ring("zmod:6");
        auto S = std::make_shared<RingStructure>(R);
        bool ok = true;
        for (const auto& p : R->elements()) {
            bool self = decide_lpow(*S, Value(p), Value(p), budget).verdict.is_true();
            bool nonempty = false;
            for (const auto& f : R->elements())
                nonempty = nonempty || decide_lpow(*S, Value(f), Value(p), budget).verdict.is_true();
            ok = ok && self == nonempty;
        }
        rep.record_bool("zmod:6/self-membership", "lpow(p) is nonempty exactly when p belongs to it",
                        "self-membership", ok, "exhaustive over the ring");
    }
    {
        auto R = build_ring("quot:2(t-1),t2-1");
        auto S = std::make_shared<RingStructure>(R);
        RingValue t = R->generators()[0].second;
        std::set<RingValue> members;
        int unknowns = 0;
        for (const auto& f : R->box_elements(6)) {
            auto v = decide_lpow(*S, Value(f), Value(t), budget);
            if (v.verdict.is_true()) members.insert(f);
            if (v.verdict.is_unknown()) ++unknowns;
        }
        bool ok = members == std::set<RingValue>{R->one(), t} && unknowns == 0 &&
                  square_is_zero(R->sub(t, R->one()));
        rep.record_bool("quot/lpow-t", "the logical powers of t are exactly {1, t} and (t-1)^2 = 0",
                        "quotient-ring-logical-powers", ok,
                        fmt_count(static_cast<long long>(members.size())) + " members over |a| <= 6");
    }
    {
        auto R = build_ring("fpz2:5");
        auto S = std::make_shared<PolyStructure>(R);
        Poly z = Poly::constant(R->generators()[0].second);
        auto v = decide_lpow(*S, Value(z), Value(z), budget);
        bool ok = v.verdict.is_true() && !R->is_regular(R->generators()[0].second);
        rep.record_bool("fpz2:5/z", "z is a zero divisor inside its own logical powers",
                        "local-ring-zero-divisor", ok, v.verdict.evidence);
    }
    {
        // members found over a reduced base with noninvertible p are regular
        auto S = std::make_shared<PolyStructure>(build_ring("parity2"));
        const Ring& R = S->base();
        Poly x = Poly::x(R);
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            Poly f = x.pow(static_cast<unsigned>(n));
            if (!decide_lpow(*S, Value(f), Value(x), budget).verdict.is_true()) ok = false;
            auto reg = S->is_regular(Value(f));
            ok = ok && reg && *reg;
            // a member that is a multiple of its own square would force p invertible
            ok = ok && poly_divides(f * f, f, budget).tv == TV::False;
        }
        rep.record_bool("parity2/regular-members", "found members are regular and never multiples of "
                                                   "their own squares",
                        "regular-members", ok, "x^1..x^4");
    }
    for (const auto& spec : {std::string("zmod:4"), std::string("fpz2:3")}) {
        // zero-element tri-equivalence over base[x], exhaustively over constants p:
        // 0 in lpow(p) iff p and p-1 are units iff lpow(p) is everything sampled
        auto R = build_ring(spec);
        auto S = std::make_shared<PolyStructure>(R);
        bool ok = true;
        std::vector<Poly> sample;
        enumerate_polys(*R, 1, R->elements(), [&](const Poly& f) {
            sample.push_back(f);
            return sample.size() < 20;
        });
        for (const auto& c : R->elements()) {
            Poly p = Poly::constant(c);
            bool both_units = R->try_invert(c).has_value() && R->try_invert(R->sub(c, R->one())).has_value();
            auto vz = decide_lpow(*S, Value(Poly::zero(*R)), Value(p), budget);
            ok = ok && !vz.verdict.is_unknown() && vz.verdict.is_true() == both_units;
            bool all_in = true;
            for (const auto& f : sample) {
                auto vf = decide_lpow(*S, Value(f), Value(p), budget);
                if (!vf.verdict.is_true()) all_in = false;
            }
            if (both_units) ok = ok && all_in;
            if (!both_units) ok = ok && !vz.verdict.is_true();
        }
        rep.record_bool(spec + "/zero-tri-equivalence",
                        "0 is a logical power of p exactly when p and p-1 are units, and then "
                        "everything is",
                        "zero-logical-power", ok, "all constants p over " + spec);
    }
    {
        // unit multiples u with p-1 | u-1 stay inside lpow(p)
        auto S = std::make_shared<PolyStructure>(build_ring("int"));
        const Ring& R = S->base();
        Poly minus1 = ipoly(R, {-1});
        bool ok = true;
        for (long long f : {1, -1, 3}) {
            if (!decide_lpow(*S, Value(ipoly(R, {f})), Value(minus1), budget).verdict.is_true()) ok = false;
            if (!decide_lpow(*S, Value(ipoly(R, {-f})), Value(minus1), budget).verdict.is_true()) ok = false;
        }
        rep.record_bool("int/unit-multiples", "units congruent to 1 modulo p-1 map members to members",
                        "unit-multiples", ok, "u = -1 over p = -1");
    }
    return rep;
}

inline SuiteReport suite_equivalences(const Budget& budget, unsigned) {
    SuiteReport rep{"equivalences"};
    for (const auto& spec : {std::string("zmod:4"), std::string("zmod:6"), std::string("zmod:5"),
                             std::string("bool:2"), std::string("fpz2:2"), std::string("trunc:2")}) {
        auto R = build_ring(spec);
        bool has_idem = false;
        for (const auto& e : R->elements())
            if (!is_zero(e) && !is_one(e) && is_idempotent(e)) has_idem = true;
        bool x_linear_reducible = x_irreducible(*R, budget).is_false();
        rep.record_bool(spec + "/pentavalente",
                        "a nontrivial idempotent exists iff x factors into two noninvertible linears",
                        "product-ring-criteria", has_idem == x_linear_reducible,
                        has_idem ? "decomposable" : "indecomposable");

        bool idem_polys_constant = true;
        bool nonconstant_idem = false;
        enumerate_polys(*R, 2, R->elements(), [&](const Poly& e) {
            if (e * e == e) {
                if (!e.is_constant()) {
                    idem_polys_constant = false;
                    nonconstant_idem = true;
                }
            }
            return true;
        });
        rep.record_bool(spec + "/idempotent-polys", "idempotent polynomials are constant",
                        "constant-idempotents", idem_polys_constant && !nonconstant_idem,
                        "degree up to 2, all coefficients");

        // R indecomposable iff R[x] indecomposable (through the constant idempotents)
        bool rx_indec = true;
        enumerate_polys(*R, 2, R->elements(), [&](const Poly& e) {
            if (e * e == e && !e.is_zero() && e != Poly::constant(R->one())) rx_indec = false;
            return true;
        });
        rep.record_bool(spec + "/lift", "R and R[x] are indecomposable together",
                        "constant-idempotents", rx_indec == !has_idem, "");

        // reduced iff 1 is not a product of two positive-degree polynomials
        bool reduced = check_reduced(*R).is_true();
        bool one_splits = false;
        Poly one = Poly::constant(R->one());
        std::vector<Poly> linears;
        enumerate_polys(*R, 2, R->elements(), [&](const Poly& p) {
            if (!p.is_constant()) linears.push_back(p);
            return true;
        });
        for (const auto& a : linears) {
            for (const auto& b : linears)
                if (a * b == one) one_splits = true;
            if (one_splits) break;
        }
        rep.record_bool(spec + "/one-not-product",
                        "R is reduced iff 1 is not a product of two positive-degree polynomials",
                        "one-not-product", reduced == !one_splits, "");
    }
    return rep;
}

inline SuiteReport suite_zxz(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"zxz"};
    auto SH = build_structure("poly:parity2");
    const auto& S = dynamic_cast<const PolyStructure&>(*SH);
    const Ring& R = S.base();
    {
        std::set<Poly> truth;
        for (long long a = -6; a <= 6; ++a)
            for (long long b = -6; b <= 6; ++b) {
                if ((a & 1) != (b & 1)) continue;
                Poly cand = Poly::constant(tup(R, {a, b}));
                if (beta_member(S, cand).is_true()) truth.insert(cand);
            }
        std::set<Poly> expect{Poly::constant(tup(R, {5, 1})), Poly::constant(tup(R, {1, 5}))};
        rep.record_bool("beta-set", "the unit-shift formula picks out exactly (5,1) and (1,5)",
                        "pair-ring-integers", truth == expect, "constants with entries in [-6, 6]");
    }
    rep.record("gamma/(4,4)", "(4,4) = (5-1, 5-1) lies in the power-difference set",
               "pair-ring-integers", TV::True,
               gamma_member(S, Poly::constant(tup(R, {4, 4})), budget.exp_cap).verdict);
    rep.record("gamma/(24,24)", "(24,24) = (5^2-1, 5^2-1) lies in the power-difference set",
               "pair-ring-integers", TV::True,
               gamma_member(S, Poly::constant(tup(R, {24, 24})), budget.exp_cap).verdict);
    rep.record("gamma/(5,5)", "(5,5) misses the power-difference set", "pair-ring-integers", TV::False,
               gamma_member(S, Poly::constant(tup(R, {5, 5})), budget.exp_cap).verdict);
    rep.record("alpha/(3,3)", "(3,3) divides (24,24), so alpha accepts it", "pair-ring-integers",
               TV::True, alpha_zxz_member(S, Poly::constant(tup(R, {3, 3})), budget.exp_cap, budget));
    rep.record("alpha/(5,5)", "(5,5)+1 = (6,6) divides (24,24)", "pair-ring-integers", TV::True,
               alpha_zxz_member(S, Poly::constant(tup(R, {5, 5})), budget.exp_cap, budget));
    rep.record("alpha/x", "alpha rejects the nonconstant x", "pair-ring-integers", TV::False,
               alpha_zxz_member(S, Poly::x(R), budget.exp_cap, budget));
    {
        RingValue p5 = tup(R, {5, 1});
        auto v = decide_lpow(S, Value(Poly::constant(tup(R, {25, 1}))), Value(Poly::constant(p5)), budget);
        rep.record("lpow-(5,1)", "(25,1) is a logical power of (5,1)", "pair-ring-integers", TV::True,
                   v.verdict);
        auto w = decide_lpow(S, Value(Poly::constant(tup(R, {1, 5}))), Value(Poly::constant(p5)), budget);
        rep.record("lpow-(5,1)-reject", "(1,5) is not a logical power of (5,1)", "pair-ring-integers",
                   TV::False, w.verdict);
    }
    return rep;
}

inline SuiteReport suite_zk(const Budget& budget, unsigned) {
    using namespace suitedetail;
    SuiteReport rep{"zk"};
    auto SH = build_structure("poly:parityk:3");
    const auto& S = dynamic_cast<const PolyStructure&>(*SH);
    const Ring& R = S.base();
    {
        auto D = zk_D_set(R, budget);
        std::set<RingValue> got(D.begin(), D.end());
        std::set<RingValue> expect{tup(R, {1, -1, -1}), tup(R, {-1, 1, -1}), tup(R, {-1, -1, 1})};
        rep.record_bool("D-set", "D consists of the tuples with one entry 1 and the rest -1",
                        "tuple-ring-integers", got == expect,
                        fmt_count(static_cast<long long>(got.size())) + " elements");
    }
    rep.record("alpha/1", "alpha accepts the constant 1", "tuple-ring-integers", TV::True,
               alpha_zk_member(S, Poly::constant(R.one()), budget.exp_cap, budget));
    rep.record("alpha/3", "alpha accepts the constant 3", "tuple-ring-integers", TV::True,
               alpha_zk_member(S, Poly::from_int(R, BigInt(3)), budget.exp_cap, budget));
    rep.record("alpha/(2,2,2)", "alpha accepts the even constant (2,2,2)", "tuple-ring-integers",
               TV::True, alpha_zk_member(S, Poly::from_int(R, BigInt(2)), budget.exp_cap, budget));
    rep.record("alpha/x*e", "alpha rejects x scaled into one coordinate", "tuple-ring-integers",
               TV::False,
               alpha_zk_member(S, Poly::monomial(tup(R, {2, 0, 0}), 1), budget.exp_cap, budget));
    return rep;
}

inline SuiteReport suite_qplane(const Budget& budget, unsigned seed) {
    using namespace suitedetail;
    SuiteReport rep{"qplane"};
    for (const auto& spec : {std::string("qplane:D=Z,q=2"), std::string("qplane:D=Fp(5),q=2")}) {
        auto A = build_qplane(spec);
        std::mt19937 rng(seed);
        int pairs = 0, additive = 0;
        bool cancellable = true;
        while (pairs < 200) {
            auto g = random_qp(*A, rng, 4, 5), h = random_qp(*A, rng, 4, 5);
            if (g.is_zero() || h.is_zero()) continue;
            ++pairs;
            auto gh = g * h;
            if (gh.is_zero()) {
                cancellable = false;
                continue;
            }
            auto mg = g.deglex_max(), mh = h.deglex_max();
            auto ng = g.deglex_min(), nh = h.deglex_min();
            bool ok = gh.deglex_max() == std::pair<int, int>{mg.first + mh.first, mg.second + mh.second} &&
                      gh.deglex_min() == std::pair<int, int>{ng.first + nh.first, ng.second + nh.second};
            if (ok) ++additive;
        }
        rep.record_bool(spec + "/additivity", "degree-lex extremes add under multiplication",
                        "quantum-plane-order", additive == 200 && cancellable,
                        std::to_string(additive) + "/200 seeded pairs, no zero divisors");
        // right cancellability through division round trips
        std::mt19937 rng2(seed + 1);
        bool rt = true;
        for (int i = 0; i < 60; ++i) {
            auto g = random_qp(*A, rng2, 3, 4), h = random_qp(*A, rng2, 3, 4);
            if (h.is_zero()) continue;
            auto d = qp_right_divides(h, g * h);
            rt = rt && d.tv == TV::True && *d.quotient == g;
        }
        rep.record_bool(spec + "/cancellable", "right division recovers the unique left factor",
                        "quantum-plane-order", rt, "60 seeded round trips");
    }
    {
        // bounded pow(x) scans agree with the decision procedure
        struct Box {
            std::string spec;
            int total_deg;
            int coeff_bound;  // 0 = full field
        };
        for (const auto& box : {Box{"qplane:D=Z,q=2", 3, 1}, Box{"qplane:D=Fp(5),q=2", 2, 0}}) {
            auto A = build_qplane(box.spec);
            const Ring& D = A->domain();
            std::vector<RingValue> pool =
                box.coeff_bound ? D.box_elements(box.coeff_bound) : D.elements();
            std::vector<std::pair<int, int>> support;
            for (int tot = 0; tot <= box.total_deg; ++tot)
                for (int m = tot; m >= 0; --m) support.push_back({m, tot - m});
            long long mismatches = 0, unknowns = 0, members = 0, candidates = 0;
            std::vector<std::size_t> idx(support.size(), 0);
            while (true) {
                QPlaneElement f = QPlaneElement::zero(*A);
                for (std::size_t i = 0; i < support.size(); ++i)
                    if (idx[i] > 0)
                        f = f + QPlaneElement::monomial(*A, support[i].first, support[i].second,
                                                        pool[idx[i] - 1]);
                ++candidates;
                auto v = qp_decide_lpow_x(f, budget);
                bool shape = qp_power_of_x(f).has_value();
                if (v.is_unknown()) ++unknowns;
                else if (v.is_true() != shape) ++mismatches;
                if (v.is_true()) ++members;
                std::size_t pos = idx.size();
                bool done = true;
                while (pos-- > 0) {
                    if (++idx[pos] <= pool.size()) {
                        done = false;
                        break;
                    }
                    idx[pos] = 0;
                }
                if (done) break;
            }
            rep.record_bool(box.spec + "/pow-scan",
                            "the power-formula decision matches the x-power shape on the whole box",
                            "quantum-plane-order", mismatches == 0 && unknowns == 0,
                            fmt_count(candidates) + " candidates, " + fmt_count(members) + " members");
        }
    }
    {
        // exponent extraction over prime fields: the L-formula truth set over
        // the token list {0..6, y, 2}
        auto extraction = [&](const std::string& spec) {
            auto A = build_qplane(spec);
            auto x = QPlaneElement::x(*A);
            auto one = QPlaneElement::from_int(*A, BigInt(1));
            std::set<std::string> truth;
            auto L_truth = [&](const QPlaneElement& t) {
                if (!qp_is_unit(t).is_true()) return false;
                QPlaneElement w = QPlaneElement::zero(*A);
                QPlaneElement pk = one;
                for (int n = 1; n <= budget.exp_cap; ++n) {
                    w = w + pk;
                    pk = pk * x;
                    if (qp_right_divides(x - one, w - t).tv == TV::True) return true;
                }
                return false;
            };
            for (int k = 0; k <= 6; ++k)
                if (L_truth(QPlaneElement::from_int(*A, BigInt(k)))) truth.insert(std::to_string(k));
            if (L_truth(QPlaneElement::y(*A))) truth.insert("y");
            return truth;
        };
        auto t7 = extraction("qplane:D=Fp(7),q=2");
        rep.record_bool("qplane:D=Fp(7),q=2/extract",
                        "extraction over F7 recovers the positive tokens 1..6 exactly",
                        "quantum-plane-order",
                        t7 == std::set<std::string>{"1", "2", "3", "4", "5", "6"},
                        "tokens {0..6, y, 2}");
        auto t5 = extraction("qplane:D=Fp(5),q=2");
        rep.record_bool("qplane:D=Fp(5),q=2/extract",
                        "over F5 the token 5 collapses to 0, leaving {1,2,3,4,6}",
                        "quantum-plane-order",
                        t5 == std::set<std::string>{"1", "2", "3", "4", "6"}, "tokens {0..6, y, 2}");
    }
    return rep;
}

inline SuiteReport suite_diagram(const Budget& budget, unsigned) {
    SuiteReport rep{"diagram"};
    struct Nodes {
        bool p1, p2, p3, p4, p5, p6, p7, p8, p9, p10;
    };
    std::vector<std::string> roster{"int", "zmod:5", "parity2", "zmod:4", "zxz", "prod:int,zmod:4"};
    std::map<std::string, Nodes> nodes;
    for (const auto& spec : roster) {
        auto R = build_ring(spec);
        auto S = std::make_shared<PolyStructure>(R);
        Nodes n{};
        n.p7 = check_reduced(*R).is_true();
        n.p3 = check_indecomposable(*R).is_true();
        n.p6 = x_irreducible(*R, budget).is_true();
        auto self = decide_lpow(*S, Value(Poly::x(*R)), Value(Poly::x(*R)), budget);
        n.p5 = self.verdict.is_true();
        n.p2 = n.p7 && n.p3;
        n.p1 = n.p2;
        n.p4 = n.p2;
        n.p10 = n.p7 || !n.p3;
        n.p9 = n.p5;
        n.p8 = n.p5 && n.p10;
        // corroborations where the nodes are observable at desk scale
        bool consistent = !self.verdict.is_unknown() && n.p5 == n.p6 && n.p6 == n.p3;
        if (spec == "zmod:4") {
            // a logical power of x that is no power of x: u*x for the unit u = 3 + 2x
            Poly u = Poly::from_coeffs(*R, {R->from_int(BigInt(3)), R->from_int(BigInt(2))});
            Poly ux = u * Poly::x(*R);
            Budget b = budget;
            bool unit_ok = poly_is_unit(u, b).is_true();
            bool congruent =
                poly_divides(Poly::x(*R) - Poly::constant(R->one()), u - Poly::constant(R->one()), b).tv ==
                TV::True;
            bool not_power = decide_pow(*S, Value(ux), Value(Poly::x(*R)), 6).verdict.is_false();
            consistent = consistent && unit_ok && congruent && not_power && !n.p10;
        }
        nodes[spec] = n;
        rep.record_bool(spec + "/nodes", "node predicates computed exactly and consistently",
                        "implication-diagram", consistent,
                        std::string("reduced=") + (n.p7 ? "y" : "n") + " indec=" + (n.p3 ? "y" : "n") +
                            " x-in-lpow=" + (n.p5 ? "y" : "n"));
    }
    struct Arrow {
        const char* name;
        std::function<bool(const Nodes&)> premise, conclusion;
    };
    std::vector<Arrow> arrows{
        {"(1) reduced+indec => pow(x)=lpow(x)", [](const Nodes& n) { return n.p2; },
         [](const Nodes& n) { return n.p1; }},
        {"(2) reduced+indec => indec", [](const Nodes& n) { return n.p2; },
         [](const Nodes& n) { return n.p3; }},
        {"(3) pow=lpow => pow included in lpow", [](const Nodes& n) { return n.p1; },
         [](const Nodes& n) { return n.p4; }},
        {"(4) indec => x irreducible", [](const Nodes& n) { return n.p3; },
         [](const Nodes& n) { return n.p6; }},
        {"(5) pow included in lpow => x in lpow(x)", [](const Nodes& n) { return n.p4; },
         [](const Nodes& n) { return n.p5; }},
        {"(6) x in lpow(x) => x irreducible", [](const Nodes& n) { return n.p5; },
         [](const Nodes& n) { return n.p6; }},
        {"(7) pow included in lpow => reduced", [](const Nodes& n) { return n.p4; },
         [](const Nodes& n) { return n.p7; }},
        {"(8) x in lpow and lpow included in pow => x in lpow(x)", [](const Nodes& n) { return n.p8; },
         [](const Nodes& n) { return n.p5; }},
        {"(9) x in lpow(x) => lpow(x) nonempty", [](const Nodes& n) { return n.p5; },
         [](const Nodes& n) { return n.p9; }},
        {"(10) x in lpow and lpow included in pow => reduced", [](const Nodes& n) { return n.p8; },
         [](const Nodes& n) { return n.p7; }},
        {"(11) reduced => lpow(x) included in pow(x)", [](const Nodes& n) { return n.p7; },
         [](const Nodes& n) { return n.p10; }},
    };
    for (const auto& a : arrows) {
        bool holds = true;
        std::string counter;
        for (const auto& spec : roster) {
            const Nodes& n = nodes[spec];
            if (a.premise(n) && !a.conclusion(n)) {
                holds = false;
                counter = spec;
            }
        }
        rep.record_bool(a.name, "the implication holds on the whole roster", "implication-diagram",
                        holds, holds ? "6 rings" : "fails on " + counter);
    }
    {
        const Nodes& n = nodes["zmod:4"];
        rep.record("counterexample/(2)'", "indec does not imply reduced+indec (witness zmod:4)",
                   "implication-diagram", TV::False,
                   n.p3 && !n.p2 ? verdict_false("zmod:4 is indecomposable but not reduced")
                                 : verdict_true("unexpected"));
    }
    {
        const Nodes& n = nodes["zxz"];
        rep.record("counterexample/(7)'", "reduced does not imply pow included in lpow (witness ZxZ)",
                   "implication-diagram", TV::False,
                   n.p7 && !n.p4 ? verdict_false("the full product is reduced yet x is not in lpow(x)")
                                 : verdict_true("unexpected"));
    }
    {
        const Nodes& n = nodes["prod:int,zmod:4"];
        rep.record("counterexample/(11)'",
                   "lpow(x) included in pow(x) does not imply reduced (witness Z x Z/4)",
                   "implication-diagram", TV::False,
                   n.p10 && !n.p7 ? verdict_false("lpow(x) is empty over the decomposable nonreduced ring")
                                  : verdict_true("unexpected"));
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"basic-lemma", suite_basic_lemma},
        {"redunits", suite_redunits},
        {"bivalente", suite_bivalente},
        {"cmdiv", suite_cmdiv},
        {"constantfn", suite_constantfn},
        {"sumnonunits", suite_sumnonunits},
        {"lpow-x", suite_lpow_x},
        {"TU", suite_TU},
        {"powconst", suite_powconst},
        {"extract", suite_extract},
        {"theta", suite_theta},
        {"char-p", suite_char_p},
        {"lpow-further", suite_lpow_further},
        {"equivalences", suite_equivalences},
        {"zxz", suite_zxz},
        {"zk", suite_zk},
        {"qplane", suite_qplane},
        {"diagram", suite_diagram},
    };
    return reg;
}

inline SuiteReport run_suite(const std::string& name, const Budget& budget, unsigned seed) {
    auto it = suite_registry().find(name);
    if (it == suite_registry().end()) throw BadSpecError("unknown suite: " + name);
    return it->second(budget, seed);
}

}  // namespace defpow

#endif
