#ifndef DEFPOW_POLY_HPP
#define DEFPOW_POLY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "defpow/budget.hpp"
#include "defpow/catalog.hpp"
#include "defpow/rational.hpp"
#include "defpow/ring.hpp"

namespace defpow {

// Univariate polynomial over a catalog ring. Coefficient index = degree;
// normalized so the last stored coefficient is nonzero (empty = zero
// polynomial, whose degree is a distinguished "none", never a sentinel int).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Ring* base) : base_(base) {}

    static Poly zero(const Ring& base) { return Poly(&base); }
    static Poly constant(RingValue c) {
        Poly p(c.ring);
        if (!defpow::is_zero(c)) p.c_.push_back(std::move(c));
        return p;
    }
    static Poly x(const Ring& base) {
        Poly p(&base);
        p.c_ = {base.zero(), base.one()};
        return p;
    }
    static Poly from_int(const Ring& base, const BigInt& k) { return constant(base.from_int(k)); }
    static Poly from_coeffs(const Ring& base, std::vector<RingValue> coeffs) {
        Poly p(&base);
        for (auto& c : coeffs)
            if (c.ring != &base) throw MixedRingError("coefficient from a different ring");
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    // c * x^d
    static Poly monomial(RingValue c, int d) {
        const Ring* base = c.ring;
        Poly p(base);
        if (!defpow::is_zero(c)) {
            p.c_.assign(static_cast<std::size_t>(d), base->zero());
            p.c_.push_back(std::move(c));
        }
        return p;
    }

    const Ring& base() const { return *base_; }
    const Ring* base_ptr() const { return base_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    std::optional<RingValue> leading() const {
        if (c_.empty()) return std::nullopt;
        return c_.back();
    }
    RingValue coeff(int d) const {
        if (d < 0 || static_cast<std::size_t>(d) >= c_.size()) return base_->zero();
        return c_[static_cast<std::size_t>(d)];
    }
    const std::vector<RingValue>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.base_ == b.base_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.base_ != b.base_) return a.base_ < b.base_;
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b, "p_add");
        Poly r(a.base_);
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i)
            r.c_.push_back(a.base_->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i))));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(base_);
        for (const auto& c : c_) r.c_.push_back(base_->neg(c));
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b, "p_mul");
        if (a.is_zero() || b.is_zero()) return Poly(a.base_);
        Poly r(a.base_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.base_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (defpow::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = a.base_->add(r.c_[i + j], a.base_->mul(a.c_[i], b.c_[j]));
        }
        r.trim();
        return r;
    }

    Poly pow(unsigned n) const {
        Poly acc = constant(base_->one());
        Poly b = *this;
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    RingValue eval(const RingValue& at) const {
        if (at.ring != base_) throw MixedRingError("p_eval: point from a different ring");
        RingValue acc = base_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = base_->add(base_->mul(acc, at), c_[i]);
        return acc;
    }

    std::string format() const {
        if (c_.empty()) return "0";
        const RingValue one = base_->one();
        const RingValue minus_one = base_->neg(one);
        std::string out;
        for (std::size_t d = 0; d < c_.size(); ++d) {
            if (defpow::is_zero(c_[d])) continue;
            std::string lit = base_->format(c_[d]);
            std::string term;
            if (d == 0) {
                term = lit;
            } else {
                std::string xs = d == 1 ? "x" : "x^" + std::to_string(d);
                if (c_[d] == one) term = xs;
                else if (c_[d] == minus_one) term = "-" + xs;
                else term = lit + "*" + xs;
            }
            if (out.empty()) {
                out = term;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

    // Test/scan helper: direct mutable access, caller keeps normalization.
    std::vector<RingValue>& raw_coeffs() { return c_; }
    void trim() {
        while (!c_.empty() && defpow::is_zero(c_.back())) c_.pop_back();
    }

  private:
    const Ring* base_ = nullptr;
    std::vector<RingValue> c_;

    void check(const Poly& o, const char* op) const {
        if (base_ != o.base_) throw MixedRingError(std::string(op) + ": mixed base rings");
    }
};

struct PolyDivResult {
    TV tv = TV::Unknown;
    std::optional<Poly> quotient;
    std::string note;
};

namespace polydetail {

inline bool ring_is_field(const Ring& R) {
    if (!R.descriptor().is_finite) return false;
    return R.units().size() + 1 == R.elements().size();
}

// Exact division in F[x] for a field F.
inline PolyDivResult field_divide(const Poly& g, const Poly& f) {
    const Ring& R = g.base();
    Poly rem = f;
    Poly quot = Poly::zero(R);
    auto lg = *g.leading();
    auto lginv = *R.try_invert(lg);
    int dg = *g.degree();
    while (!rem.is_zero() && *rem.degree() >= dg) {
        int shift = *rem.degree() - dg;
        RingValue c = R.mul(*rem.leading(), lginv);
        Poly term = Poly::monomial(c, shift);
        quot = quot + term;
        rem = rem - term * g;
    }
    if (!rem.is_zero()) return {TV::False, std::nullopt, "nonzero remainder"};
    return {TV::True, quot, {}};
}

// Exact division of integer polynomials through the rationals, then an
// integrality check on the quotient.
inline PolyDivResult rational_divide(const Poly& g, const Poly& f) {
    const Ring& R = g.base();
    std::vector<BigRational> rem, gg;
    for (const auto& c : f.coeffs()) rem.emplace_back(c.payload[0]);
    for (const auto& c : g.coeffs()) gg.emplace_back(c.payload[0]);
    std::vector<BigRational> quot(rem.size() >= gg.size() ? rem.size() - gg.size() + 1 : 0);
    auto trim = [](std::vector<BigRational>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(rem);
    while (rem.size() >= gg.size()) {
        std::size_t shift = rem.size() - gg.size();
        BigRational c = rem.back() / gg.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < gg.size(); ++i)
            rem[shift + i] = rem[shift + i] - c * gg[i];
        trim(rem);
    }
    if (!rem.empty()) return {TV::False, std::nullopt, "nonzero remainder over the rationals"};
    std::vector<RingValue> qc;
    for (auto& c : quot) {
        if (!c.is_integer()) return {TV::False, std::nullopt, "fractional quotient coefficient"};
        qc.push_back(R.make({c.num()}));
    }
    return {TV::True, Poly::from_coeffs(R, std::move(qc)), {}};
}

inline Poly component_poly(const Poly& f, const Ring& comp, std::size_t i) {
    std::vector<RingValue> c;
    for (const auto& v : f.coeffs()) c.push_back(comp.make({v.payload[i]}));
    return Poly::from_coeffs(comp, std::move(c));
}

}  // namespace polydetail

// Enumerates polynomials of degree <= max_deg with coefficients drawn from
// `coeffs`, ordered by degree and then lexicographically on coefficient
// sample indices (the zero polynomial first). Stops early if the callback
// returns false.
inline void enumerate_polys(const Ring& base, int max_deg, const std::vector<RingValue>& coeffs,
                            const std::function<bool(const Poly&)>& cb) {
    if (!cb(Poly::zero(base))) return;
    std::size_t zero_idx = coeffs.size();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (is_zero(coeffs[i])) zero_idx = i;
    for (int d = 0; d <= max_deg; ++d) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
        while (true) {
            if (idx[static_cast<std::size_t>(d)] != zero_idx) {
                std::vector<RingValue> c;
                for (auto i : idx) c.push_back(coeffs[i]);
                Poly p = Poly::from_coeffs(base, std::move(c));
                if (!cb(p)) return;
            }
            std::size_t pos = idx.size();
            bool done = true;
            while (pos-- > 0) {
                if (++idx[pos] < coeffs.size()) {
                    done = false;
                    break;
                }
                idx[pos] = 0;
            }
            if (done) break;
        }
    }
}

// Does g divide f in base[x]?  Exact over integral-domain and product/parity
// bases and for constant divisors; exhaustive over finite bases up to
// deg_bound; bounded search (True/Unknown) elsewhere.
inline PolyDivResult poly_divides(const Poly& g, const Poly& f, int deg_bound, const Budget& budget) {
    if (g.base_ptr() != f.base_ptr()) throw MixedRingError("poly_divides: mixed base rings");
    if (deg_bound < 0) throw BadBoundError("poly_divides: negative degree bound");
    const Ring& R = g.base();

    if (g.is_zero()) {
        if (f.is_zero()) return {TV::True, Poly::zero(R), {}};
        return {TV::False, std::nullopt, "only 0 is a multiple of 0"};
    }
    if (f.is_zero()) return {TV::True, Poly::zero(R), {}};

    // constant divisor: c*q = f holds iff it holds coefficientwise, so the
    // per-coefficient ring quotients assemble into an exact answer
    if (g.is_constant()) {
        RingValue c = g.coeff(0);
        std::vector<RingValue> q;
        for (const auto& fc : f.coeffs()) {
            auto d = R.divides(c, fc);
            if (d.tv != TV::True)
                return {TV::False, std::nullopt, "coefficient not divisible by the constant divisor"};
            q.push_back(*d.quotient);
        }
        return {TV::True, Poly::from_coeffs(R, std::move(q)), {}};
    }

    if (dynamic_cast<const ZRing*>(&R)) return polydetail::rational_divide(g, f);
    if (polydetail::ring_is_field(R)) return polydetail::field_divide(g, f);

    if (auto* prod = dynamic_cast<const ProductRing*>(&R)) {
        std::vector<Poly> qs;
        int maxdeg = -1;
        for (std::size_t i = 0; i < prod->arity(); ++i) {
            const Ring& comp = prod->component(i);
            Poly gi = polydetail::component_poly(g, comp, i);
            Poly fi = polydetail::component_poly(f, comp, i);
            auto di = poly_divides(gi, fi, deg_bound, budget);
            if (di.tv != TV::True)
                return {di.tv, std::nullopt, "component " + std::to_string(i) + ": " + di.note};
            qs.push_back(*di.quotient);
            if (qs.back().degree()) maxdeg = std::max(maxdeg, *qs.back().degree());
        }
        std::vector<RingValue> qc;
        for (int d = 0; d <= maxdeg; ++d) {
            std::vector<BigInt> tup;
            for (auto& qi : qs) tup.push_back(qi.coeff(d).payload[0]);
            qc.push_back(prod->from_tuple(tup));
        }
        return {TV::True, Poly::from_coeffs(R, std::move(qc)), {}};
    }

    if (auto* par = dynamic_cast<const ParityRing*>(&R)) {
        auto Z = build_ring("int");
        std::vector<std::optional<Poly>> qs(static_cast<std::size_t>(par->arity()));
        int maxdeg = -1;
        for (int i = 0; i < par->arity(); ++i) {
            Poly gi = polydetail::component_poly(g, *Z, static_cast<std::size_t>(i));
            Poly fi = polydetail::component_poly(f, *Z, static_cast<std::size_t>(i));
            if (gi.is_zero()) {
                if (!fi.is_zero())
                    return {TV::False, std::nullopt, "zero divisor entry against nonzero dividend entry"};
                continue;
            }
            auto di = polydetail::rational_divide(gi, fi);
            if (di.tv != TV::True) return {TV::False, std::nullopt, "component " + std::to_string(i)};
            qs[static_cast<std::size_t>(i)] = *di.quotient;
            if (di.quotient->degree()) maxdeg = std::max(maxdeg, *di.quotient->degree());
        }
        // per-degree parity feasibility; free components adopt the forced parity
        std::vector<RingValue> qc;
        for (int d = 0; d <= maxdeg; ++d) {
            std::optional<bool> parity;
            for (auto& qi : qs) {
                if (!qi) continue;
                bool even = qi->coeff(d).payload[0].is_even();
                if (parity && *parity != even)
                    return {TV::False, std::nullopt,
                            "forced quotient coefficients disagree in parity at degree " + std::to_string(d)};
                parity = even;
            }
            bool even = parity.value_or(true);
            std::vector<BigInt> tup;
            for (auto& qi : qs) tup.push_back(qi ? qi->coeff(d).payload[0] : BigInt(even ? 0 : 1));
            qc.push_back(par->from_tuple(tup));
        }
        Poly quot = Poly::from_coeffs(R, std::move(qc));
        if (g * quot == f) return {TV::True, quot, {}};
        return {TV::False, std::nullopt, "no parity-compatible quotient"};
    }

    // bounded quotient search; complete only in the sense of the degree box
    std::vector<RingValue> coeff_pool =
        R.descriptor().is_finite ? R.elements() : R.box_elements(budget.coeff_bound);
    long long steps = 0;
    std::optional<Poly> found;
    enumerate_polys(R, deg_bound, coeff_pool, [&](const Poly& q) {
        if (++steps > budget.step_limit) return false;
        if (g * q == f) {
            found = q;
            return false;
        }
        return true;
    });
    if (found) return {TV::True, *found, {}};
    if (R.descriptor().is_finite && steps <= budget.step_limit)
        return {TV::False, std::nullopt,
                "no quotient of degree <= " + std::to_string(deg_bound) + " (exhaustive over " + R.id() + ")"};
    return {TV::Unknown, std::nullopt, "quotient search exhausted (degree box " +
                                           std::to_string(deg_bound) + ", steps " + std::to_string(steps) + ")"};
}

// Note: over a finite non-reduced base a False from poly_divides is exact only
// for the searched degree box; divisors of higher degree need nilpotent
// leading coefficients, and the callers that rely on exact False pass a bound
// of deg f + nil_slack.
inline PolyDivResult poly_divides(const Poly& g, const Poly& f, const Budget& budget) {
    int fallback = f.degree() ? *f.degree() : 0;
    int bound = fallback + (g.base().descriptor().is_finite ? budget.nil_slack : budget.divisor_slack);
    return poly_divides(g, f, bound, budget);
}

struct MaxPowerResult {
    int exponent = 0;         // largest n <= cap with p^n dividing f (True verdicts only)
    bool infinite_suspected = false;
};

inline MaxPowerResult max_power_dividing(const Poly& p, const Poly& f, int cap, const Budget& budget) {
    if (f.is_zero() && cap <= 0) throw BadBoundError("max_power_dividing: zero target needs a finite cap");
    MaxPowerResult out;
    Poly pk = Poly::constant(p.base().one());
    for (int n = 1; n <= cap; ++n) {
        pk = pk * p;
        if (poly_divides(pk, f, budget).tv != TV::True) return out;
        out.exponent = n;
    }
    out.infinite_suspected = true;
    return out;
}

// Irreducibility of the polynomial x: any nontrivial factorization yields one
// into two linear factors, so the linear-pair search is complete over finite
// rings; infinite catalog rings go through the indecomposability fact.
inline Verdict x_irreducible(const Ring& R, const Budget& budget) {
    auto witness_from_idempotent = [&](const RingValue& e) {
        RingValue om = R.sub(R.one(), e);
        Poly g = Poly::from_coeffs(R, {om, e});
        Poly h = Poly::from_coeffs(R, {e, om});
        return "x = (" + g.format() + ")*(" + h.format() + ")";
    };
    if (R.descriptor().is_finite) {
        auto elems = R.elements();
        auto nilpotent = [&](const RingValue& v) {
            RingValue p = v;
            for (std::size_t k = 0; k < elems.size(); ++k) {
                if (is_zero(p)) return true;
                p = R.mul(p, v);
            }
            return is_zero(p);
        };
        // a linear polynomial is a unit iff its constant term is a unit and
        // its leading coefficient is nilpotent
        auto linear_unit = [&](const RingValue& lead, const RingValue& con) {
            return R.try_invert(con).has_value() && nilpotent(lead);
        };
        Poly X = Poly::x(R);
        for (const auto& a : elems) {
            if (is_zero(a)) continue;
            for (const auto& b : elems) {
                Poly gp = Poly::from_coeffs(R, {b, a});
                if (linear_unit(a, b)) continue;
                for (const auto& c : elems) {
                    if (is_zero(c)) continue;
                    for (const auto& d : elems) {
                        if (linear_unit(c, d)) continue;
                        Poly hp = Poly::from_coeffs(R, {d, c});
                        if (gp * hp == X)
                            return verdict_false("x = (" + gp.format() + ")*(" + hp.format() + ")");
                    }
                }
            }
        }
        return verdict_true("exhaustive linear-pair search over " + R.id());
    }
    if (auto fact = R.indecomposable_fact()) {
        if (fact->first) return verdict_true("indecomposable: " + fact->second);
        if (auto e = R.nontrivial_idempotent()) return verdict_false(witness_from_idempotent(*e));
        return verdict_false("decomposable: " + fact->second);
    }
    for (const auto& e : R.box_elements(budget.int_bound)) {
        if (!is_zero(e) && !is_one(e) && is_idempotent(e)) return verdict_false(witness_from_idempotent(e));
    }
    return verdict_unknown("no idempotent found in a bounded box");
}

// Bounded inverse search; exact and quick for constants.
inline std::optional<Poly> poly_try_invert(const Poly& f, const Budget& budget) {
    const Ring& R = f.base();
    if (f.is_zero()) return std::nullopt;
    if (f.is_constant()) {
        if (auto inv = R.try_invert(f.coeff(0))) return Poly::constant(*inv);
        return std::nullopt;
    }
    if (!R.try_invert(f.coeff(0))) return std::nullopt;
    std::vector<RingValue> pool = R.descriptor().is_finite ? R.elements() : R.box_elements(budget.coeff_bound);
    int bound = *f.degree() + budget.nil_slack;
    long long steps = 0;
    std::optional<Poly> inv;
    Poly one = Poly::constant(R.one());
    enumerate_polys(R, bound, pool, [&](const Poly& q) {
        if (++steps > budget.step_limit) return false;
        if (f * q == one) {
            inv = q;
            return false;
        }
        return true;
    });
    return inv;
}

// Units of base[x]. Exact over reduced bases (units are the constant units)
// and via the constant-term/leading-coefficient obstructions; otherwise a
// bounded inverse search.
inline Verdict poly_is_unit(const Poly& f, const Budget& budget) {
    const Ring& R = f.base();
    if (f.is_zero()) return verdict_false("zero is not a unit");
    if (f.is_constant()) return is_unit(f.coeff(0));
    if (!R.try_invert(f.coeff(0)))
        return verdict_false("constant term " + R.format(f.coeff(0)) + " is not a unit");
    if (auto fact = R.reduced_fact(); fact && fact->first)
        return verdict_false("nonconstant over a reduced base (" + fact->second + ")");
    if (R.is_regular(*f.leading()))
        return verdict_false("regular leading coefficient forces positive product degree");
    if (R.descriptor().is_finite) {
        // exact over finite bases: unit iff the constant term is a unit and
        // every higher coefficient is nilpotent
        std::size_t order = R.elements().size();
        for (int d = 1; d <= *f.degree(); ++d) {
            RingValue c = f.coeff(d);
            RingValue power = c;
            for (std::size_t k = 1; k < order && !is_zero(power); ++k) power = R.mul(power, c);
            if (!is_zero(power))
                return verdict_false("coefficient of degree " + std::to_string(d) + " is not nilpotent");
        }
        return verdict_true("unit constant term and nilpotent higher coefficients");
    }
    if (auto inv = poly_try_invert(f, budget)) return verdict_true("inverse " + inv->format());
    return verdict_unknown("inverse search exhausted up to degree " +
                           std::to_string(*f.degree() + budget.nil_slack));
}

}  // namespace defpow

#endif
