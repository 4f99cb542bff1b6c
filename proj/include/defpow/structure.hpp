#ifndef DEFPOW_STRUCTURE_HPP
#define DEFPOW_STRUCTURE_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "defpow/budget.hpp"
#include "defpow/poly.hpp"
#include "defpow/qplane.hpp"
#include "defpow/ring.hpp"

namespace defpow {

// One carrier element of some model of the ring signature.
using Value = std::variant<RingValue, Poly, QPlaneElement>;

inline bool value_equal(const Value& a, const Value& b) { return a == b; }

// A model of the signature (0, 1, +, *) with a divisibility relation; the
// three-valued evaluator runs over any of these.
enum class StructureKind { Ring, Poly, QPlane };

class Structure {
  public:
    virtual ~Structure() = default;
    virtual StructureKind kind() const = 0;
    virtual const std::string& id() const = 0;

    virtual Value zero() const = 0;
    virtual Value one() const = 0;
    virtual Value from_int(const BigInt& k) const = 0;
    virtual Value add(const Value& a, const Value& b) const = 0;
    virtual Value mul(const Value& a, const Value& b) const = 0;
    virtual Value neg(const Value& a) const = 0;
    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

    virtual Verdict divides(const Value& a, const Value& b, const Budget& budget) const = 0;
    virtual Verdict is_unit(const Value& a, const Budget& budget) const = 0;
    virtual std::optional<Value> try_invert(const Value& a, const Budget& budget) const = 0;
    virtual std::optional<bool> is_regular(const Value& a) const = 0;

    virtual bool is_finite() const = 0;
    virtual std::vector<Value> all_elements() const = 0;          // finite structures only
    virtual std::vector<Value> box(const Budget& budget) const = 0;  // bounded default domain
    virtual std::vector<Value> poly_box(int max_deg, int lo, int hi) const {
        (void)max_deg;
        (void)lo;
        (void)hi;
        throw BadRingError("structure " + id() + " has no polynomial box domains");
    }

    virtual std::string format(const Value& v) const = 0;
    virtual std::vector<std::pair<std::string, Value>> constants() const { return {}; }
    virtual Value from_tuple(const std::vector<BigInt>& entries) const {
        (void)entries;
        throw BadSpecError("structure " + id() + " has no tuple literals");
    }
    virtual long long characteristic() const = 0;
};

using StructureHandle = std::shared_ptr<const Structure>;

// --- a catalog ring as a structure ------------------------------------------

class RingStructure final : public Structure {
  public:
    explicit RingStructure(RingHandle ring) : ring_(std::move(ring)) {}
    StructureKind kind() const override { return StructureKind::Ring; }
    const Ring& ring() const { return *ring_; }
    const std::string& id() const override { return ring_->id(); }

    Value zero() const override { return ring_->zero(); }
    Value one() const override { return ring_->one(); }
    Value from_int(const BigInt& k) const override { return ring_->from_int(k); }
    Value add(const Value& a, const Value& b) const override { return ring_->add(rv(a), rv(b)); }
    Value mul(const Value& a, const Value& b) const override { return ring_->mul(rv(a), rv(b)); }
    Value neg(const Value& a) const override { return ring_->neg(rv(a)); }

    Verdict divides(const Value& a, const Value& b, const Budget&) const override {
        auto d = ring_->divides(rv(a), rv(b));
        if (d.tv == TV::True) return verdict_true("quotient " + ring_->format(*d.quotient));
        if (d.tv == TV::False) return verdict_false(d.note.empty() ? "exact divisibility test" : d.note);
        return verdict_unknown(d.note);
    }
    Verdict is_unit(const Value& a, const Budget&) const override { return defpow::is_unit(rv(a)); }
    std::optional<Value> try_invert(const Value& a, const Budget&) const override {
        if (auto inv = ring_->try_invert(rv(a))) return Value(*inv);
        return std::nullopt;
    }
    std::optional<bool> is_regular(const Value& a) const override { return ring_->is_regular(rv(a)); }

    bool is_finite() const override { return ring_->descriptor().is_finite; }
    std::vector<Value> all_elements() const override { return wrap(ring_->elements()); }
    std::vector<Value> box(const Budget& budget) const override {
        return wrap(is_finite() ? ring_->elements() : ring_->box_elements(budget.int_bound));
    }
    std::string format(const Value& v) const override { return ring_->format(rv(v)); }
    std::vector<std::pair<std::string, Value>> constants() const override {
        std::vector<std::pair<std::string, Value>> out;
        for (auto& [name, v] : ring_->generators()) out.emplace_back(name, v);
        return out;
    }
    Value from_tuple(const std::vector<BigInt>& entries) const override {
        return ring_->from_tuple(entries);
    }
    long long characteristic() const override { return ring_->descriptor().characteristic; }

  private:
    RingHandle ring_;
    static const RingValue& rv(const Value& v) {
        if (auto* p = std::get_if<RingValue>(&v)) return *p;
        throw MixedRingError("expected a ring element");
    }
    static std::vector<Value> wrap(std::vector<RingValue> vs) {
        std::vector<Value> out;
        for (auto& v : vs) out.push_back(std::move(v));
        return out;
    }
};

// --- base[x] as a structure ---------------------------------------------------

class PolyStructure final : public Structure {
  public:
    explicit PolyStructure(RingHandle base) : base_(std::move(base)), id_("poly:" + base_->id()) {}
    StructureKind kind() const override { return StructureKind::Poly; }
    const Ring& base() const { return *base_; }
    const std::string& id() const override { return id_; }

    Value zero() const override { return Poly::zero(*base_); }
    Value one() const override { return Poly::constant(base_->one()); }
    Value from_int(const BigInt& k) const override { return Poly::from_int(*base_, k); }
    Value add(const Value& a, const Value& b) const override { return pv(a) + pv(b); }
    Value mul(const Value& a, const Value& b) const override { return pv(a) * pv(b); }
    Value neg(const Value& a) const override { return -pv(a); }

    Verdict divides(const Value& a, const Value& b, const Budget& budget) const override {
        auto d = poly_divides(pv(a), pv(b), budget);
        if (d.tv == TV::True) return verdict_true("quotient " + d.quotient->format());
        if (d.tv == TV::False) return verdict_false(d.note);
        return verdict_unknown(d.note);
    }
    Verdict is_unit(const Value& a, const Budget& budget) const override {
        return poly_is_unit(pv(a), budget);
    }
    std::optional<Value> try_invert(const Value& a, const Budget& budget) const override {
        if (auto inv = poly_try_invert(pv(a), budget)) return Value(*inv);
        return std::nullopt;
    }
    std::optional<bool> is_regular(const Value& a) const override { return poly_regular(pv(a)); }

    bool is_finite() const override { return false; }
    std::vector<Value> all_elements() const override {
        throw BadRingError("polynomial structures are infinite");
    }
    std::vector<Value> box(const Budget& budget) const override {
        return poly_box(budget.deg_box, -budget.coeff_bound, budget.coeff_bound);
    }
    std::vector<Value> poly_box(int max_deg, int lo, int hi) const override {
        int bound = std::max(std::abs(lo), std::abs(hi));
        std::vector<RingValue> pool =
            base_->descriptor().is_finite ? base_->elements() : base_->box_elements(bound);
        std::vector<Value> out;
        enumerate_polys(*base_, max_deg, pool, [&](const Poly& p) {
            out.push_back(p);
            return true;
        });
        return out;
    }
    std::string format(const Value& v) const override { return pv(v).format(); }
    std::vector<std::pair<std::string, Value>> constants() const override {
        std::vector<std::pair<std::string, Value>> out;
        out.emplace_back("x", Poly::x(*base_));
        for (auto& [name, v] : base_->generators()) out.emplace_back(name, Poly::constant(v));
        return out;
    }
    Value from_tuple(const std::vector<BigInt>& entries) const override {
        return Poly::constant(base_->from_tuple(entries));
    }
    long long characteristic() const override { return base_->descriptor().characteristic; }

    // McCoy: a polynomial is a zero divisor iff a nonzero constant kills it.
    std::optional<bool> poly_regular(const Poly& f) const {
        if (f.is_zero()) return false;
        const Ring& R = *base_;
        if (R.descriptor().is_finite) {
            for (const auto& c : R.elements()) {
                if (is_zero(c)) continue;
                if ((Poly::constant(c) * f).is_zero()) return false;
            }
            return true;
        }
        if (dynamic_cast<const ZRing*>(&R)) return !f.is_zero();
        if (auto* prod = dynamic_cast<const ProductRing*>(&R)) {
            for (std::size_t i = 0; i < prod->arity(); ++i) {
                PolyStructure comp(build_ring(prod->component(i).id()));
                auto r = comp.poly_regular(polydetail::component_poly(f, comp.base(), i));
                if (!r || !*r) return r;
            }
            return true;
        }
        if (auto* par = dynamic_cast<const ParityRing*>(&R)) {
            auto Z = build_ring("int");
            for (int i = 0; i < par->arity(); ++i)
                if (polydetail::component_poly(f, *Z, static_cast<std::size_t>(i)).is_zero()) return false;
            return true;
        }
        if (dynamic_cast<const QuotTRing*>(&R)) {
            // zero divisors are exactly the elements killed by t-1
            for (const auto& c : f.coeffs())
                if (R.is_regular(c)) return true;
            return false;
        }
        if (dynamic_cast<const Z2tRing*>(&R)) {
            bool all_even_int = true, all_pure_t = true;
            for (const auto& c : f.coeffs()) {
                if (!(c.payload.size() == 1 && c.payload[0].is_even())) all_even_int = false;
                if (!c.payload[0].is_zero()) all_pure_t = false;
            }
            return !(all_even_int || all_pure_t);
        }
        return std::nullopt;
    }

  private:
    RingHandle base_;
    std::string id_;
    static const Poly& pv(const Value& v) {
        if (auto* p = std::get_if<Poly>(&v)) return *p;
        throw MixedRingError("expected a polynomial");
    }
};

// --- the quantum plane as a structure (right divisibility) --------------------

class QPlaneStructure final : public Structure {
  public:
    explicit QPlaneStructure(QPlaneHandle alg) : alg_(std::move(alg)) {}
    StructureKind kind() const override { return StructureKind::QPlane; }
    const QPlaneAlgebra& algebra() const { return *alg_; }
    const std::string& id() const override { return alg_->id(); }

    Value zero() const override { return QPlaneElement::zero(*alg_); }
    Value one() const override { return QPlaneElement::from_int(*alg_, BigInt(1)); }
    Value from_int(const BigInt& k) const override { return QPlaneElement::from_int(*alg_, k); }
    Value add(const Value& a, const Value& b) const override { return qv(a) + qv(b); }
    Value mul(const Value& a, const Value& b) const override { return qv(a) * qv(b); }
    Value neg(const Value& a) const override { return -qv(a); }

    Verdict divides(const Value& a, const Value& b, const Budget&) const override {
        auto d = qp_right_divides(qv(a), qv(b));
        if (d.tv == TV::True) return verdict_true("left factor " + d.quotient->format());
        return verdict_false(d.note);
    }
    Verdict is_unit(const Value& a, const Budget&) const override { return qp_is_unit(qv(a)); }
    std::optional<Value> try_invert(const Value& a, const Budget&) const override {
        const QPlaneElement& f = qv(a);
        if (f.is_zero() || f.deglex_max() != std::pair<int, int>{0, 0}) return std::nullopt;
        auto inv = f.algebra()->domain().try_invert(f.coeff(0, 0));
        if (!inv) return std::nullopt;
        return Value(QPlaneElement::monomial(*f.algebra(), 0, 0, *inv));
    }
    std::optional<bool> is_regular(const Value& a) const override {
        // no zero divisors: max additivity makes every nonzero element cancellable
        return !qv(a).is_zero();
    }

    bool is_finite() const override { return false; }
    std::vector<Value> all_elements() const override {
        throw BadRingError("quantum planes are infinite");
    }
    std::vector<Value> box(const Budget& budget) const override {
        // monomial-support boxes keep the default domain small: c*x^m*y^n
        std::vector<Value> out;
        auto pool = alg_->domain().descriptor().is_finite ? alg_->domain().elements()
                                                          : alg_->domain().box_elements(budget.coeff_bound);
        out.push_back(zero());
        for (int tot = 0; tot <= budget.deg_box; ++tot) {
            for (int m = tot; m >= 0; --m) {
                for (const auto& c : pool) {
                    if (is_zero(c)) continue;
                    out.push_back(QPlaneElement::monomial(*alg_, m, tot - m, c));
                }
            }
        }
        return out;
    }
    std::string format(const Value& v) const override { return qv(v).format(); }
    std::vector<std::pair<std::string, Value>> constants() const override {
        return {{"x", QPlaneElement::x(*alg_)}, {"y", QPlaneElement::y(*alg_)}};
    }
    long long characteristic() const override { return alg_->domain().descriptor().characteristic; }

  private:
    QPlaneHandle alg_;
    static const QPlaneElement& qv(const Value& v) {
        if (auto* p = std::get_if<QPlaneElement>(&v)) return *p;
        throw MixedAlgebraError("expected a quantum plane element");
    }
};

// Structure specs: a ring spec, "poly:<ring spec>", or "qplane:D=...,q=...".
inline StructureHandle build_structure(const std::string& spec) {
    if (spec.rfind("poly:", 0) == 0)
        return std::make_shared<PolyStructure>(build_ring(spec.substr(5)));
    if (spec.rfind("qplane:", 0) == 0) return std::make_shared<QPlaneStructure>(build_qplane(spec));
    return std::make_shared<RingStructure>(build_ring(spec));
}

}  // namespace defpow

#endif
