#ifndef DEFPOW_RING_HPP
#define DEFPOW_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defpow/bigint.hpp"
#include "defpow/errors.hpp"
#include "defpow/verdict.hpp"

namespace defpow {

enum class DecisionMode { Exact, Bounded };

struct RingDescriptor {
    std::string id;               // canonical spec string, e.g. "zmod:4"
    long long characteristic = 0; // 0 = characteristic zero
    bool is_finite = false;
    bool enumerable = true;       // is_finite implies enumerable
    DecisionMode divisibility_mode = DecisionMode::Exact;
    DecisionMode unit_mode = DecisionMode::Exact;
    bool integer_diagonal = false;  // one() is the all-ones payload over Z entries
};

class Ring;

// Canonical-form element of a catalog ring. Two values are equal as ring
// elements iff they carry the same ring and identical payloads.
struct RingValue {
    const Ring* ring = nullptr;
    std::vector<BigInt> payload;

    friend bool operator==(const RingValue& a, const RingValue& b) {
        return a.ring == b.ring && a.payload == b.payload;
    }
    friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }
    friend bool operator<(const RingValue& a, const RingValue& b) {
        if (a.ring != b.ring) return a.ring < b.ring;
        if (a.payload.size() != b.payload.size()) return a.payload.size() < b.payload.size();
        for (std::size_t i = 0; i < a.payload.size(); ++i) {
            if (a.payload[i] != b.payload[i]) return a.payload[i] < b.payload[i];
        }
        return false;
    }
};

struct DivResult {
    TV tv = TV::Unknown;
    std::optional<RingValue> quotient;  // present when tv == True
    std::string note;
};

class Ring {
  public:
    virtual ~Ring() = default;

    const RingDescriptor& descriptor() const { return desc_; }
    const std::string& id() const { return desc_.id; }

    RingValue make(std::vector<BigInt> payload) const {
        normalize(payload);
        return RingValue{this, std::move(payload)};
    }

    virtual void normalize(std::vector<BigInt>& payload) const = 0;

    RingValue zero() const { return from_int(BigInt(0)); }
    RingValue one() const { return from_int(BigInt(1)); }
    // k-fold sum of 1; reduced through the characteristic when it is known.
    virtual RingValue from_int(const BigInt& k) const = 0;

    virtual RingValue add(const RingValue& a, const RingValue& b) const = 0;
    virtual RingValue mul(const RingValue& a, const RingValue& b) const = 0;
    virtual RingValue neg(const RingValue& a) const = 0;
    RingValue sub(const RingValue& a, const RingValue& b) const { return add(a, neg(b)); }

    // Exact for every catalog ring (unit_mode = exact).
    virtual std::optional<RingValue> try_invert(const RingValue& v) const = 0;
    // Does a divide b? Exact for every catalog ring (divisibility_mode = exact).
    virtual DivResult divides(const RingValue& a, const RingValue& b) const = 0;
    // Not a zero divisor. Exact closed form per ring.
    virtual bool is_regular(const RingValue& v) const = 0;

    virtual std::vector<RingValue> elements() const {
        throw BadRingError("elements(): ring " + id() + " is not finite");
    }
    // Deterministic bounded enumeration; for finite rings this is elements().
    virtual std::vector<RingValue> box_elements(int bound) const = 0;
    // Exact unit group (finite for every catalog ring).
    virtual std::vector<RingValue> units() const = 0;

    // Proof-tagged structure facts consumed by check_reduced/check_indecomposable;
    // stored once at construction so lookups stay allocation-free.
    const std::optional<std::pair<bool, std::string>>& reduced_fact() const { return reduced_fact_; }
    const std::optional<std::pair<bool, std::string>>& indecomposable_fact() const {
        return indecomposable_fact_;
    }
    const std::optional<RingValue>& square_zero_witness() const { return square_zero_witness_; }
    const std::optional<RingValue>& nontrivial_idempotent() const { return nontrivial_idempotent_; }

    virtual std::string format(const RingValue& v) const = 0;
    // Named constants usable in the term language ("t", "z", "t1", ...).
    virtual std::vector<std::pair<std::string, RingValue>> generators() const { return {}; }
    virtual RingValue from_tuple(const std::vector<BigInt>& entries) const {
        (void)entries;
        throw BadSpecError("ring " + id() + " has no tuple literals");
    }

  protected:
    RingDescriptor desc_;
    std::optional<std::pair<bool, std::string>> reduced_fact_;
    std::optional<std::pair<bool, std::string>> indecomposable_fact_;
    std::optional<RingValue> square_zero_witness_;
    std::optional<RingValue> nontrivial_idempotent_;
};

using RingHandle = std::shared_ptr<const Ring>;

inline void require_same_ring(const RingValue& a, const RingValue& b, const char* op) {
    if (a.ring != b.ring)
        throw MixedRingError(std::string(op) + ": operands from different rings");
}

inline bool is_zero(const RingValue& v) { return v == v.ring->zero(); }
inline bool is_one(const RingValue& v) { return v == v.ring->one(); }
inline bool is_idempotent(const RingValue& v) { return v.ring->mul(v, v) == v; }
inline bool square_is_zero(const RingValue& v) { return is_zero(v.ring->mul(v, v)); }

inline Verdict is_unit(const RingValue& v) {
    if (auto inv = v.ring->try_invert(v))
        return verdict_true("inverse " + v.ring->format(*inv));
    if (v.ring->descriptor().unit_mode == DecisionMode::Exact)
        return verdict_false("exact unit test of " + v.ring->id());
    return verdict_unknown("unit search exhausted in " + v.ring->id());
}

// Integers 0, 1, -1, 2, -2, ... up to |bound|; the shared small-witness-first order.
inline std::vector<BigInt> int_box(int bound) {
    std::vector<BigInt> out;
    out.push_back(BigInt(0));
    for (int i = 1; i <= bound; ++i) {
        out.push_back(BigInt(i));
        out.push_back(BigInt(-i));
    }
    return out;
}

// True iff the n-fold sum of 1 is 0 and no smaller positive fold is; checked
// directly from ring arithmetic (used to validate declared characteristics).
inline bool characteristic_matches(const Ring& ring, long long n) {
    if (n == 0) return true;  // cannot be refuted by finite computation here
    RingValue acc = ring.zero();
    for (long long i = 1; i <= n; ++i) {
        acc = ring.add(acc, ring.one());
        if (is_zero(acc) && i < n) return false;
    }
    return is_zero(acc);
}

inline Verdict check_reduced(const Ring& ring, int box_bound = 6) {
    if (auto fact = ring.reduced_fact()) {
        if (fact->first) return verdict_true("proof tag: " + fact->second);
        std::string ev = "proof tag: " + fact->second;
        if (auto w = ring.square_zero_witness())
            ev += "; witness " + ring.format(*w) + " has square zero";
        return verdict_false(ev);
    }
    const bool finite = ring.descriptor().is_finite;
    auto candidates = finite ? ring.elements() : ring.box_elements(box_bound);
    for (const auto& v : candidates) {
        if (!is_zero(v) && square_is_zero(v))
            return verdict_false("witness " + ring.format(v) + " has square zero");
    }
    if (finite) return verdict_true("exhaustive over " + std::to_string(candidates.size()) + " elements");
    return verdict_unknown("no square-zero element in a box of " + std::to_string(candidates.size()));
}

inline Verdict check_indecomposable(const Ring& ring, int box_bound = 6) {
    if (auto fact = ring.indecomposable_fact()) {
        if (fact->first) return verdict_true("proof tag: " + fact->second);
        std::string ev = "proof tag: " + fact->second;
        if (auto w = ring.nontrivial_idempotent())
            ev += "; witness " + ring.format(*w) + " is a nontrivial idempotent";
        return verdict_false(ev);
    }
    const bool finite = ring.descriptor().is_finite;
    auto candidates = finite ? ring.elements() : ring.box_elements(box_bound);
    for (const auto& v : candidates) {
        if (!is_zero(v) && !is_one(v) && is_idempotent(v))
            return verdict_false("witness " + ring.format(v) + " is a nontrivial idempotent");
    }
    if (finite) return verdict_true("exhaustive over " + std::to_string(candidates.size()) + " elements");
    return verdict_unknown("no nontrivial idempotent in a box of " + std::to_string(candidates.size()));
}

}  // namespace defpow

#endif
