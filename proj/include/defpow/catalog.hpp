#ifndef DEFPOW_CATALOG_HPP
#define DEFPOW_CATALOG_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "defpow/ring.hpp"

namespace defpow {

namespace detail {

// F2[t] helpers on 0/1 coefficient vectors indexed by degree.
inline void f2_trim(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<int> f2_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int v = (i < a.size() ? a[i] : 0) ^ (i < b.size() ? b[i] : 0);
        r[i] = v;
    }
    f2_trim(r);
    return r;
}

inline std::vector<int> f2_mul(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
    }
    f2_trim(r);
    return r;
}

// Exact division in F2[t]; returns quotient iff remainder is zero.
inline std::optional<std::vector<int>> f2_exact_div(std::vector<int> num, const std::vector<int>& den) {
    f2_trim(num);
    if (den.empty()) return std::nullopt;
    std::vector<int> q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size()) {
        std::size_t shift = num.size() - den.size();
        q[shift] = 1;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] ^= den[j];
        f2_trim(num);
        if (num.empty()) break;
    }
    if (!num.empty()) return std::nullopt;
    f2_trim(q);
    return q;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

}  // namespace detail

// --- The rational integers -------------------------------------------------

class ZRing final : public Ring {
  public:
    ZRing() {
        desc_ = {"int", 0, false, true, DecisionMode::Exact, DecisionMode::Exact, true};
        reduced_fact_ = {true, "integral domain"};
        indecomposable_fact_ = {true, "integral domain"};
    }
    void normalize(std::vector<BigInt>& p) const override {
        if (p.size() != 1) throw BadSpecError("int payload must have one entry");
    }
    RingValue from_int(const BigInt& k) const override { return {this, {k}}; }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        return {this, {a.payload[0] + b.payload[0]}};
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        return {this, {a.payload[0] * b.payload[0]}};
    }
    RingValue neg(const RingValue& a) const override { return {this, {-a.payload[0]}}; }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        if (v.payload[0] == BigInt(1) || v.payload[0] == BigInt(-1)) return v;
        return std::nullopt;
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        if (a.payload[0].is_zero())
            return b.payload[0].is_zero() ? DivResult{TV::True, zero(), {}}
                                          : DivResult{TV::False, std::nullopt, "only 0 is a multiple of 0"};
        if (!b.payload[0].divisible_by(a.payload[0]))
            return {TV::False, std::nullopt, "no integer quotient"};
        return {TV::True, RingValue{this, {b.payload[0] / a.payload[0]}}, {}};
    }
    bool is_regular(const RingValue& v) const override { return !v.payload[0].is_zero(); }
    std::vector<RingValue> box_elements(int bound) const override {
        std::vector<RingValue> out;
        for (auto& k : int_box(bound)) out.push_back(RingValue{this, {k}});
        return out;
    }
    std::vector<RingValue> units() const override { return {one(), from_int(BigInt(-1))}; }
    std::string format(const RingValue& v) const override { return v.payload[0].to_string(); }
};

// --- Z/n ---------------------------------------------------------------------

class ZmodRing final : public Ring {
  public:
    explicit ZmodRing(long long n) : n_(n) {
        if (n < 2) throw BadSpecError("zmod modulus must be >= 2");
        desc_ = {"zmod:" + std::to_string(n), n, true, true, DecisionMode::Exact, DecisionMode::Exact};
        reduced_fact_ = {squarefree(n), squarefree(n) ? "squarefree modulus" : "squared prime factor"};
        indecomposable_fact_ = {prime_power(n),
                                prime_power(n) ? "prime-power modulus" : "composite split modulus"};
        for (long long r = 1; r < n_; ++r)
            if ((r * r) % n_ == 0) {
                square_zero_witness_ = from_int(BigInt(r));
                break;
            }
        for (long long r = 2; r < n_; ++r)
            if ((r * r) % n_ == r) {
                nontrivial_idempotent_ = from_int(BigInt(r));
                break;
            }
    }
    void normalize(std::vector<BigInt>& p) const override {
        if (p.size() != 1) throw BadSpecError("zmod payload must have one entry");
        p[0] = p[0].mod_floor(BigInt(n_));
    }
    RingValue from_int(const BigInt& k) const override { return {this, {k.mod_floor(BigInt(n_))}}; }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        return from_int(a.payload[0] + b.payload[0]);
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        return from_int(a.payload[0] * b.payload[0]);
    }
    RingValue neg(const RingValue& a) const override { return from_int(-a.payload[0]); }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        for (long long q = 0; q < n_; ++q) {
            if ((v.payload[0] * BigInt(q)).mod_floor(BigInt(n_)).is_one()) return from_int(BigInt(q));
        }
        return std::nullopt;
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        for (long long q = 0; q < n_; ++q) {
            if ((a.payload[0] * BigInt(q)).mod_floor(BigInt(n_)) == b.payload[0])
                return {TV::True, from_int(BigInt(q)), {}};
        }
        return {TV::False, std::nullopt, "exhausted all residues"};
    }
    bool is_regular(const RingValue& v) const override {
        return BigInt::gcd(v.payload[0], BigInt(n_)).is_one();
    }
    std::vector<RingValue> elements() const override {
        std::vector<RingValue> out;
        for (long long r = 0; r < n_; ++r) out.push_back(from_int(BigInt(r)));
        return out;
    }
    std::vector<RingValue> box_elements(int) const override { return elements(); }
    std::vector<RingValue> units() const override {
        std::vector<RingValue> out;
        for (long long r = 0; r < n_; ++r)
            if (std::gcd(r, n_) == 1) out.push_back(from_int(BigInt(r)));
        return out;
    }
    std::string format(const RingValue& v) const override { return v.payload[0].to_string(); }

  private:
    long long n_;
    static bool squarefree(long long n) {
        for (long long d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) return false;
        return true;
    }
    static bool prime_power(long long n) {
        for (long long d = 2; d <= n; ++d) {
            if (n % d == 0) {
                while (n % d == 0) n /= d;
                return n == 1;
            }
        }
        return false;
    }
};

// --- Finite products of arity-1 rings (Z and Z/n) ----------------------------

class ProductRing final : public Ring {
  public:
    explicit ProductRing(std::vector<RingHandle> comps) : comps_(std::move(comps)) {
        if (comps_.size() < 2) throw BadSpecError("product needs at least two components");
        std::string id = "prod:";
        long long ch = 1;
        bool finite = true;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) id += ",";
            id += comps_[i]->id();
            ch = detail::lcm_ll(ch, comps_[i]->descriptor().characteristic);
            finite = finite && comps_[i]->descriptor().is_finite;
        }
        desc_ = {id, ch, finite, true, DecisionMode::Exact, DecisionMode::Exact};
        bool all_reduced = true;
        std::string bad;
        for (auto& c : comps_) {
            auto& f = c->reduced_fact();
            if (f && !f->first) {
                all_reduced = false;
                bad = c->id();
            }
        }
        reduced_fact_ = all_reduced ? std::make_pair(true, std::string("product of reduced rings"))
                                    : std::make_pair(false, "component not reduced (" + bad + ")");
        indecomposable_fact_ = {false, "direct product of two nonzero rings"};
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (auto& w = comps_[i]->square_zero_witness()) {
                auto v = zero();
                v.payload[i] = w->payload[0];
                square_zero_witness_ = v;
                break;
            }
        }
        {
            auto v = zero();
            v.payload[0] = comps_[0]->one().payload[0];
            nontrivial_idempotent_ = v;
        }
    }
    std::size_t arity() const { return comps_.size(); }
    const Ring& component(std::size_t i) const { return *comps_[i]; }

    void normalize(std::vector<BigInt>& p) const override {
        if (p.size() != comps_.size()) throw BadSpecError("product payload arity mismatch");
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::vector<BigInt> one{p[i]};
            comps_[i]->normalize(one);
            p[i] = one[0];
        }
    }
    RingValue from_int(const BigInt& k) const override {
        std::vector<BigInt> p;
        for (auto& c : comps_) p.push_back(c->from_int(k).payload[0]);
        return {this, std::move(p)};
    }
    RingValue add(const RingValue& a, const RingValue& b) const override { return zip(a, b, false); }
    RingValue mul(const RingValue& a, const RingValue& b) const override { return zip(a, b, true); }
    RingValue neg(const RingValue& a) const override {
        std::vector<BigInt> p;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            p.push_back(comps_[i]->neg(lift(a, i)).payload[0]);
        return {this, std::move(p)};
    }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        std::vector<BigInt> p;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            auto inv = comps_[i]->try_invert(lift(v, i));
            if (!inv) return std::nullopt;
            p.push_back(inv->payload[0]);
        }
        return RingValue{this, std::move(p)};
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        std::vector<BigInt> q;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            auto d = comps_[i]->divides(lift(a, i), lift(b, i));
            if (d.tv != TV::True) return {TV::False, std::nullopt, "component " + std::to_string(i)};
            q.push_back(d.quotient->payload[0]);
        }
        return {TV::True, RingValue{this, std::move(q)}, {}};
    }
    bool is_regular(const RingValue& v) const override {
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (!comps_[i]->is_regular(lift(v, i))) return false;
        return true;
    }
    std::vector<RingValue> elements() const override {
        if (!desc_.is_finite) return Ring::elements();
        return cartesian([&](const Ring& c) { return c.elements(); });
    }
    std::vector<RingValue> box_elements(int bound) const override {
        return cartesian([&](const Ring& c) { return c.box_elements(bound); });
    }
    std::vector<RingValue> units() const override {
        return cartesian([&](const Ring& c) { return c.units(); });
    }
    std::string format(const RingValue& v) const override {
        std::string out = "(";
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) out += ",";
            out += comps_[i]->format(lift(v, i));
        }
        return out + ")";
    }
    RingValue from_tuple(const std::vector<BigInt>& entries) const override {
        if (entries.size() != comps_.size()) throw BadSpecError("tuple arity mismatch for " + id());
        std::vector<BigInt> p = entries;
        normalize(p);
        return {this, std::move(p)};
    }

  private:
    std::vector<RingHandle> comps_;

    RingValue lift(const RingValue& v, std::size_t i) const {
        return RingValue{comps_[i].get(), {v.payload[i]}};
    }
    RingValue zip(const RingValue& a, const RingValue& b, bool multiply) const {
        require_same_ring(a, b, multiply ? "mul" : "add");
        std::vector<BigInt> p;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            auto r = multiply ? comps_[i]->mul(lift(a, i), lift(b, i))
                              : comps_[i]->add(lift(a, i), lift(b, i));
            p.push_back(r.payload[0]);
        }
        return {this, std::move(p)};
    }
    template <class F>
    std::vector<RingValue> cartesian(F&& per_component) const {
        std::vector<std::vector<RingValue>> lists;
        for (auto& c : comps_) lists.push_back(per_component(*c));
        std::vector<RingValue> out;
        std::vector<std::size_t> idx(comps_.size(), 0);
        while (true) {
            std::vector<BigInt> p;
            for (std::size_t i = 0; i < comps_.size(); ++i) p.push_back(lists[i][idx[i]].payload[0]);
            out.push_back(RingValue{this, std::move(p)});
            std::size_t i = comps_.size();
            while (i-- > 0) {
                if (++idx[i] < lists[i].size()) break;
                idx[i] = 0;
                if (i == 0) return out;
            }
        }
    }
};

// --- Parity subrings of Z^k: tuples whose entries share one parity -----------

class ParityRing final : public Ring {
  public:
    explicit ParityRing(int k) : k_(k) {
        if (k < 2) throw BadSpecError("parity ring needs k >= 2");
        desc_ = {k == 2 ? std::string("parity2") : "parityk:" + std::to_string(k),
                 0, false, true, DecisionMode::Exact, DecisionMode::Exact, true};
        reduced_fact_ = {true, "subring of a product of integral domains"};
        indecomposable_fact_ = {true, "0/1 tuples in the subring are constant"};
    }
    int arity() const { return k_; }

    void normalize(std::vector<BigInt>& p) const override {
        if (static_cast<int>(p.size()) != k_) throw BadSpecError("parity payload arity mismatch");
        bool par = p[0].is_even();
        for (auto& e : p)
            if (e.is_even() != par) throw BadSpecError("entries must share one parity");
    }
    RingValue from_int(const BigInt& k) const override {
        return {this, std::vector<BigInt>(static_cast<std::size_t>(k_), k)};
    }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        std::vector<BigInt> p(a.payload);
        for (int i = 0; i < k_; ++i) p[i] += b.payload[i];
        return {this, std::move(p)};
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        std::vector<BigInt> p(a.payload);
        for (int i = 0; i < k_; ++i) p[i] *= b.payload[i];
        return {this, std::move(p)};
    }
    RingValue neg(const RingValue& a) const override {
        std::vector<BigInt> p(a.payload);
        for (auto& e : p) e = -e;
        return {this, std::move(p)};
    }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        for (auto& e : v.payload)
            if (e != BigInt(1) && e != BigInt(-1)) return std::nullopt;
        return v;  // tuples of +-1 are involutions
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        std::vector<BigInt> q(static_cast<std::size_t>(k_), BigInt(0));
        std::optional<bool> parity;
        std::vector<int> free_slots;
        for (int i = 0; i < k_; ++i) {
            if (a.payload[i].is_zero()) {
                if (!b.payload[i].is_zero())
                    return {TV::False, std::nullopt, "zero divisor entry against nonzero dividend entry"};
                free_slots.push_back(i);
            } else {
                if (!b.payload[i].divisible_by(a.payload[i]))
                    return {TV::False, std::nullopt, "no integer quotient in entry " + std::to_string(i)};
                q[i] = b.payload[i] / a.payload[i];
                bool even = q[i].is_even();
                if (parity && *parity != even)
                    return {TV::False, std::nullopt, "forced quotient entries disagree in parity"};
                parity = even;
            }
        }
        bool even = parity.value_or(true);
        for (int i : free_slots) q[i] = BigInt(even ? 0 : 1);
        return {TV::True, RingValue{this, std::move(q)}, {}};
    }
    bool is_regular(const RingValue& v) const override {
        for (auto& e : v.payload)
            if (e.is_zero()) return false;
        return true;
    }
    std::vector<RingValue> box_elements(int bound) const override {
        std::vector<RingValue> out;
        for (int parity = 0; parity < 2; ++parity) {
            std::vector<BigInt> list;
            for (auto& k : int_box(bound))
                if (k.is_even() == (parity == 0)) list.push_back(k);
            std::vector<std::size_t> idx(static_cast<std::size_t>(k_), 0);
            while (true) {
                std::vector<BigInt> p;
                for (int i = 0; i < k_; ++i) p.push_back(list[idx[static_cast<std::size_t>(i)]]);
                out.push_back(RingValue{this, std::move(p)});
                std::size_t i = idx.size();
                bool done = true;
                while (i-- > 0) {
                    if (++idx[i] < list.size()) {
                        done = false;
                        break;
                    }
                    idx[i] = 0;
                }
                if (done) break;
            }
        }
        return out;
    }
    std::vector<RingValue> units() const override {
        std::vector<RingValue> out;
        for (int mask = 0; mask < (1 << k_); ++mask) {
            std::vector<BigInt> p;
            for (int i = 0; i < k_; ++i) p.push_back(BigInt((mask >> i) & 1 ? -1 : 1));
            out.push_back(RingValue{this, std::move(p)});
        }
        return out;
    }
    std::string format(const RingValue& v) const override {
        bool diagonal = true;
        for (int i = 1; i < k_; ++i)
            if (v.payload[static_cast<std::size_t>(i)] != v.payload[0]) diagonal = false;
        if (diagonal) return v.payload[0].to_string();
        std::string out = "(";
        for (int i = 0; i < k_; ++i) {
            if (i) out += ",";
            out += v.payload[i].to_string();
        }
        return out + ")";
    }
    RingValue from_tuple(const std::vector<BigInt>& entries) const override {
        std::vector<BigInt> p = entries;
        normalize(p);
        return {this, std::move(p)};
    }

  private:
    int k_;
};

// --- Z[t]/(2t): integer constant term, F2 coefficients above ----------------

class Z2tRing final : public Ring {
  public:
    Z2tRing() {
        desc_ = {"z2t", 0, false, true, DecisionMode::Exact, DecisionMode::Exact};
        reduced_fact_ = {true, "integer part and F2[t] part are both reduced"};
        indecomposable_fact_ = {true, "idempotents force a 0/1 constant and zero t-part"};
    }
    void normalize(std::vector<BigInt>& p) const override {
        if (p.empty()) throw BadSpecError("z2t payload must not be empty");
        for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i].mod_floor(BigInt(2));
        while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    }
    RingValue from_int(const BigInt& k) const override { return {this, {k}}; }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        std::vector<BigInt> p(std::max(a.payload.size(), b.payload.size()), BigInt(0));
        p[0] = a.payload[0] + b.payload[0];
        for (std::size_t i = 1; i < p.size(); ++i) {
            long long s = (i < a.payload.size() ? a.payload[i].to_int64() : 0) +
                          (i < b.payload.size() ? b.payload[i].to_int64() : 0);
            p[i] = BigInt(s & 1);
        }
        return make(std::move(p));
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        auto u = higher(a), v = higher(b);
        int abar = a.payload[0].is_even() ? 0 : 1;
        int cbar = b.payload[0].is_even() ? 0 : 1;
        // (a+u)(c+v) = ac + [a v + c u + u v], everything above degree 0 mod 2
        auto high = detail::f2_add(detail::f2_add(scale(v, abar), scale(u, cbar)), detail::f2_mul(u, v));
        std::vector<BigInt> p{a.payload[0] * b.payload[0]};
        for (std::size_t i = 1; i < high.size(); ++i) p.push_back(BigInt(high[i]));
        return make(std::move(p));
    }
    RingValue neg(const RingValue& a) const override {
        std::vector<BigInt> p(a.payload);
        p[0] = -p[0];
        return make(std::move(p));
    }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        if (v.payload.size() == 1 && (v.payload[0] == BigInt(1) || v.payload[0] == BigInt(-1))) return v;
        return std::nullopt;
    }
    DivResult divides(const RingValue& s, const RingValue& f) const override {
        require_same_ring(s, f, "divides");
        const BigInt& a = s.payload[0];
        const BigInt& c = f.payload[0];
        auto u = higher(s), v = higher(f);
        if (a.is_zero() && u.empty())
            return is_zero(f) ? DivResult{TV::True, zero(), {}}
                              : DivResult{TV::False, std::nullopt, "only 0 is a multiple of 0"};
        if (a.is_zero()) {
            if (!c.is_zero()) return {TV::False, std::nullopt, "constant part must vanish"};
            auto w_full = detail::f2_exact_div(v, u);
            if (!w_full) return {TV::False, std::nullopt, "no quotient over F2[t]"};
            std::vector<BigInt> q{BigInt(w_full->empty() ? 0 : (*w_full)[0])};
            for (std::size_t i = 1; i < w_full->size(); ++i) q.push_back(BigInt((*w_full)[i]));
            RingValue qq = make(std::move(q));
            return {TV::True, qq, {}};
        }
        if (!c.divisible_by(a)) return {TV::False, std::nullopt, "no integer quotient in degree 0"};
        BigInt x = c / a;
        int abar = a.is_even() ? 0 : 1;
        int xbar = x.is_even() ? 0 : 1;
        std::vector<int> A = u;
        if (A.empty() && abar) A = {1};
        else if (!A.empty()) A[0] ^= abar;
        auto rhs = detail::f2_add(v, scale(u, xbar));
        if (A.empty()) {
            if (!rhs.empty()) return {TV::False, std::nullopt, "even constant annihilates the t-part"};
            return {TV::True, from_int(x), {}};
        }
        auto w = detail::f2_exact_div(rhs, A);
        if (!w) return {TV::False, std::nullopt, "no quotient over F2[t]"};
        if (!w->empty() && (*w)[0] != 0)
            return {TV::False, std::nullopt, "forced quotient has a constant t-part"};
        std::vector<BigInt> q{x};
        for (std::size_t i = 1; i < w->size(); ++i) q.push_back(BigInt((*w)[i]));
        return {TV::True, make(std::move(q)), {}};
    }
    bool is_regular(const RingValue& v) const override {
        if (v.payload[0].is_zero()) return false;
        if (!v.payload[0].is_even()) return true;
        return v.payload.size() > 1;
    }
    std::vector<RingValue> box_elements(int bound) const override {
        std::vector<RingValue> out;
        for (int mask = 0; mask < 4; ++mask) {
            for (auto& k : int_box(bound)) {
                std::vector<BigInt> p{k, BigInt(mask & 1), BigInt((mask >> 1) & 1)};
                out.push_back(make(std::move(p)));
            }
        }
        // masks repeat the pure-integer slice; dedup keeps the first (smallest-mask) copies
        std::vector<RingValue> dedup;
        for (auto& v : out)
            if (std::find(dedup.begin(), dedup.end(), v) == dedup.end()) dedup.push_back(v);
        return dedup;
    }
    std::vector<RingValue> units() const override { return {one(), from_int(BigInt(-1))}; }
    std::string format(const RingValue& v) const override {
        std::string out;
        if (!v.payload[0].is_zero() || v.payload.size() == 1) out = v.payload[0].to_string();
        for (std::size_t i = 1; i < v.payload.size(); ++i) {
            if (v.payload[i].is_zero()) continue;
            if (!out.empty()) out += "+";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
    std::vector<std::pair<std::string, RingValue>> generators() const override {
        return {{"t", RingValue{this, {BigInt(0), BigInt(1)}}}};
    }

  private:
    static std::vector<int> higher(const RingValue& v) {
        std::vector<int> u(v.payload.size(), 0);
        for (std::size_t i = 1; i < v.payload.size(); ++i)
            u[i] = v.payload[i].is_zero() ? 0 : 1;
        detail::f2_trim(u);
        return u;
    }
    static std::vector<int> scale(const std::vector<int>& u, int bit) {
        return bit ? u : std::vector<int>{};
    }
};

// --- Z[t]/(2(t-1), t^2-1): canonical form a + b t with b in {0,1} -----------

class QuotTRing final : public Ring {
  public:
    QuotTRing() {
        desc_ = {"quot:2(t-1),t2-1", 0, false, true, DecisionMode::Exact, DecisionMode::Exact};
        reduced_fact_ = {false, "(t-1)^2 = 0"};
        indecomposable_fact_ = {true, "squares are constant, so idempotents are 0 and 1"};
        square_zero_witness_ = make({BigInt(-1), BigInt(1)});
    }
    void normalize(std::vector<BigInt>& p) const override {
        if (p.size() != 2) throw BadSpecError("quot payload must have two entries");
        BigInt r = p[1].mod_floor(BigInt(2));
        p[0] = p[0] + (p[1] - r);  // even multiples of t equal the same integer
        p[1] = r;
    }
    RingValue from_int(const BigInt& k) const override { return {this, {k, BigInt(0)}}; }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        return make({a.payload[0] + b.payload[0], a.payload[1] + b.payload[1]});
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        const BigInt &x = a.payload[0], &y = a.payload[1], &u = b.payload[0], &v = b.payload[1];
        return make({x * u + y * v, x * v + y * u});  // t^2 = 1
    }
    RingValue neg(const RingValue& a) const override { return make({-a.payload[0], -a.payload[1]}); }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        auto d = divides(v, one());
        if (d.tv == TV::True) return d.quotient;
        return std::nullopt;
    }
    DivResult divides(const RingValue& s, const RingValue& f) const override {
        require_same_ring(s, f, "divides");
        const BigInt &a = s.payload[0], &b = s.payload[1];
        const BigInt &c = f.payload[0], &d = f.payload[1];
        BigInt ab = a + b;
        if (ab.is_zero()) {
            // s is 0 or t-1 (times a unit); it multiplies everything into {0, t-1} scale
            if (is_zero(s)) return is_zero(f) ? DivResult{TV::True, zero(), {}}
                                              : DivResult{TV::False, std::nullopt, "only 0 is a multiple of 0"};
            if (!(c + d).is_zero())
                return {TV::False, std::nullopt, "value constraint (a+b)(x+y) = c+d fails"};
            for (int y = 0; y < 2; ++y) {
                for (int xpar = 0; xpar < 2; ++xpar) {
                    BigInt x(xpar);
                    if ((a * BigInt(y) + b * x).mod_floor(BigInt(2)) == d.mod_floor(BigInt(2))) {
                        RingValue q = make({x, BigInt(y)});
                        if (mul(s, q) == f) return {TV::True, q, {}};
                    }
                }
            }
            return {TV::False, std::nullopt, "no parity-compatible quotient"};
        }
        if (!(c + d).divisible_by(ab))
            return {TV::False, std::nullopt, "no integer solution to (a+b)(x+y) = c+d"};
        BigInt xy = (c + d) / ab;
        for (int y = 0; y < 2; ++y) {
            BigInt x = xy - BigInt(y);
            if ((a * BigInt(y) + b * x).mod_floor(BigInt(2)) == d.mod_floor(BigInt(2))) {
                RingValue q = make({x, BigInt(y)});
                if (mul(s, q) == f) return {TV::True, q, {}};
            }
        }
        return {TV::False, std::nullopt, "no parity-compatible quotient"};
    }
    bool is_regular(const RingValue& v) const override {
        return !(v.payload[0] + v.payload[1]).is_even();
    }
    std::vector<RingValue> box_elements(int bound) const override {
        std::vector<RingValue> out;
        for (int b = 0; b < 2; ++b)
            for (auto& a : int_box(bound)) out.push_back(make({a, BigInt(b)}));
        return out;
    }
    std::vector<RingValue> units() const override {
        return {one(), from_int(BigInt(-1)), make({BigInt(0), BigInt(1)}), make({BigInt(-2), BigInt(1)})};
    }
    std::string format(const RingValue& v) const override {
        if (v.payload[1].is_zero()) return v.payload[0].to_string();
        std::string t = "t";
        if (v.payload[0].is_zero()) return t;
        return v.payload[0].to_string() + "+" + t;
    }
    std::vector<std::pair<std::string, RingValue>> generators() const override {
        return {{"t", RingValue{this, {BigInt(0), BigInt(1)}}}};
    }
};

// --- F_p[z]/(z^2) -------------------------------------------------------------

class FpZ2Ring final : public Ring {
  public:
    explicit FpZ2Ring(long long p) : p_(p) {
        if (p < 2 || !is_prime(p)) throw BadSpecError("fpz2 parameter must be prime");
        desc_ = {"fpz2:" + std::to_string(p), p, true, true, DecisionMode::Exact, DecisionMode::Exact};
        reduced_fact_ = {false, "z^2 = 0"};
        indecomposable_fact_ = {true, "local ring"};
        square_zero_witness_ = make({BigInt(0), BigInt(1)});
    }
    void normalize(std::vector<BigInt>& v) const override {
        if (v.size() != 2) throw BadSpecError("fpz2 payload must have two entries");
        v[0] = v[0].mod_floor(BigInt(p_));
        v[1] = v[1].mod_floor(BigInt(p_));
    }
    RingValue from_int(const BigInt& k) const override { return {this, {k.mod_floor(BigInt(p_)), BigInt(0)}}; }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        return make({a.payload[0] + b.payload[0], a.payload[1] + b.payload[1]});
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        return make({a.payload[0] * b.payload[0],
                     a.payload[0] * b.payload[1] + a.payload[1] * b.payload[0]});
    }
    RingValue neg(const RingValue& a) const override { return make({-a.payload[0], -a.payload[1]}); }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        if (v.payload[0].is_zero()) return std::nullopt;
        BigInt ainv = mod_inverse(v.payload[0]);
        return make({ainv, -(ainv * ainv * v.payload[1])});
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        for (const auto& q : elements())
            if (mul(a, q) == b) return {TV::True, q, {}};
        return {TV::False, std::nullopt, "exhausted all elements"};
    }
    bool is_regular(const RingValue& v) const override { return !v.payload[0].is_zero(); }
    std::vector<RingValue> elements() const override {
        std::vector<RingValue> out;
        for (long long a = 0; a < p_; ++a)
            for (long long b = 0; b < p_; ++b) out.push_back(make({BigInt(a), BigInt(b)}));
        return out;
    }
    std::vector<RingValue> box_elements(int) const override { return elements(); }
    std::vector<RingValue> units() const override {
        std::vector<RingValue> out;
        for (auto& v : elements())
            if (!v.payload[0].is_zero()) out.push_back(v);
        return out;
    }
    std::string format(const RingValue& v) const override {
        if (v.payload[1].is_zero()) return v.payload[0].to_string();
        std::string z = v.payload[1].is_one() ? "z" : v.payload[1].to_string() + "*z";
        if (v.payload[0].is_zero()) return z;
        return v.payload[0].to_string() + "+" + z;
    }
    std::vector<std::pair<std::string, RingValue>> generators() const override {
        return {{"z", RingValue{this, {BigInt(0), BigInt(1)}}}};
    }

  private:
    long long p_;
    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    BigInt mod_inverse(const BigInt& a) const {
        for (long long q = 1; q < p_; ++q)
            if ((a * BigInt(q)).mod_floor(BigInt(p_)).is_one()) return BigInt(q);
        throw std::logic_error("mod_inverse: not invertible");
    }
};

// --- Boolean ring F_2^k --------------------------------------------------------

class BoolRing final : public Ring {
  public:
    explicit BoolRing(int k) : k_(k) {
        if (k < 1) throw BadSpecError("bool ring needs k >= 1");
        desc_ = {"bool:" + std::to_string(k), 2, true, true, DecisionMode::Exact, DecisionMode::Exact};
        reduced_fact_ = {true, "Boolean ring"};
        if (k == 1) {
            indecomposable_fact_ = {true, "field with two elements"};
        } else {
            indecomposable_fact_ = {false, "basis idempotents"};
            auto v = zero();
            v.payload[0] = BigInt(1);
            nontrivial_idempotent_ = v;
        }
    }
    void normalize(std::vector<BigInt>& p) const override {
        if (static_cast<int>(p.size()) != k_) throw BadSpecError("bool payload arity mismatch");
        for (auto& e : p) e = e.mod_floor(BigInt(2));
    }
    RingValue from_int(const BigInt& k) const override {
        return {this, std::vector<BigInt>(static_cast<std::size_t>(k_), k.mod_floor(BigInt(2)))};
    }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        std::vector<BigInt> p(a.payload);
        for (int i = 0; i < k_; ++i) p[i] = (p[i] + b.payload[i]).mod_floor(BigInt(2));
        return {this, std::move(p)};
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        std::vector<BigInt> p(a.payload);
        for (int i = 0; i < k_; ++i) p[i] = (p[i] * b.payload[i]).mod_floor(BigInt(2));
        return {this, std::move(p)};
    }
    RingValue neg(const RingValue& a) const override { return a; }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        for (auto& e : v.payload)
            if (!e.is_one()) return std::nullopt;
        return v;
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        std::vector<BigInt> q;
        for (int i = 0; i < k_; ++i) {
            if (a.payload[i].is_zero() && !b.payload[i].is_zero())
                return {TV::False, std::nullopt, "entry " + std::to_string(i)};
            q.push_back(b.payload[i]);
        }
        return {TV::True, RingValue{this, std::move(q)}, {}};
    }
    bool is_regular(const RingValue& v) const override {
        for (auto& e : v.payload)
            if (e.is_zero()) return false;
        return true;
    }
    std::vector<RingValue> elements() const override {
        std::vector<RingValue> out;
        for (int mask = 0; mask < (1 << k_); ++mask) {
            std::vector<BigInt> p;
            for (int i = 0; i < k_; ++i) p.push_back(BigInt((mask >> i) & 1));
            out.push_back(RingValue{this, std::move(p)});
        }
        return out;
    }
    std::vector<RingValue> box_elements(int) const override { return elements(); }
    std::vector<RingValue> units() const override { return {one()}; }
    std::string format(const RingValue& v) const override {
        std::string out = "(";
        for (int i = 0; i < k_; ++i) {
            if (i) out += ",";
            out += v.payload[i].to_string();
        }
        return out + ")";
    }
    RingValue from_tuple(const std::vector<BigInt>& entries) const override {
        std::vector<BigInt> p = entries;
        normalize(p);
        return {this, std::move(p)};
    }

  private:
    int k_;
};

// --- F_2[T_1..T_k]/(T_i T_j): canonical form a_0 + sum a_i T_i ---------------

class TruncRing final : public Ring {
  public:
    explicit TruncRing(int k) : k_(k) {
        if (k < 1) throw BadSpecError("trunc ring needs k >= 1");
        desc_ = {"trunc:" + std::to_string(k), 2, true, true, DecisionMode::Exact, DecisionMode::Exact};
        reduced_fact_ = {false, "generators square to zero"};
        indecomposable_fact_ = {true, "e^2 - e has no constant part, so idempotents are 0 and 1"};
        auto v = zero();
        v.payload[1] = BigInt(1);
        square_zero_witness_ = v;
    }
    void normalize(std::vector<BigInt>& p) const override {
        if (static_cast<int>(p.size()) != k_ + 1) throw BadSpecError("trunc payload arity mismatch");
        for (auto& e : p) e = e.mod_floor(BigInt(2));
    }
    RingValue from_int(const BigInt& k) const override {
        std::vector<BigInt> p(static_cast<std::size_t>(k_ + 1), BigInt(0));
        p[0] = k.mod_floor(BigInt(2));
        return {this, std::move(p)};
    }
    RingValue add(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "add");
        std::vector<BigInt> p(a.payload);
        for (int i = 0; i <= k_; ++i) p[i] = (p[i] + b.payload[i]).mod_floor(BigInt(2));
        return {this, std::move(p)};
    }
    RingValue mul(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "mul");
        std::vector<BigInt> p(static_cast<std::size_t>(k_ + 1), BigInt(0));
        p[0] = (a.payload[0] * b.payload[0]).mod_floor(BigInt(2));
        for (int i = 1; i <= k_; ++i)
            p[i] = (a.payload[0] * b.payload[i] + b.payload[0] * a.payload[i]).mod_floor(BigInt(2));
        return {this, std::move(p)};
    }
    RingValue neg(const RingValue& a) const override { return a; }
    std::optional<RingValue> try_invert(const RingValue& v) const override {
        if (!v.payload[0].is_one()) return std::nullopt;
        return v;  // (1+u)(1+u) = 1 since u^2 = 0 and char = 2
    }
    DivResult divides(const RingValue& a, const RingValue& b) const override {
        require_same_ring(a, b, "divides");
        for (const auto& q : elements())
            if (mul(a, q) == b) return {TV::True, q, {}};
        return {TV::False, std::nullopt, "exhausted all elements"};
    }
    bool is_regular(const RingValue& v) const override { return v.payload[0].is_one(); }
    std::vector<RingValue> elements() const override {
        std::vector<RingValue> out;
        for (int mask = 0; mask < (1 << (k_ + 1)); ++mask) {
            std::vector<BigInt> p;
            for (int i = 0; i <= k_; ++i) p.push_back(BigInt((mask >> i) & 1));
            out.push_back(RingValue{this, std::move(p)});
        }
        return out;
    }
    std::vector<RingValue> box_elements(int) const override { return elements(); }
    std::vector<RingValue> units() const override {
        std::vector<RingValue> out;
        for (auto& v : elements())
            if (v.payload[0].is_one()) out.push_back(v);
        return out;
    }
    std::string format(const RingValue& v) const override {
        std::string out;
        if (v.payload[0].is_one()) out = "1";
        for (int i = 1; i <= k_; ++i) {
            if (v.payload[i].is_zero()) continue;
            if (!out.empty()) out += "+";
            out += "t" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
    std::vector<std::pair<std::string, RingValue>> generators() const override {
        std::vector<std::pair<std::string, RingValue>> out;
        for (int i = 1; i <= k_; ++i) {
            auto v = zero();
            v.payload[static_cast<std::size_t>(i)] = BigInt(1);
            out.emplace_back("t" + std::to_string(i), v);
        }
        return out;
    }

  private:
    int k_;
};

// --- Catalog construction ------------------------------------------------------

// Builds (and memoizes) a catalog ring from its spec string. Canonical ids
// round-trip: build(spec)->id() == canonical spec.
RingHandle build_ring(const std::string& spec);

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline long long parse_param(const std::string& spec, const std::string& head) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(spec.substr(head.size()), &used);
        if (head.size() + used != spec.size()) throw BadSpecError("bad ring spec: " + spec);
        return v;
    } catch (const BadSpecError&) {
        throw;
    } catch (...) {
        throw BadSpecError("bad ring spec: " + spec);
    }
}

inline std::shared_ptr<const Ring> construct_ring(const std::string& spec) {
    if (spec == "int") return std::make_shared<ZRing>();
    if (spec.rfind("zmod:", 0) == 0) return std::make_shared<ZmodRing>(parse_param(spec, "zmod:"));
    if (spec == "parity2") return std::make_shared<ParityRing>(2);
    if (spec.rfind("parityk:", 0) == 0)
        return std::make_shared<ParityRing>(static_cast<int>(parse_param(spec, "parityk:")));
    if (spec == "z2t") return std::make_shared<Z2tRing>();
    if (spec == "quot:2(t-1),t2-1") return std::make_shared<QuotTRing>();
    if (spec.rfind("fpz2:", 0) == 0) return std::make_shared<FpZ2Ring>(parse_param(spec, "fpz2:"));
    if (spec.rfind("bool:", 0) == 0)
        return std::make_shared<BoolRing>(static_cast<int>(parse_param(spec, "bool:")));
    if (spec.rfind("trunc:", 0) == 0)
        return std::make_shared<TruncRing>(static_cast<int>(parse_param(spec, "trunc:")));
    if (spec.rfind("prod:", 0) == 0) {
        std::vector<RingHandle> comps;
        for (auto& part : split_top_level(spec.substr(5), ','))
            comps.push_back(build_ring(part));
        return std::make_shared<ProductRing>(std::move(comps));
    }
    throw BadSpecError("unknown ring spec: " + spec);
}

}  // namespace detail

inline RingHandle build_ring(const std::string& spec) {
    std::string canon = spec;
    if (canon == "zxz") canon = "prod:int,int";
    if (canon == "parityk") canon = "parityk:3";
    static std::recursive_mutex mu;  // construct_ring recurses for product components
    static std::map<std::string, RingHandle> registry;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = registry.find(canon);
    if (it != registry.end()) return it->second;
    RingHandle ring = detail::construct_ring(canon);
    if (ring->id() != canon) throw BadSpecError("non-canonical ring spec: " + spec + " vs " + ring->id());
    registry.emplace(canon, ring);
    return ring;
}

// The ten catalog families, for the CLI listing.
inline std::vector<std::pair<std::string, std::string>> catalog_families() {
    return {
        {"int", "rational integers"},
        {"zmod:<n>", "integers modulo n, n >= 2"},
        {"prod:<spec>,<spec>", "finite products of int/zmod factors (alias zxz = prod:int,int)"},
        {"parity2", "pairs of integers with matching parity"},
        {"parityk[:<k>]", "k-tuples of integers with matching parity (default k = 3)"},
        {"z2t", "integer constant term plus an F2[t] tail (t annihilated by 2)"},
        {"quot:2(t-1),t2-1", "a + b*t with t^2 = 1 and 2(t-1) = 0"},
        {"fpz2:<p>", "F_p[z]/(z^2), p prime"},
        {"bool:<k>", "Boolean ring F_2^k"},
        {"trunc:<k>", "F_2[t1..tk] with all products of generators zero"},
    };
}

}  // namespace defpow

#endif
