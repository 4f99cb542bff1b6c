#ifndef DEFPOW_QPLANE_HPP
#define DEFPOW_QPLANE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defpow/budget.hpp"
#include "defpow/catalog.hpp"
#include "defpow/ring.hpp"

namespace defpow {

// (m,n) < (m',n') iff the total degree is smaller, or equal total degree and
// smaller x-exponent.
inline bool deglex_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    int ta = a.first + a.second, tb = b.first + b.second;
    if (ta != tb) return ta < tb;
    return a.first < b.first;
}

// The quantum plane over D with parameter q: the free D-module on monomials
// x^m y^n with (x^m y^n)(x^r y^s) = q^{rn} x^{m+r} y^{n+s}.
class QPlaneAlgebra {
  public:
    QPlaneAlgebra(RingHandle domain, BigInt q_int, std::string id)
        : D_(std::move(domain)), q_(D_->from_int(q_int)), id_(std::move(id)) {
        if (is_zero(q_)) throw BadSpecError("quantum plane parameter q must be nonzero");
    }
    const Ring& domain() const { return *D_; }
    const RingValue& q() const { return q_; }
    const std::string& id() const { return id_; }
    RingValue q_power(int e) const {
        RingValue acc = D_->one();
        for (int i = 0; i < e; ++i) acc = D_->mul(acc, q_);
        return acc;
    }

  private:
    RingHandle D_;
    RingValue q_;
    std::string id_;
};

using QPlaneHandle = std::shared_ptr<const QPlaneAlgebra>;

// "qplane:D=Z,q=2" or "qplane:D=Fp(5),q=2"
inline QPlaneHandle build_qplane(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, QPlaneHandle> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(spec);
    if (it != registry.end()) return it->second;
    if (spec.rfind("qplane:D=", 0) != 0) throw BadSpecError("bad quantum plane spec: " + spec);
    auto comma = spec.find(",q=");
    if (comma == std::string::npos) throw BadSpecError("bad quantum plane spec: " + spec);
    std::string dspec = spec.substr(9, comma - 9);
    BigInt qv = BigInt::from_string(spec.substr(comma + 3));
    RingHandle D;
    if (dspec == "Z") {
        D = build_ring("int");
    } else if (dspec.rfind("Fp(", 0) == 0 && dspec.back() == ')') {
        D = build_ring("zmod:" + dspec.substr(3, dspec.size() - 4));
        if (!build_ring(D->id())->units().size()) throw BadSpecError("not a field");
    } else {
        throw BadSpecError("quantum plane domain must be Z or Fp(p): " + spec);
    }
    auto alg = std::make_shared<QPlaneAlgebra>(D, qv, spec);
    registry.emplace(spec, alg);
    return alg;
}

// Finitely supported map (m,n) -> nonzero coefficient.
class QPlaneElement {
  public:
    QPlaneElement() = default;
    explicit QPlaneElement(const QPlaneAlgebra* alg) : alg_(alg) {}

    static QPlaneElement zero(const QPlaneAlgebra& alg) { return QPlaneElement(&alg); }
    static QPlaneElement monomial(const QPlaneAlgebra& alg, int m, int n, RingValue c) {
        QPlaneElement e(&alg);
        if (!defpow::is_zero(c)) e.terms_[{m, n}] = std::move(c);
        return e;
    }
    static QPlaneElement from_int(const QPlaneAlgebra& alg, const BigInt& k) {
        return monomial(alg, 0, 0, alg.domain().from_int(k));
    }
    static QPlaneElement x(const QPlaneAlgebra& alg) { return monomial(alg, 1, 0, alg.domain().one()); }
    static QPlaneElement y(const QPlaneAlgebra& alg) { return monomial(alg, 0, 1, alg.domain().one()); }

    const QPlaneAlgebra* algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, RingValue>& terms() const { return terms_; }
    RingValue coeff(int m, int n) const {
        auto it = terms_.find({m, n});
        return it == terms_.end() ? alg_->domain().zero() : it->second;
    }

    friend bool operator==(const QPlaneElement& a, const QPlaneElement& b) {
        return a.alg_ == b.alg_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QPlaneElement& a, const QPlaneElement& b) { return !(a == b); }

    std::pair<int, int> deglex_max() const {
        if (terms_.empty()) throw ZeroElementError("deglex_max of zero");
        auto best = terms_.begin()->first;
        for (const auto& [mn, c] : terms_)
            if (deglex_less(best, mn)) best = mn;
        return best;
    }
    std::pair<int, int> deglex_min() const {
        if (terms_.empty()) throw ZeroElementError("deglex_min of zero");
        auto best = terms_.begin()->first;
        for (const auto& [mn, c] : terms_)
            if (deglex_less(mn, best)) best = mn;
        return best;
    }

    friend QPlaneElement operator+(const QPlaneElement& a, const QPlaneElement& b) {
        a.check(b, "qp_add");
        QPlaneElement r = a;
        const Ring& D = a.alg_->domain();
        for (const auto& [mn, c] : b.terms_) {
            auto it = r.terms_.find(mn);
            if (it == r.terms_.end()) {
                r.terms_[mn] = c;
            } else {
                it->second = D.add(it->second, c);
                if (defpow::is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }
    QPlaneElement operator-() const {
        QPlaneElement r = *this;
        for (auto& [mn, c] : r.terms_) c = alg_->domain().neg(c);
        return r;
    }
    friend QPlaneElement operator-(const QPlaneElement& a, const QPlaneElement& b) { return a + (-b); }
    friend QPlaneElement operator*(const QPlaneElement& a, const QPlaneElement& b) {
        a.check(b, "qp_mul");
        QPlaneElement r(a.alg_);
        const Ring& D = a.alg_->domain();
        for (const auto& [mn, c1] : a.terms_) {
            for (const auto& [rs, c2] : b.terms_) {
                // (x^m y^n)(x^r y^s) = q^{rn} x^{m+r} y^{n+s}
                RingValue c = D.mul(D.mul(a.alg_->q_power(rs.first * mn.second), c1), c2);
                if (defpow::is_zero(c)) continue;
                std::pair<int, int> key{mn.first + rs.first, mn.second + rs.second};
                auto it = r.terms_.find(key);
                if (it == r.terms_.end()) {
                    r.terms_[key] = c;
                } else {
                    it->second = D.add(it->second, c);
                    if (defpow::is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    QPlaneElement pow(unsigned n) const {
        QPlaneElement acc = from_int(*alg_, BigInt(1));
        QPlaneElement b = *this;
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    std::string format() const {
        if (terms_.empty()) return "0";
        // print in descending deglex order
        std::vector<std::pair<int, int>> keys;
        for (const auto& [mn, c] : terms_) keys.push_back(mn);
        std::sort(keys.begin(), keys.end(),
                  [](const auto& a, const auto& b) { return deglex_less(b, a); });
        const RingValue one = alg_->domain().one();
        const RingValue minus_one = alg_->domain().neg(one);
        std::string out;
        for (const auto& mn : keys) {
            const RingValue& c = terms_.at(mn);
            std::string lit = alg_->domain().format(c);
            std::string mono;
            if (mn.first) mono += mn.first == 1 ? "x" : "x^" + std::to_string(mn.first);
            if (mn.second) {
                if (!mono.empty()) mono += "*";
                mono += mn.second == 1 ? "y" : "y^" + std::to_string(mn.second);
            }
            std::string term;
            if (mono.empty()) term = lit;
            else if (c == one) term = mono;
            else if (c == minus_one) term = "-" + mono;
            else term = lit + "*" + mono;
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

  private:
    const QPlaneAlgebra* alg_ = nullptr;
    std::map<std::pair<int, int>, RingValue> terms_;

    void check(const QPlaneElement& o, const char* op) const {
        if (alg_ != o.alg_) throw MixedAlgebraError(std::string(op) + ": mixed algebras");
    }
};

struct QPlaneDivResult {
    TV tv = TV::Unknown;
    std::optional<QPlaneElement> quotient;  // g with f = g*h
    std::string note;
};

// Right divisibility: h | f iff f = g*h for some g. Division algorithm along
// the deglex order; the quotient is unique by right cancellability, so each
// failed leading-term step is an exact refutation.
inline QPlaneDivResult qp_right_divides(const QPlaneElement& h, const QPlaneElement& f) {
    if (h.algebra() != f.algebra()) throw MixedAlgebraError("right_divides: mixed algebras");
    const QPlaneAlgebra& A = *h.algebra();
    const Ring& D = A.domain();
    if (h.is_zero())
        return f.is_zero() ? QPlaneDivResult{TV::True, QPlaneElement::zero(A), {}}
                           : QPlaneDivResult{TV::False, std::nullopt, "only 0 is a right multiple of 0"};
    QPlaneElement g = QPlaneElement::zero(A);
    QPlaneElement rem = f;
    auto hmax = h.is_zero() ? std::pair<int, int>{0, 0} : h.deglex_max();
    RingValue hlead = h.coeff(hmax.first, hmax.second);
    while (!rem.is_zero()) {
        auto rmax = rem.deglex_max();
        int u = rmax.first - hmax.first, v = rmax.second - hmax.second;
        if (u < 0 || v < 0)
            return {TV::False, std::nullopt, "leading support does not factor"};
        // coefficient of (g-term x^u y^v)*(h-lead x^r y^s) at rmax is q^{r v} c hlead
        RingValue scale = D.mul(A.q_power(hmax.first * v), hlead);
        auto dv = D.divides(scale, rem.coeff(rmax.first, rmax.second));
        if (dv.tv != TV::True)
            return {TV::False, std::nullopt, "leading coefficient not divisible in " + D.id()};
        QPlaneElement term = QPlaneElement::monomial(A, u, v, *dv.quotient);
        g = g + term;
        rem = rem - term * h;
    }
    return {TV::True, g, {}};
}

// Units of the quantum plane are the unit constants of D (max additivity
// forces degree (0,0) on both factors of 1).
inline Verdict qp_is_unit(const QPlaneElement& f) {
    if (f.is_zero()) return verdict_false("zero is not a unit");
    auto mx = f.deglex_max();
    if (mx != std::pair<int, int>{0, 0}) return verdict_false("nonconstant");
    auto inv = f.algebra()->domain().try_invert(f.coeff(0, 0));
    if (inv) return verdict_true("inverse " + f.algebra()->domain().format(*inv));
    return verdict_false("constant is not a unit of " + f.algebra()->domain().id());
}

// Is f of the form x^k with k >= 1?
inline std::optional<int> qp_power_of_x(const QPlaneElement& f) {
    if (f.terms().size() != 1) return std::nullopt;
    const auto& [mn, c] = *f.terms().begin();
    if (mn.second != 0 || mn.first < 1) return std::nullopt;
    if (!is_one(c)) return std::nullopt;
    return mn.first;
}

// Membership of f in the truth set of the power formula for x, with all
// divisibilities read as right divisibility. Exact: the truth set is exactly
// pow(x), since every right divisor of x^l has the form a*x^m.
inline Verdict qp_decide_lpow_x(const QPlaneElement& f, const Budget& budget) {
    const QPlaneAlgebra& A = *f.algebra();
    const Ring& D = A.domain();
    if (auto k = qp_power_of_x(f))
        return verdict_true("f = x^" + std::to_string(*k) + "; right divisors of x-powers are a*x^m");
    QPlaneElement one = QPlaneElement::from_int(A, BigInt(1));
    QPlaneElement x = QPlaneElement::x(A);
    if (f.is_zero())
        return verdict_false("x-1 does not right-divide the constant -1");
    if (qp_right_divides(x, f).tv != TV::True)
        return verdict_false("x does not right-divide f");
    if (qp_right_divides(x - one, f - one).tv != TV::True)
        return verdict_false("x-1 does not right-divide f-1");
    // f passes the two divisibility clauses but is not a power of x: hunt for
    // a right divisor that is neither a unit nor a right multiple of x
    auto refutes = [&](const QPlaneElement& cand) {
        if (cand.is_zero()) return false;
        if (qp_right_divides(cand, f).tv != TV::True) return false;
        if (qp_is_unit(cand).is_true()) return false;
        if (qp_right_divides(x, cand).tv == TV::True) return false;
        return true;
    };
    // quotients from peeling x-powers off f come first: for pure-x elements
    // they are right divisors and usually the refuter
    {
        QPlaneElement cur = f;
        while (true) {
            auto dv = qp_right_divides(x, cur);
            if (dv.tv != TV::True) break;
            cur = *dv.quotient;
            if (refutes(cur))
                return verdict_false("right divisor " + cur.format() +
                                     " is neither a unit nor a right multiple of x");
        }
    }
    // any right divisor has deglex-max at most max(f), so this support set is
    // complete; coefficients are complete when D is finite
    auto mx = f.deglex_max();
    const int total = mx.first + mx.second;
    std::vector<std::pair<int, int>> support;
    for (int tot = 0; tot <= total; ++tot)
        for (int m = tot; m >= 0; --m)
            if (tot < total || m <= mx.first) support.push_back({m, tot - m});
    std::vector<RingValue> pool =
        D.descriptor().is_finite ? D.elements() : D.box_elements(budget.coeff_bound);
    long long steps = 0;
    bool complete = D.descriptor().is_finite;
    std::vector<std::size_t> idx(support.size(), 0);  // 0 = monomial absent, i+1 = pool[i]
    while (true) {
        if (++steps > budget.step_limit) {
            complete = false;
            break;
        }
        QPlaneElement g = QPlaneElement::zero(A);
        for (std::size_t i = 0; i < support.size(); ++i)
            if (idx[i] > 0)
                g = g + QPlaneElement::monomial(A, support[i].first, support[i].second, pool[idx[i] - 1]);
        if (refutes(g))
            return verdict_false("right divisor " + g.format() +
                                 " is neither a unit nor a right multiple of x");
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
    if (complete)
        return verdict_unknown("complete divisor scan found no refuter; inconsistent with the x-power characterization");
    return verdict_unknown("divisor search exhausted without a refuter");
}

}  // namespace defpow

#endif
