#ifndef DEFPOW_BIGINT_HPP
#define DEFPOW_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "defpow/errors.hpp"

namespace defpow {

// Signed arbitrary-precision integer with an inline int64 fast lane.
// Values that fit in int64 are always stored in the fast lane, so equality
// is plain field comparison. Division truncates toward zero; the remainder
// carries the sign of the dividend.
class BigInt {
  public:
    BigInt() = default;
    BigInt(int v) : s_(v) {}
    BigInt(long v) : s_(v) {}
    BigInt(long long v) : s_(v) {}

    static BigInt from_string(const std::string& text) {
        std::size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) throw BadSpecError("empty integer literal");
        BigInt out(0);
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') throw BadSpecError("bad integer literal: " + text);
            out = out * BigInt(10) + BigInt(text[i] - '0');
        }
        return neg ? -out : out;
    }

    bool is_zero() const { return mag_.empty() ? s_ == 0 : false; }
    bool is_one() const { return mag_.empty() && s_ == 1; }
    bool is_negative() const { return mag_.empty() ? s_ < 0 : sign_ < 0; }
    bool is_even() const {
        if (mag_.empty()) return (s_ & 1) == 0;
        return (mag_[0] & 1u) == 0;
    }

    // Exact int64 value; callers must know the value fits (the fast lane is canonical).
    bool fits_int64() const { return mag_.empty(); }
    long long to_int64() const {
        if (!mag_.empty()) throw std::overflow_error("BigInt does not fit in int64");
        return s_;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        if (a.mag_.empty() != b.mag_.empty()) return false;
        if (a.mag_.empty()) return a.s_ == b.s_;
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.mag_.empty() && b.mag_.empty()) return a.s_ < b.s_ ? -1 : (a.s_ > b.s_ ? 1 : 0);
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        int c = mag_cmp(a.limbs(), b.limbs());
        return sa < 0 ? -c : c;
    }

    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt operator-() const {
        BigInt r = *this;
        if (r.mag_.empty()) {
            if (r.s_ == std::numeric_limits<long long>::min()) {
                r = from_limbs(1, to_limbs(r.s_));
            } else {
                r.s_ = -r.s_;
                return r;
            }
        }
        r.sign_ = -r.sign_;
        r.shrink();
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.mag_.empty() && b.mag_.empty()) {
            long long r;
            if (!__builtin_add_overflow(a.s_, b.s_, &r)) return BigInt(r);
        }
        int sa = a.sign(), sb = b.sign();
        if (sa == 0) return b;
        if (sb == 0) return a;
        auto la = a.limbs(), lb = b.limbs();
        if (sa == sb) return from_limbs(sa, mag_add(la, lb));
        int c = mag_cmp(la, lb);
        if (c == 0) return BigInt(0);
        if (c > 0) return from_limbs(sa, mag_sub(la, lb));
        return from_limbs(sb, mag_sub(lb, la));
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.mag_.empty() && b.mag_.empty()) {
            long long r;
            if (!__builtin_mul_overflow(a.s_, b.s_, &r)) return BigInt(r);
        }
        int s = a.sign() * b.sign();
        if (s == 0) return BigInt(0);
        return from_limbs(s, mag_mul(a.limbs(), b.limbs()));
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: q rounds toward zero, a == q*b + r, |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt division by zero");
        if (a.mag_.empty() && b.mag_.empty() &&
            !(a.s_ == std::numeric_limits<long long>::min() && b.s_ == -1)) {
            q = BigInt(a.s_ / b.s_);
            r = BigInt(a.s_ % b.s_);
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        mag_divmod(a.limbs(), b.limbs(), qm, rm);
        q = from_limbs(a.sign() * b.sign(), std::move(qm));
        r = from_limbs(a.sign(), std::move(rm));
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Nonnegative residue in [0, m), m > 0.
    BigInt mod_floor(const BigInt& m) const {
        BigInt r = *this % m;
        if (r.is_negative()) r += m;
        return r;
    }

    bool divisible_by(const BigInt& d) const {
        if (d.is_zero()) return is_zero();
        return (*this % d).is_zero();
    }

    BigInt abs() const { return is_negative() ? -*this : *this; }

    int sign() const {
        if (mag_.empty()) return s_ < 0 ? -1 : (s_ > 0 ? 1 : 0);
        return sign_;
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt acc(1), b = base;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

    std::string to_string() const {
        if (mag_.empty()) return std::to_string(s_);
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

  private:
    long long s_ = 0;
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static std::vector<std::uint32_t> to_limbs(long long v) {
        unsigned long long u =
            v == std::numeric_limits<long long>::min()
                ? static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull
                : static_cast<unsigned long long>(v < 0 ? -v : v);
        std::vector<std::uint32_t> m;
        while (u) {
            m.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
        return m;
    }

    std::vector<std::uint32_t> limbs() const { return mag_.empty() ? to_limbs(s_) : mag_; }

    static BigInt from_limbs(int sign, std::vector<std::uint32_t> m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
        BigInt r;
        if (m.empty()) return r;
        r.sign_ = sign;
        r.mag_ = std::move(m);
        r.shrink();
        return r;
    }

    void shrink() {
        if (mag_.empty()) return;
        if (mag_.size() > 2) return;
        unsigned long long u = mag_[0];
        if (mag_.size() == 2) u |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ > 0 && u <= static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
            s_ = static_cast<long long>(u);
        } else if (sign_ < 0 &&
                   u <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull) {
            s_ = u == static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull
                     ? std::numeric_limits<long long>::min()
                     : -static_cast<long long>(u);
        } else {
            return;
        }
        sign_ = 0;
        mag_.clear();
    }

    static int mag_cmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> mag_add(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
        }
        return r;
    }

    // Requires a >= b.
    static std::vector<std::uint32_t> mag_sub(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (s < 0) {
                s += (1ll << 32);
                borrow = 1;
            }
            r[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    static std::vector<std::uint32_t> mag_mul(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        return r;
    }

    static int bit_length(const std::vector<std::uint32_t>& a) {
        if (a.empty()) return 0;
        int bits = 32 * static_cast<int>(a.size() - 1);
        std::uint32_t top = a.back();
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    static bool get_bit(const std::vector<std::uint32_t>& a, int i) {
        return (a[static_cast<std::size_t>(i) / 32] >> (i % 32)) & 1u;
    }

    // Binary shift-subtract long division on magnitudes; fine at this scale.
    static void mag_divmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        int n = bit_length(a);
        q.assign(a.size(), 0);
        r.clear();
        for (int i = n - 1; i >= 0; --i) {
            // r = (r << 1) | bit_i(a)
            std::uint32_t carry = get_bit(a, i) ? 1u : 0u;
            for (std::size_t k = 0; k < r.size(); ++k) {
                std::uint32_t nc = r[k] >> 31;
                r[k] = (r[k] << 1) | carry;
                carry = nc;
            }
            if (carry) r.push_back(carry);
            if (mag_cmp(r, b) >= 0) {
                r = mag_sub(r, b);
                while (!r.empty() && r.back() == 0) r.pop_back();
                q[static_cast<std::size_t>(i) / 32] |= 1u << (i % 32);
            }
        }
    }
};

}  // namespace defpow

#endif
