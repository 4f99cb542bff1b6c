#ifndef DEFPOW_RATIONAL_HPP
#define DEFPOW_RATIONAL_HPP

#include <string>

#include "defpow/bigint.hpp"

namespace defpow {

// Exact rational with positive normalized denominator. Used for division of
// integer polynomials through the fraction field followed by an integrality check.
class BigRational {
  public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    BigRational operator-() const { return BigRational(-num_, den_); }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

  private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_zero() && !g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (num_.is_zero()) den_ = BigInt(1);
    }
};

}  // namespace defpow

#endif
