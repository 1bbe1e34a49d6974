// Exact arbitrary-precision integers and reduced fractions.
//
// Int is boost::multiprecision::cpp_int (header-only, no linking). Rational
// keeps gcd(|num|, den) = 1 and den >= 1 from construction on, so equality
// is structural.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "polyprod/errors.hpp"

namespace polyprod {

using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& x) { return x.sign(); }

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design
    Rational(int value) : num_(value), den_(1) {}             // NOLINT

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::division_by_zero, "rational with zero denominator");
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational& operator+=(const Rational& rhs) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& rhs) { return *this += -rhs; }
    Rational& operator*=(const Rational& rhs) {
        num_ *= rhs.num_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) fail(errc::division_by_zero, "division by zero rational");
        num_ *= rhs.den_;
        den_ *= rhs.num_;
        normalize();
        return *this;
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

}  // namespace polyprod
