#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

namespace equik {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Integer& z) { return z.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integral(q))
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// An element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
class Root2Scalar {
public:
    Root2Scalar() = default;
    Root2Scalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    Root2Scalar(int a) : a_(a) {}

    static Root2Scalar sqrt2() { return {0, 1}; }
    /// 1/sqrt(2) = sqrt(2)/2
    static Root2Scalar inv_sqrt2() { return {0, Rational(1, 2)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& root2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a^2 - 2 b^2
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    Root2Scalar conjugate() const { return {a_, -b_}; }

    Root2Scalar inverse() const {
        Rational nm = norm();
        if (nm.is_zero())
            throw std::domain_error("Root2Scalar: division by zero");
        return {a_ / nm, -b_ / nm};
    }

    Root2Scalar operator-() const { return {-a_, -b_}; }

    Root2Scalar& operator+=(const Root2Scalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Root2Scalar& operator-=(const Root2Scalar& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Root2Scalar& operator*=(const Root2Scalar& o) {
        *this = *this * o;
        return *this;
    }

    friend Root2Scalar operator+(Root2Scalar x, const Root2Scalar& y) { return x += y; }
    friend Root2Scalar operator-(Root2Scalar x, const Root2Scalar& y) { return x -= y; }
    friend Root2Scalar operator*(const Root2Scalar& x, const Root2Scalar& y) {
        // Pin-lift coefficients are almost always purely rational or purely irrational.
        if (x.b_.is_zero()) {
            if (y.b_.is_zero())
                return {x.a_ * y.a_, 0};
            return {x.a_ * y.a_, x.a_ * y.b_};
        }
        if (x.a_.is_zero()) {
            if (y.a_.is_zero())
                return {2 * x.b_ * y.b_, 0};
            if (y.b_.is_zero())
                return {0, x.b_ * y.a_};
        }
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend Root2Scalar operator/(const Root2Scalar& x, const Root2Scalar& y) { return x * y.inverse(); }

    friend bool operator==(const Root2Scalar&, const Root2Scalar&) = default;

    std::string str() const {
        if (b_.is_zero())
            return to_string(a_);
        std::string root = b_ == 1 ? "sqrt2" : b_ == -1 ? "-sqrt2" : to_string(b_) + "*sqrt2";
        if (a_.is_zero())
            return root;
        return to_string(a_) + (b_ > 0 ? "+" : "") + root;
    }

private:
    Rational a_{0};
    Rational b_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Root2Scalar& s) { return os << s.str(); }

} // namespace equik
