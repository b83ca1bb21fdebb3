#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace blockrb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in canonical form: reduced fraction with a
/// positive denominator. All arithmetic in this project bottoms out here;
/// there is no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        canonicalize();
    }

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    /// b^e for integer e; e < 0 requires b != 0.
    Rational pow(long long e) const {
        if (e == 0)
            return Rational(1);
        if (num_ == 0) {
            if (e < 0)
                throw std::domain_error("Rational: negative power of zero");
            return Rational(0);
        }
        const auto ue = static_cast<unsigned>(e < 0 ? -e : e);
        BigInt pn = boost::multiprecision::pow(num_, ue);
        BigInt pd = boost::multiprecision::pow(den_, ue);
        return e > 0 ? Rational(pn, pd) : Rational(pd, pn);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

private:
    void canonicalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    BigInt num_;
    BigInt den_;  // > 0
};

}  // namespace blockrb
