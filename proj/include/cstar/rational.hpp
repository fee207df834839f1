#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cstar {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& p, const BigInt& q);

    // "p/q", "n", optional sign, surrounding blanks ignored
    static Rational parse(std::string_view s);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_.sign(); }

    BigInt floor() const;
    BigInt ceil() const;
    Rational frac() const { return *this - Rational(floor()); }

    std::int64_t to_int64() const;
    std::string str() const;

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// checked narrowing of a big integer
std::int64_t to_int64(const BigInt& n);

}  // namespace cstar
