#include "cstar/rational.hpp"
#include "cstar/error.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace cstar {

Rational::Rational(const BigInt& p, const BigInt& q)
{
    if (q == 0)
        fail(Errc::out_of_range, "zero denominator");
    v_ = q < 0 ? boost::multiprecision::cpp_rational(-p, -q) : boost::multiprecision::cpp_rational(p, q);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.v_ == 0)
        fail(Errc::out_of_range, "division by zero");
    v_ /= o.v_;
    return *this;
}

BigInt Rational::floor() const
{
    BigInt n = num(), d = den();
    BigInt q = n / d;
    if (n < 0 && q * d != n)
        --q;
    return q;
}

BigInt Rational::ceil() const
{
    return -Rational(-v_).floor();
}

std::int64_t to_int64(const BigInt& n)
{
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        fail(Errc::out_of_range, "integer does not fit in 64 bits");
    return n.convert_to<std::int64_t>();
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer())
        fail(Errc::out_of_range, "not an integer: " + str());
    return cstar::to_int64(num());
}

std::string Rational::str() const
{
    if (is_integer())
        return num().str();
    return num().str() + "/" + den().str();
}

static bool parse_int(std::string_view s, BigInt& out)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size())
        return false;
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? BigInt(-v) : v;
    return true;
}

Rational Rational::parse(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    std::string t;
    // accept the typographic minus
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.substr(i, 3) == "\xE2\x88\x92") {
            t += '-';
            i += 2;
        } else {
            t += s[i];
        }
    }
    auto slash = t.find('/');
    BigInt p, q = 1;
    bool ok = slash == std::string::npos
        ? parse_int(t, p)
        : parse_int(std::string_view(t).substr(0, slash), p) &&
          parse_int(std::string_view(t).substr(slash + 1), q);
    if (!ok || q == 0)
        fail(Errc::parse_error, "bad rational '" + std::string(s) + "'");
    return Rational(p, q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace cstar
