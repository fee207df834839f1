#include "cstar/hj.hpp"
#include "cstar/error.hpp"

#include <numeric>
#include <string>

namespace cstar {

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t mod64(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Rational cf_eval(const std::vector<Rational>& ks)
{
    if (ks.empty())
        fail(Errc::out_of_range, "empty continued fraction");
    Rational v = ks.back();
    for (auto it = ks.rbegin() + 1; it != ks.rend(); ++it) {
        if (v.is_zero())
            fail(Errc::zero_tail, "a tail of the continued fraction evaluates to 0");
        v = *it - Rational(1) / v;
    }
    return v;
}

Rational cf_eval(const std::vector<std::int64_t>& ks)
{
    return cf_eval(std::vector<Rational>(ks.begin(), ks.end()));
}

std::vector<std::int64_t> hj_expand(std::int64_t m, std::int64_t e)
{
    if (m < 1)
        fail(Errc::out_of_range, "m must be positive");
    if (m == 1) {
        if (e != 0)
            fail(Errc::out_of_range, "m = 1 requires e = 0");
        return {};
    }
    if (e <= 0 || e >= m)
        fail(Errc::out_of_range, "need 0 < e < m, got e=" + std::to_string(e) + " m=" + std::to_string(m));
    if (gcd64(m, e) != 1)
        fail(Errc::not_coprime, std::to_string(m) + ", " + std::to_string(e));
    std::vector<std::int64_t> ks;
    while (e > 0) {
        std::int64_t k = (m + e - 1) / e;
        ks.push_back(k);
        std::int64_t r = k * e - m;
        m = e;
        e = r;
    }
    return ks;
}

std::int64_t dual_residue(std::int64_t m, std::int64_t e)
{
    if (m < 1)
        fail(Errc::out_of_range, "m must be positive");
    if (m == 1)
        return 0;
    if (gcd64(m, e) != 1)
        fail(Errc::not_coprime, std::to_string(m) + ", " + std::to_string(e));
    std::int64_t r0 = m, r1 = mod64(e, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    return mod64(s0, m);
}

FloorFrac floor_frac(const Rational& q)
{
    BigInt f = q.floor();
    return {f, q - Rational(f)};
}

HjPair::HjPair(std::int64_t m_, std::int64_t e_) : m(m_), e(e_)
{
    if (m < 1)
        fail(Errc::out_of_range, "m must be positive");
    if (gcd64(m, mod64(e, m)) != 1 && m != 1)
        fail(Errc::not_coprime, std::to_string(m) + ", " + std::to_string(e));
    if (m == 1)
        e = 0;
}

HjPair HjPair::of_fraction(const Rational& f)
{
    Rational g = f.frac();
    return HjPair(to_int64(g.den()), to_int64(g.num()));
}

}  // namespace cstar
