#pragma once

#include "cstar/rational.hpp"

#include <cstdint>
#include <vector>

namespace cstar {

// [k0,...,kn] = k0 - 1/[k1,...,kn]
Rational cf_eval(const std::vector<Rational>& ks);
Rational cf_eval(const std::vector<std::int64_t>& ks);

// m/e = [k1,...,kn] with every ki >= 2; m = 1, e = 0 gives the empty chain
std::vector<std::int64_t> hj_expand(std::int64_t m, std::int64_t e);

// e' with e e' = 1 mod m, 0 < e' < m (0 for m = 1)
std::int64_t dual_residue(std::int64_t m, std::int64_t e);

struct FloorFrac {
    BigInt floor;
    Rational frac;
};
FloorFrac floor_frac(const Rational& q);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);

// Coprime pair (m, e); e may be any residue, residue() normalizes it.
struct HjPair {
    std::int64_t m = 1;
    std::int64_t e = 0;

    HjPair() = default;
    HjPair(std::int64_t m_, std::int64_t e_);

    std::int64_t residue() const { return mod64(e, m); }
    std::vector<std::int64_t> chain() const { return hj_expand(m, residue()); }
    HjPair dual() const { return HjPair(m, dual_residue(m, residue())); }
    bool empty() const { return m == 1; }

    // box for a fractional part e/m in [0,1)
    static HjPair of_fraction(const Rational& f);

    friend bool operator==(const HjPair& a, const HjPair& b)
    {
        return a.m == b.m && a.residue() == b.residue();
    }
};

}  // namespace cstar
