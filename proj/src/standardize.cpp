#include "cstar/error.hpp"
#include "cstar/zigzag.hpp"

#include <algorithm>

namespace cstar {

namespace {

using Op = Step::Op;

bool all_at_most(const std::vector<Rational>& w, std::size_t from, std::size_t to, const Rational& bound)
{
    for (std::size_t i = from; i < to; ++i)
        if (w[i] > bound)
            return false;
    return true;
}

bool zeros(const std::vector<Rational>& w, std::size_t from, std::size_t to)
{
    for (std::size_t i = from; i < to; ++i)
        if (!w[i].is_zero())
            return false;
    return true;
}

bool linear_standard(const std::vector<Rational>& w)
{
    std::size_t n = w.size();
    if (n == 1)
        return w[0].is_zero();
    if (n == 3 && zeros(w, 0, 3))
        return true;
    return n >= 2 && zeros(w, 0, 2) && all_at_most(w, 2, n, Rational(-2));
}

// literal match, no rotation
bool cycle_grammar(const std::vector<Rational>& w)
{
    std::size_t n = w.size();
    if (n == 0)
        return false;
    if (n <= 4 && zeros(w, 0, n - 1) && w[n - 1] <= Rational(0))
        return true;
    for (std::size_t b : {std::size_t(0), std::size_t(2)}) {
        if (n <= b || !zeros(w, 0, b))
            continue;
        if (n - b == 2 && w[b] == Rational(-1) && w[b + 1] == Rational(-1))
            return true;
        if (all_at_most(w, b, n, Rational(-2)))
            return true;
    }
    return false;
}

struct Runner {
    Zigzag z;
    TransformationLog log;

    void run(Step s)
    {
        z = apply(z, s);
        log.push_back(s);
    }
    void run(const TransformationLog& steps)
    {
        for (const auto& s : steps)
            run(s);
    }
    void et(std::size_t i, Direction d, bool outer = false) { run(et_steps(z, i, d, outer)); }
    void rotate(std::ptrdiff_t k)
    {
        auto n = static_cast<std::ptrdiff_t>(z.size());
        k = ((k % n) + n) % n;
        if (k != 0)
            run(Step{Op::rotate, static_cast<std::size_t>(k)});
    }
    std::int64_t at(std::size_t i) const { return z.w[i].to_int64(); }
};

TransformationLog canonical_steps(const Zigzag& z)
{
    std::size_t n = z.size();
    TransformationLog best_log;
    std::vector<Rational> best;
    bool found = false;
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t k = 0; k < n; ++k) {
            TransformationLog log;
            if (refl)
                log.push_back({Op::reflect, 0});
            if (k)
                log.push_back({Op::rotate, k});
            auto c = replay(z, log);
            if (!cycle_grammar(c.w))
                continue;
            if (!found || best < c.w) {
                best = c.w;
                best_log = log;
                found = true;
            }
        }
    }
    if (!found)
        fail(Errc::not_standard, to_string(z) + " matches no circular standard form");
    return best_log;
}

bool cycle_standard(const Zigzag& z)
{
    for (int refl = 0; refl < 2; ++refl) {
        auto w = z.w;
        if (refl)
            std::reverse(w.begin(), w.end());
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (cycle_grammar(w))
                return true;
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
    }
    return false;
}

void require_integral(const Zigzag& z)
{
    if (!z.integral())
        fail(Errc::not_rational, "standardize needs integral weights, got " + to_string(z));
}

// ---------------------------------------------------------------- linear

// pair of zeros at (p, p+1) moved one step left or right
void pair_left(Runner& r, std::size_t p)
{
    auto a = r.at(p - 1);
    for (std::int64_t t = 0; t < std::abs(a); ++t)
        r.et(p, a > 0 ? Direction::right : Direction::left);
}

void pair_right(Runner& r, std::size_t p)
{
    auto b = r.at(p + 2);
    for (std::int64_t t = 0; t < std::abs(b); ++t)
        r.et(p + 1, b > 0 ? Direction::left : Direction::right);
}

void move_pair(Runner& r, std::size_t& p, std::size_t target)
{
    while (p > target)
        pair_left(r, p--);
    while (p < target)
        pair_right(r, p++);
}

bool done(const Runner& r, StandardMode mode)
{
    return linear_standard(r.z.w) || (mode == StandardMode::semistandard && is_semistandard(r.z));
}

Standardized standardize_linear(const Zigzag& z, StandardMode mode)
{
    Runner r{z, {}};
    if (z.empty())
        fail(Errc::no_standard_form, "empty zigzag");
    Inertia in = inertia(z);
    if (in.positive > 1)
        fail(Errc::not_negative_semidefinite_enough,
             to_string(z) + " has " + std::to_string(in.positive) + " positive eigenvalues");
    if (in.positive == 0 && in.null == 0)
        fail(Errc::no_standard_form, to_string(z) + " is negative definite");

    auto blow_down_all = [&] {
        for (;;) {
            if (r.z.size() < 2)
                return;
            auto it = std::find(r.z.w.begin(), r.z.w.end(), Rational(-1));
            if (it == r.z.w.end())
                return;
            r.run(Step{Op::blow_down, static_cast<std::size_t>(it - r.z.w.begin())});
        }
    };

    if (done(r, mode))
        return {r.z, r.log};
    blow_down_all();
    if (done(r, mode) || in.positive == 0) {
        if (!linear_standard(r.z.w) && in.positive == 0)
            fail(Errc::internal, "semidefinite chain did not reduce to [[0]]: " + to_string(r.z));
        return {r.z, r.log};
    }

    // one vertex of weight >= 0 becomes a 0
    std::size_t v = static_cast<std::size_t>(std::max_element(r.z.w.begin(), r.z.w.end()) - r.z.w.begin());
    if (r.at(v) < 0)
        fail(Errc::internal, "no nonnegative vertex in " + to_string(r.z));
    if (r.z.size() == 1)
        r.run(Step{Op::blow_up_right, 0});
    while (r.at(v) > 0) {
        if (v + 1 < r.z.size()) {
            r.run(Step{Op::blow_up_edge, v});
        } else {
            r.run(Step{Op::blow_up_edge, v - 1});
            ++v;
        }
    }
    if (done(r, mode))
        return {r.z, r.log};

    // second zero next to it
    std::size_t n = r.z.size();
    std::size_t p;
    if (v + 1 < n) {
        auto b = r.at(v + 1);
        bool outer = v == 0;
        for (std::int64_t t = 0; t < std::abs(b); ++t)
            r.et(v, b < 0 ? Direction::right : Direction::left, outer);
        p = v;
    } else {
        auto a = r.at(v - 1);
        for (std::int64_t t = 0; t < std::abs(a); ++t)
            r.et(v, a < 0 ? Direction::left : Direction::right, true);
        p = v - 1;
    }
    move_pair(r, p, 0);

    // blow down the -1s behind the pair, one at a time
    for (;;) {
        if (done(r, mode))
            return {r.z, r.log};
        std::size_t j = 0;
        bool found = false;
        for (std::size_t i = 2; i < r.z.size(); ++i) {
            if (r.at(i) == -1) {
                j = i;
                found = true;
                break;
            }
        }
        if (!found)
            break;
        // the -1 sits at index j of the weights without the pair
        std::size_t target = j - 2;
        move_pair(r, p, target);
        std::size_t m1 = p + 2;
        r.run(Step{Op::blow_down, m1});
        r.et(p, Direction::left, p == 0);
        move_pair(r, p, 0);
    }
    if (!done(r, mode))
        fail(Errc::internal, "linear standardization stalled at " + to_string(r.z));
    return {r.z, r.log};
}

// ---------------------------------------------------------------- circular

// ((0,0,t_1,...,t_m)) with every t_i <= -2: moving the pair past t_1 gives
// ((0,0,t_2,...,t_m,t_1)), so the tail only matters up to rotation
Standardized finish_cycle(Runner& r)
{
    r.run(canonical_steps(r.z));
    std::size_t n = r.z.size();
    if (n < 4 || !zeros(r.z.w, 0, 2) || !all_at_most(r.z.w, 2, n, Rational(-2)))
        return {r.z, r.log};
    Runner best = r;
    for (int refl = 0; refl < 2; ++refl) {
        Runner c = r;
        if (refl) {
            c.run(Step{Op::reflect, 0});
            c.rotate(static_cast<std::ptrdiff_t>(n - 2));
        }
        for (std::size_t j = 0; j < n - 2; ++j) {
            if (best.z.w < c.z.w)
                best = c;
            auto t = c.at(2);
            for (std::int64_t k = 0; k < -t; ++k)
                c.et(1, Direction::right);
            c.rotate(1);
        }
    }
    r = best;
    return {r.z, r.log};
}

Standardized standardize_cycle(const Zigzag& z)
{
    Runner r{z, {}};
    Inertia in = inertia(z);
    if (in.positive > 1)
        fail(Errc::not_negative_semidefinite_enough,
             to_string(z) + " has " + std::to_string(in.positive) + " positive eigenvalues");

    for (;;) {
        if (cycle_standard(r.z))
            return finish_cycle(r);
        std::size_t n = r.z.size();
        auto it = std::find(r.z.w.begin(), r.z.w.end(), Rational(-1));
        if (it == r.z.w.end())
            break;
        std::size_t i = static_cast<std::size_t>(it - r.z.w.begin());
        if (n >= 3) {
            r.run(Step{Op::blow_down, i});
        } else if (n == 2 && r.at(1 - i) <= -2) {
            r.run(Step{Op::blow_down, i});
        } else {
            break;
        }
    }

    if (r.z.size() == 1) {
        r.run(Step{Op::blow_up_edge, 0});
        if (cycle_standard(r.z))
            return finish_cycle(r);
    }
    if (r.z.size() == 2)
        r.run(Step{Op::blow_up_edge, 0});

    // a zero at position 1 and its partner at 2
    auto mx = std::max_element(r.z.w.begin(), r.z.w.end());
    r.rotate(mx - r.z.w.begin());
    if (r.at(0) < 0)
        fail(Errc::internal, "no nonnegative vertex in " + to_string(r.z));
    while (r.at(0) > 0)
        r.run(Step{Op::blow_up_edge, 0});
    r.rotate(-1);
    {
        auto b = r.at(2);
        for (std::int64_t t = 0; t < std::abs(b); ++t)
            r.et(1, b < 0 ? Direction::right : Direction::left);
    }
    r.rotate(1);

    // pair at (0,1); blow down -1s in the rest of the cycle
    for (;;) {
        if (cycle_standard(r.z))
            return finish_cycle(r);
        std::size_t n = r.z.size();
        std::size_t m = n - 2;
        auto wpos = std::find(r.z.w.begin() + 2, r.z.w.end(), Rational(-1));
        if (m >= 2 && wpos != r.z.w.end()) {
            // rotate the rest by moving the pair right past w[2]
            while (r.at(2) != -1) {
                auto b = r.at(2);
                for (std::int64_t t = 0; t < std::abs(b); ++t)
                    r.et(1, b > 0 ? Direction::left : Direction::right);
                r.rotate(1);
            }
            r.run(Step{Op::blow_down, 2});
            r.rotate(-1);
            r.et(1, Direction::left);
            r.rotate(1);
            continue;
        }
        if (m == 1) {
            auto w = r.at(2);
            if (w == 1 || w == 2) {
                r.run(Step{Op::blow_up_edge, 1});
                if (w == 2)
                    r.et(0, Direction::right);
                return finish_cycle(r);
            }
        }
        fail(Errc::internal, "circular standardization stalled at " + to_string(r.z));
    }
}

}  // namespace

bool is_standard(const Zigzag& z)
{
    if (z.empty())
        return false;
    return z.circular ? cycle_standard(z) : linear_standard(z.w);
}

bool is_semistandard(const Zigzag& z)
{
    if (z.circular)
        return cycle_standard(z);
    const auto& w = z.w;
    std::size_t n = w.size();
    if (linear_standard(w))
        return true;
    if (n >= 1 && w[0].is_zero() && all_at_most(w, 1, n, Rational(-2)))
        return true;
    return n == 3 && w[0].is_zero() && w[2].is_zero() && w[1] <= Rational(-2);
}

Standardized standardize(const Zigzag& z, StandardMode mode)
{
    require_integral(z);
    if (z.circular)
        return standardize_cycle(z);
    return standardize_linear(z, mode);
}

Zigzag canonical_cycle(const Zigzag& z)
{
    return replay(z, canonical_steps(z));
}

Zigzag reverse(const Zigzag& z)
{
    Zigzag r = z;
    if (!z.circular) {
        if (z.size() >= 2 && linear_standard(z.w))
            std::reverse(r.w.begin() + 2, r.w.end());
        else
            std::reverse(r.w.begin(), r.w.end());
        return r;
    }
    std::reverse(r.w.begin(), r.w.end());
    std::vector<Rational> best;
    bool best_std = false;
    for (std::size_t k = 0; k < r.size(); ++k) {
        auto w = r.w;
        std::rotate(w.begin(), w.begin() + static_cast<long>(k), w.end());
        bool s = cycle_grammar(w);
        if (best.empty() || (s && !best_std) || (s == best_std && best < w)) {
            best = w;
            best_std = s;
        }
    }
    r.w = best;
    return r;
}

}  // namespace cstar
