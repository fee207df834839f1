#include "cstar/zigzag.hpp"
#include "cstar/error.hpp"
#include "cstar/graph.hpp"
#include "cstar/hj.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace cstar {

Zigzag Zigzag::linear(std::initializer_list<long long> ws)
{
    return Zigzag(std::vector<Rational>(ws.begin(), ws.end()), false);
}

Zigzag Zigzag::cycle(std::initializer_list<long long> ws)
{
    return Zigzag(std::vector<Rational>(ws.begin(), ws.end()), true);
}

bool Zigzag::integral() const
{
    return std::all_of(w.begin(), w.end(), [](const Rational& r) { return r.is_integer(); });
}

std::vector<std::int64_t> Zigzag::ints() const
{
    std::vector<std::int64_t> out;
    out.reserve(w.size());
    for (const auto& r : w)
        out.push_back(r.to_int64());
    return out;
}

std::vector<std::vector<Rational>> Zigzag::form() const
{
    std::size_t n = w.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = w[i];
    if (!circular || n >= 3) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            m[i][i + 1] = m[i + 1][i] = 1;
        if (circular)
            m[0][n - 1] = m[n - 1][0] = 1;
    } else if (n == 2) {
        m[0][1] = m[1][0] = 2;
    } else if (n == 1) {
        m[0][0] = w[0] + 2;
    }
    return m;
}

// ---------------------------------------------------------------- notation

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(std::string_view t)
    {
        skip();
        if (s.substr(i, t.size()) == t) {
            i += t.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& what) const
    {
        fail(Errc::parse_error, what + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
    }
    std::string number()
    {
        skip();
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '-' || s[j] == '+' ||
                                s[j] == '/' || static_cast<unsigned char>(s[j]) >= 0x80))
            ++j;
        if (j == i)
            error("expected a weight");
        std::string t(s.substr(i, j - i));
        i = j;
        return t;
    }
};

}  // namespace

Zigzag parse_zigzag(std::string_view s)
{
    Cursor c{s};
    Zigzag z;
    std::string close;
    if (c.eat("[[")) {
        close = "]]";
    } else if (c.eat("((")) {
        close = "))";
        z.circular = true;
    } else {
        c.error("expected [[ or ((");
    }
    if (c.eat(close)) {
        if (z.circular)
            c.error("empty cycle");
    } else {
        for (;;) {
            if (c.eat("(")) {
                Rational w = Rational::parse(c.number());
                if (!c.eat(")") || !c.eat("_"))
                    c.error("expected )_k");
                std::string k = c.number();
                Rational kr = Rational::parse(k);
                if (!kr.is_integer() || kr.sign() < 0)
                    c.error("bad repeat count");
                for (std::int64_t t = 0; t < kr.to_int64(); ++t)
                    z.w.push_back(w);
            } else {
                z.w.push_back(Rational::parse(c.number()));
            }
            if (c.eat(close))
                break;
            if (!c.eat(","))
                c.error("expected , or " + close);
        }
    }
    c.skip();
    if (c.i != s.size())
        c.error("trailing input");
    if (z.circular && z.w.empty())
        c.error("empty cycle");
    return z;
}

std::string to_string(const Zigzag& z)
{
    std::string out = z.circular ? "((" : "[[";
    for (std::size_t i = 0; i < z.w.size();) {
        std::size_t j = i;
        while (j < z.w.size() && z.w[j] == z.w[i])
            ++j;
        std::size_t run = j - i;
        if (i > 0)
            out += ",";
        if (run >= 3 && !z.w[i].is_zero()) {
            out += "(" + z.w[i].str() + ")_" + std::to_string(run);
        } else {
            for (std::size_t t = 0; t < run; ++t)
                out += (t ? "," : "") + z.w[i].str();
        }
        i = j;
    }
    out += z.circular ? "))" : "]]";
    return out;
}

WeightedGraph to_graph(const Zigzag& z)
{
    if (z.circular && z.size() < 3)
        fail(Errc::not_simple, "cycles of length < 3 are not simple graphs");
    WeightedGraph g;
    for (std::size_t i = 0; i < z.size(); ++i)
        g.add_vertex({"v" + std::to_string(i), z.w[i], "curve", 0});
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
    if (z.circular)
        g.add_edge("v" + std::to_string(z.size() - 1), "v0");
    return g;
}

// ---------------------------------------------------------------- inertia

Inertia inertia(const std::vector<std::vector<Rational>>& m0)
{
    auto a = m0;
    std::size_t n = a.size();
    Inertia r;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t j = k + 1;
            while (j < n && a[j][j].is_zero())
                ++j;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (auto& row : a)
                    std::swap(row[k], row[j]);
            } else {
                j = k + 1;
                while (j < n && a[k][j].is_zero())
                    ++j;
                if (j == n) {
                    ++r.null;
                    continue;
                }
                // congruence e_k -> e_k + e_j makes the pivot 2 a_kj
                for (std::size_t t = 0; t < n; ++t)
                    a[k][t] += a[j][t];
                for (std::size_t t = 0; t < n; ++t)
                    a[t][k] += a[t][j];
            }
        }
        const Rational p = a[k][k];
        if (p.sign() > 0) ++r.positive;
        else ++r.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero())
                continue;
            Rational f = a[i][k] / p;
            for (std::size_t t = k; t < n; ++t)
                a[i][t] -= f * a[k][t];
        }
        for (std::size_t t = k + 1; t < n; ++t)
            a[k][t] = a[t][k] = 0;
    }
    return r;
}

Inertia inertia(const Zigzag& z)
{
    return inertia(z.form());
}

// ---------------------------------------------------------------- steps

std::string to_string(const Step& s)
{
    switch (s.op) {
    case Step::Op::blow_up_edge: return "blow_up_edge " + std::to_string(s.i);
    case Step::Op::blow_up_left: return "blow_up_left";
    case Step::Op::blow_up_right: return "blow_up_right";
    case Step::Op::blow_down: return "blow_down " + std::to_string(s.i);
    case Step::Op::rotate: return "rotate " + std::to_string(s.i);
    case Step::Op::reflect: return "reflect";
    }
    return "?";
}

Zigzag apply(const Zigzag& z, const Step& s)
{
    Zigzag r = z;
    auto& w = r.w;
    std::size_t n = w.size();
    switch (s.op) {
    case Step::Op::blow_up_edge:
        if (!z.circular) {
            if (s.i + 1 >= n)
                fail(Errc::site_not_found, "no edge after position " + std::to_string(s.i));
            w[s.i] -= 1;
            w[s.i + 1] -= 1;
            w.insert(w.begin() + static_cast<long>(s.i) + 1, Rational(-1));
        } else if (n == 1) {
            if (s.i != 0)
                fail(Errc::site_not_found, "a one-vertex cycle has one edge");
            w[0] -= 2;
            w.push_back(Rational(-1));
        } else {
            if (s.i >= n)
                fail(Errc::site_not_found, "no edge after position " + std::to_string(s.i));
            w[s.i] -= 1;
            w[(s.i + 1) % n] -= 1;
            w.insert(w.begin() + static_cast<long>(s.i) + 1, Rational(-1));
        }
        break;
    case Step::Op::blow_up_left:
    case Step::Op::blow_up_right:
        if (z.circular)
            fail(Errc::not_linear, "a cycle has no ends");
        if (n == 0) {
            w.push_back(Rational(-1));
        } else if (s.op == Step::Op::blow_up_left) {
            w[0] -= 1;
            w.insert(w.begin(), Rational(-1));
        } else {
            w[n - 1] -= 1;
            w.push_back(Rational(-1));
        }
        break;
    case Step::Op::blow_down:
        if (s.i >= n)
            fail(Errc::site_not_found, "no vertex at position " + std::to_string(s.i));
        if (w[s.i] != Rational(-1))
            fail(Errc::not_minus_one, "weight at " + std::to_string(s.i) + " is " + w[s.i].str());
        if (!z.circular) {
            if (s.i > 0) w[s.i - 1] += 1;
            if (s.i + 1 < n) w[s.i + 1] += 1;
        } else if (n == 1) {
            fail(Errc::not_simple, "cannot blow down the only vertex of a cycle");
        } else if (n == 2) {
            w[1 - s.i] += 2;
        } else {
            w[(s.i + n - 1) % n] += 1;
            w[(s.i + 1) % n] += 1;
        }
        w.erase(w.begin() + static_cast<long>(s.i));
        break;
    case Step::Op::rotate:
        if (n > 0)
            std::rotate(w.begin(), w.begin() + static_cast<long>(s.i % n), w.end());
        break;
    case Step::Op::reflect:
        std::reverse(w.begin(), w.end());
        break;
    }
    return r;
}

Zigzag replay(const Zigzag& z, const TransformationLog& log)
{
    Zigzag r = z;
    for (const auto& s : log)
        r = apply(r, s);
    return r;
}

// ---------------------------------------------------------------- ETs

TransformationLog et_steps(const Zigzag& z, std::size_t i, Direction d, bool outer)
{
    using Op = Step::Op;
    std::size_t n = z.size();
    if (i >= n)
        fail(Errc::site_not_found, "no vertex at position " + std::to_string(i));
    if (!z.w[i].is_zero())
        fail(Errc::not_zero, "weight at " + std::to_string(i) + " is " + z.w[i].str());
    if (z.circular) {
        if (outer || n < 3)
            fail(Errc::not_linear, "elementary transformations on cycles need length >= 3 and an inner zero");
        // rotate the zero to position 1 so no index wraps
        std::size_t k = (i + n - 1) % n;
        TransformationLog log;
        if (k != 0)
            log.push_back({Op::rotate, k});
        Zigzag zr = replay(z, log);
        auto inner = et_steps(Zigzag(zr.w, false), 1, d, false);
        log.insert(log.end(), inner.begin(), inner.end());
        if (k != 0)
            log.push_back({Op::rotate, n - k});
        return log;
    }
    bool left_end = i == 0, right_end = i + 1 == n;
    if (!outer) {
        if (left_end || right_end)
            fail(Errc::not_linear, "inner elementary transformation needs two neighbours");
        if (d == Direction::right)
            return {{Op::blow_up_edge, i - 1}, {Op::blow_down, i + 1}};
        return {{Op::blow_up_edge, i}, {Op::blow_down, i}};
    }
    if (n == 1)
        return {{Op::blow_up_right, 0}, {Op::blow_down, 0}};
    if (!left_end && !right_end)
        fail(Errc::not_linear, "outer elementary transformation needs the zero at an end");
    if (left_end) {
        if (d == Direction::right)
            return {{Op::blow_up_left, 0}, {Op::blow_down, 1}};
        return {{Op::blow_up_edge, 0}, {Op::blow_down, 0}};
    }
    if (d == Direction::right)
        return {{Op::blow_up_edge, n - 2}, {Op::blow_down, n}};
    return {{Op::blow_up_right, 0}, {Op::blow_down, n - 1}};
}

Zigzag elementary_transformation(const Zigzag& z, std::size_t zero, Direction d, bool outer)
{
    return replay(z, et_steps(z, zero, d, outer));
}

// ---------------------------------------------------------------- contraction

namespace {

using Chain = std::vector<std::int64_t>;

bool contract_dfs(const Chain& c, const Chain& target, std::set<Chain>& dead, std::vector<std::size_t>& path)
{
    if (c == target)
        return true;
    if (c.size() <= target.size() || dead.count(c))
        return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != -1)
            continue;
        Chain d = c;
        if (i > 0) d[i - 1] += 1;
        if (i + 1 < d.size()) d[i + 1] += 1;
        d.erase(d.begin() + static_cast<long>(i));
        path.push_back(i);
        if (contract_dfs(d, target, dead, path))
            return true;
        path.pop_back();
    }
    dead.insert(c);
    return false;
}

}  // namespace

Contraction is_contractible_to(const Zigzag& chain, Target t)
{
    if (chain.circular)
        fail(Errc::not_linear, "contractibility is decided for linear chains");
    Chain c = chain.ints();
    Chain target;
    if (t == Target::zero) target = {0};
    else if (t == Target::minus_one) target = {-1};
    std::set<Chain> dead;
    Contraction r;
    r.ok = contract_dfs(c, target, dead, r.blowdowns);
    if (!r.ok)
        r.blowdowns.clear();
    return r;
}

Rational contract_subchain(const Rational& c0_weight, const std::vector<Rational>& ks)
{
    for (const auto& k : ks)
        if (k < Rational(2))
            fail(Errc::chain_entry_below_two, "chain entry " + k.str());
    if (ks.empty())
        return c0_weight;
    return c0_weight + Rational(1) / cf_eval(ks);
}

}  // namespace cstar
