#include "cstar/classify.hpp"
#include "cstar/error.hpp"
#include "cstar/hj.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <functional>

using namespace cstar;

namespace {

Errc code_of(auto f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::internal;
}

DpdPair dg(std::int64_t k, std::int64_t r)
{
    DpdPair p;
    p.plus.set("p0", Rational(-1, r));
    p.minus.set("p1", Rational(-1, k + 1 - r));
    return p;
}

Zigzag standard(const std::vector<std::int64_t>& tail)
{
    Zigzag z = Zigzag::linear({0, 0});
    for (auto w : tail)
        z.w.emplace_back(w);
    return z;
}

// every tail of length 1..max_len with entries in [lo, -2]
void for_each_tail(std::size_t max_len, std::int64_t lo, const std::function<void(const std::vector<std::int64_t>&)>& f)
{
    std::vector<std::int64_t> t;
    std::function<void()> rec = [&] {
        if (!t.empty())
            f(t);
        if (t.size() == max_len)
            return;
        for (std::int64_t w = -2; w >= lo; --w) {
            t.push_back(w);
            rec();
            t.pop_back();
        }
    };
    rec();
}

oracle::Chain box(std::int64_t m, std::int64_t e)
{
    oracle::Chain c;
    while (e > 0) {
        std::int64_t k = (m + e - 1) / e;
        c.push_back(-k);
        std::int64_t r = k * e - m;
        m = e;
        e = r;
    }
    return c;
}

}  // namespace

TEST_CASE("gizatullin and toric predicates")
{
    CHECK(is_gizatullin(dg(3, 2)));
    CHECK(is_gizatullin(DpdPair{}));
    DpdPair two;
    two.plus.set("a", Rational(-1, 2));
    two.plus.set("b", Rational(-1, 3));
    CHECK(!is_gizatullin(two));
    DpdPair off;
    off.base.points_at_infinity = 2;
    CHECK(!is_gizatullin(off));

    DpdPair t;
    t.plus.set("0", Rational(-2, 5));
    CHECK(is_toric_pair(t));
    CHECK(is_toric_pair(DpdPair{}));
    for (std::int64_t k = 1; k <= 6; ++k)
        for (std::int64_t r = 1; r <= k; ++r)
            CHECK(!is_toric_pair(dg(k, r)));
    DpdPair shifted;
    shifted.plus.set("a", Rational(-3));
    shifted.minus.set("a", Rational(3));
    shifted.plus.set("b", Rational(-1, 2));
    CHECK(is_toric_pair(shifted));
    CHECK(code_of([&] { is_toric_pair(off); }) == Errc::unsupported_base);
}

TEST_CASE("standard zigzag of a toric surface")
{
    auto a = standard_zigzag_of_toric(std::vector<std::int64_t>{-2});
    CHECK(a.minus.at("0") == Rational(1, 3) - Rational(1));
    auto b = standard_zigzag_of_toric(std::vector<std::int64_t>{-2, -3});
    CHECK(b.minus.at("0") == Rational(3, 8) - Rational(1));
    CHECK(standard_zigzag_of_toric(Zigzag::linear({0, 0, 0})) == DpdPair{});
    CHECK(code_of([] { standard_zigzag_of_toric(std::vector<std::int64_t>{-1}); }) == Errc::not_standard);
    CHECK(code_of([] { standard_zigzag_of_toric(Zigzag::linear({0, -1, -2})); }) == Errc::not_standard);
}

TEST_CASE("toric round trip")
{
    int count = 0;
    auto check = [&](const Zigzag& z) {
        DpdPair p = standard_zigzag_of_toric(z);
        REQUIRE(is_toric_pair(p));
        auto bz = boundary_zigzag(p);
        REQUIRE(bz);
        Zigzag s = standardize(*bz).zigzag;
        REQUIRE((s == z || reverse(s) == z));
        ++count;
    };
    check(Zigzag::linear({0, 0}));
    check(Zigzag::linear({0, 0, 0}));
    for_each_tail(4, -5, [&](const std::vector<std::int64_t>& t) {
        check(standard(t));
        // the continued fraction of the tail, with the first entry raised by one
        oracle::Chain ks;
        for (auto w : t)
            ks.push_back(-w);
        ks[0] += 1;
        oracle::Q me = oracle::cf(ks);
        auto p = standard_zigzag_of_toric(t);
        Rational em(BigInt(boost::multiprecision::denominator(me)), BigInt(boost::multiprecision::numerator(me)));
        REQUIRE(p.minus.at("0") == em - Rational(1));
    });
    CHECK(count > 300);
}

TEST_CASE("smooth hyperbolic zigzag examples")
{
    for (std::int64_t w = -2; w >= -9; --w)
        CHECK(smooth_hyperbolic_zigzag_test(standard({w})).verdict);
    CHECK(!smooth_hyperbolic_zigzag_test(standard({-3, -3})).verdict);
    auto v = smooth_hyperbolic_zigzag_test(standard({-3, -4, -2}));
    CHECK(v.verdict);
    CHECK(!v.matches.empty());
    CHECK(smooth_hyperbolic_zigzag_test(Zigzag::linear({0, 0})).verdict);
    CHECK(smooth_hyperbolic_zigzag_test(Zigzag::linear({0, 0, 0})).verdict);
    CHECK(!smooth_hyperbolic_zigzag_test(Zigzag::linear({0})).verdict);
    CHECK(code_of([] { smooth_hyperbolic_zigzag_test(Zigzag::linear({0, -1})); }) == Errc::not_standard);

    auto c = smooth_zigzag_contractibility_test(standard({-2, -2, -5, -2}));
    CHECK(c.verdict);
    CHECK(smooth_zigzag_contractibility_test(standard({-2, -3})).verdict);
    CHECK(!smooth_zigzag_contractibility_test(standard({-3, -3, -3})).verdict);
    CHECK(code_of([] { smooth_zigzag_contractibility_test(Zigzag::cycle({0, 0, -2})); }) == Errc::not_standard);
}

TEST_CASE("smooth zigzag verdict tables")
{
    for (std::int64_t a = -2; a >= -8; --a)
        for (std::int64_t b = -2; b >= -8; --b) {
            bool want = a == -2 || b == -2;
            CHECK(smooth_hyperbolic_zigzag_test(standard({a, b})).verdict == want);
            CHECK(smooth_zigzag_contractibility_test(standard({a, b})).verdict == want);
        }
    for (std::int64_t a = -2; a >= -7; --a)
        for (std::int64_t b = -2; b >= -7; --b)
            for (std::int64_t c = -2; c >= -7; --c) {
                int twos = (a == -2) + (b == -2) + (c == -2);
                bool want = twos >= 2 || (a == -2 && c == -3) || (a == -3 && c == -2);
                CHECK(smooth_hyperbolic_zigzag_test(standard({a, b, c})).verdict == want);
                CHECK(smooth_zigzag_contractibility_test(standard({a, b, c})).verdict == want);
            }
}

TEST_CASE("contractibility witness replays")
{
    for_each_tail(4, -6, [](const std::vector<std::int64_t>& t) {
        auto v = smooth_zigzag_contractibility_test(standard(t));
        if (v.form != "i'")
            return;
        REQUIRE(v.position);
        oracle::Chain c(t.begin(), t.end());
        c[*v.position - 2] = -1;
        for (auto i : v.blowdowns) {
            REQUIRE(c[i] == -1);
            c = oracle::blow_down(c, i);
        }
        REQUIRE(c == (*v.target == Target::zero ? oracle::Chain{0} : oracle::Chain{-1}));
    });
}

TEST_CASE("arithmetic condition and contraction agree")
{
    std::vector<std::pair<std::int64_t, std::int64_t>> fr{{1, 0}};
    for (std::int64_t m = 2; m <= 8; ++m)
        for (std::int64_t e = 1; e < m; ++e)
            if (gcd64(m, e) == 1)
                fr.emplace_back(m, e);
    for (auto [m1, e1] : fr)
        for (auto [m2, e2] : fr) {
            bool arith = Rational(e1, m1) + Rational(e2, m2) == Rational(1) - Rational(1, m1 * m2);
            oracle::Chain left = box(m1, e1), right = box(m2, e2);
            oracle::Chain c(left.rbegin(), left.rend());
            c.push_back(-1);
            c.insert(c.end(), right.begin(), right.end());
            REQUIRE(oracle::contracts_to(c, {-1}) == arith);
        }
}

TEST_CASE("extended graph of the Danilov-Gizatullin pairs")
{
    for (std::int64_t k = 1; k <= 10; ++k)
        for (std::int64_t r = 1; r <= k; ++r) {
            auto ext = extended_graph(dg(k, r));
            Zigzag want = Zigzag::linear({0, 0});
            for (std::int64_t i = 0; i < k; ++i)
                want.w.emplace_back(-2);
            REQUIRE(ext.zigzag == want);
            std::vector<std::int64_t> bridges;
            for (const auto& [i, fs] : ext.feathers)
                for (const auto& f : fs)
                    bridges.push_back(f.bridge);
            if (ext.tail_feather)
                bridges.push_back(ext.tail_feather->bridge);
            std::sort(bridges.begin(), bridges.end());
            std::vector<std::int64_t> expect{-r, -1};
            std::sort(expect.begin(), expect.end());
            REQUIRE(bridges == expect);
            REQUIRE(ext.reduces_to_standard_triple());
            REQUIRE(picard_rank(ext, exceptional_count(dg(k, r))) == 1);
        }
}

TEST_CASE("extended graphs over the corpus")
{
    int toric = 0, other = 0;
    for (const auto& p : oracle::corpus(600, oracle::seed())) {
        if (!is_gizatullin(p)) {
            CHECK(code_of([&] { extended_graph(p); }) == Errc::not_gizatullin);
            continue;
        }
        auto ext = extended_graph(p);
        REQUIRE(ext.reduces_to_standard_triple());
        REQUIRE(ext.to_graph().shape() != Shape::general);
        bool t = is_toric_pair(p);
        REQUIRE(ext.is_linear() == t);
        (t ? toric : other)++;
        if (ext.zigzag == Zigzag::linear({0, 0, 0}) && !ext.closing_fiber) {
            REQUIRE(code_of([&] { picard_rank(ext, exceptional_count(p)); }) == Errc::negative_rank);
        } else {
            auto rho = picard_rank(ext, exceptional_count(p));
            REQUIRE(rho >= 0);
            if (t)
                REQUIRE(rho == 0);
        }
    }
    CHECK(toric > 20);
    CHECK(other > 20);
}

TEST_CASE("extended graph examples")
{
    auto e0 = extended_graph(DpdPair{});
    CHECK(e0.zigzag == Zigzag::linear({0, 0, 0}));
    CHECK(e0.feather_count() == 0);
    CHECK(e0.component_count() == 3);
    CHECK(code_of([&] { picard_rank(e0, 0); }) == Errc::negative_rank);

    DpdPair t;
    t.plus.set("0", Rational(-2, 7));
    auto et = extended_graph(t);
    CHECK(et.is_linear());
    CHECK(picard_rank(et, exceptional_count(t)) == 0);

    DpdPair a2;
    a2.minus.set("0", Rational(-1));
    auto ea = extended_graph(a2);
    CHECK(ea.zigzag == Zigzag::linear({0, 0}));
    CHECK(ea.closing_fiber);
    CHECK(picard_rank(ea, exceptional_count(a2)) == 0);

    DpdPair two;
    two.plus.set("a", Rational(-1, 2));
    two.plus.set("b", Rational(-1, 3));
    CHECK(code_of([&] { extended_graph(two); }) == Errc::not_gizatullin);
}

TEST_CASE("Danilov-Gizatullin actions")
{
    for (std::int64_t k = 1; k <= 10; ++k) {
        auto acts = dg_actions(k);
        REQUIRE(acts.size() == static_cast<std::size_t>(k));
        for (const auto& a : acts) {
            REQUIRE(is_gizatullin(a.pair));
            auto t = singularity_types(a.pair);
            REQUIRE(t.at({"p0", Marker::plus}).chain() == std::vector<std::int64_t>(static_cast<std::size_t>(a.r - 1), 2));
            REQUIRE(t.at({"p1", Marker::minus}).chain() ==
                    std::vector<std::int64_t>(static_cast<std::size_t>(k - a.r), 2));
            REQUIRE(equivalent_up_to_relabeling(swapped(a.pair), dg(k, k + 1 - a.r)));
            CHECK(a.ruling.v_plus.at("p0") == Rational(1));
            CHECK(a.ruling.v_plus.at("p1") == Rational(a.r));
            CHECK(a.ruling.v_minus.at("p0") == Rational(k + 1 - a.r));
            CHECK(a.ruling.v_minus.at("p1") == Rational(1));
        }
        for (std::size_t i = 0; i < acts.size(); ++i)
            for (std::size_t j = i + 1; j < acts.size(); ++j)
                REQUIRE(!equivalent_up_to_relabeling(acts[i].pair, acts[j].pair));
    }
    auto one = dg_actions(1);
    CHECK(one[0].pair.plus.at("p0") == Rational(-1));
    CHECK(one[0].pair.minus.at("p1") == Rational(-1));
    auto three = dg_actions(3);
    CHECK(three[1].pair.plus.at("p0") == Rational(-1, 2));
    CHECK(three[1].pair.minus.at("p1") == Rational(-1, 2));
    auto v = dg_actions(4, RulingReading::verbatim);
    for (const auto& a : v)
        CHECK(a.ruling.v_minus.at("p0") == Rational(4 + a.r - 1));
    CHECK(code_of([] { dg_actions(0); }) == Errc::out_of_range);
}

TEST_CASE("fiber multiplicities of the Danilov-Gizatullin graphs")
{
    auto ext = extended_graph(dg(4, 2));
    auto mu = fiber_multiplicities(ext);
    CHECK(mu.at("C2") == Rational(1));
    auto g = ext.to_graph();
    for (const auto& [id, m] : mu) {
        Rational s = g.vertex(id).weight * m;
        for (const auto& u : g.neighbors(id))
            if (mu.count(u))
                s += mu.at(u);
        CHECK(s == Rational(0));
    }
}
