#include "cstar/classify.hpp"
#include "cstar/error.hpp"

#include <algorithm>

namespace cstar {

bool is_gizatullin(const DpdPair& p)
{
    return p.base.affine_line() && p.plus.fractional_support().size() <= 1 &&
           p.minus.fractional_support().size() <= 1;
}

bool is_toric_pair(const DpdPair& p)
{
    if (!p.base.affine_line())
        fail(Errc::unsupported_base, "toricity is decided on the affine line only");
    p.validate();
    return normalize_pair(p).support().size() <= 1;
}

DpdPair standard_zigzag_of_toric(const std::vector<std::int64_t>& tail)
{
    DpdPair p;
    if (tail.empty()) {
        p.minus.set("0", -1);
        return p;
    }
    std::vector<std::int64_t> ks;
    for (auto w : tail) {
        if (w > -2)
            fail(Errc::not_standard, "tail weight " + std::to_string(w) + " > -2");
        ks.push_back(-w);
    }
    ks[0] += 1;
    Rational me = cf_eval(ks);
    Rational em = Rational(me.den(), me.num());
    p.minus.set("0", em - Rational(1));
    return p;
}

DpdPair standard_zigzag_of_toric(const Zigzag& z)
{
    if (z.circular || !is_standard(z) || z.size() < 2)
        fail(Errc::not_standard, to_string(z) + " is not a standard zigzag [[0,0,...]]");
    if (z.size() == 3 && z.w[2].is_zero())
        return DpdPair{};
    auto w = z.ints();
    return standard_zigzag_of_toric(std::vector<std::int64_t>(w.begin() + 2, w.end()));
}

// ---------------------------------------------------------------- smooth zigzags

namespace {

void require_standard(const Zigzag& z)
{
    if (z.circular || !is_standard(z))
        fail(Errc::not_standard, to_string(z) + " is not a standard linear zigzag");
}

bool trivial_smooth(const Zigzag& z)
{
    return z.size() == 2 || (z.size() == 3 && z.w[2].is_zero());
}

HjPair flank(const std::vector<std::int64_t>& ks)
{
    if (ks.empty())
        return {};
    Rational r = cf_eval(ks);
    return HjPair(to_int64(r.num()), to_int64(r.den()));
}

bool all_minus_two(const std::vector<std::int64_t>& w, std::size_t from, std::size_t to)
{
    for (std::size_t i = from; i < to; ++i)
        if (w[i] != -2)
            return false;
    return true;
}

void decompositions(const Zigzag& z, bool reversed, std::vector<SmoothDecomposition>& out)
{
    auto w = z.ints();
    std::size_t n = w.size();
    for (std::size_t s = 2; s < n; ++s) {
        std::vector<std::int64_t> l, r;
        for (std::size_t i = s; i-- > 2;)
            l.push_back(-w[i]);
        for (std::size_t i = s + 1; i < n; ++i)
            r.push_back(-w[i]);
        SmoothDecomposition d;
        d.s = s;
        d.k = -2 - w[s];
        d.left = flank(l);
        d.right = flank(r);
        d.reversed = reversed;
        Rational a(d.left.residue(), d.left.m), b(d.right.residue(), d.right.m);
        Rational one(1), mm(d.left.m * d.right.m);
        if (a + b == one || a + b == one - one / mm) {
            d.form = "i";
            out.push_back(d);
        }
        if (all_minus_two(w, 2, s) && all_minus_two(w, s + 1, n)) {
            d.form = "ii";
            out.push_back(d);
        }
    }
}

}  // namespace

SmoothVerdict smooth_hyperbolic_zigzag_test(const Zigzag& z)
{
    require_standard(z);
    SmoothVerdict v;
    if (z.size() == 1) {
        v.reason = "[[0]] bounds no hyperbolic surface";
        return v;
    }
    if (trivial_smooth(z)) {
        v.verdict = true;
        v.form = "trivial";
        return v;
    }
    decompositions(z, false, v.matches);
    decompositions(reverse(z), true, v.matches);
    v.verdict = !v.matches.empty();
    if (v.verdict)
        v.form = v.matches.front().form;
    else
        v.reason = "no vertex splits the zigzag into boxes of form (i) or (ii)";
    return v;
}

SmoothVerdict smooth_zigzag_contractibility_test(const Zigzag& z)
{
    require_standard(z);
    SmoothVerdict v;
    if (z.size() == 1) {
        v.reason = "[[0]] bounds no hyperbolic surface";
        return v;
    }
    if (trivial_smooth(z)) {
        v.verdict = true;
        v.form = "trivial";
        return v;
    }
    auto w = z.ints();
    std::size_t n = w.size();
    for (std::size_t i = 2; i < n; ++i) {
        Zigzag c;
        for (std::size_t j = 2; j < n; ++j)
            c.w.emplace_back(j == i ? -1 : w[j]);
        for (Target t : {Target::zero, Target::minus_one}) {
            auto r = is_contractible_to(c, t);
            if (r.ok) {
                v.verdict = true;
                v.form = "i'";
                v.position = i;
                v.target = t;
                v.blowdowns = r.blowdowns;
                return v;
            }
        }
    }
    std::size_t off = 0;
    for (std::size_t i = 2; i < n; ++i)
        off += w[i] != -2;
    if (off <= 1) {
        v.verdict = true;
        v.form = "ii'";
        for (std::size_t i = 2; i < n; ++i)
            if (w[i] != -2)
                v.position = i;
        return v;
    }
    v.reason = "no weight can be replaced by -1 to reach [[0]] or [[-1]], and more than one weight differs from -2";
    return v;
}

// ---------------------------------------------------------------- extended graph

std::vector<std::int64_t> Feather::weights() const
{
    std::vector<std::int64_t> w{bridge};
    for (auto k : tail.chain())
        w.push_back(-k);
    return w;
}

std::size_t ExtendedGraph::feather_count() const
{
    std::size_t n = tail_feather ? 1 : 0;
    for (const auto& [i, fs] : feathers)
        n += fs.size();
    return n;
}

std::size_t ExtendedGraph::component_count() const
{
    std::size_t n = zigzag.size() + (closing_fiber ? 1 : 0);
    for (const auto& [i, fs] : feathers)
        for (const auto& f : fs)
            n += f.size();
    if (tail_feather)
        n += tail_feather->size();
    return n;
}

bool ExtendedGraph::is_linear() const
{
    return to_graph().shape() == Shape::linear;
}

namespace {

void add_feather(WeightedGraph& g, const Feather& f, const std::string& anchor, const std::string& stem)
{
    auto w = f.weights();
    std::string prev = anchor;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string id = stem + (i == 0 ? ":bridge" : ":tail" + std::to_string(i - 1));
        g.add_vertex({id, Rational(w[i]), i == 0 ? "feather-bridge" : "feather-tail", 0});
        g.add_edge(prev, id);
        prev = id;
    }
}

std::string cid(std::size_t i)
{
    return "C" + std::to_string(i);
}

}  // namespace

WeightedGraph ExtendedGraph::to_graph() const
{
    WeightedGraph g;
    for (std::size_t i = 0; i < zigzag.size(); ++i) {
        g.add_vertex({cid(i), zigzag.w[i], "boundary", 0});
        if (i > 0)
            g.add_edge(cid(i - 1), cid(i));
    }
    if (closing_fiber) {
        g.add_vertex({"Z", Rational(0), "fiber", 0});
        g.add_edge(cid(zigzag.size() - 1), "Z");
    }
    std::size_t j = 0;
    for (const auto& [i, fs] : feathers)
        for (const auto& f : fs)
            add_feather(g, f, cid(i), "F" + std::to_string(j++) + "[" + f.label + "]");
    if (tail_feather)
        add_feather(g, *tail_feather, cid(zigzag.size() - 1), "T[" + tail_feather->label + "]");
    return g;
}

bool ExtendedGraph::reduces_to_standard_triple() const
{
    WeightedGraph g = to_graph();
    for (;;) {
        bool again = false;
        for (const auto& v : g.vertices()) {
            if (v.id == "C0" || v.id == "C1" || v.id == "C2")
                continue;
            if (v.weight == Rational(-1) && g.degree(v.id) <= 2) {
                g = blow_down(g, v.id);
                again = true;
                break;
            }
        }
        if (!again)
            break;
    }
    auto z = g.as_zigzag("C0");
    return g.size() == 3 && z && *z == Zigzag::linear({0, 0, 0});
}

ExtendedGraph extended_graph(const DpdPair& p)
{
    if (!is_gizatullin(p))
        fail(Errc::not_gizatullin, "the base is not the affine line or a fractional part has two points");
    DpdPair n = normalize_pair(p);
    n.validate();
    ExtendedGraph ext;
    auto support = n.support();

    if (support.size() <= 1) {
        ext.zigzag = standardize(*boundary_zigzag(n)).zigzag;
        auto w = ext.zigzag.ints();
        if (w.size() == 2) {
            ext.closing_fiber = true;
        } else if (!(w.size() == 3 && w[2] == 0)) {
            std::vector<std::int64_t> ks;
            for (std::size_t i = w.size(); i-- > 2;)
                ks.push_back(-w[i]);
            Rational ma = cf_eval(ks);
            auto m = to_int64(ma.num()), a = to_int64(ma.den());
            ext.tail_feather = Feather{-1, HjPair(m, m - a), support.empty() ? "" : *support.begin()};
        }
        return ext;
    }

    std::vector<Rational> w{Rational(0), Rational(0)};
    auto fp = n.plus.fractional_support(), fm = n.minus.fractional_support();
    std::vector<std::int64_t> bp, bm;
    if (!fp.empty())
        bp = HjPair::of_fraction(n.plus.at(*fp.begin())).chain();
    if (!fm.empty())
        bm = HjPair::of_fraction(n.minus.at(*fm.begin()).frac()).chain();
    for (auto it = bp.rbegin(); it != bp.rend(); ++it)
        w.emplace_back(-*it);
    std::size_t s = w.size();
    Rational center(n.plus.floor_degree() + n.minus.floor_degree());
    if (center > Rational(-2))
        fail(Errc::internal, "parabolic vertex weight " + center.str() + " > -2 for a non-toric pair");
    w.push_back(center);
    for (auto k : bm)
        w.emplace_back(-k);
    ext.zigzag = Zigzag(w, false);
    ext.parabolic = s;

    for (const auto& sp : classify_points(n)) {
        if (sp.cls != PointClass::P)
            continue;
        Fiber f = resolve_fiber(n, sp.label);
        auto at = std::find(f.roles.begin(), f.roles.end(), "O-") - f.roles.begin();
        Feather fe{f.chain.w[at].to_int64(), HjPair(sp.delta, interior_residue(sp)).dual(), sp.label};
        if (n.minus.at(sp.label).is_integer())
            ext.feathers[s].push_back(fe);
        else
            ext.tail_feather = fe;
    }
    return ext;
}

std::int64_t picard_rank(const ExtendedGraph& ext, std::int64_t exceptional)
{
    auto rho = static_cast<std::int64_t>(ext.component_count()) - static_cast<std::int64_t>(ext.zigzag.size()) -
               exceptional - 1;
    if (rho < 0)
        fail(Errc::negative_rank, "component counts give rank " + std::to_string(rho));
    return rho;
}

// ---------------------------------------------------------------- rulings

namespace {

// solves A x = b exactly; fails if inconsistent or underdetermined
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t t = c; t < cols; ++t)
                a[i][t] -= f * a[r][t];
            b[i] -= f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            fail(Errc::internal, "fiber multiplicity system is inconsistent");
    if (pivots.size() != cols)
        fail(Errc::internal, "fiber multiplicity system is underdetermined");
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i)
        x[pivots[i]] = b[i] / a[i][pivots[i]];
    return x;
}

}  // namespace

std::map<std::string, Rational> fiber_multiplicities(const ExtendedGraph& ext)
{
    WeightedGraph g = ext.to_graph();
    std::vector<std::string> ids;
    for (const auto& v : g.vertices())
        if (v.id != "C0" && v.id != "C1" && v.id != "Z")
            ids.push_back(v.id);
    if (ids.empty())
        return {};
    std::size_t n = ids.size();
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n));
    std::vector<Rational> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                a[i][j] = g.vertex(ids[i]).weight;
            else if (g.has_edge(ids[i], ids[j]))
                a[i][j] = 1;
        }
    }
    auto c2 = std::find(ids.begin(), ids.end(), "C2") - ids.begin();
    a[n][static_cast<std::size_t>(c2)] = 1;
    b[n] = 1;
    auto x = solve(a, b);
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < n; ++i)
        out[ids[i]] = x[i];
    return out;
}

namespace {

std::map<std::string, Rational> bridge_multiplicities(const DpdPair& p)
{
    ExtendedGraph ext = extended_graph(p);
    auto mu = fiber_multiplicities(ext);
    std::map<std::string, Rational> out;
    for (const auto& [id, m] : mu) {
        auto open = id.find('['), close = id.find(']');
        if (open != std::string::npos && id.ends_with(":bridge"))
            out[id.substr(open + 1, close - open - 1)] = m;
    }
    return out;
}

}  // namespace

std::vector<DgAction> dg_actions(std::int64_t k, RulingReading reading)
{
    if (k < 1)
        fail(Errc::out_of_range, "k must be positive");
    std::vector<DgAction> out;
    for (std::int64_t r = 1; r <= k; ++r) {
        DgAction a;
        a.r = r;
        a.pair.plus.set("p0", Rational(-1, r));
        a.pair.minus.set("p1", Rational(-1, k + 1 - r));
        a.ruling.v_plus = bridge_multiplicities(a.pair);
        a.ruling.v_minus = bridge_multiplicities(swapped(a.pair));
        if (reading == RulingReading::verbatim)
            a.ruling.v_minus["p0"] = Rational(k + r - 1);
        out.push_back(a);
    }
    return out;
}

}  // namespace cstar
