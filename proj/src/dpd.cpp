#include "cstar/dpd.hpp"
#include "cstar/error.hpp"

#include <algorithm>

namespace cstar {

QDivisor::QDivisor(std::initializer_list<std::pair<const std::string, Rational>> init)
{
    for (const auto& [p, r] : init)
        set(p, r);
}

Rational QDivisor::at(const std::string& p) const
{
    auto it = c_.find(p);
    return it == c_.end() ? Rational(0) : it->second;
}

void QDivisor::set(const std::string& p, const Rational& r)
{
    if (r.is_zero())
        c_.erase(p);
    else
        c_[p] = r;
}

std::set<std::string> QDivisor::support() const
{
    std::set<std::string> s;
    for (const auto& [p, r] : c_)
        s.insert(p);
    return s;
}

std::set<std::string> QDivisor::fractional_support() const
{
    std::set<std::string> s;
    for (const auto& [p, r] : c_)
        if (!r.is_integer())
            s.insert(p);
    return s;
}

Rational QDivisor::degree() const
{
    Rational d;
    for (const auto& [p, r] : c_)
        d += r;
    return d;
}

BigInt QDivisor::floor_degree() const
{
    BigInt d = 0;
    for (const auto& [p, r] : c_)
        d += r.floor();
    return d;
}

std::set<std::string> DpdPair::support() const
{
    auto s = plus.support();
    auto t = minus.support();
    s.insert(t.begin(), t.end());
    return s;
}

void DpdPair::validate() const
{
    if (base.genus < 0)
        fail(Errc::constraint_violated, "negative genus");
    if (base.points_at_infinity < 1)
        fail(Errc::constraint_violated, "a hyperbolic pair lives on an affine curve, s >= 1");
    for (const auto& p : support())
        if (plus.at(p) + minus.at(p) > Rational(0))
            fail(Errc::constraint_violated,
                 "D+ + D- = " + (plus.at(p) + minus.at(p)).str() + " > 0 at " + p);
}

DpdPair normalize_pair(const DpdPair& p, bool* warning)
{
    if (warning)
        *warning = false;
    if (!p.base.affine_line()) {
        if (warning)
            *warning = true;
        return p;
    }
    DpdPair r = p;
    for (const auto& [pt, c] : p.plus.coefficients()) {
        Rational f(c.floor());
        r.plus.add(pt, -f);
        r.minus.add(pt, f);
    }
    return r;
}

DpdPair swapped(const DpdPair& p)
{
    return {p.base, p.minus, p.plus};
}

const char* class_name(PointClass c)
{
    switch (c) {
    case PointClass::P: return "P";
    case PointClass::Q: return "Q";
    case PointClass::regular: return "regular";
    }
    return "?";
}

std::vector<SpecialPoint> classify_points(const DpdPair& p)
{
    p.validate();
    std::vector<SpecialPoint> out;
    for (const auto& label : p.support()) {
        Rational a = p.plus.at(label), b = p.minus.at(label);
        SpecialPoint sp;
        sp.label = label;
        if (a + b < Rational(0)) {
            sp.cls = PointClass::P;
            sp.e_plus = to_int64(-a.num());
            sp.m_plus = to_int64(a.den());
            sp.m_minus = -to_int64(b.den());
            sp.e_minus = to_int64(-b.num());
            sp.delta = sp.e_minus * sp.m_plus - sp.e_plus * sp.m_minus;
            Rational check = Rational(sp.m_plus) * Rational(sp.m_minus) * (a + b);
            if (check != Rational(sp.delta) || sp.delta <= 0)
                fail(Errc::internal, "determinant mismatch at " + label);
        } else {
            sp.cls = a.is_integer() ? PointClass::regular : PointClass::Q;
            sp.e = to_int64(-a.num());
            sp.m = to_int64(a.den());
        }
        out.push_back(sp);
    }
    return out;
}

std::int64_t interior_residue(const SpecialPoint& sp)
{
    if (sp.cls != PointClass::P)
        fail(Errc::out_of_range, sp.label + " is not of class P");
    BigInt a, b;
    std::int64_t ae = sp.e_plus < 0 ? -sp.e_plus : sp.e_plus;
    if (ae == 0) {
        a = 1;
        b = 0;
    } else {
        a = dual_residue(ae, mod64(sp.m_plus, ae));
        if (ae == 1)
            a = 0;
        b = (a * sp.m_plus - 1) / sp.e_plus;
    }
    if (a * sp.m_plus - b * sp.e_plus != 1)
        fail(Errc::internal, "no unimodular completion at " + sp.label);
    BigInt e = a * sp.m_minus - b * sp.e_minus;
    return mod64(to_int64(e % sp.delta), sp.delta);
}

const char* marker_name(Marker m)
{
    switch (m) {
    case Marker::plus: return "+";
    case Marker::minus: return "-";
    case Marker::interior: return "'";
    }
    return "?";
}

std::map<MarkedPoint, SingularityType> singularity_types(const DpdPair& p)
{
    std::map<MarkedPoint, SingularityType> out;
    for (const auto& sp : classify_points(p)) {
        if (sp.cls == PointClass::P) {
            out[{sp.label, Marker::plus}] = HjPair(sp.m_plus, mod64(-sp.e_plus, sp.m_plus));
            out[{sp.label, Marker::minus}] = HjPair(-sp.m_minus, mod64(-sp.e_minus, -sp.m_minus));
            out[{sp.label, Marker::interior}] = HjPair(sp.delta, interior_residue(sp));
        } else {
            out[{sp.label, Marker::plus}] = HjPair(sp.m, mod64(-sp.e, sp.m));
            out[{sp.label, Marker::minus}] = HjPair(sp.m, mod64(sp.e, sp.m));
        }
    }
    return out;
}

// ---------------------------------------------------------------- intersections

std::string CurveId::str() const
{
    switch (role) {
    case Role::c_plus: return "C+";
    case Role::c_minus: return "C-";
    case Role::o_plus: return "O+(" + label + ")";
    case Role::o_minus: return "O-(" + label + ")";
    case Role::o: return "O(" + label + ")";
    }
    return "?";
}

void IntersectionTable::set(const CurveId& a, const CurveId& b, const Rational& r)
{
    entries[std::minmax(a, b)] = r;
}

Rational IntersectionTable::dot(const CurveId& a, const CurveId& b) const
{
    auto it = entries.find(std::minmax(a, b));
    return it == entries.end() ? Rational(0) : it->second;
}

Rational IntersectionTable::dot(const FormalDivisor& d, const CurveId& c) const
{
    Rational s;
    for (const auto& [x, r] : d)
        s += r * dot(x, c);
    return s;
}

IntersectionTable intersection_numbers(const DpdPair& p)
{
    using R = CurveId::Role;
    IntersectionTable t;
    auto cp = CurveId::c_plus(), cm = CurveId::c_minus();
    t.curves = {cp, cm};
    t.set(cp, cp, p.plus.degree());
    t.set(cm, cm, p.minus.degree());
    t.set(cp, cm, 0);
    for (const auto& sp : classify_points(p)) {
        if (sp.cls == PointClass::P) {
            CurveId op{R::o_plus, sp.label}, om{R::o_minus, sp.label};
            Rational mp(sp.m_plus), mm(sp.m_minus), d(sp.delta);
            t.curves.push_back(op);
            t.curves.push_back(om);
            t.set(op, cp, Rational(1) / mp);
            t.set(om, cm, Rational(-1) / mm);
            t.set(op, om, Rational(1) / d);
            t.set(op, op, mm / (d * mp));
            t.set(om, om, mp / (d * mm));
        } else {
            CurveId o{R::o, sp.label};
            t.curves.push_back(o);
            t.set(o, cp, Rational(1) / Rational(sp.m));
            t.set(o, cm, Rational(1) / Rational(sp.m));
            t.set(o, o, 0);
        }
    }
    return t;
}

FormalDivisor principal_divisor_u(const DpdPair& p)
{
    using R = CurveId::Role;
    FormalDivisor d;
    d[CurveId::c_plus()] = -1;
    d[CurveId::c_minus()] = 1;
    for (const auto& sp : classify_points(p)) {
        if (sp.cls == PointClass::P) {
            d[{R::o_plus, sp.label}] = -Rational(sp.e_plus);
            d[{R::o_minus, sp.label}] = Rational(sp.e_minus);
        } else {
            d[{R::o, sp.label}] = -Rational(sp.e);
        }
    }
    return d;
}

// ---------------------------------------------------------------- resolution

namespace {

std::vector<std::int64_t> box(const Rational& q)
{
    return HjPair::of_fraction(q.frac()).chain();
}

std::vector<Rational> negated(const std::vector<std::int64_t>& ks)
{
    std::vector<Rational> w;
    for (auto k : ks)
        w.emplace_back(-k);
    return w;
}

Rational inverse_cf(std::vector<std::int64_t> ks, bool reversed)
{
    if (ks.empty())
        return 0;
    if (reversed)
        std::reverse(ks.begin(), ks.end());
    return Rational(1) / cf_eval(ks);
}

}  // namespace

Fiber resolve_fiber(const DpdPair& p, const std::string& point)
{
    auto pts = classify_points(p);
    auto it = std::find_if(pts.begin(), pts.end(), [&](const SpecialPoint& s) { return s.label == point; });
    Fiber f;
    auto push = [&](const std::vector<std::int64_t>& ks, const std::string& role) {
        for (auto k : ks) {
            f.chain.w.emplace_back(-k);
            f.roles.push_back(role);
        }
    };
    if (it == pts.end() || it->cls == PointClass::regular) {
        f.chain.w = {Rational(0)};
        f.roles = {"F"};
        return f;
    }
    auto bp = box(p.plus.at(point));
    auto bm = box(p.minus.at(point));
    auto bm_rev = bm;
    std::reverse(bm_rev.begin(), bm_rev.end());
    push(bp, "box+");
    if (it->cls == PointClass::Q) {
        f.chain.w.emplace_back(-1);
        f.roles.push_back("O");
    } else {
        auto t = intersection_numbers(p);
        CurveId op{CurveId::Role::o_plus, point}, om{CurveId::Role::o_minus, point};
        auto e = hj_expand(it->delta, interior_residue(*it));
        Rational wp = t.dot(op, op) - inverse_cf(bp, true) - inverse_cf(e, false);
        Rational wm = t.dot(om, om) - inverse_cf(bm, true) - inverse_cf(e, true);
        if (!wp.is_integer() || !wm.is_integer())
            fail(Errc::internal, "non-integral orbit weight at " + point);
        f.chain.w.push_back(wp);
        f.roles.push_back("O+");
        push(e, "E");
        f.chain.w.push_back(wm);
        f.roles.push_back("O-");
    }
    push(bm_rev, "box-");
    if (!is_contractible_to(f.chain, Target::zero).ok)
        fail(Errc::internal, "fiber over " + point + " does not contract to [[0]]: " + to_string(f.chain));
    return f;
}

WeightedGraph resolved_boundary(const DpdPair& p)
{
    p.validate();
    WeightedGraph g;
    int genus = p.base.genus;
    g.add_vertex({"C+", Rational(p.plus.floor_degree()), "section", genus});
    g.add_vertex({"C-", Rational(p.minus.floor_degree()), "section", genus});
    for (int i = 1; i <= p.base.points_at_infinity; ++i) {
        std::string id = "F" + std::to_string(i);
        g.add_vertex({id, Rational(0), "fiber", 0});
        g.add_edge("C+", id);
        g.add_edge(id, "C-");
    }
    auto hang = [&](const QDivisor& d, const std::string& section, const std::string& tag) {
        for (const auto& pt : d.fractional_support()) {
            std::string prev = section;
            auto ks = box(d.at(pt));
            for (std::size_t i = 0; i < ks.size(); ++i) {
                std::string id = tag + pt + ":" + std::to_string(i);
                g.add_vertex({id, Rational(-ks[i]), "box", 0});
                g.add_edge(prev, id);
                prev = id;
            }
        }
    };
    hang(p.plus, "C+", "B+");
    hang(p.minus, "C-", "B-");
    return g;
}

std::optional<Zigzag> boundary_zigzag(const DpdPair& p)
{
    p.validate();
    if (p.base.genus != 0)
        return std::nullopt;
    auto fp = p.plus.fractional_support(), fm = p.minus.fractional_support();
    Rational cp(p.plus.floor_degree()), cm(p.minus.floor_degree());
    if (p.base.points_at_infinity == 2 && fp.empty() && fm.empty())
        return Zigzag({cp, Rational(0), cm, Rational(0)}, true);
    if (p.base.points_at_infinity != 1 || fp.size() > 1 || fm.size() > 1)
        return std::nullopt;
    Zigzag z;
    if (!fp.empty()) {
        auto ks = box(p.plus.at(*fp.begin()));
        for (auto it = ks.rbegin(); it != ks.rend(); ++it)
            z.w.emplace_back(-*it);
    }
    z.w.push_back(cp);
    z.w.push_back(Rational(0));
    z.w.push_back(cm);
    if (!fm.empty()) {
        auto w = negated(box(p.minus.at(*fm.begin())));
        z.w.insert(z.w.end(), w.begin(), w.end());
    }
    return z;
}

namespace {

WeightedGraph star(const QDivisor& d, int fibers)
{
    WeightedGraph g;
    g.add_vertex({"Cinf", Rational(d.floor_degree()), "section", 0});
    for (int i = 1; i <= fibers; ++i) {
        std::string id = "F" + std::to_string(i);
        g.add_vertex({id, Rational(0), "fiber", 0});
        g.add_edge("Cinf", id);
    }
    for (const auto& pt : d.fractional_support()) {
        std::string prev = "Cinf";
        auto ks = box(d.at(pt));
        for (std::size_t i = 0; i < ks.size(); ++i) {
            std::string id = "B" + pt + ":" + std::to_string(i);
            g.add_vertex({id, Rational(-ks[i]), "box", 0});
            g.add_edge(prev, id);
            prev = id;
        }
    }
    return g;
}

}  // namespace

WeightedGraph parabolic_boundary(const QDivisor& d, int points_at_infinity)
{
    if (points_at_infinity < 1)
        fail(Errc::constraint_violated, "a parabolic surface lives on an affine curve, s >= 1");
    return star(d, points_at_infinity);
}

WeightedGraph elliptic_boundary(const QDivisor& d)
{
    if (d.degree() <= Rational(0))
        fail(Errc::not_ample, "deg D = " + d.degree().str() + " <= 0");
    return star(d, 0);
}

std::int64_t exceptional_count(const DpdPair& p)
{
    std::int64_t n = 0;
    for (const auto& sp : classify_points(p))
        if (sp.cls == PointClass::P)
            n += static_cast<std::int64_t>(hj_expand(sp.delta, interior_residue(sp)).size());
    return n;
}

namespace {

std::vector<std::pair<Rational, Rational>> profile(const DpdPair& p)
{
    auto n = normalize_pair(p);
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& pt : n.support())
        out.emplace_back(n.plus.at(pt), n.minus.at(pt));
    std::sort(out.begin(), out.end());
    return out;
}

void require_line(const DpdPair& p)
{
    if (!p.base.affine_line())
        fail(Errc::unsupported_base, "equivalence is decided on the affine line only");
}

}  // namespace

bool equivalent(const DpdPair& a, const DpdPair& b)
{
    require_line(a);
    require_line(b);
    return normalize_pair(a) == normalize_pair(b);
}

bool equivalent_up_to_relabeling(const DpdPair& a, const DpdPair& b)
{
    require_line(a);
    require_line(b);
    return profile(a) == profile(b);
}

}  // namespace cstar
