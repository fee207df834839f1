#include "cstar/io.hpp"
#include "cstar/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cstar {

namespace {

Rational rational_from_json(const Json& v, const std::string& where)
{
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    fail(Errc::parse_error, where + ": coefficients are strings \"p/q\" or integers");
}

}  // namespace

QDivisor divisor_from_json(const Json& j)
{
    if (!j.is_object())
        fail(Errc::parse_error, "a divisor is an object {point: coefficient}");
    QDivisor d;
    for (auto it = j.begin(); it != j.end(); ++it)
        d.add(it.key(), rational_from_json(it.value(), it.key()));
    return d;
}

DpdPair pair_from_json(const Json& j)
{
    if (!j.is_object())
        fail(Errc::parse_error, "a pair is a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "base" && it.key() != "d_plus" && it.key() != "d_minus")
            fail(Errc::parse_error, "unknown key \"" + it.key() + "\"");
    DpdPair p;
    if (j.contains("base")) {
        const auto& b = j["base"];
        if (!b.is_object())
            fail(Errc::parse_error, "base is an object");
        if (b.contains("genus")) {
            if (!b["genus"].is_number_integer())
                fail(Errc::parse_error, "genus is an integer");
            p.base.genus = b["genus"].get<int>();
        }
        if (b.contains("points_at_infinity")) {
            if (!b["points_at_infinity"].is_number_integer())
                fail(Errc::parse_error, "points_at_infinity is an integer");
            p.base.points_at_infinity = b["points_at_infinity"].get<int>();
        }
    }
    if (j.contains("d_plus"))
        p.plus = divisor_from_json(j["d_plus"]);
    if (j.contains("d_minus"))
        p.minus = divisor_from_json(j["d_minus"]);
    return p;
}

DpdPair parse_pair(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return pair_from_json(j);
}

Json to_json(const QDivisor& d)
{
    Json j = Json::object();
    for (const auto& [p, r] : d.coefficients())
        j[p] = r.str();
    return j;
}

Json to_json(const DpdPair& p)
{
    return {{"base", {{"genus", p.base.genus}, {"points_at_infinity", p.base.points_at_infinity}}},
            {"d_plus", to_json(p.plus)},
            {"d_minus", to_json(p.minus)}};
}

Json to_json(const Zigzag& z)
{
    Json w = Json::array();
    for (const auto& r : z.w)
        w.push_back(r.str());
    return {{"zigzag", to_string(z)}, {"circular", z.circular}, {"weights", w}};
}

Json to_json(const WeightedGraph& g)
{
    Json vs = Json::array(), es = Json::array();
    for (const auto& v : g.vertices()) {
        Json o{{"id", v.id}, {"weight", v.weight.str()}, {"kind", v.kind}};
        if (v.genus)
            o["genus"] = v.genus;
        vs.push_back(o);
    }
    for (const auto& [a, b] : g.edges())
        es.push_back({a, b});
    Json j{{"shape", shape_name(g.shape())}, {"vertices", vs}, {"edges", es}};
    if (g.shape() == Shape::linear || g.shape() == Shape::circular)
        if (auto z = g.as_zigzag())
            j["zigzag"] = to_string(*z);
    return j;
}

Json to_json(const TransformationLog& log)
{
    Json j = Json::array();
    for (const auto& s : log)
        j.push_back(to_string(s));
    return j;
}

namespace {

Json box_json(const HjPair& h)
{
    Json c = Json::array();
    for (auto k : h.chain())
        c.push_back(k);
    return {{"m", h.m}, {"e", h.residue()}, {"chain", c}};
}

}  // namespace

Json to_json(const SmoothVerdict& v)
{
    Json j{{"verdict", v.verdict}, {"form", v.form}};
    Json w = Json::object();
    if (!v.matches.empty()) {
        Json ms = Json::array();
        for (const auto& d : v.matches)
            ms.push_back({{"form", d.form},
                          {"s", d.s},
                          {"k", d.k},
                          {"left", box_json(d.left)},
                          {"right", box_json(d.right)},
                          {"reversed", d.reversed}});
        w["matches"] = ms;
    }
    if (v.position)
        w["position"] = *v.position;
    if (v.target)
        w["target"] = *v.target == Target::zero ? "[[0]]" : *v.target == Target::minus_one ? "[[-1]]" : "point";
    if (!v.blowdowns.empty())
        w["blowdowns"] = v.blowdowns;
    if (!v.reason.empty())
        w["reason"] = v.reason;
    j["witness"] = w;
    return j;
}

Json to_json(const Feather& f)
{
    return {{"label", f.label}, {"bridge", f.bridge}, {"tail", box_json(f.tail)}, {"weights", f.weights()}};
}

Json to_json(const ExtendedGraph& e)
{
    Json fs = Json::object();
    for (const auto& [i, list] : e.feathers) {
        Json a = Json::array();
        for (const auto& f : list)
            a.push_back(to_json(f));
        fs[std::to_string(i)] = a;
    }
    Json j{{"zigzag", to_string(e.zigzag)}, {"feathers", fs}};
    j["parabolic"] = e.parabolic ? Json(*e.parabolic) : Json(nullptr);
    j["tail_feather"] = e.tail_feather ? to_json(*e.tail_feather) : Json(nullptr);
    j["closing_fiber"] = e.closing_fiber;
    j["linear"] = e.is_linear();
    return j;
}

Json to_json(const SpecialPoint& sp)
{
    Json j{{"label", sp.label}, {"class", class_name(sp.cls)}};
    if (sp.cls == PointClass::P) {
        j["e_plus"] = sp.e_plus;
        j["m_plus"] = sp.m_plus;
        j["e_minus"] = sp.e_minus;
        j["m_minus"] = sp.m_minus;
        j["delta"] = sp.delta;
    } else {
        j["e"] = sp.e;
        j["m"] = sp.m;
    }
    return j;
}

// ---------------------------------------------------------------- DOT

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const WeightedGraph& g, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << quoted(name) << " {\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices()) {
        os << "  " << quoted(v.id) << " [label=" << quoted(v.weight.str()) << ", xlabel=" << quoted(v.id);
        if (!v.rational())
            os << ", shape=doublecircle";
        os << "];\n";
    }
    for (const auto& [a, b] : g.edges())
        os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Zigzag& z, const std::string& name)
{
    if (!z.circular || z.size() >= 3)
        return to_dot(to_graph(z), name);
    std::ostringstream os;
    os << "graph " << quoted(name) << " {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < z.size(); ++i)
        os << "  \"v" << i << "\" [label=" << quoted(z.w[i].str()) << "];\n";
    if (z.size() == 1)
        os << "  \"v0\" -- \"v0\";\n";
    else
        os << "  \"v0\" -- \"v1\";\n  \"v1\" -- \"v0\";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------- ASCII

namespace {

std::string chain_ascii(const std::vector<std::string>& labels, bool circular, const std::string& indent = "")
{
    std::size_t cell = 2;
    for (const auto& l : labels)
        cell = std::max(cell, l.size() + 1);
    std::string top = indent, bottom = indent;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::string l = labels[i];
        std::string pad(cell - l.size(), ' ');
        top += pad + l;
        std::string link = i == 0 ? std::string(cell - 1, ' ') : std::string(cell - 1, '-');
        bottom += link + "o";
    }
    if (circular)
        bottom += "--(back to first)";
    return top + "\n" + bottom + "\n";
}

}  // namespace

std::string to_ascii(const Zigzag& z)
{
    std::vector<std::string> labels;
    for (const auto& r : z.w)
        labels.push_back(r.str());
    return chain_ascii(labels, z.circular);
}

std::string to_ascii(const WeightedGraph& g)
{
    Shape s = g.shape();
    if (s == Shape::linear || s == Shape::circular) {
        std::vector<std::string> labels;
        for (const auto& id : g.path_order())
            labels.push_back(g.vertex(id).weight.str());
        return chain_ascii(labels, s == Shape::circular);
    }
    // longest path first, then every remaining vertex hung from its anchor
    std::string out;
    std::set<std::string> seen;
    auto bfs_far = [&](const std::string& from, std::map<std::string, std::string>& parent) {
        std::vector<std::string> q{from};
        parent.clear();
        parent[from] = "";
        std::string last = from;
        for (std::size_t i = 0; i < q.size(); ++i) {
            last = q[i];
            for (const auto& n : g.neighbors(q[i]))
                if (!parent.count(n)) {
                    parent[n] = q[i];
                    q.push_back(n);
                }
        }
        return last;
    };
    if (g.size() == 0)
        return "\n";
    std::map<std::string, std::string> parent;
    std::string a = bfs_far(g.vertices().front().id, parent);
    std::string b = bfs_far(a, parent);
    std::vector<std::string> path;
    for (std::string v = b; !v.empty(); v = parent[v])
        path.push_back(v);
    std::vector<std::string> labels;
    for (const auto& v : path) {
        labels.push_back(g.vertex(v).weight.str());
        seen.insert(v);
    }
    out += chain_ascii(labels, false);
    std::vector<std::string> frontier = path;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (const auto& n : g.neighbors(frontier[i])) {
            if (seen.count(n))
                continue;
            std::vector<std::string> branch{g.vertex(n).weight.str()};
            seen.insert(n);
            frontier.push_back(n);
            std::string cur = n;
            for (;;) {
                std::string next;
                for (const auto& m : g.neighbors(cur))
                    if (!seen.count(m)) {
                        next = m;
                        break;
                    }
                if (next.empty())
                    break;
                seen.insert(next);
                frontier.push_back(next);
                branch.push_back(g.vertex(next).weight.str());
                cur = next;
            }
            out += "at " + frontier[i] + " (" + g.vertex(frontier[i]).weight.str() + "):\n";
            out += chain_ascii(branch, false, "  ");
        }
    }
    return out;
}

}  // namespace cstar
