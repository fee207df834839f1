#include "cstar/graph.hpp"
#include "cstar/error.hpp"
#include "cstar/zigzag.hpp"

#include <algorithm>
#include <map>

namespace cstar {

const char* shape_name(Shape s)
{
    switch (s) {
    case Shape::empty: return "empty";
    case Shape::linear: return "linear";
    case Shape::circular: return "circular";
    case Shape::tree: return "tree";
    case Shape::general: return "general";
    }
    return "?";
}

WeightedGraph::Edge WeightedGraph::key(const std::string& a, const std::string& b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

void WeightedGraph::add_vertex(Vertex v)
{
    if (has_vertex(v.id))
        fail(Errc::internal, "duplicate vertex " + v.id);
    vertices_.push_back(std::move(v));
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b)
{
    if (a == b)
        fail(Errc::not_simple, "loop at " + a);
    if (!has_vertex(a) || !has_vertex(b))
        fail(Errc::site_not_found, "edge " + a + "-" + b);
    if (!edges_.insert(key(a, b)).second)
        fail(Errc::not_simple, "double edge " + a + "-" + b);
}

void WeightedGraph::remove_edge(const std::string& a, const std::string& b)
{
    edges_.erase(key(a, b));
}

void WeightedGraph::remove_vertex(const std::string& id)
{
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first == id || it->second == id)
            it = edges_.erase(it);
        else
            ++it;
    }
    std::erase_if(vertices_, [&](const Vertex& v) { return v.id == id; });
}

bool WeightedGraph::has_vertex(const std::string& id) const
{
    return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
}

bool WeightedGraph::has_edge(const std::string& a, const std::string& b) const
{
    return edges_.count(key(a, b)) > 0;
}

const Vertex& WeightedGraph::vertex(const std::string& id) const
{
    for (const auto& v : vertices_)
        if (v.id == id)
            return v;
    fail(Errc::site_not_found, "no vertex " + id);
}

Vertex& WeightedGraph::vertex(const std::string& id)
{
    for (auto& v : vertices_)
        if (v.id == id)
            return v;
    fail(Errc::site_not_found, "no vertex " + id);
}

std::vector<std::string> WeightedGraph::neighbors(const std::string& id) const
{
    std::vector<std::string> out;
    for (const auto& [a, b] : edges_) {
        if (a == id) out.push_back(b);
        else if (b == id) out.push_back(a);
    }
    return out;
}

std::size_t WeightedGraph::degree(const std::string& id) const
{
    return neighbors(id).size();
}

bool WeightedGraph::connected() const
{
    if (vertices_.empty())
        return true;
    std::set<std::string> seen{vertices_[0].id};
    std::vector<std::string> stack{vertices_[0].id};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& u : neighbors(v))
            if (seen.insert(u).second)
                stack.push_back(u);
    }
    return seen.size() == vertices_.size();
}

Shape WeightedGraph::shape() const
{
    if (vertices_.empty())
        return Shape::empty;
    if (!connected())
        return Shape::general;
    std::size_t n = vertices_.size(), m = edges_.size();
    std::size_t maxdeg = 0;
    for (const auto& v : vertices_)
        maxdeg = std::max(maxdeg, degree(v.id));
    if (m + 1 == n)
        return maxdeg <= 2 ? Shape::linear : Shape::tree;
    if (m == n && maxdeg == 2)
        return Shape::circular;
    return Shape::general;
}

std::vector<std::string> WeightedGraph::path_order(const std::string& start) const
{
    Shape s = shape();
    if (s != Shape::linear && s != Shape::circular)
        fail(Errc::not_linear, "graph is neither a path nor a cycle");
    std::string first = start;
    if (first.empty()) {
        for (const auto& v : vertices_) {
            if (s == Shape::circular || degree(v.id) <= 1) {
                if (first.empty() || v.id < first)
                    first = v.id;
            }
        }
    } else if (s == Shape::linear && degree(first) > 1) {
        fail(Errc::not_linear, first + " is not an end");
    }
    std::vector<std::string> order{first};
    std::string prev;
    while (order.size() < vertices_.size()) {
        auto nb = neighbors(order.back());
        std::sort(nb.begin(), nb.end());
        std::string next;
        for (const auto& u : nb)
            if (u != prev && std::find(order.begin(), order.end(), u) == order.end()) {
                next = u;
                break;
            }
        prev = order.back();
        order.push_back(next);
    }
    return order;
}

std::optional<Zigzag> WeightedGraph::as_zigzag(const std::string& start) const
{
    Shape s = shape();
    if (s != Shape::linear && s != Shape::circular)
        return std::nullopt;
    for (const auto& v : vertices_)
        if (!v.rational())
            return std::nullopt;
    Zigzag z;
    z.circular = s == Shape::circular;
    for (const auto& id : path_order(start))
        z.w.push_back(vertex(id).weight);
    return z;
}

std::string WeightedGraph::fresh_id(const std::string& stem) const
{
    for (std::size_t k = 1;; ++k) {
        std::string id = stem + std::to_string(k);
        if (!has_vertex(id))
            return id;
    }
}

WeightedGraph blow_up(const WeightedGraph& g, const Site& site, const std::string& new_id)
{
    WeightedGraph h = g;
    std::string id = new_id.empty() ? g.fresh_id() : new_id;
    if (h.has_vertex(id))
        fail(Errc::internal, "vertex id in use: " + id);
    switch (site.kind) {
    case Site::Kind::edge:
        if (!g.has_edge(site.a, site.b))
            fail(Errc::site_not_found, "no edge " + site.a + "-" + site.b);
        h.vertex(site.a).weight -= 1;
        h.vertex(site.b).weight -= 1;
        h.remove_edge(site.a, site.b);
        h.add_vertex({id, Rational(-1), "exceptional", 0});
        h.add_edge(site.a, id);
        h.add_edge(id, site.b);
        break;
    case Site::Kind::end_vertex:
    case Site::Kind::vertex:
        if (!g.has_vertex(site.a))
            fail(Errc::site_not_found, "no vertex " + site.a);
        if (site.kind == Site::Kind::end_vertex && g.degree(site.a) > 1)
            fail(Errc::site_not_found, site.a + " is not an end vertex");
        h.vertex(site.a).weight -= 1;
        h.add_vertex({id, Rational(-1), "exceptional", 0});
        h.add_edge(site.a, id);
        break;
    }
    return h;
}

WeightedGraph blow_down(const WeightedGraph& g, const std::string& v)
{
    const Vertex& x = g.vertex(v);
    if (x.weight != Rational(-1))
        fail(Errc::not_minus_one, v + " has weight " + x.weight.str());
    if (!x.rational())
        fail(Errc::not_rational, v + " is not a rational curve");
    auto nb = g.neighbors(v);
    if (nb.size() >= 3)
        fail(Errc::branching, v + " has degree " + std::to_string(nb.size()));
    if (nb.size() == 2 && g.has_edge(nb[0], nb[1]))
        fail(Errc::not_simple, "blowing down " + v + " would create a double edge");
    WeightedGraph h = g;
    for (const auto& u : nb)
        h.vertex(u).weight += 1;
    h.remove_vertex(v);
    if (nb.size() == 2)
        h.add_edge(nb[0], nb[1]);
    return h;
}

}  // namespace cstar
