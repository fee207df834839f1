#pragma once

#include "cstar/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cstar {

struct Zigzag;

struct Vertex {
    std::string id;
    Rational weight;
    std::string kind;   // free-form tag: "section+", "fiber", "box", ...
    int genus = 0;      // > 0 marks a non-rational curve

    bool rational() const { return genus == 0; }
};

enum class Shape { empty, linear, circular, tree, general };
const char* shape_name(Shape s);

class WeightedGraph {
public:
    using Edge = std::pair<std::string, std::string>;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }

    void add_vertex(Vertex v);
    void add_edge(const std::string& a, const std::string& b);
    void remove_edge(const std::string& a, const std::string& b);
    void remove_vertex(const std::string& id);

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    const Vertex& vertex(const std::string& id) const;
    Vertex& vertex(const std::string& id);
    std::vector<std::string> neighbors(const std::string& id) const;
    std::size_t degree(const std::string& id) const;
    std::size_t size() const { return vertices_.size(); }

    Shape shape() const;
    bool connected() const;

    // Weights along the path or cycle; a path starts at `start` when given
    // (must be an end), otherwise at the end with the smaller id.
    std::optional<Zigzag> as_zigzag(const std::string& start = {}) const;
    std::vector<std::string> path_order(const std::string& start = {}) const;

    std::string fresh_id(const std::string& stem = "E") const;

    static Edge key(const std::string& a, const std::string& b);

private:
    std::vector<Vertex> vertices_;
    std::set<Edge> edges_;
};

struct Site {
    enum class Kind { edge, end_vertex, vertex };
    Kind kind = Kind::edge;
    std::string a, b;

    static Site edge(std::string a, std::string b) { return {Kind::edge, std::move(a), std::move(b)}; }
    static Site end(std::string a) { return {Kind::end_vertex, std::move(a), {}}; }
    static Site point(std::string a) { return {Kind::vertex, std::move(a), {}}; }
};

// The new -1 vertex is appended last; its id is new_id or a fresh one.
WeightedGraph blow_up(const WeightedGraph& g, const Site& site, const std::string& new_id = {});
WeightedGraph blow_down(const WeightedGraph& g, const std::string& v);

}  // namespace cstar
