#pragma once

#include "cstar/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cstar {

class WeightedGraph;

// [[w1,...,wn]] or, with circular set, ((w1,...,wn)).
// A one-vertex cycle carries a loop: its form entry is w + 2, and blowing up
// the loop gives ((w-2,-1)). A two-vertex cycle has a double edge.
struct Zigzag {
    std::vector<Rational> w;
    bool circular = false;

    Zigzag() = default;
    Zigzag(std::vector<Rational> weights, bool circ = false) : w(std::move(weights)), circular(circ) {}
    static Zigzag linear(std::initializer_list<long long> ws);
    static Zigzag cycle(std::initializer_list<long long> ws);

    std::size_t size() const { return w.size(); }
    bool empty() const { return w.empty(); }
    bool integral() const;
    std::vector<std::int64_t> ints() const;

    std::vector<std::vector<Rational>> form() const;

    friend bool operator==(const Zigzag&, const Zigzag&) = default;
};

Zigzag parse_zigzag(std::string_view s);
std::string to_string(const Zigzag& z);
WeightedGraph to_graph(const Zigzag& z);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int null = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const std::vector<std::vector<Rational>>& m);
Inertia inertia(const Zigzag& z);

// One replayable move on zigzag positions.
struct Step {
    enum class Op { blow_up_edge, blow_up_left, blow_up_right, blow_down, rotate, reflect };
    Op op;
    std::size_t i = 0;

    friend bool operator==(const Step&, const Step&) = default;
};
using TransformationLog = std::vector<Step>;

std::string to_string(const Step& s);

// blow_up_edge i: edge (i, i+1), cyclically for cycles; new vertex at i+1.
// rotate k: new[j] = old[(j+k) mod n]. reflect: reverse the list.
Zigzag apply(const Zigzag& z, const Step& s);
Zigzag replay(const Zigzag& z, const TransformationLog& log);

enum class Direction { left, right };

// Inner: [[a,0,b]] -> [[a-1,0,b+1]] (right) or [[a+1,0,b-1]] (left).
// Outer (zero at an end): the neighbour right of the zero gains +1 for right,
// the neighbour left of it loses 1 for right; left is the inverse.
TransformationLog et_steps(const Zigzag& z, std::size_t zero, Direction d, bool outer);
Zigzag elementary_transformation(const Zigzag& z, std::size_t zero, Direction d, bool outer);

enum class StandardMode { full, semistandard };

struct Standardized {
    Zigzag zigzag;
    TransformationLog log;
};

Standardized standardize(const Zigzag& z, StandardMode mode = StandardMode::full);
bool is_standard(const Zigzag& z);
bool is_semistandard(const Zigzag& z);
Zigzag reverse(const Zigzag& z);
// canonical rotation/reflection of a standard cycle
Zigzag canonical_cycle(const Zigzag& z);

enum class Target { zero, minus_one, smooth_point };

struct Contraction {
    bool ok = false;
    std::vector<std::size_t> blowdowns;   // positions in the current chain
};

Contraction is_contractible_to(const Zigzag& chain, Target t);

// C0'^2 after contracting a chain with self-intersections -k_i attached to C0
Rational contract_subchain(const Rational& c0_weight, const std::vector<Rational>& ks);

}  // namespace cstar
