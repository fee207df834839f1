#pragma once

#include "cstar/dpd.hpp"
#include "cstar/graph.hpp"
#include "cstar/hj.hpp"
#include "cstar/zigzag.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cstar {

bool is_gizatullin(const DpdPair& p);
bool is_toric_pair(const DpdPair& p);

// tail weights w_2..w_n (all <= -2) of a standard zigzag [[0,0,w_2,...,w_n]]
DpdPair standard_zigzag_of_toric(const std::vector<std::int64_t>& tail);
DpdPair standard_zigzag_of_toric(const Zigzag& standard);

struct SmoothDecomposition {
    std::size_t s = 0;        // index of the -2-k vertex in the zigzag
    std::int64_t k = 0;
    HjPair left, right;       // left box read from s outward
    std::string form;         // "i" or "ii"
    bool reversed = false;
};

struct SmoothVerdict {
    bool verdict = false;
    std::string form;         // "trivial", "i", "ii", "i'", "ii'" or empty
    std::vector<SmoothDecomposition> matches;
    // contractibility witness
    std::optional<std::size_t> position;
    std::optional<Target> target;
    std::vector<std::size_t> blowdowns;
    std::string reason;
};

SmoothVerdict smooth_hyperbolic_zigzag_test(const Zigzag& z);
SmoothVerdict smooth_zigzag_contractibility_test(const Zigzag& z);

struct Feather {
    std::int64_t bridge = -1;
    HjPair tail;              // box read outward from the bridge
    std::string label;

    std::vector<std::int64_t> weights() const;
    std::size_t size() const { return 1 + tail.chain().size(); }
};

struct ExtendedGraph {
    Zigzag zigzag;
    std::optional<std::size_t> parabolic;
    std::map<std::size_t, std::vector<Feather>> feathers;
    std::optional<Feather> tail_feather;
    bool closing_fiber = false;   // [[0,0]]: the third curve is a whole 0-fiber

    std::size_t component_count() const;
    std::size_t feather_count() const;
    bool is_linear() const;
    WeightedGraph to_graph() const;
    // greedy blowdown of -1 curves away from C0, C1, C2; true iff [[0,0,0]] remains
    bool reduces_to_standard_triple() const;
};

ExtendedGraph extended_graph(const DpdPair& p);
std::int64_t picard_rank(const ExtendedGraph& ext, std::int64_t exceptional);

// multiplicities in the fiber C_2 + ... + feathers, normalized by mu(C_2) = 1
std::map<std::string, Rational> fiber_multiplicities(const ExtendedGraph& ext);

enum class RulingReading { computed, verbatim };

struct RulingMultiplicities {
    std::map<std::string, Rational> v_plus;
    std::map<std::string, Rational> v_minus;
};

struct DgAction {
    std::int64_t r = 0;
    DpdPair pair;
    RulingMultiplicities ruling;
};

std::vector<DgAction> dg_actions(std::int64_t k, RulingReading reading = RulingReading::computed);

}  // namespace cstar
