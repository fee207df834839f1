#pragma once

#include "cstar/classify.hpp"
#include "cstar/dpd.hpp"
#include "cstar/graph.hpp"
#include "cstar/zigzag.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace cstar {

using Json = nlohmann::ordered_json;

DpdPair parse_pair(std::string_view text);
DpdPair pair_from_json(const Json& j);
Json to_json(const DpdPair& p);
Json to_json(const QDivisor& d);
QDivisor divisor_from_json(const Json& j);

Json to_json(const Zigzag& z);
Json to_json(const WeightedGraph& g);
Json to_json(const TransformationLog& log);
Json to_json(const SmoothVerdict& v);
Json to_json(const ExtendedGraph& e);
Json to_json(const Feather& f);
Json to_json(const SpecialPoint& sp);

std::string to_dot(const WeightedGraph& g, const std::string& name = "G");
std::string to_dot(const Zigzag& z, const std::string& name = "G");

// weights above, vertices as o, one line per side branch
std::string to_ascii(const Zigzag& z);
std::string to_ascii(const WeightedGraph& g);

}  // namespace cstar
