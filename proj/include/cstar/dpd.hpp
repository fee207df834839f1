#pragma once

#include "cstar/graph.hpp"
#include "cstar/hj.hpp"
#include "cstar/rational.hpp"
#include "cstar/zigzag.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cstar {

struct BaseCurve {
    int genus = 0;
    int points_at_infinity = 1;

    bool affine_line() const { return genus == 0 && points_at_infinity == 1; }
    friend bool operator==(const BaseCurve&, const BaseCurve&) = default;
};

// finite support, zero coefficients are never stored
class QDivisor {
public:
    QDivisor() = default;
    QDivisor(std::initializer_list<std::pair<const std::string, Rational>> init);

    Rational at(const std::string& p) const;
    void set(const std::string& p, const Rational& r);
    void add(const std::string& p, const Rational& r) { set(p, at(p) + r); }

    const std::map<std::string, Rational>& coefficients() const { return c_; }
    std::set<std::string> support() const;
    std::set<std::string> fractional_support() const;
    Rational degree() const;
    BigInt floor_degree() const;
    bool empty() const { return c_.empty(); }

    friend bool operator==(const QDivisor&, const QDivisor&) = default;

private:
    std::map<std::string, Rational> c_;
};

struct DpdPair {
    BaseCurve base;
    QDivisor plus;
    QDivisor minus;

    std::set<std::string> support() const;
    // D+ + D- <= 0 pointwise, at least one point at infinity
    void validate() const;

    friend bool operator==(const DpdPair&, const DpdPair&) = default;
};

// Shifts integer parts of D+ into D- so that floor(D+) = 0. Off the affine
// line the input comes back unchanged and *warning is set.
DpdPair normalize_pair(const DpdPair& p, bool* warning = nullptr);

DpdPair swapped(const DpdPair& p);

enum class PointClass { P, Q, regular };
const char* class_name(PointClass c);

struct SpecialPoint {
    std::string label;
    PointClass cls = PointClass::regular;
    // class P: D+ = -e_plus/m_plus, D- = e_minus/m_minus, m_minus < 0
    std::int64_t e_plus = 0, m_plus = 1, e_minus = 0, m_minus = -1, delta = 0;
    // class Q and regular: D+ = -e/m
    std::int64_t e = 0, m = 1;
};

std::vector<SpecialPoint> classify_points(const DpdPair& p);

// e^(i) with a m+ - b e+ = 1, reduced mod delta
std::int64_t interior_residue(const SpecialPoint& sp);

enum class Marker { plus, minus, interior };
const char* marker_name(Marker m);

struct MarkedPoint {
    std::string label;
    Marker marker;
    auto operator<=>(const MarkedPoint&) const = default;
};

using SingularityType = HjPair;
std::map<MarkedPoint, SingularityType> singularity_types(const DpdPair& p);

struct CurveId {
    enum class Role { c_plus, c_minus, o_plus, o_minus, o };
    Role role;
    std::string label;

    static CurveId c_plus() { return {Role::c_plus, {}}; }
    static CurveId c_minus() { return {Role::c_minus, {}}; }
    std::string str() const;
    auto operator<=>(const CurveId&) const = default;
};

using FormalDivisor = std::map<CurveId, Rational>;

struct IntersectionTable {
    std::vector<CurveId> curves;
    std::map<std::pair<CurveId, CurveId>, Rational> entries;

    void set(const CurveId& a, const CurveId& b, const Rational& r);
    Rational dot(const CurveId& a, const CurveId& b) const;
    Rational dot(const FormalDivisor& d, const CurveId& c) const;
};

IntersectionTable intersection_numbers(const DpdPair& p);
FormalDivisor principal_divisor_u(const DpdPair& p);

struct Fiber {
    Zigzag chain;                      // from the C+ side to the C- side
    std::vector<std::string> roles;
};

Fiber resolve_fiber(const DpdPair& p, const std::string& point);

WeightedGraph resolved_boundary(const DpdPair& p);
// linear reading box*{D+} - C+ - F - C- - box{D-}, or the 4-cycle for two
// points at infinity; nullopt when the boundary is neither
std::optional<Zigzag> boundary_zigzag(const DpdPair& p);

WeightedGraph parabolic_boundary(const QDivisor& d, int points_at_infinity);
WeightedGraph elliptic_boundary(const QDivisor& d);

std::int64_t exceptional_count(const DpdPair& p);

bool equivalent(const DpdPair& a, const DpdPair& b);
bool equivalent_up_to_relabeling(const DpdPair& a, const DpdPair& b);

}  // namespace cstar
