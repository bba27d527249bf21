#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ctop {

struct Vec2 {
    double x = 0, y = 0;
    Vec2() = default;
    Vec2(double a, double b) : x(a), y(b) {}
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm_inf() const { return std::max(std::abs(x), std::abs(y)); }
};

inline Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }

// Rotation by theta followed by translation.
struct RigidMotion {
    double theta = 0;
    Vec2 shift;

    Vec2 apply(Vec2 y) const {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c * y.x - s * y.y + shift.x, s * y.x + c * y.y + shift.y};
    }
    Vec2 inverse(Vec2 x) const {
        const double c = std::cos(theta), s = std::sin(theta);
        const Vec2 d = x - shift;
        return {c * d.x + s * d.y, -s * d.x + c * d.y};
    }
    Vec2 direction() const { return {std::cos(theta), std::sin(theta)}; }
};

// Proper or closed oriented curve; the region it bounds lies to the left of
// increasing parameter. Proper curves are parametrized over all of R.
struct OrientedCurve {
    std::function<Vec2(double)> eval;
    bool closed = false;
    double period = 0;  // closed curves only
    std::string label;

    Vec2 at(double t) const { return eval(t); }

    OrientedCurve reversed() const {
        OrientedCurve r = *this;
        auto base = eval;
        r.eval = [base](double t) { return base(-t); };
        r.label = label + "(reversed)";
        return r;
    }
};

class Region;
using RegionPtr = std::shared_ptr<const Region>;

class Region {
  public:
    virtual ~Region() = default;
    virtual bool contains(Vec2 p) const = 0;
    virtual double boundary_distance(Vec2 p) const = 0;
    // Boundary as finitely many oriented curves, region to the left.
    virtual std::vector<OrientedCurve> boundary_curves() const = 0;
    virtual nlohmann::json descriptor() const = 0;
};

// {x : n.x > c}, strict inequality at the boundary.
RegionPtr half_plane(Vec2 normal, double offset);
// {x : a < n.x < b}
RegionPtr strip(Vec2 normal, double a, double b);
// closed disk
RegionPtr disk(Vec2 center, double radius);
// closed polygon, vertices counterclockwise
RegionPtr polygon(std::vector<Vec2> vertices);
// {M y : y1 >= 0, |y2| <= y1^alpha}
RegionPtr parabolic_region(const RigidMotion& m, double alpha);
RegionPtr complement(RegionPtr r);
RegionPtr region_union(std::vector<RegionPtr> rs);
RegionPtr region_intersection(std::vector<RegionPtr> rs);
RegionPtr full_plane();

RegionPtr region_from_json(const nlohmann::json& j);

// Accessors used by the transversality construction.
struct ParabolicData {
    RigidMotion motion;
    double alpha = 0;
};
// Throws unless r is a parabolic primitive.
ParabolicData parabolic_data(const RegionPtr& r);

}  // namespace ctop
