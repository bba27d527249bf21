#include "ctop/regions.hpp"

#include <algorithm>
#include <limits>

#include "ctop/transverse.hpp"

namespace ctop {

namespace {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = d.dot(d);
    double t = len2 > 0 ? (p - a).dot(d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + d * t)).norm();
}

double point_ray_distance(Vec2 p, Vec2 origin, Vec2 dir) {
    double t = (p - origin).dot(dir);
    if (t < 0) t = 0;
    return (p - (origin + dir * t)).norm();
}

// Distance from q (arm frame) to the curve {(tau, s*tau^alpha) : tau >= 0}.
double arm_frame_distance(Vec2 q, double alpha, double sgn) {
    auto f = [&](double tau) {
        const double dy = q.y - sgn * std::pow(tau, alpha);
        const double dx = q.x - tau;
        return dx * dx + dy * dy;
    };
    const double t_hi = std::abs(q.x) + std::pow(std::abs(q.y) + 1.0, 1.0 / std::min(alpha, 1.0)) + 2.0;
    // coarse scan, geometric near the cusp then linear
    double best_t = 0.0, best = f(0.0);
    for (double t = 1e-9; t < 1.0; t *= 1.8) {
        if (double v = f(t); v < best) { best = v; best_t = t; }
    }
    const int n = 600;
    for (int i = 1; i <= n; ++i) {
        const double t = t_hi * i / n;
        if (double v = f(t); v < best) { best = v; best_t = t; }
    }
    // golden-section refinement around best_t
    double lo = std::max(0.0, best_t - std::max(t_hi / n, best_t * 0.5));
    double hi = best_t + std::max(t_hi / n, best_t * 0.5);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 90; ++it) {
        if (fc < fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo); fc = f(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo); fd = f(d);
        }
    }
    best = std::min({best, fc, fd});
    return std::sqrt(best);
}

class HalfPlane final : public Region {
  public:
    HalfPlane(Vec2 n, double c) : n_(n * (1.0 / n.norm())), c_(c / n.norm()) {}
    bool contains(Vec2 p) const override { return n_.dot(p) > c_; }
    double boundary_distance(Vec2 p) const override { return std::abs(n_.dot(p) - c_); }
    std::vector<OrientedCurve> boundary_curves() const override {
        const Vec2 origin = n_ * c_;
        const Vec2 dir{n_.y, -n_.x};  // region on the left
        OrientedCurve c;
        c.eval = [origin, dir](double t) { return origin + dir * t; };
        c.label = "half-plane boundary";
        return {c};
    }
    nlohmann::json descriptor() const override {
        return {{"type", "half_plane"}, {"normal", {n_.x, n_.y}}, {"offset", c_}};
    }

  private:
    Vec2 n_;
    double c_;
};

class Strip final : public Region {
  public:
    Strip(Vec2 n, double a, double b)
        : n_(n * (1.0 / n.norm())), a_(a / n.norm()), b_(b / n.norm()) {
        if (!(a_ < b_)) throw std::invalid_argument("strip: need a < b");
    }
    bool contains(Vec2 p) const override {
        const double v = n_.dot(p);
        return v > a_ && v < b_;
    }
    double boundary_distance(Vec2 p) const override {
        const double v = n_.dot(p);
        return std::min(std::abs(v - a_), std::abs(v - b_));
    }
    std::vector<OrientedCurve> boundary_curves() const override {
        const Vec2 along{n_.y, -n_.x};
        OrientedCurve lower, upper;
        const Vec2 oa = n_ * a_, ob = n_ * b_;
        lower.eval = [oa, along](double t) { return oa + along * t; };
        lower.label = "strip lower boundary";
        const Vec2 back = along * -1.0;
        upper.eval = [ob, back](double t) { return ob + back * t; };
        upper.label = "strip upper boundary";
        return {lower, upper};
    }
    nlohmann::json descriptor() const override {
        return {{"type", "strip"}, {"normal", {n_.x, n_.y}}, {"a", a_}, {"b", b_}};
    }

  private:
    Vec2 n_;
    double a_, b_;
};

class Disk final : public Region {
  public:
    Disk(Vec2 c, double r) : c_(c), r_(r) {
        if (r <= 0) throw std::invalid_argument("disk: radius must be positive");
    }
    bool contains(Vec2 p) const override { return (p - c_).norm() <= r_; }
    double boundary_distance(Vec2 p) const override {
        return std::abs((p - c_).norm() - r_);
    }
    std::vector<OrientedCurve> boundary_curves() const override {
        OrientedCurve c;
        const Vec2 cc = c_;
        const double r = r_;
        c.eval = [cc, r](double t) {
            return cc + Vec2{r * std::cos(t), r * std::sin(t)};
        };
        c.closed = true;
        c.period = 2 * M_PI;
        c.label = "circle";
        return {c};
    }
    nlohmann::json descriptor() const override {
        return {{"type", "disk"}, {"center", {c_.x, c_.y}}, {"radius", r_}};
    }

  private:
    Vec2 c_;
    double r_;
};

class Polygon final : public Region {
  public:
    explicit Polygon(std::vector<Vec2> v) : v_(std::move(v)) {
        if (v_.size() < 3) throw std::invalid_argument("polygon: need >= 3 vertices");
    }
    bool contains(Vec2 p) const override {
        int wn = 0;
        const size_t n = v_.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2 a = v_[i], b = v_[(i + 1) % n];
            if (a.y <= p.y) {
                if (b.y > p.y && (b - a).cross(p - a) > 0) ++wn;
            } else if (b.y <= p.y && (b - a).cross(p - a) < 0) {
                --wn;
            }
        }
        return wn != 0;
    }
    double boundary_distance(Vec2 p) const override {
        double d = std::numeric_limits<double>::infinity();
        const size_t n = v_.size();
        for (size_t i = 0; i < n; ++i)
            d = std::min(d, point_segment_distance(p, v_[i], v_[(i + 1) % n]));
        return d;
    }
    std::vector<OrientedCurve> boundary_curves() const override {
        std::vector<double> cum{0.0};
        const size_t n = v_.size();
        for (size_t i = 0; i < n; ++i)
            cum.push_back(cum.back() + (v_[(i + 1) % n] - v_[i]).norm());
        OrientedCurve c;
        auto verts = v_;
        c.eval = [verts, cum, n](double t) {
            const double total = cum.back();
            double s = std::fmod(std::fmod(t, total) + total, total);
            size_t i = std::upper_bound(cum.begin(), cum.end(), s) - cum.begin();
            i = std::min(i - 1, n - 1);
            const Vec2 a = verts[i], b = verts[(i + 1) % n];
            const double len = cum[i + 1] - cum[i];
            return a + (b - a) * ((s - cum[i]) / std::max(len, 1e-300));
        };
        c.closed = true;
        c.period = cum.back();
        c.label = "polygon";
        return {c};
    }
    nlohmann::json descriptor() const override {
        nlohmann::json verts = nlohmann::json::array();
        for (auto& p : v_) verts.push_back({p.x, p.y});
        return {{"type", "polygon"}, {"vertices", verts}};
    }

  private:
    std::vector<Vec2> v_;
};

class Parabolic final : public Region {
  public:
    Parabolic(const RigidMotion& m, double alpha) : m_(m), alpha_(alpha) {
        if (alpha <= 0) throw std::invalid_argument("parabolic: alpha must be positive");
    }
    bool contains(Vec2 p) const override {
        const Vec2 q = m_.inverse(p);
        return q.x >= 0 && std::abs(q.y) <= std::pow(q.x, alpha_);
    }
    double boundary_distance(Vec2 p) const override {
        const Vec2 q = m_.inverse(p);
        return std::min(arm_frame_distance(q, alpha_, +1.0),
                        arm_frame_distance(q, alpha_, -1.0));
    }
    std::vector<OrientedCurve> boundary_curves() const override {
        // Upper arm traversed inward (t<0), lower arm outward (t>0); the
        // sleeve interior is on the left throughout.
        OrientedCurve c;
        const RigidMotion m = m_;
        const double a = alpha_;
        c.eval = [m, a](double t) {
            const double tau = std::abs(t);
            const double sgn = t < 0 ? +1.0 : -1.0;
            return m.apply({tau, sgn * std::pow(tau, a)});
        };
        c.label = "parabolic boundary";
        return {c};
    }
    nlohmann::json descriptor() const override {
        return {{"type", "parabolic"},
                {"theta", m_.theta},
                {"shift", {m_.shift.x, m_.shift.y}},
                {"alpha", alpha_}};
    }

    RigidMotion motion() const { return m_; }
    double alpha() const { return alpha_; }

  private:
    RigidMotion m_;
    double alpha_;
};

class ComplementR final : public Region {
  public:
    explicit ComplementR(RegionPtr r) : r_(std::move(r)) {}
    bool contains(Vec2 p) const override { return !r_->contains(p); }
    double boundary_distance(Vec2 p) const override { return r_->boundary_distance(p); }
    std::vector<OrientedCurve> boundary_curves() const override {
        std::vector<OrientedCurve> out;
        for (auto& c : r_->boundary_curves()) out.push_back(c.reversed());
        return out;
    }
    nlohmann::json descriptor() const override {
        return {{"type", "complement"}, {"of", r_->descriptor()}};
    }
    RegionPtr inner() const { return r_; }

  private:
    RegionPtr r_;
};

class UnionR final : public Region {
  public:
    explicit UnionR(std::vector<RegionPtr> rs) : rs_(std::move(rs)) {
        if (rs_.empty()) throw std::invalid_argument("union: empty");
    }
    bool contains(Vec2 p) const override {
        for (auto& r : rs_)
            if (r->contains(p)) return true;
        return false;
    }
    // Exact whenever the constituent boundaries are pairwise disjoint, which
    // all shipped fixtures satisfy.
    double boundary_distance(Vec2 p) const override {
        double d = std::numeric_limits<double>::infinity();
        for (auto& r : rs_) d = std::min(d, r->boundary_distance(p));
        return d;
    }
    std::vector<OrientedCurve> boundary_curves() const override {
        std::vector<OrientedCurve> out;
        for (auto& r : rs_)
            for (auto& c : r->boundary_curves()) out.push_back(c);
        return out;
    }
    nlohmann::json descriptor() const override {
        nlohmann::json parts = nlohmann::json::array();
        for (auto& r : rs_) parts.push_back(r->descriptor());
        return {{"type", "union"}, {"of", parts}};
    }

  private:
    std::vector<RegionPtr> rs_;
};

class IntersectionR final : public Region {
  public:
    explicit IntersectionR(std::vector<RegionPtr> rs) : rs_(std::move(rs)) {
        if (rs_.empty()) throw std::invalid_argument("intersection: empty");
    }
    bool contains(Vec2 p) const override {
        for (auto& r : rs_)
            if (!r->contains(p)) return false;
        return true;
    }
    double boundary_distance(Vec2 p) const override {
        double d = std::numeric_limits<double>::infinity();
        for (auto& r : rs_) d = std::min(d, r->boundary_distance(p));
        return d;
    }
    std::vector<OrientedCurve> boundary_curves() const override {
        throw std::runtime_error("boundary curves of an intersection are not supported");
    }
    nlohmann::json descriptor() const override {
        nlohmann::json parts = nlohmann::json::array();
        for (auto& r : rs_) parts.push_back(r->descriptor());
        return {{"type", "intersection"}, {"of", parts}};
    }

  private:
    std::vector<RegionPtr> rs_;
};

class FullPlane final : public Region {
  public:
    bool contains(Vec2) const override { return true; }
    double boundary_distance(Vec2) const override {
        return std::numeric_limits<double>::infinity();
    }
    std::vector<OrientedCurve> boundary_curves() const override { return {}; }
    nlohmann::json descriptor() const override { return {{"type", "plane"}}; }
};

}  // namespace

RegionPtr half_plane(Vec2 n, double c) { return std::make_shared<HalfPlane>(n, c); }
RegionPtr strip(Vec2 n, double a, double b) { return std::make_shared<Strip>(n, a, b); }
RegionPtr disk(Vec2 c, double r) { return std::make_shared<Disk>(c, r); }
RegionPtr polygon(std::vector<Vec2> v) { return std::make_shared<Polygon>(std::move(v)); }
RegionPtr parabolic_region(const RigidMotion& m, double alpha) {
    return std::make_shared<Parabolic>(m, alpha);
}
RegionPtr complement(RegionPtr r) {
    if (auto c = std::dynamic_pointer_cast<const ComplementR>(r)) return c->inner();
    return std::make_shared<ComplementR>(std::move(r));
}
RegionPtr region_union(std::vector<RegionPtr> rs) {
    return std::make_shared<UnionR>(std::move(rs));
}
RegionPtr region_intersection(std::vector<RegionPtr> rs) {
    return std::make_shared<IntersectionR>(std::move(rs));
}
RegionPtr full_plane() { return std::make_shared<FullPlane>(); }

ParabolicData parabolic_data(const RegionPtr& r) {
    auto p = std::dynamic_pointer_cast<const Parabolic>(r);
    if (!p) throw std::invalid_argument("expected a parabolic region");
    return {p->motion(), p->alpha()};
}

RegionPtr region_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type");
    if (type == "half_plane") {
        auto n = j.at("normal");
        return half_plane({n[0], n[1]}, j.at("offset"));
    }
    if (type == "strip") {
        auto n = j.at("normal");
        return strip({n[0], n[1]}, j.at("a"), j.at("b"));
    }
    if (type == "disk") {
        auto c = j.at("center");
        return disk({c[0], c[1]}, j.at("radius"));
    }
    if (type == "polygon") {
        std::vector<Vec2> v;
        for (auto& p : j.at("vertices")) v.push_back({p[0], p[1]});
        return polygon(std::move(v));
    }
    if (type == "parabolic") {
        RigidMotion m;
        m.theta = j.at("theta");
        auto s = j.at("shift");
        m.shift = {s[0], s[1]};
        return parabolic_region(m, j.at("alpha"));
    }
    if (type == "complement") return complement(region_from_json(j.at("of")));
    if (type == "union" || type == "intersection") {
        std::vector<RegionPtr> rs;
        for (auto& part : j.at("of")) rs.push_back(region_from_json(part));
        return type == "union" ? region_union(std::move(rs))
                               : region_intersection(std::move(rs));
    }
    if (type == "plane") return full_plane();
    if (type == "constructed_v") {
        auto v = construct_transverse_V(region_from_json(j.at("p_plus")),
                                        region_from_json(j.at("p_minus")));
        return v.region;
    }
    throw std::invalid_argument("unknown region type: " + type);
}

}  // namespace ctop
