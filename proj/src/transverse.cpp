#include "ctop/transverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctop {

namespace {

double point_segment_dist(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = d.dot(d);
    double t = len2 > 0 ? (p - a).dot(d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + d * t)).norm();
}

double point_ray_dist(Vec2 p, Vec2 origin, Vec2 dir) {
    double t = (p - origin).dot(dir);
    if (t < 0) t = 0;
    return (p - (origin + dir * t)).norm();
}

// Proper segment-segment crossing test; returns 0/1 and sets degenerate when
// an endpoint is (nearly) collinear with the other segment.
int segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, bool& degenerate) {
    const double scale = std::max({1.0, (b - a).norm(), (d - c).norm()});
    const double eps = 1e-11 * scale * scale;
    const double d1 = (b - a).cross(c - a);
    const double d2 = (b - a).cross(d - a);
    const double d3 = (d - c).cross(a - c);
    const double d4 = (d - c).cross(b - c);
    if (std::abs(d1) < eps || std::abs(d2) < eps || std::abs(d3) < eps ||
        std::abs(d4) < eps) {
        degenerate = true;
        return 0;
    }
    return ((d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0)) ? 1 : 0;
}

struct ChainGeometry {
    Vec2 y_minus, y_plus;
    Vec2 dir_minus, dir_plus;  // outward unit directions of the two rays

    double distance(Vec2 p) const {
        return std::min({point_ray_dist(p, y_minus, dir_minus),
                         point_segment_dist(p, y_minus, y_plus),
                         point_ray_dist(p, y_plus, dir_plus)});
    }

    // Chain as three stand-in segments long enough to act as rays for any
    // query within `reach` of the origin.
    std::vector<std::pair<Vec2, Vec2>> as_segments(double reach) const {
        const double span = 4.0 * (reach + y_minus.norm() + y_plus.norm() + 10.0);
        return {{y_minus + dir_minus * span, y_minus},
                {y_minus, y_plus},
                {y_plus, y_plus + dir_plus * span}};
    }
};

class LeftOfChain final : public Region {
  public:
    LeftOfChain(ChainGeometry chain, ParabolicData plus, ParabolicData minus,
                double alpha)
        : chain_(chain), plus_(plus), minus_(minus), alpha_(alpha) {}

    bool contains(Vec2 p) const override {
        if (chain_.distance(p) < 1e-9) return false;  // open component
        const double reach = p.norm();
        // Reference point on the left of Gamma_plus, far out.
        const double t_ref = 16.0 * (reach + chain_.y_plus.norm() + 10.0);
        for (int attempt = 0; attempt < 24; ++attempt) {
            const double bump = 1.0 + 0.37 * attempt;
            const Vec2 ref = chain_.y_plus + chain_.dir_plus * (t_ref + 3.1 * attempt) +
                             rot90(chain_.dir_plus) * (0.5 * bump);
            if (chain_.distance(ref) < 0.2) continue;
            bool degenerate = false;
            int crossings = 0;
            for (auto& [a, b] : chain_.as_segments(reach + t_ref)) {
                crossings += segments_cross(p, ref, a, b, degenerate);
                if (degenerate) break;
            }
            if (!degenerate) return crossings % 2 == 0;
        }
        throw std::runtime_error("left-of-chain membership: persistent degeneracy");
    }

    double boundary_distance(Vec2 p) const override { return chain_.distance(p); }

    std::vector<OrientedCurve> boundary_curves() const override {
        OrientedCurve g;
        const ChainGeometry c = chain_;
        const double ell = (c.y_plus - c.y_minus).norm();
        g.eval = [c, ell](double t) {
            if (t <= 0) return c.y_minus + c.dir_minus * (-t);
            if (t >= ell) return c.y_plus + c.dir_plus * (t - ell);
            const double s = ell > 0 ? t / ell : 0.0;
            return c.y_minus + (c.y_plus - c.y_minus) * s;
        };
        g.label = "constructed V boundary";
        return {g};
    }

    nlohmann::json descriptor() const override {
        return {{"type", "constructed_v"},
                {"p_plus", parabolic_region(plus_.motion, plus_.alpha)->descriptor()},
                {"p_minus", parabolic_region(minus_.motion, minus_.alpha)->descriptor()}};
    }

  private:
    ChainGeometry chain_;
    ParabolicData plus_, minus_;
    double alpha_;
};

}  // namespace

double psi(Vec2 x, const Region& u, const Region& v) {
    return 1.0 + u.boundary_distance(x) + v.boundary_distance(x);
}

TransversalityReport estimate_transversality(const Region& u, const Region& v,
                                             int radius_max) {
    if (radius_max < 32)
        throw std::invalid_argument("estimate_transversality: radius_max >= 32 required");
    if (!std::isfinite(u.boundary_distance({0, 0})) ||
        !std::isfinite(v.boundary_distance({0, 0})))
        throw std::invalid_argument("estimate_transversality: degenerate region");

    TransversalityReport rep;
    rep.radius_max = radius_max;
    for (int r = 1; r <= radius_max; ++r) {
        double mn = std::numeric_limits<double>::infinity();
        for (int k = -r; k <= r; ++k) {
            for (Vec2 p : {Vec2(k, r), Vec2(k, -r), Vec2(r, k), Vec2(-r, k)})
                mn = std::min(mn, psi(p, u, v));
        }
        rep.shell_minima.push_back({r, mn});
    }

    const int burn_in = radius_max / 4;
    double expo = std::numeric_limits<double>::infinity();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (auto& [r, mn] : rep.shell_minima) {
        if (r < burn_in) continue;
        expo = std::min(expo, std::log(mn) / std::log(double(r)));
        const double lx = std::log(double(r)), ly = std::log(mn);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    rep.exponent_estimate = expo;
    rep.loglog_slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

    constexpr double kFloor = 0.05;
    if (!std::isfinite(expo) || n < 2)
        rep.verdict = TransverseVerdict::inconclusive;
    else if (expo <= kFloor || rep.loglog_slope <= kFloor)
        rep.verdict = TransverseVerdict::not_transverse;
    else
        rep.verdict = TransverseVerdict::transverse;
    return rep;
}

int intersection_number(const RegionPtr& u, const RegionPtr& v, double t_max,
                        int transversality_radius) {
    auto rep = estimate_transversality(*u, *v, transversality_radius);
    if (rep.verdict != TransverseVerdict::transverse)
        throw std::runtime_error("intersection_number: U and V are not transverse");

    int chi = 0;
    for (auto& curve : u->boundary_curves()) {
        if (curve.closed) continue;  // bounded components do not contribute
        // sampled simplicity check
        {
            std::vector<Vec2> pts;
            for (int i = -40; i <= 40; ++i) pts.push_back(curve.at(t_max * i / 40.0));
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 4; j < pts.size(); ++j)
                    if ((pts[i] - pts[j]).norm() < 1e-6)
                        throw std::runtime_error("intersection_number: curve is not simple");
        }
        int pos = -1, neg = -1;
        for (int dec = 10; dec >= 1; --dec) {
            const double t = t_max * dec / 10.0;
            const int vp = v->contains(curve.at(t)) ? 1 : 0;
            const int vn = v->contains(curve.at(-t)) ? 1 : 0;
            if (dec == 10) {
                pos = vp;
                neg = vn;
            } else if (vp != pos || vn != neg) {
                throw std::runtime_error(
                    "intersection_number: transversality too weak at sampled radius");
            }
        }
        chi += pos - neg;
    }
    return chi;
}

ConstructedV construct_transverse_V(const RegionPtr& p_plus, const RegionPtr& p_minus) {
    const ParabolicData plus = parabolic_data(p_plus);
    const ParabolicData minus = parabolic_data(p_minus);

    // sampled disjointness check along spines and arms
    for (double t = 0; t <= 64.0; t += 0.25) {
        for (double s : {-1.0, 0.0, 1.0}) {
            const Vec2 a = plus.motion.apply({t, s * std::pow(t, plus.alpha)});
            const Vec2 b = minus.motion.apply({t, s * std::pow(t, minus.alpha)});
            if (p_minus->contains(a) || p_plus->contains(b))
                throw std::invalid_argument(
                    "construct_transverse_V: parabolic regions are not disjoint");
        }
    }

    ChainGeometry chain;
    chain.y_plus = plus.motion.apply({0, 0});
    chain.y_minus = minus.motion.apply({0, 0});
    chain.dir_plus = plus.motion.direction();
    chain.dir_minus = minus.motion.direction();

    // the chain must be simple
    {
        auto segs = chain.as_segments(1e4);
        bool degenerate = false;
        if (segments_cross(segs[0].first, segs[0].second, segs[2].first,
                           segs[2].second, degenerate) ||
            degenerate) {
            // allow rays sharing only the hinge points
            const double d = std::min(
                point_ray_dist(chain.y_plus, chain.y_minus, chain.dir_minus),
                point_ray_dist(chain.y_minus, chain.y_plus, chain.dir_plus));
            if (d < 1e-9 || !degenerate)
                throw std::runtime_error(
                    "construct_transverse_V: axes cross; perturb rigid motions");
        }
    }

    const double alpha = std::min({plus.alpha, minus.alpha, 0.5});
    auto region = std::make_shared<LeftOfChain>(chain, plus, minus, alpha);

    ConstructedV out;
    out.region = region;
    out.gamma = region->boundary_curves().front();
    out.alpha = alpha;
    out.y_minus = chain.y_minus;
    out.y_plus = chain.y_plus;
    return out;
}

ConstructionBoundsReport verify_construction_bounds(const RegionPtr& u,
                                                    const RegionPtr& p_plus,
                                                    const RegionPtr& p_minus,
                                                    const ConstructedV& v,
                                                    int radius) {
    const ParabolicData plus = parabolic_data(p_plus);
    const ParabolicData minus = parabolic_data(p_minus);
    const double alpha = v.alpha;

    ConstructionBoundsReport rep;
    rep.alpha = alpha;
    const double r_min = 5.0 + std::pow(2.0, 1.0 + 1.0 / alpha);
    rep.big_r = std::max({r_min, v.y_minus.norm(), v.y_plus.norm()});
    if (radius < 2.0 * rep.big_r)
        throw std::invalid_argument(
            "verify_construction_bounds: radius must be at least 2R = " +
            std::to_string(2.0 * rep.big_r));

    const double c_alpha = std::pow(2.0, -2.0 - alpha);
    const ChainGeometry chain{v.y_minus, v.y_plus, minus.motion.direction(),
                              plus.motion.direction()};

    auto in_margin = [&](const ParabolicData& pd, Vec2 x) {
        const Vec2 q = pd.motion.inverse(x);
        return q.x >= 0 && 2.0 * std::abs(q.y) <= std::pow(q.x, alpha);
    };

    auto update = [](BoundsCase& c, double slack) {
        ++c.samples;
        if (slack < 0) ++c.violations;
        c.worst_slack = std::min(c.worst_slack, slack);
    };

    for (int ix = -radius; ix <= radius; ++ix) {
        for (int iy = -radius; iy <= radius; ++iy) {
            const Vec2 x(ix, iy);
            const double nx = x.norm();
            if (nx < 2.0 * rep.big_r || nx > radius) continue;
            const double rhs = c_alpha * nx;
            const bool in_plus = in_margin(plus, x);
            const bool in_minus = in_margin(minus, x);
            if (!in_plus && !in_minus) {
                const double d0 = point_segment_dist(x, v.y_minus, v.y_plus);
                const double dp = point_ray_dist(x, v.y_plus, plus.motion.direction());
                const double dm = point_ray_dist(x, v.y_minus, minus.motion.direction());
                update(rep.outside, std::min({d0, dp, dm}) - rhs);
            } else {
                const double du = u->boundary_distance(x);
                update(rep.inside, du - rhs);
                // Fig. 2 corner bound in the frame of the relevant sleeve
                const ParabolicData& pd = in_plus ? plus : minus;
                const Vec2 q = pd.motion.inverse(x);
                const double y1 = q.x;
                if (y1 > 1.0) {
                    const double bound =
                        0.5 * (1.0 - std::pow(2.0, -1.0 / alpha)) *
                        std::pow(y1, 1.0 + alpha) /
                        std::sqrt(y1 * y1 + std::pow(y1, 2.0 * alpha));
                    update(rep.corner, du - bound);
                }
            }
            update(rep.conclusion, psi(x, *u, *v.region) - rhs);
        }
    }
    return rep;
}

}  // namespace ctop
