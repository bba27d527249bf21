#pragma once

#include <optional>
#include <vector>

#include "ctop/regions.hpp"

namespace ctop {

// 1 + d(x, boundary of U) + d(x, boundary of V).
double psi(Vec2 x, const Region& u, const Region& v);

enum class TransverseVerdict { transverse, not_transverse, inconclusive };

struct TransversalityReport {
    double exponent_estimate = 0;  // min over upper shells of log(min psi)/log r
    double loglog_slope = 0;       // regression slope of log(min psi) vs log r
    int radius_max = 0;
    std::vector<std::pair<int, double>> shell_minima;  // (r, min psi on shell)
    TransverseVerdict verdict = TransverseVerdict::inconclusive;
};

// Samples |x|_inf = r shells up to radius_max (>= 32). The per-shell exponent
// alone cannot reject bounded-psi pairs at finite radius, so the verdict also
// requires the log-log growth slope to clear the same floor.
TransversalityReport estimate_transversality(const Region& u, const Region& v,
                                             int radius_max);

// Signed count of how many times the oriented boundary of U enters V.
// Requires transversality (estimated) and stable limits along each curve.
int intersection_number(const RegionPtr& u, const RegionPtr& v,
                        double t_max = 1e4, int transversality_radius = 48);

struct ConstructedV {
    RegionPtr region;      // the component of R^2 \ Gamma to the left of gamma
    OrientedCurve gamma;   // Gamma- then Gamma0 then Gamma+
    double alpha = 0;      // min(alpha+, alpha-, 1/2)
    Vec2 y_minus, y_plus;  // endpoints of Gamma0
};

// p_plus and p_minus must be disjoint parabolic primitives (inside U and U^c).
ConstructedV construct_transverse_V(const RegionPtr& p_plus, const RegionPtr& p_minus);

struct BoundsCase {
    long samples = 0;
    long violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();  // min LHS-RHS
};

struct ConstructionBoundsReport {
    double alpha = 0;
    double big_r = 0;  // R of Step 2
    BoundsCase outside;     // x outside both margin sleeves: d(x,Gamma_0), d(x,Gamma_pm)
    BoundsCase inside;      // x in a margin sleeve: d(x, boundary of U)
    BoundsCase corner;      // Fig. 2 corner bound on the margin sleeve
    BoundsCase conclusion;  // psi(x) >= 2^{-2-alpha} |x|
};

ConstructionBoundsReport verify_construction_bounds(const RegionPtr& u,
                                                    const RegionPtr& p_plus,
                                                    const RegionPtr& p_minus,
                                                    const ConstructedV& v,
                                                    int radius);

}  // namespace ctop
