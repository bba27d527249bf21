#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ctop/geometry.hpp"

namespace ctop {

using cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;

// Finite-volume operator on l2(box; C^m), stored dense. Blocks A_xy are the
// m x m sub-blocks between site row/column groups.
struct LocalOperator {
    LatticeGeometry geom;
    MatC mat;
    bool hermitian = false;

    LocalOperator() = default;
    LocalOperator(const LatticeGeometry& g, MatC&& a, bool herm)
        : geom(g), mat(std::move(a)), hermitian(herm) {}

    static LocalOperator zero(const LatticeGeometry& g) {
        return LocalOperator(g, MatC::Zero(g.dim(), g.dim()), true);
    }
    static LocalOperator identity(const LatticeGeometry& g) {
        return LocalOperator(g, MatC::Identity(g.dim(), g.dim()), true);
    }

    int dim() const { return static_cast<int>(mat.rows()); }

    Eigen::Block<const MatC> block(int site_x, int site_y) const {
        const int m = geom.m;
        return mat.block(site_x * m, site_y * m, m, m);
    }

    double hermiticity_defect() const {
        return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    }
    double norm_inf() const { return mat.cwiseAbs().maxCoeff(); }
};

// Multiplication by the 0/1 indicator of a set evaluated at the sites.
// Diagonal, idempotent by construction.
struct SwitchProjector {
    LatticeGeometry geom;
    std::vector<std::uint8_t> indicator;  // per site

    double at_site(int site) const { return indicator[site] ? 1.0 : 0.0; }
    int count() const {
        int n = 0;
        for (auto v : indicator) n += v;
        return n;
    }

    SwitchProjector complement() const {
        SwitchProjector c{geom, indicator};
        for (auto& v : c.indicator) v = v ? 0 : 1;
        return c;
    }

    LocalOperator to_operator() const {
        LocalOperator op = LocalOperator::zero(geom);
        for (int s = 0; s < geom.n_sites(); ++s)
            for (int k = 0; k < geom.m; ++k)
                op.mat(s * geom.m + k, s * geom.m + k) = at_site(s);
        return op;
    }
};

// A B - B A for dense operators.
inline LocalOperator commutator(const LocalOperator& a, const LocalOperator& b) {
    require_same_geometry(a.geom, b.geom, "commutator");
    MatC c = a.mat * b.mat - b.mat * a.mat;
    return LocalOperator(a.geom, std::move(c), false);
}

// [A, Lambda_S]: entrywise mask (chi_S(y) - chi_S(x)) A_xy, no matrix product.
inline LocalOperator commutator(const LocalOperator& a, const SwitchProjector& s) {
    require_same_geometry(a.geom, s.geom, "commutator");
    const int m = a.geom.m;
    MatC c(a.dim(), a.dim());
    for (int sy = 0; sy < a.geom.n_sites(); ++sy) {
        const double ly = s.at_site(sy);
        for (int sx = 0; sx < a.geom.n_sites(); ++sx) {
            const double w = ly - s.at_site(sx);
            if (w == 0.0)
                c.block(sx * m, sy * m, m, m).setZero();
            else
                c.block(sx * m, sy * m, m, m) = w * a.block(sx, sy);
        }
    }
    return LocalOperator(a.geom, std::move(c), false);
}

// [Lambda_S, A] = -[A, Lambda_S].
inline LocalOperator commutator(const SwitchProjector& s, const LocalOperator& a) {
    LocalOperator c = commutator(a, s);
    c.mat = -c.mat;
    return c;
}

// Lambda_S A Lambda_T as masked copy.
inline LocalOperator compress(const SwitchProjector& s, const LocalOperator& a,
                              const SwitchProjector& t) {
    require_same_geometry(a.geom, s.geom, "compress");
    require_same_geometry(a.geom, t.geom, "compress");
    const int m = a.geom.m;
    MatC c = MatC::Zero(a.dim(), a.dim());
    for (int sy = 0; sy < a.geom.n_sites(); ++sy) {
        if (!t.indicator[sy]) continue;
        for (int sx = 0; sx < a.geom.n_sites(); ++sx) {
            if (!s.indicator[sx]) continue;
            c.block(sx * m, sy * m, m, m) = a.block(sx, sy);
        }
    }
    return LocalOperator(a.geom, std::move(c), a.hermitian && s.indicator == t.indicator);
}

}  // namespace ctop
