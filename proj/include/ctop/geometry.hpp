#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctop {

enum class BoundaryMode { open, torus };

// Square patch of Z^2: sites x with |x|_inf <= L, m internal components per
// site. Row blocks are ordered by site_index(). Torus mode wraps displacements
// and is only meaningful for translation-invariant assembly.
struct LatticeGeometry {
    int L = 0;
    int m = 1;
    BoundaryMode mode = BoundaryMode::open;

    LatticeGeometry() = default;
    LatticeGeometry(int half_width, int internal_dim,
                    BoundaryMode bmode = BoundaryMode::open)
        : L(half_width), m(internal_dim), mode(bmode) {
        if (L < 0 || m < 1) throw std::invalid_argument("bad lattice geometry");
    }

    int side() const { return 2 * L + 1; }
    int n_sites() const { return side() * side(); }
    int dim() const { return n_sites() * m; }

    bool in_box(int x1, int x2) const {
        return x1 >= -L && x1 <= L && x2 >= -L && x2 <= L;
    }

    int site_index(int x1, int x2) const {
        return (x2 + L) * side() + (x1 + L);
    }
    std::array<int, 2> site_coords(int idx) const {
        return {idx % side() - L, idx / side() - L};
    }

    // Minimal-image displacement on the torus; identity on the open box.
    std::array<int, 2> wrap(int d1, int d2) const {
        if (mode == BoundaryMode::torus) {
            const int s = side();
            d1 = ((d1 % s) + s + L) % s - L;
            d2 = ((d2 % s) + s + L) % s - L;
        }
        return {d1, d2};
    }

    bool operator==(const LatticeGeometry& o) const {
        return L == o.L && m == o.m && mode == o.mode;
    }
    bool operator!=(const LatticeGeometry& o) const { return !(*this == o); }
};

inline void require_same_geometry(const LatticeGeometry& a,
                                  const LatticeGeometry& b,
                                  const std::string& what) {
    if (a != b) throw std::invalid_argument("geometry mismatch in " + what);
}

}  // namespace ctop
