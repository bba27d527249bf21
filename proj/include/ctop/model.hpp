#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctop/operator.hpp"

namespace ctop {

// Translation-invariant bulk insulator given by a finite hopping table.
// T_{-d} = T_d^dagger is enforced at construction.
struct BulkModel {
    int m = 1;
    std::vector<std::pair<std::array<int, 2>, MatC>> hoppings;
    std::map<std::string, double> parameters;

    int range() const;
    MatC bloch(double k1, double k2) const;
    double norm_bound() const;  // sum of hopping block norms

    nlohmann::json to_json() const;
    static BulkModel from_json(const nlohmann::json& j);
};

// Two-band model with Bloch Hamiltonian
//   sin(k1) s1 + sin(k2) s2 + (mass + cos k1 + cos k2) s3.
// Chern phases: 0 for |mass| > 2, +-1 for 0 < |mass| < 2.
BulkModel qwz_model(double mass);

// Onsite-only insulator, H = onsite * identity.
BulkModel vacuum_model(double onsite, int m);

LocalOperator assemble_bulk(const BulkModel& model, const LatticeGeometry& geom);

struct FermiData {
    double fermi_energy = 0;
    std::pair<double, double> gap_window{0, 0};
    double gap_margin = 0;
    LocalOperator projection;
};

// Dense spectral projection below E_F. Errors out when an eigenvalue sits
// within 1e-9 of E_F.
FermiData fermi_projection(const LocalOperator& h, double e_fermi);

struct ChernOracleResult {
    int chern = 0;
    double integrality_gap = 0;
    int grid_n = 0;
    double min_gap_on_grid = 0;
};

// Berry-flux plaquette sum (lattice field strength, fluxes folded to
// (-pi, pi]), gauge invariant and exactly integral.
ChernOracleResult chern_oracle_momentum(const BulkModel& model, double e_fermi,
                                        int grid_n);

// Fermi projection kernel of a translation-invariant model on the torus,
// assembled from Bloch diagonalization on the (2L+1)^2 momentum grid. Agrees
// with fermi_projection(assemble_bulk(torus)) to machine precision but never
// forms the dense matrix.
class BulkKernel {
  public:
    static BulkKernel fermi_kernel(const BulkModel& model,
                                   const LatticeGeometry& torus_geom,
                                   double e_fermi);

    const LatticeGeometry& geometry() const { return geom_; }
    double gap_lo() const { return gap_lo_; }
    double gap_hi() const { return gap_hi_; }
    double gap_margin() const { return gap_margin_; }

    // m x m kernel block at wrapped displacement d = x - y.
    const MatC& block(int d1, int d2) const;

    // Gathered sub-matrix over site index lists (m x m block per site pair).
    MatC slab(const std::vector<int>& row_sites,
              const std::vector<int>& col_sites) const;

    // P * v by momentum-space multiplication, O(N * side).
    VecC matvec(const VecC& v) const;
    MatC matmat(const MatC& block_of_columns) const;

    LocalOperator materialize() const;

  private:
    LatticeGeometry geom_;
    std::vector<MatC> pk_;      // P(k) per momentum grid point
    std::vector<MatC> table_;   // p(d) per wrapped displacement
    MatC dft_, idft_;           // side x side transforms
    double gap_lo_ = 0, gap_hi_ = 0, gap_margin_ = 0;
};

}  // namespace ctop
