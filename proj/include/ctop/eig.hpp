#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "ctop/operator.hpp"

namespace ctop {

struct EigResult {
    VecR values;
    MatC vectors;  // columns
};

// Full hermitian eigendecomposition. Routed to LAPACK zheevd (OpenBLAS)
// above a size threshold, Eigen below it. Input is not modified.
EigResult eigh(const MatC& a);

// Eigenpairs with eigenvalue in [lo, hi] only (LAPACK zheevr).
EigResult eigh_range(const MatC& a, double lo, double hi);

// Eigenvalues only.
VecR eigvalsh(const MatC& a);

void set_blas_threads(int n);
int get_blas_threads();

}  // namespace ctop
