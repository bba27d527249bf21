#include "ctop/eig.hpp"

#include <stdexcept>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

extern "C" {
void openblas_set_num_threads(int);
int openblas_get_num_threads(void);
}

namespace ctop {

namespace {
constexpr int kLapackThreshold = 256;
}

void set_blas_threads(int n) { openblas_set_num_threads(n > 0 ? n : 1); }
int get_blas_threads() { return openblas_get_num_threads(); }

EigResult eigh(const MatC& a) {
    const int n = static_cast<int>(a.rows());
    if (n != a.cols()) throw std::invalid_argument("eigh: square matrix required");
    if (n < kLapackThreshold) {
        Eigen::SelfAdjointEigenSolver<MatC> es(a);
        if (es.info() != Eigen::Success) throw std::runtime_error("eigh failed");
        return {es.eigenvalues(), es.eigenvectors()};
    }
    EigResult r;
    r.vectors = a;
    r.values.resize(n);
    int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, r.vectors.data(), n,
                              r.values.data());
    if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
    return r;
}

EigResult eigh_range(const MatC& a, double lo, double hi) {
    const int n = static_cast<int>(a.rows());
    if (n != a.cols()) throw std::invalid_argument("eigh_range: square matrix required");
    MatC work = a;
    VecR w(n);
    MatC z(n, n > 0 ? n : 1);
    std::vector<lapack_int> isuppz(static_cast<size_t>(2 * std::max(1, n)));
    lapack_int m_found = 0;
    int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'V', 'L', n, work.data(), n,
                              lo, hi, 0, 0, 2 * LAPACKE_dlamch('S'), &m_found,
                              w.data(), z.data(), n, isuppz.data());
    if (info != 0) throw std::runtime_error("zheevr failed, info=" + std::to_string(info));
    EigResult r;
    r.values = w.head(m_found);
    r.vectors = z.leftCols(m_found);
    return r;
}

VecR eigvalsh(const MatC& a) {
    const int n = static_cast<int>(a.rows());
    if (n < kLapackThreshold) {
        Eigen::SelfAdjointEigenSolver<MatC> es(a, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }
    MatC work = a;
    VecR w(n);
    int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
    if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
    return w;
}

}  // namespace ctop
