#pragma once

#include <vector>

#include "qpe/matrix.hpp"

namespace qpe {

/** Spectral decomposition of a Hermitian matrix: m = V diag(values) V^dagger. */
struct EigenSystem {
    std::vector<double> values;  // ascending
    CMat vectors;                // columns are the matching orthonormal eigenvectors

    CVec vector(int i) const {
        CVec v(vectors.dim());
        for (int r = 0; r < vectors.dim(); ++r) v[r] = vectors(r, i);
        return v;
    }
};

/**
 * Eigendecomposition of a Hermitian matrix (max |m - m^dagger| <= 1e-10 required).
 * Dim 2 uses the closed form; dim 4 runs cyclic Jacobi sweeps to an off-diagonal
 * maximum of 1e-13, capped at 100 sweeps.
 */
EigenSystem hermitian_eig(const CMat& m);

/** Hermitian PSD square root; eigenvalues in [-1e-10, 0) are clipped to zero. */
CMat matrix_sqrt_psd(const CMat& m);

/** exp(-i t g) for a Hermitian generator g, via eigendecomposition. */
CMat expm_generator(const CMat& g, double t);

/** Eigenvalues (ascending) and column eigenvectors of a small real symmetric matrix. */
void real_symmetric_eig(const std::vector<double>& m, int n, std::vector<double>& values,
                        std::vector<double>& vectors);

/** Solves a small dense linear system a x = b in place (partial pivoting). */
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n);

}  // namespace qpe
