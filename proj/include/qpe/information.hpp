#pragma once

#include <functional>
#include <optional>

#include "qpe/distribution.hpp"
#include "qpe/states.hpp"

namespace qpe {

/** Real symmetric PSD 3x3 information matrix over (alpha, theta, phi). */
class FisherMatrix3 {
  public:
    FisherMatrix3();  // zero matrix
    static FisherMatrix3 from_entries(const std::array<double, 9>& row_major);

    double operator()(int i, int j) const { return m_[static_cast<std::size_t>(3 * i + j)]; }
    double alpha_alpha() const { return m_[0]; }
    const std::array<double, 9>& entries() const { return m_; }

    FisherMatrix3 operator+(const FisherMatrix3& o) const;
    FisherMatrix3 operator*(double s) const;

  private:
    std::array<double, 9> m_{};
};

/** PSD weight matrix for scalar risk bounds; defaults to diag(1, 0, 0). */
class WeightMatrix {
  public:
    WeightMatrix();
    explicit WeightMatrix(const std::array<double, 9>& row_major);
    double operator()(int i, int j) const { return m_[static_cast<std::size_t>(3 * i + j)]; }

  private:
    std::array<double, 9> m_{};
};

/** The three SLD operators, one per parameter; each Hermitian. */
struct SLDTriple {
    CMat lambda_alpha;
    CMat lambda_theta;
    CMat lambda_phi;
};

/** Deterministic map from rotation parameters to an outcome distribution. */
struct DistributionFamily {
    std::function<OutcomeDistribution(const RotationParams&)> eval;
};

using PureFamily = std::function<PureState(const RotationParams&)>;
using DensityFamily = std::function<DensityMx(const RotationParams&)>;

/**
 * Classical Fisher information matrix I_ij = sum_k (d_i p_k)(d_j p_k)/p_k by central
 * differences (h = 1e-5 rad; theta and phi wrapped). Outcomes with p < 1e-12 and
 * |dp| < 1e-9 contribute nothing; p < 1e-12 with a live derivative is an error.
 */
FisherMatrix3 fi_from_distribution(const DistributionFamily& fam, const RotationParams& at);

/** QFI 4(<d psi|d psi> - |<psi|d psi>|^2), derivative in alpha only; clipped at 0. */
double qfi_pure(const PureFamily& family, const RotationParams& at);

/**
 * QFIM via the symmetric logarithmic derivative. Each Lambda_i is assembled in the
 * rho eigenbasis as 2 (d_i rho)_mn / (lam_m + lam_n), zero where lam_m + lam_n < 1e-10;
 * entries are symmetrized as tr[Lambda_i d_j rho + Lambda_j d_i rho] / 2.
 */
std::pair<FisherMatrix3, SLDTriple> qfim_sld(const DensityFamily& family,
                                             const RotationParams& at);

/**
 * (M^-1)_11 via the Schur complement: 1/(I_aa - I_c^T I_n^-1 I_c) when the axis block
 * is invertible and the complement is positive; 1/I_aa when the block is singular but
 * the coupling vanishes; std::nullopt (non-identifiable) otherwise.
 */
std::optional<double> schur_alpha_bound(const FisherMatrix3& m);

/**
 * QFI averaged over the axis sphere: Gauss-Legendre in cos(theta) x uniform
 * trapezoid in phi. Equals 2/3 for every pure input.
 */
double sphere_average_qfi(const PureState& input, double alpha, int cos_nodes = 32,
                          int phi_nodes = 64);

/** FI of the depolarized singlet-projection outcome at preparation fidelity f. */
double finite_fidelity_fi(double f, double alpha);

/** Gauss-Legendre nodes/weights on [-1, 1]. */
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace qpe
