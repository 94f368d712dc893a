#pragma once

#include <cstdint>

#include "qpe/protocols.hpp"

namespace qpe {

/** Row-stochastic map from true to observed outcomes; rows index the true outcome. */
class ConfusionMatrix {
  public:
    ConfusionMatrix(int n, std::vector<double> row_major);

    /** n-outcome symmetric single-observable confusion at the given readout fidelity. */
    static ConfusionMatrix symmetric(double fidelity, int n = 2);
    /** Product confusion for joint two-qubit outcomes, first-factor fidelity first. */
    static ConfusionMatrix two_qubit_product(double f_first, double f_second);
    static ConfusionMatrix identity(int n);

    int size() const { return n_; }
    double operator()(int r, int c) const { return m_[static_cast<std::size_t>(r * n_ + c)]; }
    const std::vector<double>& entries() const { return m_; }

  private:
    int n_;
    std::vector<double> m_;
};

/** Counts per outcome from one measurement batch; reproducible via the stored seed. */
struct ShotTable {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> counts;
    std::uint64_t n_total = 0;
    std::uint64_t seed = 0;

    std::vector<double> frequencies() const;
};

struct TomographyResult {
    DensityMx rho;
    std::array<double, 15> expectation_table;  // XI..ZZ in pauli_label order
    double fit_residual;
};

struct EstimatorResult {
    double alpha_hat = 0;
    std::uint64_t n_shots = 0;
    std::string protocol;
    double log_likelihood = 0;
    bool at_boundary = false;
};

/** The 15 non-identity two-qubit Pauli expectations, probe factor first. */
class TwoQubitExpectations {
  public:
    TwoQubitExpectations();
    /** Correlator-only input; the six single-qubit expectations default to zero. */
    static TwoQubitExpectations from_correlators(const std::array<double, 9>& xx_to_zz);
    static TwoQubitExpectations measure(const DensityMx& rho);

    /** i, j in 0..3 for I, X, Y, Z; (0, 0) is not stored. */
    void set(int i, int j, double value);
    double get(int i, int j) const;

  private:
    std::array<double, 16> e_{};
};

/** Pauli index pair -> label like "XY"; index 0 is I. */
std::string pauli_label(int i, int j);

/** Multinomial draw; identical (distribution, n, seed) gives identical counts. */
ShotTable sample_shots(const OutcomeDistribution& d, std::uint64_t n, std::uint64_t seed);

/** Deterministic shot table with counts = rounded exact probabilities (largest remainder). */
ShotTable exact_shot_table(const OutcomeDistribution& d, std::uint64_t n);

/** Push true probabilities through the confusion matrix: p_obs = p^T C. */
OutcomeDistribution apply_readout_noise(const OutcomeDistribution& d, const ConfusionMatrix& c);

/**
 * Iterative Bayesian unfolding from observed probabilities (uniform prior), iterating
 * t_i <- t_i sum_j c_ij m_j / (sum_k t_k c_kj) until the L1 change drops below 1e-10.
 */
OutcomeDistribution bayesian_unfold(const OutcomeDistribution& observed,
                                    const ConfusionMatrix& c, int max_iters = 1000);
OutcomeDistribution bayesian_unfold(const ShotTable& observed, const ConfusionMatrix& c,
                                    int max_iters = 1000);

/**
 * Linear-inversion two-qubit state reconstruction followed by PSD projection
 * (eigenvalue clipping and trace renormalization).
 */
TomographyResult tomography_two_qubit(const TwoQubitExpectations& expectations);

/** One measured Pauli-pair setting: four (probe sign, ancilla sign) outcome counts. */
struct BasisMeasurement {
    int pauli_probe;   // 1..3 = X, Y, Z
    int pauli_ancilla;
    ShotTable table;   // labels "++", "+-", "-+", "--"
};

/** Builds the expectation table from the nine correlator settings (singles averaged). */
TwoQubitExpectations expectations_from_settings(const std::vector<BasisMeasurement>& settings);

/**
 * Least-squares fit of the first-outcome probability to a + b cos(alpha - c); the FI at
 * `at_alpha` follows from the fitted curve as (P')^2 (1/P + 1/(1-P)). Needs >= 5 points
 * spanning at least pi/2 around `at_alpha`.
 */
double fit_fi_from_sweep(const std::vector<std::pair<double, ShotTable>>& samples,
                         double at_alpha);

/**
 * Maximum-likelihood alpha estimate: 256-point scan of the model's identifiable range
 * plus golden-section refinement to 1e-8. Flat likelihoods throw; range-edge maxima
 * set at_boundary.
 */
EstimatorResult mle_estimate_alpha(const ShotTable& shots, const ProtocolModel& model);

/**
 * Monte Carlo replicas of sample-then-estimate, run concurrently on derived
 * per-replica seeds; results are ordered by replica index regardless of scheduling.
 */
std::vector<EstimatorResult> mc_replicas(const ProtocolModel& model, double true_alpha,
                                         std::uint64_t n_shots, int n_replicas,
                                         std::uint64_t seed);

}  // namespace qpe
