#pragma once

#include <array>
#include <utility>

#include "qpe/linalg.hpp"

namespace qpe {

/**
 * The unknown-rotation parameter triple: angle alpha in [-pi, pi], axis zenith
 * theta in [0, pi], axis azimuth phi in [0, 2 pi). The rotation acts as
 * exp(-i alpha n.sigma / 2) with n = (sin t cos p, sin t sin p, cos t).
 */
class RotationParams {
  public:
    RotationParams(double alpha, double theta, double phi);

    /** Canonicalizes any finite triple to the equivalent in-range rotation. */
    static RotationParams wrapped(double alpha, double theta, double phi);

    double alpha() const { return alpha_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }
    std::array<double, 3> axis() const;

  private:
    double alpha_, theta_, phi_;
};

struct EulerAngles {
    double theta_u = 0, phi_u = 0, lambda_u = 0;
};

/** One hardware pulse: rotation through `angle` about the in-plane axis at `phase`. */
class PulseSpec {
  public:
    PulseSpec(double angle, double phase, bool allow_general_angle = false);
    double angle() const { return angle_; }
    double phase() const { return phase_; }

  private:
    double angle_, phase_;
};

/** exp(-i alpha (n.sigma)/2); unitary with det 1. */
CMat axis_unitary(const RotationParams& p);

/**
 * Orthonormal eigenvectors (a_plus, a_minus) of A = -n.sigma/2 with eigenvalues
 * +1/2 and -1/2, phase-canonicalized. At the poles this is the computational basis.
 */
std::pair<CVec, CVec> generator_eigenbasis(double theta, double phi);

/** Euler angles realizing the rotation; |alpha| = pi takes the boundary branch. */
EulerAngles to_euler(const RotationParams& p);

/** The unitary for given Euler angles, relative to the Z eigenbasis. */
CMat from_euler(const EulerAngles& e);

/** The pulse matrix R(angle, phase). */
CMat r_pulse(const PulseSpec& s);

/**
 * Four-pulse realization of from_euler(e), up to a global phase. Pulses are listed
 * in application order; the matrix product applies the last element leftmost.
 */
std::array<PulseSpec, 4> pulse_sequence(const EulerAngles& e);

/** Left-to-right product of a pulse list (last applied = leftmost matrix). */
CMat pulse_product(const std::array<PulseSpec, 4>& seq);

}  // namespace qpe
