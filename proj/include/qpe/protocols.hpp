#pragma once

#include <variant>

#include "qpe/distribution.hpp"
#include "qpe/information.hpp"
#include "qpe/states.hpp"

namespace qpe {

/** Preparation/measurement imperfection knobs for the two-qubit protocols. */
class NoiseSpec {
  public:
    NoiseSpec() = default;
    NoiseSpec(double prep_fidelity, int n_entangling_gates_meas);
    double prep_fidelity() const { return prep_fidelity_; }
    int n_entangling_gates_meas() const { return n_gates_; }

  private:
    double prep_fidelity_ = 1.0;
    int n_gates_ = 0;
};

/** Ancilla measurement choice for hindsight sensing: a fixed axis or adaptive. */
class HindsightAxis {
  public:
    static HindsightAxis adaptive();
    static HindsightAxis fixed(const std::array<double, 3>& axis);
    bool is_adaptive() const { return adaptive_; }
    const std::array<double, 3>& axis() const { return axis_; }

  private:
    HindsightAxis() = default;
    bool adaptive_ = false;
    std::array<double, 3> axis_{0, 0, 1};
};

/**
 * Deterministic adaptive choice: z projected onto the plane orthogonal to the
 * rotation axis (shortest arc); x when the rotation axis is z itself.
 */
std::array<double, 3> adaptive_ancilla_axis(double theta, double phi);

/** Probe prepared in the lambda-plane Bloch state, rotated, measured along obs_axis. */
OutcomeDistribution single_qubit_protocol(double lambda, const std::array<double, 3>& obs_axis,
                                          const RotationParams& p);

/**
 * Singlet preparation (depolarized at the prep fidelity), probe rotation, then a joint
 * product measurement: probe along probe_axis (Y by default), ancilla along the fixed
 * or adaptive axis. Outcomes are labeled probe-sign then ancilla-sign.
 */
OutcomeDistribution hindsight_protocol(const HindsightAxis& ancilla_axis,
                                       const RotationParams& p, const NoiseSpec& noise,
                                       const std::array<double, 3>& probe_axis = {0, 1, 0});

/**
 * Singlet preparation, probe rotation, singlet-projection measurement. With
 * n_entangling_gates_meas = 1 the measurement gate is modeled by a second
 * depolarization at the preparation fidelity before projecting.
 */
OutcomeDistribution agnostic_protocol(const RotationParams& p, const NoiseSpec& noise);

/** Bell-basis measurement probabilities for the rotated singlet. */
OutcomeDistribution bell_basis_protocol(const RotationParams& p);

/** Per-tag outcome distributions; the protocol FI is the weight-averaged per-tag FI. */
std::vector<std::pair<double, OutcomeDistribution>> ancilla_tagged_protocol(
    const AncillaTaggedEnsemble& ens, const RotationParams& p);

/** Weighted average of per-tag (alpha, alpha) Fisher informations at fixed axis. */
double ancilla_tagged_fi(const AncillaTaggedEnsemble& ens, const RotationParams& p);

struct SingleQubitKind {
    double lambda = 0.0;
    std::array<double, 3> obs_axis{0, 1, 0};
};
struct HindsightKind {
    HindsightAxis ancilla_axis = HindsightAxis::adaptive();
    std::array<double, 3> probe_axis{0, 1, 0};
};
struct AgnosticKind {};
struct AncillaTaggedKind {};

using ProtocolKind =
    std::variant<SingleQubitKind, HindsightKind, AgnosticKind, AncillaTaggedKind>;

/** A protocol pinned to a rotation axis, leaving alpha free: the estimation model. */
struct ProtocolModel {
    ProtocolKind kind;
    NoiseSpec noise;
    double theta = 0.0;
    double phi = 0.0;

    OutcomeDistribution distribution(double alpha) const;
    /** Identifiable alpha range; [0, pi] for the agnostic protocol (even in alpha). */
    std::pair<double, double> alpha_range() const;
    std::string name() const;
    /** The distribution family over all three parameters. */
    DistributionFamily family() const;
};

}  // namespace qpe
