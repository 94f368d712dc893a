#include "qpe/protocols.hpp"

#include <cmath>

#include "qpe/information.hpp"

namespace qpe {

namespace {

void check_unit_axis(const std::array<double, 3>& m, const char* where) {
    double n = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
    if (std::abs(n - 1.0) > 1e-9) fail(where, ": axis norm ", n, " is not 1");
}

/** Projector onto the +/- eigenstate of m.sigma. */
CMat sign_projector(const std::array<double, 3>& m, int sign) {
    return (CMat::identity(2) + pauli_dot(m) * cplx(sign, 0)) * cplx(0.5, 0);
}

double clip_prob(double p) { return p < 0 && p > -1e-12 ? 0.0 : p; }

}  // namespace

NoiseSpec::NoiseSpec(double prep_fidelity, int n_entangling_gates_meas)
    : prep_fidelity_(prep_fidelity), n_gates_(n_entangling_gates_meas) {
    if (prep_fidelity < 0.0 || prep_fidelity > 1.0)
        fail("NoiseSpec: prep_fidelity ", prep_fidelity, " outside [0, 1]");
    if (n_gates_ != 0 && n_gates_ != 1)
        fail("NoiseSpec: n_entangling_gates_meas must be 0 or 1, got ", n_gates_);
}

HindsightAxis HindsightAxis::adaptive() {
    HindsightAxis h;
    h.adaptive_ = true;
    return h;
}

HindsightAxis HindsightAxis::fixed(const std::array<double, 3>& axis) {
    check_unit_axis(axis, "HindsightAxis");
    HindsightAxis h;
    h.axis_ = axis;
    return h;
}

std::array<double, 3> adaptive_ancilla_axis(double theta, double phi) {
    RotationParams probe = RotationParams::wrapped(0.0, theta, phi);
    std::array<double, 3> n = probe.axis();
    std::array<double, 3> a{-n[2] * n[0], -n[2] * n[1], 1.0 - n[2] * n[2]};
    double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (norm < 1e-9) return {1.0, 0.0, 0.0};  // rotation axis is z itself
    return {a[0] / norm, a[1] / norm, a[2] / norm};
}

OutcomeDistribution single_qubit_protocol(double lambda, const std::array<double, 3>& obs_axis,
                                          const RotationParams& p) {
    check_unit_axis(obs_axis, "single_qubit_protocol");
    PureState psi0 = bloch_state({std::sin(lambda), 0.0, std::cos(lambda)});
    CVec psi = axis_unitary(p) * psi0.vec();
    double expval = inner(psi, pauli_dot(obs_axis) * psi).real();
    return OutcomeDistribution({"+", "-"},
                               {clip_prob(0.5 * (1 + expval)), clip_prob(0.5 * (1 - expval))});
}

OutcomeDistribution hindsight_protocol(const HindsightAxis& ancilla_axis,
                                       const RotationParams& p, const NoiseSpec& noise,
                                       const std::array<double, 3>& probe_axis) {
    check_unit_axis(probe_axis, "hindsight_protocol");
    std::array<double, 3> axis = ancilla_axis.is_adaptive()
                                     ? adaptive_ancilla_axis(p.theta(), p.phi())
                                     : ancilla_axis.axis();
    CMat u = kron(axis_unitary(p), CMat::identity(2));
    CMat rho = u * depolarized_singlet(noise.prep_fidelity()).mat() * u.adjoint();
    std::vector<std::string> labels;
    std::vector<double> probs;
    for (int sp : {+1, -1}) {
        for (int sa : {+1, -1}) {
            CMat povm = kron(sign_projector(probe_axis, sp), sign_projector(axis, sa));
            labels.push_back(std::string(sp > 0 ? "+" : "-") + (sa > 0 ? "+" : "-"));
            probs.push_back(clip_prob((rho * povm).trace().real()));
        }
    }
    return OutcomeDistribution(std::move(labels), std::move(probs));
}

OutcomeDistribution agnostic_protocol(const RotationParams& p, const NoiseSpec& noise) {
    CMat u = kron(axis_unitary(p), CMat::identity(2));
    CMat rho = u * depolarized_singlet(noise.prep_fidelity()).mat() * u.adjoint();
    if (noise.n_entangling_gates_meas() == 1) rho = depolarize(rho, noise.prep_fidelity());
    const PureState s = bell_state(BellKind::PsiMinus);
    double p0 = clip_prob((rho * outer(s.vec(), s.vec())).trace().real());
    return OutcomeDistribution({"yes", "no"}, {p0, clip_prob(1.0 - p0)});
}

OutcomeDistribution bell_basis_protocol(const RotationParams& p) {
    CVec psi = kron(axis_unitary(p), CMat::identity(2)) * bell_state(BellKind::PsiMinus).vec();
    std::vector<std::string> labels{"PsiPlus", "PsiMinus", "PhiPlus", "PhiMinus"};
    std::vector<double> probs;
    for (BellKind k :
         {BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus, BellKind::PhiMinus})
        probs.push_back(std::norm(inner(bell_state(k).vec(), psi)));
    return OutcomeDistribution(std::move(labels), std::move(probs));
}

std::vector<std::pair<double, OutcomeDistribution>> ancilla_tagged_protocol(
    const AncillaTaggedEnsemble& ens, const RotationParams& p) {
    std::vector<std::pair<double, OutcomeDistribution>> out;
    CMat u = axis_unitary(p);
    for (const EnsembleComponent& c : ens.components()) {
        CVec psi = u * c.state.vec();
        double expval = inner(psi, pauli_dot(c.meas_axis) * psi).real();
        out.emplace_back(c.weight,
                         OutcomeDistribution({"+", "-"}, {clip_prob(0.5 * (1 + expval)),
                                                          clip_prob(0.5 * (1 - expval))}));
    }
    return out;
}

double ancilla_tagged_fi(const AncillaTaggedEnsemble& ens, const RotationParams& p) {
    double fi = 0;
    for (const EnsembleComponent& c : ens.components()) {
        DistributionFamily fam{[&c](const RotationParams& q) {
            CVec psi = axis_unitary(q) * c.state.vec();
            double expval = inner(psi, pauli_dot(c.meas_axis) * psi).real();
            return OutcomeDistribution({"+", "-"}, {clip_prob(0.5 * (1 + expval)),
                                                    clip_prob(0.5 * (1 - expval))});
        }};
        fi += c.weight * fi_from_distribution(fam, p).alpha_alpha();
    }
    return fi;
}

OutcomeDistribution ProtocolModel::distribution(double alpha) const {
    RotationParams p = RotationParams::wrapped(alpha, theta, phi);
    return family().eval(p);
}

std::pair<double, double> ProtocolModel::alpha_range() const {
    if (std::holds_alternative<AgnosticKind>(kind)) return {0.0, kPi};
    return {-kPi, kPi};
}

std::string ProtocolModel::name() const {
    if (std::holds_alternative<SingleQubitKind>(kind)) return "single_qubit";
    if (std::holds_alternative<HindsightKind>(kind)) return "hindsight";
    if (std::holds_alternative<AgnosticKind>(kind)) return "agnostic";
    return "ancilla_tagged";
}

DistributionFamily ProtocolModel::family() const {
    ProtocolKind k = kind;
    NoiseSpec n = noise;
    return DistributionFamily{[k, n](const RotationParams& q) -> OutcomeDistribution {
        if (const auto* sq = std::get_if<SingleQubitKind>(&k))
            return single_qubit_protocol(sq->lambda, sq->obs_axis, q);
        if (const auto* hs = std::get_if<HindsightKind>(&k))
            return hindsight_protocol(hs->ancilla_axis, q, n, hs->probe_axis);
        if (std::holds_alternative<AgnosticKind>(k)) return agnostic_protocol(q, n);
        // ancilla tagged: the joint record (tag, outcome)
        auto per_tag = ancilla_tagged_protocol(rho_star(), q);
        const auto& comps = rho_star().components();
        std::vector<std::string> labels;
        std::vector<double> probs;
        for (std::size_t j = 0; j < per_tag.size(); ++j) {
            for (int o = 0; o < per_tag[j].second.size(); ++o) {
                labels.push_back(detail::concat(comps[j].tag, ":", per_tag[j].second.label(o)));
                probs.push_back(per_tag[j].first * per_tag[j].second.prob(o));
            }
        }
        return OutcomeDistribution(std::move(labels), std::move(probs));
    }};
}

}  // namespace qpe
