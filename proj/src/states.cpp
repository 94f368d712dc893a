#include "qpe/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qpe {

PureState::PureState(const CVec& v) : vec_(v) {
    for (int i = 0; i < v.dim(); ++i) require_finite(v[i], "PureState");
    double n = v.norm();
    if (std::abs(n - 1.0) > kTol.state_norm)
        fail("PureState: norm ", n, " deviates from 1 by more than ", kTol.state_norm);
}

DensityMx::DensityMx(const CMat& m) : mat_(m) {
    double defect = m.hermiticity_defect();
    if (defect > kTol.hermiticity)
        fail("DensityMx: max |M - M^dagger| = ", defect, " exceeds ", kTol.hermiticity);
    double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTol.trace_one)
        fail("DensityMx: trace ", tr, " deviates from 1 by more than ", kTol.trace_one);
    EigenSystem es = hermitian_eig(m);
    if (es.values.front() < -kTol.density_psd)
        fail("DensityMx: eigenvalue ", es.values.front(), " is below -", kTol.density_psd);
}

AncillaTaggedEnsemble::AncillaTaggedEnsemble(std::vector<EnsembleComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) fail("AncillaTaggedEnsemble: no components");
    double total = 0;
    std::set<int> tags;
    for (const EnsembleComponent& c : components_) {
        if (c.weight < 0) fail("AncillaTaggedEnsemble: negative weight ", c.weight);
        if (c.state.dim() != 2) fail("AncillaTaggedEnsemble: probe states must be dim 2");
        double an = std::sqrt(c.meas_axis[0] * c.meas_axis[0] +
                              c.meas_axis[1] * c.meas_axis[1] +
                              c.meas_axis[2] * c.meas_axis[2]);
        if (std::abs(an - 1.0) > 1e-9)
            fail("AncillaTaggedEnsemble: meas_axis norm ", an, " is not 1");
        if (!tags.insert(c.tag).second)
            fail("AncillaTaggedEnsemble: duplicate tag ", c.tag);
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kTol.state_norm)
        fail("AncillaTaggedEnsemble: weights sum to ", total, ", not 1 within ",
             kTol.state_norm);
}

PureState bell_state(BellKind k) {
    const double r = 1.0 / std::sqrt(2.0);
    CVec v(4);
    switch (k) {
        case BellKind::PhiPlus:  v[0] = r; v[3] = r;  break;
        case BellKind::PhiMinus: v[0] = r; v[3] = -r; break;
        case BellKind::PsiPlus:  v[1] = r; v[2] = r;  break;
        case BellKind::PsiMinus: v[1] = r; v[2] = -r; break;
    }
    return PureState(v);
}

std::array<double, 3> bloch_vector(const DensityMx& rho) {
    if (rho.dim() != 2) fail("bloch_vector: expected dim 2, got ", rho.dim());
    std::array<double, 3> r{};
    for (int axis = 0; axis < 3; ++axis)
        r[static_cast<std::size_t>(axis)] = (rho.mat() * pauli(axis)).trace().real();
    double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (n > 1.0 + 1e-9) fail("bloch_vector: |r| = ", n, " exceeds 1 + 1e-9");
    return r;
}

DensityMx density_from_bloch(const std::array<double, 3>& r) {
    double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (n > 1.0 + 1e-9) fail("density_from_bloch: |r| = ", n, " exceeds 1 + 1e-9");
    return DensityMx((CMat::identity(2) + pauli_dot(r)) * cplx(0.5, 0));
}

PureState bloch_state(const std::array<double, 3>& r) {
    double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (std::abs(n - 1.0) > 1e-9) fail("bloch_state: |r| = ", n, " is not 1");
    double theta = std::acos(std::clamp(r[2] / n, -1.0, 1.0));
    double phi = std::atan2(r[1], r[0]);
    CVec v{std::cos(theta / 2), std::exp(cplx(0, phi)) * std::sin(theta / 2)};
    return PureState(v.normalized());
}

double fidelity(const DensityMx& rho, const DensityMx& sigma) {
    if (rho.dim() != sigma.dim())
        fail("fidelity: dimension mismatch ", rho.dim(), " vs ", sigma.dim());
    CMat sr = matrix_sqrt_psd(rho.mat());
    CMat inner_m = sr * sigma.mat() * sr;
    // symmetrize away the O(1e-16) Hermiticity drift before the second root
    CMat sym = (inner_m + inner_m.adjoint()) * cplx(0.5, 0);
    double t = matrix_sqrt_psd(sym).trace().real();
    return t * t;
}

DensityMx depolarized_singlet(double f) {
    if (f < 0.0 || f > 1.0) fail("depolarized_singlet: fidelity ", f, " outside [0, 1]");
    const PureState s = bell_state(BellKind::PsiMinus);
    CMat proj = outer(s.vec(), s.vec());
    CMat rho = proj * cplx(f, 0) + (CMat::identity(4) - proj) * cplx((1.0 - f) / 3.0, 0);
    return DensityMx(rho);
}

CMat depolarize(const CMat& rho, double f) {
    if (f < 0.0 || f > 1.0) fail("depolarize: fidelity ", f, " outside [0, 1]");
    return rho * cplx(f, 0) + (CMat::identity(rho.dim()) - rho) * cplx((1.0 - f) / 3.0, 0);
}

AncillaTaggedEnsemble rho_star() {
    const double third = 1.0 / 3.0;
    std::vector<EnsembleComponent> parts;
    parts.push_back({third, bloch_state({0, 0, 1}), 0, {0, 0, 1}});
    parts.push_back({third, bloch_state({1, 0, 0}), 1, {1, 0, 0}});
    parts.push_back({third, bloch_state({0, 1, 0}), 2, {0, 1, 0}});
    return AncillaTaggedEnsemble(std::move(parts));
}

DensityMx to_density(const PureState& psi) {
    return DensityMx(outer(psi.vec(), psi.vec()));
}

}  // namespace qpe
