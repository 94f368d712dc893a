#include "qpe/rotations.hpp"

#include <algorithm>
#include <cmath>

namespace qpe {

RotationParams::RotationParams(double alpha, double theta, double phi)
    : alpha_(alpha), theta_(theta), phi_(phi) {
    require_finite(alpha, "RotationParams");
    require_finite(theta, "RotationParams");
    require_finite(phi, "RotationParams");
    if (alpha < -kPi || alpha > kPi)
        fail("RotationParams: alpha = ", alpha, " outside [-pi, pi]");
    if (theta < 0 || theta > kPi) fail("RotationParams: theta = ", theta, " outside [0, pi]");
    if (phi < 0 || phi >= 2 * kPi) fail("RotationParams: phi = ", phi, " outside [0, 2 pi)");
}

RotationParams RotationParams::wrapped(double alpha, double theta, double phi) {
    require_finite(alpha, "RotationParams::wrapped");
    require_finite(theta, "RotationParams::wrapped");
    require_finite(phi, "RotationParams::wrapped");
    // theta reflects at the poles, sending phi to phi + pi
    theta = std::fmod(theta, 2 * kPi);
    if (theta < 0) theta += 2 * kPi;
    if (theta > kPi) {
        theta = 2 * kPi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, 2 * kPi);
    if (phi < 0) phi += 2 * kPi;
    // distributions and density matrices are 2 pi periodic in alpha
    alpha = std::fmod(alpha, 2 * kPi);
    if (alpha > kPi) alpha -= 2 * kPi;
    if (alpha < -kPi) alpha += 2 * kPi;
    theta = std::clamp(theta, 0.0, kPi);
    if (phi >= 2 * kPi) phi = 0.0;
    return RotationParams(alpha, theta, phi);
}

std::array<double, 3> RotationParams::axis() const {
    return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_),
            std::cos(theta_)};
}

PulseSpec::PulseSpec(double angle, double phase, bool allow_general_angle)
    : angle_(angle), phase_(phase) {
    require_finite(angle, "PulseSpec");
    require_finite(phase, "PulseSpec");
    if (!allow_general_angle && std::abs(angle - kPi) > 1e-12 &&
        std::abs(angle - kPi / 2) > 1e-12)
        fail("PulseSpec: angle ", angle,
             " is not pi or pi/2; pass allow_general_angle for arbitrary pulses");
}

CMat axis_unitary(const RotationParams& p) {
    double c = std::cos(p.alpha() / 2);
    double s = std::sin(p.alpha() / 2);
    return CMat::identity(2) * cplx(c, 0) + pauli_dot(p.axis()) * cplx(0, -s);
}

std::pair<CVec, CVec> generator_eigenbasis(double theta, double phi) {
    RotationParams probe = RotationParams::wrapped(0.0, theta, phi);
    CMat a = pauli_dot(probe.axis()) * cplx(-0.5, 0);
    EigenSystem es = hermitian_eig(a);  // ascending: -1/2 then +1/2
    return {es.vector(1).canonical(), es.vector(0).canonical()};
}

EulerAngles to_euler(const RotationParams& p) {
    double a = p.alpha(), t = p.theta(), ph = p.phi();
    if (std::abs(kPi - std::abs(a)) < kTol.boundary_alpha) {
        double sgn = (kPi - 2 * t) > 0 ? 1.0 : ((kPi - 2 * t) < 0 ? -1.0 : 0.0);
        return {kPi - std::abs(kPi - 2 * t), sgn * kPi / 2 + ph - kPi / 2,
                sgn * kPi / 2 - ph + kPi / 2};
    }
    double arc = std::atan(std::tan(a / 2) * std::cos(t));
    return {2 * std::asin(std::sin(a / 2) * std::sin(t)), arc + ph - kPi / 2,
            arc - ph + kPi / 2};
}

CMat from_euler(const EulerAngles& e) {
    require_finite(e.theta_u, "from_euler");
    require_finite(e.phi_u, "from_euler");
    require_finite(e.lambda_u, "from_euler");
    double c = std::cos(e.theta_u / 2);
    double s = std::sin(e.theta_u / 2);
    CMat u(2);
    u(0, 0) = c;
    u(0, 1) = -std::exp(cplx(0, e.lambda_u)) * s;
    u(1, 0) = std::exp(cplx(0, e.phi_u)) * s;
    u(1, 1) = std::exp(cplx(0, e.phi_u + e.lambda_u)) * c;
    return u;
}

CMat r_pulse(const PulseSpec& s) {
    double c = std::cos(s.angle() / 2);
    double sn = std::sin(s.angle() / 2);
    CMat u(2);
    u(0, 0) = c;
    u(0, 1) = cplx(0, -1) * std::exp(cplx(0, -s.phase())) * sn;
    u(1, 0) = cplx(0, -1) * std::exp(cplx(0, s.phase())) * sn;
    u(1, 1) = c;
    return u;
}

std::array<PulseSpec, 4> pulse_sequence(const EulerAngles& e) {
    double sum = e.theta_u + e.phi_u + e.lambda_u;
    return {PulseSpec(kPi, 0.0), PulseSpec(kPi, sum / 2),
            PulseSpec(kPi / 2, e.theta_u + e.phi_u), PulseSpec(kPi / 2, e.phi_u - kPi)};
}

CMat pulse_product(const std::array<PulseSpec, 4>& seq) {
    CMat u = CMat::identity(2);
    for (const PulseSpec& s : seq) u = r_pulse(s) * u;
    return u;
}

}  // namespace qpe
