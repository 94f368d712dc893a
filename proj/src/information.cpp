#include "qpe/information.hpp"

#include <algorithm>
#include <cmath>

namespace qpe {

namespace {

void check_symmetric3(const std::array<double, 9>& m, double tol, const char* where) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            double d = std::abs(m[static_cast<std::size_t>(3 * i + j)] -
                                m[static_cast<std::size_t>(3 * j + i)]);
            if (d > tol) fail(where, ": asymmetry |m_ij - m_ji| = ", d, " exceeds ", tol);
        }
}

double min_eigenvalue3(const std::array<double, 9>& m) {
    std::vector<double> vals, vecs;
    real_symmetric_eig(std::vector<double>(m.begin(), m.end()), 3, vals, vecs);
    return vals.front();
}

}  // namespace

FisherMatrix3::FisherMatrix3() = default;

FisherMatrix3 FisherMatrix3::from_entries(const std::array<double, 9>& row_major) {
    for (double x : row_major) require_finite(x, "FisherMatrix3");
    check_symmetric3(row_major, 1e-9, "FisherMatrix3");
    double lo = min_eigenvalue3(row_major);
    if (lo < -1e-8) fail("FisherMatrix3: eigenvalue ", lo, " is below -1e-8");
    FisherMatrix3 f;
    f.m_ = row_major;
    return f;
}

FisherMatrix3 FisherMatrix3::operator+(const FisherMatrix3& o) const {
    std::array<double, 9> s{};
    for (std::size_t i = 0; i < 9; ++i) s[i] = m_[i] + o.m_[i];
    return from_entries(s);
}

FisherMatrix3 FisherMatrix3::operator*(double x) const {
    std::array<double, 9> s{};
    for (std::size_t i = 0; i < 9; ++i) s[i] = m_[i] * x;
    return from_entries(s);
}

WeightMatrix::WeightMatrix() { m_[0] = 1.0; }

WeightMatrix::WeightMatrix(const std::array<double, 9>& row_major) : m_(row_major) {
    check_symmetric3(row_major, 1e-9, "WeightMatrix");
    if (min_eigenvalue3(row_major) < -1e-9)
        fail("WeightMatrix: not PSD, eigenvalue ", min_eigenvalue3(row_major));
}

namespace {

RotationParams shifted(const RotationParams& at, int param, double delta) {
    double a = at.alpha(), t = at.theta(), p = at.phi();
    if (param == 0) a += delta;
    else if (param == 1) t += delta;
    else p += delta;
    return RotationParams::wrapped(a, t, p);
}

}  // namespace

FisherMatrix3 fi_from_distribution(const DistributionFamily& fam, const RotationParams& at) {
    if (!fam.eval) fail("fi_from_distribution: empty family");
    const double h = kTol.fd_step;
    OutcomeDistribution base = fam.eval(at);
    const int n = base.size();
    std::array<std::vector<double>, 3> grad;
    for (int i = 0; i < 3; ++i) {
        OutcomeDistribution up = fam.eval(shifted(at, i, h));
        OutcomeDistribution dn = fam.eval(shifted(at, i, -h));
        if (up.size() != n || dn.size() != n)
            fail("fi_from_distribution: family changed outcome count near the base point");
        grad[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            grad[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                (up.prob(k) - dn.prob(k)) / (2 * h);
    }
    std::array<double, 9> m{};
    for (int k = 0; k < n; ++k) {
        double p = base.prob(k);
        if (p < kTol.prob_floor) {
            double live = 0;
            for (int i = 0; i < 3; ++i)
                live = std::max(live, std::abs(grad[static_cast<std::size_t>(i)]
                                                   [static_cast<std::size_t>(k)]));
            if (live < kTol.deriv_floor) continue;
            fail("fi_from_distribution: FI divergence at outcome '", base.label(k),
                 "': p = ", p, " with |dp| = ", live);
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m[static_cast<std::size_t>(3 * i + j)] +=
                    grad[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    grad[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] / p;
    }
    return FisherMatrix3::from_entries(m);
}

double qfi_pure(const PureFamily& family, const RotationParams& at) {
    if (!family) fail("qfi_pure: empty family");
    const double h = kTol.fd_step;
    CVec psi = family(at).vec();
    CVec up = family(shifted(at, 0, h)).vec();
    CVec dn = family(shifted(at, 0, -h)).vec();
    CVec d = (up - dn) * cplx(1.0 / (2 * h), 0);
    double value = 4.0 * (inner(d, d).real() - std::norm(inner(psi, d)));
    if (value < -1e-8) fail("qfi_pure: value ", value, " is below -1e-8");
    return std::max(value, 0.0);
}

std::pair<FisherMatrix3, SLDTriple> qfim_sld(const DensityFamily& family,
                                             const RotationParams& at) {
    if (!family) fail("qfim_sld: empty family");
    const double h = kTol.fd_step;
    DensityMx rho = family(at);
    const int dim = rho.dim();
    std::array<CMat, 3> drho{CMat(dim), CMat(dim), CMat(dim)};
    for (int i = 0; i < 3; ++i) {
        CMat up = family(shifted(at, i, h)).mat();
        CMat dn = family(shifted(at, i, -h)).mat();
        drho[static_cast<std::size_t>(i)] = (up - dn) * cplx(1.0 / (2 * h), 0);
    }
    EigenSystem es = hermitian_eig(rho.mat());
    const CMat& v = es.vectors;
    CMat vd = v.adjoint();
    std::array<CMat, 3> sld{CMat(dim), CMat(dim), CMat(dim)};
    for (int i = 0; i < 3; ++i) {
        CMat d_eig = vd * drho[static_cast<std::size_t>(i)] * v;
        CMat l(dim);
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n) {
                double denom = es.values[static_cast<std::size_t>(m)] +
                               es.values[static_cast<std::size_t>(n)];
                l(m, n) = denom < kTol.sld_kernel ? cplx{} : 2.0 * d_eig(m, n) / denom;
            }
        sld[static_cast<std::size_t>(i)] = v * l * vd;
    }
    std::array<double, 9> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[static_cast<std::size_t>(3 * i + j)] =
                0.5 * ((sld[static_cast<std::size_t>(i)] * drho[static_cast<std::size_t>(j)])
                           .trace()
                           .real() +
                       (sld[static_cast<std::size_t>(j)] * drho[static_cast<std::size_t>(i)])
                           .trace()
                           .real());
    return {FisherMatrix3::from_entries(m), SLDTriple{sld[0], sld[1], sld[2]}};
}

std::optional<double> schur_alpha_bound(const FisherMatrix3& m) {
    const double i_aa = m(0, 0);
    const std::array<double, 2> i_c{m(1, 0), m(2, 0)};
    const double coupling = std::max(std::abs(i_c[0]), std::abs(i_c[1]));
    std::vector<double> block{m(1, 1), m(1, 2), m(2, 1), m(2, 2)};
    std::vector<double> vals, vecs;
    real_symmetric_eig(block, 2, vals, vecs);
    if (vals.front() > kTol.schur_block) {
        std::vector<double> x = solve_dense(block, {i_c[0], i_c[1]}, 2);
        double s = i_aa - (i_c[0] * x[0] + i_c[1] * x[1]);
        if (s <= kTol.schur_block) return std::nullopt;  // singular overall matrix
        return 1.0 / s;
    }
    if (coupling <= kTol.schur_coupling) {
        if (i_aa <= 1e-12) return std::nullopt;
        return 1.0 / i_aa;
    }
    return std::nullopt;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration from the Chebyshev estimate
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

double sphere_average_qfi(const PureState& input, double alpha, int cos_nodes,
                          int phi_nodes) {
    if (input.dim() != 2) fail("sphere_average_qfi: input must be dim 2");
    if (cos_nodes < 2 || phi_nodes < 2) fail("sphere_average_qfi: need at least 2 nodes");
    std::vector<double> x, w;
    gauss_legendre(cos_nodes, x, w);
    const double dphi = 2 * kPi / phi_nodes;
    double total = 0;
    for (int i = 0; i < cos_nodes; ++i) {
        double theta = std::acos(std::clamp(x[static_cast<std::size_t>(i)], -1.0, 1.0));
        for (int j = 0; j < phi_nodes; ++j) {
            double phi = dphi * j;
            PureFamily fam = [&input, theta, phi](const RotationParams& q) {
                RotationParams local = RotationParams::wrapped(q.alpha(), theta, phi);
                return PureState((axis_unitary(local) * input.vec()).normalized());
            };
            total += w[static_cast<std::size_t>(i)] * dphi *
                     qfi_pure(fam, RotationParams::wrapped(alpha, theta, phi));
        }
    }
    return total / (4 * kPi);
}

double finite_fidelity_fi(double f, double alpha) {
    if (f < 0.0 || f > 1.0) fail("finite_fidelity_fi: fidelity ", f, " outside [0, 1]");
    double c = std::cos(alpha);
    double d1 = -5.0 + 2.0 * f + (-1.0 + 4.0 * f) * c;
    double d2 = 1.0 + 2.0 * f + (-1.0 + 4.0 * f) * c;
    if (std::abs(d1) <= 1e-12 || std::abs(d2) <= 1e-12)
        fail("finite_fidelity_fi: pole at f = ", f, ", alpha = ", alpha,
             " (denominator factors ", d1, ", ", d2, ")");
    double num = -(1.0 - 4.0 * f) * (1.0 - 4.0 * f) * std::sin(alpha) * std::sin(alpha);
    return num / (d1 * d2);
}

}  // namespace qpe
