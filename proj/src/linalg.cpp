#include "qpe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpe {

namespace {

void check_hermitian(const CMat& m, const char* where) {
    double defect = m.hermiticity_defect();
    if (defect > kTol.hermiticity)
        fail(where, ": input not Hermitian: max |M - M^dagger| = ", defect, " exceeds ",
             kTol.hermiticity);
}

EigenSystem eig2(const CMat& m) {
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    cplx b = m(0, 1);
    EigenSystem out{{0, 0}, CMat(2)};
    if (std::abs(b) < 1e-300) {
        int lo = a <= d ? 0 : 1;
        out.values = {std::min(a, d), std::max(a, d)};
        out.vectors(lo, 0) = 1.0;
        out.vectors(1 - lo, 1) = 1.0;
        return out;
    }
    double mean = 0.5 * (a + d);
    double r = std::hypot(0.5 * (a - d), std::abs(b));
    double lo = mean - r, hi = mean + r;
    // (b, hi - a) spans the hi eigenvector; its orthogonal complement spans lo
    cplx v0 = b, v1 = cplx(hi - a, 0);
    double n = std::sqrt(std::norm(v0) + std::norm(v1));
    CVec vhi{v0 / n, v1 / n};
    CVec vlo{-std::conj(vhi[1]), std::conj(vhi[0])};
    out.values = {lo, hi};
    for (int i = 0; i < 2; ++i) {
        out.vectors(i, 0) = vlo[i];
        out.vectors(i, 1) = vhi[i];
    }
    return out;
}

EigenSystem eig_jacobi(CMat a) {
    const int n = a.dim();
    CMat v = CMat::identity(n);
    for (int sweep = 0; sweep < kTol.jacobi_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < kTol.jacobi_offdiag) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double r = std::abs(a(p, q));
                if (r < 1e-300) continue;
                cplx phase = a(p, q) / r;
                double theta = 0.5 * std::atan2(2.0 * r, a(p, p).real() - a(q, q).real());
                double c = std::cos(theta);
                double s = std::sin(theta);
                // J embeds [[c, -s e^{i phi}], [s e^{-i phi}, c]] at (p, q); a <- J^dagger a J
                for (int i = 0; i < n; ++i) {  // columns
                    cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a(i, q) = -s * phase * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {  // rows
                    cplx api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api + s * phase * aqi;
                    a(q, i) = -s * std::conj(phase) * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(phase) * viq;
                    v(i, q) = -s * phase * vip + c * viq;
                }
            }
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
    EigenSystem out{std::vector<double>(static_cast<std::size_t>(n)), CMat(n)};
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                     order[static_cast<std::size_t>(k)]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

}  // namespace

EigenSystem hermitian_eig(const CMat& m) {
    check_hermitian(m, "hermitian_eig");
    return m.dim() == 2 ? eig2(m) : eig_jacobi(m);
}

CMat matrix_sqrt_psd(const CMat& m) {
    EigenSystem es = hermitian_eig(m);
    if (es.values.front() < -kTol.psd_floor)
        fail("matrix_sqrt_psd: input not PSD: most negative eigenvalue ", es.values.front(),
             " is below -", kTol.psd_floor);
    CMat out(m.dim());
    for (std::size_t k = 0; k < es.values.size(); ++k) {
        double lam = std::max(es.values[k], 0.0);
        CVec v = es.vector(static_cast<int>(k));
        out = out + outer(v, v) * cplx(std::sqrt(lam), 0);
    }
    return out;
}

CMat expm_generator(const CMat& g, double t) {
    EigenSystem es = hermitian_eig(g);
    CMat out(g.dim());
    for (std::size_t k = 0; k < es.values.size(); ++k) {
        CVec v = es.vector(static_cast<int>(k));
        out = out + outer(v, v) * std::exp(cplx(0, -t * es.values[k]));
    }
    return out;
}

void real_symmetric_eig(const std::vector<double>& m, int n, std::vector<double>& values,
                        std::vector<double>& vectors) {
    // real Jacobi; n is 2 or 3 here so convergence is immediate
    std::vector<double> a = m;
    std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;
    auto at = [&](std::vector<double>& x, int r, int c) -> double& {
        return x[static_cast<std::size_t>(r * n + c)];
    };
    for (int sweep = 0; sweep < kTol.jacobi_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(a, p, q)));
        if (off < 1e-14) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(a, p, q)) < 1e-300) continue;
                double theta = 0.5 * std::atan2(2.0 * at(a, p, q), at(a, p, p) - at(a, q, q));
                double c = std::cos(theta), s = std::sin(theta);
                for (int i = 0; i < n; ++i) {
                    double aip = at(a, i, p), aiq = at(a, i, q);
                    at(a, i, p) = c * aip + s * aiq;
                    at(a, i, q) = -s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(a, p, i), aqi = at(a, q, i);
                    at(a, p, i) = c * api + s * aqi;
                    at(a, q, i) = -s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = at(v, i, p), viq = at(v, i, q);
                    at(v, i, p) = c * vip + s * viq;
                    at(v, i, q) = -s * vip + c * viq;
                }
            }
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return at(a, i, i) < at(a, j, j);
    });
    values.assign(static_cast<std::size_t>(n), 0.0);
    vectors.assign(static_cast<std::size_t>(n * n), 0.0);
    for (int k = 0; k < n; ++k) {
        values[static_cast<std::size_t>(k)] = at(a, order[static_cast<std::size_t>(k)],
                                                 order[static_cast<std::size_t>(k)]);
        for (int i = 0; i < n; ++i)
            vectors[static_cast<std::size_t>(i * n + k)] =
                at(v, i, order[static_cast<std::size_t>(k)]);
    }
}

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n) {
    auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r * n + c)]; };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
        if (std::abs(at(piv, col)) < 1e-14)
            fail("solve_dense: singular system (pivot ", at(piv, col), ")");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(col, c));
            std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(col)]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = at(r, col) / at(col, col);
            for (int c = col; c < n; ++c) at(r, c) -= f * at(col, c);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c) s -= at(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / at(r, r);
    }
    return x;
}

}  // namespace qpe
