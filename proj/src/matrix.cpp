#include "qpe/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qpe {

namespace {

void check_dim(int dim, const char* where) {
    if (dim != 2 && dim != 4) fail(where, ": dimension must be 2 or 4, got ", dim);
}

}  // namespace

CVec::CVec(int dim) : dim_(dim) { check_dim(dim, "CVec"); }

CVec::CVec(std::initializer_list<cplx> entries) : dim_(static_cast<int>(entries.size())) {
    check_dim(dim_, "CVec");
    int i = 0;
    for (cplx z : entries) {
        require_finite(z, "CVec");
        a_[static_cast<std::size_t>(i++)] = z;
    }
}

double CVec::norm() const {
    double s = 0;
    for (int i = 0; i < dim_; ++i) s += std::norm((*this)[i]);
    return std::sqrt(s);
}

CVec CVec::normalized() const {
    double n = norm();
    if (n < 1e-300) fail("CVec::normalized: zero vector");
    CVec out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = (*this)[i] / n;
    return out;
}

CVec CVec::canonical() const {
    for (int i = 0; i < dim_; ++i) {
        double m = std::abs((*this)[i]);
        if (m > 1e-12) {
            cplx phase = std::conj((*this)[i]) / m;
            return (*this) * phase;
        }
    }
    return *this;
}

CVec CVec::operator+(const CVec& o) const {
    if (dim_ != o.dim_) fail("CVec::+: dimension mismatch ", dim_, " vs ", o.dim_);
    CVec out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = (*this)[i] + o[i];
    return out;
}

CVec CVec::operator-(const CVec& o) const {
    if (dim_ != o.dim_) fail("CVec::-: dimension mismatch ", dim_, " vs ", o.dim_);
    CVec out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = (*this)[i] - o[i];
    return out;
}

CVec CVec::operator*(cplx s) const {
    CVec out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = (*this)[i] * s;
    return out;
}

CMat::CMat(int dim) : dim_(dim) { check_dim(dim, "CMat"); }

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(static_cast<int>(rows.size())) {
    check_dim(dim_, "CMat");
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_)
            fail("CMat: row ", r, " has ", row.size(), " entries, expected ", dim_);
        int c = 0;
        for (cplx z : row) {
            require_finite(z, "CMat");
            (*this)(r, c++) = z;
        }
        ++r;
    }
}

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::operator+(const CMat& o) const {
    if (dim_ != o.dim_) fail("CMat::+: dimension mismatch ", dim_, " vs ", o.dim_);
    CMat out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.a_[static_cast<std::size_t>(i)] =
        a_[static_cast<std::size_t>(i)] + o.a_[static_cast<std::size_t>(i)];
    return out;
}

CMat CMat::operator-(const CMat& o) const {
    if (dim_ != o.dim_) fail("CMat::-: dimension mismatch ", dim_, " vs ", o.dim_);
    CMat out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.a_[static_cast<std::size_t>(i)] =
        a_[static_cast<std::size_t>(i)] - o.a_[static_cast<std::size_t>(i)];
    return out;
}

CMat CMat::operator*(const CMat& o) const {
    if (dim_ != o.dim_) fail("CMat::*: dimension mismatch ", dim_, " vs ", o.dim_);
    CMat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            cplx x = (*this)(r, k);
            if (x == cplx{}) continue;
            for (int c = 0; c < dim_; ++c) out(r, c) += x * o(k, c);
        }
    return out;
}

CVec CMat::operator*(const CVec& v) const {
    if (dim_ != v.dim()) fail("CMat::*vec: dimension mismatch ", dim_, " vs ", v.dim());
    CVec out(dim_);
    for (int r = 0; r < dim_; ++r) {
        cplx s = 0;
        for (int c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

CMat CMat::operator*(cplx s) const {
    CMat out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i)
        out.a_[static_cast<std::size_t>(i)] = a_[static_cast<std::size_t>(i)] * s;
    return out;
}

CMat CMat::adjoint() const {
    CMat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

cplx CMat::trace() const {
    cplx s = 0;
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

double CMat::max_abs() const {
    double m = 0;
    for (int i = 0; i < dim_ * dim_; ++i)
        m = std::max(m, std::abs(a_[static_cast<std::size_t>(i)]));
    return m;
}

double CMat::frobenius_norm() const {
    double s = 0;
    for (int i = 0; i < dim_ * dim_; ++i) s += std::norm(a_[static_cast<std::size_t>(i)]);
    return std::sqrt(s);
}

double CMat::hermiticity_defect() const {
    double m = 0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

bool CMat::is_unitary(double tol) const {
    return ((adjoint() * (*this)) - identity(dim_)).max_abs() <= tol;
}

cplx inner(const CVec& u, const CVec& v) {
    if (u.dim() != v.dim()) fail("inner: dimension mismatch ", u.dim(), " vs ", v.dim());
    cplx s = 0;
    for (int i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

CMat outer(const CVec& u, const CVec& v) {
    if (u.dim() != v.dim()) fail("outer: dimension mismatch ", u.dim(), " vs ", v.dim());
    CMat m(u.dim());
    for (int r = 0; r < u.dim(); ++r)
        for (int c = 0; c < u.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
    return m;
}

CMat kron(const CMat& a, const CMat& b) {
    if (a.dim() != 2 || b.dim() != 2) fail("kron: both factors must be dim 2");
    CMat out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

CVec kron(const CVec& a, const CVec& b) {
    if (a.dim() != 2 || b.dim() != 2) fail("kron: both factors must be dim 2");
    CVec out(4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) out[2 * i + k] = a[i] * b[k];
    return out;
}

CMat pauli(int axis) {
    switch (axis) {
        case 0: return CMat{{0, 1}, {1, 0}};
        case 1: return CMat{{0, cplx(0, -1)}, {cplx(0, 1), 0}};
        case 2: return CMat{{1, 0}, {0, -1}};
        default: fail("pauli: axis must be 0, 1 or 2, got ", axis);
    }
}

CMat pauli_dot(const std::array<double, 3>& n) {
    CMat m(2);
    m(0, 0) = n[2];
    m(0, 1) = cplx(n[0], -n[1]);
    m(1, 0) = cplx(n[0], n[1]);
    m(1, 1) = -n[2];
    return m;
}

bool equal_up_to_global_phase(const CMat& u, const CMat& v, double tol) {
    if (u.dim() != v.dim()) return false;
    return std::abs(std::abs((u.adjoint() * v).trace()) - u.dim()) <= tol;
}

}  // namespace qpe
