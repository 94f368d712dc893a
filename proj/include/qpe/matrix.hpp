#pragma once

#include <array>
#include <initializer_list>

#include "qpe/common.hpp"

namespace qpe {

/** Dense complex vector of dimension 2 or 4. */
class CVec {
  public:
    explicit CVec(int dim);
    CVec(std::initializer_list<cplx> entries);

    int dim() const { return dim_; }
    cplx& operator[](int i) { return a_[static_cast<std::size_t>(i)]; }
    const cplx& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }

    double norm() const;
    CVec normalized() const;
    /** Rotates the global phase so the first component above 1e-12 is real positive. */
    CVec canonical() const;

    CVec operator+(const CVec& o) const;
    CVec operator-(const CVec& o) const;
    CVec operator*(cplx s) const;

  private:
    int dim_;
    std::array<cplx, 4> a_{};
};

/** Dense complex square matrix of dimension 2 or 4, row-major. */
class CMat {
  public:
    explicit CMat(int dim);
    CMat(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMat identity(int dim);

    int dim() const { return dim_; }
    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
    const cplx& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r * dim_ + c)];
    }

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CVec operator*(const CVec& v) const;
    CMat operator*(cplx s) const;

    CMat adjoint() const;
    cplx trace() const;
    double max_abs() const;           // entrywise max modulus
    double frobenius_norm() const;
    double hermiticity_defect() const;  // max |M - M^dagger|
    bool is_unitary(double tol = kTol.unitarity) const;

  private:
    int dim_;
    std::array<cplx, 16> a_{};
};

inline CMat operator*(cplx s, const CMat& m) { return m * s; }
inline CVec operator*(cplx s, const CVec& v) { return v * s; }

/** <u|v> with the left argument conjugated. */
cplx inner(const CVec& u, const CVec& v);

/** |u><v| */
CMat outer(const CVec& u, const CVec& v);

/** Tensor product of two dim-2 matrices; index map (i,j)x(k,l) -> (2i+k, 2j+l). */
CMat kron(const CMat& a, const CMat& b);

CVec kron(const CVec& a, const CVec& b);

/** Pauli matrices; axis 0,1,2 = X,Y,Z. */
CMat pauli(int axis);

/** n . sigma for a real 3-vector n. */
CMat pauli_dot(const std::array<double, 3>& n);

/** True iff |tr(U^dagger V)| equals dim within kTol.global_phase. */
bool equal_up_to_global_phase(const CMat& u, const CMat& v, double tol = kTol.global_phase);

}  // namespace qpe
