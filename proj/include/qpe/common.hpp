#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qpe {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/** Central tolerance record; every numeric gate in the library reads from here. */
struct Tolerances {
    double hermiticity     = 1e-10;  // max |M - M^dagger| accepted as Hermitian
    double unitarity       = 1e-10;  // max |U^dagger U - I| accepted as unitary
    double psd_floor       = 1e-10;  // eigenvalues above -psd_floor are clipped to 0
    double state_norm      = 1e-12;  // |norm - 1| accepted for state vectors
    double trace_one       = 1e-10;  // |tr - 1| accepted for density matrices
    double density_psd     = 1e-9;   // eigenvalue floor for density matrices
    double jacobi_offdiag  = 1e-13;  // Jacobi sweep convergence target
    int    jacobi_sweeps   = 100;
    double prob_sum        = 1e-10;  // |sum p - 1| accepted for distributions
    double prob_floor      = 1e-12;  // below this an outcome counts as unreachable
    double deriv_floor     = 1e-9;   // |dp| above this on a p=0 outcome is a divergence
    double fd_step         = 1e-5;   // central-difference step, radians
    double sld_kernel      = 1e-10;  // eigenvalue-pair sum below this is treated as kernel
    double schur_block     = 1e-10;  // min eigenvalue for an invertible axis block
    double schur_coupling  = 1e-9;   // |I_c| below this counts as decoupled
    double global_phase    = 1e-9;   // |tr(U^dagger V)| = dim criterion
    double boundary_alpha  = 1e-12;  // |pi - |alpha|| below this takes the boundary branch
};

inline constexpr Tolerances kTol{};

/** Error type thrown on every contract violation; the message names the violated bound. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

template <typename... Args>
std::string concat(const Args&... args) {
    std::ostringstream os;
    os.precision(17);
    (os << ... << args);
    return os.str();
}

}  // namespace detail

template <typename... Args>
[[noreturn]] void fail(const Args&... args) {
    throw Error(detail::concat(args...));
}

inline void require_finite(double x, const char* where) {
    if (!std::isfinite(x)) fail(where, ": non-finite value ", x);
}

inline void require_finite(cplx z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(where, ": non-finite complex value");
}

}  // namespace qpe
