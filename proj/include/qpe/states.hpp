#pragma once

#include <vector>

#include "qpe/rotations.hpp"

namespace qpe {

/** Unit-norm state vector of dimension 2 or 4. */
class PureState {
  public:
    explicit PureState(const CVec& v);
    const CVec& vec() const { return vec_; }
    int dim() const { return vec_.dim(); }

  private:
    CVec vec_;
};

/** Density matrix: Hermitian, unit trace, PSD (within the documented floors). */
class DensityMx {
  public:
    explicit DensityMx(const CMat& m);
    const CMat& mat() const { return mat_; }
    int dim() const { return mat_.dim(); }

  private:
    CMat mat_;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

struct EnsembleComponent {
    double weight;
    PureState state;                 // dim 2
    int tag;
    std::array<double, 3> meas_axis;
};

/** Classically tagged probe ensemble: weights sum to 1, tags distinct. */
class AncillaTaggedEnsemble {
  public:
    explicit AncillaTaggedEnsemble(std::vector<EnsembleComponent> components);
    const std::vector<EnsembleComponent>& components() const { return components_; }

  private:
    std::vector<EnsembleComponent> components_;
};

/** Two-qubit basis order is |00>, |01>, |10>, |11> with the probe as first factor. */
PureState bell_state(BellKind k);

/** (tr(rho X), tr(rho Y), tr(rho Z)) for a dim-2 density matrix. */
std::array<double, 3> bloch_vector(const DensityMx& rho);

/** rho = (I + r.sigma)/2; requires |r| <= 1 + 1e-9. */
DensityMx density_from_bloch(const std::array<double, 3>& r);

/** Pure dim-2 state with the given unit Bloch vector. */
PureState bloch_state(const std::array<double, 3>& r);

/** Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. */
double fidelity(const DensityMx& rho, const DensityMx& sigma);

/**
 * F |S><S| + (1-F)/3 (I - |S><S|) for the singlet S; eigenvalues {F, (1-F)/3 x3}.
 * Requires F in [0, 1].
 */
DensityMx depolarized_singlet(double f);

/** The same map applied to an arbitrary two-qubit state: F rho + (1-F)(I - rho)/3. */
CMat depolarize(const CMat& rho, double f);

/** Equal mixture of |z+>, |x+>, |y+> tagged 0, 1, 2, measured along z, x, y. */
AncillaTaggedEnsemble rho_star();

DensityMx to_density(const PureState& psi);

}  // namespace qpe
