#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qpd/random.hpp"
#include "qpd/tensor.hpp"

namespace qpd {

// Per-qubit +/-1 eigenvalue list; qubit 0 is most significant in basis
// indexing throughout.
using OutcomePattern = std::vector<int>;
using OutcomeDistribution = std::map<OutcomePattern, double>;

// Mixture of normalized pure states of equal dimension; weights sum to 1.
struct Ensemble {
  std::vector<std::pair<double, Vector>> components;
};

// Measurement axis in the x-z plane of the Bloch sphere, measured from +z.
// Observable cos(theta) sigma_z + sin(theta) sigma_x, eigenvalues exactly +/-1.
struct ObservableAxis {
  double theta = 0.0;

  Matrix observable() const;
  // +1 eigenvector has non-negative <0| component: (cos t/2, sin t/2).
  Vector eigenvector(int eigenvalue) const;
};

inline ObservableAxis z_axis() { return ObservableAxis{0.0}; }
ObservableAxis x_axis();

Vector basis_ket(int dim, int index);
Vector ket_plus();
Vector ket_minus();

Vector bell_psi_plus();
Vector bell_psi_minus();
Vector bell_phi_plus();
Vector bell_phi_minus();

Vector w_state(int n);

// 2*arctan(1/sqrt(n-1)): the axis separation the n-qubit W scheme
// discriminates exactly.
double critical_angle(int n);

OutcomeDistribution measure_exact(const Vector& state, const std::vector<ObservableAxis>& axes);
OutcomeDistribution measure_exact(const Ensemble& ensemble, const std::vector<ObservableAxis>& axes);

OutcomePattern measure_sample(const Vector& state, const std::vector<ObservableAxis>& axes,
                              RandomStream& stream);
OutcomePattern measure_sample(const Ensemble& ensemble, const std::vector<ObservableAxis>& axes,
                              RandomStream& stream);

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::map<BellOutcome, double> bell_measure(const Vector& state);

}  // namespace qpd
