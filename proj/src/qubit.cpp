#include "qpd/qubit.hpp"

#include <cmath>
#include <numbers>

#include "qpd/errors.hpp"

namespace qpd {

Matrix ObservableAxis::observable() const {
  return std::cos(theta) * gates::sigma_z() + std::sin(theta) * gates::sigma_x();
}

Vector ObservableAxis::eigenvector(int eigenvalue) const {
  Vector v(2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  if (eigenvalue == +1) {
    v << c, s;
  } else {
    v << -s, c;
  }
  return v;
}

ObservableAxis x_axis() { return ObservableAxis{std::numbers::pi / 2.0}; }

Vector basis_ket(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

Vector ket_plus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

Vector ket_minus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return v;
}

Vector bell_psi_plus() {
  Vector v = Vector::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

Vector bell_psi_minus() {
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

Vector bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

Vector bell_phi_minus() {
  Vector v = Vector::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = -1.0 / std::sqrt(2.0);
  return v;
}

Vector w_state(int n) {
  if (n < 2) throw BadArityError("w_state requires n >= 2");
  const int dim = 1 << n;
  Vector v = Vector::Zero(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 0; q < n; ++q) v(1 << q) = a;
  return v;
}

double critical_angle(int n) {
  if (n < 2) throw BadArityError("critical_angle requires n >= 2");
  return 2.0 * std::atan(1.0 / std::sqrt(static_cast<double>(n - 1)));
}

namespace {

// Amplitude of a product of axis eigenvectors against the state; the pattern
// probability is its squared magnitude.
Complex pattern_amplitude(const Vector& state, const std::vector<ObservableAxis>& axes,
                          unsigned mask) {
  const int n = static_cast<int>(axes.size());
  Complex amp = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (state(i) == Complex(0.0)) continue;
    Complex coeff = 1.0;
    for (int q = 0; q < n; ++q) {
      const int bit = static_cast<int>((i >> (n - 1 - q)) & 1);  // qubit 0 most significant
      const int ev = (mask >> q) & 1u ? -1 : +1;
      coeff *= std::conj(axes[q].eigenvector(ev)(bit));
    }
    amp += coeff * state(i);
  }
  return amp;
}

OutcomePattern mask_to_pattern(unsigned mask, int n) {
  OutcomePattern p(n);
  for (int q = 0; q < n; ++q) p[q] = (mask >> q) & 1u ? -1 : +1;
  return p;
}

}  // namespace

OutcomeDistribution measure_exact(const Vector& state, const std::vector<ObservableAxis>& axes) {
  const int n = static_cast<int>(axes.size());
  if (state.size() != (Eigen::Index{1} << n))
    throw DimensionMismatchError("state dimension must be 2^(number of axes)");
  OutcomeDistribution dist;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const double p = std::norm(pattern_amplitude(state, axes, mask));
    // 1e-30 is squared rounding noise, far below any probability the
    // protocols distinguish.
    if (p > 1e-30) dist[mask_to_pattern(mask, n)] += p;
  }
  return dist;
}

OutcomeDistribution measure_exact(const Ensemble& ensemble, const std::vector<ObservableAxis>& axes) {
  OutcomeDistribution dist;
  for (const auto& [w, state] : ensemble.components) {
    for (const auto& [pattern, p] : measure_exact(state, axes)) dist[pattern] += w * p;
  }
  return dist;
}

OutcomePattern measure_sample(const Vector& state, const std::vector<ObservableAxis>& axes,
                              RandomStream& stream) {
  const int n = static_cast<int>(axes.size());
  if (state.size() != (Eigen::Index{1} << n))
    throw DimensionMismatchError("state dimension must be 2^(number of axes)");
  double r = stream.next_uniform();
  double acc = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    acc += std::norm(pattern_amplitude(state, axes, mask));
    if (r < acc) return mask_to_pattern(mask, n);
  }
  return mask_to_pattern((1u << n) - 1, n);
}

OutcomePattern measure_sample(const Ensemble& ensemble, const std::vector<ObservableAxis>& axes,
                              RandomStream& stream) {
  // Component first, then outcome.
  double r = stream.next_uniform();
  double acc = 0.0;
  for (const auto& [w, state] : ensemble.components) {
    acc += w;
    if (r < acc) return measure_sample(state, axes, stream);
  }
  return measure_sample(ensemble.components.back().second, axes, stream);
}

std::map<BellOutcome, double> bell_measure(const Vector& state) {
  if (state.size() != 4) throw DimensionMismatchError("bell_measure requires a two-qubit state");
  std::map<BellOutcome, double> out;
  out[BellOutcome::PhiPlus] = std::norm(bell_phi_plus().dot(state));
  out[BellOutcome::PhiMinus] = std::norm(bell_phi_minus().dot(state));
  out[BellOutcome::PsiPlus] = std::norm(bell_psi_plus().dot(state));
  out[BellOutcome::PsiMinus] = std::norm(bell_psi_minus().dot(state));
  return out;
}

}  // namespace qpd
