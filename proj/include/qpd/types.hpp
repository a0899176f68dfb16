#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qpd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default numerical tolerances. Structural identities (unitarity, projector
// completeness) are held to `structural`; spectral reconstructions to
// `spectral`; probabilities asserted to vanish to `nullity`.
struct Tolerances {
  double structural = 1e-12;
  double spectral = 1e-9;
  double nullity = 1e-10;
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace qpd
