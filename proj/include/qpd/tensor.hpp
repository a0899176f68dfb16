#pragma once

#include <vector>

#include "qpd/errors.hpp"
#include "qpd/types.hpp"

namespace qpd {

// Kronecker product, left factor most significant in the composite index.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

double unitarity_defect(const Matrix& u);

inline bool is_unitary(const Matrix& u, double tol = default_tol().structural) {
  return unitarity_defect(u) <= tol;
}

void require_unitary(const Matrix& u, double tol = default_tol().structural);

bool is_normalized(const Vector& psi, double tol = default_tol().structural);

// Ray (physical-state) equality: |<a|b>| >= 1 - tol for normalized inputs.
bool same_ray(const Vector& a, const Vector& b, double tol = default_tol().spectral);

struct EigenSystem {
  std::vector<double> phases;  // ascending, in (-pi, pi]
  Matrix vectors;              // orthonormal columns, vectors.col(k) <-> phases[k]
};

// Eigenphases of a unitary with an orthonormal eigenvector set.
// Degenerate eigenspaces are orthonormalized; ties broken by ascending phase.
EigenSystem eigenphases(const Matrix& u, double tol = default_tol().structural);

namespace gates {
Matrix identity(int dim);
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix hadamard();
}  // namespace gates

}  // namespace qpd
