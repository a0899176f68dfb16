#include "qpd/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qpd {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

void require_unitary(const Matrix& u, double tol) {
  if (!is_unitary(u, tol))
    throw NotUnitaryError("operator is not unitary within tolerance");
}

bool is_normalized(const Vector& psi, double tol) {
  return std::abs(psi.squaredNorm() - 1.0) <= tol;
}

bool same_ray(const Vector& a, const Vector& b, double tol) {
  return std::abs(a.dot(b)) >= 1.0 - tol;
}

EigenSystem eigenphases(const Matrix& u, double tol) {
  require_unitary(u, tol);
  // A unitary is normal, so its complex Schur form is diagonal and the Schur
  // basis is an orthonormal eigenbasis.
  Eigen::ComplexSchur<Matrix> schur(u);
  const Eigen::Index n = u.rows();
  std::vector<double> phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double p = std::arg(schur.matrixT()(k, k));
    if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
    phases[k] = p;
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return phases[a] < phases[b]; });
  EigenSystem out;
  out.phases.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.phases[k] = phases[order[k]];
    out.vectors.col(k) = schur.matrixU().col(order[k]);
  }
  return out;
}

namespace gates {

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

}  // namespace gates

}  // namespace qpd
