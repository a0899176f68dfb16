#include "qpd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qpd/errors.hpp"

namespace qpd {
namespace fock {

const std::vector<Occupation>& basis() {
  static const std::vector<Occupation> b = [] {
    std::vector<Occupation> out;
    for (int total = 0; total <= kMaxPhotons; ++total) {
      std::vector<Occupation> sector;
      for (int a = 0; a <= total; ++a)
        for (int bv = 0; bv <= total - a; ++bv)
          for (int c = 0; c <= total - a - bv; ++c) {
            const int d = total - a - bv - c;
            sector.push_back({a, bv, c, d});
          }
      std::sort(sector.begin(), sector.end());
      out.insert(out.end(), sector.begin(), sector.end());
    }
    return out;
  }();
  return b;
}

int basis_index(const Occupation& occ) {
  const auto& b = basis();
  const auto it = std::find(b.begin(), b.end(), occ);
  if (it == b.end()) throw Error("occupation outside the truncated basis");
  return static_cast<int>(it - b.begin());
}

int local_label(int n_h, int n_v) {
  if (n_h == 0 && n_v == 0) return 0;
  if (n_h == 1 && n_v == 0) return 1;
  if (n_h == 0 && n_v == 1) return 2;
  if (n_h == 2 && n_v == 0) return 3;
  if (n_h == 1 && n_v == 1) return 4;
  if (n_h == 0 && n_v == 2) return 5;
  throw Error("no local label for this occupation");
}

std::pair<int, int> label_occupation(int label) {
  switch (label) {
    case 0: return {0, 0};
    case 1: return {1, 0};
    case 2: return {0, 1};
    case 3: return {2, 0};
    case 4: return {1, 1};
    case 5: return {0, 2};
  }
  throw Error("local label must be in 0..5");
}

Vector local_state(int label_a, int label_b) {
  const auto [ah, av] = label_occupation(label_a);
  const auto [bh, bv] = label_occupation(label_b);
  if (ah + av + bh + bv > kMaxPhotons)
    throw Error("combined state exceeds the two-photon truncation");
  Vector v = Vector::Zero(kBasisSize);
  v(basis_index({ah, av, bh, bv})) = 1.0;
  return v;
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Matrix lift_mode_unitary(const Matrix& u) {
  if (u.rows() != kModes || u.cols() != kModes)
    throw DimensionMismatchError("mode unitary must be 4x4");
  require_unitary(u);
  const auto& b = basis();
  Matrix lifted = Matrix::Zero(kBasisSize, kBasisSize);
  for (int j = 0; j < kBasisSize; ++j) {
    const Occupation& occ = b[j];
    // Expand prod_m (sum_m' u(m',m) a^dag_m')^{n_m} |vac> term by term.
    std::map<Occupation, Complex> terms{{Occupation{0, 0, 0, 0}, Complex(1.0)}};
    double in_norm = 1.0;
    for (int m = 0; m < kModes; ++m) {
      in_norm *= factorial(occ[m]);
      for (int rep = 0; rep < occ[m]; ++rep) {
        std::map<Occupation, Complex> next;
        for (const auto& [o, amp] : terms) {
          for (int mp = 0; mp < kModes; ++mp) {
            if (u(mp, m) == Complex(0.0)) continue;
            Occupation o2 = o;
            o2[mp] += 1;
            // a^dag on |n> carries sqrt(n+1)
            next[o2] += amp * u(mp, m) * std::sqrt(static_cast<double>(o[mp] + 1));
          }
        }
        terms = std::move(next);
      }
    }
    for (const auto& [o, amp] : terms) lifted(basis_index(o), j) = amp / std::sqrt(in_norm);
  }
  return lifted;
}

Matrix build_h6() {
  Matrix h6 = Matrix::Zero(6, 6);
  h6(0, 0) = 1.0;
  h6.block(1, 1, 2, 2) = gates::hadamard();
  Matrix h3(3, 3);
  const double r2 = std::sqrt(2.0);
  h3 << 1, r2, 1, r2, 0, -r2, 1, -r2, 1;
  h6.block(3, 3, 3, 3) = 0.5 * h3;
  return h6;
}

Matrix beamsplitter_mode_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix u = Matrix::Zero(kModes, kModes);
  u(A_H, A_H) = s;
  u(A_H, B_H) = s;
  u(B_H, A_H) = s;
  u(B_H, B_H) = -s;
  u(A_V, A_V) = s;
  u(A_V, B_V) = s;
  u(B_V, A_V) = -s;
  u(B_V, B_V) = s;
  return u;
}

Matrix build_beamsplitter() { return lift_mode_unitary(beamsplitter_mode_matrix()); }

namespace {

// H6 (x) H6 expressed on the truncated two-party basis; each party's photon
// number is preserved, so the truncation is exact.
Matrix h6_tensor_h6() {
  const Matrix h6 = build_h6();
  const auto& b = basis();
  Matrix out = Matrix::Zero(kBasisSize, kBasisSize);
  for (int j = 0; j < kBasisSize; ++j) {
    const Occupation& occ = b[j];
    const int la = local_label(occ[A_H], occ[A_V]);
    const int lb = local_label(occ[B_H], occ[B_V]);
    for (int la2 = 0; la2 < 6; ++la2) {
      for (int lb2 = 0; lb2 < 6; ++lb2) {
        const Complex amp = h6(la2, la) * h6(lb2, lb);
        if (amp == Complex(0.0)) continue;
        const auto [ah, av] = label_occupation(la2);
        const auto [bh, bv] = label_occupation(lb2);
        if (ah + av + bh + bv > kMaxPhotons) continue;
        out(basis_index({ah, av, bh, bv}), j) += amp;
      }
    }
  }
  return out;
}

}  // namespace

Matrix build_J() { return h6_tensor_h6() * build_beamsplitter(); }

Matrix build_I() { return Matrix::Identity(kBasisSize, kBasisSize); }

std::map<DetectorPattern, double> detector_distribution(const Vector& state) {
  return detector_distribution(state, true);
}

std::map<DetectorPattern, double> detector_distribution(const Vector& state, bool resolving) {
  if (state.size() != kBasisSize) throw DimensionMismatchError("expected a Fock-basis state");
  std::map<DetectorPattern, double> dist;
  const auto& b = basis();
  for (int i = 0; i < kBasisSize; ++i) {
    const double p = std::norm(state(i));
    if (p == 0.0) continue;
    DetectorPattern pat{b[i][A_H], b[i][A_V], b[i][B_H], b[i][B_V]};
    if (!resolving)
      for (auto& c : pat) c = std::min(c, 1);
    dist[pat] += p;
  }
  return dist;
}

Vector bs_output_state() {
  Vector in = Vector::Zero(kBasisSize);
  in(basis_index({0, 1, 1, 0})) = 1.0;  // V in mode 1, H in mode 2
  Vector out = build_beamsplitter() * in;
  // QHQ phase correction on mode 2: pi phase on both of Bob's modes.
  const auto& b = basis();
  for (int i = 0; i < kBasisSize; ++i)
    if ((b[i][B_H] + b[i][B_V]) % 2 == 1) out(i) = -out(i);
  return out;
}

std::pair<Vector, double> post_select_coincidence(const Vector& state) {
  if (state.size() != kBasisSize) throw DimensionMismatchError("expected a Fock-basis state");
  const auto& b = basis();
  Vector qubits = Vector::Zero(4);
  double prob = 0.0;
  for (int i = 0; i < kBasisSize; ++i) {
    const Occupation& occ = b[i];
    if (occ[A_H] + occ[A_V] != 1 || occ[B_H] + occ[B_V] != 1) continue;
    prob += std::norm(state(i));
    const int qa = occ[A_V];  // H=0, V=1
    const int qb = occ[B_V];
    qubits(2 * qa + qb) += state(i);
  }
  if (prob <= 1e-300) throw ZeroSupportError("post-selection has zero probability");
  return {qubits / std::sqrt(prob), prob};
}

double hom_coincidence(double overlap) {
  if (overlap < 0.0 || overlap > 1.0) throw Error("overlap must lie in [0, 1]");
  return (1.0 - overlap) / 2.0;
}

Decision decide_locc(const DetectorPattern& pattern) {
  const int total = pattern[0] + pattern[1] + pattern[2] + pattern[3];
  if (total != 2) throw UnexpectedPatternError("LOCC rule expects two detected photons");
  const int a_plus = pattern[0], a_minus = pattern[1];
  const int b_plus = pattern[2], b_minus = pattern[3];
  if (a_minus == 1 && b_plus == 1 && a_plus == 0 && b_minus == 0) return Decision::IdentityOp;
  if (a_plus + b_plus == 2 || a_minus + b_minus == 2) return Decision::JOp;
  throw UnexpectedPatternError("detector pattern outside both protocol supports");
}

}  // namespace fock
}  // namespace qpd
