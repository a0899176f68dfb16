#include "qpd/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qpd/errors.hpp"

namespace qpd {

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::S: return "S";
    case Decision::T: return "T";
    case Decision::SigmaZ: return "sigma_z";
    case Decision::Hadamard: return "hadamard";
    case Decision::IdentityOp: return "identity";
    case Decision::JOp: return "J";
    case Decision::PauliI: return "pauli_i";
    case Decision::PauliX: return "pauli_x";
    case Decision::PauliY: return "pauli_y";
    case Decision::PauliZ: return "pauli_z";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

Decision pauli_decision(Pauli p) {
  switch (p) {
    case Pauli::I: return Decision::PauliI;
    case Pauli::X: return Decision::PauliX;
    case Pauli::Y: return Decision::PauliY;
    case Pauli::Z: return Decision::PauliZ;
  }
  return Decision::Inconclusive;
}

Decision decide_measurement_qpd(const OutcomePattern& pattern) {
  if (pattern.size() < 2) throw BadArityError("pattern needs at least two eigenvalues");
  const auto minus = std::count(pattern.begin(), pattern.end(), -1);
  return minus == 1 ? Decision::S : Decision::T;
}

namespace {

std::vector<ObservableAxis> hidden_axes(int n, HiddenMeasurement hidden) {
  const double theta = hidden == HiddenMeasurement::S ? 0.0 : critical_angle(n);
  return std::vector<ObservableAxis>(static_cast<std::size_t>(n), ObservableAxis{theta});
}

DecisionDistribution decide_all(const OutcomeDistribution& dist) {
  DecisionDistribution out;
  for (const auto& [pattern, p] : dist) out[decide_measurement_qpd(pattern)] += p;
  return out;
}

}  // namespace

DecisionDistribution run_measurement_qpd_exact(int n, HiddenMeasurement hidden) {
  return decide_all(measure_exact(w_state(n), hidden_axes(n, hidden)));
}

Decision run_measurement_qpd_sample(int n, HiddenMeasurement hidden, RandomStream& stream) {
  return decide_measurement_qpd(measure_sample(w_state(n), hidden_axes(n, hidden), stream));
}

DecisionDistribution run_measurement_qpd_exact(const Ensemble& prepared, HiddenMeasurement hidden) {
  return decide_all(measure_exact(prepared, hidden_axes(2, hidden)));
}

Decision run_measurement_qpd_sample(const Ensemble& prepared, HiddenMeasurement hidden,
                                    RandomStream& stream) {
  return decide_measurement_qpd(measure_sample(prepared, hidden_axes(2, hidden), stream));
}

Resources measurement_qpd_resources(int n) { return Resources{n, n - 1, 0}; }

namespace {

Matrix hidden_gate(HiddenUnitary hidden) {
  return hidden == HiddenUnitary::SigmaZ ? gates::sigma_z() : gates::hadamard();
}

// Anti-correlated z outcomes flag the invariant action of sigma_z on |psi+>;
// correlated outcomes flag the Hadamard (which maps it to |phi->).
Decision decide_unitary_entangled(const OutcomePattern& pattern) {
  return pattern[0] != pattern[1] ? Decision::SigmaZ : Decision::Hadamard;
}

DecisionDistribution decide_all_entangled(const OutcomeDistribution& dist) {
  DecisionDistribution out;
  for (const auto& [pattern, p] : dist) out[decide_unitary_entangled(pattern)] += p;
  return out;
}

Ensemble apply_to_ensemble(const Matrix& op, const Ensemble& e) {
  Ensemble out;
  out.components.reserve(e.components.size());
  for (const auto& [w, state] : e.components) out.components.emplace_back(w, op * state);
  return out;
}

const std::vector<ObservableAxis> kZZ{z_axis(), z_axis()};

}  // namespace

DecisionDistribution run_unitary_qpd_entangled_exact(HiddenUnitary hidden) {
  Ensemble e;
  e.components.emplace_back(1.0, bell_psi_plus());
  return run_unitary_qpd_entangled_exact(e, hidden);
}

DecisionDistribution run_unitary_qpd_entangled_exact(const Ensemble& prepared,
                                                     HiddenUnitary hidden) {
  const Matrix uu = kron(hidden_gate(hidden), hidden_gate(hidden));
  return decide_all_entangled(measure_exact(apply_to_ensemble(uu, prepared), kZZ));
}

Decision run_unitary_qpd_entangled_sample(HiddenUnitary hidden, RandomStream& stream) {
  Ensemble e;
  e.components.emplace_back(1.0, bell_psi_plus());
  return run_unitary_qpd_entangled_sample(e, hidden, stream);
}

Decision run_unitary_qpd_entangled_sample(const Ensemble& prepared, HiddenUnitary hidden,
                                          RandomStream& stream) {
  const Matrix uu = kron(hidden_gate(hidden), hidden_gate(hidden));
  return decide_unitary_entangled(measure_sample(apply_to_ensemble(uu, prepared), kZZ, stream));
}

Resources unitary_qpd_entangled_resources() { return Resources{2, 1, 0}; }

DecisionDistribution run_unitary_qpd_unentangled_exact(HiddenUnitary hidden) {
  const Matrix u = hidden_gate(hidden);
  const Vector probe = u * (gates::sigma_z() * (u * basis_ket(2, 0)));
  DecisionDistribution out;
  for (const auto& [pattern, p] : measure_exact(probe, {z_axis()}))
    out[pattern[0] == +1 ? Decision::SigmaZ : Decision::Hadamard] += p;
  return out;
}

Decision run_unitary_qpd_unentangled_sample(HiddenUnitary hidden, RandomStream& stream) {
  const Matrix u = hidden_gate(hidden);
  const Vector probe = u * (gates::sigma_z() * (u * basis_ket(2, 0)));
  const auto pattern = measure_sample(probe, {z_axis()}, stream);
  return pattern[0] == +1 ? Decision::SigmaZ : Decision::Hadamard;
}

Resources unitary_qpd_unentangled_resources() { return Resources{2, 0, 1}; }

namespace {

Matrix pauli_gate(Pauli p) {
  switch (p) {
    case Pauli::I: return gates::identity(2);
    case Pauli::X: return gates::sigma_x();
    case Pauli::Y: return gates::sigma_y();
    case Pauli::Z: return gates::sigma_z();
  }
  throw Error("bad pauli");
}

int certain_outcome(const Vector& state, const ObservableAxis& axis) {
  const auto dist = measure_exact(state, {axis});
  int best = +1;
  double pbest = -1.0;
  for (const auto& [pattern, p] : dist) {
    if (p > pbest) {
      pbest = p;
      best = pattern[0];
    }
  }
  return best;
}

}  // namespace

Pauli discriminate_pauli_unentangled(Pauli hidden) {
  const Matrix u = pauli_gate(hidden);
  // z outcome of U|0> and x outcome of U|+> form a two-bit code.
  const int z = certain_outcome(u * basis_ket(2, 0), z_axis());
  const int x = certain_outcome(u * ket_plus(), x_axis());
  if (z == +1 && x == +1) return Pauli::I;
  if (z == +1 && x == -1) return Pauli::Z;
  if (z == -1 && x == +1) return Pauli::X;
  return Pauli::Y;
}

Pauli discriminate_pauli_entangled(Pauli hidden) {
  const Vector probed = kron(pauli_gate(hidden), gates::identity(2)) * bell_psi_plus();
  const auto dist = bell_measure(probed);
  BellOutcome best = BellOutcome::PsiPlus;
  double pbest = -1.0;
  for (const auto& [outcome, p] : dist) {
    if (p > pbest) {
      pbest = p;
      best = outcome;
    }
  }
  switch (best) {
    case BellOutcome::PsiPlus: return Pauli::I;
    case BellOutcome::PsiMinus: return Pauli::Z;
    case BellOutcome::PhiPlus: return Pauli::X;
    case BellOutcome::PhiMinus: return Pauli::Y;
  }
  throw Error("unreachable");
}

Resources pauli_unentangled_resources() { return Resources{2, 0, 0}; }
Resources pauli_entangled_resources() { return Resources{1, 1, 0}; }

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

struct PhasePoint {
  double angle = 0.0;  // in [0, 2pi)
  std::vector<int> counts;
};

// All eigenphase sums over multisets of size n from d eigenvectors.
void enumerate_points(const std::vector<double>& phases, int n, std::vector<PhasePoint>& out) {
  const int d = static_cast<int>(phases.size());
  std::vector<int> counts(d, 0);
  auto rec = [&](auto&& self, int k, int remaining, double acc) -> void {
    if (k == d - 1) {
      counts[k] = remaining;
      out.push_back({wrap_angle(acc + remaining * phases[k]), counts});
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[k] = c;
      self(self, k + 1, remaining - c, acc + c * phases[k]);
    }
    counts[k] = 0;
  };
  rec(rec, 0, n, 0.0);
}

// Zero is in the convex hull of unit-circle points iff no open half-circle
// contains them all, i.e. the largest circular gap is at most pi.
bool hull_contains_zero(const std::vector<PhasePoint>& pts, double tol) {
  std::vector<double> angles;
  angles.reserve(pts.size());
  for (const auto& p : pts) angles.push_back(p.angle);
  std::sort(angles.begin(), angles.end());
  double max_gap = angles.front() + kTwoPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i)
    max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
  return max_gap <= std::numbers::pi + tol;
}

// Balance weights over two antipodal points, or over a triangle of points
// whose hull contains zero.
bool synthesize_weights(const std::vector<PhasePoint>& pts, DiscriminationPlan& plan) {
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double sep = std::abs(wrap_angle(pts[i].angle - pts[j].angle) - std::numbers::pi);
      if (sep <= 1e-9) {
        plan.probe = {{pts[i].counts, pts[i].angle, 0.5}, {pts[j].counts, pts[j].angle, 0.5}};
        return true;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        Eigen::Matrix3d a;
        a << std::cos(pts[i].angle), std::cos(pts[j].angle), std::cos(pts[k].angle),
            std::sin(pts[i].angle), std::sin(pts[j].angle), std::sin(pts[k].angle),
            1.0, 1.0, 1.0;
        if (std::abs(a.determinant()) < 1e-12) continue;
        const Eigen::Vector3d w = a.fullPivLu().solve(Eigen::Vector3d(0.0, 0.0, 1.0));
        if (w.minCoeff() < -1e-12) continue;
        plan.probe = {{pts[i].counts, pts[i].angle, std::max(w(0), 0.0)},
                      {pts[j].counts, pts[j].angle, std::max(w(1), 0.0)},
                      {pts[k].counts, pts[k].angle, std::max(w(2), 0.0)}};
        double total = 0.0;
        for (const auto& c : plan.probe) total += c.weight;
        for (auto& c : plan.probe) c.weight /= total;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

DiscriminationPlan plan_parallel_discrimination(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw DimensionMismatchError("operands must have equal dimension");
  require_unitary(u);
  require_unitary(v);
  const EigenSystem sys = eigenphases(u.adjoint() * v);

  double spread = 0.0;
  for (std::size_t i = 0; i < sys.phases.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.phases.size(); ++j) {
      double d = wrap_angle(sys.phases[j] - sys.phases[i]);
      d = std::min(d, kTwoPi - d);
      spread = std::max(spread, d);
    }
  }
  if (spread <= 1e-9)
    throw IndistinguishableError("U^dag V is a scalar multiple of the identity");

  constexpr int kMaxUses = 4096;
  for (int n = 1; n <= kMaxUses; ++n) {
    std::vector<PhasePoint> pts;
    enumerate_points(sys.phases, n, pts);
    if (!hull_contains_zero(pts, 1e-12)) continue;
    DiscriminationPlan plan;
    plan.uses = n;
    if (!synthesize_weights(pts, plan)) continue;
    Complex overlap = 0.0;
    for (const auto& c : plan.probe) overlap += c.weight * std::polar(1.0, c.phase);
    plan.achieved_overlap = std::abs(overlap);
    return plan;
  }
  throw Error("no feasible plan within the supported number of uses");
}

double bloch_angle(const ObservableAxis& a, const ObservableAxis& b) {
  const double d = std::abs(a.theta - b.theta);
  return std::min(d, kTwoPi - d);
}

double bloch_angle(const Matrix& a, const Matrix& b) {
  auto axis = [](const Matrix& o) {
    if (o.rows() != 2 || o.cols() != 2) throw DimensionMismatchError("single-qubit operator expected");
    if (std::abs(o.trace()) > 1e-10) throw NoAxisError("operator is not traceless");
    if ((o - o.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw NoAxisError("operator is not Hermitian");
    Eigen::Vector3d n;
    n << 0.5 * (o * gates::sigma_x()).trace().real(),
        0.5 * (o * gates::sigma_y()).trace().real(),
        0.5 * (o * gates::sigma_z()).trace().real();
    if (std::abs(n.norm() - 1.0) > 1e-9) throw NoAxisError("operator is not a unit Bloch axis");
    return n;
  };
  const double c = std::clamp(axis(a).dot(axis(b)), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace qpd
