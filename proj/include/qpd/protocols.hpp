#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpd/qubit.hpp"
#include "qpd/tensor.hpp"

namespace qpd {

enum class Decision {
  S,
  T,
  SigmaZ,
  Hadamard,
  IdentityOp,
  JOp,
  PauliI,
  PauliX,
  PauliY,
  PauliZ,
  Inconclusive,  // never emitted by the deterministic schemes in this release
};

std::string decision_name(Decision d);

using DecisionDistribution = std::map<Decision, double>;

enum class HiddenMeasurement { S, T };
enum class HiddenUnitary { SigmaZ, Hadamard };
enum class Pauli { I, X, Y, Z };

Decision pauli_decision(Pauli p);

// Resource accounting attached to every protocol run.
struct Resources {
  int unknown_uses = 0;
  int ebits = 0;
  int known_unitaries = 0;
};

// Exactly one -1 identifies S (the z-axis observable); anything else T.
Decision decide_measurement_qpd(const OutcomePattern& pattern);

// W-state scheme: measure every qubit of W(n) with the hidden axis.
DecisionDistribution run_measurement_qpd_exact(int n, HiddenMeasurement hidden);
Decision run_measurement_qpd_sample(int n, HiddenMeasurement hidden, RandomStream& stream);
// Same scheme with a caller-supplied n=2 preparation (e.g. a noisy Bell mixture).
DecisionDistribution run_measurement_qpd_exact(const Ensemble& prepared, HiddenMeasurement hidden);
Decision run_measurement_qpd_sample(const Ensemble& prepared, HiddenMeasurement hidden,
                                    RandomStream& stream);
Resources measurement_qpd_resources(int n);

// hidden x hidden on |psi+>, z x z measurement; anti-correlation flags sigma_z.
DecisionDistribution run_unitary_qpd_entangled_exact(HiddenUnitary hidden);
DecisionDistribution run_unitary_qpd_entangled_exact(const Ensemble& prepared,
                                                     HiddenUnitary hidden);
Decision run_unitary_qpd_entangled_sample(HiddenUnitary hidden, RandomStream& stream);
Decision run_unitary_qpd_entangled_sample(const Ensemble& prepared, HiddenUnitary hidden,
                                          RandomStream& stream);
Resources unitary_qpd_entangled_resources();

// U sigma_z U probe on |0>; the +1 outcome flags sigma_z.
DecisionDistribution run_unitary_qpd_unentangled_exact(HiddenUnitary hidden);
Decision run_unitary_qpd_unentangled_sample(HiddenUnitary hidden, RandomStream& stream);
Resources unitary_qpd_unentangled_resources();

Pauli discriminate_pauli_unentangled(Pauli hidden);
Pauli discriminate_pauli_entangled(Pauli hidden);
Resources pauli_unentangled_resources();
Resources pauli_entangled_resources();

// Probe over N-fold tensor powers of U^dag V eigenvectors that makes the two
// unitaries perfectly distinguishable in N parallel uses.
struct DiscriminationPlan {
  struct Component {
    std::vector<int> counts;  // multiplicity per eigenvector, sums to uses
    double phase = 0.0;       // accumulated eigenphase of the component
    double weight = 0.0;
  };
  int uses = 0;
  std::vector<Component> probe;
  double achieved_overlap = 0.0;
};

DiscriminationPlan plan_parallel_discrimination(const Matrix& u, const Matrix& v);

double bloch_angle(const ObservableAxis& a, const ObservableAxis& b);
double bloch_angle(const Matrix& a, const Matrix& b);

}  // namespace qpd
