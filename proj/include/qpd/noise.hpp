#pragma once

#include <utility>
#include <vector>

#include "qpd/protocols.hpp"
#include "qpd/qubit.hpp"

namespace qpd {

enum class ConfidenceModel { PerHypothesis, PaperAveraged };

// Dephased photon-pair mixture: weight m on |psi+>, (1-m)/2 on each of
// |01>, |10>.
Ensemble noisy_bell_ensemble(double visibility);

// PerHypothesis: 3/4 + m/4 (the z-axis stays anti-correlated in the mixture).
// PaperAveraged: m + (1-m)/2.
double predicted_confidence(double visibility, ConfidenceModel model);

struct TrialSummary {
  long trials = 0;
  long correct = 0;
  double confidence = 0.0;
  double std_error = 0.0;
  // (hypothesis, trials, correct) per hidden value
  struct PerHypothesis {
    Decision truth = Decision::Inconclusive;
    long trials = 0;
    long correct = 0;
    double confidence = 0.0;
  };
  std::vector<PerHypothesis> breakdown;
};

TrialSummary summarize(const std::vector<std::pair<Decision, Decision>>& trials);

}  // namespace qpd
