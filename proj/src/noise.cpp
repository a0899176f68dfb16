#include "qpd/noise.hpp"

#include <algorithm>
#include <cmath>

#include "qpd/errors.hpp"

namespace qpd {

Ensemble noisy_bell_ensemble(double visibility) {
  if (visibility < 0.0 || visibility > 1.0) throw Error("visibility must lie in [0, 1]");
  Ensemble e;
  const double half = (1.0 - visibility) / 2.0;
  // Leading weight re-derived from `half` so the three weights sum to 1 in
  // floating point, not just within tolerance.
  e.components.emplace_back(1.0 - (half + half), bell_psi_plus());
  e.components.emplace_back(half, basis_ket(4, 1));  // |01>
  e.components.emplace_back(half, basis_ket(4, 2));  // |10>
  return e;
}

double predicted_confidence(double visibility, ConfidenceModel model) {
  if (visibility < 0.0 || visibility > 1.0) throw Error("visibility must lie in [0, 1]");
  switch (model) {
    case ConfidenceModel::PerHypothesis:
      return 0.75 + visibility / 4.0;
    case ConfidenceModel::PaperAveraged:
      return visibility + (1.0 - visibility) / 2.0;
  }
  throw Error("bad model");
}

TrialSummary summarize(const std::vector<std::pair<Decision, Decision>>& trials) {
  if (trials.empty()) throw EmptyInputError("no trials to summarize");
  TrialSummary s;
  s.trials = static_cast<long>(trials.size());
  for (const auto& [truth, decision] : trials) {
    const bool ok = truth == decision;
    if (ok) ++s.correct;
    auto it = std::find_if(s.breakdown.begin(), s.breakdown.end(),
                           [&](const auto& b) { return b.truth == truth; });
    if (it == s.breakdown.end()) {
      s.breakdown.push_back({truth, 0, 0, 0.0});
      it = std::prev(s.breakdown.end());
    }
    ++it->trials;
    if (ok) ++it->correct;
  }
  s.confidence = static_cast<double>(s.correct) / static_cast<double>(s.trials);
  s.std_error = std::sqrt(s.confidence * (1.0 - s.confidence) / static_cast<double>(s.trials));
  for (auto& b : s.breakdown)
    b.confidence = static_cast<double>(b.correct) / static_cast<double>(b.trials);
  return s;
}

}  // namespace qpd
