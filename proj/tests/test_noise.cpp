#include <doctest.h>

#include <cmath>

#include "qpd/noise.hpp"

using namespace qpd;

TEST_CASE("noisy_bell_ensemble weights") {
  const Ensemble pure = noisy_bell_ensemble(1.0);
  REQUIRE(pure.components.size() == 3);
  CHECK(pure.components[0].first == 1.0);
  CHECK(pure.components[1].first == 0.0);

  const Ensemble classical = noisy_bell_ensemble(0.0);
  CHECK(classical.components[0].first == 0.0);
  CHECK(classical.components[1].first == 0.5);
  CHECK(classical.components[2].first == 0.5);

  const Ensemble partial = noisy_bell_ensemble(0.969);
  CHECK(partial.components[0].first == doctest::Approx(0.969).epsilon(1e-12));
  CHECK(partial.components[1].first == doctest::Approx(0.0155).epsilon(1e-12));
  CHECK(partial.components[2].first == doctest::Approx(0.0155).epsilon(1e-12));

  CHECK_THROWS_AS(noisy_bell_ensemble(-0.1), Error);
  CHECK_THROWS_AS(noisy_bell_ensemble(1.1), Error);
}

TEST_CASE("ensemble weights sum to 1 exactly") {
  RandomStream s(3, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const double m = s.next_uniform();
    const Ensemble e = noisy_bell_ensemble(m);
    const double w0 = e.components[0].first;
    const double h = e.components[1].first;
    CHECK(w0 + (h + h) == 1.0);
  }
}

TEST_CASE("predicted_confidence formulas") {
  CHECK(predicted_confidence(1.0, ConfidenceModel::PerHypothesis) == 1.0);
  CHECK(predicted_confidence(1.0, ConfidenceModel::PaperAveraged) == 1.0);
  CHECK(predicted_confidence(0.0, ConfidenceModel::PerHypothesis) == 0.75);
  CHECK(predicted_confidence(0.0, ConfidenceModel::PaperAveraged) == 0.5);
  CHECK(predicted_confidence(0.969, ConfidenceModel::PaperAveraged) ==
        doctest::Approx(0.9845).epsilon(1e-12));
  CHECK(predicted_confidence(0.969, ConfidenceModel::PerHypothesis) ==
        doctest::Approx(0.99225).epsilon(1e-12));
}

TEST_CASE("predicted_confidence is monotone on a 21-point grid") {
  for (auto model : {ConfidenceModel::PerHypothesis, ConfidenceModel::PaperAveraged}) {
    double prev = -1.0;
    for (int i = 0; i <= 20; ++i) {
      const double c = predicted_confidence(i / 20.0, model);
      CHECK(c >= prev);
      prev = c;
    }
    CHECK(prev == 1.0);
  }
}

TEST_CASE("per-hypothesis formula matches the exact-distribution ensemble") {
  // Average exact correctness over equiprobable hidden S/T under the mixture.
  for (double m : {0.0, 0.25, 0.5, 0.969, 1.0}) {
    const Ensemble e = noisy_bell_ensemble(m);
    double avg = 0.0;
    for (auto hidden : {HiddenMeasurement::S, HiddenMeasurement::T}) {
      const Decision truth = hidden == HiddenMeasurement::S ? Decision::S : Decision::T;
      const auto dist = run_measurement_qpd_exact(e, hidden);
      avg += 0.5 * (dist.count(truth) ? dist.at(truth) : 0.0);
    }
    CHECK(avg == doctest::Approx(predicted_confidence(m, ConfidenceModel::PerHypothesis))
                     .epsilon(1e-12));
  }
}

TEST_CASE("sampled confidence converges to the per-hypothesis prediction") {
  for (double m : {0.0, 0.5, 0.969, 1.0}) {
    const Ensemble e = noisy_bell_ensemble(m);
    RandomStream base(8675309, 0);
    const long trials = 100000;
    long correct = 0;
    for (long t = 0; t < trials; ++t) {
      RandomStream s = base.substream(static_cast<std::uint64_t>(t));
      const HiddenMeasurement hidden = t % 2 == 0 ? HiddenMeasurement::S : HiddenMeasurement::T;
      const Decision truth = hidden == HiddenMeasurement::S ? Decision::S : Decision::T;
      if (run_measurement_qpd_sample(e, hidden, s) == truth) ++correct;
    }
    const double freq = static_cast<double>(correct) / trials;
    const double p = predicted_confidence(m, ConfidenceModel::PerHypothesis);
    const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / trials);
    CHECK(std::abs(freq - p) <= 3 * sigma + 1e-9);
  }
}

TEST_CASE("summarize computes binomial statistics") {
  std::vector<std::pair<Decision, Decision>> all_correct(1000, {Decision::S, Decision::S});
  const TrialSummary s = summarize(all_correct);
  CHECK(s.confidence == 1.0);
  CHECK(s.std_error == 0.0);

  std::vector<std::pair<Decision, Decision>> half;
  for (int i = 0; i < 50; ++i) half.emplace_back(Decision::S, Decision::S);
  for (int i = 0; i < 50; ++i) half.emplace_back(Decision::S, Decision::T);
  const TrialSummary hs = summarize(half);
  CHECK(hs.confidence == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hs.std_error == doctest::Approx(0.05).epsilon(1e-12));
  REQUIRE(hs.breakdown.size() == 1);
  CHECK(hs.breakdown[0].confidence == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(summarize({}), EmptyInputError);
}
