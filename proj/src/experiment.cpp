#include "qpd/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "qpd/errors.hpp"
#include "qpd/fock.hpp"
#include "qpd/noise.hpp"
#include "qpd/protocols.hpp"

namespace qpd {

namespace {

const std::set<std::string> kProtocols = {
    "measurement_qpd",   "unitary_qpd_entangled", "unitary_qpd_unentangled",
    "pauli_unentangled", "pauli_entangled",       "locc_fock",
    "hom_scan",          "plan"};

const std::set<std::string> kKnownKeys = {
    "protocol", "hidden",     "n",       "visibility", "flip_probability",
    "trials",   "seed",       "mode",    "threads",    "input",
    "hom_min",  "hom_max",    "hom_points", "plan_a",  "plan_b",
    "format",   "out"};

std::string pattern_string(const OutcomePattern& p) {
  std::string s;
  for (int e : p) s += e == +1 ? '+' : '-';
  return s;
}

std::string pattern_string(const fock::DetectorPattern& p) {
  static const char* names[4] = {"A+", "A-", "B+", "B-"};
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (p[i] > 0) s += std::string(names[i]) + std::to_string(p[i]);
  return s.empty() ? "vac" : s;
}

Json resources_json(const Resources& r) {
  Json j;
  j["unknown_uses"] = r.unknown_uses;
  j["ebits"] = r.ebits;
  j["known_unitaries"] = r.known_unitaries;
  return j;
}

struct TrialOutcome {
  Decision decision = Decision::Inconclusive;
  std::string pattern;
};

using TrialFn = std::function<TrialOutcome(RandomStream&)>;

// Per-trial substreams make results independent of the thread partition.
std::vector<TrialOutcome> run_trials(long trials, int threads, const RandomStream& base,
                                     const TrialFn& fn) {
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  auto worker = [&](long lo, long hi) {
    for (long t = lo; t < hi; ++t) {
      RandomStream s = base.substream(static_cast<std::uint64_t>(t));
      out[static_cast<std::size_t>(t)] = fn(s);
    }
  };
  if (threads <= 1) {
    worker(0, trials);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (trials + threads - 1) / threads;
    for (int i = 0; i < threads; ++i) {
      const long lo = i * chunk;
      const long hi = std::min(trials, lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

Json histogram_json(const std::map<std::string, double>& hist) {
  Json arr = Json::array();
  for (const auto& [pattern, value] : hist) {
    Json row;
    row["pattern"] = pattern;
    row["value"] = value;
    arr.push_back(row);
  }
  return arr;
}

Json decisions_json(const DecisionDistribution& dist) {
  Json j;
  for (const auto& [d, p] : dist) j[decision_name(d)] = p;
  return j;
}

struct HiddenResult {
  Json json;
  double confidence = 0.0;          // exact mode
  std::vector<TrialOutcome> trials;  // sample mode
  Decision truth = Decision::Inconclusive;
};

struct ProtocolDriver {
  std::vector<std::string> hidden_values;
  std::function<Decision(const std::string&)> truth;
  // exact: (hidden) -> decision distribution + pattern histogram
  std::function<std::pair<DecisionDistribution, std::map<std::string, double>>(
      const std::string&)>
      exact;
  std::function<TrialOutcome(const std::string&, RandomStream&)> sample;
  Resources resources;
};

HiddenMeasurement parse_hidden_meas(const std::string& h) {
  if (h == "S" || h == "s") return HiddenMeasurement::S;
  if (h == "T" || h == "t") return HiddenMeasurement::T;
  throw ConfigError("hidden must be S, T, or both");
}

HiddenUnitary parse_hidden_unitary(const std::string& h) {
  if (h == "sigma_z" || h == "z") return HiddenUnitary::SigmaZ;
  if (h == "hadamard" || h == "h") return HiddenUnitary::Hadamard;
  throw ConfigError("hidden must be sigma_z, hadamard, or both");
}

Pauli parse_hidden_pauli(const std::string& h) {
  if (h == "i") return Pauli::I;
  if (h == "x") return Pauli::X;
  if (h == "y") return Pauli::Y;
  if (h == "z") return Pauli::Z;
  throw ConfigError("hidden must be one of i, x, y, z, or both");
}

std::pair<int, int> parse_fock_input(const std::string& input) {
  // "A:<label>,B:<label>"
  int a = -1, b = -1;
  if (std::sscanf(input.c_str(), "A:%d,B:%d", &a, &b) != 2)
    throw ConfigError("locc_fock input must look like \"A:2,B:1\"");
  if (a < 0 || a > 5 || b < 0 || b > 5)
    throw ConfigError("local labels must lie in 0..5");
  return {a, b};
}

std::map<std::string, double> qubit_histogram(const OutcomeDistribution& dist) {
  std::map<std::string, double> h;
  for (const auto& [pattern, p] : dist) h[pattern_string(pattern)] += p;
  return h;
}

ProtocolDriver measurement_qpd_driver(const ExperimentConfig& c) {
  if (c.n < 2 || c.n > 6) throw ConfigError("measurement_qpd requires n in 2..6");
  if (c.visibility != 1.0 && c.n != 2)
    throw ConfigError("visibility noise is modeled for n=2 only");
  const bool noisy = c.visibility != 1.0;
  ProtocolDriver d;
  d.hidden_values = {"S", "T"};
  d.truth = [](const std::string& h) {
    return parse_hidden_meas(h) == HiddenMeasurement::S ? Decision::S : Decision::T;
  };
  const int n = c.n;
  const double m = c.visibility;
  d.exact = [n, noisy, m](const std::string& h) {
    const auto hidden = parse_hidden_meas(h);
    const double theta = hidden == HiddenMeasurement::S ? 0.0 : critical_angle(n);
    std::vector<ObservableAxis> axes(static_cast<std::size_t>(n), ObservableAxis{theta});
    OutcomeDistribution dist = noisy ? measure_exact(noisy_bell_ensemble(m), axes)
                                     : measure_exact(w_state(n), axes);
    DecisionDistribution dd;
    for (const auto& [pattern, p] : dist) dd[decide_measurement_qpd(pattern)] += p;
    return std::make_pair(dd, qubit_histogram(dist));
  };
  d.sample = [n, noisy, m](const std::string& h, RandomStream& s) {
    const auto hidden = parse_hidden_meas(h);
    const double theta = hidden == HiddenMeasurement::S ? 0.0 : critical_angle(n);
    std::vector<ObservableAxis> axes(static_cast<std::size_t>(n), ObservableAxis{theta});
    const OutcomePattern pattern = noisy ? measure_sample(noisy_bell_ensemble(m), axes, s)
                                         : measure_sample(w_state(n), axes, s);
    return TrialOutcome{decide_measurement_qpd(pattern), pattern_string(pattern)};
  };
  d.resources = measurement_qpd_resources(c.n);
  return d;
}

ProtocolDriver unitary_entangled_driver(const ExperimentConfig& c) {
  const bool noisy = c.visibility != 1.0;
  const double m = c.visibility;
  ProtocolDriver d;
  d.hidden_values = {"sigma_z", "hadamard"};
  d.truth = [](const std::string& h) {
    return parse_hidden_unitary(h) == HiddenUnitary::SigmaZ ? Decision::SigmaZ
                                                            : Decision::Hadamard;
  };
  d.exact = [noisy, m](const std::string& h) {
    const auto hidden = parse_hidden_unitary(h);
    const Ensemble prepared =
        noisy ? noisy_bell_ensemble(m)
              : Ensemble{{{1.0, bell_psi_plus()}}};
    const Matrix g = hidden == HiddenUnitary::SigmaZ ? gates::sigma_z() : gates::hadamard();
    Ensemble evolved;
    const Matrix gg = kron(g, g);
    for (const auto& [w, state] : prepared.components) evolved.components.emplace_back(w, gg * state);
    OutcomeDistribution dist = measure_exact(evolved, {z_axis(), z_axis()});
    DecisionDistribution dd;
    for (const auto& [pattern, p] : dist)
      dd[pattern[0] != pattern[1] ? Decision::SigmaZ : Decision::Hadamard] += p;
    return std::make_pair(dd, qubit_histogram(dist));
  };
  d.sample = [noisy, m](const std::string& h, RandomStream& s) {
    const auto hidden = parse_hidden_unitary(h);
    const Ensemble prepared =
        noisy ? noisy_bell_ensemble(m) : Ensemble{{{1.0, bell_psi_plus()}}};
    const Decision dec = run_unitary_qpd_entangled_sample(prepared, hidden, s);
    return TrialOutcome{dec, decision_name(dec)};
  };
  d.resources = unitary_qpd_entangled_resources();
  return d;
}

ProtocolDriver unitary_unentangled_driver(const ExperimentConfig& c) {
  if (c.visibility != 1.0)
    throw ConfigError("the unentangled scheme is modeled without visibility noise");
  const double flip = c.flip_probability;
  if (flip < 0.0 || flip > 1.0) throw ConfigError("flip_probability must lie in [0, 1]");
  ProtocolDriver d;
  d.hidden_values = {"sigma_z", "hadamard"};
  d.truth = [](const std::string& h) {
    return parse_hidden_unitary(h) == HiddenUnitary::SigmaZ ? Decision::SigmaZ
                                                            : Decision::Hadamard;
  };
  d.exact = [flip](const std::string& h) {
    const auto hidden = parse_hidden_unitary(h);
    DecisionDistribution ideal = run_unitary_qpd_unentangled_exact(hidden);
    DecisionDistribution dd;
    std::map<std::string, double> hist;
    for (const auto& [dec, p] : ideal) {
      const Decision other = dec == Decision::SigmaZ ? Decision::Hadamard : Decision::SigmaZ;
      dd[dec] += p * (1.0 - flip);
      if (flip > 0.0) dd[other] += p * flip;
      hist[dec == Decision::SigmaZ ? "+" : "-"] += p * (1.0 - flip);
      if (flip > 0.0) hist[dec == Decision::SigmaZ ? "-" : "+"] += p * flip;
    }
    return std::make_pair(dd, hist);
  };
  d.sample = [flip](const std::string& h, RandomStream& s) {
    const auto hidden = parse_hidden_unitary(h);
    Decision dec = run_unitary_qpd_unentangled_sample(hidden, s);
    if (flip > 0.0 && s.next_uniform() < flip)
      dec = dec == Decision::SigmaZ ? Decision::Hadamard : Decision::SigmaZ;
    return TrialOutcome{dec, dec == Decision::SigmaZ ? "+" : "-"};
  };
  d.resources = unitary_qpd_unentangled_resources();
  return d;
}

ProtocolDriver pauli_driver(const ExperimentConfig& c, bool entangled) {
  if (c.visibility != 1.0) throw ConfigError("pauli schemes are modeled noiselessly");
  ProtocolDriver d;
  d.hidden_values = {"i", "x", "y", "z"};
  d.truth = [](const std::string& h) { return pauli_decision(parse_hidden_pauli(h)); };
  d.exact = [entangled](const std::string& h) {
    const Pauli hidden = parse_hidden_pauli(h);
    const Pauli found = entangled ? discriminate_pauli_entangled(hidden)
                                  : discriminate_pauli_unentangled(hidden);
    DecisionDistribution dd{{pauli_decision(found), 1.0}};
    std::map<std::string, double> hist{{decision_name(pauli_decision(found)), 1.0}};
    return std::make_pair(dd, hist);
  };
  d.sample = [entangled](const std::string& h, RandomStream&) {
    const Pauli hidden = parse_hidden_pauli(h);
    const Pauli found = entangled ? discriminate_pauli_entangled(hidden)
                                  : discriminate_pauli_unentangled(hidden);
    return TrialOutcome{pauli_decision(found), decision_name(pauli_decision(found))};
  };
  d.resources = entangled ? pauli_entangled_resources() : pauli_unentangled_resources();
  return d;
}

ProtocolDriver locc_fock_driver(const ExperimentConfig& c) {
  if (c.visibility != 1.0)
    throw ConfigError("the Fock scheme is modeled without visibility noise");
  const auto [la, lb] = parse_fock_input(c.input);
  const auto [ah, av] = fock::label_occupation(la);
  const auto [bh, bv] = fock::label_occupation(lb);
  if (ah + av + bh + bv != 2)
    throw ConfigError("the LOCC decision rule expects a two-photon input");
  ProtocolDriver d;
  d.hidden_values = {"identity", "J"};
  d.truth = [](const std::string& h) {
    if (h == "identity" || h == "I") return Decision::IdentityOp;
    if (h == "J") return Decision::JOp;
    throw ConfigError("hidden must be identity, J, or both");
  };
  auto evolve = [la = la, lb = lb](const std::string& h) {
    const Matrix op = (h == "J") ? fock::build_J() : fock::build_I();
    return Vector(op * fock::local_state(la, lb));
  };
  d.exact = [evolve](const std::string& h) {
    const Vector out = evolve(h);
    DecisionDistribution dd;
    std::map<std::string, double> hist;
    for (const auto& [pattern, p] : fock::detector_distribution(out)) {
      dd[fock::decide_locc(pattern)] += p;
      hist[pattern_string(pattern)] += p;
    }
    return std::make_pair(dd, hist);
  };
  d.sample = [evolve](const std::string& h, RandomStream& s) {
    const Vector out = evolve(h);
    const auto dist = fock::detector_distribution(out);
    double r = s.next_uniform();
    double acc = 0.0;
    for (const auto& [pattern, p] : dist) {
      acc += p;
      if (r < acc) return TrialOutcome{fock::decide_locc(pattern), pattern_string(pattern)};
    }
    const auto& last = *dist.rbegin();
    return TrialOutcome{fock::decide_locc(last.first), pattern_string(last.first)};
  };
  d.resources = Resources{1, 0, 0};
  return d;
}

Json run_driver(const ExperimentConfig& c, const ProtocolDriver& d) {
  std::vector<std::string> hiddens;
  if (c.hidden == "both" || c.hidden == "all")
    hiddens = d.hidden_values;
  else
    hiddens = {c.hidden};
  for (const auto& h : hiddens) d.truth(h);  // validates the label

  Json results;
  std::vector<std::pair<Decision, Decision>> all_trials;
  double exact_confidence = 0.0;
  const bool exact = c.mode == "exact";
  for (std::size_t hi = 0; hi < hiddens.size(); ++hi) {
    const std::string& h = hiddens[hi];
    const Decision truth = d.truth(h);
    Json r;
    if (exact) {
      auto [dd, hist] = d.exact(h);
      r["decisions"] = decisions_json(dd);
      r["histogram"] = histogram_json(hist);
      const double p_correct = dd.count(truth) ? dd.at(truth) : 0.0;
      r["confidence"] = p_correct;
      exact_confidence += p_correct / static_cast<double>(hiddens.size());
    } else {
      RandomStream base(c.seed, mix64(hi));
      const auto outcomes =
          run_trials(c.trials, c.threads, base,
                     [&](RandomStream& s) { return d.sample(h, s); });
      DecisionDistribution counts;
      std::map<std::string, double> hist;
      long correct = 0;
      for (const auto& o : outcomes) {
        counts[o.decision] += 1.0;
        hist[o.pattern] += 1.0 / static_cast<double>(c.trials);
        if (o.decision == truth) ++correct;
        all_trials.emplace_back(truth, o.decision);
      }
      r["decisions"] = decisions_json(counts);
      r["histogram"] = histogram_json(hist);
      r["confidence"] =
          static_cast<double>(correct) / static_cast<double>(c.trials);
    }
    results[h] = r;
  }

  Json report;
  report["version"] = kVersion;
  report["config"] = config_to_json(c);
  report["resources"] = resources_json(d.resources);
  report["results"] = results;
  Json summary;
  if (exact) {
    summary["confidence"] = exact_confidence;
    summary["std_error"] = 0.0;
  } else {
    const TrialSummary s = summarize(all_trials);
    summary["trials"] = s.trials;
    summary["correct"] = s.correct;
    summary["confidence"] = s.confidence;
    summary["std_error"] = s.std_error;
  }
  report["summary"] = summary;
  return report;
}

Json run_hom_scan(const ExperimentConfig& c) {
  if (c.hom_points < 2) throw ConfigError("hom_points must be at least 2");
  if (c.hom_min < 0.0 || c.hom_max > 1.0 || c.hom_min > c.hom_max)
    throw ConfigError("hom grid must satisfy 0 <= hom_min <= hom_max <= 1");
  Json scan = Json::array();
  for (int i = 0; i < c.hom_points; ++i) {
    const double m =
        c.hom_min + (c.hom_max - c.hom_min) * static_cast<double>(i) /
                        static_cast<double>(c.hom_points - 1);
    Json row;
    row["m"] = m;
    row["coincidence_probability"] = fock::hom_coincidence(m);
    scan.push_back(row);
  }
  Json report;
  report["version"] = kVersion;
  report["config"] = config_to_json(c);
  report["results"]["scan"] = scan;
  return report;
}

Json run_plan(const ExperimentConfig& c) {
  const Matrix a = load_operator(c.plan_a);
  const Matrix b = load_operator(c.plan_b);
  DiscriminationPlan plan;
  try {
    plan = plan_parallel_discrimination(a, b);
  } catch (const IndistinguishableError&) {
    throw;  // surfaced with exit code 3 by the CLI
  }
  Json report;
  report["version"] = kVersion;
  report["config"] = config_to_json(c);
  Json p;
  p["uses"] = plan.uses;
  p["achieved_overlap"] = plan.achieved_overlap;
  Json probe = Json::array();
  for (const auto& comp : plan.probe) {
    Json row;
    row["counts"] = comp.counts;
    row["phase"] = comp.phase;
    row["weight"] = comp.weight;
    probe.push_back(row);
  }
  p["probe"] = probe;
  report["results"]["plan"] = p;
  return report;
}

}  // namespace

ExperimentConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKnownKeys.count(key)) throw ConfigError("unknown config key: " + key);
  ExperimentConfig c;
  try {
    c.protocol = j.at("protocol").get<std::string>();
  } catch (const Json::exception&) {
    throw ConfigError("config requires a \"protocol\" string");
  }
  if (!kProtocols.count(c.protocol)) throw ConfigError("unknown protocol: " + c.protocol);
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) {
      try {
        field = j.at(key).get<std::decay_t<decltype(field)>>();
      } catch (const Json::exception&) {
        throw ConfigError(std::string("bad value for config key: ") + key);
      }
    }
  };
  get("hidden", c.hidden);
  get("n", c.n);
  get("visibility", c.visibility);
  get("flip_probability", c.flip_probability);
  get("trials", c.trials);
  get("seed", c.seed);
  get("mode", c.mode);
  get("threads", c.threads);
  get("input", c.input);
  get("hom_min", c.hom_min);
  get("hom_max", c.hom_max);
  get("hom_points", c.hom_points);
  get("plan_a", c.plan_a);
  get("plan_b", c.plan_b);
  get("format", c.format);
  get("out", c.out);
  if (c.mode != "exact" && c.mode != "sample")
    throw ConfigError("mode must be exact or sample");
  if (c.format != "json" && c.format != "csv")
    throw ConfigError("format must be json or csv");
  if (c.visibility < 0.0 || c.visibility > 1.0)
    throw ConfigError("visibility must lie in [0, 1]");
  if (c.trials < 1) throw ConfigError("trials must be positive");
  if (c.threads < 1) throw ConfigError("threads must be positive");
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["protocol"] = c.protocol;
  j["hidden"] = c.hidden;
  j["n"] = c.n;
  j["visibility"] = c.visibility;
  j["flip_probability"] = c.flip_probability;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["mode"] = c.mode;
  j["threads"] = c.threads;
  j["input"] = c.input;
  j["hom_min"] = c.hom_min;
  j["hom_max"] = c.hom_max;
  j["hom_points"] = c.hom_points;
  j["plan_a"] = c.plan_a;
  j["plan_b"] = c.plan_b;
  return j;
}

Matrix parse_operator_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("operator JSON must be an array of rows");
  const std::size_t dim = j.size();
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || row.size() != dim)
      throw ConfigError("operator JSON must be square, row-major");
    for (std::size_t cidx = 0; cidx < dim; ++cidx) {
      const auto& e = row.at(cidx);
      if (!e.is_array() || e.size() != 2)
        throw ConfigError("operator entries must be [re, im] pairs");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) =
          Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

Json operator_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Matrix load_operator(const std::string& name_or_path) {
  if (name_or_path == "i") return gates::identity(2);
  if (name_or_path == "x") return gates::sigma_x();
  if (name_or_path == "y") return gates::sigma_y();
  if (name_or_path == "z") return gates::sigma_z();
  if (name_or_path == "h") return gates::hadamard();
  std::ifstream in(name_or_path);
  if (!in) throw ConfigError("cannot open operator file: " + name_or_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ConfigError("bad operator JSON in " + name_or_path + ": " + e.what());
  }
  return parse_operator_json(j);
}

Json run(const ExperimentConfig& c) {
  if (c.protocol == "measurement_qpd") return run_driver(c, measurement_qpd_driver(c));
  if (c.protocol == "unitary_qpd_entangled") return run_driver(c, unitary_entangled_driver(c));
  if (c.protocol == "unitary_qpd_unentangled")
    return run_driver(c, unitary_unentangled_driver(c));
  if (c.protocol == "pauli_unentangled") return run_driver(c, pauli_driver(c, false));
  if (c.protocol == "pauli_entangled") return run_driver(c, pauli_driver(c, true));
  if (c.protocol == "locc_fock") return run_driver(c, locc_fock_driver(c));
  if (c.protocol == "hom_scan") return run_hom_scan(c);
  if (c.protocol == "plan") return run_plan(c);
  throw ConfigError("unknown protocol: " + c.protocol);
}

Json list_protocols() {
  auto entry = [](const char* name, const char* scheme, const Resources& r) {
    Json e;
    e["name"] = name;
    e["scheme"] = scheme;
    e["resources"] = resources_json(r);
    return e;
  };
  Json arr = Json::array();
  arr.push_back(entry("measurement_qpd",
                      "entanglement-assisted discrimination of two measurement axes via the "
                      "n-qubit W state",
                      measurement_qpd_resources(2)));
  arr.push_back(entry("unitary_qpd_entangled",
                      "entanglement-assisted discrimination of sigma_z vs Hadamard on |psi+>",
                      unitary_qpd_entangled_resources()));
  arr.push_back(entry("unitary_qpd_unentangled",
                      "single-qubit U sigma_z U probe separating sigma_z from Hadamard",
                      unitary_qpd_unentangled_resources()));
  arr.push_back(entry("pauli_unentangled",
                      "two unentangled probes identifying a hidden Pauli",
                      pauli_unentangled_resources()));
  arr.push_back(entry("pauli_entangled",
                      "Bell-measurement identification of a hidden Pauli in one use",
                      pauli_entangled_resources()));
  arr.push_back(entry("locc_fock",
                      "LOCC discrimination of the bipartite linear-optical J from the identity",
                      Resources{1, 0, 0}));
  arr.push_back(entry("hom_scan",
                      "two-photon coincidence probability versus indistinguishability",
                      Resources{}));
  arr.push_back(entry("plan",
                      "minimal parallel uses and probe for an arbitrary unitary pair",
                      Resources{}));
  Json out;
  out["version"] = kVersion;
  out["protocols"] = arr;
  return out;
}

std::string report_to_csv(const Json& report) {
  std::ostringstream csv;
  const auto& results = report.at("results");
  if (results.contains("scan")) {
    csv << "m,coincidence_probability\n";
    for (const auto& row : results.at("scan"))
      csv << row.at("m").dump() << "," << row.at("coincidence_probability").dump() << "\n";
  } else if (results.contains("plan")) {
    csv << "component,weight,phase\n";
    const auto& probe = results.at("plan").at("probe");
    for (std::size_t i = 0; i < probe.size(); ++i)
      csv << i << "," << probe.at(i).at("weight").dump() << ","
          << probe.at(i).at("phase").dump() << "\n";
  } else {
    csv << "hidden,pattern,value\n";
    for (const auto& [hidden, r] : results.items())
      for (const auto& row : r.at("histogram"))
        csv << hidden << "," << row.at("pattern").get<std::string>() << ","
            << row.at("value").dump() << "\n";
  }
  return csv.str();
}

std::size_t emit(const Json& report, const std::string& format, const std::string& path) {
  std::string payload;
  if (format == "json") {
    payload = report.dump(2);
    payload += '\n';
  } else if (format == "csv") {
    payload = report_to_csv(report);
  } else {
    throw ConfigError("format must be json or csv");
  }
  if (path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output path: " + path);
    out << payload;
    if (!out) throw Error("write failed: " + path);
  }
  return payload.size();
}

}  // namespace qpd
