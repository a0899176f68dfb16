#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qpd/types.hpp"

namespace qpd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Declarative run description. Unknown keys are rejected; protocol-specific
// fields are validated before execution.
struct ExperimentConfig {
  std::string protocol;
  std::string hidden = "both";
  int n = 2;
  double visibility = 1.0;
  double flip_probability = 0.0;  // unentangled single-qubit scheme only
  long trials = 10000;
  std::uint64_t seed = 0;
  std::string mode = "exact";
  int threads = 1;
  std::string input = "A:2,B:1";  // locc_fock preparation
  double hom_min = 0.0;
  double hom_max = 1.0;
  int hom_points = 21;
  std::string plan_a = "z";
  std::string plan_b = "h";
  std::string format = "json";
  std::string out;  // empty -> stdout
};

ExperimentConfig parse_config(const Json& j);
Json config_to_json(const ExperimentConfig& c);

// Named single-qubit unitary (i, x, y, z, h) or a JSON file holding an
// array-of-arrays of [re, im] pairs, row-major.
Matrix load_operator(const std::string& name_or_path);
Matrix parse_operator_json(const Json& j);
Json operator_to_json(const Matrix& m);

Json run(const ExperimentConfig& config);

Json list_protocols();

// Serializes the report; returns bytes written. format: json|csv. Empty path
// writes to stdout.
std::size_t emit(const Json& report, const std::string& format, const std::string& path);
std::string report_to_csv(const Json& report);

}  // namespace qpd
