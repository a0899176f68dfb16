#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "qpd/errors.hpp"
#include "qpd/experiment.hpp"
#include "qpd/tensor.hpp"

using namespace qpd;

namespace {

ExperimentConfig make_config(const Json& extra) {
  Json j = extra;
  return parse_config(j);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_config(Json::object()), ConfigError);
  CHECK_THROWS_AS(parse_config({{"protocol", "nope"}}), ConfigError);
  CHECK_THROWS_AS(parse_config({{"protocol", "measurement_qpd"}, {"bogus", 1}}), ConfigError);
  CHECK_THROWS_AS(parse_config({{"protocol", "measurement_qpd"}, {"mode", "dream"}}), ConfigError);
  CHECK_THROWS_AS(parse_config({{"protocol", "measurement_qpd"}, {"visibility", 1.5}}), ConfigError);
  CHECK_THROWS_AS(parse_config({{"protocol", "measurement_qpd"}, {"trials", 0}}), ConfigError);
  const ExperimentConfig c = make_config({{"protocol", "measurement_qpd"}, {"n", 3}});
  CHECK(c.n == 3);
  CHECK(c.mode == "exact");
}

TEST_CASE("exact measurement QPD reports unit confidence") {
  const Json report = run(make_config({{"protocol", "measurement_qpd"}, {"n", 2}}));
  CHECK(report["summary"]["confidence"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report["results"]["S"]["confidence"].get<double>() >= 1.0 - 1e-10);
  CHECK(report["results"]["T"]["confidence"].get<double>() >= 1.0 - 1e-10);
}

TEST_CASE("exact locc_fock histogram matches the derived distribution") {
  const Json report = run(make_config({{"protocol", "locc_fock"}}));
  const auto& hist = report["results"]["J"]["histogram"];
  std::map<std::string, double> values;
  for (const auto& row : hist) values[row["pattern"].get<std::string>()] = row["value"].get<double>();
  CHECK(values.at("A+2") == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(values.at("A-2") == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(values.at("B+2") == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(values.at("B-2") == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(values.at("A+1B+1") == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(values.at("A-1B-1") == doctest::Approx(0.25).epsilon(1e-10));
  double total = 0.0;
  for (const auto& [k, v] : values) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("histogram probabilities sum to 1 per hidden value in exact mode") {
  for (const char* protocol :
       {"measurement_qpd", "unitary_qpd_entangled", "unitary_qpd_unentangled", "locc_fock"}) {
    const Json report = run(make_config({{"protocol", protocol}}));
    for (const auto& [hidden, r] : report["results"].items()) {
      double total = 0.0;
      for (const auto& row : r["histogram"]) total += row["value"].get<double>();
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("sampled noisy run lands within 3 sigma of the prediction") {
  const Json report = run(make_config({{"protocol", "measurement_qpd"},
                                       {"n", 2},
                                       {"visibility", 0.969},
                                       {"trials", 100000},
                                       {"seed", 7},
                                       {"mode", "sample"}}));
  const double freq = report["summary"]["confidence"].get<double>();
  const double p = 0.99225;
  const double sigma = std::sqrt(p * (1 - p) / 100000.0);
  CHECK(std::abs(freq - p) <= 3 * sigma);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  const Json base = Json{{"protocol", "measurement_qpd"},
                         {"n", 2},
                         {"visibility", 0.9},
                         {"trials", 20000},
                         {"seed", 1234},
                         {"mode", "sample"}};
  const std::string once = run(parse_config(base)).dump();
  const std::string twice = run(parse_config(base)).dump();
  CHECK(once == twice);
  Json threaded = base;
  threaded["threads"] = 4;
  Json t = run(parse_config(threaded));
  // The thread count is echoed in the config block; results must not differ.
  CHECK(t["results"].dump() == run(parse_config(base))["results"].dump());
  CHECK(t["summary"].dump() == run(parse_config(base))["summary"].dump());
}

TEST_CASE("visibility is rejected where the model does not apply") {
  CHECK_THROWS_AS(run(make_config({{"protocol", "measurement_qpd"}, {"n", 3}, {"visibility", 0.9}})),
                  ConfigError);
  CHECK_THROWS_AS(run(make_config({{"protocol", "locc_fock"}, {"visibility", 0.9}})), ConfigError);
  CHECK_THROWS_AS(run(make_config({{"protocol", "pauli_entangled"}, {"visibility", 0.9}})),
                  ConfigError);
}

TEST_CASE("pauli protocols are exact for every hidden value") {
  for (const char* protocol : {"pauli_unentangled", "pauli_entangled"}) {
    const Json report = run(make_config({{"protocol", protocol}}));
    for (const auto& [hidden, r] : report["results"].items())
      CHECK(r["confidence"].get<double>() == 1.0);
    CHECK(report["results"].size() == 4);
  }
}

TEST_CASE("unentangled scheme honors the flip probability flag") {
  const Json report = run(make_config(
      {{"protocol", "unitary_qpd_unentangled"}, {"flip_probability", 0.25}}));
  CHECK(report["results"]["sigma_z"]["confidence"].get<double>() ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("hom_scan emits the configured grid") {
  const Json report = run(make_config({{"protocol", "hom_scan"}}));
  const auto& scan = report["results"]["scan"];
  REQUIRE(scan.size() == 21);
  CHECK(scan[0]["m"].get<double>() == 0.0);
  CHECK(scan[0]["coincidence_probability"].get<double>() == 0.5);
  CHECK(scan[20]["m"].get<double>() == 1.0);
  CHECK(scan[20]["coincidence_probability"].get<double>() == 0.0);
}

TEST_CASE("plan protocol reports uses and probe") {
  const Json report =
      run(make_config({{"protocol", "plan"}, {"plan_a", "z"}, {"plan_b", "h"}}));
  CHECK(report["results"]["plan"]["uses"].get<int>() == 2);
  CHECK(report["results"]["plan"]["achieved_overlap"].get<double>() <= 1e-8);
  CHECK_THROWS_AS(run(make_config({{"protocol", "plan"}, {"plan_a", "h"}, {"plan_b", "h"}})),
                  IndistinguishableError);
}

TEST_CASE("named and file operators round-trip through the JSON format") {
  CHECK((load_operator("h") - gates::hadamard()).cwiseAbs().maxCoeff() == 0.0);
  const Matrix y = gates::sigma_y();
  const Json j = operator_to_json(y);
  CHECK((parse_operator_json(j) - y).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(load_operator("/nonexistent/path.json"), ConfigError);
}

TEST_CASE("CSV emission covers the exact histogram") {
  const Json report = run(make_config({{"protocol", "measurement_qpd"}, {"n", 2}}));
  const std::string csv = report_to_csv(report);
  CHECK(csv.find("hidden,pattern,value\n") == 0);
  std::map<std::string, double> rows;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto last = line.rfind(',');
    rows[line.substr(0, last)] = std::stod(line.substr(last + 1));
  }
  REQUIRE(rows.size() == 4);
  CHECK(rows.at("S,+-") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows.at("S,-+") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows.at("T,++") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows.at("T,--") == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("list_protocols catalogs all eight protocols") {
  const Json catalog = list_protocols();
  REQUIRE(catalog["protocols"].size() == 8);
  bool found = false;
  for (const auto& entry : catalog["protocols"])
    if (entry["name"] == "measurement_qpd") found = true;
  CHECK(found);
}
