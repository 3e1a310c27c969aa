#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "g2coh/dataset_io.hpp"
#include "g2coh/figures.hpp"
#include "g2coh/run_config.hpp"

using namespace g2coh;
namespace fs = std::filesystem;
using Catch::Matchers::WithinAbs;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("g2coh_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("shortest round-trip number format", "[io]") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(5e14) == "5e+14");
  CHECK(format_double(1e-12) == "1e-12");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()).empty());
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int k = 0; k < 1000; ++k) {
    const double v = std::ldexp(mantissa(rng), exponent(rng));
    const auto rows = parse_csv(to_csv("tau", {DatasetRow{v, v, v, v, {v, v, v, v, v, v}, ""}}));
    CHECK(rows.at(0).g2 == v);
  }
}

TEST_CASE("CSV schema and round trip", "[io]") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::vector<DatasetRow> rows{
      {-1e-12, 0.5, 8.0, 16.0, {1.0, 0.25, 0.5, 0.125, nan, 1.0}, ""},
      {0.0, nan, 0.0, 0.0, {nan, nan, nan, nan, nan, nan}, "DenominatorNearZero|NumeratorNearZero"},
  };
  const std::string text = to_csv("tau", rows);
  CHECK(text.rfind("axis_name,axis_value,g2,num,den,absJ1,absJ2,absJ3,absJ4,absJ5,absJ6,flags\n", 0) == 0);
  CHECK(text.find("tau,-1e-12,0.5,8,16,1,0.25,0.5,0.125,,1,\n") != std::string::npos);
  std::string axis;
  const auto back = parse_csv(text, &axis);
  CHECK(axis == "tau");
  REQUIRE(back.size() == 2);
  CHECK(back[0].abs_j[3] == 0.125);
  CHECK(std::isnan(back[0].abs_j[4]));
  CHECK(std::isnan(back[1].g2));
  CHECK(back[1].flags == "DenominatorNearZero|NumeratorNearZero");
  CHECK(to_csv("tau", back) == text);
  CHECK_THROWS_AS(parse_csv("a,b\n1,2\n"), ConfigError);
}

TEST_CASE("config defaults", "[config]") {
  const RunConfig c;
  CHECK(c.scenario.omega0 == 5e14);
  CHECK(c.scenario.delta == 1e12);
  CHECK(c.scenario.omegad == 4.5e14);
  CHECK(c.scenario.gamma == 1e12);
  CHECK(c.scenario.taup == 0.0);
  CHECK(c.scenario.tau == 0.0);
  CHECK(c.method == OverlapMethod::ClosedForm);
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("config fields from text", "[config]") {
  RunConfig c;
  apply_field(c, "model", "lorentzian");
  CHECK(c.scenario.photon_model == SpectralModel::LorentzianCausal);
  CHECK(c.scenario.detector_model == SpectralModel::LorentzianCausal);
  apply_field(c, "detector_model", "gaussian");
  CHECK(c.scenario.detector_model == SpectralModel::Gaussian);
  apply_field(c, "taup", "2.5e-12");
  CHECK(c.scenario.taup == 2.5e-12);
  apply_field(c, "lock_taup", "true");
  CHECK(c.lock_taup);
  apply_field(c, "seed", "18446744073709551615");
  CHECK(c.seed == 18446744073709551615ULL);
  CHECK_THROWS_AS(apply_field(c, "gamma", "1e12x"), ConfigError);
  CHECK_THROWS_AS(apply_field(c, "gamma", "inf"), ConfigError);
  CHECK_THROWS_AS(apply_field(c, "points", "-3"), ConfigError);
  CHECK_THROWS_AS(apply_field(c, "method", "magic"), ConfigError);
  CHECK_THROWS_AS(apply_field(c, "colour", "red"), ConfigError);
}

TEST_CASE("JSON config", "[config]") {
  const RunConfig c = config_from_json(R"({"detector_model": "gaussian", "model": "lorentzian", "tau": 1e-12,
                                           "points": 11, "method": "quadrature"})");
  CHECK(c.scenario.photon_model == SpectralModel::LorentzianCausal);
  CHECK(c.scenario.detector_model == SpectralModel::Gaussian);
  CHECK(c.scenario.tau == 1e-12);
  CHECK(c.points == 11);
  CHECK(c.method == OverlapMethod::Quadrature);
  CHECK(c.scenario.omega0 == 5e14);

  CHECK_THROWS_AS(config_from_json("{not json"), ConfigError);
  CHECK_THROWS_AS(config_from_json("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"omega": 1})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"gamma": [1]})"), ConfigError);
  CHECK_THROWS_AS(validate(config_from_json(R"({"gamma": -1})")), ConfigError);
}

TEST_CASE("config JSON round trip", "[config]") {
  RunConfig c;
  c.scenario = ScenarioSpec::uniform(SpectralModel::LorentzianCausal, 5.1e14, 1.1e12, 3e-13, 4.9e14, 0.77e12,
                                     -1.234567890123e-12);
  c.axis = SweepAxis::OmegaD;
  c.start = 4.8e14;
  c.stop = 5.2e14;
  c.quadrature.relative_tolerance = 1e-11;
  c.out = "some/dir";
  c.seed = 42;
  CHECK(config_from_json(config_to_json(c)) == c);
  // The sidecar form nests the config.
  CHECK(config_from_json("{\"tool\": \"g2coh\", \"config\": " + config_to_json(c) + "}") == c);
}

TEST_CASE("figure catalogue", "[figure]") {
  CHECK(figure_ids().size() == 8);
  CHECK_THROWS_AS(build_figure("8", RunConfig{}), ConfigError);
}

TEST_CASE("figure 1a is symmetric", "[figure][reference]") {
  const auto curves = build_figure("1a", RunConfig{});
  REQUIRE(curves.size() == 1);
  const auto& rows = curves[0].rows;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& mirror = rows[rows.size() - 1 - k];
    CHECK(mirror.axis_value == -rows[k].axis_value);
    CHECK(mirror.g2 == rows[k].g2);
  }
  CHECK(rows[rows.size() / 2].g2 == 0.5);
}

TEST_CASE("figure 1b starts at one half and reaches one", "[figure][reference]") {
  const auto curves = build_figure("1b", RunConfig{});
  REQUIRE(curves.size() == 1);
  for (const auto& row : curves[0].rows) {
    if (row.axis_value == 0.0) CHECK_THAT(row.g2, WithinAbs(0.5, 1e-9));
    if (std::abs(row.axis_value - 5e-12) < 1e-15) CHECK_THAT(row.g2, WithinAbs(1.0, 1e-3));
  }
}

TEST_CASE("figure 3 mild mismatch shows one oscillation", "[figure][reference]") {
  for (const auto& curve : build_figure("3", RunConfig{})) {
    if (curve.name != "fig3_taup2.5e-12_omegad4.875e+14") continue;
    std::vector<SweepRecord> records;
    for (const auto& row : curve.rows) {
      SweepRecord r;
      r.axis_value = row.axis_value;
      r.g2.value = row.g2;
      records.push_back(r);
    }
    CHECK(analyze_extrema(records).oscillation_count == 1);
    return;
  }
  FAIL("curve not found");
}

TEST_CASE("figure files are deterministic and self-describing", "[figure][io]") {
  const fs::path a = scratch_dir("fig_a");
  const fs::path b = scratch_dir("fig_b");
  RunConfig c;
  c.workers = 1;
  const auto first = write_figure("2", c, a);
  c.workers = 3;
  const auto second = write_figure("2", c, b);
  REQUIRE(first.size() == 11);
  REQUIRE(second.size() == first.size());
  for (std::size_t k = 0; k + 1 < first.size(); ++k) {
    CHECK(read_text_file(first[k]) == read_text_file(second[k]));
  }
  CHECK(first.back().filename() == "fig2.meta.json");
  const RunConfig recovered = load_config_file(first.back().string());
  CHECK(recovered.workers == 1);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("sweep datasets reproduce from their sidecar", "[io]") {
  const fs::path a = scratch_dir("sweep_a");
  const fs::path b = scratch_dir("sweep_b");
  RunConfig c;
  c.scenario.taup = 2.5e-12;
  c.axis = SweepAxis::Gamma;
  c.start = 0.0;
  c.stop = 5e12;
  c.points = 50;
  const auto first = write_sweep(c, a);
  const RunConfig again = load_config_file(first.back().string());
  const auto second = write_sweep(again, b);
  CHECK(read_text_file(first.front()) == read_text_file(second.front()));
  fs::remove_all(a);
  fs::remove_all(b);
}
