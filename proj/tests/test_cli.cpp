#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "sbrsma/config.hpp"
#include "sbrsma/presets.hpp"
#include "sbrsma/report.hpp"

using namespace sbrsma;

TEST_SUITE("cli") {

TEST_CASE("empty config gives the stock parameters") {
  const ScenarioConfig cfg = config_from_json_text("");
  CHECK(cfg.antennas == 4);
  CHECK(cfg.fading.lambda0 == doctest::Approx(0.25));
  CHECK(cfg.fading.omega2 == doctest::Approx(0.25));
  CHECK(cfg.fading.lambda1 == doctest::Approx(0.5));
  CHECK(cfg.fading.omega1 == doctest::Approx(0.5));
  CHECK(cfg.fading.lambda2 == doctest::Approx(0.75));
  CHECK(cfg.eta == doctest::Approx(0.8));
  CHECK(cfg.split.alpha_c == doctest::Approx(0.5));
  CHECK(cfg.split.alpha_1 == doctest::Approx(0.3));
  CHECK(cfg.split.alpha_2 == doctest::Approx(0.2));
  CHECK(cfg.rates.rc == doctest::Approx(0.5));
  CHECK(cfg.rates.r1 == doctest::Approx(1.0));
  CHECK(cfg.rates.rb == doctest::Approx(1.0));
  CHECK(cfg.rates.r2 == doctest::Approx(1.5));
  CHECK(cfg.psi == doctest::Approx(10.0));  // 10 dB is 10 linear
}

TEST_CASE("config rejections carry the field") {
  CHECK_THROWS_WITH_AS(config_from_json_text(R"({"alpha_c": 0.5, "alpha_1": 0.4})"),
                       doctest::Contains("sum to 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(config_from_json_text(R"({"Rc": "fast"})"),
                       doctest::Contains("'Rc'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(config_from_json_text(R"({"frequency": 2.4})"),
                       doctest::Contains("frequency"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json_text("{nope"), std::invalid_argument);
}

TEST_CASE("config json round trip") {
  ScenarioConfig cfg = config_from_json_text(R"({"L": 5, "Psi_dB": 17.5, "Rb": 0.5})");
  CHECK(cfg.antennas == 5);
  CHECK(cfg.psi_db() == doctest::Approx(17.5));
  CHECK(cfg.rates.gbar_b == doctest::Approx(std::exp2(0.5) - 1.0));
  const ScenarioConfig back = config_from_json_text(config_to_json_text(cfg));
  CHECK(back.antennas == cfg.antennas);
  CHECK(back.psi == doctest::Approx(cfg.psi));
  CHECK(back.rates.rb == doctest::Approx(cfg.rates.rb));
}

TEST_CASE("csv round trip preserves rows exactly") {
  SweepRow r;
  r.strategy = "ccs";
  r.antennas = 4;
  r.psi_db = 12.5;
  r.rc = 0.5;
  r.r1 = 1.0;
  r.r2 = 1.5;
  r.rb = 1.0;
  r.alpha_c = 0.5;
  r.alpha_1 = 0.3;
  r.alpha_2 = 0.2;
  r.eta = 0.8;
  r.delta_policy = "adaptive";
  r.trials = 1000;
  r.seed = 424242;
  r.est.value = 0.123456789012345678;
  r.est.std_error = 0.001;
  r.est.ci_lo = 0.121;
  r.est.ci_hi = 0.125;
  r.est.rejected_blocks = 2;
  const std::string csv = rows_to_csv({r});
  const auto rows = rows_from_csv_text(csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].est.value == r.est.value);
  CHECK(rows[0].seed == r.seed);
  CHECK(rows_to_csv(rows) == csv);
}

TEST_CASE("gain interpolation") {
  auto make_row = [](const std::string& strategy, double psi_db, double sop) {
    SweepRow r;
    r.strategy = strategy;
    r.antennas = 4;
    r.psi_db = psi_db;
    r.rc = 0.5;
    r.r1 = 1.0;
    r.r2 = 1.5;
    r.rb = 1.0;
    r.alpha_c = 0.5;
    r.alpha_1 = 0.3;
    r.alpha_2 = 0.2;
    r.eta = 0.8;
    r.delta_policy = "adaptive";
    r.trials = 1;
    r.seed = 1;
    r.est.value = sop;
    return r;
  };
  SUBCASE("two identical curves have zero gain") {
    std::vector<SweepRow> rows;
    for (double db : {10.0, 20.0, 30.0}) {
      rows.push_back(make_row("a", db, std::pow(10.0, -db / 10.0)));
      rows.push_back(make_row("b", db, std::pow(10.0, -db / 10.0)));
    }
    const GainReport rep = report_gain(rows, 1e-2);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].gain_db == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.entries[0].psi_db_at_target == doctest::Approx(20.0));
  }
  SUBCASE("a 3 dB shifted curve reports a 3 dB gain") {
    std::vector<SweepRow> rows;
    for (double db : {10.0, 20.0, 30.0}) {
      rows.push_back(make_row("a", db, std::pow(10.0, -db / 10.0)));
      rows.push_back(make_row("b", db, std::pow(10.0, -(db - 3.0) / 10.0)));
    }
    const GainReport rep = report_gain(rows, 1e-2);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(std::abs(rep.pairs[0].gain_db) == doctest::Approx(3.0).epsilon(1e-9));
  }
  SUBCASE("unreached targets are flagged") {
    std::vector<SweepRow> rows;
    for (double db : {10.0, 20.0}) rows.push_back(make_row("a", db, 0.5));
    const GainReport rep = report_gain(rows, 1e-3);
    CHECK_FALSE(rep.entries[0].reached);
    CHECK(rep.pairs.empty());
  }
}

TEST_CASE("validate_foxh preset writes its table and passes") {
  const std::string dir = (std::filesystem::temp_directory_path() / "sbrsma_foxh_test").string();
  const PresetResult res = run_preset(PresetName::ValidateFoxh, config_from_json_text(""), 10,
                                      1, dir);
  CHECK(res.ok);
  REQUIRE(res.files.size() == 1);
  const std::string table = read_text_file(res.files[0]);
  CHECK(table.find("max_rel_err") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("strategy-comparison preset emits four adaptive and two fixed curves") {
  const std::string dir = (std::filesystem::temp_directory_path() / "sbrsma_fig2_test").string();
  const PresetResult res =
      run_preset(PresetName::Fig2PsiSweep, config_from_json_text(""), 300, 8, dir);
  CHECK(res.ok);
  const auto rows = rows_from_csv_text(read_text_file((std::filesystem::path(dir) /
                                                       "fig2_psi_sweep.csv").string()));
  const auto curves = csv_to_curves(rows);
  CHECK(curves.size() == 6);
  int fixed = 0;
  for (const auto& r : rows) fixed += r.delta_policy.rfind("fixed_", 0) == 0 ? 1 : 0;
  CHECK(fixed > 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "fig2_psi_sweep.svg"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("rate-case preset emits one curve per case") {
  const std::string dir = (std::filesystem::temp_directory_path() / "sbrsma_fig4_test").string();
  const PresetResult res =
      run_preset(PresetName::Fig4RateCases, config_from_json_text(""), 400, 6, dir);
  CHECK(res.ok);
  const auto rows = rows_from_csv_text(read_text_file((std::filesystem::path(dir) /
                                                       "fig4_rate_cases.csv").string()));
  const auto curves = csv_to_curves(rows);
  CHECK(curves.size() == 3);
  // cases 1 and 2 trade a lower backscatter target against higher
  // common/private targets relative to case 3
  const auto cases = fig4_rate_cases();
  REQUIRE(cases.size() == 3);
  CHECK(cases[0].rates.rb < cases[2].rates.rb);
  CHECK(cases[1].rates.rb < cases[2].rates.rb);
  CHECK(cases[0].rates.rc > cases[2].rates.rc);
  std::filesystem::remove_all(dir);
}

TEST_CASE("preset csv output is bit-identical across reruns and worker counts") {
  const auto dir1 = std::filesystem::temp_directory_path() / "sbrsma_rep1";
  const auto dir2 = std::filesystem::temp_directory_path() / "sbrsma_rep2";
  McOptions w1, w4;
  w1.workers = 1;
  w4.workers = 4;
  ScenarioConfig cfg = config_from_json_text("");
  run_preset(PresetName::ValidateTheorem1, cfg, 4000, 5, dir1.string(), w1);
  run_preset(PresetName::ValidateTheorem1, cfg, 4000, 5, dir2.string(), w4);
  CHECK(read_text_file((dir1 / "validate_theorem1.csv").string()) ==
        read_text_file((dir2 / "validate_theorem1.csv").string()));
  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
}

}  // TEST_SUITE
