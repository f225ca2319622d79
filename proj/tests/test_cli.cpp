#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "eee/config.hpp"
#include "eee/io.hpp"
#include "eee/runner.hpp"

using namespace eee;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("eee-test-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("minimal config gets the documented defaults") {
  const RunConfig cfg = parse_config_text("scenario = minkowski\nn = 16\n");
  CHECK(cfg.grid.fd_order == 4);
  CHECK(cfg.cfl == 0.25);
  CHECK(cfg.ko == 0.0);
  CHECK(cfg.kappa == 1.0);
  CHECK(cfg.grid.n == 16);
}

TEST_CASE("sectioned config and error reporting") {
  const RunConfig cfg = parse_config_text("[run]\nscenario = flrw # comment\n[eos]\nkind = linear\nc = 0.2\n");
  CHECK(cfg.scenario == "flrw");
  CHECK(cfg.make_eos()->name() == "linear");
  CHECK_THROWS_AS(parse_config_text("[run]\ncfl = 2.0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[physics]\nko = 0.6\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[run]\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nn = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[run]\nscenario = kerr\n"), ConfigError);
  try {
    parse_config_text("[grid]\nn = 8\nfoo = 1\n", "x.cfg");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("x.cfg:3") != std::string::npos);
  }
}

TEST_CASE("flags override file values and are recorded") {
  RunConfig cfg = parse_config_text("[grid]\nn = 16\n[run]\ncfl = 0.5\n");
  apply_overrides(cfg, {{"n", "8"}, {"physics.kappa", "0"}});
  CHECK(cfg.grid.n == 8);
  CHECK(cfg.kappa == 0.0);
  REQUIRE(cfg.overrides.size() == 1);
  CHECK(cfg.overrides[0] == "grid.n");
  CHECK_THROWS_AS(apply_overrides(cfg, {{"cfl", "0"}}), ConfigError);
}

TEST_CASE("snapshot round trip") {
  Grid g(8, 3.0, 2);
  FieldSet f(g);
  f.t = 1.25;
  for (std::size_t i = 0; i < f.raw().size(); ++i) f.raw()[i] = 0.001 * static_cast<double>(i);
  const fs::path dir = scratch("snap");
  fs::create_directories(dir);
  write_snapshot((dir / "a.bin").string(), f);
  const FieldSet g2 = read_snapshot((dir / "a.bin").string());
  CHECK(g2.t == 1.25);
  CHECK(g2.grid().n == 8);
  CHECK(g2.grid().fd_order == 2);
  CHECK(g2.grid().h() == doctest::Approx(g.h()).epsilon(1e-15));
  CHECK(g2.raw() == f.raw());
  std::ofstream((dir / "b.bin").string()) << "garbage";
  CHECK_THROWS(read_snapshot((dir / "b.bin").string()));
  fs::remove_all(dir);
}

TEST_CASE("run writes CSV, snapshots and manifest") {
  const fs::path dir = scratch("run");
  RunConfig cfg = parse_config_text("[run]\nscenario = flrw\nt_final = 0.05\ndt = 0.01\ndiag_every = 2\nsnapshot_every = 5\n[grid]\nn = 8\n");
  apply_overrides(cfg, {{"out", dir.string()}});
  const RunResult r = run_simulation(cfg);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.steps == 5);
  CHECK(fs::exists(dir / "diagnostics.csv"));
  CHECK(fs::exists(dir / "snapshot_000000.bin"));
  CHECK(fs::exists(dir / "snapshot_000005.bin"));
  std::ifstream mf(dir / "manifest.json");
  const nlohmann::json j = nlohmann::json::parse(mf);
  CHECK(j["exit_status"] == 0);
  CHECK(j["csv_schema"]["version"] == kCsvSchemaVersion);
  CHECK(j["config"]["run.scenario"] == "flrw");
  CHECK(j["overrides"].size() == 0);
  std::ifstream csv(dir / "diagnostics.csv");
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 1 + 4);  // header, t = 0, steps 2 and 4, final
  fs::remove_all(dir);
}

TEST_CASE("unwritable output directory gives exit status 2") {
  const fs::path dir = scratch("blocked");
  fs::create_directories(dir);
  std::ofstream((dir / "file").string()) << "x";
  RunConfig cfg;
  cfg.grid.n = 8;
  cfg.out = (dir / "file" / "out").string();
  CHECK(run_simulation(cfg).exit_code == kExitUnwritable);
  fs::remove_all(dir);
}

TEST_CASE("inadmissible initial data give a nonzero exit with a manifest") {
  const fs::path dir = scratch("bad");
  RunConfig cfg;
  cfg.grid.n = 8;
  cfg.scenario_params.r0 = -1.0;
  cfg.out = dir.string();
  const RunResult r = run_simulation(cfg);
  CHECK(r.exit_code == kExitInitialData);
  CHECK(fs::exists(dir / "manifest.json"));
  fs::remove_all(dir);
}

TEST_CASE("observed convergence order") {
  CHECK(observed_order(16.0, 1.0, 16, 32) == doctest::Approx(4.0));
  CHECK(observed_order(8.0, 1.0, 10, 20) == doctest::Approx(3.0));
}
