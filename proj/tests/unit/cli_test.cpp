#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "ndspec/cli/config.hpp"
#include "ndspec/cli/report.hpp"
#include "ndspec/cli/run.hpp"
#include "ndspec/errors.hpp"

namespace ndspec::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kMinimal = R"({"n": 1, "A": [[-1]], "forcing": {"cos": [1]}})";

std::vector<Violation> violations_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.violations();
  }
  return {};
}

bool has_violation(const std::vector<Violation>& vs, const std::string& path, const std::string& fragment = "") {
  for (const auto& v : vs) {
    if (v.path == path && v.message.find(fragment) != std::string::npos) return true;
  }
  return false;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ndspec_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Config, MinimalScalarFillsDefaults) {
  const RunConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.problem.truncation, 64);
  EXPECT_EQ(c.problem.grid_size, 256);
  EXPECT_EQ(c.window, 512);
  EXPECT_EQ(c.problem.A(0, 0), cplx(-1.0, 0.0));
  EXPECT_EQ(c.problem.forcing.coefficients(2, 8).at(1)(0), cplx(0.5, 0.0));
  EXPECT_NO_THROW(c.problem.validate());
  EXPECT_EQ(c.resolved["K"], 64);
  EXPECT_EQ(c.resolved["tolerances"]["residual"], 1e-10);
}

TEST(Config, NegativeRateIsReportedWithPath) {
  const auto vs = violations_of(
      R"({"n": 1, "A": [[-1]], "kernel": {"terms": [{"c": 1, "m": 0, "alpha": -1}]}, "forcing": {"cos": [1]}})");
  EXPECT_TRUE(has_violation(vs, "kernel.terms[0].alpha"));
}

TEST(Config, AliasingIsReported) {
  const auto vs = violations_of(R"({"n": 1, "A": [[-1]], "K": 16, "N": 16})");
  EXPECT_TRUE(has_violation(vs, "N", "N >= 2K+1"));
}

TEST(Config, UnknownFieldsAndDimensionMismatches) {
  const auto vs = violations_of(
      R"({"n": 2, "A": [[-1, 0]], "bogus": 1, "L": {"atoms": [{"coef": [[1]], "lag": 1}], "extra": 0},
          "forcing": {"cos": [[1, 0, 0]]}})");
  EXPECT_TRUE(has_violation(vs, "bogus", "unknown"));
  EXPECT_TRUE(has_violation(vs, "L.extra", "unknown"));
  EXPECT_TRUE(has_violation(vs, "A"));
  EXPECT_TRUE(has_violation(vs, "L.atoms[0].coef"));
  EXPECT_TRUE(has_violation(vs, "forcing.cos[0]"));
}

TEST(Config, MalformedJson) {
  const auto vs = violations_of("{\"n\": 1,");
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_NE(vs[0].message.find("malformed"), std::string::npos);
}

TEST(Config, FullDocument) {
  const RunConfig c = parse_config(R"({
    "n": 2,
    "A": [[-2, 0.5], [0.1, [-3, 0.5]]],
    "L": {"atoms": [{"coef": [[0.1, 0], [0, 0.2]], "lag_turns": 1}],
          "distributed": {"coef": [[0.2, 0], [0, 0.1]], "span_turns": 0.5, "profile": {"type": "exponential", "rate": 1}}},
    "G": {"atoms": [{"coef": [[0.3, 0], [0, 0.2]], "lag": 1.5707963267948966}]},
    "kernel": {"terms": [{"c": [0.5, 0.1], "m": 1, "alpha": 2}]},
    "forcing": {"const": [0.3, 0], "sin": [[0, 1]], "modes": [{"k": 3, "coef": [[0, 1], 0]}]},
    "K": 8, "N": 32, "K_diag": 64, "besov": {"s": 0.5, "p": 3, "q": 1},
    "N_list": [32, 64], "K_list": [2, 4, 8], "seed": 42,
    "tolerances": {"singular_condition": 1e10, "interpolate_off_grid": true}
  })");
  EXPECT_EQ(c.problem.A(1, 1), cplx(-3.0, 0.5));
  EXPECT_EQ(c.problem.L.atoms().size(), 1u);
  EXPECT_DOUBLE_EQ(c.problem.L.atoms()[0].lag, kTwoPi);
  EXPECT_DOUBLE_EQ(c.problem.L.distributed()[0].span, kTwoPi / 2.0);
  EXPECT_EQ(c.problem.kernel.terms()[0].coefficient, cplx(0.5, 0.1));
  EXPECT_EQ(c.problem.forcing.coefficients(4, 16).at(3)(0), cplx(0.0, 1.0));
  EXPECT_EQ(c.besov.p, 3.0);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.tolerances.singular_condition, 1e10);
  EXPECT_TRUE(c.tolerances.interpolate_off_grid);
  EXPECT_FALSE(c.problem.is_real());
}

TEST(Config, ScalarProblemsAcceptBareComplexValues) {
  const RunConfig c = parse_config(
      R"({"n": 1, "A": [-2, 0.5], "L": {"atoms": [{"coef": [0.5, 0], "lag_turns": 1}]},
          "forcing": {"modes": [{"k": 3, "coef": [0, 1]}]}})");
  EXPECT_EQ(c.problem.A(0, 0), cplx(-2.0, 0.5));
  EXPECT_EQ(c.problem.L.atoms()[0].coefficient(0, 0), cplx(0.5, 0.0));
  EXPECT_EQ(c.problem.forcing.coefficients(4, 16).at(3)(0), cplx(0.0, 1.0));
  EXPECT_TRUE(has_violation(violations_of(R"({"n": 1, "A": [1, 2, 3]})"), "A"));
}

TEST(Config, OverridesTakePrecedence) {
  Overrides o;
  o.truncation = 4;
  o.grid_size = 16;
  o.window = 32;
  o.seed = 7;
  const RunConfig c = parse_config(kMinimal, o);
  EXPECT_EQ(c.problem.truncation, 4);
  EXPECT_EQ(c.problem.grid_size, 16);
  EXPECT_EQ(c.window, 32);
  EXPECT_EQ(c.seed, 7u);
  o.grid_size = 8;
  EXPECT_THROW(parse_config(kMinimal, o), ConfigError);
}

TEST(Report, FixedFormatting) {
  nlohmann::ordered_json doc;
  doc["b"] = 0.1;
  doc["a"] = number(NAN);
  doc["c"] = complex_number({1.0, -2.0});
  doc["d"] = 3;
  EXPECT_EQ(dump_json(doc), "{\n  \"b\": 0.10000000000000001,\n  \"a\": null,\n  \"c\": [1.0, -2.0],\n  \"d\": 3\n}\n");
}

TEST(Report, GridCsv) {
  Matrix m(2, 1);
  m << 1.5, cplx(0.0, 1.0);
  EXPECT_EQ(grid_csv(m, true), "t,u0\n0,1.5\n3.1415926535897931,0\n");
  EXPECT_EQ(grid_csv(m, false), "t,u0_re,u0_im\n0,1.5,0\n3.1415926535897931,0,1\n");
}

TEST(Run, SolveCosineBenchmark) {
  Overrides o;
  o.truncation = 8;
  o.grid_size = 32;
  const fs::path dir = scratch_dir("solve");
  const RunOutcome out = run("solve", parse_config(kMinimal, o), dir);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_LE(out.report["result"]["residual"].get<double>(), 1e-10);

  std::istringstream csv(read_file(dir / "solution.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "t,u0");
  int rows = 0;
  while (std::getline(csv, line)) {
    const auto comma = line.find(',');
    const double t = std::stod(line.substr(0, comma));
    EXPECT_NEAR(std::stod(line.substr(comma + 1)), 0.5 * (std::cos(t) + std::sin(t)), 1e-15);
    ++rows;
  }
  EXPECT_EQ(rows, 32);
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "solution.json"));
  fs::remove_all(dir);
}

TEST(Run, SingularModeExitsTwo) {
  Overrides o;
  o.truncation = 4;
  const RunOutcome out = run("solve", parse_config(R"({"n": 1, "A": [[0]], "forcing": {"cos": [1]}})", o));
  EXPECT_EQ(out.exit_code, kExitSingular);
  EXPECT_EQ(out.report["error"]["type"], "singular_mode");
  EXPECT_EQ(out.report["error"]["mode"], 0);
  EXPECT_EQ(out.report["exit_code"], kExitSingular);
}

TEST(Run, DiagnoseHalfPeriodAtom) {
  const RunConfig c = parse_config(
      R"({"n": 1, "A": [[-2]], "L": {"atoms": [{"coef": [[0.5]], "lag_turns": 0.5}]}, "forcing": {"cos": [1]}})");
  const RunOutcome out = run("diagnose", c);
  ASSERT_EQ(out.exit_code, kExitOk);
  bool found = false;
  for (const auto& row : out.report["result"]["rows"]) {
    if (row["name"] == "Q") {
      EXPECT_EQ(row["verdict"], "growing");
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_LE(out.report["result"]["telescoping_defect"].get<double>(), 1e-10);
}

TEST(Run, OffGridLagIsAValidationFailure) {
  const RunConfig c = parse_config(
      R"({"n": 1, "A": [[-1]], "G": {"atoms": [{"coef": [[0.2]], "lag": 1}]}, "forcing": {"cos": [1]}, "K": 8, "N": 32})");
  const RunOutcome out = run("verify", c);
  EXPECT_EQ(out.exit_code, kExitInvalid);
  EXPECT_EQ(out.report["status"], "error");
}

TEST(Run, EveryCommandEmbedsConfigAndVersion) {
  Overrides o;
  o.truncation = 8;
  o.grid_size = 64;
  o.window = 32;
  const RunConfig c = parse_config(kMinimal, o);
  for (std::string_view command : kCommands) {
    const RunOutcome out = run(command, c);
    EXPECT_EQ(out.exit_code, kExitOk) << command;
    EXPECT_EQ(out.report["version"], std::string(tool_version()));
    EXPECT_EQ(out.report["config"], c.resolved);
    EXPECT_EQ(out.report["status"], "ok") << command;
  }
}

TEST(Run, ReportsAreDeterministic) {
  Overrides o;
  o.truncation = 8;
  o.grid_size = 64;
  o.window = 32;
  o.seed = 3;
  const RunConfig c = parse_config(kMinimal, o);
  for (std::string_view command : kCommands) {
    const fs::path a = scratch_dir("det_a");
    const fs::path b = scratch_dir("det_b");
    run(command, c, a);
    run(command, parse_config(kMinimal, o), b);
    for (const auto& entry : fs::directory_iterator(a)) {
      EXPECT_EQ(read_file(entry.path()), read_file(b / entry.path().filename())) << command << " " << entry.path();
    }
    fs::remove_all(a);
    fs::remove_all(b);
  }
}

TEST(Run, InvalidConfigOutcome) {
  try {
    parse_config(R"({"n": 1, "A": [[-1]], "K": 16, "N": 16})");
    FAIL();
  } catch (const ConfigError& e) {
    const RunOutcome out = invalid_config_outcome("solve", e);
    EXPECT_EQ(out.exit_code, kExitInvalid);
    EXPECT_EQ(out.report["error"]["violations"][0]["path"], "N");
  }
}

// End-to-end through the executable.
class Executable : public ::testing::Test {
 protected:
  static int invoke(const std::string& args) {
    const int status = std::system((std::string(NDSPEC_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  static fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path path = fs::temp_directory_path() / ("ndspec_cli_test_" + name + ".json");
    std::ofstream(path) << text;
    return path;
  }
};

TEST_F(Executable, ExitCodes) {
  const fs::path ok = write_config("ok", kMinimal);
  const fs::path singular = write_config("singular", R"({"n": 1, "A": [[0]], "forcing": {"cos": [1]}})");
  const fs::path invalid = write_config("invalid", R"({"n": 1, "A": [[-1]], "K": 16, "N": 16})");
  const fs::path out = scratch_dir("exe");
  EXPECT_EQ(invoke("solve --config " + ok.string() + " --k 8 --grid 32 --out " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "solution.csv"));
  EXPECT_EQ(invoke("solve --config " + singular.string() + " --k 4"), 2);
  EXPECT_EQ(invoke("solve --config " + invalid.string()), 3);
  EXPECT_EQ(invoke("frobnicate --config " + ok.string()), 3);
  EXPECT_EQ(invoke("diagnose --config " + ok.string() + " --window 32 --seed 1"), 0);
  for (const auto& p : {ok, singular, invalid}) fs::remove(p);
  fs::remove_all(out);
}

}  // namespace
}  // namespace ndspec::cli
