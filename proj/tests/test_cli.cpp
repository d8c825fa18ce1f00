// End-to-end checks of the command line tool: flag surface, config file
// handling, artifact layout, determinism and exit codes. Every case spawns
// the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "beamnet/graph.hpp"
#include "beamnet/metrics.hpp"
#include "beamnet/topology.hpp"
#include "beamnet/version.hpp"

namespace fs = std::filesystem;
using namespace beamnet;

namespace {

const fs::path& scratch_root() {
  static const fs::path root = [] {
    fs::path p = fs::temp_directory_path() /
                 ("beamnet_cli_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = scratch_root() / name;
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: ", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_root() / ("stdout." + std::to_string(counter));
  const fs::path err = scratch_root() / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(BEAMNET_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

std::vector<MetricsRecord> parse_records_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file: ", path.string());
  return parse_csv(in);
}

const std::vector<std::string> kTrialArtifacts{
    "manifest.txt", "records.csv",   "placement.txt", "graph.txt",
    "regions.txt",  "centroids.txt", "beams.txt"};

}  // namespace

TEST_CASE("--version and missing subcommand") {
  const CliResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find(kVersionString) != std::string::npos);

  const CliResult bare = run_cli("");
  CHECK(bare.exit_code != 0);
  CHECK(bare.err.find("subcommand") != std::string::npos);
}

TEST_CASE("trial --help exposes every config key") {
  const CliResult help = run_cli("trial --help");
  REQUIRE(help.exit_code == 0);
  for (const char* key :
       {"--n", "--field_size", "--radio_range", "--gradient", "--alpha",
        "--elements_min", "--elements_max", "--epsilon", "--delta",
        "--sweep_step", "--seed", "--config", "--out", "--trace"})
    CHECK_MESSAGE(help.out.find(key) != std::string::npos, "missing ", key);
  CHECK(help.out.find("BEAMNET_SEED") != std::string::npos);
}

TEST_CASE("trial writes the full artifact set") {
  const fs::path dir = scratch_dir("trial_basic");
  const CliResult r =
      run_cli("trial --n 30 --seed 5 --out " + dir.string());
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  CHECK(r.out.find("trial ok") != std::string::npos);
  for (const std::string& name : kTrialArtifacts)
    CHECK_MESSAGE(fs::exists(dir / name), "missing ", name);

  const auto records = parse_records_file(dir / "records.csv");
  REQUIRE(records.size() == 1);
  CHECK(records[0].n == 30);
  CHECK(records[0].seed == 5);
  CHECK(records[0].gradient == 4);

  std::ifstream pin(dir / "placement.txt");
  CHECK(load_placement(pin).node_count() == 30);
  std::ifstream gin(dir / "graph.txt");
  CHECK(Graph::load(gin).node_count() == 30);

  const std::string manifest = slurp(dir / "manifest.txt");
  CHECK(manifest.find("subcommand = trial") != std::string::npos);
  CHECK(manifest.find("n = 30") != std::string::npos);
  CHECK(manifest.find("seed = 5") != std::string::npos);
}

TEST_CASE("trial reruns are byte-identical apart from the manifest") {
  const fs::path a = scratch_dir("trial_rerun_a");
  const fs::path b = scratch_dir("trial_rerun_b");
  const std::string flags = "trial --n 40 --seed 11 --out ";
  REQUIRE(run_cli(flags + a.string()).exit_code == 0);
  REQUIRE(run_cli(flags + b.string()).exit_code == 0);
  for (const std::string& name : kTrialArtifacts) {
    if (name == "manifest.txt") continue;
    CHECK_MESSAGE(slurp(a / name) == slurp(b / name), name, " differs");
  }
}

TEST_CASE("config file applies and command line flags override it") {
  const fs::path dir = scratch_dir("trial_config");
  const fs::path cfg = dir / "world.cfg";
  {
    std::ofstream out(cfg);
    out << "# deployment\n"
        << "n = 25\n"
        << "gradient = 3\n"
        << "seed = 8\n";
  }
  const CliResult r = run_cli("trial --config " + cfg.string() +
                              " --gradient 5 --out " + dir.string());
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  const auto records = parse_records_file(dir / "records.csv");
  REQUIRE(records.size() == 1);
  CHECK(records[0].n == 25);
  CHECK(records[0].gradient == 5);
  CHECK(records[0].seed == 8);
}

TEST_CASE("missing config file is a parse error naming the path") {
  const std::string missing =
      (scratch_root() / "does_not_exist.cfg").string();
  const CliResult r = run_cli("trial --config " + missing);
  CHECK(r.exit_code != 0);
  CHECK(r.err.find("does_not_exist.cfg") != std::string::npos);
}

TEST_CASE("out-of-range values exit 2 and name the key") {
  const fs::path dir = scratch_dir("trial_bad");
  SUBCASE("alpha below 1") {
    const CliResult r =
        run_cli("trial --alpha 0.5 --out " + dir.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error: config: alpha") != std::string::npos);
  }
  SUBCASE("sweep_step not dividing the circle") {
    const CliResult r =
        run_cli("trial --sweep_step 0.1 --out " + dir.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("sweep_step") != std::string::npos);
  }
  SUBCASE("zero nodes") {
    const CliResult r = run_cli("trial --n 0 --out " + dir.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error: config: n") != std::string::npos);
  }
}

TEST_CASE("BEAMNET_SEED feeds the seed flag, explicit flag wins") {
  const fs::path dir = scratch_dir("trial_env");
  REQUIRE(::setenv("BEAMNET_SEED", "123", 1) == 0);
  CliResult r = run_cli("trial --n 20 --out " + dir.string());
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  CHECK(parse_records_file(dir / "records.csv")[0].seed == 123);

  r = run_cli("trial --n 20 --seed 9 --out " + dir.string());
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  CHECK(parse_records_file(dir / "records.csv")[0].seed == 9);
  REQUIRE(::unsetenv("BEAMNET_SEED") == 0);
}

TEST_CASE("trial --trace streams engine lines to stderr") {
  const fs::path dir = scratch_dir("trial_trace");
  const CliResult quiet =
      run_cli("trial --n 12 --seed 2 --out " + dir.string());
  REQUIRE(quiet.exit_code == 0);
  CHECK(quiet.err.empty());

  const CliResult traced =
      run_cli("trial --n 12 --seed 2 --trace --out " + dir.string());
  REQUIRE(traced.exit_code == 0);
  CHECK(traced.err.find(" send ") != std::string::npos);
  CHECK(traced.err.find("quiescent") != std::string::npos);
}

TEST_CASE("sweep produces records, summary and one plot per metric") {
  const fs::path dir = scratch_dir("sweep_basic");
  const CliResult r = run_cli(
      "sweep --n_list 20,40 --gradient_list 3 --seeds 2 --seed 77 --out " +
      dir.string());
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  CHECK(r.out.find("sweep ok: 4 trials (0 failed)") != std::string::npos);

  const auto records = parse_records_file(dir / "records.csv");
  REQUIRE(records.size() == 4);
  CHECK(records[0].n == 20);
  CHECK(records[2].n == 40);

  const std::string summary = slurp(dir / "summary.csv");
  CHECK(summary.rfind(kSummaryCsvHeader, 0) == 0);
  for (const std::string& metric : metric_names()) {
    const fs::path svg = dir / ("plot_" + metric + ".svg");
    REQUIRE_MESSAGE(fs::exists(svg), "missing ", svg.string());
    CHECK(slurp(svg).find("<svg xmlns=") != std::string::npos);
    CHECK(summary.find(metric + ",20,3,omni,") != std::string::npos);
  }
}

TEST_CASE("sweep --jobs does not change the CSV bytes") {
  const fs::path a = scratch_dir("sweep_jobs1");
  const fs::path b = scratch_dir("sweep_jobs4");
  const std::string flags =
      "sweep --n_list 20,40 --gradient_list 3,6 --seeds 2 --seed 77 ";
  REQUIRE(run_cli(flags + "--jobs 1 --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli(flags + "--jobs 4 --out " + b.string()).exit_code == 0);
  CHECK(slurp(a / "records.csv") == slurp(b / "records.csv"));
  CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));
}

TEST_CASE("plot rebuilds summaries from an existing CSV") {
  const fs::path src = scratch_dir("plot_src");
  REQUIRE(run_cli("sweep --n_list 20 --gradient_list 3 --seeds 2 --out " +
                  src.string())
              .exit_code == 0);
  const fs::path dst = scratch_dir("plot_dst");
  const CliResult r =
      run_cli("plot --input " + (src / "records.csv").string() + " --out " +
              dst.string());
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  CHECK(slurp(dst / "summary.csv") == slurp(src / "summary.csv"));
  for (const std::string& metric : metric_names())
    CHECK(slurp(dst / ("plot_" + metric + ".svg")) ==
          slurp(src / ("plot_" + metric + ".svg")));

  const CliResult missing = run_cli("plot --input " +
                                    (src / "nope.csv").string());
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);
}

TEST_CASE("validate subcommand runs the check suite") {
  const CliResult r = run_cli("validate --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS oracle_apl") != std::string::npos);
  CHECK(r.out.find("PASS ci_hand_check") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
