// Integration tests that drive the installed command line binary and pin
// its output bytes and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + SIGMA2_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, got);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kPairscanGolden =
    "n,numerator,precision,decimal\n"
    "0,18446744073709551615,64,0.999999999999999999945789891376\n"
    "1,18446744073709551615,64,0.999999999999999999945789891376\n"
    "2,18446744073709551615,64,0.999999999999999999945789891376\n";

}  // namespace

TEST_CASE("tau bit names the segment it read") {
  RunResult r = run_cli("tau bit --k 5 --gamma const1 --n 360");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "bit 0, segment PatternTail(m=5, r=1)\n");
}

TEST_CASE("tau dump prints the prefix bits") {
  RunResult r = run_cli("tau dump --k 5 --len 120");
  CHECK(r.exit_code == 0);
  CHECK(r.out == std::string(120, '0') + "\n");
}

TEST_CASE("tau segment prints the structural region") {
  RunResult r = run_cli("tau segment --n 360 --gamma const1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "PatternTail(m=5, r=1, offset=0)\n");
}

TEST_CASE("tau bit rejects indices beyond the stage range") {
  RunResult r = run_cli("tau bit --n 2432902008176640000");
  CHECK(r.exit_code == 1);
}

TEST_CASE("schedule divergence passes and reports the run") {
  RunResult r = run_cli("schedule divergence --m 6 --s 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"check\": \"divergence\"") != std::string::npos);
  CHECK(r.out.find("\"time\": 1440") != std::string::npos);
  CHECK(r.out.find("\"numerator\": \"18446744073709551615\"") !=
        std::string::npos);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("schedule coincidence emits the secondary window") {
  RunResult r = run_cli("schedule coincidence --m 6 --i 0 --j 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"check\": \"coincidence-tail\"") != std::string::npos);
  CHECK(r.out.find("\"precision\": 47") != std::string::npos);
  CHECK(r.out.find("\"numerator\": \"140737488355327\"") != std::string::npos);
}

TEST_CASE("schedule tracking small stage needs the relax flag") {
  RunResult guarded = run_cli("schedule tracking --m 5 --i 1 --j 0 --precision 12");
  CHECK(guarded.exit_code == 2);

  RunResult r = run_cli(
      "schedule tracking --m 5 --i 1 --j 0 --precision 12 --relax-stage-guard");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"numerator\": \"0\"") != std::string::npos);
  CHECK(r.out.find("\"numerator\": \"4095\"") != std::string::npos);
}

TEST_CASE("pairscan emits the frozen CSV") {
  RunResult r = run_cli("pairscan --x const0 --y const1 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kPairscanGolden);
}

TEST_CASE("pairscan writes the same bytes to a file") {
  const std::string path = "/tmp/sigma2_pairscan_out.csv";
  std::remove(path.c_str());
  RunResult r = run_cli("pairscan --x const0 --y const1 --n 3 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == kPairscanGolden);
  std::remove(path.c_str());
}

TEST_CASE("pairscan on an interval map uses rational columns") {
  RunResult r = run_cli("pairscan --x 2/7 --y 4/7 --map tent --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,numerator,precision,decimal\n"
        "0,2,7,0.285714285714285714285714285714\n"
        "1,2,7,0.285714285714285714285714285714\n"
        "2,4,7,0.571428571428571428571428571429\n");
}

TEST_CASE("parallel pairscan equals the sequential scan byte for byte") {
  RunResult seq = run_cli("pairscan --x tau --y compl:tau --n 128 --parallel 1");
  RunResult par = run_cli("pairscan --x tau --y compl:tau --n 128 --parallel 4");
  CHECK(seq.exit_code == 0);
  CHECK(par.exit_code == 0);
  CHECK(seq.out == par.out);
}

TEST_CASE("witness search on the tent map finds the frozen candidate") {
  RunResult r = run_cli("witness --x 0 --map tent --V 3/10,2/5 --seed 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"found\": true") != std::string::npos);
  CHECK(r.out.find("\"candidate\": \"12582912/33554431\"") !=
        std::string::npos);
  CHECK(r.out.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("witness search near the alternating two-cycle is inconclusive") {
  RunResult r = run_cli("witness --x -2/3 --map g --V 1/4,3/4 --horizon 300");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"found\": false") != std::string::npos);
}

TEST_CASE("turbulence certificates and exit codes") {
  RunResult tent = run_cli("turbulence --map tent");
  CHECK(tent.exit_code == 0);
  CHECK(tent.out.find("\"turbulent\": true") != std::string::npos);

  RunResult g = run_cli("turbulence --map g");
  CHECK(g.exit_code == 1);
  CHECK(g.out.find("\"turbulent\": false") != std::string::npos);

  RunResult g2 = run_cli("turbulence --map g --square");
  CHECK(g2.exit_code == 0);
  CHECK(g2.out.find("\"shared_point\": \"-1/2\"") != std::string::npos);
}

TEST_CASE("turbulence pipeline is satisfied on the tent map") {
  RunResult r = run_cli("turbulence --map tent --pipeline --seed 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"outcome\": \"satisfied\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("tau bit").exit_code == 2);               // missing --n
  CHECK(run_cli("tau bit --n 1 --nope").exit_code == 2);  // unknown flag
  CHECK(run_cli("pairscan --x 1/0 --y 0 --map tent --n 1").exit_code == 2);
  CHECK(run_cli("witness --x notanumber --map tent --V 0,1").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("witness --help").exit_code == 0);
}

TEST_CASE("config file mirrors flags") {
  const std::string cfg = "/tmp/sigma2_cli_test.cfg";
  {
    std::ofstream out(cfg);
    out << "# comment\n"
        << "x=0\n"
        << "map=tent\n"
        << "V=\"3/10,2/5\"\n"
        << "seed=0\n";
  }
  RunResult from_cfg = run_cli("witness --config " + cfg);
  RunResult from_flags = run_cli("witness --x 0 --map tent --V 3/10,2/5 --seed 0");
  CHECK(from_cfg.exit_code == 0);
  CHECK(from_cfg.out == from_flags.out);

  // explicit flags win: the wider window admits a smaller candidate that
  // lies outside the config file's window
  RunResult overridden = run_cli("witness --config " + cfg + " --V 1/4,2/5");
  CHECK(overridden.out.find("\"candidate\": \"8388608/33554431\"") !=
        std::string::npos);

  RunResult missing = run_cli("witness --config /tmp/sigma2_no_such_file.cfg");
  CHECK(missing.exit_code == 2);
  std::remove(cfg.c_str());
}

TEST_CASE("identical reruns are byte identical") {
  const std::string cmd =
      "witness --x 0 --map tent --V 3/10,2/5 --strategy all --seed 7";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
