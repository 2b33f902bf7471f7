#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd =
      std::string(SPINCOVER_CLI_PATH) + " " + args + " > " + path + " 2>&1";
  int ret = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = ret;
#else
  r.exit_code = WEXITSTATUS(ret);
#endif
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(path.c_str());
  return r;
}

}  // namespace

TEST_CASE("cover-eval evaluates bracket words") {
  auto r = run_cli("cover-eval \"[1,2][3,4]\" -n 8 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order 4") != std::string::npos);
  // z is central of order 2
  auto z = run_cli("cover-eval z -n 6 --format text");
  CHECK(z.exit_code == 0);
  CHECK(z.output.find("order 2") != std::string::npos);
  // t1 t3 and t3 t1 differ by the central sign
  auto a = run_cli("cover-eval \"t1 t3\" -n 5 --format text");
  auto b = run_cli("cover-eval \"t3 t1\" -n 5 --format text");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.output != b.output);
  bool a_neg = a.output.find("sign -1") != std::string::npos;
  bool b_neg = b.output.find("sign -1") != std::string::npos;
  CHECK(a_neg != b_neg);
}

TEST_CASE("tgroup reports match the classification examples") {
  auto r = run_cli("tgroup -g 2A -n 7 -p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"schema\": 1") != std::string::npos);
  CHECK(r.output.find("\"factors\": [\n      2,\n      4\n    ]") !=
        std::string::npos);
  CHECK(r.output.find("\"free_rank\": 0") != std::string::npos);

  auto s = run_cli("tgroup -g 2S- -n 6 -p 2");
  CHECK(s.exit_code == 0);
  CHECK(s.output.find("\"factors\": []") != std::string::npos);
  CHECK(s.output.find("\"free_rank\": 1") != std::string::npos);

  auto a6 = run_cli("tgroup -g 2A -n 6 -p 3");
  CHECK(a6.exit_code == 0);
  CHECK(a6.output.find("\"display\": \"Z/8+Z\"") != std::string::npos);
  CHECK(a6.output.find("paper_stated") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable across runs") {
  for (const char* args :
       {"tgroup -g 2A -n 5 -p 5", "tgroup -g 6A7 -p 7",
        "tgroup -g 2S+ -n 6 -p 2", "tables --which 2",
        "verify --n-max 6 --trials 100 --fuzz-n 10 --seed 1"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    INFO(args);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("provenance tags appear on every table cell") {
  auto r = run_cli("tables --which 2");
  CHECK(r.exit_code == 0);
  size_t cells = 0, tagged = 0, pos = 0;
  while ((pos = r.output.find("\"row\":", pos)) != std::string::npos) {
    ++cells;
    ++pos;
  }
  pos = 0;
  while ((pos = r.output.find("\"provenance\":", pos)) != std::string::npos) {
    ++tagged;
    ++pos;
  }
  CHECK(cells == 18);
  CHECK(tagged == cells);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("cover-eval \"nonsense!\" -n 6").exit_code == 2);
  CHECK(run_cli("tgroup -g bogus -n 8 -p 2").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("tgroup -g 2A -n 8 -p 11").exit_code == 3);   // 11 > n
  CHECK(run_cli("tgroup -g A -n 8 -p 2").exit_code == 3);     // plain An
  CHECK(run_cli("tgroup -g 3A6 -p 7").exit_code == 3);        // 7 coprime
  CHECK(run_cli("verify --n-max 6").exit_code == 0);
  CHECK(run_cli("verify --n-max 6 --corrupt-relation").exit_code == 5);
}

TEST_CASE("markdown table output renders") {
  auto r = run_cli("tables --which 2 --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("| row | column |") != std::string::npos);
  CHECK(r.output.find("all cells match") != std::string::npos);
}
