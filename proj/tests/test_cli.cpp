#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gpea/cli.hpp"
#include "gpea/corpus.hpp"
#include "gpea/errors.hpp"
#include "gpea/model_file.hpp"

using namespace gpea;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GPEA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string write_model(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "gpea_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("set specs") {
  const FiniteGpea d4 = model_d4();
  CHECK(parse_set_spec(d4, "list:1,2") == ElementSet{1, 2});
  CHECK(parse_set_spec(d4, "labels:a,1") == ElementSet{1, 3});
  CHECK(parse_set_spec(d4, "all") == d4.all());
  CHECK(parse_set_spec(d4, "atoms") == ElementSet{1, 2});
  CHECK(parse_set_spec(d4, "center") == d4.all());
  CHECK(parse_set_spec(d4, "pea-class:commutative") == d4.all());
  CHECK(parse_set_spec(d4, "pea-class:boolean") == d4.all());
  CHECK_THROWS_AS(parse_set_spec(d4, "list:9"), UsageError);
  CHECK_THROWS_AS(parse_set_spec(d4, "labels:z"), UsageError);
  CHECK_THROWS_AS(parse_set_spec(d4, "odd"), UsageError);
}

TEST_CASE("command line") {
  const std::string d4 = write_model("d4.gpea", serialize_model(model_d4()));
  const std::string v3 = write_model("v3.gpea", serialize_model(model_v3()));
  const std::string bad = write_model("bad.gpea", "gpea 2\nsum 1 1 0\n");
  const std::string broken = write_model("broken.gpea", "gpea 2\nsum 1\n");

  SUBCASE("validate") {
    CHECK(run("validate " + d4).status == kExitOk);
    const Run r = run("--format machine validate " + bad);
    CHECK(r.status == kExitInvalidModel);
    CHECK(r.out.find("axiom=GPEA4") != std::string::npos);
    CHECK(run("validate " + broken).status == kExitInvalidModel);
    CHECK(run("validate /nonexistent/file").status == kExitUsage);
  }
  SUBCASE("usage errors") {
    CHECK(run("").status == kExitUsage);
    CHECK(run("frobnicate").status == kExitUsage);
    CHECK(run("tdclose " + d4 + " --Q all --op sideways").status == kExitUsage);
    CHECK(run("decompose " + d4 + " --K list:3").status == kExitUsage);
    CHECK(run("laws " + d4 + " --law nope").status == kExitUsage);
    CHECK(run("enumerate --order 7").status == kExitUsage);
  }
  SUBCASE("computations") {
    Run r = run("--format machine decompose " + d4 + " --K all");
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("fundamental=(1,0,0)") != std::string::npos);
    r = run("--format machine decompose " + v3 + " --K all");
    CHECK(r.out.find("fundamental=(0,1,0)") != std::string::npos);
    r = run("--format machine decompose " + d4 + " --K list:3 --close");
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("K_closed_from={1}") != std::string::npos);
    r = run("--format machine decompose " + v3 + " --K list:0 --F all");
    CHECK(r.out.find("pi_I=0\npi_II=1\npi_III=0\n") != std::string::npos);
    CHECK(run("decompose " + v3 + " --K all --F list:0").status == kExitUsage);
    r = run("--format machine tdclose " + v3 + " --Q list:1,2 --op gamma");
    CHECK(r.out.find("result={0,a,b}") != std::string::npos);
    r = run("--format machine tdclose " + d4 + " --Q labels:a --op prime");
    CHECK(r.out.find("result={0,b}") != std::string::npos);
    r = run("--format machine info " + d4);
    CHECK(r.out.find("top=1") != std::string::npos);
    CHECK(r.out.find("center={0,a,b,1}") != std::string::npos);
    CHECK(run("exocenter " + d4).status == kExitOk);
    CHECK(run("center " + v3).status == kExitOk);
    r = run("--format machine covers " + v3);
    CHECK(r.out.find("cover e=a gamma=1") != std::string::npos);
    CHECK(r.out.find("cogpea=yes") != std::string::npos);
  }
  SUBCASE("enumeration") {
    const Run r = run("--format machine enumerate --order 4");
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("total=9") != std::string::npos);
    CHECK(run("enumerate --order 6").status == kExitUsage);
    CHECK(run("enumerate --order 6 --cap 6").status == kExitOk);
  }
  SUBCASE("laws") {
    Run r = run("--format machine laws " + d4);
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("law=EXCprop.iv model=d4 result=pass exhaustive=1") != std::string::npos);
    r = run("--format machine laws " + v3 + " --law gpea,decompos");
    CHECK(r.out == "law=gpea model=v3 result=pass exhaustive=1\nlaw=decompos model=v3 result=pass exhaustive=1\n"
                   "summary models=1 checks=2 failed=0 sampled=0\n");
    r = run("--seedless laws --corpus 2 --jobs 2");
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("failed 0") != std::string::npos);
  }
}

TEST_CASE("in-process runner") {
  std::ostringstream out, err;
  CHECK(run_cli({"--format", "machine", "enumerate", "--order", "3"}, out, err) == kExitOk);
  CHECK(out.str().find("total=4") != std::string::npos);
}
