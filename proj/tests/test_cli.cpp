#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QUADLR_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string data_dir = QUADLR_DATA_DIR;

}  // namespace

TEST_CASE("CLI table output", "[cli]") {
  const auto r = run("table --species cs --j 1");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("# command: table --species Cs2+Cs(6P) --j 1\n", 0) == 0);
  CHECK(r.out.find("j[1],m_J[1],label,c5_reduced[q2_0*r2],c5_exact[q2_0*r2],c5_au[Eh*a0^5]\n") != std::string::npos);
  CHECK(r.out.find(",Sigma+,-1.44,,-1674\n") != std::string::npos);
  CHECK(r.out.find(",Delta,-0.24,-6/25,-279\n") != std::string::npos);
  CHECK(run("table --species cs --j 1").out == r.out);
}

TEST_CASE("CLI JSON output parses", "[cli]") {
  const auto r = run("table --species li --j 2 --format json");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["sections"][0]["rows"].size() == 15);
}

TEST_CASE("CLI species files", "[cli]") {
  CHECK(run("table --species " + data_dir + "/cs.species --j 1").status == 0);
  CHECK(run("table --species " + data_dir + "/nope.species --j 1").status == 2);
  CHECK(run("table --species unobtainium --j 1").status == 2);
}

TEST_CASE("CLI input errors", "[cli]") {
  CHECK(run("table --species cs").status == 3);                 // --j required
  CHECK(run("table --species cs --j -2").status == 3);
  CHECK(run("table --species cs --j 1 --format xml").status == 3);
  CHECK(run("curves --species cs --rmin 10").status == 3);       // below the Le Roy radius
  CHECK(run("curves --species cs --rmin 10 --allow-below-leroy --points 5").status == 0);
  CHECK(run("curves --species cs --points 1").status == 3);
  CHECK(run("crossings --species cs --rmin 300 --rmax 200").status == 3);
  CHECK(run("derived --species cs --temperature-uK -1").status == 3);
  CHECK(run("frobnicate").status == 3);
  CHECK(run("--help").status == 0);
}

TEST_CASE("CLI curves with two points", "[cli]") {
  const auto r = run("curves --species cs --jmax 0 --points 2");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line.rfind("curve[", 0) != 0) ++rows;
  CHECK(rows == 3 * 2);  // three j = 0 curves
}

TEST_CASE("CLI derived and crossings", "[cli]") {
  const auto d = run("derived --species cs --mass reduced --nmax 3");
  REQUIRE(d.status == 0);
  CHECK(d.out.find(",reduced,") != std::string::npos);
  CHECK(d.out.find("# section: barriers\n") != std::string::npos);

  const auto c = run("crossings --species cs --jmax 2");
  REQUIRE(c.status == 0);
  CHECK(c.out.find("R[bohr],E[Eh],E[cm-1]") != std::string::npos);
}

TEST_CASE("CLI check subcommand", "[cli]") {
  const auto r = run("check");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
