#include <catch_amalgamated.hpp>

#include <sstream>

#include "quadlr/commands.hpp"
#include "quadlr/report.hpp"

using quadlr::report::Cell;
using quadlr::report::OutputRecord;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("CSV escaping", "[report]") {
  using quadlr::report::csv_escape;
  CHECK(csv_escape("Sigma+") == "Sigma+");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("") == "");
}

TEST_CASE("Column headers carry units", "[report]") {
  CHECK(quadlr::report::Column{"R", "bohr"}.header() == "R[bohr]");
  CHECK(quadlr::report::Column{"label", ""}.header() == "label");

  const auto rec = quadlr::commands::cmd_table(quadlr::builtin_cs(), {1});
  for (const auto& c : rec.sections[0].columns)
    if (c.name != "label") CHECK_FALSE(c.unit.empty());
}

TEST_CASE("CSV layout", "[report]") {
  OutputRecord rec{"demo", "test", {{"s", {{"x", "1"}, {"name", ""}}, {{Cell{1LL}, Cell{std::string("a,b")}}, {Cell{0.5}, Cell{}}}}}};
  CHECK(quadlr::report::render_csv(rec) ==
        "# command: demo\n# species: test\n# section: s\nx[1],name\n1,\"a,b\"\n0.5,\n");

  rec.sections.push_back({"t", {{"y", "bohr"}}, {{Cell{2.0}}}});
  const auto text = quadlr::report::render_csv(rec);
  CHECK(text.find("\n\n# section: t\ny[bohr]\n2\n") != std::string::npos);
}

TEST_CASE("CSV and JSON carry the same numbers", "[report]") {
  const auto rec = quadlr::commands::cmd_table(quadlr::builtin_cs(), {2, 3});
  const auto doc = quadlr::report::to_json(rec);
  const auto lines = split(quadlr::report::render_csv(rec), '\n');

  const auto& rows = doc["sections"][0]["rows"];
  REQUIRE(rows.size() == rec.sections[0].rows.size());
  // three comment lines, then the header
  REQUIRE(lines.size() == 4 + rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto fields = split(lines[4 + i], ',');
    CHECK(std::stoll(fields[0]) == rows[i][0].get<long long>());
    CHECK(fields[2] == rows[i][2].get<std::string>());
    CHECK(std::strtod(fields[3].c_str(), nullptr) == rows[i][3].get<double>());
    CHECK(std::stoll(fields[5]) == rows[i][5].get<long long>());
  }
  CHECK(doc["command"] == rec.command);
  CHECK(doc["sections"][0]["columns"][5]["unit"] == "Eh*a0^5");
}

TEST_CASE("Command-level input validation", "[report][commands]") {
  using quadlr::commands::InputError;
  const auto cs = quadlr::builtin_cs();
  CHECK_THROWS_AS(quadlr::commands::cmd_table(cs, {}), InputError);
  CHECK_THROWS_AS(quadlr::commands::cmd_table(cs, {-1}), InputError);
  CHECK_THROWS_AS(quadlr::commands::cmd_table(cs, {61}), InputError);

  quadlr::commands::CurveRequest req;
  req.r_lo = 10.0;
  CHECK_THROWS_AS(quadlr::commands::cmd_curves(cs, req), InputError);
  req.allow_below_leroy = true;
  CHECK_NOTHROW(quadlr::commands::cmd_curves(cs, req));
  req.points = 1;
  CHECK_THROWS_AS(quadlr::commands::cmd_curves(cs, req), InputError);

  CHECK_THROWS_AS(quadlr::commands::cmd_derived(cs, 0.0, 5), InputError);
  CHECK_THROWS_AS(quadlr::commands::cmd_crossings(cs, 2, 100.0, 50.0), InputError);
}

TEST_CASE("Curves output is grouped by label", "[report][commands]") {
  quadlr::commands::CurveRequest req;
  req.j_max = 2;
  req.points = 3;
  const auto rec = quadlr::commands::cmd_curves(quadlr::builtin_cs(), req);
  const auto& rows = rec.sections[0].rows;
  REQUIRE(rows.size() == 3 * (3 + 9 + 15));

  std::vector<std::string> seen;
  for (const auto& r : rows) {
    const auto& label = std::get<std::string>(r[3]);
    if (seen.empty() || seen.back() != label) seen.push_back(label);
  }
  const std::vector<std::string> expected = {"Sigma+", "Sigma-", "Pi", "Delta", "Phi"};
  CHECK(seen == expected);
}

TEST_CASE("Derived summary", "[report][commands]") {
  const auto rec = quadlr::commands::cmd_derived(quadlr::builtin_cs(), 100.0, 8);
  REQUIRE(rec.sections.size() == 2);
  const auto& summary = rec.sections[0].rows.at(0);
  CHECK(std::get<double>(summary[0]) == Catch::Approx(quadlr::le_roy_radius(quadlr::builtin_cs())));
  CHECK(std::get<std::string>(summary[6]) == "bare");
  CHECK(rec.sections[1].rows.size() == 8);
}
