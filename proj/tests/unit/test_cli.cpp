#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "lcsurf/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = lcsurf::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string preset(const std::string& name, const std::string& rho = "3") {
  const Run r = run({"preset", name, "--rho", rho});
  REQUIRE(r.code == 0);
  return r.out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

json error_json(const std::string& err) {
  const std::string first = lines(err).at(0);
  REQUIRE(first.starts_with("error: "));
  return json::parse(first.substr(7));
}

}  // namespace

TEST_CASE("classify Example 12.3 from stdin") {
  const Run r = run({"classify"}, preset("ex12_3"));
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 5);
  CHECK(l[1] == "{C1'}\t(-1)\tlc_simple_elliptic\ttrue");
  CHECK(l[2] == "{C2'}\t(-1)\tlc_simple_elliptic\ttrue");
  CHECK(l[3] == "{l}\t(0)\tdlt_rational\ttrue");
  CHECK(l[4].find("projective=false") != std::string::npos);

  const Run m = run({"--machine", "classify", "-"}, preset("ex12_3"));
  REQUIRE(m.code == 0);
  const json j = json::parse(m.out);
  REQUIRE(j["points"].size() == 3);
  // Everything printed for humans is present in the machine form.
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"C1'", "lc_simple_elliptic"}, {"C2'", "lc_simple_elliptic"}, {"l", "dlt_rational"}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(j["points"][i]["members"][0] == rows[i].first);
    CHECK(j["points"][i]["status"] == rows[i].second);
    CHECK(j["points"][i].contains("discrepancies"));
    CHECK(j["points"][i]["gorenstein_hint"] == true);
  }
  CHECK(j["flags"]["projective"] == "false");
}

TEST_CASE("mmp on Example 12.5") {
  const std::string doc = preset("ex12_5", "4");
  const Run r = run({"mmp"}, doc);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("steps: 3") != std::string::npos);
  CHECK(r.out.find("endpoint: minimal_nef_on_list") != std::string::npos);
  const Run m = run({"--machine", "mmp"}, doc);
  const json j = json::parse(m.out);
  REQUIRE(j["steps"].size() == 3);
  CHECK(j["steps"][0]["curve"] == "B1");
  CHECK(j["steps"][2]["curve"] == "B3");
  CHECK(j["endpoint"] == "minimal_nef_on_list");
  CHECK(j.contains("strategy"));
}

TEST_CASE("mmp on W with and without a support") {
  const std::string doc = preset("ex12_3_w");
  const json j = json::parse(run({"--machine", "mmp"}, doc).out);
  CHECK(j["endpoint"] == "mori_fiber_indicated");
  REQUIRE(j["steps"].size() == 2);
  CHECK(j["steps"][0]["curve"] == "E1");
  CHECK(j["steps"][1]["curve"] == "E2");
  const json s = json::parse(run({"--machine", "mmp", "-", "--support", "E1"}, doc).out);
  CHECK(s["steps"].size() == 1);
  CHECK(s["endpoint"] == "exhausted_candidates");
}

TEST_CASE("picard, nef, intersect, pullback") {
  CHECK(run({"picard"}, preset("ex12_3")).out.starts_with("rank 0"));
  const json p = json::parse(run({"--machine", "picard"}, preset("ex12_4")).out);
  CHECK(p["rank"] == 1);
  const std::string w = preset("ex12_3_w");
  CHECK(run({"intersect", "-", "l", "E1"}, w).out == "1\n");
  const Run n = run({"nef"}, w);
  CHECK(n.out.find("nef on listed curves: false") != std::string::npos);
  const Run cone = run({"--machine", "nef", "-", "--span", "l,E1"}, preset("ex12_4"));
  REQUIRE(cone.code == 0);
  CHECK(json::parse(cone.out).contains("is_zero"));
  const Run pb = run({"--machine", "pullback", "-", "F"}, preset("ex12_3"));
  REQUIRE(pb.code == 0);
}

TEST_CASE("contract prints a new document") {
  const Run r = run({"contract", "-", "E1"}, preset("ex12_3_w"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("[clusters]") != std::string::npos);
  CHECK(r.out.find("name = ex12_3_w/E1") != std::string::npos);
  const std::string doc = r.out.substr(r.out.find("[preset]"));
  const Run again = run({"contract", "-", "E2"}, doc);
  CHECK(again.code == 0);
}

TEST_CASE("check-vanishing") {
  const std::string w = preset("ex12_3_w");
  const Run r = run({"check-vanishing", "-", "E1=0", "0"}, w);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("variant (1): holds") != std::string::npos);
  const json j = json::parse(run({"--machine", "check-vanishing", "-", "l=0", "0", "--variant", "1"}, w).out);
  CHECK(j["holds"] == false);
  CHECK(j["conclusion"] == "no conclusion");
}

TEST_CASE("exit codes and error lines") {
  const Run usage = run({"frobnicate"});
  CHECK(usage.code == 2);
  CHECK(error_json(usage.err)["kind"] == "UsageError");
  CHECK(run({}).code == 2);
  CHECK(run({"preset", "ex99"}).code == 2);
  CHECK(run({"preset", "ex12_5", "--rho", "1"}).code == 2);

  const Run parse = run({"classify"}, "[curves]\nA 0 0\nB 0 0\n[matrix]\n-2 1\n1\n");
  CHECK(parse.code == 1);
  const json e = error_json(parse.err);
  CHECK(e["kind"] == "ParseError");
  CHECK(e["line"] == 6);

  const Run reject = run({"contract", "-", "F"}, preset("ex12_3_w"));
  CHECK(reject.code == 1);
  CHECK(error_json(reject.err)["kind"] == "RejectNonNegativeSelfInt");

  const Run unknown = run({"intersect", "-", "Q", "l"}, preset("ex12_3_w"));
  CHECK(unknown.code == 1);
  CHECK(error_json(unknown.err)["kind"] == "UnknownName");

  CHECK(run({"classify", "/nonexistent/file"}).code == 1);
}
