#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "modspace/cli/run.hpp"
#include "modspace/io/json.hpp"

using modspace::io::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = modspace::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MODSPACE_DATA_DIR) + "/" + name; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("modspace_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const Json& j) {
  std::string p = temp(name);
  std::ofstream(p) << j.dump();
  return p;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("dims grid") {
  auto r = run({"dims", "--grid", "n=1..2 d=2..3 r=2..4"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1 + 2 * 2 * 3 * 3);
  CHECK(rows[0][0] == "n");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    long n = std::stol(rows[k][0]), d = std::stol(rows[k][1]), r1 = std::stol(rows[k][2]), r2 = std::stol(rows[k][3]);
    CHECK(std::stol(rows[k][4]) == n * d + (r1 - 1) * d + (r2 - 1) * d);
    if (r1 >= d && r2 >= d) {
      CHECK(std::stol(rows[k][5]) == (r1 - d) * d + (r2 - d) * d + (d * d - d) * d);
      CHECK(rows[k][6] == (n < d * d - 3 * d + 2 ? "1" : "0"));
    } else {
      CHECK(rows[k][5].empty());
    }
  }
  CHECK(run({"dims", "--grid", "n=2..1"}).code == 3);
  auto bad = run({"dims", "--grid", "q=1..2"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("grid.q") != std::string::npos);
}

TEST_CASE("tangent and validate") {
  auto t = run({"tangent", "bilin", "--point", data("main_1222.json"), "--check"});
  REQUIRE(t.code == 0);
  CHECK(t.json()["dim"] == 6);
  CHECK(t.json()["main_dim"] == 6);
  CHECK(t.json()["hom_triple_dim"] == 6);
  auto q = run({"tangent", "quot", "--point", data("cyclic_x2.json")});
  REQUIRE(q.code == 0);
  CHECK(q.json()["dim"] == 4);
  CHECK(q.json()["hom_dim"] == 4);

  CHECK(run({"validate", "--point", data("main_1222.json")}).code == 0);
  Json bad = Json::parse(std::ifstream(data("main_1222.json")));
  bad["Pihat"]["entries"][1] = "1";
  auto v = run({"validate", "--point", write_temp("bad_point.json", bad)});
  CHECK(v.code == 1);
  CHECK(v.json()["validation"]["equivariant"] == false);
  CHECK(run({"tangent", "bilin", "--point", write_temp("bad_point.json", bad)}).code == 1);
}

TEST_CASE("malformed input exits 3 and names the field") {
  Json j = Json::parse(std::ifstream(data("main_1222.json")));
  j["M1"].erase("G");
  auto r = run({"validate", "--point", write_temp("missing.json", j)});
  CHECK(r.code == 3);
  CHECK(r.err.find("point.M1.G") != std::string::npos);
  std::ofstream(temp("syntax.json")) << "{";
  CHECK(run({"validate", "--point", temp("syntax.json")}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"secant-dim", "--d", "2"}).code == 3);
  auto f = run({"secant-dim", "--d", "2", "--r", "2", "--field", "F:4"});
  CHECK(f.code == 3);
  CHECK(f.err.find("field") != std::string::npos);
}

TEST_CASE("member round trips its point") {
  auto r = run({"member", "--m1", data("split_module.json"), "--m2", data("split_module.json"), "--m3",
                data("split_target.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["member"] == true);
  CHECK(r.json()["solution_dim"] == 0);
  CHECK(run({"validate", "--point", write_temp("member_point.json", r.json()["point"])}).code == 0);
  auto no = run({"member", "--m1", data("cyclic_x2.json"), "--m2", data("split_module.json"), "--m3",
                 data("split_target.json")});
  CHECK(no.code == 1);
  CHECK(no.json()["member"] == false);
}

TEST_CASE("secant, reducibility, grcount, bruteforce") {
  auto s = run({"secant-dim", "--d", "3", "--r", "3", "--seed", "4"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["bound"] == 20);
  CHECK(s.json()["ambient"] == 26);
  CHECK(s.json()["fills"] == false);
  CHECK(run({"secant-dim", "--d", "3", "--r", "3", "--seed", "4"}).out == s.out);
  CHECK(run({"secant-dim", "--d", "2", "--r", "2", "--workers", "2"}).json()["terracini_dim"] == 7);

  auto red = run({"reducibility", "--n", "1", "--d", "3", "--r1", "3", "--r2", "3"});
  CHECK(red.json()["degenerate_dim"] == 18);
  CHECK(red.json()["main_dim"] == 15);
  CHECK(red.json()["reducible_by_count"] == true);

  auto g = run({"grcount", "--d", "2", "--r", "3", "--q", "3"});
  CHECK(g.code == 0);
  CHECK(g.json()["expected"] == 13);
  CHECK(g.json()["match"] == true);
  CHECK(run({"grcount", "--d", "2", "--r", "4", "--q", "3", "--cap", "100"}).code == 2);

  auto b = run({"bruteforce-rank", "--named", "mu2", "--field", "F:2"});
  REQUIRE(b.code == 0);
  CHECK(b.json()["fq_rank"]["rank"] == 3);
  CHECK(b.json()["geometric"]["rank"] == 3);
  CHECK(run({"bruteforce-rank", "--named", "mu2", "--field", "Q"}).code == 1);
}

TEST_CASE("classify222 and limits") {
  auto n = run({"classify222", "--named", "mu1", "--check"});
  REQUIRE(n.code == 0);
  CHECK(n.json()["classification"]["label"] == "generic");
  CHECK(n.json()["hyperdeterminant"] == "1");
  auto t = run({"classify222", "--tensor", data("mu2.json")});
  CHECK(t.json()["classification"]["label"] == "W-type");
  CHECK(t.json()["tensor"]["field"] == "F:5");
  CHECK(run({"classify222", "--named", "mu7"}).code == 1);
  CHECK(run({"classify222"}).code == 3);

  std::string csv = temp("census.csv");
  auto e = run({"classify222", "--enumerate", "q=2", "--out", csv, "--workers", "2"});
  REQUIRE(e.code == 0);
  std::stringstream text;
  text << std::ifstream(csv).rdbuf();
  auto rows = csv_rows(text.str());
  CHECK(rows[0] == std::vector<std::string>{"label", "tensor_class", "count"});
  Json detail = Json::parse(std::ifstream(csv + ".json"));
  std::uint64_t total = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) total += std::stoull(rows[k][2]);
  CHECK(total == detail["points"].get<std::uint64_t>());
  CHECK(detail["ok"] == true);
  // example points in the detail file re-ingest and re-validate
  for (const auto& cls : detail["classes"])
    CHECK(run({"validate", "--point", write_temp("example.json", cls["example"])}).code == 0);
  CHECK(run({"classify222", "--enumerate", "q=2", "--cap", "10"}).code == 2);
  CHECK(run({"classify222", "--enumerate", "q=x"}).code == 3);

  auto l = run({"limits", "--field", "F:5"});
  REQUIRE(l.code == 0);
  CHECK(l.json()["families"]["mu2_t"]["rank_drop"] == true);
  auto lq = run({"limits", "--point", data("cyclic_x2.json"), "--samples", "1,2"});
  REQUIRE(lq.code == 0);
  CHECK(lq.json()["recovers_base"] == true);
  CHECK(lq.json()["family"]["branch"] == "square_zero");
}
