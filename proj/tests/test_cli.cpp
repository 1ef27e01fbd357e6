#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "gvkit/cli.hpp"
#include "gvkit/tables.hpp"
#include "gvkit/transforms.hpp"

using namespace gvkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("gvkit_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const char* kQuinticGv = "g,d,value\n0,1,2875\n0,2,609250\n0,3,317206375\n1,3,609250\n";

}  // namespace

TEST_CASE("bounds table row d = 20") {
  const auto r = run({"bounds", "table", "--n", "5", "--i", "0", "--dmax", "25"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 26);
  CHECK(ls[0].rfind("d,B(d),hyp_bound,nonhyp_bound,floor", 0) == 0);
  CHECK(ls[20].rfind("20,51,51,", 0) == 0);
}

TEST_CASE("walls candidates and svg are deterministic") {
  TempDir dir;
  std::vector<std::string> args{"walls", "candidates", "--n", "5", "--d", "20", "--b", "-2",
                                "--out", dir / "w.csv", "--emit-svg", dir / "w.svg"};
  REQUIRE(run(args).code == 0);
  const auto csv = slurp(dir / "w.csv");
  const auto svg = slurp(dir / "w.svg");
  const auto ls = lines(csv);
  REQUIRE(ls.size() == 10);
  CHECK(ls[0] == "k,d1,center_b,radius_sq");
  for (int i = 1; i <= 8; ++i) CHECK(ls[i].rfind("1," + std::to_string(i) + ",", 0) == 0);
  CHECK(ls[9].rfind("2,1,", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(dir / "w.csv") == csv);
  CHECK(slurp(dir / "w.svg") == svg);
  // No temporaries left behind.
  int files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
  CHECK(files == 2);
}

TEST_CASE("bcov plan at g = 51") {
  const auto r = run({"bcov", "plan", "--g", "51"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["unresolved"] == 1);
  CHECK(j["status"] == "conditional");
  CHECK(j["supplements"][0]["d"] == 20);
  CHECK(j["supplements"][0]["value"] == 175);
  CHECK(nlohmann::json::parse(run({"bcov", "plan", "--g", "54"}).out)["status"] == "fails");
}

TEST_CASE("bcov castelnuovo reports unresolved with exit 2") {
  TempDir dir;
  write(dir / "gw.csv", "g,d,value\n");
  const auto r = run({"bcov", "castelnuovo", "--g", "51", "--gw", dir / "gw.csv", "--in-gmax", "51", "--in-dmax", "19"});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["missing"] == 1);
  const auto ok = run({"bcov", "castelnuovo", "--g", "4", "--gw", dir / "gw.csv", "--in-gmax", "4", "--in-dmax", "3"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["resolved"] == true);
}

TEST_CASE("bcov gap on the toy frame") {
  const auto j = nlohmann::json::parse(run({"bcov", "gap", "--g", "2"}).out);
  CHECK(j["physical_frame"] == false);
  CHECK(j["values"][0]["value"] == "-1/120");
  CHECK(j["values"][1]["value"] == "1/240");
}

TEST_CASE("transform round trip through files") {
  TempDir dir;
  write(dir / "gv.csv", kQuinticGv);
  REQUIRE(run({"transform", "gv2gw", "--in", dir / "gv.csv", "--out", dir / "gw.csv"}).code == 0);
  CHECK(lines(slurp(dir / "gw.csv"))[1] == "0,1,2875");
  const auto r = run({"transform", "gw2gv", "--in", dir / "gw.csv", "--integrality", "--out", dir / "back.csv"});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "back.csv") == kQuinticGv);
  // JSON by extension.
  REQUIRE(run({"transform", "gv2gw", "--in", dir / "gv.csv", "--out", dir / "gw.json"}).code == 0);
  CHECK(gw_from_json(nlohmann::json::parse(slurp(dir / "gw.json"))) == gw_from_csv(slurp(dir / "gw.csv")));
}

TEST_CASE("non-integral GV exits 2 with a report") {
  TempDir dir;
  write(dir / "gw.csv", "g,d,value\n0,1,1/2\n");
  const auto r = run({"transform", "gw2gv", "--in", dir / "gw.csv", "--integrality", "--out", dir / "gv.csv",
                      "--report", dir / "rep.json"});
  CHECK(r.code == 2);
  const auto rep = nlohmann::json::parse(slurp(dir / "rep.json"));
  CHECK(rep["ok"] == false);
  CHECK(rep["non_integral"].size() == 1);
}

TEST_CASE("gv2pt with Castelnuovo vanishing matches the library") {
  TempDir dir;
  // g = 2 at d = 1 lies above B(1) = 8/5 and must be zeroed.
  write(dir / "gv.csv", "g,d,value\n0,1,2875\n2,1,7\n0,2,609250\n0,3,317206375\n1,3,609250\n");
  const auto r = run({"transform", "gv2pt", "--in", dir / "gv.csv", "--in-gmax", "3", "--dmax", "3", "--qwindow",
                      "-10:10", "--apply-castelnuovo", "--out", dir / "pt.csv"});
  REQUIRE(r.code == 0);
  const auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["gv_zeroed"].size() == 1);

  auto gv = apply_castelnuovo_vanishing(gv_from_csv(slurp(dir / "gv.csv"), 3, -1));
  const auto pt = apply_castelnuovo_vanishing(pt_connected_to_table(gv_to_pt_connected(gv, 3, -10, 10), -10));
  CHECK(slurp(dir / "pt.csv") == to_csv(pt));

  // Without the flag the table is not known to be complete.
  CHECK(run({"transform", "gv2pt", "--in", dir / "gv.csv", "--dmax", "3", "--qwindow", "-10:10"}).code == 1);
}

TEST_CASE("pt2dt with the default degree-zero series") {
  TempDir dir;
  write(dir / "gv.csv", kQuinticGv);
  REQUIRE(run({"transform", "gv2pt", "--in", dir / "gv.csv", "--in-gmax", "3", "--dmax", "2", "--qwindow", "-4:6",
               "--apply-castelnuovo", "--out", dir / "pt.json"})
              .code == 0);
  REQUIRE(run({"transform", "pt2dt", "--in", dir / "pt.json", "--out", dir / "dt.csv"}).code == 0);
  const auto pt = pt_from_json(nlohmann::json::parse(slurp(dir / "pt.json")));
  const auto dt = pt_to_dt(pt, degree_zero_dt(-200, 10));
  CHECK(slurp(dir / "dt.csv") == to_csv(dt));
}

TEST_CASE("config file with flags taking precedence") {
  TempDir dir;
  write(dir / "run.cfg", "# bound sweep\nn = 5\ndmax = 12\ni = 0\n");
  const auto r = run({"--config", dir / "run.cfg", "bounds", "table"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 13);
  const auto over = run({"--config", dir / "run.cfg", "bounds", "table", "--dmax", "3"});
  CHECK(lines(over.out).size() == 4);
  write(dir / "bad.cfg", "bogus = 1\n");
  CHECK(run({"--config", dir / "bad.cfg", "bounds", "table"}).code == 1);
  CHECK(run({"--config", dir / "missing.cfg", "bounds", "table"}).code == 1);
}

TEST_CASE("usage and input errors exit 1 without output files") {
  TempDir dir;
  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"transform", "gv2gw"}).code == 1);
  CHECK(run({"transform", "gv2gw", "--in", dir / "absent.csv", "--out", dir / "o.csv"}).code == 1);
  write(dir / "bad.csv", "g,d,value\n0,1,not-a-number\n");
  CHECK(run({"transform", "gv2gw", "--in", dir / "bad.csv", "--out", dir / "o.csv"}).code == 1);
  write(dir / "gv.csv", kQuinticGv);
  CHECK(run({"transform", "gv2pt", "--in", dir / "gv.csv", "--dmax", "2", "--qwindow", "5", "--out", dir / "o.csv"})
            .code == 1);
  CHECK(run({"transform", "gv2pt", "--in", dir / "gv.csv", "--dmax", "2", "--qwindow", "5:1", "--out", dir / "o.csv"})
            .code == 1);
  CHECK_FALSE(fs::exists(dir / "o.csv"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate") {
  TempDir dir;
  write(dir / "good.csv", kQuinticGv);
  CHECK(run({"validate", "--gv", dir / "good.csv"}).code == 0);
  write(dir / "bad.csv", "g,d,value\n2,1,3\n0,2,1/3\n");
  const auto r = run({"validate", "--gv", dir / "bad.csv"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["non_integral"].size() == 1);
  CHECK(j["castelnuovo_violations"].size() == 1);
  write(dir / "pt.csv", "n,d,value\n-1,1,4\n1,1,2875\n");
  CHECK(run({"validate", "--pt", dir / "pt.csv", "--in-dmax", "1", "--qwindow", "-3:3"}).code == 2);
  CHECK(run({"validate"}).code == 1);
}

TEST_CASE("bounds reports") {
  const auto c = run({"bounds", "corollary", "--gmax", "53"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["boundary_equality_at_51_20"] == true);
  const auto p = run({"bounds", "properties"});
  CHECK(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["passed"] == true);
  const auto e = nlohmann::json::parse(run({"bounds", "extremal", "--mmax", "4"}).out);
  CHECK(e[0]["gv"] == 10);
  CHECK(e[3]["gv"] == 175);
}
