#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "seriesforge/bfile.hpp"
#include "seriesforge/cli.hpp"
#include "seriesforge/weight_poly.hpp"

using namespace seriesforge;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SERIESFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("b-file parsing") {
  std::istringstream ok("# comment\n\n1 1\n  2   -3\n10 123456789012345678901\n");
  auto b = parse_bfile(ok);
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[1].first == 2);
  CHECK(b.entries[1].second == BigInt(-3));
  CHECK(b.entries[2].second == BigInt("123456789012345678901"));

  std::istringstream backwards("2 1\n1 1\n");
  CHECK_THROWS_AS(parse_bfile(backwards), BFileError);
  std::istringstream missing("1\n");
  CHECK_THROWS_AS(parse_bfile(missing), BFileError);
  std::istringstream junk("1 x\n");
  CHECK_THROWS_AS(parse_bfile(junk), BFileError);
  std::istringstream extra("1 2 3\n");
  CHECK_THROWS_AS(parse_bfile(extra), BFileError);
  CHECK_THROWS_AS(load_bfile(data("does_not_exist.txt")), BFileError);
  CHECK(load_bfile(data("A000669_prefix.txt")).entries.size() == 10);
}

TEST_CASE("count") {
  CHECK(run({"count", "ultrametrics", "--s", "4", "--m", "2"}).out == "52\n");
  CHECK(run({"count", "unlabeled", "--s", "10"}).out == "2312\n");
  CHECK(run({"count", "processes", "--s", "1"}).out == "1\n");
  CHECK(run({"count", "mobiles", "--s", "8", "--m", "8"}).out == "218563826824\n");
  CHECK(run({"count", "fully-colored-unlabeled", "--s", "3", "--m", "3"}).out == "72\n");
  CHECK(run({"count", "chain-increasing", "--s", "3", "--m", "0"}).out == "1\n");
  CHECK(run({"count", "ultrametrics", "--s", "4", "--m", "2", "--format", "json"}).out ==
        "{\"family\":\"ultrametrics\",\"m\":2,\"s\":4,\"value\":52}\n");
  CHECK(run({"count", "unlabeled", "--s", "4", "--format", "csv"}).out == "family,s,m,value\nunlabeled,4,,5\n");
}

TEST_CASE("count usage errors") {
  CHECK(run({"count", "trees", "--s", "3"}).status == kExitUsage);
  CHECK(run({"count", "ultrametrics", "--s", "3"}).status == kExitUsage);
  CHECK(run({"count", "unlabeled", "--s", "3", "--m", "2"}).status == kExitUsage);
  CHECK(run({"count", "ultrametrics", "--s", "0", "--m", "2"}).status == kExitUsage);
  CHECK(run({"count", "ultrametrics", "--s", "3", "--m", "0"}).status == kExitUsage);
  CHECK(run({"count", "ultrametrics", "--s", "3", "--m", "2", "--format", "xml"}).status == kExitUsage);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("tables match the published values") {
  for (std::string name : {"symbolic", "fully-colored-labeled", "mobiles", "riordan-triangle", "multipartite-unlabeled",
                           "fully-colored-unlabeled"}) {
    auto r = run({"table", name, "--check-paper"});
    CHECK_MESSAGE(r.status == kExitOk, name << ": " << r.err);
    CHECK(r.err.find("published cells match") != std::string::npos);
  }
}

TEST_CASE("table output forms") {
  CHECK(run({"table", "mobiles", "--max-s", "1", "--max-m", "1"}).out == "1\n");
  CHECK(run({"table", "symbolic", "--max-s", "3", "--max-m", "2", "--format", "csv"}).out ==
        "m,1,2,3\n1,1,1,1\n2,1,2,8\n");
  auto tri = run({"table", "riordan-triangle", "--max-n", "4", "--format", "csv"}).out;
  CHECK(tri == "k,2,3,4\n1,1,1,1\n2,,1,2\n3,,,2\nsum,1,2,5\n");
  auto j = nlohmann::json::parse(run({"table", "symbolic", "--max-s", "2", "--max-m", "2", "--format", "json"}).out);
  CHECK(j.at("rows")[1].at("values") == nlohmann::json::array({1, 2}));
  // Larger than published: extra cells are printed, overlapping ones still checked.
  auto big = run({"table", "symbolic", "--max-s", "9", "--max-m", "2", "--check-paper"});
  CHECK(big.status == kExitOk);
  CHECK(big.err.find("all 16 published cells match") != std::string::npos);
}

TEST_CASE("gf") {
  auto p = run({"gf", "P", "--m", "2", "--order", "3", "--format", "json"});
  REQUIRE(p.status == kExitOk);
  auto j = nlohmann::json::parse(p.out);
  auto third = weight_poly_from_json(j.at("coeffs")[2]);
  CHECK(third == weight_var(1, 3) + weight_var(2, 3) + 6 * weight_var(1, 2) * weight_var(2, 2));
  CHECK(run({"gf", "P", "--m", "1", "--order", "3"}).out == "1: 1\n2: x_{1,2}\n3: x_{1,3}\n");
  CHECK(run({"gf", "P", "--m", "2", "--order", "4", "--degrees", "ones"}).out == "1: 1\n2: 2\n3: 8\n4: 52\n");
  CHECK(run({"gf", "A", "--m", "2", "--order", "4"}).out == "1 2 8 52\n");
  CHECK(run({"gf", "G", "--m", "2", "--order", "3"}).out == "1 2 10\n");
  CHECK(run({"gf", "Y", "--m", "0", "--order", "3"}).out == "1 1 1\n");
  CHECK(run({"gf", "A", "--m", "2", "--order", "2", "--format", "csv"}).out == "n,coefficient\n1,1\n2,2\n");
  auto a = nlohmann::json::parse(run({"gf", "A", "--m", "2", "--order", "4", "--format", "json"}).out);
  CHECK(a.at("coeffs") == nlohmann::json::array({"1", "2", "8", "52"}));
  CHECK(run({"gf", "Q", "--m", "2", "--order", "3"}).status == kExitUsage);
  CHECK(run({"gf", "A", "--m", "0", "--order", "3"}).status == kExitUsage);
  CHECK(run({"gf", "A", "--order", "3"}).status == kExitUsage);
}

TEST_CASE("gf order limits") {
  CHECK(run({"gf", "A", "--m", "2", "--order", "17"}).status == kExitUsage);
  CHECK(run({"gf", "A", "--m", "2", "--order", "17", "--max-order", "17"}).status == kExitOk);
  ::setenv("SERIESFORGE_MAX_ORDER", "3", 1);
  CHECK(run({"gf", "A", "--m", "2", "--order", "4"}).status == kExitUsage);
  CHECK(run({"gf", "A", "--m", "2", "--order", "3"}).status == kExitOk);
  ::setenv("SERIESFORGE_MAX_ORDER", "lots", 1);
  CHECK(run({"gf", "A", "--m", "2", "--order", "3"}).status == kExitUsage);
  ::unsetenv("SERIESFORGE_MAX_ORDER");
}

TEST_CASE("verify against b-files") {
  auto ok = run({"verify", "unlabeled", "--bfile", data("A000669_prefix.txt")});
  CHECK(ok.status == kExitOk);
  CHECK(ok.out == "OK: 10 terms match\n");
  auto bad = run({"verify", "unlabeled", "--bfile", data("A000669_corrupted.txt")});
  CHECK(bad.status == kExitMismatch);
  CHECK(bad.out.find("n=7") != std::string::npos);
  CHECK(run({"verify", "unlabeled", "--bfile", data("missing.txt")}).status == kExitUsage);

  auto dir = std::filesystem::temp_directory_path();
  auto ones = (dir / "seriesforge_ones.txt").string();
  {
    std::ofstream f(ones);
    for (int n = 1; n <= 12; ++n) f << n << " 1\n";
  }
  CHECK(run({"verify", "ultrametrics", "--m", "1", "--bfile", ones}).status == kExitOk);
  auto junk = (dir / "seriesforge_junk.txt").string();
  {
    std::ofstream f(junk);
    f << "1 1\n1 1\n";
  }
  CHECK(run({"verify", "unlabeled", "--bfile", junk}).status == kExitUsage);
  std::filesystem::remove(ones);
  std::filesystem::remove(junk);
}

TEST_CASE("output file") {
  auto path = (std::filesystem::temp_directory_path() / "seriesforge_out.txt").string();
  auto r = run({"count", "ultrametrics", "--s", "3", "--m", "2", "-o", path});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "8");
  std::filesystem::remove(path);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"table", "symbolic", "--format", "json"},
      {"table", "riordan-triangle", "--format", "csv"},
      {"gf", "P", "--m", "3", "--order", "5", "--format", "json"},
      {"gf", "G", "--m", "3", "--order", "8"},
      {"count", "fully-colored-labeled", "--s", "6", "--m", "6"},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.status == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
