#include "gfano/cli.hpp"
#include "gfano/json_io.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace gfano;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gfano");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("series round trips through JSON") {
  const TruncatedSeries s({1, fraction(-3, 7), 0, 12});
  CHECK(series_from_json(series_to_json(s)) == s);
  const auto q = klein_j(6);
  CHECK(qexpansion_from_json(qexpansion_to_json(q, "1A")) == q);
  const auto e = eta(5);
  const auto j = qexpansion_to_json(e);
  CHECK(j["offset"] == "1/24");
  CHECK(qexpansion_from_json(j) == e);
  const D3Operator op{1, 43, 12, 78, 216};
  CHECK(operator_from_json(operator_to_json(op)) == op);
}

TEST_CASE("verify ALL as JSON") {
  const auto r = invoke({"verify", "--family", "ALL", "--order", "20", "--json"});
  CHECK(r.code == 0);
  const auto lines = json_lines(r.out);
  CHECK(lines.size() == 10);
  for (const auto& l : lines) {
    CHECK(l["status"] == "PASS");
    CHECK(l["order"] == 20);
  }
  // deterministic output
  CHECK(invoke({"verify", "--order", "20", "--json"}).out == r.out);
}

TEST_CASE("failing verification exits 1 and reports on stderr") {
  const auto r = invoke({"verify", "--family", "Y24", "--s", "4", "--c", "7", "--order", "15"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("FAIL", 0) == 0);
  CHECK(r.err.find("first_mismatch=q^1") != std::string::npos);
}

TEST_CASE("free family accepts --s alone") {
  const auto r = invoke({"verify", "--family", "Y28", "--s", "2", "--order", "15", "--json"});
  CHECK(r.code == 0);
  const auto l = json_lines(r.out).at(0);
  CHECK(l["s"] == "2");
  CHECK(l["c"] == "3");
}

TEST_CASE("configuration errors exit 2") {
  CHECK(invoke({"verify", "--family", "Y99"}).code == 2);
  CHECK(invoke({"verify", "--s", "3"}).code == 2);
  CHECK(invoke({"verify", "--order", "0"}).code == 2);
  CHECK(invoke({"verify", "--family", "Y24", "--s", "x/y"}).code == 2);
  CHECK(invoke({"sweep", "--family", "Y24"}).code == 2);
  CHECK(invoke({"sweep", "--family", "Y28", "--sweep-range", "3"}).code == 2);
  CHECK(invoke({"series", "--family", "Y28", "--kind", "gseries"}).code == 2);
  CHECK(invoke({"series", "--family", "Y30", "--kind", "bogus"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("sweep") {
  const auto r = invoke({"sweep", "--family", "Y28", "--sweep-range", "0:3", "--order", "20"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("series output") {
  const auto r = invoke({"series", "--family", "Y30", "--order", "5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json_lines(r.out).at(0);
  CHECK(series_from_json(j["series"]) == ints({1, 3, 15, 105, 855, 7533}));
  const auto h = invoke({"series", "--family", "Y20", "--kind", "hauptmodul", "--order", "6", "--json"});
  const auto hj = json_lines(h.out).at(0);
  CHECK(hj["series"]["offset"] == "-1");
  CHECK(hj["series"]["coeffs"][2] == "22");
  const auto d3 = invoke({"series", "--family", "Y24", "--kind", "d3", "--order", "4"});
  CHECK(d3.code == 0);
  CHECK(d3.out.find("540") != std::string::npos);
}

TEST_CASE("tables and families") {
  const auto t = invoke({"tables", "--json"});
  REQUIRE(t.code == 0);
  const auto j = json_lines(t.out).at(0);
  CHECK(j["m23"].size() == 12);
  CHECK(j["m24_extra"].size() == 9);
  CHECK(j["s24_extra"].size() == 7);
  CHECK(j["correspondence"].size() == 16);
  CHECK(invoke({"tables"}).out.find("1^2 2^2 3^2 6^2") != std::string::npos);
  const auto f = invoke({"families", "--json"});
  CHECK(json_lines(f.out).at(0)["families"].size() == 9);
}

TEST_CASE("--out writes a file") {
  const std::string path = "gfano_cli_test_out.txt";
  const auto r = invoke({"families", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("Y48_2") != std::string::npos);
  std::remove(path.c_str());
}
