#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "srdmod/io.hpp"
#include "srdmod/parse.hpp"
#include "srdmod/verify.hpp"

using namespace srdmod;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SR_DMOD_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(SR_DMOD_DATA) + "/" + name; }

}  // namespace

TEST_CASE("complex json round trip") {
  const auto cx = tripp_complex();
  CHECK(complex_from_json(complex_to_json(cx)) == cx);
  CHECK(load_complex(data("tripp.json")) == cx);
  CHECK(complex_from_json(json::parse(R"({"n":2,"facets":[[0,1]]})")).labels() == std::vector<std::string>{"x1", "x2"});
  CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[[0]]})")), InputError);
  CHECK_THROWS_AS(complex_from_json(json::parse(R"({"n":2,"facets":[[0,4]]})")), InputError);
  CHECK_THROWS_AS(load_complex("/nonexistent/complex.json"), InputError);
}

TEST_CASE("scalar, point and box parsing") {
  CHECK(parse_scalar("-3/6", Field::rationals()).to_string() == "-1/2");
  CHECK(parse_scalar("1/2", Field::prime(3)).to_string() == "2");
  CHECK(parse_point("1,1/2,0", Field::rationals()).size() == 3);
  CHECK(parse_box("-4:4") == std::pair<int, int>{-4, 4});
  CHECK_THROWS_AS(parse_box("4"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", Field::rationals()), ParseError);
  const auto [num, den] = parse_fraction("(x + w)/w^2", Field::rationals(), tripp_complex().labels());
  CHECK(num.to_string(tripp_complex().labels()) == "x + w");
  CHECK(den.to_string(tripp_complex().labels()) == "w^2");
}

TEST_CASE("verify reports are deterministic") {
  VerifyOptions opt;
  opt.seed = 42;
  const auto a = run_verify(tripp_complex(), opt).to_json().dump();
  const auto b = run_verify(tripp_complex(), opt).to_json().dump();
  CHECK(a == b);
  const auto doc = json::parse(a);
  CHECK(doc["schema"] == kVerifySchema);
  CHECK(doc["seed"] == 42);
  for (const auto& r : doc["records"])
    if (r["verdict"] == "FAIL") CHECK_FALSE(r["witness"].empty());
}

TEST_CASE("verify records are sorted by check then instance hash") {
  const auto rep = run_verify(two_edges_complex(), VerifyOptions{});
  for (std::size_t i = 1; i < rep.records.size(); ++i) {
    const auto& p = rep.records[i - 1];
    const auto& q = rep.records[i];
    REQUIRE((p.check < q.check || (p.check == q.check && fnv1a(p.instance) <= fnv1a(q.instance))));
  }
  CHECK(rep.count(Verdict::fail) == 0);
  CHECK(rep.exit_code() == 0);
  CHECK(fnv1a("") == 14695981039346656037ull);
}

TEST_CASE("fail witnesses replay") {
  const auto rep = run_verify(tripp_complex(), VerifyOptions{});
  for (const auto& r : rep.records) {
    if (r.check != "ddm.find_inverse" || r.verdict != Verdict::fail) continue;
    const auto res = run(std::string("ddm ") + data("tripp.json") + " --point 1,1,0,0 --action invert --op \"" +
                         r.instance.substr(r.instance.find("w=<") + 3, r.instance.size() - r.instance.find("w=<") - 4) +
                         "\"");
    CHECK(res.code == 1);
    CHECK(json::parse(res.out)["witness"] == r.witness);
  }
}

TEST_CASE("command line") {
  const std::string t = data("tripp.json");
  auto r = run("check " + t);
  CHECK(r.code == 0);
  CHECK(r.out == "{\"t_space\":true}\n");
  CHECK(json::parse(run("check " + data("two_edges.json")).out)["t_space"] == false);

  r = run("primes " + t);
  CHECK(json::parse(r.out)["primes"] == json::array({"(x,w)", "(y,w)", "(z,w)", "(x,y,z)"}));
  CHECK(json::parse(run("ideal " + t).out)["generators"] == json::array({"x*w", "y*w", "z*w", "x*y*z"}));
  CHECK(json::parse(run("hilbert " + t + " --max-degree 4").out)["iterated"] == json::array({1, 5, 12, 22, 35}));
  CHECK(json::parse(run("dbasis " + t + " --max-degree 2").out)["basis_size"] == 16);

  r = run("ddm " + t + " --point 1,1,0,0 --op \"x d_x\" --action invert");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["inverse"] == "-x + 1");
  CHECK(run("ddm " + t + " --point 1,1,0,0 --op \"z d_z\" --action invert").code == 1);

  r = run("act " + t + " --f w --op \"x4 d4^[2]\" --fraction \"1/w^2\"");
  CHECK(json::parse(r.out)["result"] == "3/w^3");
  r = run("cech " + t + " --ideal w --box -4:4");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["candidate_primes"]["1"] == json::array({"(x,y,z,w)"}));
  r = run("holonomy " + t + " --imax 4 --f w --tmax 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["growth"]["leading"] == "3/2");

  r = run("verify " + t + " --seed 42");
  CHECK(r.code == 1);
  CHECK(r.out == run("verify " + t + " --seed 42").out);
  CHECK(run("verify " + data("two_edges.json")).code == 0);

  CHECK(run("generate 2").out.size() > 0);
  CHECK(run("generate 5 --mode random --seed 3").out == run("generate 5 --mode random --seed 3").out);
}

TEST_CASE("command line input errors exit with 2") {
  CHECK(run("check /nonexistent.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("ddm " + data("tripp.json") + " --point 1,0,0,1 --op x").code == 2);
  CHECK(run("ddm " + data("tripp.json") + " --point 1,1,0,0 --op \"x +\"").code == 2);
  CHECK(run("check " + data("tripp.json") + " --char 4").code == 2);
  const std::string bad = (std::filesystem::temp_directory_path() / "sr_dmod_bad_complex.json").string();
  std::ofstream(bad) << "{\"n\": 2, \"facets\": [[0, 7]]}";
  CHECK(run("check " + bad).code == 2);
  std::remove(bad.c_str());
}
