#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ncsym/json_io.hpp"

using ncsym::Json;
namespace cli = ncsym::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ncsym-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string error_code(const Result& r) { return Json::parse(r.err)["error"].get<std::string>(); }

}  // namespace

TEST_CASE("mul") {
  Result r = run({"mul", "1/2", "1"});
  REQUIRE(r.code == cli::kOk);
  Json j = Json::parse(r.out);
  CHECK(j["terms"].size() == 3);
  CHECK(run({"--format", "text", "mul", "1/2", "1"}).out == "m[1,3/2] + m[1/2,3] + m[1/2/3]\n");
  Result big = run({"mul", "1,3/2", "1/2"});
  CHECK(Json::parse(big.out)["terms"].size() == 7);
  Result sym = run({"mul", "--space", "sym", "2", "1"});
  REQUIRE(sym.code == cli::kOk);
  CHECK(Json::parse(sym.out)["terms"].size() == 2);
}

TEST_CASE("operands from files and inline JSON") {
  auto path = std::filesystem::temp_directory_path() / "ncsym_cli_operand.json";
  {
    std::ofstream f(path);
    f << R"({"alphabet":"inf","terms":[{"sp":"1/2","coeff":"2"}]})";
  }
  Result r = run({"mul", "@" + path.string(), "1"});
  std::filesystem::remove(path);
  REQUIRE(r.code == cli::kOk);
  CHECK(Json::parse(r.out)["terms"][0]["coeff"] == "2");
  Result inl = run({"mul", R"({"alphabet":"inf","terms":[{"sp":"1","coeff":"1/3"}]})", "1"});
  REQUIRE(inl.code == cli::kOk);
  CHECK(Json::parse(inl.out)["terms"][0]["coeff"] == "1/3");
}

TEST_CASE("comul") {
  Result r = run({"comul", "1/2", "--reduced"});
  REQUIRE(r.code == cli::kOk);
  CHECK(Json::parse(r.out)["terms"][0]["coeff"] == "2");
  Result full = run({"comul", "1/2"});
  CHECK(Json::parse(full.out)["terms"].size() == 3);
  Result a3 = run({"comul", "1/2/3", "--arity", "3"});
  REQUIRE(a3.code == cli::kOk);
  CHECK(Json::parse(a3.out)["arity"] == 3);
}

TEST_CASE("series commands") {
  CHECK(Json::parse(run({"hilbert", "--space", "cosym", "--n", "3", "--prec", "4"}).out).dump() ==
        R"(["1","0","0","2","8"])");
  CHECK(Json::parse(run({"frob", "--shape", "2,2"}).out).dump() == R"({"4":"1","2,2":"1"})");
  CHECK(Json::parse(run({"frob", "--shape", "2,2,2"}).out).dump() == R"({"6":"1","4,2":"1","2,2,2":"1"})");
}

TEST_CASE("primitive and phi") {
  Json p = Json::parse(run({"primitive", "13.2"}).out);
  CHECK(p["solution_dimension"] == 1);
  CHECK(p["element"]["terms"].size() == 2);
  Json phi = Json::parse(run({"phi", "--factor", "121", "--shape", "1"}).out);
  CHECK(phi["sp"] == "1,3,4/2");
  CHECK(run({"primitive", "12.3"}).code == cli::kUsage);
}

TEST_CASE("verify") {
  Result r = run({"verify", "--max-degree", "3", "--n", "2"});
  CHECK(r.code == cli::kOk);
  Result c = run({"verify", "--criterion", "1"});
  CHECK(c.code == cli::kOk);
  Result t = run({"--threads", "2", "verify", "--max-degree", "4", "--n", "inf"});
  CHECK(t.code == cli::kOk);
}

TEST_CASE("usage errors") {
  Result unknown = run({"bogus"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(error_code(unknown) == "unknown_subcommand");
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"mul", "1/1", "1"}).code == cli::kUsage);
  CHECK(run({"hilbert", "--space", "bogus"}).code == cli::kUsage);
  Result r = run({"mul", "@/nonexistent/file.json", "1"});
  CHECK(r.code == cli::kUsage);
  CHECK_NOTHROW(Json::parse(r.err));
}
