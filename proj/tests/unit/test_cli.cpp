#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "klab/cli/app.hpp"
#include "klab/cli/specs.hpp"
#include "klab/error.hpp"
#include "klab/rational.hpp"
#include "klab/structures/io.hpp"

namespace fs = std::filesystem;
using klab::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "keisler-lab");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "klab_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("structure specs") {
  using klab::cli::resolve_structure;
  CHECK(resolve_structure("circulant:13:1,5").structure["edges"].size() == 26);
  CHECK(resolve_structure("petersen").structure["n"] == 10);
  CHECK(resolve_structure("gen:20:2:3:seed=4").digest == resolve_structure("gen:20:2:3:seed=4").digest);
  CHECK(resolve_structure("gen:20:2:3:seed=4").digest != resolve_structure("gen:20:2:3:seed=5").digest);
  CHECK(resolve_structure("tournament:5:seed=1").structure["kind"] == "tournament");
  CHECK(resolve_structure("tp2grid:2").structure["parameters"] == 4);
  CHECK_THROWS_AS(resolve_structure("gen:20:2"), klab::invalid_input);
  CHECK_THROWS_AS(resolve_structure("circulant:13:7"), klab::invalid_input);
}

TEST_CASE("color command") {
  const auto wh = scratch("tri.json");
  std::ofstream(wh) << R"({"n":3,"r":2,"weights":[[[0,1],{"num":1,"den":1}],[[0,2],{"num":1,"den":1}],[[1,2],{"num":1,"den":1}]]})";
  const auto res = call({"color", "--input", wh.string(), "--brute"});
  CHECK(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["theorem"] == "coloring");
  CHECK(j["witness"]["brute"]["best_value"]["num"] == 2);
  const auto csv = call({"color", "--input", wh.string(), "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("name,relation,lhs,rhs,holds", 0) == 0);
}

TEST_CASE("fam command and verify") {
  const auto report = scratch("fam.json");
  const auto res = call({"fam", "--phi", "!E(x1,y1) & x1 != y1", "--epsilon", "4/5", "--graph", "circulant:13:1,5",
                         "--ambient", "gen:200:2:3:seed=9", "--output", report.string()});
  REQUIRE(res.code == 0);
  const auto j = klab::read_json_file(report);
  CHECK(j["theorem"] == "famnotfim");
  CHECK(call({"verify", "--report", report.string()}).code == 0);

  // tampered certification value
  auto tampered = j;
  tampered["certified"][0]["lhs"] = klab::rational_to_json(klab::make_rational(123, 7));
  const auto bad = scratch("fam_tampered.json");
  klab::write_file_atomically(bad, tampered.dump());
  CHECK(call({"verify", "--report", bad.string()}).code == 2);

  // wrong input file for the ambient role
  const auto other = scratch("other_ambient.json");
  klab::write_file_atomically(other, klab::cli::resolve_structure("gen:200:2:3:seed=10").structure.dump());
  const auto wrong = call({"verify", "--report", report.string(), "--input", "ambient=" + other.string()});
  CHECK(wrong.code == 2);
  CHECK(wrong.err.find("digest") != std::string::npos);

  // the same ambient from a file reproduces
  const auto same = scratch("same_ambient.json");
  klab::write_file_atomically(same, klab::cli::resolve_structure("gen:200:2:3:seed=9").structure.dump());
  CHECK(call({"verify", "--report", report.string(), "--input", "ambient=" + same.string()}).code == 0);

  const auto garbage = scratch("garbage.json");
  klab::write_file_atomically(garbage, R"({"theorem":"famnotfim"})");
  CHECK(call({"verify", "--report", garbage.string()}).code == 1);
}

TEST_CASE("precondition failures exit 2") {
  const auto res = call({"fam", "--phi", "!E(x1,y1) & x1 != y1", "--epsilon", "4/5", "--graph", "circulant:5:1",
                         "--ambient", "gen:60:2:3:seed=9"});
  CHECK(res.code == 2);
  CHECK(res.err.find("2*k*alpha_s(G) < epsilon*n") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  const auto parse = call({"fam", "--phi", "E(x1", "--epsilon", "4/5", "--graph", "circulant:5:1", "--ambient",
                           "gen:60:2:3:seed=9"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("5") != std::string::npos);
  CHECK(call({"color", "--input", scratch("missing.json").string()}).code == 1);
}

TEST_CASE("adversary command") {
  const auto res = call({"adversary", "--r", "3", "--s", "4", "--n", "30", "--ambient", "gen:60:3:4:seed=5", "--seed", "11"});
  REQUIRE(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  const auto frac = klab::rational_from_json(j["witness"]["fraction"]);
  CHECK(frac >= klab::make_rational(1, 2));
}
