#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "weddle/json_io.hpp"
#include "weddle/weddle.hpp"
#include "weddle_cli/cli.hpp"

using namespace weddle;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), {"weddle", "--fixture-dir", WEDDLE_FIXTURE_DIR});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Outcome o = call(args);
  REQUIRE(o.code != 1);
  return Json::parse(o.out);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// re-serialize through the library types, not just through the JSON tree
Json canonical(const Json& j) {
  if (j.contains("faces")) return tensor_to_json(tensor_from_json(j));
  if (j.contains("quadrics")) return system_to_json(system_from_json(j));
  if (j.contains("poly")) return poly_to_json(poly_from_json(j));
  if (j.contains("M")) return Json{{"M", matrix_to_json(matrix_from_json(j.at("M")))}};
  Json pts = Json::array();
  for (const auto& p : j.at("points")) pts.push_back(point_to_json(point_from_json(p)));
  return Json{{"n", j.at("n")}, {"points", pts}};
}

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(WEDDLE_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    const std::string text = slurp(entry.path());
    CHECK_MESSAGE(canonical(Json::parse(text)).dump(2) + "\n" == text, entry.path().string());
  }
  CHECK(seen >= 6);
}

TEST_CASE("weddle subcommand") {
  CHECK(call_json({"weddle", "ex-bpf-conics"})["outputs"]["polynomial"] == "x0*x1*x2");
  CHECK(call_json({"weddle", "rank4-canonical"})["outputs"]["polynomial"] == "x0*x1*x2*x3");
  CHECK(call_json({"weddle", "degenerate-conics"})["outputs"]["degenerate"] == true);
  const Json r = call_json({"weddle", "rank5-M"});
  const MultiPoly f = parse_poly(r["outputs"]["polynomial"].get<std::string>(), 4);
  CHECK(f.size() == 13);
  CHECK(f == normalize_up_to_scalar(rank5_determinant(matrix_from_json(Json::parse(
                 slurp(fs::path(WEDDLE_FIXTURE_DIR) / "rank5-M.json"))["M"]))));
}

TEST_CASE("decompose subcommand") {
  const Json r = call_json({"decompose", "dim2-cyclic"});
  CHECK(r["certified"] == true);
  CHECK(r["outputs"]["memberships"]["Residual1"] == true);
  CHECK(r["outputs"]["memberships"]["Symmetric"] == false);
  CHECK(r["outputs"]["n2"]["faces"][0][0][0] == "0");
}

TEST_CASE("singular and jinv subcommands") {
  const Json s = call_json({"singular", "witness-C1"});
  CHECK(s["certified"] == true);
  CHECK(s["outputs"]["count"] == 0);
  const Json j1 = call_json({"jinv", "witness-C1"});
  CHECK(j1["outputs"]["j"] == "1771561/612");
  CHECK(j1["outputs"]["a"] == "-121/48");
  const Json j2 = call_json({"jinv", "witness-C2"});
  CHECK(j2["outputs"]["j"] == "4354703137/352512");
  CHECK(j2["outputs"]["b"] == "61201/864");
}

TEST_CASE("certify subcommand") {
  const Outcome o = call({"certify", "weddle-6pts"});
  CHECK(o.code == 0);
  CHECK(o.out.find("singular points: 6 < 10 => rank >= 6") != std::string::npos);
  const Json r = call_json({"certify", "rank5-M"});
  CHECK(r["outputs"]["singular_count"] == 10);
  CHECK(r["outputs"]["conclusion"] == "Inconclusive");
}

TEST_CASE("basepoints subcommand") {
  const Json r = call_json({"basepoints", "--random-n1", "5"});
  CHECK(r["certified"] == true);
  CHECK(r["outputs"]["count"] == 11);
  CHECK(r["outputs"]["jacobsthal"] == 11);
  CHECK(call_json({"basepoints", "dim2-cyclic"})["outputs"]["count"] == 1);
}

TEST_CASE("reports are reproducible") {
  const Json a = call_json({"--seed", "7", "jacobsthal-sweep", "--dims", "2..3", "--trials", "3"});
  const Json b = call_json({"--seed", "7", "jacobsthal-sweep", "--dims", "2..3", "--trials", "3"});
  CHECK(a == b);
  CHECK(a["seed"] == 7);
  CHECK(a["outputs"]["table"].size() == 2);
  CHECK_FALSE(a.contains("timing_ms"));
  CHECK(call_json({"--timing", "weddle", "ex-bpf-conics"}).contains("timing_ms"));
  CHECK(call_json({"weddle", "ex-bpf-conics"})["input_digest"] ==
        call_json({"weddle", "ex-bpf-conics"})["input_digest"]);
  CHECK(call_json({"weddle", "ex-bpf-conics"})["input_digest"] !=
        call_json({"weddle", "rank4-canonical"})["input_digest"]);
}

TEST_CASE("errors and exit codes") {
  const Outcome missing = call({"weddle", "no-such-fixture"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("no-such-fixture") != std::string::npos);
  CHECK(call({"frobnicate"}).code != 0);
  CHECK(call({"jacobsthal-sweep", "--dims", "2..7"}).code == 1);
  // positive-dimensional singular locus: never reported as certified
  const fs::path tmp = fs::temp_directory_path() / "weddle_cli_quartic.txt";
  std::ofstream(tmp) << "x0*x1*x2*x3\n";
  const Outcome u = call({"singular", tmp.string()});
  CHECK(u.code == 2);
  CHECK(u.out.find("UNCERTIFIED") != std::string::npos);
  fs::remove(tmp);
}
