#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "unitals/cli.hpp"
#include "unitals/conic.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = unitals::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(const std::vector<std::string>& args) {
  const auto r = invoke(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: field") {
  const auto j = invoke_json({"field", "--p", "3", "--h", "2"});
  CHECK(j["field"]["order"] == 9);
  CHECK(j["field"]["modulus"] == nlohmann::json::array({1, 0, 1}));
}

TEST_CASE("cli: build and verify a unital") {
  const auto j = invoke_json({"build-unital", "--kind", "behs", "--q", "3"});
  CHECK(j["size"] == 28);
  CHECK(j["points"].size() == 28);
  CHECK(j["conics"].size() == 3);
  const auto h = invoke_json({"build-unital", "--kind", "hermitian", "--q", "2"});
  CHECK(h["size"] == 9);
  CHECK(invoke({"build-unital", "--kind", "behs", "--q", "2"}).code == 2);
}

TEST_CASE("cli: claims") {
  const auto l1 = invoke_json({"check", "--claim", "lemma1", "--q", "5"});
  CHECK(l1["max_size"] == 3);
  CHECK(l1["bound"] == 3);
  CHECK(l1["ok"] == true);

  const unitals::Field f(3, 2);
  const auto k = std::to_string(f.first_nonsquare());
  const auto r = invoke_json({"cone-residual", "--case", "3", "--q", "3", "--k", k});
  CHECK(r["residual"].empty());
  CHECK(r["matches"] == true);

  const auto c1 = invoke_json({"cone-residual", "--case", "1", "--q", "3", "--k", std::to_string(unitals::admissible_ks(f, unitals::PencilKind::Hyperbolic).at(0)), "--method", "reference"});
  CHECK(c1["matches"] == true);

  const auto pair = invoke_json({"classify-pair", "--q", "3", "--c", "0,0,2,1,0,0", "--d", "0,0,8,1,0,0"});
  CHECK(pair["report"]["ptype"] == "BitangentReal");
}

TEST_CASE("cli: exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({"check", "--claim", "afkl", "--q", "3"}).code == 2);
  CHECK(invoke({"cone-residual", "--case", "3", "--q", "3", "--k", "1"}).code == 2);
  CHECK(invoke({"field", "--p", "4", "--h", "1"}).code == 2);
  CHECK_FALSE(invoke({"check", "--claim", "afkl", "--q", "3"}).err.empty());
}

TEST_CASE("cli: report-all is deterministic") {
  const auto a = invoke({"report-all", "--q", "3", "--seed", "7"});
  const auto b = invoke({"report-all", "--q", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["all_ok"] == true);
}
