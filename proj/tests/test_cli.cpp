// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "autosemi/cli.hpp"

#include <sstream>

#include "autosemi/fixtures.hpp"
#include "autosemi/serialize.hpp"
#include "doctest.h"

using namespace autosemi;

namespace {

const std::string kData = AUTOSEMI_DATA_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("structure documents round trip") {
  for (const InterpretedAutomaticStructure& s :
       {bicyclic_structure(), free_semigroup_structure(Alphabet::characters("ab")),
        from_cayley(brandt_b2_table())}) {
    auto doc = structure_to_json(s);
    InterpretedAutomaticStructure back = structure_from_json(doc);
    CHECK(back.generators() == s.generators());
    CHECK(are_equivalent(back.rep_lang(), s.rep_lang()));
    CHECK(relations_equal(back.equality(), s.equality()));
    for (symbol_t g = 0; g < s.generators().size(); ++g) {
      CHECK(relations_equal(back.multiplier_of(g), s.multiplier_of(g)));
    }
    CHECK(back.assignment().images == s.assignment().images);
    CHECK(back.flags().has_uniqueness == s.flags().has_uniqueness);
    CHECK(back.flags().monoid_with_epsilon == s.flags().monoid_with_epsilon);
  }
}

TEST_CASE("cayley text format round trips") {
  std::stringstream buf;
  cayley_to_stream(brandt_b2_table(), buf);
  CayleyTable back = cayley_from_stream(buf);
  CHECK(back.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(back.product(i, j) == brandt_b2_table().product(i, j));
    }
  }
  CHECK(back.name(4) == "zz");
}

TEST_CASE("word-eq on the bicyclic document") {
  std::string doc = kData + "/bicyclic.json";
  CHECK(run({"-s", doc, "word-eq", "pqp", "p"}).code == 0);
  CHECK(run({"-s", doc, "word-eq", "pq", "qp"}).code == 1);
  CHECK(run({"-s", doc, "repr", "pqp"}).out == "p\n");
  CHECK(run({"-s", doc, "validate"}).code == 0);
}

TEST_CASE("property subcommands and exit codes") {
  std::string free_doc = kData + "/free_ab.json";
  std::string bicyclic = kData + "/bicyclic.json";

  auto zero_res = run({"-s", free_doc, "property", "zero"});
  CHECK(zero_res.code == 1);
  CHECK(zero_res.out == "no left zero\n");

  CHECK(run({"-s", free_doc, "property", "right-cancellative"}).code == 0);
  CHECK(run({"-s", bicyclic, "property", "right-cancellative"}).code == 1);

  auto ident = run({"-s", bicyclic, "property", "identity"});
  CHECK(ident.code == 0);
  CHECK(ident.out == "identity: (empty word)\n");

  CHECK(run({"-s", bicyclic, "property", "czs"}).code == 1);
  CHECK(run({"-s", bicyclic, "property", "cs"}).code == 1);

  auto inv = run({"-s", bicyclic, "left-inverses", "q"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("p") != std::string::npos);
  CHECK(run({"-s", bicyclic, "left-inverses", "p"}).code == 1);
  CHECK(run({"-s", bicyclic, "unit", "q"}).code == 1);

  auto tri = run({"-s", bicyclic, "trichotomy", "q", ""});
  CHECK(tri.code == 0);
  CHECK(tri.out.find("case C") != std::string::npos);
}

TEST_CASE("from-cayley, rees and the pipeline between them") {
  std::string table = kData + "/b2.cayley";
  auto doc = run({"from-cayley", table});
  REQUIRE(doc.code == 0);

  // feed the emitted document back through a file
  std::string tmp = std::string(AUTOSEMI_BINARY_DIR) + "/b2_structure.json";
  CHECK(run({"from-cayley", table, "--out", tmp}).code == 0);
  CHECK(run({"-s", tmp, "validate"}).code == 0);
  CHECK(run({"-s", tmp, "property", "czs"}).code == 0);
  CHECK(run({"-s", tmp, "property", "cs"}).code == 1);

  auto rees = run({"--json", "-s", tmp, "rees"});
  CHECK(rees.code == 0);
  auto parsed = nlohmann::json::parse(rees.out);
  CHECK(parsed.at("matrix").size() == 2);
  CHECK(parsed.at("matrix")[0].size() == 2);
  std::size_t zeros = 0;
  for (const auto& row : parsed.at("matrix")) {
    for (const auto& e : row) zeros += e.is_null();
  }
  CHECK(zeros == 2);
  CHECK(parsed.at("group").at("alphabet").size() == 6);
}

TEST_CASE("adjoin-zero and cross-section emit loadable documents") {
  std::string semilattice = kData + "/semilattice.cayley";
  std::string tmp = std::string(AUTOSEMI_BINARY_DIR) + "/semilattice.json";
  std::string tmp0 = std::string(AUTOSEMI_BINARY_DIR) + "/semilattice0.json";
  CHECK(run({"from-cayley", semilattice, "--out", tmp}).code == 0);
  CHECK(run({"-s", tmp, "property", "zero"}).out == "zero: z\n");
  CHECK(run({"-s", tmp, "adjoin-zero", "--out", tmp0}).code == 0);
  // the old zero is no longer the zero of the extension
  auto z = run({"-s", tmp0, "property", "zero"});
  CHECK(z.code == 0);
  CHECK(z.out == "zero: z1\n");  // "z" was taken by the semilattice element
  CHECK(run({"-s", tmp0, "cross-section", "--out",
             std::string(AUTOSEMI_BINARY_DIR) + "/semilattice0cs.json"})
            .code == 0);
}

TEST_CASE("machine subcommands") {
  std::string tm = kData + "/tm_one_rule.txt";

  auto rules = run({"rm-rules", tm});
  CHECK(rules.code == 0);
  CHECK(rules.out.find("q0.a.d -> bar:a.qa") != std::string::npos);

  auto found = run({"right-invert", tm, "a", "--max-n", "10"});
  CHECK(found.code == 0);
  CHECK(found.out == "right inverse: d^3\n");

  auto missing = run({"right-invert", kData + "/tm_even.txt", "a", "--max-n", "10"});
  CHECK(missing.code == 2);  // inconclusive

  std::string tmp = std::string(AUTOSEMI_BINARY_DIR) + "/tm_structure.json";
  CHECK(run({"from-tm", tm, "--out", tmp}).code == 0);
  CHECK(run({"-s", tmp, "validate"}).code == 0);
  auto e = run({"-s", tmp, "property", "identity"});
  CHECK(e.code == 0);
  CHECK(e.out == "identity: (empty word)\n");
  CHECK(run({"-s", tmp, "word-eq", "bar:h.q0.a.h.d.d.d", ""}).code == 0);
}

TEST_CASE("oracle-check subcommand") {
  auto res = run({"--json", "oracle-check", "--seed", "7", "--count", "5"});
  CHECK(res.code == 0);
  auto parsed = nlohmann::json::parse(res.out);
  CHECK(parsed.at("instances").get<int>() == 11);  // 6 named + 5 random
  CHECK(parsed.at("mismatches").empty());
}

TEST_CASE("malformed input exits with code 2") {
  CHECK(run({"-s", "/nonexistent.json", "validate"}).code == 2);
  CHECK(run({"repr", "x"}).code == 2);  // no structure given
  CHECK(run({"bogus-command"}).code == 2);
}
