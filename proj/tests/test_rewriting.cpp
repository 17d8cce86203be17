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

#include "autosemi/rewriting.hpp"

#include <random>
#include <sstream>

#include "autosemi/decisions.hpp"
#include "autosemi/errors.hpp"
#include "autosemi/turing.hpp"
#include "doctest.h"

using namespace autosemi;

namespace {

// One right-moving rule; accepts a+ in one step.
TuringMachine one_rule_machine() {
  return TuringMachine({"q0", "qa"}, {"a"}, "q0", "qa",
                       {{{"q0", "a"}, {"qa", "a", true}}});
}

// Accepts words of even length over {a}.
TuringMachine even_machine() {
  return TuringMachine({"q0", "q1", "qa"}, {"a"}, "q0", "qa",
                       {{{"q0", "a"}, {"q1", "a", true}},
                        {{"q1", "a"}, {"q0", "a", true}},
                        {{"q0", "B"}, {"qa", "a", true}}});
}

// Uses a left move; accepts ab followed by anything.
TuringMachine left_move_machine() {
  return TuringMachine({"q0", "q1", "q2", "qa"}, {"a", "b"}, "q0", "qa",
                       {{{"q0", "a"}, {"q1", "a", true}},
                        {{"q1", "b"}, {"q2", "b", false}},
                        {{"q2", "a"}, {"qa", "a", true}}});
}

// Never halts on any input.
TuringMachine loop_machine() {
  return TuringMachine({"q0", "qa"}, {"a"}, "q0", "qa",
                       {{{"q0", "a"}, {"q0", "a", true}},
                        {{"q0", "B"}, {"q0", "a", true}}});
}

// No transitions at all.
TuringMachine stuck_machine() {
  return TuringMachine({"q0", "qa"}, {"a"}, "q0", "qa", {});
}

StringRewritingSystem bicyclic_rules() {
  Alphabet pq = Alphabet::characters("pq");
  return StringRewritingSystem(pq, {{{0, 1}, {}}});  // pq -> empty
}

std::vector<Word> irreducible_words(const FiniteAutomaton& lang, std::size_t max_len) {
  return enumerate(lang, kUnbounded, max_len);
}

}  // namespace

TEST_CASE("normal_form") {
  SUBCASE("bicyclic rewriting") {
    auto r = bicyclic_rules();
    CHECK(normal_form(r, {1, 0, 1}) == Word{1});  // wait: letters p=0, q=1 here
  }

  SUBCASE("irreducible words are fixed") {
    auto r = bicyclic_rules();
    Word w = {1, 1, 0};  // qqp
    CHECK(normal_form(r, w) == w);
  }

  SUBCASE("the traced derivation ends at the empty word") {
    TuringMachine m = one_rule_machine();
    StringRewritingSystem r = build_rm(m);
    Word w = initial_configuration_word(m, {"a"});
    const symbol_t d = r.alphabet().at("d");
    w.insert(w.end(), 3, d);
    CHECK(normal_form(r, w).empty());
  }

  SUBCASE("step bound fires") {
    Alphabet ab = Alphabet::characters("ab");
    StringRewritingSystem grow(ab, {{{0}, {0, 0}}});  // a -> aa never terminates
    CHECK_THROWS_AS(normal_form(grow, {0}, 100), StepBoundExceededError);
  }
}

TEST_CASE("irr_automaton") {
  SUBCASE("avoiding pq gives q*p*") {
    Alphabet pq = Alphabet::characters("pq");
    StringRewritingSystem r(pq, {{{0, 1}, {}}});
    FiniteAutomaton irr = irr_automaton(r);
    // q*p* with p=0, q=1: words with no p before a q
    FiniteAutomaton expect(pq, 2, {0}, {0, 1}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 1}});
    CHECK(are_equivalent(irr, expect));
  }

  SUBCASE("no rules leaves everything irreducible") {
    Alphabet ab = Alphabet::characters("ab");
    StringRewritingSystem r(ab, {});
    CHECK(are_equivalent(irr_automaton(r), FiniteAutomaton::universal(ab)));
  }

  SUBCASE("left-hand sides are rejected") {
    TuringMachine m = one_rule_machine();
    StringRewritingSystem r = build_rm(m);
    FiniteAutomaton irr = irr_automaton(r);
    for (const RewriteRule& rule : r.rules()) {
      CHECK(!contains(irr, rule.lhs));
    }
    for (symbol_t g = 0; g < r.alphabet().size(); ++g) {
      CHECK(contains(irr, {g}));  // single letters stay irreducible
    }
  }
}

TEST_CASE("termination order") {
  TuringMachine m = one_rule_machine();
  StringRewritingSystem r = build_rm(m);
  TerminationOrder order = rm_order(m);

  SUBCASE("every rule decreases") {
    for (const RewriteRule& rule : r.rules()) {
      CHECK(order.greater(rule.lhs, rule.rhs));
    }
  }

  SUBCASE("single rewrite steps decrease in arbitrary contexts") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<symbol_t> letter(0, static_cast<symbol_t>(r.alphabet().size() - 1));
    std::uniform_int_distribution<int> len(0, 4);
    for (const RewriteRule& rule : r.rules()) {
      for (int round = 0; round < 20; ++round) {
        Word x, z;
        for (int i = len(rng); i > 0; --i) x.push_back(letter(rng));
        for (int i = len(rng); i > 0; --i) z.push_back(letter(rng));
        Word u = x, v = x;
        u.insert(u.end(), rule.lhs.begin(), rule.lhs.end());
        u.insert(u.end(), z.begin(), z.end());
        v.insert(v.end(), rule.rhs.begin(), rule.rhs.end());
        v.insert(v.end(), z.begin(), z.end());
        CHECK(order.greater(u, v));
        CHECK(!order.greater(v, u));
      }
    }
  }
}

TEST_CASE("check_convergence") {
  SUBCASE("machine systems have no overlaps at all") {
    for (const TuringMachine& m : {one_rule_machine(), even_machine(), left_move_machine(),
                                   loop_machine(), stuck_machine()}) {
      StringRewritingSystem r = build_rm(m);
      ConvergenceReport report = check_convergence(r, rm_order(m));
      CHECK(report.overlaps.empty());
      CHECK(report.nondecreasing_rules.empty());
      CHECK(report.convergent());
    }
  }

  SUBCASE("ab->a, ba->b has an unresolved critical pair") {
    Alphabet ab = Alphabet::characters("ab");
    StringRewritingSystem r(ab, {{{0, 1}, {0}}, {{1, 0}, {1}}});
    ConvergenceReport report = check_convergence(r, TerminationOrder(1));
    CHECK(!report.overlaps.empty());
    bool found_aba = false;
    for (const auto& o : report.overlaps) {
      if (o.overlap_word == Word{0, 1, 0}) {
        found_aba = true;
        CHECK(!o.resolved);
        CHECK(o.left_reduct == Word{0, 0});
        CHECK(o.right_reduct == Word{0, 1});
      }
    }
    CHECK(found_aba);
    CHECK(!report.convergent());
  }

  SUBCASE("the empty system is convergent") {
    Alphabet ab = Alphabet::characters("ab");
    StringRewritingSystem r(ab, {});
    CHECK(check_convergence(r, TerminationOrder(0)).convergent());
  }
}

TEST_CASE("build_rm instantiates the nine schemas") {
  SUBCASE("one-rule machine") {
    TuringMachine m = one_rule_machine();
    StringRewritingSystem r = build_rm(m);
    const Alphabet& g = r.alphabet();
    // schema counts: 1 + 0 + 0 + 0 + 1 + 1 + 1 + 1 + 1
    CHECK(r.rules().size() == 6);

    Word rule1_lhs = {g.at("q0"), g.at("a"), g.at("d")};
    Word rule1_rhs = {g.at("bar:a"), g.at("qa")};
    Word rule7_lhs = {g.at("bar:h"), g.at("qa"), g.at("h"), g.at("d")};
    Word rule8_lhs = {g.at("a"), g.at("a"), g.at("d")};
    Word rule8_rhs = {g.at("a"), g.at("d"), g.at("a")};
    std::size_t found1 = 0, found7 = 0, found8 = 0;
    for (const RewriteRule& rule : r.rules()) {
      if (rule.lhs == rule1_lhs) {
        ++found1;
        CHECK(rule.rhs == rule1_rhs);
      }
      if (rule.lhs == rule7_lhs) {
        ++found7;
        CHECK(rule.rhs.empty());
      }
      if (rule.lhs == rule8_lhs) {
        ++found8;
        CHECK(rule.rhs == rule8_rhs);
      }
    }
    CHECK(found1 == 1);
    CHECK(found7 == 1);
    CHECK(found8 == 1);
  }

  SUBCASE("left moves instantiate the marked-context schemas") {
    TuringMachine m = left_move_machine();
    StringRewritingSystem r = build_rm(m);
    const Alphabet& g = r.alphabet();
    // delta: (q0,a,R) schema 1; (q1,b,L) schema 3 x |Sigma|; (q2,a,R) schema 1
    // plus 5 x2, 6 x2, 7 x1, 8 x4, 9 x2
    CHECK(r.rules().size() == 2 + 2 + 2 + 2 + 1 + 4 + 2);
    Word rule3_lhs = {g.at("bar:a"), g.at("q1"), g.at("b"), g.at("d")};
    Word rule3_rhs = {g.at("q2"), g.at("a"), g.at("b")};
    bool found = false;
    for (const RewriteRule& rule : r.rules()) {
      if (rule.lhs == rule3_lhs) {
        found = true;
        CHECK(rule.rhs == rule3_rhs);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("tm_structure") {
  TuringMachine m = one_rule_machine();
  InterpretedAutomaticStructure s = tm_structure(m);
  StringRewritingSystem r = build_rm(m);
  const Alphabet& g = s.generators();
  const symbol_t d = g.at("d");

  SUBCASE("the structure validates") {
    CHECK(sanity_validate(s).empty());
    CHECK(s.flags().has_uniqueness);
    CHECK(s.flags().monoid_with_epsilon);
  }

  SUBCASE("multiplication by d agrees with rewriting, exhaustively to length 5") {
    const SynchronousAutomaton& ld = s.multiplier_of(d);
    // totality and functionality at the automaton level
    CHECK(are_equivalent(project(ld, 1), s.rep_lang()));
    CHECK(is_subrelation(compose(invert(ld), ld), diagonal(project(ld, 2))));
    // pointwise agreement with the rewriting engine
    for (const Word& u : irreducible_words(s.rep_lang(), 5)) {
      Word ud = u;
      ud.push_back(d);
      CHECK(contains(ld, u, normal_form(r, ud)));
    }
  }

  SUBCASE("the known length-increasing pair is recognized") {
    // bar:h q0 a h · d rewrites to bar:h bar:a qa h
    Word u = {g.at("bar:h"), g.at("q0"), g.at("a"), g.at("h")};
    Word v = {g.at("bar:h"), g.at("bar:a"), g.at("qa"), g.at("h")};
    Word ud = u;
    ud.push_back(d);
    CHECK(normal_form(r, ud) == v);
    CHECK(contains(s.multiplier_of(d), u, v));
  }

  SUBCASE("the three case families have disjoint domains") {
    std::vector<symbol_t> sigma = {g.at("a")};
    std::vector<symbol_t> sigma_h = {g.at("a"), g.at("h")};
    auto lxl = product_relation(s.rep_lang(), s.rep_lang());
    SynchronousAutomaton case1 =
        intersect(context_rewrite_relation(g, {}, {d}, TailSpec::none()), lxl);
    SynchronousAutomaton case2 =
        intersect(context_rewrite_relation(g, {g.at("a")}, {g.at("a"), d},
                                           TailSpec::suffix(sigma, sigma_h, 1)),
                  lxl);
    SynchronousAutomaton case3 = SynchronousAutomaton::none(g);
    for (const RewriteRule& rule : r.rules()) {
      if (rule.lhs.size() == 3 && rule.lhs[0] == g.at("a")) continue;  // shuffle schemas
      if (rule.lhs == Word{g.at("a"), g.at("h"), d}) continue;
      Word window(rule.lhs.begin(), rule.lhs.end() - 1);
      TailSpec tail = window.back() == g.at("a") ? TailSpec::suffix(sigma, sigma_h, 0)
                                                 : TailSpec::none();
      case3 = unite(case3, intersect(context_rewrite_relation(g, window, rule.rhs, tail), lxl));
    }
    CHECK(is_empty(intersect(project(case1, 1), project(case2, 1))));
    CHECK(is_empty(intersect(project(case1, 1), project(case3, 1))));
    CHECK(is_empty(intersect(project(case2, 1), project(case3, 1))));
    CHECK(relations_equal(s.multiplier_of(d), unite(unite(case1, case2), case3)));
  }

  SUBCASE("appending any other letter is the plain one-letter relation") {
    for (symbol_t letter = 0; letter < g.size(); ++letter) {
      if (letter == d) continue;
      Word u = {g.at("bar:h"), g.at("q0")};
      Word v = u;
      v.push_back(letter);
      CHECK(contains(s.multiplier_of(letter), u, v));
    }
  }

  SUBCASE("the identity of the monoid is the empty word") {
    auto e = identity(s);
    REQUIRE(e.has_value());
    CHECK(e->empty());
  }
}

TEST_CASE("simulate") {
  TuringMachine m2 = even_machine();
  CHECK(simulate(m2, {}, 100).accepted);
  CHECK(simulate(m2, {"a"}, 100).accepted == false);
  CHECK(simulate(m2, {"a", "a"}, 100).accepted);
  CHECK(simulate(m2, {"a", "a", "a"}, 100).accepted == false);

  TuringMachine m3 = left_move_machine();
  CHECK(simulate(m3, {"a", "b"}, 100).accepted);
  CHECK(!simulate(m3, {"a"}, 100).accepted);
  CHECK(!simulate(m3, {"b", "a"}, 100).accepted);
  CHECK(simulate(m3, {"a", "b", "b"}, 100).accepted);

  SUBCASE("loops run out of budget without halting") {
    auto res = simulate(loop_machine(), {"a"}, 50);
    CHECK(!res.halted);
    CHECK(!res.accepted);
  }
}

TEST_CASE("right_invert_search") {
  SUBCASE("one-rule machine on input a finds n = 3") {
    auto n = right_invert_search(one_rule_machine(), {"a"}, 10);
    REQUIRE(n.has_value());
    CHECK(*n == 3);
  }

  SUBCASE("a machine with no transitions never succeeds") {
    CHECK(!right_invert_search(stuck_machine(), {"a"}, 10).has_value());
  }

  SUBCASE("looping machines stay inconclusive at any bound") {
    CHECK(!right_invert_search(loop_machine(), {"a"}, 12).has_value());
  }

  SUBCASE("search agrees with direct simulation on short inputs") {
    auto words_over = [](const std::vector<std::string>& letters, std::size_t max_len) {
      std::vector<std::vector<std::string>> out{{}};
      std::vector<std::vector<std::string>> layer{{}};
      for (std::size_t l = 0; l < max_len; ++l) {
        std::vector<std::vector<std::string>> next;
        for (const auto& w : layer) {
          for (const auto& c : letters) {
            auto v = w;
            v.push_back(c);
            next.push_back(v);
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    };
    for (const TuringMachine& m : {one_rule_machine(), even_machine(), left_move_machine()}) {
      for (const auto& w : words_over(m.tape_letters(), 3)) {
        SimulationResult sim = simulate(m, w, 1000);
        REQUIRE(sim.halted);
        auto n = right_invert_search(m, w, 30);
        CHECK(n.has_value() == sim.accepted);
        if (n) {
          // one d per machine step, one per final tape cell, one final step
          CHECK(*n == sim.steps + sim.tape_cells + 1);
        }
      }
    }
  }

  SUBCASE("the word problem sees the same right inverses") {
    TuringMachine m = one_rule_machine();
    InterpretedAutomaticStructure s = tm_structure(m);
    const symbol_t d = s.generators().at("d");
    Word base = initial_configuration_word(m, {"a"});
    for (std::size_t n = 1; n <= 5; ++n) {
      Word w = base;
      w.insert(w.end(), n, d);
      CHECK(word_problem(s, w, {}) == (n == 3));
    }
  }
}

TEST_CASE("parse_tm") {
  std::istringstream in(R"(# accepts even-length words
states: q0 q1 qa
input: a
blank: B
initial: q0
accept: qa
q0 a q1 a R
q1 a q0 a R
q0 B qa a R
)");
  TuringMachine m = parse_tm(in);
  CHECK(m.states().size() == 3);
  CHECK(m.tape_letters().size() == 1);
  CHECK(simulate(m, {"a", "a"}, 100).accepted);
  CHECK(!simulate(m, {"a"}, 100).accepted);

  std::istringstream bad("states: q0\ninput: a\ninitial: q0\naccept: q0\nq0 a q0 a X\n");
  CHECK_THROWS_AS(parse_tm(bad), ParseError);
}
