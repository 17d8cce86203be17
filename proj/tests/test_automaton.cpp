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

#include "autosemi/automaton.hpp"

#include <random>
#include <set>

#include "autosemi/errors.hpp"
#include "doctest.h"

using namespace autosemi;

namespace {

// Independent oracle: naive NFA simulation by breadth-first expansion of
// state sets, written without reusing any library plumbing.
bool naive_accepts(const FiniteAutomaton& m, const Word& w) {
  std::set<state_t> cur(m.initial().begin(), m.initial().end());
  auto close = [&](std::set<state_t>& s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [a, b] : m.epsilon_moves()) {
        if (s.count(a) && !s.count(b)) {
          s.insert(b);
          grew = true;
        }
      }
    }
  };
  close(cur);
  for (symbol_t x : w) {
    std::set<state_t> next;
    for (const Transition& t : m.transitions()) {
      if (cur.count(t.from) && t.label == x) next.insert(t.to);
    }
    close(next);
    cur = std::move(next);
  }
  for (state_t s : m.accepting()) {
    if (cur.count(s)) return true;
  }
  return false;
}

std::vector<Word> all_words(std::size_t arity, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (std::size_t l = 0; l < max_len; ++l) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (symbol_t a = 0; a < arity; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

FiniteAutomaton random_nfa(std::mt19937& rng, const Alphabet& alphabet, state_t max_states) {
  std::uniform_int_distribution<state_t> nd(1, max_states);
  state_t n = nd(rng);
  std::uniform_int_distribution<state_t> sd(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<Transition> ts;
  for (state_t q = 0; q < n; ++q) {
    for (symbol_t a = 0; a < alphabet.size(); ++a) {
      int copies = coin(rng) == 0 ? 2 : (coin(rng) < 2 ? 1 : 0);
      for (int c = 0; c < copies; ++c) ts.push_back({q, a, sd(rng)});
    }
  }
  std::vector<state_t> initial{sd(rng)};
  std::vector<state_t> accepting;
  for (state_t q = 0; q < n; ++q) {
    if (coin(rng) == 0) accepting.push_back(q);
  }
  return FiniteAutomaton(alphabet, n, initial, accepting, ts);
}

}  // namespace

TEST_CASE("determinize preserves the language") {
  Alphabet ab = Alphabet::characters("ab");

  SUBCASE("a(a|b)*") {
    FiniteAutomaton m(ab, 2, {0}, {1}, {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}});
    FiniteAutomaton d = determinize(m);
    CHECK(d.is_complete_dfa());
    CHECK(are_equivalent(m, d));
  }

  SUBCASE("empty initial set accepts nothing") {
    FiniteAutomaton m(ab, 2, {}, {1}, {{0, 0, 1}});
    FiniteAutomaton d = determinize(m);
    CHECK(is_empty(d));
  }

  SUBCASE("epsilon cycle does not diverge") {
    FiniteAutomaton m(ab, 3, {0}, {2}, {{1, 0, 2}}, {{0, 1}, {1, 0}, {1, 1}});
    FiniteAutomaton d = determinize(m);
    for (const Word& w : all_words(2, 6)) {
      CHECK(contains(d, w) == naive_accepts(m, w));
    }
  }
}

TEST_CASE("minimize is canonical") {
  Alphabet ab = Alphabet::characters("ab");

  SUBCASE("two machines for (ab)*") {
    FiniteAutomaton m1(ab, 2, {0}, {0}, {{0, 0, 1}, {1, 1, 0}});
    FiniteAutomaton m2(ab, 4, {0}, {0, 2}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 3}, {3, 1, 0}});
    CHECK(same_automaton(minimize(m1), minimize(m2)));
  }

  SUBCASE("empty language minimizes to a single sink") {
    FiniteAutomaton m = minimize(FiniteAutomaton::none(ab));
    CHECK(m.num_states() == 1);
    CHECK(m.accepting().empty());
  }

  SUBCASE("random machines keep their language") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 40; ++i) {
      FiniteAutomaton m = random_nfa(rng, ab, 8);
      FiniteAutomaton r = minimize(determinize(m));
      for (const Word& w : all_words(2, 6)) {
        CHECK(contains(r, w) == naive_accepts(m, w));
      }
    }
  }
}

TEST_CASE("boolean operations") {
  Alphabet ab = Alphabet::characters("ab");
  Alphabet a1 = Alphabet::characters("a");

  // a*, (aa)* over {a}
  FiniteAutomaton a_star = FiniteAutomaton::universal(a1);
  FiniteAutomaton aa_star(a1, 2, {0}, {0}, {{0, 0, 1}, {1, 0, 0}});

  SUBCASE("intersect(a*, (aa)*) is (aa)*") {
    CHECK(are_equivalent(intersect(a_star, aa_star), aa_star));
  }

  SUBCASE("complement is an involution") {
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
      FiniteAutomaton m = random_nfa(rng, ab, 6);
      CHECK(are_equivalent(complement(complement(m)), m));
    }
  }

  SUBCASE("difference(a*b, a*) = a*b") {
    FiniteAutomaton astar_b(ab, 2, {0}, {1}, {{0, 0, 0}, {0, 1, 1}});
    FiniteAutomaton astar(ab, 1, {0}, {0}, {{0, 0, 0}});
    FiniteAutomaton diff = difference(astar_b, astar);
    auto lhs = enumerate(diff, kUnbounded, 5);
    auto rhs = enumerate(astar_b, kUnbounded, 5);
    CHECK(lhs == rhs);
  }

  SUBCASE("De Morgan holds on random machines") {
    std::mt19937 rng(99);
    for (int i = 0; i < 25; ++i) {
      FiniteAutomaton m1 = random_nfa(rng, ab, 6);
      FiniteAutomaton m2 = random_nfa(rng, ab, 6);
      CHECK(are_equivalent(complement(unite(m1, m2)),
                           intersect(complement(m1), complement(m2))));
    }
  }

  SUBCASE("alphabet mismatch is rejected") {
    CHECK_THROWS_AS(intersect(a_star, FiniteAutomaton::universal(ab)), AlphabetMismatchError);
  }
}

TEST_CASE("emptiness and finiteness") {
  Alphabet ab = Alphabet::characters("ab");

  CHECK(is_empty(FiniteAutomaton::none(ab)));
  CHECK(!is_empty(FiniteAutomaton::epsilon_word(ab)));

  FiniteAutomaton finite = FiniteAutomaton::from_words(ab, {{}, {0}, {0, 0}});
  CHECK(is_finite(finite));

  FiniteAutomaton astar_b(ab, 2, {0}, {1}, {{0, 0, 0}, {0, 1, 1}});
  CHECK(!is_finite(astar_b));
  CHECK(!is_empty(astar_b));

  SUBCASE("epsilon-only cycles stay finite") {
    FiniteAutomaton m(ab, 3, {0}, {2}, {{1, 0, 2}}, {{0, 1}, {1, 0}});
    CHECK(is_finite(m));
    CHECK(contains(m, {0}));
    CHECK(!contains(m, {0, 0}));
  }

  SUBCASE("is_empty agrees with enumerate") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 30; ++i) {
      FiniteAutomaton m = random_nfa(rng, ab, 6);
      CHECK(is_empty(m) == enumerate(m, 1, kUnbounded).empty());
    }
  }
}

TEST_CASE("equivalence") {
  Alphabet ab = Alphabet::characters("ab");
  Alphabet a1 = Alphabet::characters("a");

  // a(a)* vs aa*
  FiniteAutomaton m1(a1, 2, {0}, {1}, {{0, 0, 1}, {1, 0, 1}});
  FiniteAutomaton m2(a1, 3, {0}, {1, 2}, {{0, 0, 1}, {1, 0, 2}, {2, 0, 2}});
  CHECK(are_equivalent(m1, m2));

  FiniteAutomaton astar(ab, 1, {0}, {0}, {{0, 0, 0}});
  FiniteAutomaton astar_bstar(ab, 2, {0}, {0, 1}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}});
  CHECK(!are_equivalent(astar, astar_bstar));

  std::mt19937 rng(31337);
  for (int i = 0; i < 30; ++i) {
    FiniteAutomaton m = random_nfa(rng, ab, 8);
    CHECK(are_equivalent(m, minimize(determinize(m))));
  }

  SUBCASE("agrees with comparison of canonical minimizations") {
    std::mt19937 rng2(404);
    for (int i = 0; i < 30; ++i) {
      FiniteAutomaton m1 = random_nfa(rng2, ab, 5);
      FiniteAutomaton m2 = random_nfa(rng2, ab, 5);
      CHECK(are_equivalent(m1, m2) == same_automaton(minimize(m1), minimize(m2)));
    }
  }
}

TEST_CASE("enumerate emits shortlex order") {
  SUBCASE("(a|b)* prefix") {
    Alphabet ab = Alphabet::characters("ab");
    auto words = enumerate(FiniteAutomaton::universal(ab), 5, kUnbounded);
    std::vector<Word> expect = {{}, {0}, {1}, {0, 0}, {0, 1}};
    CHECK(words == expect);
  }

  SUBCASE("empty language") {
    Alphabet ab = Alphabet::characters("ab");
    CHECK(enumerate(FiniteAutomaton::none(ab), 5, kUnbounded).empty());
  }

  SUBCASE("q*p* with order q < p") {
    Alphabet qp = Alphabet::characters("qp");
    FiniteAutomaton m(qp, 2, {0}, {0, 1}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}});
    auto words = enumerate(m, 6, kUnbounded);
    std::vector<Word> expect = {{}, {0}, {1}, {0, 0}, {0, 1}, {1, 1}};
    CHECK(words == expect);
  }

  SUBCASE("output is strictly increasing and accepted") {
    Alphabet ab = Alphabet::characters("ab");
    std::mt19937 rng(2024);
    for (int i = 0; i < 25; ++i) {
      FiniteAutomaton m = random_nfa(rng, ab, 6);
      auto words = enumerate(m, 40, kUnbounded);
      for (std::size_t j = 0; j < words.size(); ++j) {
        CHECK(contains(m, words[j]));
        if (j > 0) CHECK(shortlex_less_than(words[j - 1], words[j]));
      }
    }
  }

  SUBCASE("finite language terminates without a length bound") {
    Alphabet ab = Alphabet::characters("ab");
    FiniteAutomaton finite = FiniteAutomaton::from_words(ab, {{0}, {1, 1}});
    auto words = enumerate(finite, kUnbounded, kUnbounded);
    CHECK(words.size() == 2);
  }
}

TEST_CASE("contains") {
  Alphabet ab = Alphabet::characters("ab");
  FiniteAutomaton astar_b(ab, 2, {0}, {1}, {{0, 0, 0}, {0, 1, 1}});
  CHECK(contains(astar_b, {0, 0, 1}));
  CHECK(!contains(astar_b, {}));

  std::mt19937 rng(555);
  for (int i = 0; i < 25; ++i) {
    FiniteAutomaton m = random_nfa(rng, ab, 6);
    for (const Word& w : all_words(2, 5)) {
      CHECK(contains(m, w) == naive_accepts(m, w));
    }
  }
}

TEST_CASE("empty alphabet degenerates to subsets of {epsilon}") {
  Alphabet empty;
  CHECK(is_empty(FiniteAutomaton::none(empty)));
  auto words = enumerate(FiniteAutomaton::epsilon_word(empty), kUnbounded, kUnbounded);
  CHECK(words == std::vector<Word>{{}});
  CHECK(are_equivalent(FiniteAutomaton::universal(empty), FiniteAutomaton::epsilon_word(empty)));
}

TEST_CASE("lift_alphabet keeps the language") {
  Alphabet ab = Alphabet::characters("ab");
  Alphabet abz = Alphabet::characters("abz");
  FiniteAutomaton astar_b(ab, 2, {0}, {1}, {{0, 0, 0}, {0, 1, 1}});
  FiniteAutomaton lifted = lift_alphabet(astar_b, abz);
  CHECK(lifted.alphabet() == abz);
  CHECK(contains(lifted, {0, 1}));
  CHECK(!contains(lifted, {2}));
  CHECK_THROWS_AS(lift_alphabet(astar_b, Alphabet::characters("xy")), AlphabetMismatchError);
}
