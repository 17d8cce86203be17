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

// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// criterion 7 is a soft performance observation and never fails the run.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "autosemi/decisions.hpp"
#include "autosemi/errors.hpp"
#include "autosemi/fixtures.hpp"
#include "autosemi/rewriting.hpp"
#include "autosemi/suite.hpp"
#include "autosemi/turing.hpp"

using namespace autosemi;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail, bool soft = false) {
  std::cout << (pass ? "[PASS] " : (soft ? "[WARN] " : "[FAIL] ")) << "criterion " << criterion
            << ": " << detail << std::endl;
  if (!pass && !soft) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1 + 2: oracle equivalence and Rees round trips over the instance suite.

void criterion_1_and_2() {
  OracleSuiteOptions options;
  options.seed = 20240901;
  options.random_count = 200;
  options.max_order = 6;

  auto instances = suite_instances(options);

  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> verdict_mismatches;
  std::vector<std::string> rees_mismatches;
  std::size_t rees_count = 0;
  for (const auto& [label, table] : instances) {
    auto bad = check_against_table(table, label);
    verdict_mismatches.insert(verdict_mismatches.end(), bad.begin(), bad.end());
    BruteProperties p = brute_properties(table);
    if (p.completely_zero_simple) {
      auto rb = check_rees_roundtrip(from_cayley(table), false, label);
      rees_mismatches.insert(rees_mismatches.end(), rb.begin(), rb.end());
      ++rees_count;
    }
    if (p.completely_simple) {
      auto rb = check_rees_roundtrip(from_cayley(table), true, label);
      rees_mismatches.insert(rees_mismatches.end(), rb.begin(), rb.end());
      ++rees_count;
    }
  }

  std::ostringstream d1;
  d1 << "oracle equivalence on " << instances.size() << " instances ("
     << verdict_mismatches.size() << " mismatches, " << seconds_since(start) << " s)";
  for (const auto& m : verdict_mismatches) d1 << "\n       " << m;
  report(1, verdict_mismatches.empty(), d1.str());

  std::ostringstream d2;
  d2 << "Rees round trip on " << rees_count << " completely (zero-)simple instances ("
     << rees_mismatches.size() << " mismatches)";
  for (const auto& m : rees_mismatches) d2 << "\n       " << m;
  report(2, rees_mismatches.empty() && rees_count > 0, d2.str());
}

// ---------------------------------------------------------------------------
// 3: the bicyclic monoid against the one-rule rewriting oracle.

Word bicyclic_nf(Word w) {
  // q = 0, p = 1; erase pq factors until none remain
  for (std::size_t i = 0; i + 1 < w.size();) {
    if (w[i] == 1 && w[i + 1] == 0) {
      w.erase(w.begin() + i, w.begin() + i + 2);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return w;
}

void criterion_3() {
  auto start = std::chrono::steady_clock::now();
  InterpretedAutomaticStructure s = bicyclic_structure();
  const Word q = {0}, p = {1};

  std::vector<Word> words{{}};
  {
    std::vector<Word> layer{{}};
    for (int l = 0; l < 6; ++l) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (symbol_t a = 0; a < 2; ++a) {
          Word v = w;
          v.push_back(a);
          next.push_back(v);
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }

  std::size_t checked = 0, wrong = 0;
  for (const Word& u : words) {
    for (const Word& v : words) {
      ++checked;
      if (word_problem(s, u, v) != (bicyclic_nf(u) == bicyclic_nf(v))) ++wrong;
    }
  }

  bool ok = wrong == 0;
  {
    auto inv_q = enumerate(left_inverses(s, q), kUnbounded, kUnbounded);
    ok &= inv_q == std::vector<Word>{p};
    ok &= is_empty(left_inverses(s, p));
    ok &= !is_unit(s, q);
    ok &= is_right_cancellable(s, p);
    ok &= !is_right_cancellable(s, q);
    auto e = identity(s);
    ok &= e.has_value() && e->empty();
  }
  std::ostringstream d;
  d << "bicyclic suite: " << checked << " word pairs vs the pq->1 oracle, " << wrong
    << " disagreements, inverses/units/cancellativity/identity checked ("
    << seconds_since(start) << " s)";
  report(3, ok, d.str());
}

// ---------------------------------------------------------------------------
// 4: the machine-derived structures.

TuringMachine one_rule_machine() {
  return TuringMachine({"q0", "qa"}, {"a"}, "q0", "qa", {{{"q0", "a"}, {"qa", "a", true}}});
}

TuringMachine even_machine() {
  return TuringMachine({"q0", "q1", "qa"}, {"a"}, "q0", "qa",
                       {{{"q0", "a"}, {"q1", "a", true}},
                        {{"q1", "a"}, {"q0", "a", true}},
                        {{"q0", "B"}, {"qa", "a", true}}});
}

TuringMachine small_left_machine() {
  return TuringMachine({"q0", "q1", "qa"}, {"a", "b"}, "q0", "qa",
                       {{{"q0", "a"}, {"q1", "b", true}},
                        {{"q1", "a"}, {"qa", "a", false}}});
}

TuringMachine wall_machine() {
  // moves left at the wall immediately: rejects everything
  return TuringMachine({"q0", "qa"}, {"a"}, "q0", "qa", {{{"q0", "a"}, {"qa", "a", false}}});
}

TuringMachine loop_machine() {
  return TuringMachine({"q0", "qa"}, {"a"}, "q0", "qa",
                       {{{"q0", "a"}, {"q0", "a", true}},
                        {{"q0", "B"}, {"q0", "a", true}}});
}

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream d;

  TuringMachine m1 = one_rule_machine();

  // The traced right-inverse exponent.
  auto n = right_invert_search(m1, {"a"}, 10);
  if (!(n && *n == 3)) {
    ok = false;
    d << " [right_invert_search(a) != 3]";
  }

  // No critical pairs in any machine system.
  for (const TuringMachine& m :
       {m1, even_machine(), small_left_machine(), wall_machine(), loop_machine()}) {
    ConvergenceReport rep = check_convergence(build_rm(m), rm_order(m));
    if (!rep.overlaps.empty() || !rep.nondecreasing_rules.empty()) {
      ok = false;
      d << " [convergence report not clean]";
    }
  }

  // Exhaustive agreement of the d-multiplier with the rewriting engine on
  // all irreducible words up to length 8, plus totality and functionality
  // at the automaton level (which upgrades per-word containment to
  // equality of the relations on that range).
  {
    InterpretedAutomaticStructure s = tm_structure(m1);
    StringRewritingSystem rules = build_rm(m1);
    const symbol_t dd = s.generators().at("d");
    const SynchronousAutomaton& ld = s.multiplier_of(dd);
    if (!are_equivalent(project(ld, 1), s.rep_lang())) {
      ok = false;
      d << " [d-multiplier not total]";
    }
    if (!is_subrelation(compose(invert(ld), ld), diagonal(project(ld, 2)))) {
      ok = false;
      d << " [d-multiplier not functional]";
    }

    // walk the irreducible words via the representative DFA
    FiniteAutomaton lang = determinize(s.rep_lang());
    const std::size_t k = lang.alphabet().size();
    std::vector<char> acc(lang.num_states(), 0);
    for (state_t a : lang.accepting()) acc[a] = 1;
    auto step = [&](state_t q, symbol_t a) { return lang.transitions()[q * k + a].to; };

    std::size_t checked = 0, wrong = 0;
    Word word;
    auto dfs = [&](auto&& self, state_t q, std::size_t depth) -> void {
      if (acc[q]) {
        ++checked;
        Word ud = word;
        ud.push_back(dd);
        if (!contains(ld, word, normal_form(rules, ud))) ++wrong;
      }
      if (depth == 8) return;
      for (symbol_t a = 0; a < k; ++a) {
        state_t nq = step(q, a);
        if (!acc[nq]) continue;  // irreducibility is closed under factors
        word.push_back(a);
        self(self, nq, depth + 1);
        word.pop_back();
      }
    };
    dfs(dfs, lang.initial()[0], 0);
    if (wrong != 0) ok = false;
    d << " [" << checked << " irreducible words, " << wrong << " disagreements]";
  }

  // Search agreement with direct simulation on further machines.
  {
    std::size_t checked = 0, wrong = 0;
    for (const TuringMachine& m :
         {even_machine(), small_left_machine(), wall_machine(), loop_machine()}) {
      std::vector<std::vector<std::string>> inputs{{}};
      std::vector<std::vector<std::string>> layer{{}};
      for (int l = 0; l < 3; ++l) {
        std::vector<std::vector<std::string>> next;
        for (const auto& w : layer) {
          for (const auto& c : m.tape_letters()) {
            auto v = w;
            v.push_back(c);
            next.push_back(v);
          }
        }
        inputs.insert(inputs.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      for (const auto& w : inputs) {
        ++checked;
        SimulationResult sim = simulate(m, w, 2000);
        auto found = right_invert_search(m, w, 40);
        bool expect = sim.halted && sim.accepted;
        if (found.has_value() != expect) ++wrong;
        if (found && *found != sim.steps + sim.tape_cells + 1) ++wrong;
      }
    }
    if (wrong != 0) ok = false;
    d << " [" << checked << " machine inputs vs simulation, " << wrong << " disagreements]";
  }

  std::ostringstream head;
  head << "machine-derived structures (" << seconds_since(start) << " s)" << d.str();
  report(4, ok, head.str());
}

// ---------------------------------------------------------------------------
// 5: relation algebra laws on random machines.

void criterion_5() {
  auto start = std::chrono::steady_clock::now();
  Alphabet ab = Alphabet::characters("ab");
  PaddedPairAlphabet pa(ab);
  std::mt19937 rng(424242);

  auto random_relation = [&]() {
    std::uniform_int_distribution<state_t> nd(1, 6);
    state_t n = nd(rng);
    std::uniform_int_distribution<state_t> sd(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 4);
    std::vector<Transition> ts;
    for (state_t q = 0; q < n; ++q) {
      for (symbol_t p = 0; p < pa.pairs().size(); ++p) {
        if (coin(rng) == 0) ts.push_back({q, p, sd(rng)});
      }
    }
    std::vector<state_t> accepting;
    for (state_t q = 0; q < n; ++q) {
      if (coin(rng) < 2) accepting.push_back(q);
    }
    return SynchronousAutomaton(ab, FiniteAutomaton(pa.pairs(), n, {sd(rng)}, accepting, ts));
  };

  std::size_t rounds = 100, wrong = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    auto r = random_relation();
    auto s = random_relation();
    auto t = random_relation();
    if (!relations_equal(complement(unite(r, s)),
                         intersect(complement(r), complement(s)))) ++wrong;
    if (!relations_equal(invert(invert(r)), r)) ++wrong;
    if (!relations_equal(compose(compose(r, s), t), compose(r, compose(s, t)))) ++wrong;
  }

  // convolution round trip, exhaustive to length 6
  std::size_t pairs = 0;
  {
    std::vector<Word> words{{}};
    std::vector<Word> layer{{}};
    for (int l = 0; l < 6; ++l) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (symbol_t a = 0; a < 2; ++a) {
          Word v = w;
          v.push_back(a);
          next.push_back(v);
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    for (const Word& u : words) {
      for (const Word& v : words) {
        ++pairs;
        auto [u2, v2] = deconvolve(pa, convolve(pa, u, v));
        if (u2 != u || v2 != v) ++wrong;
      }
    }
  }

  std::ostringstream d;
  d << "relation algebra laws on " << rounds << " random machines and " << pairs
    << " convolution pairs, " << wrong << " violations (" << seconds_since(start) << " s)";
  report(5, wrong == 0, d.str());
}

// ---------------------------------------------------------------------------
// 6: the cross-section contract over fattened suite structures.

void criterion_6() {
  auto start = std::chrono::steady_clock::now();
  OracleSuiteOptions options;
  options.seed = 77;
  options.random_count = 44;  // plus 6 named = 50 structures
  options.max_order = 5;

  std::size_t structures = 0, wrong = 0;
  std::mt19937 rng(7);
  for (const auto& [label, table] : suite_instances(options)) {
    InterpretedAutomaticStructure s = from_cayley(table);
    // fatten: add the square of every generator as a redundant word
    FiniteAutomaton k = s.rep_lang();
    for (symbol_t g = 0; g < s.generators().size(); ++g) {
      k = unite(k, FiniteAutomaton::single_word(s.generators(), {g, g}));
    }
    InterpretedAutomaticStructure fat = with_representatives(s, k);
    InterpretedAutomaticStructure cs = to_cross_section(fat);
    ++structures;

    if (!is_diagonal_on(cs.equality(), cs.rep_lang())) ++wrong;
    if (!cs.flags().has_uniqueness) ++wrong;
    for (symbol_t g = 0; g < cs.generators().size(); ++g) {
      if (!contains(cs.rep_lang(), {g})) {
        ++wrong;
        break;
      }
    }
    if (contains(cs.rep_lang(), Word{})) ++wrong;

    std::uniform_int_distribution<symbol_t> gen(0, static_cast<symbol_t>(table.size() - 1));
    std::uniform_int_distribution<int> len(1, 3);
    for (int i = 0; i < 50; ++i) {
      Word u, v;
      for (int j = len(rng); j > 0; --j) u.push_back(gen(rng));
      for (int j = len(rng); j > 0; --j) v.push_back(gen(rng));
      if (word_problem(cs, u, v) != word_problem(fat, u, v)) {
        ++wrong;
        break;
      }
    }
  }
  std::ostringstream d;
  d << "cross-section contract on " << structures << " fattened structures, " << wrong
    << " violations (" << seconds_since(start) << " s)";
  report(6, wrong == 0 && structures >= 50, d.str());
}

// ---------------------------------------------------------------------------
// 7: soft quadratic-growth observation for the fixed-structure word problem.

void criterion_7() {
  InterpretedAutomaticStructure s = bicyclic_structure();
  std::mt19937 rng(2025);
  std::ostringstream d;
  d << "word problem growth on the bicyclic structure:";

  std::vector<std::pair<std::size_t, double>> timings;
  for (int k = 6; k <= 11; ++k) {
    std::size_t n = std::size_t{1} << k;
    std::uniform_int_distribution<symbol_t> letter(0, 1);
    Word u, v;
    for (std::size_t i = 0; i < n; ++i) {
      u.push_back(letter(rng));
      v.push_back(letter(rng));
    }
    auto start = std::chrono::steady_clock::now();
    volatile bool result = word_problem(s, u, v);
    (void)result;
    double t = seconds_since(start);
    timings.emplace_back(n, t);
    d << " (" << n << ", " << t << "s)";
  }

  // Fit the constant on the small sizes and check the large ones stay
  // within a generous factor of c * n^2 * log n.
  double c = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    auto [n, t] = timings[i];
    c = std::max(c, t / (double(n) * double(n) * std::log2(double(n))));
  }
  bool within = true;
  for (std::size_t i = 3; i < timings.size(); ++i) {
    auto [n, t] = timings[i];
    if (t > 4 * c * double(n) * double(n) * std::log2(double(n))) within = false;
  }
  d << (within ? " -- within the fitted quadratic envelope" : " -- exceeds the fitted envelope");
  report(7, within, d.str() + " (soft, non-blocking)", /*soft=*/true);
}

}  // namespace

int main() {
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
  } else {
    std::cout << failures << " criteria failed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
