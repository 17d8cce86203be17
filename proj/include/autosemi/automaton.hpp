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

#ifndef AUTOSEMI_AUTOMATON_HPP_
#define AUTOSEMI_AUTOMATON_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "autosemi/alphabet.hpp"

namespace autosemi {

struct Transition {
  state_t from;
  symbol_t label;
  state_t to;
  auto operator<=>(const Transition&) const = default;
};

/// A nondeterministic finite acceptor over an arbitrary alphabet, with
/// optional epsilon moves.  Values are immutable after construction, so
/// they are safe to share between threads; every operation below is a
/// pure function returning a fresh automaton.
class FiniteAutomaton {
 public:
  FiniteAutomaton(Alphabet alphabet, state_t num_states, std::vector<state_t> initial,
                  std::vector<state_t> accepting, std::vector<Transition> transitions,
                  std::vector<std::pair<state_t, state_t>> epsilon_moves = {});

  /// The empty language.
  static FiniteAutomaton none(Alphabet alphabet);
  /// The language containing only the empty word.
  static FiniteAutomaton epsilon_word(Alphabet alphabet);
  /// All words over the alphabet.
  static FiniteAutomaton universal(Alphabet alphabet);
  static FiniteAutomaton single_word(Alphabet alphabet, const Word& w);
  static FiniteAutomaton from_words(Alphabet alphabet, const std::vector<Word>& words);

  const Alphabet& alphabet() const { return alphabet_; }
  state_t num_states() const { return num_states_; }
  const std::vector<state_t>& initial() const { return initial_; }
  const std::vector<state_t>& accepting() const { return accepting_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<std::pair<state_t, state_t>>& epsilon_moves() const { return epsilon_moves_; }

  /// True when the automaton is a complete DFA: one initial state, no
  /// epsilon moves, exactly one transition per (state, symbol).
  bool is_complete_dfa() const { return complete_dfa_; }

 private:
  Alphabet alphabet_;
  state_t num_states_;
  std::vector<state_t> initial_;
  std::vector<state_t> accepting_;
  std::vector<Transition> transitions_;
  std::vector<std::pair<state_t, state_t>> epsilon_moves_;
  bool complete_dfa_;
};

/// Subset construction.  The result is a complete DFA for the same
/// language over the same alphabet.
FiniteAutomaton determinize(const FiniteAutomaton& m);

/// Minimal complete DFA with canonically numbered states (breadth-first
/// from the initial state, symbols in alphabet order), so two automata
/// accept the same language iff their minimizations are structurally
/// identical.
FiniteAutomaton minimize(const FiniteAutomaton& m);

/// Complement relative to the automaton's own alphabet.
FiniteAutomaton complement(const FiniteAutomaton& m);

FiniteAutomaton intersect(const FiniteAutomaton& a, const FiniteAutomaton& b);
FiniteAutomaton unite(const FiniteAutomaton& a, const FiniteAutomaton& b);
FiniteAutomaton difference(const FiniteAutomaton& a, const FiniteAutomaton& b);

bool is_empty(const FiniteAutomaton& m);
bool is_finite(const FiniteAutomaton& m);
bool are_equivalent(const FiniteAutomaton& a, const FiniteAutomaton& b);
bool contains(const FiniteAutomaton& m, const Word& w);

/// Words of the language in shortlex order.  Stops after `max_count`
/// words or once `max_length` is exceeded, whichever comes first; pass
/// kUnbounded for no limit.  Throws std::invalid_argument when both
/// bounds are unbounded and the language is infinite.
std::vector<Word> enumerate(const FiniteAutomaton& m, std::size_t max_count,
                            std::size_t max_length);

/// Shortlex-least accepted word, if any.
std::optional<Word> shortlex_first(const FiniteAutomaton& m);

/// Structural equality (same alphabet, states, transitions).  Mostly
/// useful on minimized automata, where it coincides with language
/// equality.
bool same_automaton(const FiniteAutomaton& a, const FiniteAutomaton& b);

/// Same language over a larger alphabet.  `wider` must list the current
/// alphabet's names as a prefix.
FiniteAutomaton lift_alphabet(const FiniteAutomaton& m, const Alphabet& wider);

}  // namespace autosemi

#endif  // AUTOSEMI_AUTOMATON_HPP_
