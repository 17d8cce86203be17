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

#ifndef AUTOSEMI_TURING_HPP_
#define AUTOSEMI_TURING_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autosemi/rewriting.hpp"
#include "autosemi/structure.hpp"

namespace autosemi {

/// A deterministic single-tape Turing machine.  The tape is unbounded to
/// the right only; moving left at the wall halts without accepting.  The
/// accepting state has no outgoing transitions, and a missing transition
/// halts without accepting.
class TuringMachine {
 public:
  struct Action {
    std::string next_state;
    std::string write;  // a tape letter, never the blank
    bool move_right;
  };

  TuringMachine(std::vector<std::string> states, std::vector<std::string> tape_letters,
                std::string initial, std::string accepting,
                std::map<std::pair<std::string, std::string>, Action> delta,
                std::string blank = "B");

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& tape_letters() const { return tape_letters_; }
  const std::string& blank() const { return blank_; }
  const std::string& initial() const { return initial_; }
  const std::string& accepting() const { return accepting_; }
  const std::map<std::pair<std::string, std::string>, Action>& delta() const { return delta_; }

 private:
  std::vector<std::string> states_;
  std::vector<std::string> tape_letters_;
  std::string blank_;
  std::string initial_;
  std::string accepting_;
  std::map<std::pair<std::string, std::string>, Action> delta_;
};

struct SimulationResult {
  bool accepted = false;
  bool halted = false;      // false when the step budget ran out
  std::size_t steps = 0;    // machine steps taken
  std::size_t tape_cells = 0;  // cells of the final written tape
};

/// Direct configuration-level interpreter, independent of the rewriting
/// encoding.
SimulationResult simulate(const TuringMachine& m, const std::vector<std::string>& input,
                          std::size_t max_steps);

/// The alphabet of the rewriting encoding: states, tape letters, their
/// marked copies (prefix "bar:"), and the three control letters d, h,
/// bar:h.
Alphabet rm_alphabet(const TuringMachine& m);

/// The rewriting system simulating the machine: one step rule per
/// transition, cleanup rules for the accepting state, and the two
/// letter-shuffling schemas that carry d leftwards.
StringRewritingSystem build_rm(const TuringMachine& m);

/// The order under which every rule of build_rm decreases: keyed on the
/// occurrences of d.
TerminationOrder rm_order(const TuringMachine& m);

/// The word bar:h q0 w h that encodes the initial configuration on input w.
Word initial_configuration_word(const TuringMachine& m, const std::vector<std::string>& input);

/// The automatic structure of the monoid presented by build_rm, with the
/// irreducible words as representatives.
InterpretedAutomaticStructure tm_structure(const TuringMachine& m);

/// Smallest n <= n_max such that the initial configuration word followed
/// by n copies of d rewrites to the empty word; absence proves nothing
/// (the search is a semi-decision procedure).
std::optional<std::size_t> right_invert_search(const TuringMachine& m,
                                               const std::vector<std::string>& input,
                                               std::size_t n_max,
                                               std::size_t step_bound = kDefaultStepBound);

/// Text format: header lines "states:", "input:", "blank:", "initial:",
/// "accept:", then one transition per line as
///   state read next_state write L|R
TuringMachine parse_tm(std::istream& in);
TuringMachine parse_tm_file(const std::string& path);

}  // namespace autosemi

#endif  // AUTOSEMI_TURING_HPP_
