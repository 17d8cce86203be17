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

#ifndef AUTOSEMI_REWRITING_HPP_
#define AUTOSEMI_REWRITING_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "autosemi/automaton.hpp"

namespace autosemi {

struct RewriteRule {
  Word lhs;  // nonempty
  Word rhs;
};

class StringRewritingSystem {
 public:
  StringRewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

 private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
};

inline constexpr std::size_t kDefaultStepBound = 1u << 20;

/// Leftmost-outermost rewriting until no rule applies.  For a convergent
/// system the strategy does not affect the result.  Throws
/// StepBoundExceededError after `step_bound` replacements.
Word normal_form(const StringRewritingSystem& r, Word w,
                 std::size_t step_bound = kDefaultStepBound);

/// Acceptor of the words containing no left-hand side as a factor.
FiniteAutomaton irr_automaton(const StringRewritingSystem& r);

/// Well-founded order keyed on occurrences of a marker letter, with ties
/// broken by the lengths of the blocks between consecutive markers.
class TerminationOrder {
 public:
  explicit TerminationOrder(symbol_t marker) : marker_(marker) {}

  symbol_t marker() const { return marker_; }
  bool greater(const Word& u, const Word& v) const;

 private:
  symbol_t marker_;
};

struct OverlapReport {
  std::size_t rule_left;      // rule applied at the left of the overlap word
  std::size_t rule_right;
  Word overlap_word;
  Word left_reduct;
  Word right_reduct;
  bool resolved;              // both reducts share a normal form
};

struct ConvergenceReport {
  std::vector<std::size_t> nondecreasing_rules;  // rules violating the order
  std::vector<OverlapReport> overlaps;

  std::size_t unresolved_overlaps() const {
    std::size_t n = 0;
    for (const auto& o : overlaps) n += !o.resolved;
    return n;
  }
  bool convergent() const { return nondecreasing_rules.empty() && unresolved_overlaps() == 0; }
};

/// Checks that every rule decreases under the order and that all critical
/// pairs (overlaps and containments of left-hand sides) resolve to a
/// common normal form.
ConvergenceReport check_convergence(const StringRewritingSystem& r, const TerminationOrder& order,
                                    std::size_t step_bound = kDefaultStepBound);

}  // namespace autosemi

#endif  // AUTOSEMI_REWRITING_HPP_
