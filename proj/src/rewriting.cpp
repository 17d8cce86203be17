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

#include <algorithm>

#include "autosemi/errors.hpp"

namespace autosemi {

StringRewritingSystem::StringRewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (const RewriteRule& r : rules_) {
    if (r.lhs.empty()) throw Error("rewrite rule with empty left-hand side");
    for (symbol_t s : r.lhs) {
      if (s >= alphabet_.size()) throw AlphabetMismatchError("rule symbol outside the alphabet");
    }
    for (symbol_t s : r.rhs) {
      if (s >= alphabet_.size()) throw AlphabetMismatchError("rule symbol outside the alphabet");
    }
  }
}

namespace {

bool matches_at(const Word& w, const Word& lhs, std::size_t pos) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + pos);
}

}  // namespace

Word normal_form(const StringRewritingSystem& r, Word w, std::size_t step_bound) {
  std::size_t max_lhs = 1;
  for (const RewriteRule& rule : r.rules()) max_lhs = std::max(max_lhs, rule.lhs.size());

  std::size_t steps = 0;
  for (std::size_t pos = 0; pos < w.size();) {
    bool fired = false;
    for (const RewriteRule& rule : r.rules()) {
      if (matches_at(w, rule.lhs, pos)) {
        if (++steps > step_bound) {
          throw StepBoundExceededError("rewriting exceeded " + std::to_string(step_bound) +
                                       " steps");
        }
        Word next;
        next.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
        next.insert(next.end(), w.begin(), w.begin() + pos);
        next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
        next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
        w = std::move(next);
        // Everything strictly left of pos was already redex-free; a new
        // redex can only start within a window reaching back max_lhs - 1.
        pos = pos > max_lhs - 1 ? pos - (max_lhs - 1) : 0;
        fired = true;
        break;
      }
    }
    if (!fired) ++pos;
  }
  return w;
}

FiniteAutomaton irr_automaton(const StringRewritingSystem& r) {
  // Build the acceptor of words containing some lhs, then complement.
  const Alphabet& a = r.alphabet();
  std::vector<Transition> ts;
  for (symbol_t g = 0; g < a.size(); ++g) ts.push_back({0, g, 0});
  state_t next = 1;
  std::vector<state_t> hits;
  for (const RewriteRule& rule : r.rules()) {
    state_t cur = 0;
    for (std::size_t i = 0; i < rule.lhs.size(); ++i) {
      ts.push_back({cur, rule.lhs[i], next});
      cur = next++;
    }
    hits.push_back(cur);
  }
  state_t sink = next++;
  for (state_t h : hits) {
    // absorb: anything after a hit stays accepted
    for (symbol_t g = 0; g < a.size(); ++g) ts.push_back({h, g, sink});
  }
  for (symbol_t g = 0; g < a.size(); ++g) ts.push_back({sink, g, sink});
  std::vector<state_t> accepting = hits;
  accepting.push_back(sink);
  FiniteAutomaton has_redex(a, next, {0}, std::move(accepting), std::move(ts));
  return complement(has_redex);
}

bool TerminationOrder::greater(const Word& u, const Word& v) const {
  auto marker_count = [this](const Word& w) {
    return std::count(w.begin(), w.end(), marker_);
  };
  std::ptrdiff_t cu = marker_count(u);
  std::ptrdiff_t cv = marker_count(v);
  if (cu != cv) return cu > cv;

  // Same number of markers: compare the lengths of the blocks between
  // them, left to right, on the first difference.
  auto blocks = [this](const Word& w) {
    std::vector<std::size_t> out;
    std::size_t len = 0;
    for (symbol_t s : w) {
      if (s == marker_) {
        out.push_back(len);
        len = 0;
      } else {
        ++len;
      }
    }
    out.push_back(len);
    return out;
  };
  std::vector<std::size_t> bu = blocks(u);
  std::vector<std::size_t> bv = blocks(v);
  for (std::size_t i = 0; i < bu.size(); ++i) {
    if (bu[i] != bv[i]) return bu[i] > bv[i];
  }
  return false;
}

ConvergenceReport check_convergence(const StringRewritingSystem& r, const TerminationOrder& order,
                                    std::size_t step_bound) {
  ConvergenceReport report;
  const auto& rules = r.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!order.greater(rules[i].lhs, rules[i].rhs)) report.nondecreasing_rules.push_back(i);
  }

  auto add_overlap = [&](std::size_t i, std::size_t j, Word word, Word left, Word right) {
    bool resolved = false;
    try {
      resolved = normal_form(r, left, step_bound) == normal_form(r, right, step_bound);
    } catch (const StepBoundExceededError&) {
      resolved = false;
    }
    report.overlaps.push_back(
        {i, j, std::move(word), std::move(left), std::move(right), resolved});
  };

  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      // Proper overlap: a nonempty proper suffix of li equals a proper
      // prefix of lj.
      for (std::size_t t = 1; t < std::min(li.size(), lj.size()); ++t) {
        if (!std::equal(li.end() - t, li.end(), lj.begin())) continue;
        Word word = li;
        word.insert(word.end(), lj.begin() + t, lj.end());
        Word left = rules[i].rhs;  // fire rule i at position 0
        left.insert(left.end(), word.begin() + li.size(), word.end());
        Word right(word.begin(), word.begin() + (li.size() - t));  // fire rule j
        right.insert(right.end(), rules[j].rhs.begin(), rules[j].rhs.end());
        add_overlap(i, j, word, left, right);
      }
      // Containment: lj occurs inside li (skip the identical full match).
      if (i != j || li.size() != lj.size()) {
        for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (i == j && pos == 0 && li.size() == lj.size()) continue;
          if (!matches_at(li, lj, pos)) continue;
          Word left = rules[i].rhs;
          Word right(li.begin(), li.begin() + pos);
          right.insert(right.end(), rules[j].rhs.begin(), rules[j].rhs.end());
          right.insert(right.end(), li.begin() + pos + lj.size(), li.end());
          add_overlap(i, j, li, left, right);
        }
      }
    }
  }
  return report;
}

}  // namespace autosemi
