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

#include "autosemi/turing.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "autosemi/errors.hpp"

namespace autosemi {

TuringMachine::TuringMachine(std::vector<std::string> states,
                             std::vector<std::string> tape_letters, std::string initial,
                             std::string accepting,
                             std::map<std::pair<std::string, std::string>, Action> delta,
                             std::string blank)
    : states_(std::move(states)),
      tape_letters_(std::move(tape_letters)),
      blank_(std::move(blank)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  std::set<std::string> names(states_.begin(), states_.end());
  if (names.size() != states_.size()) throw ParseError("duplicate state names");
  for (const std::string& t : tape_letters_) {
    if (!names.insert(t).second) throw ParseError("tape letter collides with a state: " + t);
  }
  if (names.count(blank_)) throw ParseError("the blank symbol must be fresh");
  if (!std::count(states_.begin(), states_.end(), initial_)) throw ParseError("unknown initial state");
  if (!std::count(states_.begin(), states_.end(), accepting_)) {
    throw ParseError("unknown accepting state");
  }
  for (const auto& [key, act] : delta_) {
    const auto& [q, read] = key;
    if (!std::count(states_.begin(), states_.end(), q)) throw ParseError("unknown state: " + q);
    if (q == accepting_) throw ParseError("the accepting state halts; it has no transitions");
    if (read != blank_ && !std::count(tape_letters_.begin(), tape_letters_.end(), read)) {
      throw ParseError("unknown read symbol: " + read);
    }
    if (!std::count(states_.begin(), states_.end(), act.next_state)) {
      throw ParseError("unknown target state: " + act.next_state);
    }
    if (!std::count(tape_letters_.begin(), tape_letters_.end(), act.write)) {
      throw ParseError("machines may only write tape letters, not " + act.write);
    }
  }
}

SimulationResult simulate(const TuringMachine& m, const std::vector<std::string>& input,
                          std::size_t max_steps) {
  SimulationResult res;
  std::vector<std::string> tape = input;
  std::size_t pos = 0;
  std::string state = m.initial();
  for (;;) {
    if (state == m.accepting()) {
      res.accepted = true;
      res.halted = true;
      break;
    }
    if (res.steps >= max_steps) break;  // budget exhausted, not halted
    const std::string& read = pos < tape.size() ? tape[pos] : m.blank();
    auto it = m.delta().find({state, read});
    if (it == m.delta().end()) {
      res.halted = true;  // stuck, rejecting
      break;
    }
    const TuringMachine::Action& act = it->second;
    if (pos == tape.size()) {
      tape.push_back(act.write);
    } else {
      tape[pos] = act.write;
    }
    if (act.move_right) {
      ++pos;
    } else {
      if (pos == 0) {
        res.halted = true;  // fell off the left wall, rejecting
        ++res.steps;
        break;
      }
      --pos;
    }
    ++res.steps;
    state = act.next_state;
  }
  res.tape_cells = tape.size();
  return res;
}

Alphabet rm_alphabet(const TuringMachine& m) {
  std::vector<std::string> names = m.states();
  for (const std::string& t : m.tape_letters()) names.push_back(t);
  for (const std::string& t : m.tape_letters()) names.push_back("bar:" + t);
  names.push_back("d");
  names.push_back("h");
  names.push_back("bar:h");
  return Alphabet(std::move(names));
}

namespace {

struct TaggedRules {
  Alphabet alphabet;
  std::vector<RewriteRule> rules;
  std::vector<int> schema;  // 1..9
};

TaggedRules make_rules(const TuringMachine& m) {
  TaggedRules out{rm_alphabet(m), {}, {}};
  const Alphabet& g = out.alphabet;
  auto id = [&](const std::string& n) { return g.at(n); };
  auto bar = [&](const std::string& n) { return g.at("bar:" + n); };
  const symbol_t d = id("d");
  const symbol_t h = id("h");
  const symbol_t hbar = id("bar:h");
  const symbol_t qa = id(m.accepting());

  auto push = [&](Word lhs, Word rhs, int schema) {
    out.rules.push_back({std::move(lhs), std::move(rhs)});
    out.schema.push_back(schema);
  };

  for (const auto& [key, act] : m.delta()) {
    const symbol_t q = id(key.first);
    const symbol_t p = id(act.next_state);
    const symbol_t b = id(act.write);
    if (key.second != m.blank()) {
      const symbol_t a = id(key.second);
      if (act.move_right) {
        push({q, a, d}, {bar(act.write), p}, 1);
      } else {
        for (const std::string& cname : m.tape_letters()) {
          push({bar(cname), q, a, d}, {p, id(cname), b}, 3);
        }
      }
    } else {
      if (act.move_right) {
        push({q, h, d}, {bar(act.write), p, h}, 2);
      } else {
        for (const std::string& cname : m.tape_letters()) {
          push({bar(cname), q, h, d}, {p, id(cname), b, h}, 4);
        }
      }
    }
  }
  for (const std::string& aname : m.tape_letters()) {
    push({qa, id(aname), d}, {qa}, 5);
  }
  for (const std::string& aname : m.tape_letters()) {
    push({bar(aname), qa, h, d}, {qa, h}, 6);
  }
  push({hbar, qa, h, d}, {}, 7);
  for (const std::string& aname : m.tape_letters()) {
    for (const std::string& bname : m.tape_letters()) {
      push({id(aname), id(bname), d}, {id(aname), d, id(bname)}, 8);
    }
  }
  for (const std::string& aname : m.tape_letters()) {
    push({id(aname), h, d}, {id(aname), d, h}, 9);
  }
  return out;
}

}  // namespace

StringRewritingSystem build_rm(const TuringMachine& m) {
  TaggedRules t = make_rules(m);
  return StringRewritingSystem(t.alphabet, std::move(t.rules));
}

TerminationOrder rm_order(const TuringMachine& m) {
  return TerminationOrder(rm_alphabet(m).at("d"));
}

Word initial_configuration_word(const TuringMachine& m, const std::vector<std::string>& input) {
  Alphabet g = rm_alphabet(m);
  Word w{g.at("bar:h"), g.at(m.initial())};
  for (const std::string& t : input) w.push_back(g.at(t));
  w.push_back(g.at("h"));
  return w;
}

InterpretedAutomaticStructure tm_structure(const TuringMachine& m) {
  TaggedRules tagged = make_rules(m);
  const Alphabet& g = tagged.alphabet;
  StringRewritingSystem rules(g, tagged.rules);
  const symbol_t d = g.at("d");
  const symbol_t h = g.at("h");

  FiniteAutomaton lang = irr_automaton(rules);
  auto lxl = product_relation(lang, lang);

  std::vector<symbol_t> sigma;
  for (const std::string& t : m.tape_letters()) sigma.push_back(g.at(t));
  std::vector<symbol_t> sigma_h = sigma;
  sigma_h.push_back(h);

  std::vector<SynchronousAutomaton> multipliers;
  for (symbol_t letter = 0; letter < g.size(); ++letter) {
    if (letter != d) {
      // appending any letter but d keeps a word irreducible
      multipliers.push_back(
          intersect(context_rewrite_relation(g, {}, {letter}, TailSpec::none()), lxl));
      continue;
    }
    // Multiplication by d: either ud stays irreducible, or the d migrates
    // left through a plain-letter suffix and stops, or it reaches and
    // fires one of the configuration rules.
    SynchronousAutomaton rel = context_rewrite_relation(g, {}, {d}, TailSpec::none());
    for (symbol_t a : sigma) {
      rel = unite(rel, context_rewrite_relation(g, {a}, {a, d},
                                                TailSpec::suffix(sigma, sigma_h, 1)));
    }
    for (std::size_t i = 0; i < tagged.rules.size(); ++i) {
      if (tagged.schema[i] > 7) continue;
      const RewriteRule& rule = tagged.rules[i];
      Word window(rule.lhs.begin(), rule.lhs.end() - 1);  // strip the final d
      TailSpec tail = std::count(sigma.begin(), sigma.end(), window.back())
                          ? TailSpec::suffix(sigma, sigma_h, 0)
                          : TailSpec::none();
      rel = unite(rel, context_rewrite_relation(g, window, rule.rhs, tail));
    }
    multipliers.push_back(intersect(rel, lxl));
  }

  GeneratorAssignment assignment;
  for (symbol_t letter = 0; letter < g.size(); ++letter) assignment.images.push_back({letter});
  StructureFlags flags;
  flags.has_uniqueness = true;
  flags.generators_embedded = true;
  flags.monoid_with_epsilon = true;
  return InterpretedAutomaticStructure(
      PreAutomaticStructure(g, lang, diagonal(lang), std::move(multipliers)),
      std::move(assignment), flags);
}

std::optional<std::size_t> right_invert_search(const TuringMachine& m,
                                               const std::vector<std::string>& input,
                                               std::size_t n_max, std::size_t step_bound) {
  StringRewritingSystem rules = build_rm(m);
  Word base = initial_configuration_word(m, input);
  const symbol_t d = rules.alphabet().at("d");
  for (std::size_t n = 1; n <= n_max; ++n) {
    Word w = base;
    w.insert(w.end(), n, d);
    if (normal_form(rules, std::move(w), step_bound).empty()) return n;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

TuringMachine parse_tm(std::istream& in) {
  std::vector<std::string> states, letters;
  std::string blank = "B", initial, accepting;
  std::map<std::pair<std::string, std::string>, TuringMachine::Action> delta;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "states:") {
      states.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "input:") {
      letters.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "blank:") {
      if (toks.size() != 2) throw ParseError("blank: expects one symbol");
      blank = toks[1];
    } else if (toks[0] == "initial:") {
      if (toks.size() != 2) throw ParseError("initial: expects one state");
      initial = toks[1];
    } else if (toks[0] == "accept:") {
      if (toks.size() != 2) throw ParseError("accept: expects one state");
      accepting = toks[1];
    } else {
      if (toks.size() != 5) {
        throw ParseError("transition line needs 5 fields: state read next write L|R");
      }
      bool right;
      if (toks[4] == "R" || toks[4] == "r") {
        right = true;
      } else if (toks[4] == "L" || toks[4] == "l") {
        right = false;
      } else {
        throw ParseError("move must be L or R, got " + toks[4]);
      }
      auto key = std::make_pair(toks[0], toks[1]);
      if (delta.count(key)) throw ParseError("duplicate transition for " + toks[0] + "," + toks[1]);
      delta[key] = {toks[2], toks[3], right};
    }
  }
  if (states.empty()) throw ParseError("missing states:");
  if (initial.empty() || accepting.empty()) throw ParseError("missing initial: or accept:");
  return TuringMachine(states, letters, initial, accepting, std::move(delta), blank);
}

TuringMachine parse_tm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_tm(in);
}

}  // namespace autosemi
