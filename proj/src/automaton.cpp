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

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "autosemi/errors.hpp"

namespace autosemi {

namespace {

std::vector<state_t> sorted_unique(std::vector<state_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Complete DFA in table form; dense and fast to walk.
struct Dfa {
  Alphabet alphabet;
  state_t n = 0;
  state_t initial = 0;
  std::vector<char> accepting;  // n flags
  std::vector<state_t> table;   // n * k, row-major

  state_t step(state_t q, symbol_t a) const { return table[q * alphabet.size() + a]; }
};

struct Adjacency {
  std::vector<std::vector<std::pair<symbol_t, state_t>>> out;
  std::vector<std::vector<state_t>> eps;

  explicit Adjacency(const FiniteAutomaton& m)
      : out(m.num_states()), eps(m.num_states()) {
    for (const Transition& t : m.transitions()) out[t.from].emplace_back(t.label, t.to);
    for (auto [a, b] : m.epsilon_moves()) eps[a].push_back(b);
  }
};

void eps_close(const Adjacency& adj, std::vector<state_t>& states) {
  std::vector<char> seen(adj.out.size(), 0);
  std::deque<state_t> work;
  for (state_t s : states) {
    if (!seen[s]) {
      seen[s] = 1;
      work.push_back(s);
    }
  }
  states.clear();
  while (!work.empty()) {
    state_t s = work.front();
    work.pop_front();
    states.push_back(s);
    for (state_t t : adj.eps[s]) {
      if (!seen[t]) {
        seen[t] = 1;
        work.push_back(t);
      }
    }
  }
  std::sort(states.begin(), states.end());
}

Dfa to_dfa(const FiniteAutomaton& m);

FiniteAutomaton from_dfa(const Dfa& d) {
  std::vector<state_t> accepting;
  std::vector<Transition> ts;
  const std::size_t k = d.alphabet.size();
  ts.reserve(d.n * k);
  for (state_t q = 0; q < d.n; ++q) {
    if (d.accepting[q]) accepting.push_back(q);
    for (symbol_t a = 0; a < k; ++a) ts.push_back({q, a, d.table[q * k + a]});
  }
  return FiniteAutomaton(d.alphabet, d.n, {d.initial}, std::move(accepting), std::move(ts));
}

Dfa subset_construction(const FiniteAutomaton& m) {
  const std::size_t k = m.alphabet().size();
  Adjacency adj(m);

  std::map<std::vector<state_t>, state_t> ids;
  std::vector<std::vector<state_t>> sets;
  auto intern = [&](std::vector<state_t> s) {
    auto [it, fresh] = ids.emplace(s, static_cast<state_t>(sets.size()));
    if (fresh) sets.push_back(std::move(s));
    return it->second;
  };

  std::vector<char> is_acc(m.num_states(), 0);
  for (state_t s : m.accepting()) is_acc[s] = 1;

  std::vector<state_t> start(m.initial());
  eps_close(adj, start);
  Dfa d;
  d.alphabet = m.alphabet();
  d.initial = intern(std::move(start));

  std::vector<char> accepting_flags;
  std::vector<state_t> table;
  for (state_t q = 0; q < sets.size(); ++q) {
    const std::vector<state_t> set = sets[q];
    char acc = 0;
    for (state_t s : set) acc |= is_acc[s];
    accepting_flags.push_back(acc);
    for (symbol_t a = 0; a < k; ++a) {
      std::vector<state_t> next;
      for (state_t s : set) {
        for (auto [label, to] : adj.out[s]) {
          if (label == a) next.push_back(to);
        }
      }
      next = sorted_unique(std::move(next));
      eps_close(adj, next);
      table.push_back(intern(std::move(next)));
    }
  }
  d.n = static_cast<state_t>(sets.size());
  d.accepting = std::move(accepting_flags);
  d.table = std::move(table);
  return d;
}

Dfa to_dfa(const FiniteAutomaton& m) {
  if (m.is_complete_dfa()) {
    Dfa d;
    d.alphabet = m.alphabet();
    d.n = std::max<state_t>(m.num_states(), 1);
    d.initial = m.initial().empty() ? 0 : m.initial()[0];
    d.accepting.assign(d.n, 0);
    for (state_t s : m.accepting()) d.accepting[s] = 1;
    d.table.assign(static_cast<std::size_t>(d.n) * m.alphabet().size(), 0);
    for (const Transition& t : m.transitions()) {
      d.table[static_cast<std::size_t>(t.from) * m.alphabet().size() + t.label] = t.to;
    }
    return d;
  }
  return subset_construction(m);
}

// Moore partition refinement followed by canonical breadth-first state
// numbering.  Unreachable states are dropped first.
Dfa minimize_dfa(const Dfa& d) {
  const std::size_t k = d.alphabet.size();

  // Reachable restriction.
  std::vector<state_t> order;
  std::vector<state_t> remap(d.n, d.n);
  order.push_back(d.initial);
  remap[d.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    state_t q = order[i];
    for (symbol_t a = 0; a < k; ++a) {
      state_t t = d.step(q, a);
      if (remap[t] == d.n) {
        remap[t] = static_cast<state_t>(order.size());
        order.push_back(t);
      }
    }
  }
  const state_t n = static_cast<state_t>(order.size());

  std::vector<state_t> cls(n);
  for (state_t q = 0; q < n; ++q) cls[q] = d.accepting[order[q]] ? 1 : 0;

  // Refinement renumbers classes in first-seen order each round, which is
  // deterministic, so the fixpoint test is plain equality.
  for (;;) {
    std::map<std::vector<state_t>, state_t> sig_ids;
    std::vector<state_t> next_cls(n);
    for (state_t q = 0; q < n; ++q) {
      std::vector<state_t> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[q]);
      for (symbol_t a = 0; a < k; ++a) sig.push_back(cls[remap[d.step(order[q], a)]]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<state_t>(sig_ids.size()));
      (void)fresh;
      next_cls[q] = it->second;
    }
    if (next_cls == cls) break;
    cls = std::move(next_cls);
  }

  // Canonical numbering of classes by BFS from the initial class.
  const state_t num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<state_t> canon(num_classes, num_classes);
  std::vector<state_t> rep;  // class -> representative in `order` indexing
  rep.assign(num_classes, 0);
  for (state_t q = n; q-- > 0;) rep[cls[q]] = q;

  std::vector<state_t> bfs;
  canon[cls[0]] = 0;
  bfs.push_back(cls[0]);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    state_t c = bfs[i];
    state_t q = rep[c];
    for (symbol_t a = 0; a < k; ++a) {
      state_t tc = cls[remap[d.step(order[q], a)]];
      if (canon[tc] == num_classes) {
        canon[tc] = static_cast<state_t>(bfs.size());
        bfs.push_back(tc);
      }
    }
  }

  Dfa out;
  out.alphabet = d.alphabet;
  out.n = num_classes;
  out.initial = 0;
  out.accepting.assign(num_classes, 0);
  out.table.assign(static_cast<std::size_t>(num_classes) * k, 0);
  for (state_t c = 0; c < num_classes; ++c) {
    state_t q = rep[c];
    out.accepting[canon[c]] = d.accepting[order[q]];
    for (symbol_t a = 0; a < k; ++a) {
      out.table[static_cast<std::size_t>(canon[c]) * k + a] = canon[cls[remap[d.step(order[q], a)]]];
    }
  }
  return out;
}

enum class BoolOp { And, Or, Diff };

FiniteAutomaton product(const FiniteAutomaton& a, const FiniteAutomaton& b, BoolOp op) {
  if (a.alphabet() != b.alphabet()) {
    throw AlphabetMismatchError("boolean operation on automata over different alphabets");
  }
  Dfa da = to_dfa(a);
  Dfa db = to_dfa(b);
  const std::size_t k = da.alphabet.size();

  std::map<std::pair<state_t, state_t>, state_t> ids;
  std::vector<std::pair<state_t, state_t>> states;
  auto intern = [&](state_t x, state_t y) {
    auto [it, fresh] = ids.emplace(std::make_pair(x, y), static_cast<state_t>(states.size()));
    if (fresh) states.emplace_back(x, y);
    return it->second;
  };

  Dfa d;
  d.alphabet = da.alphabet;
  d.initial = intern(da.initial, db.initial);
  for (state_t q = 0; q < states.size(); ++q) {
    auto [x, y] = states[q];
    bool acc = false;
    switch (op) {
      case BoolOp::And: acc = da.accepting[x] && db.accepting[y]; break;
      case BoolOp::Or: acc = da.accepting[x] || db.accepting[y]; break;
      case BoolOp::Diff: acc = da.accepting[x] && !db.accepting[y]; break;
    }
    d.accepting.push_back(acc);
    for (symbol_t s = 0; s < k; ++s) d.table.push_back(intern(da.step(x, s), db.step(y, s)));
  }
  d.n = static_cast<state_t>(states.size());
  return from_dfa(minimize_dfa(d));
}

// States that can reach acceptance / are reachable, epsilon moves included.
std::pair<std::vector<char>, std::vector<char>> useful_states(const FiniteAutomaton& m) {
  const state_t n = m.num_states();
  std::vector<std::vector<state_t>> fwd(n), back(n);
  for (const Transition& t : m.transitions()) {
    fwd[t.from].push_back(t.to);
    back[t.to].push_back(t.from);
  }
  for (auto [a, b] : m.epsilon_moves()) {
    fwd[a].push_back(b);
    back[b].push_back(a);
  }
  auto closure = [n](const std::vector<std::vector<state_t>>& edges,
                     const std::vector<state_t>& seeds) {
    std::vector<char> seen(n, 0);
    std::deque<state_t> work;
    for (state_t s : seeds) {
      if (!seen[s]) {
        seen[s] = 1;
        work.push_back(s);
      }
    }
    while (!work.empty()) {
      state_t s = work.front();
      work.pop_front();
      for (state_t t : edges[s]) {
        if (!seen[t]) {
          seen[t] = 1;
          work.push_back(t);
        }
      }
    }
    return seen;
  };
  return {closure(fwd, m.initial()), closure(back, m.accepting())};
}

}  // namespace

FiniteAutomaton::FiniteAutomaton(Alphabet alphabet, state_t num_states,
                                 std::vector<state_t> initial, std::vector<state_t> accepting,
                                 std::vector<Transition> transitions,
                                 std::vector<std::pair<state_t, state_t>> epsilon_moves)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(sorted_unique(std::move(initial))),
      accepting_(sorted_unique(std::move(accepting))),
      transitions_(std::move(transitions)),
      epsilon_moves_(std::move(epsilon_moves)) {
  for (state_t s : initial_) {
    if (s >= num_states_) throw Error("initial state out of range");
  }
  for (state_t s : accepting_) {
    if (s >= num_states_) throw Error("accepting state out of range");
  }
  for (const Transition& t : transitions_) {
    if (t.from >= num_states_ || t.to >= num_states_) throw Error("transition state out of range");
    if (t.label >= alphabet_.size()) throw Error("transition symbol outside alphabet");
  }
  for (auto [a, b] : epsilon_moves_) {
    if (a >= num_states_ || b >= num_states_) throw Error("epsilon move state out of range");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  complete_dfa_ = initial_.size() == 1 && epsilon_moves_.empty() && num_states_ > 0 &&
                  transitions_.size() == static_cast<std::size_t>(num_states_) * alphabet_.size();
  if (complete_dfa_) {
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
      const Transition& t = transitions_[i];
      if (t.from != i / alphabet_.size() || t.label != i % alphabet_.size()) {
        complete_dfa_ = false;
        break;
      }
    }
  }
}

FiniteAutomaton FiniteAutomaton::none(Alphabet alphabet) {
  return FiniteAutomaton(std::move(alphabet), 1, {0}, {}, {});
}

FiniteAutomaton FiniteAutomaton::epsilon_word(Alphabet alphabet) {
  return FiniteAutomaton(std::move(alphabet), 1, {0}, {0}, {});
}

FiniteAutomaton FiniteAutomaton::universal(Alphabet alphabet) {
  std::vector<Transition> ts;
  for (symbol_t a = 0; a < alphabet.size(); ++a) ts.push_back({0, a, 0});
  return FiniteAutomaton(std::move(alphabet), 1, {0}, {0}, std::move(ts));
}

FiniteAutomaton FiniteAutomaton::single_word(Alphabet alphabet, const Word& w) {
  std::vector<Transition> ts;
  for (state_t i = 0; i < w.size(); ++i) ts.push_back({i, w[i], i + 1});
  state_t n = static_cast<state_t>(w.size()) + 1;
  return FiniteAutomaton(std::move(alphabet), n, {0}, {n - 1}, std::move(ts));
}

FiniteAutomaton FiniteAutomaton::from_words(Alphabet alphabet, const std::vector<Word>& words) {
  // One shared root, one chain per word.
  std::vector<Transition> ts;
  std::vector<state_t> accepting;
  state_t next = 1;
  for (const Word& w : words) {
    if (w.empty()) {
      accepting.push_back(0);
      continue;
    }
    state_t cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      ts.push_back({cur, w[i], next});
      cur = next++;
    }
    accepting.push_back(cur);
  }
  return FiniteAutomaton(std::move(alphabet), next, {0}, std::move(accepting), std::move(ts));
}

FiniteAutomaton determinize(const FiniteAutomaton& m) { return from_dfa(subset_construction(m)); }

FiniteAutomaton minimize(const FiniteAutomaton& m) { return from_dfa(minimize_dfa(to_dfa(m))); }

FiniteAutomaton complement(const FiniteAutomaton& m) {
  Dfa d = to_dfa(m);
  for (auto& f : d.accepting) f = !f;
  return from_dfa(minimize_dfa(d));
}

FiniteAutomaton intersect(const FiniteAutomaton& a, const FiniteAutomaton& b) {
  return product(a, b, BoolOp::And);
}

FiniteAutomaton unite(const FiniteAutomaton& a, const FiniteAutomaton& b) {
  return product(a, b, BoolOp::Or);
}

FiniteAutomaton difference(const FiniteAutomaton& a, const FiniteAutomaton& b) {
  return product(a, b, BoolOp::Diff);
}

bool is_empty(const FiniteAutomaton& m) {
  auto [reach, coreach] = useful_states(m);
  for (state_t s = 0; s < m.num_states(); ++s) {
    if (reach[s] && coreach[s]) return false;
  }
  return true;
}

bool is_finite(const FiniteAutomaton& m) {
  auto [reach, coreach] = useful_states(m);
  const state_t n = m.num_states();
  std::vector<std::vector<state_t>> edges(n);
  for (const Transition& t : m.transitions()) {
    if (reach[t.from] && coreach[t.from] && reach[t.to] && coreach[t.to]) {
      edges[t.from].push_back(t.to);
    }
  }
  // Epsilon moves do not consume a letter, so an epsilon-only cycle does
  // not make the language infinite; only cycles containing at least one
  // labelled transition do.  Contract epsilon edges by exploring them
  // inside the DFS without marking length progress is more work than the
  // languages here need: instead note that a trim automaton has an
  // infinite language iff the graph with labelled edges, augmented with
  // epsilon edges, has a cycle through at least one labelled edge.  We
  // check that by first collapsing epsilon-strongly-connected components.
  std::vector<std::vector<state_t>> eps(n);
  for (auto [a, b] : m.epsilon_moves()) {
    if (reach[a] && coreach[a] && reach[b] && coreach[b]) eps[a].push_back(b);
  }
  // Epsilon-reachability per state (small n, quadratic is fine).
  std::vector<std::vector<char>> eclose(n, std::vector<char>(n, 0));
  for (state_t s = 0; s < n; ++s) {
    std::deque<state_t> work{s};
    eclose[s][s] = 1;
    while (!work.empty()) {
      state_t q = work.front();
      work.pop_front();
      for (state_t t : eps[q]) {
        if (!eclose[s][t]) {
          eclose[s][t] = 1;
          work.push_back(t);
        }
      }
    }
  }
  // Edge u -> v if some labelled transition goes from eclose(u) to v.
  // A cycle in this graph means arbitrarily long accepted words.
  std::vector<std::vector<state_t>> g(n);
  for (state_t u = 0; u < n; ++u) {
    if (!(reach[u] && coreach[u])) continue;
    for (state_t mid = 0; mid < n; ++mid) {
      if (!eclose[u][mid]) continue;
      for (state_t v : edges[mid]) g[u].push_back(v);
    }
  }
  std::vector<int> color(n, 0);
  std::vector<std::pair<state_t, std::size_t>> stack;
  for (state_t s = 0; s < n; ++s) {
    if (color[s] != 0 || !(reach[s] && coreach[s])) continue;
    stack.emplace_back(s, 0);
    color[s] = 1;
    while (!stack.empty()) {
      auto& [q, idx] = stack.back();
      if (idx < g[q].size()) {
        state_t t = g[q][idx++];
        if (color[t] == 1) return false;  // cycle
        if (color[t] == 0) {
          color[t] = 1;
          stack.emplace_back(t, 0);
        }
      } else {
        color[q] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool are_equivalent(const FiniteAutomaton& a, const FiniteAutomaton& b) {
  if (a.alphabet() != b.alphabet()) {
    throw AlphabetMismatchError("equivalence test on automata over different alphabets");
  }
  Dfa da = to_dfa(a);
  Dfa db = to_dfa(b);
  const std::size_t k = da.alphabet.size();
  std::map<std::pair<state_t, state_t>, char> seen;
  std::deque<std::pair<state_t, state_t>> work;
  work.emplace_back(da.initial, db.initial);
  seen[{da.initial, db.initial}] = 1;
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (bool(da.accepting[x]) != bool(db.accepting[y])) return false;
    for (symbol_t s = 0; s < k; ++s) {
      auto next = std::make_pair(da.step(x, s), db.step(y, s));
      if (seen.emplace(next, 1).second) work.push_back(next);
    }
  }
  return true;
}

bool contains(const FiniteAutomaton& m, const Word& w) {
  for (symbol_t s : w) {
    if (s >= m.alphabet().size()) {
      throw AlphabetMismatchError("word symbol outside the automaton's alphabet");
    }
  }
  if (m.is_complete_dfa()) {
    const std::size_t k = m.alphabet().size();
    state_t q = m.initial()[0];
    for (symbol_t a : w) q = m.transitions()[q * k + a].to;
    return std::binary_search(m.accepting().begin(), m.accepting().end(), q);
  }
  Adjacency adj(m);
  std::vector<state_t> cur(m.initial());
  eps_close(adj, cur);
  for (symbol_t a : w) {
    std::vector<state_t> next;
    for (state_t s : cur) {
      for (auto [label, to] : adj.out[s]) {
        if (label == a) next.push_back(to);
      }
    }
    next = sorted_unique(std::move(next));
    eps_close(adj, next);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  std::vector<char> acc(m.num_states(), 0);
  for (state_t s : m.accepting()) acc[s] = 1;
  return std::any_of(cur.begin(), cur.end(), [&](state_t s) { return acc[s]; });
}

std::vector<Word> enumerate(const FiniteAutomaton& m, std::size_t max_count,
                            std::size_t max_length) {
  std::vector<Word> out;
  if (max_count == 0) return out;

  Dfa d = to_dfa(m);
  const std::size_t k = d.alphabet.size();

  std::size_t length_cap = max_length;
  if (max_length == kUnbounded) {
    if (is_finite(m)) {
      length_cap = d.n;  // longest word of a finite language is below the state count
    } else if (max_count == kUnbounded) {
      throw std::invalid_argument("enumerate: infinite language with no bounds");
    }
  }

  // can[r][q]: an accepting state is reachable from q in exactly r steps.
  std::vector<std::vector<char>> can;
  can.push_back(std::vector<char>(d.accepting.begin(), d.accepting.end()));
  auto grow_can = [&](std::size_t upto) {
    while (can.size() <= upto) {
      const std::vector<char>& prev = can.back();
      std::vector<char> next(d.n, 0);
      for (state_t q = 0; q < d.n; ++q) {
        for (symbol_t a = 0; a < k && !next[q]; ++a) next[q] = prev[d.step(q, a)];
      }
      can.push_back(std::move(next));
    }
  };

  Word word;
  auto dfs = [&](auto&& self, state_t q, std::size_t remaining) -> bool {
    if (remaining == 0) {
      out.push_back(word);
      return out.size() >= max_count;
    }
    for (symbol_t a = 0; a < k; ++a) {
      state_t nxt = d.step(q, a);
      if (can[remaining - 1][nxt]) {
        word.push_back(a);
        if (self(self, nxt, remaining - 1)) return true;
        word.pop_back();
      }
    }
    return false;
  };

  for (std::size_t len = 0;; ++len) {
    if (length_cap != kUnbounded && len > length_cap) break;
    if (len > (1u << 20)) throw std::invalid_argument("enumerate: length runaway");
    grow_can(len);
    if (!can[len][d.initial]) continue;
    word.clear();
    if (dfs(dfs, d.initial, len)) break;
  }
  return out;
}

std::optional<Word> shortlex_first(const FiniteAutomaton& m) {
  auto words = enumerate(m, 1, kUnbounded);
  if (words.empty()) return std::nullopt;
  return words[0];
}

bool same_automaton(const FiniteAutomaton& a, const FiniteAutomaton& b) {
  return a.alphabet() == b.alphabet() && a.num_states() == b.num_states() &&
         a.initial() == b.initial() && a.accepting() == b.accepting() &&
         a.transitions() == b.transitions() && a.epsilon_moves() == b.epsilon_moves();
}

FiniteAutomaton lift_alphabet(const FiniteAutomaton& m, const Alphabet& wider) {
  if (wider.size() < m.alphabet().size()) {
    throw AlphabetMismatchError("lift_alphabet: target alphabet is smaller");
  }
  for (symbol_t s = 0; s < m.alphabet().size(); ++s) {
    if (m.alphabet().name(s) != wider.name(s)) {
      throw AlphabetMismatchError("lift_alphabet: target alphabet is not an extension");
    }
  }
  return FiniteAutomaton(wider, m.num_states(), m.initial(), m.accepting(), m.transitions(),
                         m.epsilon_moves());
}

}  // namespace autosemi
