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

#include "autosemi/sync.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "autosemi/errors.hpp"

namespace autosemi {

namespace {

Alphabet make_pair_names(const Alphabet& base) {
  const std::size_t k = base.size();
  std::vector<std::string> names;
  names.reserve((k + 1) * (k + 1) - 1);
  auto track_name = [&](symbol_t c) { return c == k ? std::string("$") : base.name(c); };
  for (symbol_t x = 0; x <= k; ++x) {
    for (symbol_t y = 0; y <= k; ++y) {
      if (x == k && y == k) continue;
      names.push_back("(" + track_name(x) + "," + track_name(y) + ")");
    }
  }
  return Alphabet(std::move(names));
}

// Complete-DFA view; determinizes on demand.
struct DfaView {
  FiniteAutomaton dfa;
  std::vector<char> acc;
  std::size_t k;

  explicit DfaView(const FiniteAutomaton& m)
      : dfa(m.is_complete_dfa() ? m : determinize(m)),
        acc(dfa.num_states(), 0),
        k(dfa.alphabet().size()) {
    for (state_t s : dfa.accepting()) acc[s] = 1;
  }
  state_t initial() const { return dfa.initial()[0]; }
  state_t step(state_t q, symbol_t a) const { return dfa.transitions()[q * k + a].to; }
  bool accepting(state_t q) const { return acc[q]; }
  state_t n() const { return dfa.num_states(); }
};

}  // namespace

PaddedPairAlphabet::PaddedPairAlphabet(Alphabet base)
    : base_(std::move(base)), pairs_(make_pair_names(base_)) {}

symbol_t PaddedPairAlphabet::pair(symbol_t left, symbol_t right) const {
  const symbol_t k = pad();
  if (left > k || right > k || (left == k && right == k)) {
    throw InvalidPaddingError("invalid pair components");
  }
  return left * (k + 1) + right;
}

std::pair<symbol_t, symbol_t> PaddedPairAlphabet::components(symbol_t pair_symbol) const {
  const symbol_t k = pad();
  if (pair_symbol >= pairs_.size()) throw InvalidPaddingError("pair symbol out of range");
  return {pair_symbol / (k + 1), pair_symbol % (k + 1)};
}

Word convolve(const PaddedPairAlphabet& pa, const Word& u, const Word& v) {
  const symbol_t pad = pa.pad();
  Word out;
  const std::size_t n = std::max(u.size(), v.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    symbol_t x = i < u.size() ? u[i] : pad;
    symbol_t y = i < v.size() ? v[i] : pad;
    out.push_back(pa.pair(x, y));
  }
  return out;
}

std::pair<Word, Word> deconvolve(const PaddedPairAlphabet& pa, const Word& w) {
  const symbol_t pad = pa.pad();
  Word u, v;
  bool u_done = false, v_done = false;
  for (symbol_t p : w) {
    auto [x, y] = pa.components(p);
    if (x == pad) {
      u_done = true;
    } else {
      if (u_done) throw InvalidPaddingError("track 1 resumes after padding");
      u.push_back(x);
    }
    if (y == pad) {
      v_done = true;
    } else {
      if (v_done) throw InvalidPaddingError("track 2 resumes after padding");
      v.push_back(y);
    }
  }
  return {std::move(u), std::move(v)};
}

FiniteAutomaton valid_padding_language(const PaddedPairAlphabet& pa) {
  // States: 0 both tracks live, 1 left padded, 2 right padded, 3 dead.
  const symbol_t pad = pa.pad();
  std::vector<Transition> ts;
  for (symbol_t p = 0; p < pa.pairs().size(); ++p) {
    auto [x, y] = pa.components(p);
    state_t from0 = x == pad ? 1 : (y == pad ? 2 : 0);
    ts.push_back({0, p, from0});
    ts.push_back({1, p, x == pad ? state_t{1} : state_t{3}});
    ts.push_back({2, p, y == pad ? state_t{2} : state_t{3}});
    ts.push_back({3, p, 3});
  }
  return FiniteAutomaton(pa.pairs(), 4, {0}, {0, 1, 2}, std::move(ts));
}

SynchronousAutomaton::SynchronousAutomaton(Alphabet base, FiniteAutomaton pair_machine)
    : pa_(std::move(base)), machine_(FiniteAutomaton::none(pa_.pairs())) {
  if (pair_machine.alphabet() != pa_.pairs()) {
    throw AlphabetMismatchError("pair machine alphabet does not match the pair alphabet");
  }
  machine_ = intersect(pair_machine, valid_padding_language(pa_));
}

SynchronousAutomaton SynchronousAutomaton::none(const Alphabet& base) {
  PaddedPairAlphabet pa(base);
  return SynchronousAutomaton(base, FiniteAutomaton::none(pa.pairs()));
}

SynchronousAutomaton SynchronousAutomaton::with_base(const Alphabet& wider) const {
  const Alphabet& old = base();
  if (wider.size() < old.size()) throw AlphabetMismatchError("with_base: smaller alphabet");
  for (symbol_t s = 0; s < old.size(); ++s) {
    if (old.name(s) != wider.name(s)) {
      throw AlphabetMismatchError("with_base: target does not extend the base alphabet");
    }
  }
  PaddedPairAlphabet wide_pa(wider);
  const symbol_t old_pad = pa_.pad();
  const symbol_t new_pad = wide_pa.pad();
  std::vector<Transition> ts;
  ts.reserve(machine_.transitions().size());
  for (const Transition& t : machine_.transitions()) {
    auto [x, y] = pa_.components(t.label);
    symbol_t nx = x == old_pad ? new_pad : x;
    symbol_t ny = y == old_pad ? new_pad : y;
    ts.push_back({t.from, wide_pa.pair(nx, ny), t.to});
  }
  FiniteAutomaton m(wide_pa.pairs(), machine_.num_states(), machine_.initial(),
                    machine_.accepting(), std::move(ts), machine_.epsilon_moves());
  return SynchronousAutomaton(wider, std::move(m));
}

SynchronousAutomaton relation_from_pairs(const Alphabet& base,
                                         const std::vector<std::pair<Word, Word>>& pairs) {
  PaddedPairAlphabet pa(base);
  std::vector<Word> words;
  words.reserve(pairs.size());
  for (const auto& [u, v] : pairs) words.push_back(convolve(pa, u, v));
  return SynchronousAutomaton(base, FiniteAutomaton::from_words(pa.pairs(), words));
}

SynchronousAutomaton compose(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  if (r.base() != s.base()) throw AlphabetMismatchError("compose: different base alphabets");
  const PaddedPairAlphabet& pa = r.pair_alphabet();
  const symbol_t pad = pa.pad();
  const symbol_t k = pad;  // number of base letters

  DfaView dr(r.machine());
  DfaView ds(s.machine());

  // Pairs (qr, qs) from which some common witness suffix y1..ym leads both
  // machines to acceptance, feeding ($, yi) to r and (yi, $) to s.  These
  // witness the middle word outliving both outer words.
  std::vector<char> joint(static_cast<std::size_t>(dr.n()) * ds.n(), 0);
  for (state_t a = 0; a < dr.n(); ++a) {
    for (state_t b = 0; b < ds.n(); ++b) {
      joint[a * ds.n() + b] = dr.accepting(a) && ds.accepting(b);
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (state_t a = 0; a < dr.n(); ++a) {
      for (state_t b = 0; b < ds.n(); ++b) {
        if (joint[a * ds.n() + b]) continue;
        for (symbol_t y = 0; y < k; ++y) {
          state_t a2 = dr.step(a, pa.pair(pad, y));
          state_t b2 = ds.step(b, pa.pair(y, pad));
          if (joint[a2 * ds.n() + b2]) {
            joint[a * ds.n() + b] = 1;
            grew = true;
            break;
          }
        }
      }
    }
  }

  // Product exploration.  Flags mark that a machine's own pair word has
  // ended while the output word continues.
  auto encode = [&](state_t a, state_t b, bool fa, bool fb) -> std::uint64_t {
    return ((static_cast<std::uint64_t>(a) * ds.n() + b) << 2) | (std::uint64_t(fa) << 1) |
           std::uint64_t(fb);
  };
  std::map<std::uint64_t, state_t> ids;
  std::vector<std::tuple<state_t, state_t, bool, bool>> states;
  auto intern = [&](state_t a, state_t b, bool fa, bool fb) {
    auto [it, fresh] = ids.emplace(encode(a, b, fa, fb), static_cast<state_t>(states.size()));
    if (fresh) states.emplace_back(a, b, fa, fb);
    return it->second;
  };

  std::vector<Transition> ts;
  std::vector<state_t> accepting;
  intern(dr.initial(), ds.initial(), false, false);
  for (state_t q = 0; q < states.size(); ++q) {
    auto [a, b, fa, fb] = states[q];
    bool acc = (fa && fb) || (fa && !fb && ds.accepting(b)) || (!fa && fb && dr.accepting(a)) ||
               (!fa && !fb && joint[a * ds.n() + b]);
    if (acc) accepting.push_back(q);
    for (symbol_t x = 0; x <= k; ++x) {
      for (symbol_t z = 0; z <= k; ++z) {
        if (x == pad && z == pad) continue;
        for (symbol_t y = 0; y <= k; ++y) {
          // r reads (x, y), s reads (y, z); (pad, pad) means "already ended".
          state_t a2 = a;
          state_t b2 = b;
          bool fa2 = fa, fb2 = fb;
          if (x == pad && y == pad) {
            if (!fa && !dr.accepting(a)) continue;
            fa2 = true;
          } else {
            if (fa) continue;
            a2 = dr.step(a, pa.pair(x, y));
          }
          if (y == pad && z == pad) {
            if (!fb && !ds.accepting(b)) continue;
            fb2 = true;
          } else {
            if (fb) continue;
            b2 = ds.step(b, pa.pair(y, z));
          }
          ts.push_back({q, pa.pair(x, z), intern(a2, b2, fa2, fb2)});
        }
      }
    }
  }
  FiniteAutomaton m(pa.pairs(), static_cast<state_t>(states.size()), {0}, std::move(accepting),
                    std::move(ts));
  return SynchronousAutomaton(r.base(), std::move(m));
}

SynchronousAutomaton invert(const SynchronousAutomaton& r) {
  const PaddedPairAlphabet& pa = r.pair_alphabet();
  std::vector<Transition> ts;
  ts.reserve(r.machine().transitions().size());
  for (const Transition& t : r.machine().transitions()) {
    auto [x, y] = pa.components(t.label);
    ts.push_back({t.from, pa.pair(y, x), t.to});
  }
  FiniteAutomaton m(pa.pairs(), r.machine().num_states(), r.machine().initial(),
                    r.machine().accepting(), std::move(ts), r.machine().epsilon_moves());
  return SynchronousAutomaton(r.base(), std::move(m));
}

namespace {

void check_same_base(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  if (r.base() != s.base()) throw AlphabetMismatchError("relations over different base alphabets");
}

}  // namespace

SynchronousAutomaton unite(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  check_same_base(r, s);
  return SynchronousAutomaton(r.base(), unite(r.machine(), s.machine()));
}

SynchronousAutomaton intersect(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  check_same_base(r, s);
  return SynchronousAutomaton(r.base(), intersect(r.machine(), s.machine()));
}

SynchronousAutomaton difference(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  check_same_base(r, s);
  return SynchronousAutomaton(r.base(), difference(r.machine(), s.machine()));
}

SynchronousAutomaton complement(const SynchronousAutomaton& r) {
  FiniteAutomaton universe = valid_padding_language(r.pair_alphabet());
  return SynchronousAutomaton(r.base(), difference(universe, r.machine()));
}

namespace {

FiniteAutomaton project_machine(const FiniteAutomaton& m, const PaddedPairAlphabet& pa,
                                int coordinate) {
  const symbol_t pad = pa.pad();
  std::vector<Transition> ts;
  std::vector<std::pair<state_t, state_t>> eps(m.epsilon_moves());
  for (const Transition& t : m.transitions()) {
    auto [x, y] = pa.components(t.label);
    symbol_t c = coordinate == 1 ? x : y;
    if (c == pad) {
      eps.emplace_back(t.from, t.to);
    } else {
      ts.push_back({t.from, c, t.to});
    }
  }
  FiniteAutomaton nfa(pa.base(), m.num_states(), m.initial(), m.accepting(), std::move(ts),
                      std::move(eps));
  return minimize(nfa);
}

// Lifts a language automaton to one track of the pair alphabet: the chosen
// track must spell a word of the language (then pad), the other track is
// unconstrained.
FiniteAutomaton track_lift(const FiniteAutomaton& language, const PaddedPairAlphabet& pa,
                           int coordinate) {
  DfaView d(language);
  const symbol_t pad = pa.pad();
  const symbol_t k = pad;
  const state_t end = d.n();
  std::vector<Transition> ts;
  std::vector<state_t> accepting;
  for (state_t q = 0; q < d.n(); ++q) {
    if (d.accepting(q)) accepting.push_back(q);
    for (symbol_t a = 0; a < k; ++a) {
      state_t to = d.step(q, a);
      for (symbol_t other = 0; other <= k; ++other) {
        ts.push_back({q, coordinate == 1 ? pa.pair(a, other) : pa.pair(other, a), to});
      }
    }
    if (d.accepting(q)) {
      for (symbol_t other = 0; other < k; ++other) {
        ts.push_back({q, coordinate == 1 ? pa.pair(pad, other) : pa.pair(other, pad), end});
      }
    }
  }
  for (symbol_t other = 0; other < k; ++other) {
    ts.push_back({end, coordinate == 1 ? pa.pair(pad, other) : pa.pair(other, pad), end});
  }
  accepting.push_back(end);
  return FiniteAutomaton(pa.pairs(), end + 1, {d.initial()}, std::move(accepting), std::move(ts));
}

}  // namespace

FiniteAutomaton project(const SynchronousAutomaton& r, int coordinate) {
  return project_machine(r.machine(), r.pair_alphabet(), coordinate);
}

FiniteAutomaton image(const SynchronousAutomaton& r, const FiniteAutomaton& domain) {
  if (domain.alphabet() != r.base()) throw AlphabetMismatchError("image: domain alphabet differs");
  FiniteAutomaton restricted = intersect(r.machine(), track_lift(domain, r.pair_alphabet(), 1));
  return project_machine(restricted, r.pair_alphabet(), 2);
}

FiniteAutomaton image(const SynchronousAutomaton& r, const Word& x) {
  return image(r, FiniteAutomaton::single_word(r.base(), x));
}

FiniteAutomaton preimage(const SynchronousAutomaton& r, const Word& y) {
  FiniteAutomaton restricted = intersect(
      r.machine(), track_lift(FiniteAutomaton::single_word(r.base(), y), r.pair_alphabet(), 2));
  return project_machine(restricted, r.pair_alphabet(), 1);
}

SynchronousAutomaton diagonal(const FiniteAutomaton& language) {
  PaddedPairAlphabet pa(language.alphabet());
  std::vector<Transition> ts;
  ts.reserve(language.transitions().size());
  for (const Transition& t : language.transitions()) {
    ts.push_back({t.from, pa.pair(t.label, t.label), t.to});
  }
  FiniteAutomaton m(pa.pairs(), language.num_states(), language.initial(), language.accepting(),
                    std::move(ts), language.epsilon_moves());
  return SynchronousAutomaton(language.alphabet(), std::move(m));
}

SynchronousAutomaton product_relation(const FiniteAutomaton& left, const FiniteAutomaton& right) {
  if (left.alphabet() != right.alphabet()) {
    throw AlphabetMismatchError("product_relation: different alphabets");
  }
  PaddedPairAlphabet pa(left.alphabet());
  FiniteAutomaton m = intersect(track_lift(left, pa, 1), track_lift(right, pa, 2));
  return SynchronousAutomaton(left.alphabet(), std::move(m));
}

SynchronousAutomaton full_relation(const Alphabet& base) {
  PaddedPairAlphabet pa(base);
  return SynchronousAutomaton(base, valid_padding_language(pa));
}

bool relations_equal(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  check_same_base(r, s);
  return are_equivalent(r.machine(), s.machine());
}

bool is_subrelation(const SynchronousAutomaton& r, const SynchronousAutomaton& s) {
  check_same_base(r, s);
  return is_empty(difference(r.machine(), s.machine()));
}

bool is_diagonal_on(const SynchronousAutomaton& r, const FiniteAutomaton& language) {
  return relations_equal(r, diagonal(language));
}

bool contains(const SynchronousAutomaton& r, const Word& u, const Word& v) {
  return contains(r.machine(), convolve(r.pair_alphabet(), u, v));
}

SynchronousAutomaton shortlex_less(const Alphabet& base) {
  PaddedPairAlphabet pa(base);
  const symbol_t pad = pa.pad();
  // States: 0 tracks equal so far, 1 first difference was smaller,
  // 2 first difference was larger, 3 left track ended first, 4 dead.
  std::vector<Transition> ts;
  for (symbol_t p = 0; p < pa.pairs().size(); ++p) {
    auto [x, y] = pa.components(p);
    state_t from0, from1, from2, from3;
    if (x != pad && y != pad) {
      from0 = x < y ? 1 : (x == y ? state_t{0} : state_t{2});
      from1 = 1;
      from2 = 2;
      from3 = 4;
    } else if (x == pad) {
      from0 = from1 = from2 = from3 = 3;
    } else {  // y == pad: left track is longer, never shortlex-smaller
      from0 = from1 = from2 = from3 = 4;
    }
    ts.push_back({0, p, from0});
    ts.push_back({1, p, from1});
    ts.push_back({2, p, from2});
    ts.push_back({3, p, from3});
    ts.push_back({4, p, 4});
  }
  FiniteAutomaton m(pa.pairs(), 5, {0}, {1, 3}, std::move(ts));
  return SynchronousAutomaton(base, std::move(m));
}

std::vector<std::pair<Word, Word>> enumerate_pairs(const SynchronousAutomaton& r,
                                                   std::size_t max_count, std::size_t max_length) {
  std::vector<std::pair<Word, Word>> out;
  for (const Word& w : enumerate(r.machine(), max_count, max_length)) {
    out.push_back(deconvolve(r.pair_alphabet(), w));
  }
  return out;
}

SynchronousAutomaton context_rewrite_relation(const Alphabet& base, const Word& w1, const Word& w2,
                                              const TailSpec& tail) {
  PaddedPairAlphabet pa(base);
  const symbol_t pad = pa.pad();
  const symbol_t k = pad;
  const std::size_t p = w1.size();
  const std::size_t q = w2.size();

  std::vector<char> in_body(k, 0), in_final(k, 0);
  for (symbol_t s : tail.body) in_body[s] = 1;
  for (symbol_t s : tail.final_letters) in_final[s] = 1;

  // Walk state: progress through the fixed windows on both tracks, a FIFO
  // of common-suffix letters consumed by the leading track but not yet by
  // the trailing one, and a tiny acceptor for the suffix shape.
  struct WState {
    std::uint32_t f1 = 0, f2 = 0;
    bool done1 = false, done2 = false;
    int zdiff = 0;  // suffix letters consumed by track2 minus track1
    int zstate = 0; // 0 none yet, 1 last was body, 2 final letter seen
    std::vector<symbol_t> buf;

    std::vector<std::uint32_t> key() const {
      std::vector<std::uint32_t> v{f1, f2, std::uint32_t(done1), std::uint32_t(done2),
                                   std::uint32_t(zdiff + 16), std::uint32_t(zstate)};
      v.insert(v.end(), buf.begin(), buf.end());
      return v;
    }
  };

  std::map<std::vector<std::uint32_t>, state_t> ids;
  std::vector<WState> states;
  auto intern = [&](const WState& w) {
    auto [it, fresh] = ids.emplace(w.key(), static_cast<state_t>(states.size() + 1));
    if (fresh) states.push_back(w);
    return it->second;  // state 0 is the diagonal loop, walk states start at 1
  };

  // One track consumes component c; returns false when impossible.
  auto step_track = [&](WState& w, int track, symbol_t c) -> bool {
    const Word& fixed = track == 1 ? w1 : w2;
    std::uint32_t& f = track == 1 ? w.f1 : w.f2;
    bool& done = track == 1 ? w.done1 : w.done2;
    // zdiff is track2 minus track1; "behind" means the other track has
    // consumed more suffix letters than this one.
    int behind = track == 1 ? (w.zdiff > 0) : (w.zdiff < 0);
    if (done) return c == pad;
    if (f < fixed.size()) {
      if (c != fixed[f]) return false;
      ++f;
      return true;
    }
    if (c == pad) {
      if (behind) return false;  // pending buffered letters remain
      done = true;
      return true;
    }
    // Consuming a suffix letter.
    if (tail.kind == TailSpec::Kind::None) return false;
    if (behind) {
      if (w.buf.empty() || w.buf.front() != c) return false;
      w.buf.erase(w.buf.begin());
      w.zdiff += track == 1 ? -1 : 1;
      return true;
    }
    // Leading (or tied): this is a fresh suffix letter.
    bool other_done = track == 1 ? w.done2 : w.done1;
    if (other_done) return false;  // suffix length is already fixed
    if (w.zstate == 2) return false;
    if (c < k && in_body[c]) {
      w.zstate = 1;
    } else if (c < k && in_final[c]) {
      w.zstate = 2;
    } else {
      return false;
    }
    w.buf.push_back(c);
    w.zdiff += track == 1 ? -1 : 1;
    return true;
  };

  auto accepting_state = [&](const WState& w) {
    if (w.f1 != p || w.f2 != q || w.zdiff != 0) return false;
    if (tail.kind == TailSpec::Kind::Suffix && tail.min_length > 0 && w.zstate == 0) return false;
    return true;
  };

  WState start;
  intern(start);

  std::vector<Transition> ts;
  std::vector<std::pair<state_t, state_t>> eps;
  std::vector<state_t> accepting;

  // State 0: diagonal prefix loop, with a silent hand-off into the walk.
  for (symbol_t g = 0; g < k; ++g) ts.push_back({0, pa.pair(g, g), 0});
  eps.emplace_back(0, 1);

  for (std::size_t i = 0; i < states.size(); ++i) {
    const WState cur = states[i];
    state_t q_id = static_cast<state_t>(i + 1);
    if (accepting_state(cur)) accepting.push_back(q_id);
    for (symbol_t c1 = 0; c1 <= k; ++c1) {
      for (symbol_t c2 = 0; c2 <= k; ++c2) {
        if (c1 == pad && c2 == pad) continue;
        WState next = cur;
        if (!step_track(next, 1, c1)) continue;
        if (!step_track(next, 2, c2)) continue;
        ts.push_back({q_id, pa.pair(c1, c2), intern(next)});
      }
    }
  }

  FiniteAutomaton m(pa.pairs(), static_cast<state_t>(states.size() + 1), {0},
                    std::move(accepting), std::move(ts), std::move(eps));
  return SynchronousAutomaton(base, std::move(m));
}

}  // namespace autosemi
