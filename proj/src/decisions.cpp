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

#include "autosemi/decisions.hpp"

#include <algorithm>
#include <set>

#include "autosemi/errors.hpp"

namespace autosemi {

namespace {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

// L restricted to words whose first letter is in `firsts` and whose last
// letter is in `lasts`.
FiniteAutomaton bordered_language(const Alphabet& a, const FiniteAutomaton& lang,
                                  const std::vector<symbol_t>& firsts,
                                  const std::vector<symbol_t>& lasts) {
  std::vector<Transition> ft;
  for (symbol_t f : firsts) ft.push_back({0, f, 1});
  for (symbol_t g = 0; g < a.size(); ++g) ft.push_back({1, g, 1});
  FiniteAutomaton first_lang(a, 2, {0}, {1}, std::move(ft));

  std::vector<Transition> lt;
  for (symbol_t g = 0; g < a.size(); ++g) lt.push_back({0, g, 0});
  for (symbol_t l : lasts) lt.push_back({0, l, 1});
  FiniteAutomaton last_lang(a, 2, {0}, {1}, std::move(lt));

  return intersect(intersect(lang, first_lang), last_lang);
}

}  // namespace

Word find_representative(const InterpretedAutomaticStructure& s, const Word& u) {
  if (u.empty()) {
    if (!s.flags().monoid_with_epsilon) {
      throw EmptyWordError("the empty word names no element of a plain semigroup");
    }
    if (!contains(s.rep_lang(), u)) {
      throw InconsistentStructureError("monoid-with-epsilon structure lacks the empty word in L");
    }
    return u;
  }
  for (symbol_t g : u) {
    if (g >= s.generators().size()) {
      throw AlphabetMismatchError("word uses a symbol outside the generators");
    }
  }
  Word rep = s.assignment().of(u[0]);
  for (std::size_t i = 1; i < u.size(); ++i) {
    FiniteAutomaton next = intersect(image(s.multiplier_of(u[i]), rep), s.rep_lang());
    auto w = shortlex_first(next);
    if (!w) {
      throw InconsistentStructureError("right multiplication by " + s.generators().name(u[i]) +
                                       " has no image in L; the multiplier is not total");
    }
    rep = std::move(*w);
  }
  return rep;
}

bool word_problem(const InterpretedAutomaticStructure& s, const Word& u, const Word& v) {
  Word ru = find_representative(s, u);
  Word rv = find_representative(s, v);
  return contains(s.equality(), ru, rv);
}

bool is_right_cancellable(const InterpretedAutomaticStructure& s, const Word& w) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  SynchronousAutomaton m = multiplier(cs, w);
  return is_diagonal_on(compose(m, invert(m)), cs.rep_lang());
}

bool is_right_cancellative(const InterpretedAutomaticStructure& s) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  for (symbol_t g = 0; g < cs.generators().size(); ++g) {
    const SynchronousAutomaton& m = cs.multiplier_of(g);
    if (!is_diagonal_on(compose(m, invert(m)), cs.rep_lang())) return false;
  }
  return true;
}

FiniteAutomaton left_zeros(const PreAutomaticStructure& s) {
  SynchronousAutomaton acc = diagonal(s.rep_lang());
  for (symbol_t g = 0; g < s.generators().size(); ++g) {
    acc = intersect(acc, s.multiplier_of(g));
  }
  return project(acc, 1);
}

std::optional<Word> zero(const InterpretedAutomaticStructure& s) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  FiniteAutomaton lz = left_zeros(cs.structure());
  std::vector<Word> words = enumerate(lz, 2, kUnbounded);
  if (words.size() != 1) return std::nullopt;  // none, or several left zeros
  const Word& z = words[0];
  FiniteAutomaton just_z = FiniteAutomaton::single_word(cs.generators(), z);
  if (!relations_equal(multiplier(cs, z), product_relation(cs.rep_lang(), just_z))) {
    return std::nullopt;  // left zero but not a right zero
  }
  return z;
}

std::optional<Word> identity(const InterpretedAutomaticStructure& s) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  FiniteAutomaton k = cs.rep_lang();
  for (symbol_t g = 0; g < cs.generators().size(); ++g) {
    k = intersect(k, preimage(cs.multiplier_of(g), cs.assignment().of(g)));
    if (is_empty(k)) return std::nullopt;
  }
  std::vector<Word> words = enumerate(k, 2, kUnbounded);
  if (words.size() != 1) return std::nullopt;  // several distinct left identities
  const Word& e = words[0];
  if (!relations_equal(multiplier(cs, e), cs.equality())) return std::nullopt;
  return e;
}

FiniteAutomaton left_inverses(const InterpretedAutomaticStructure& s, const Word& w) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  std::optional<Word> e = identity(cs);
  if (!e) throw NotAMonoidError("the semigroup has no identity element");
  return preimage(multiplier(cs, w), *e);
}

bool is_unit(const InterpretedAutomaticStructure& s, const Word& w) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  std::optional<Word> e = identity(cs);
  if (!e) throw NotAMonoidError("the semigroup has no identity element");
  FiniteAutomaton k = preimage(multiplier(cs, w), *e);
  if (is_empty(k)) return false;
  if (!is_finite(k)) return false;
  std::vector<Word> words = enumerate(k, 2, kUnbounded);
  if (words.size() != 1) return false;  // a unit has exactly one left inverse
  return word_problem(cs, concat(w, words[0]), *e);
}

Trichotomy inverse_trichotomy(const InterpretedAutomaticStructure& s, const Word& w,
                              const Word& e) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  if (!word_problem(cs, concat(e, e), e)) {
    throw NotIdempotentError("the reference word does not represent an idempotent");
  }
  Word er = find_representative(cs, e);
  FiniteAutomaton k = preimage(multiplier(cs, w), er);
  if (!is_finite(k)) {
    return {Trichotomy::Tag::InfinitelyManyLeftInverses, {}};
  }
  std::vector<Word> witnesses = enumerate(k, kUnbounded, kUnbounded);
  for (const Word& wi : witnesses) {
    if (word_problem(cs, concat(w, wi), e)) {
      return {Trichotomy::Tag::FinitelyManyWithRightInverse, std::move(witnesses)};
    }
  }
  return {Trichotomy::Tag::FinitelyManyNoRightInverse, std::move(witnesses)};
}

std::optional<std::pair<Word, Word>> find_related_idempotents(
    const InterpretedAutomaticStructure& s, const Word& w, const std::vector<Word>& idempotents) {
  InterpretedAutomaticStructure cs = ensure_cross_section(s);
  for (const Word& e : idempotents) {
    if (!word_problem(cs, concat(w, e), w)) continue;  // e must stabilize w on the right
    FiniteAutomaton q_lang = preimage(multiplier(cs, w), find_representative(cs, e));
    auto q = shortlex_first(q_lang);
    if (!q) continue;  // no q with q·w = e
    Word f = find_representative(cs, concat(w, *q));
    if (std::find(idempotents.begin(), idempotents.end(), f) == idempotents.end()) {
      return std::nullopt;
    }
    if (!word_problem(cs, concat(f, w), w)) return std::nullopt;
    return std::make_pair(f, e);
  }
  return std::nullopt;
}

namespace {

struct CzsAnalysis {
  InterpretedAutomaticStructure cs;
  Word z;
  std::vector<Word> idempotents;                 // E, shortlex sorted
  std::vector<char> generator_is_zero;
  std::vector<std::vector<std::size_t>> sl, sr;  // indices into E, per generator
};

struct CzsOutcome {
  std::optional<CzsAnalysis> analysis;
  std::string reason;
};

CzsOutcome czs_pipeline(const InterpretedAutomaticStructure& input) {
  InterpretedAutomaticStructure cs = ensure_cross_section(input);
  const Alphabet& a = cs.generators();

  auto fail = [](std::string reason) { return CzsOutcome{std::nullopt, std::move(reason)}; };

  std::optional<Word> z = zero(cs);
  if (!z) return fail("no zero element");

  std::vector<char> is_zero(a.size(), 0);
  bool any_nonzero = false;
  for (symbol_t g = 0; g < a.size(); ++g) {
    is_zero[g] = word_problem(cs, cs.assignment().of(g), *z);
    any_nonzero |= !is_zero[g];
  }
  if (!any_nonzero) return fail("every generator represents zero");

  // Left stabilizers per non-zero generator: each set must be a nonempty
  // finite set of idempotents.
  std::vector<std::vector<Word>> sl_words(a.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (is_zero[g]) continue;
    FiniteAutomaton stab = preimage(cs.multiplier_of(g), cs.assignment().of(g));
    if (is_empty(stab)) {
      return fail("generator " + a.name(g) + " has no left stabilizer");
    }
    if (!is_finite(stab)) {
      return fail("generator " + a.name(g) + " has infinitely many left stabilizers");
    }
    sl_words[g] = enumerate(stab, kUnbounded, kUnbounded);
    for (const Word& e : sl_words[g]) {
      if (!word_problem(cs, concat(e, e), e)) {
        return fail("a left stabilizer of " + a.name(g) + " is not idempotent");
      }
    }
  }

  std::set<Word> e_set;
  for (symbol_t g = 0; g < a.size(); ++g) e_set.insert(sl_words[g].begin(), sl_words[g].end());
  std::vector<Word> e_list(e_set.begin(), e_set.end());
  std::sort(e_list.begin(), e_list.end(),
            [](const Word& x, const Word& y) { return shortlex_less_than(x, y); });
  auto e_index = [&](const Word& w) -> std::optional<std::size_t> {
    auto it = std::find(e_list.begin(), e_list.end(), w);
    if (it == e_list.end()) return std::nullopt;
    return static_cast<std::size_t>(it - e_list.begin());
  };

  std::vector<std::vector<std::size_t>> sl(a.size()), sr(a.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    for (const Word& e : sl_words[g]) sl[g].push_back(*e_index(e));
    std::sort(sl[g].begin(), sl[g].end());
  }

  // Right stabilizers, drawn from E.
  std::vector<char> in_some_sr(e_list.size(), 0);
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (is_zero[g]) continue;
    for (std::size_t i = 0; i < e_list.size(); ++i) {
      if (word_problem(cs, concat(cs.assignment().of(g), e_list[i]), cs.assignment().of(g))) {
        sr[g].push_back(i);
        in_some_sr[i] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < e_list.size(); ++i) {
    if (!in_some_sr[i]) {
      return fail("an idempotent stabilizes no generator on the right");
    }
  }

  // Intersection conditions on the stabilizer families.
  for (symbol_t ga = 0; ga < a.size(); ++ga) {
    if (is_zero[ga]) continue;
    for (symbol_t gb = 0; gb < a.size(); ++gb) {
      if (is_zero[gb]) continue;
      std::vector<std::size_t> inter;
      std::set_intersection(sl[ga].begin(), sl[ga].end(), sr[gb].begin(), sr[gb].end(),
                            std::back_inserter(inter));
      if (inter.size() > 1) {
        return fail("left stabilizers of " + a.name(ga) + " meet right stabilizers of " +
                    a.name(gb) + " more than once");
      }
      bool ba_nonzero =
          !word_problem(cs, concat(cs.assignment().of(gb), cs.assignment().of(ga)), *z);
      if ((inter.size() == 1) != ba_nonzero) {
        return fail("stabilizer intersection disagrees with the product " + a.name(gb) +
                    a.name(ga) + " being zero");
      }
      if (sl[ga] != sl[gb]) {
        std::vector<std::size_t> common;
        std::set_intersection(sl[ga].begin(), sl[ga].end(), sl[gb].begin(), sl[gb].end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          return fail("left stabilizer sets of " + a.name(ga) + " and " + a.name(gb) +
                      " overlap without being equal");
        }
      }
      if (sr[ga] != sr[gb]) {
        std::vector<std::size_t> common;
        std::set_intersection(sr[ga].begin(), sr[ga].end(), sr[gb].begin(), sr[gb].end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          return fail("right stabilizer sets of " + a.name(ga) + " and " + a.name(gb) +
                      " overlap without being equal");
        }
      }
    }
  }

  // Products of idempotents inside one stabilizer set must land in the
  // expected H-class, witnessed by a finite inverse set with a right
  // inverse.
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (is_zero[g]) continue;
    for (std::size_t ei : sl[g]) {
      for (std::size_t fi : sl[g]) {
        Trichotomy t = inverse_trichotomy(cs, concat(e_list[ei], e_list[fi]), e_list[fi]);
        if (t.tag != Trichotomy::Tag::FinitelyManyWithRightInverse) {
          return fail("product of left stabilizers of " + a.name(g) +
                      " is not in the expected H-class");
        }
      }
    }
    for (std::size_t ei : sr[g]) {
      for (std::size_t fi : sr[g]) {
        Trichotomy t = inverse_trichotomy(cs, concat(e_list[ei], e_list[fi]), e_list[ei]);
        if (t.tag != Trichotomy::Tag::FinitelyManyWithRightInverse) {
          return fail("product of right stabilizers of " + a.name(g) +
                      " is not in the expected H-class");
        }
      }
    }
  }

  // Every non-zero generator, and every non-zero two-generator product,
  // must be R- and L-related to idempotents of its stabilizer sets.
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (is_zero[g]) continue;
    auto related = find_related_idempotents(cs, cs.assignment().of(g), e_list);
    if (!related) {
      return fail("generator " + a.name(g) + " is not related to idempotents");
    }
    auto fi = e_index(related->first);
    auto ei = e_index(related->second);
    if (!fi || !std::binary_search(sl[g].begin(), sl[g].end(), *fi) ||
        !ei || !std::binary_search(sr[g].begin(), sr[g].end(), *ei)) {
      return fail("related idempotents of " + a.name(g) + " fall outside its stabilizer sets");
    }
  }
  for (symbol_t gb = 0; gb < a.size(); ++gb) {
    if (is_zero[gb]) continue;
    for (symbol_t ga = 0; ga < a.size(); ++ga) {
      if (is_zero[ga]) continue;
      Word prod = concat(cs.assignment().of(gb), cs.assignment().of(ga));
      if (word_problem(cs, prod, *z)) continue;
      if (!find_related_idempotents(cs, find_representative(cs, prod), e_list)) {
        return fail("product " + a.name(gb) + a.name(ga) + " is not related to idempotents");
      }
    }
  }

  // Connectivity: between any two generator classes there is a non-zero
  // representative starting and ending in the right letter classes.
  FiniteAutomaton z_word = FiniteAutomaton::single_word(a, *z);
  for (symbol_t ga = 0; ga < a.size(); ++ga) {
    if (is_zero[ga]) continue;
    for (symbol_t gb = 0; gb < a.size(); ++gb) {
      if (is_zero[gb]) continue;
      std::vector<symbol_t> firsts, lasts;
      for (symbol_t c = 0; c < a.size(); ++c) {
        if (is_zero[c]) continue;
        if (sl[c] == sl[ga]) firsts.push_back(c);
        if (sr[c] == sr[gb]) lasts.push_back(c);
      }
      FiniteAutomaton lang =
          difference(bordered_language(a, cs.rep_lang(), firsts, lasts), z_word);
      if (is_empty(lang)) {
        return fail("no non-zero word connects the classes of " + a.name(ga) + " and " +
                    a.name(gb));
      }
    }
  }

  CzsAnalysis analysis{std::move(cs), std::move(*z), std::move(e_list), std::move(is_zero),
                       std::move(sl), std::move(sr)};
  return CzsOutcome{std::move(analysis), ""};
}

}  // namespace

CzsVerdict is_completely_zero_simple(const InterpretedAutomaticStructure& s) {
  CzsOutcome out = czs_pipeline(s);
  if (out.analysis) return {true, ""};
  return {false, out.reason};
}

bool is_completely_simple(const InterpretedAutomaticStructure& s) {
  return is_completely_zero_simple(adjoin_zero(s)).value;
}

namespace {

constexpr std::size_t kSearchBound = 20000;

// phi image of a representative language: every letter becomes its c-symbol
// and every adjacency inserts the matching d-symbol.
FiniteAutomaton phi_language(const FiniteAutomaton& lang, const ReesRepresentation& coding,
                             const Alphabet& delta) {
  struct Key {
    state_t q;
    symbol_t last;
    bool mid;
    symbol_t next;
    auto operator<=>(const Key&) const = default;
  };
  FiniteAutomaton d = determinize(lang);
  const std::size_t k = lang.alphabet().size();
  std::vector<char> acc(d.num_states(), 0);
  for (state_t s : d.accepting()) acc[s] = 1;
  auto step = [&](state_t q, symbol_t g) { return d.transitions()[q * k + g].to; };

  std::map<Key, state_t> ids;
  std::vector<Key> states;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(key, static_cast<state_t>(states.size() + 1));
    if (fresh) states.push_back(key);
    return it->second;
  };

  std::vector<Transition> ts;
  std::vector<state_t> accepting;
  state_t init = d.initial()[0];
  if (acc[init]) accepting.push_back(0);
  for (symbol_t g = 0; g < k; ++g) {
    if (!coding.c_symbol[g]) continue;
    ts.push_back({0, *coding.c_symbol[g], intern({step(init, g), g, false, 0})});
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    Key cur = states[i];
    state_t id = static_cast<state_t>(i + 1);
    if (!cur.mid) {
      if (acc[cur.q]) accepting.push_back(id);
      for (symbol_t g = 0; g < k; ++g) {
        if (!coding.c_symbol[g] || !coding.gen_col[cur.last] || !coding.gen_row[g]) continue;
        auto it = coding.d_symbol.find({*coding.gen_col[cur.last], *coding.gen_row[g]});
        if (it == coding.d_symbol.end()) continue;
        ts.push_back({id, it->second, intern({cur.q, cur.last, true, g})});
      }
    } else {
      symbol_t g = cur.next;
      ts.push_back({id, *coding.c_symbol[g], intern({step(cur.q, g), g, false, 0})});
    }
  }
  return minimize(FiniteAutomaton(delta, static_cast<state_t>(states.size() + 1), {0}, accepting,
                                  std::move(ts)));
}

// phi image of a relation: both tracks are rewritten in lockstep, letter
// pairs first, separator pairs in between.
SynchronousAutomaton phi_relation(const SynchronousAutomaton& rel,
                                  const ReesRepresentation& coding, const Alphabet& delta) {
  const PaddedPairAlphabet& spa = rel.pair_alphabet();
  PaddedPairAlphabet dpa(delta);
  const symbol_t spad = spa.pad();
  const symbol_t dpad = dpa.pad();

  FiniteAutomaton m = determinize(rel.machine());
  const std::size_t pk = spa.pairs().size();
  std::vector<char> acc(m.num_states(), 0);
  for (state_t s : m.accepting()) acc[s] = 1;
  auto step = [&](state_t q, symbol_t p) { return m.transitions()[q * pk + p].to; };

  auto c_of = [&](symbol_t t) -> std::optional<symbol_t> {
    if (t == spad) return dpad;
    return coding.c_symbol[t];
  };
  auto d_of = [&](symbol_t prev, symbol_t next) -> std::optional<symbol_t> {
    if (next == spad) return dpad;
    if (prev == spad) return std::nullopt;  // a track cannot resume after padding
    if (!coding.gen_col[prev] || !coding.gen_row[next]) return std::nullopt;
    auto it = coding.d_symbol.find({*coding.gen_col[prev], *coding.gen_row[next]});
    if (it == coding.d_symbol.end()) return std::nullopt;
    return it->second;
  };

  struct Key {
    state_t q;
    symbol_t pair;
    bool mid;
    symbol_t next_pair;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, state_t> ids;
  std::vector<Key> states;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(key, static_cast<state_t>(states.size() + 1));
    if (fresh) states.push_back(key);
    return it->second;
  };

  std::vector<Transition> ts;
  std::vector<state_t> accepting;
  state_t init = m.initial()[0];
  if (acc[init]) accepting.push_back(0);
  for (symbol_t p = 0; p < pk; ++p) {
    auto [x, y] = spa.components(p);
    auto cx = c_of(x), cy = c_of(y);
    if (!cx || !cy) continue;
    ts.push_back({0, dpa.pair(*cx, *cy), intern({step(init, p), p, false, 0})});
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    Key cur = states[i];
    state_t id = static_cast<state_t>(i + 1);
    auto [px, py] = spa.components(cur.pair);
    if (!cur.mid) {
      if (acc[cur.q]) accepting.push_back(id);
      for (symbol_t p = 0; p < pk; ++p) {
        auto [nx, ny] = spa.components(p);
        auto dx = d_of(px, nx), dy = d_of(py, ny);
        if (!dx || !dy || (*dx == dpad && *dy == dpad)) continue;
        ts.push_back({id, dpa.pair(*dx, *dy), intern({cur.q, cur.pair, true, p})});
      }
    } else {
      symbol_t p = cur.next_pair;
      auto [nx, ny] = spa.components(p);
      auto cx = c_of(nx), cy = c_of(ny);
      if (!cx || !cy) continue;
      ts.push_back({id, dpa.pair(*cx, *cy), intern({step(cur.q, p), p, false, 0})});
    }
  }
  FiniteAutomaton out(dpa.pairs(), static_cast<state_t>(states.size() + 1), {0}, accepting,
                      std::move(ts));
  return SynchronousAutomaton(delta, std::move(out));
}

}  // namespace

Word ReesRepresentation::to_group_word(const Word& source_word) const {
  Word out;
  for (std::size_t i = 0; i < source_word.size(); ++i) {
    symbol_t g = source_word[i];
    if (i > 0) {
      symbol_t prev = source_word[i - 1];
      out.push_back(d_symbol.at({*gen_col[prev], *gen_row[g]}));
    }
    out.push_back(*c_symbol[g]);
  }
  return out;
}

Word ReesRepresentation::to_source_word(const Word& group_word) const {
  Word out;
  for (symbol_t g : group_word) {
    const Word& piece = delta_source.at(g);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

Word ReesRepresentation::element_word(std::size_t row, const Word& group_word,
                                      std::size_t col) const {
  Word out = row_translates.at(row);
  Word mid = to_source_word(group_word);
  out.insert(out.end(), mid.begin(), mid.end());
  const Word& q = col_translates.at(col);
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

ReesRepresentation rees_decomposition(const InterpretedAutomaticStructure& s) {
  CzsOutcome out = czs_pipeline(s);
  if (!out.analysis) throw NotCzsError("not completely zero-simple: " + out.reason);
  CzsAnalysis& an = *out.analysis;
  const InterpretedAutomaticStructure& cs = an.cs;
  const Alphabet& a = cs.generators();
  const std::vector<Word>& e_list = an.idempotents;

  auto wp = [&](const Word& u, const Word& v) { return word_problem(cs, u, v); };

  // Sort the idempotents into rows (mutual R-relation) and columns
  // (mutual L-relation) by how they stabilize each other.
  std::vector<std::size_t> row_of(e_list.size()), col_of(e_list.size());
  std::vector<std::vector<Word>> rows, cols;
  for (std::size_t i = 0; i < e_list.size(); ++i) {
    const Word& e = e_list[i];
    bool placed = false;
    for (std::size_t r = 0; r < rows.size() && !placed; ++r) {
      const Word& f = rows[r][0];
      if (wp(concat(e, f), f) && wp(concat(f, e), e)) {
        rows[r].push_back(e);
        row_of[i] = r;
        placed = true;
      }
    }
    if (!placed) {
      row_of[i] = rows.size();
      rows.push_back({e});
    }
    placed = false;
    for (std::size_t c = 0; c < cols.size() && !placed; ++c) {
      const Word& f = cols[c][0];
      if (wp(concat(e, f), e) && wp(concat(f, e), f)) {
        cols[c].push_back(e);
        col_of[i] = c;
        placed = true;
      }
    }
    if (!placed) {
      col_of[i] = cols.size();
      cols.push_back({e});
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, Word> idem_table;
  for (std::size_t i = 0; i < e_list.size(); ++i) {
    auto key = std::make_pair(row_of[i], col_of[i]);
    if (idem_table.count(key)) {
      throw NotCzsError("two idempotents share a row and a column");
    }
    idem_table[key] = e_list[i];
  }

  const std::size_t base_row = row_of[0];
  const std::size_t base_col = col_of[0];

  // Generator placement.
  std::vector<std::optional<std::size_t>> gen_row(a.size()), gen_col(a.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (an.generator_is_zero[g]) continue;
    std::size_t r = row_of[an.sl[g].front()];
    std::size_t c = col_of[an.sr[g].front()];
    for (std::size_t ei : an.sl[g]) {
      if (row_of[ei] != r) throw NotCzsError("left stabilizers of a generator span two rows");
    }
    for (std::size_t ei : an.sr[g]) {
      if (col_of[ei] != c) throw NotCzsError("right stabilizers of a generator span two columns");
    }
    gen_row[g] = r;
    gen_col[g] = c;
  }
  std::vector<std::vector<symbol_t>> row_gens(rows.size()), col_gens(cols.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (gen_row[g]) row_gens[*gen_row[g]].push_back(g);
    if (gen_col[g]) col_gens[*gen_col[g]].push_back(g);
  }

  FiniteAutomaton z_word = FiniteAutomaton::single_word(a, an.z);
  auto h_class_reps = [&](std::size_t r, std::size_t c) {
    return difference(bordered_language(a, cs.rep_lang(), row_gens[r], col_gens[c]), z_word);
  };
  auto pick_translate = [&](std::size_t r, std::size_t c) -> Word {
    auto it = idem_table.find({r, c});
    if (it != idem_table.end()) return it->second;
    auto w = shortlex_first(h_class_reps(r, c));
    if (!w) throw NotCzsError("an H-class next to the base point has no representative");
    return *w;
  };

  std::vector<Word> row_translates, col_translates;
  for (std::size_t r = 0; r < rows.size(); ++r) row_translates.push_back(pick_translate(r, base_col));
  for (std::size_t c = 0; c < cols.size(); ++c) col_translates.push_back(pick_translate(base_row, c));

  // Sandwich matrix over the source structure.
  std::vector<std::vector<std::optional<Word>>> matrix_gamma(
      cols.size(), std::vector<std::optional<Word>>(rows.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Word prod = concat(col_translates[c], row_translates[r]);
      if (!wp(prod, an.z)) matrix_gamma[c][r] = find_representative(cs, prod);
    }
  }

  // Regularity, and the base entry naming the group identity.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool nonzero = false;
    for (std::size_t c = 0; c < cols.size(); ++c) nonzero |= matrix_gamma[c][r].has_value();
    if (!nonzero) throw NotCzsError("sandwich matrix has a zero column");
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < rows.size(); ++r) nonzero |= matrix_gamma[c][r].has_value();
    if (!nonzero) throw NotCzsError("sandwich matrix has a zero row");
  }
  if (matrix_gamma[base_col][base_row] != idem_table.at({base_row, base_col})) {
    throw NotCzsError("base sandwich entry does not name the subgroup identity");
  }

  // Representatives of the maximal subgroup.  The empty word can belong
  // here only when it is an idempotent at the base point, in which case it
  // is already in the idempotent table and the bordered language misses it.
  FiniteAutomaton subgroup = h_class_reps(base_row, base_col);
  if (contains(cs.rep_lang(), Word{})) {
    auto it = idem_table.find({base_row, base_col});
    if (it != idem_table.end() && it->second.empty()) {
      subgroup = unite(subgroup, FiniteAutomaton::epsilon_word(a));
    }
  }

  // Per-generator group factor: a = r_i · w_a · q_lambda.
  std::vector<ReesGeneratorData> gen_data;
  std::vector<Word> subgroup_words = enumerate(subgroup, kSearchBound, kUnbounded);
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (an.generator_is_zero[g]) continue;
    const Word& target = cs.assignment().of(g);
    bool found = false;
    for (const Word& w : subgroup_words) {
      if (wp(concat(row_translates[*gen_row[g]], w, col_translates[*gen_col[g]]), target)) {
        gen_data.push_back({g, *gen_row[g], *gen_col[g], w});
        found = true;
        break;
      }
    }
    if (!found) {
      throw BoundExhaustedError("no subgroup factor found for generator " + a.name(g) +
                                " within the search bound");
    }
  }

  // Group alphabet: one letter per non-zero generator, one per non-zero
  // sandwich entry.
  std::vector<std::string> delta_names;
  std::vector<std::optional<symbol_t>> c_symbol(a.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (an.generator_is_zero[g]) continue;
    c_symbol[g] = static_cast<symbol_t>(delta_names.size());
    delta_names.push_back("c_" + a.name(g));
  }
  std::map<std::pair<std::size_t, std::size_t>, symbol_t> d_symbol;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!matrix_gamma[c][r]) continue;
      d_symbol[{c, r}] = static_cast<symbol_t>(delta_names.size());
      delta_names.push_back("d_" + std::to_string(c) + "_" + std::to_string(r));
    }
  }
  Alphabet delta(delta_names);

  ReesRepresentation rep;
  rep.zero_word = an.z;
  rep.row_idempotents = rows;
  rep.col_idempotents = cols;
  rep.base_row = base_row;
  rep.base_col = base_col;
  rep.row_translates = row_translates;
  rep.col_translates = col_translates;
  rep.matrix_gamma = matrix_gamma;
  rep.idempotent_table = idem_table;
  rep.generator_data = gen_data;
  rep.subgroup_reps = subgroup;
  rep.c_symbol = c_symbol;
  rep.d_symbol = d_symbol;
  rep.gen_row = gen_row;
  rep.gen_col = gen_col;

  rep.delta_source.resize(delta.size());
  for (const ReesGeneratorData& gd : gen_data) {
    rep.delta_source[*c_symbol[gd.generator]] = gd.group_factor;
  }
  for (auto& [key, sym] : d_symbol) {
    rep.delta_source[sym] = *matrix_gamma[key.first][key.second];
  }

  // Group sandwich matrix: phi images of the non-zero entries.
  rep.matrix.assign(cols.size(), std::vector<std::optional<Word>>(rows.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (matrix_gamma[c][r]) rep.matrix[c][r] = rep.to_group_word(*matrix_gamma[c][r]);
    }
  }

  // The automatic structure of the maximal subgroup.
  auto rxr = product_relation(subgroup, subgroup);
  FiniteAutomaton group_lang = phi_language(subgroup, rep, delta);
  SynchronousAutomaton group_eq = phi_relation(intersect(cs.equality(), rxr), rep, delta);
  std::vector<SynchronousAutomaton> group_mult;
  GeneratorAssignment group_assign;
  group_assign.images.resize(delta.size());
  for (symbol_t dg = 0; dg < delta.size(); ++dg) {
    const Word& source = rep.delta_source[dg];
    group_mult.push_back(phi_relation(intersect(multiplier(cs, source), rxr), rep, delta));
    group_assign.images[dg] = rep.to_group_word(find_representative(cs, source));
  }
  StructureFlags group_flags;
  group_flags.monoid_with_epsilon = contains(group_lang, Word{});
  PreAutomaticStructure group_structure(delta, group_lang, group_eq, std::move(group_mult));
  group_flags.has_uniqueness = is_diagonal_on(group_structure.equality(), group_lang);
  group_flags.generators_embedded = true;
  for (symbol_t dg = 0; dg < delta.size() && group_flags.generators_embedded; ++dg) {
    if (!contains(group_lang, Word{dg})) group_flags.generators_embedded = false;
  }
  rep.group = InterpretedAutomaticStructure(std::move(group_structure), std::move(group_assign),
                                            group_flags);
  return rep;
}

ReesRepresentation rees_decomposition_simple(const InterpretedAutomaticStructure& s) {
  InterpretedAutomaticStructure with_zero = adjoin_zero(s);
  std::optional<ReesRepresentation> rep;
  try {
    rep.emplace(rees_decomposition(with_zero));
  } catch (const NotCzsError& e) {
    throw NotCompletelySimpleError(std::string("not completely simple: ") + e.what());
  }
  for (const auto& row : rep->matrix) {
    for (const auto& entry : row) {
      if (!entry) {
        throw NotCompletelySimpleError("sandwich matrix has a zero entry");
      }
    }
  }
  return std::move(*rep);
}

}  // namespace autosemi
