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

#ifndef AUTOSEMI_SYNC_HPP_
#define AUTOSEMI_SYNC_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "autosemi/automaton.hpp"

namespace autosemi {

/// The alphabet of track pairs over a base alphabet A: all (x, y) with
/// x, y in A + a fresh padding symbol "$", except ($, $).  The pad sits
/// at index base.size() of each track.
class PaddedPairAlphabet {
 public:
  explicit PaddedPairAlphabet(Alphabet base);

  const Alphabet& base() const { return base_; }
  const Alphabet& pairs() const { return pairs_; }

  /// Track component index of the padding symbol.
  symbol_t pad() const { return static_cast<symbol_t>(base_.size()); }

  /// Pair symbol for components (left, right); both range over
  /// [0, base.size()] with pad() allowed on at most one side.
  symbol_t pair(symbol_t left, symbol_t right) const;
  std::pair<symbol_t, symbol_t> components(symbol_t pair_symbol) const;

 private:
  Alphabet base_;
  Alphabet pairs_;
};

/// Convolution of a word pair into a single word over the pair alphabet:
/// tracks are aligned position by position and the shorter side is
/// padded with "$" at the end.
Word convolve(const PaddedPairAlphabet& pa, const Word& u, const Word& v);

/// Inverse of convolve.  Throws InvalidPaddingError when the input is not
/// a valid convolution image.
std::pair<Word, Word> deconvolve(const PaddedPairAlphabet& pa, const Word& w);

/// Acceptor, over the pair alphabet, of all valid convolution images.
FiniteAutomaton valid_padding_language(const PaddedPairAlphabet& pa);

/// A finite acceptor of a relation on A* x A*, stored as an automaton
/// over the padded pair alphabet.  Construction normalizes the machine:
/// it is intersected with the valid-padding language and minimized, so
/// two values recognize the same relation iff their machines accept the
/// same language.
class SynchronousAutomaton {
 public:
  SynchronousAutomaton(Alphabet base, FiniteAutomaton pair_machine);

  static SynchronousAutomaton none(const Alphabet& base);

  const Alphabet& base() const { return pa_.base(); }
  const PaddedPairAlphabet& pair_alphabet() const { return pa_; }
  const FiniteAutomaton& machine() const { return machine_; }

  /// Same relation viewed over an extended base alphabet; `wider` must
  /// extend base() by appending names.
  SynchronousAutomaton with_base(const Alphabet& wider) const;

 private:
  PaddedPairAlphabet pa_;
  FiniteAutomaton machine_;
};

SynchronousAutomaton relation_from_pairs(const Alphabet& base,
                                         const std::vector<std::pair<Word, Word>>& pairs);

/// Relation composition: (x, z) is accepted iff (x, y) in r and
/// (y, z) in s for some y.
SynchronousAutomaton compose(const SynchronousAutomaton& r, const SynchronousAutomaton& s);

SynchronousAutomaton invert(const SynchronousAutomaton& r);
SynchronousAutomaton unite(const SynchronousAutomaton& r, const SynchronousAutomaton& s);
SynchronousAutomaton intersect(const SynchronousAutomaton& r, const SynchronousAutomaton& s);
SynchronousAutomaton difference(const SynchronousAutomaton& r, const SynchronousAutomaton& s);

/// Complement relative to A* x A*.
SynchronousAutomaton complement(const SynchronousAutomaton& r);

/// Words appearing in the chosen coordinate (1 or 2).
FiniteAutomaton project(const SynchronousAutomaton& r, int coordinate);

/// {y : exists x in `domain` with (x, y) accepted}.
FiniteAutomaton image(const SynchronousAutomaton& r, const FiniteAutomaton& domain);
FiniteAutomaton image(const SynchronousAutomaton& r, const Word& x);
/// Preimage of a single word: {x : (x, y) accepted}.
FiniteAutomaton preimage(const SynchronousAutomaton& r, const Word& y);

SynchronousAutomaton diagonal(const FiniteAutomaton& language);
SynchronousAutomaton product_relation(const FiniteAutomaton& left, const FiniteAutomaton& right);

/// The universe relation A* x A*.
SynchronousAutomaton full_relation(const Alphabet& base);

bool relations_equal(const SynchronousAutomaton& r, const SynchronousAutomaton& s);
bool is_subrelation(const SynchronousAutomaton& r, const SynchronousAutomaton& s);
bool is_diagonal_on(const SynchronousAutomaton& r, const FiniteAutomaton& language);
bool contains(const SynchronousAutomaton& r, const Word& u, const Word& v);

/// {(u, v) : u precedes v in the shortlex order of the base alphabet}.
SynchronousAutomaton shortlex_less(const Alphabet& base);

/// Accepted pairs in shortlex order of their convolutions, bounded by
/// count and by max(|u|, |v|).
std::vector<std::pair<Word, Word>> enumerate_pairs(const SynchronousAutomaton& r,
                                                   std::size_t max_count, std::size_t max_length);

/// Tail specification for context_rewrite_relation: either no common
/// suffix at all, or a suffix z with every letter before the last drawn
/// from `body`, the last letter drawn from `final_letters`, and length at
/// least `min_length`.
struct TailSpec {
  enum class Kind { None, Suffix } kind = Kind::None;
  std::vector<symbol_t> body;
  std::vector<symbol_t> final_letters;
  std::size_t min_length = 0;

  static TailSpec none() { return {}; }
  static TailSpec suffix(std::vector<symbol_t> body, std::vector<symbol_t> final_letters,
                         std::size_t min_length) {
    return {Kind::Suffix, std::move(body), std::move(final_letters), min_length};
  }
};

/// The relation {(x·w1·z, x·w2·z) : x in A*, z admitted by `tail`}.
/// This is the workhorse for one-letter multipliers ((x, x·a) has
/// w1 = eps, w2 = a, no tail) and for the letter-shuffling relations of
/// rewriting-system structures.
SynchronousAutomaton context_rewrite_relation(const Alphabet& base, const Word& w1, const Word& w2,
                                              const TailSpec& tail);

}  // namespace autosemi

#endif  // AUTOSEMI_SYNC_HPP_
