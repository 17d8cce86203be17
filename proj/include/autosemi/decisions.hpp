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

#ifndef AUTOSEMI_DECISIONS_HPP_
#define AUTOSEMI_DECISIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autosemi/structure.hpp"

namespace autosemi {

/// The representative in L of the element named by u, computed letter by
/// letter through the multiplier relations (shortlex-least choice at each
/// step).  The empty word is only accepted under the monoid-with-epsilon
/// flag, in which case it must itself lie in L.
Word find_representative(const InterpretedAutomaticStructure& s, const Word& u);

/// Uniform word problem: do u and v name the same element?
bool word_problem(const InterpretedAutomaticStructure& s, const Word& u, const Word& v);

/// Right multiplication by the element of w is injective.  Uses the
/// diagonal test on a cross-section (converting first when needed).
bool is_right_cancellable(const InterpretedAutomaticStructure& s, const Word& w);

/// Every generator is right cancellable.
bool is_right_cancellative(const InterpretedAutomaticStructure& s);

/// Language of representatives of left zeros (may be empty).
FiniteAutomaton left_zeros(const PreAutomaticStructure& s);

/// The unique word representing the two-sided zero, if one exists.
std::optional<Word> zero(const InterpretedAutomaticStructure& s);

/// The word representing the identity element, if the semigroup is a
/// monoid.
std::optional<Word> identity(const InterpretedAutomaticStructure& s);

/// Language of cross-section representatives of the left inverses of w.
/// Throws NotAMonoidError when there is no identity.
FiniteAutomaton left_inverses(const InterpretedAutomaticStructure& s, const Word& w);

/// w names a unit of the monoid.
bool is_unit(const InterpretedAutomaticStructure& s, const Word& w);

struct Trichotomy {
  enum class Tag {
    InfinitelyManyLeftInverses,       // (A)
    FinitelyManyWithRightInverse,     // (B)
    FinitelyManyNoRightInverse,       // (C); also used for an empty set
  };
  Tag tag;
  std::vector<Word> witnesses;  // the left inverses, when finitely many
};

/// Classifies the left inverses of w with respect to the idempotent e.
Trichotomy inverse_trichotomy(const InterpretedAutomaticStructure& s, const Word& w,
                              const Word& e);

/// Either (f, e) with f an idempotent sharing w's row (f·w = w) and e an
/// idempotent sharing w's column (q·w = e for some q, w·e = w), or
/// nothing when that fails, refuting complete zero-simplicity.
std::optional<std::pair<Word, Word>> find_related_idempotents(
    const InterpretedAutomaticStructure& s, const Word& w, const std::vector<Word>& idempotents);

struct CzsVerdict {
  bool value = false;
  std::string reason;  // failing step when value is false

  explicit operator bool() const { return value; }
};

CzsVerdict is_completely_zero_simple(const InterpretedAutomaticStructure& s);
bool is_completely_simple(const InterpretedAutomaticStructure& s);

/// Per-generator placement data inside the Rees coordinates.
struct ReesGeneratorData {
  symbol_t generator;
  std::size_t row;
  std::size_t col;
  Word group_factor;  // in the source structure's letters
};

/// A Rees matrix representation: index sets named by their idempotent
/// words, a sandwich matrix over the subgroup's representative words, and
/// an automatic structure for the maximal subgroup.
struct ReesRepresentation {
  InterpretedAutomaticStructure group = trivial_interpreted_structure();

  Word zero_word;
  std::vector<std::vector<Word>> row_idempotents;  // rows (R-classes)
  std::vector<std::vector<Word>> col_idempotents;  // columns (L-classes)
  std::size_t base_row = 0;
  std::size_t base_col = 0;

  std::vector<Word> row_translates;  // r_i, in the source letters
  std::vector<Word> col_translates;  // q_lambda, in the source letters

  /// cols x rows; empty optional encodes the zero entry.
  std::vector<std::vector<std::optional<Word>>> matrix;        // group words
  std::vector<std::vector<std::optional<Word>>> matrix_gamma;  // source words

  std::map<std::pair<std::size_t, std::size_t>, Word> idempotent_table;
  std::vector<ReesGeneratorData> generator_data;

  /// Representatives of the subgroup inside the source structure.
  FiniteAutomaton subgroup_reps = FiniteAutomaton::none(Alphabet());

  /// Rewrites a subgroup representative into the group alphabet.
  Word to_group_word(const Word& source_word) const;
  /// Inverse semantic transfer: a group word becomes a source word with
  /// the same element (letter images and sandwich entries concatenated).
  Word to_source_word(const Word& group_word) const;
  /// Source word for the triple (row, group element, col).
  Word element_word(std::size_t row, const Word& group_word, std::size_t col) const;

  // internal coding tables
  std::vector<std::optional<symbol_t>> c_symbol;                 // per source generator
  std::map<std::pair<std::size_t, std::size_t>, symbol_t> d_symbol;
  std::vector<std::optional<std::size_t>> gen_row, gen_col;      // per source generator
  std::vector<Word> delta_source;                                // per group generator
};

/// Rees decomposition of a completely zero-simple semigroup; verifies the
/// property first and throws NotCzsError when it fails.
ReesRepresentation rees_decomposition(const InterpretedAutomaticStructure& s);

/// Rees decomposition of a completely simple semigroup via its zero
/// extension; the resulting matrix is checked to be zero-free.
ReesRepresentation rees_decomposition_simple(const InterpretedAutomaticStructure& s);

}  // namespace autosemi

#endif  // AUTOSEMI_DECISIONS_HPP_
