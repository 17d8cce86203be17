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

#ifndef AUTOSEMI_STRUCTURE_HPP_
#define AUTOSEMI_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "autosemi/sync.hpp"

namespace autosemi {

/// A pre-automatic structure: generators A, a regular language L of
/// representatives, an equality relation and one right-multiplication
/// relation per generator, all relations on A* x A*.
class PreAutomaticStructure {
 public:
  PreAutomaticStructure(Alphabet generators, FiniteAutomaton rep_lang,
                        SynchronousAutomaton equality,
                        std::vector<SynchronousAutomaton> multipliers);

  const Alphabet& generators() const { return generators_; }
  const FiniteAutomaton& rep_lang() const { return rep_lang_; }
  const SynchronousAutomaton& equality() const { return equality_; }
  const SynchronousAutomaton& multiplier_of(symbol_t a) const { return multipliers_.at(a); }
  const std::vector<SynchronousAutomaton>& multipliers() const { return multipliers_; }

 private:
  Alphabet generators_;
  FiniteAutomaton rep_lang_;
  SynchronousAutomaton equality_;
  std::vector<SynchronousAutomaton> multipliers_;
};

/// ι: pins one representative word per generator.
struct GeneratorAssignment {
  std::vector<Word> images;  // indexed by generator symbol

  const Word& of(symbol_t a) const { return images.at(a); }
};

struct StructureFlags {
  /// The equality relation is known to be the diagonal on L.
  bool has_uniqueness = false;
  /// Every generator occurs in L as a one-letter word.
  bool generators_embedded = false;
  /// The empty word is allowed as a first-class representative.
  bool monoid_with_epsilon = false;
};

class InterpretedAutomaticStructure {
 public:
  InterpretedAutomaticStructure(PreAutomaticStructure structure, GeneratorAssignment assignment,
                                StructureFlags flags);

  const PreAutomaticStructure& structure() const { return structure_; }
  const GeneratorAssignment& assignment() const { return assignment_; }
  const StructureFlags& flags() const { return flags_; }

  const Alphabet& generators() const { return structure_.generators(); }
  const FiniteAutomaton& rep_lang() const { return structure_.rep_lang(); }
  const SynchronousAutomaton& equality() const { return structure_.equality(); }
  const SynchronousAutomaton& multiplier_of(symbol_t a) const {
    return structure_.multiplier_of(a);
  }

 private:
  PreAutomaticStructure structure_;
  GeneratorAssignment assignment_;
  StructureFlags flags_;
};

enum class DiagnosticCode {
  EqualityNotContained,    // L_= outside L x L
  MultiplierNotContained,  // some L_a outside L x L
  NotReflexive,
  NotSymmetric,
  NotTransitive,
  NotRightCompatible,  // L_= ∘ L_a outside L_a
  NotLeftCompatible,   // L_a ∘ L_= outside L_a
  NotTotal,            // first projection of L_a differs from L
  AssignmentOutsideL,
};

struct Diagnostic {
  DiagnosticCode code;
  std::optional<symbol_t> generator;
  std::string message;
};

/// Checks the computable necessary conditions for the relations to admit
/// a semigroup interpretation.  An empty result does not certify that a
/// semigroup exists; a nonempty one refutes it.
std::vector<Diagnostic> sanity_validate(const PreAutomaticStructure& s);
std::vector<Diagnostic> sanity_validate(const InterpretedAutomaticStructure& s);

/// The relation for right multiplication by the word w: composition of
/// the letter relations, with the empty word mapped to equality.
SynchronousAutomaton multiplier(const PreAutomaticStructure& s, const Word& w);
SynchronousAutomaton multiplier(const InterpretedAutomaticStructure& s, const Word& w);

/// Whether u and v act identically by right multiplication, i.e. their
/// multiplier relations coincide.  Interpretation independent.
bool right_trans_equiv(const PreAutomaticStructure& s, const Word& u, const Word& v);

/// Searches L in shortlex order, for each generator, for a word with the
/// same multiplier relation.  `word_bound` caps the number of candidates
/// tried per generator.  Only certified for left reductive semigroups;
/// for others the result can identify distinct elements.
GeneratorAssignment find_assignment(const PreAutomaticStructure& s, std::size_t word_bound);

/// The identity assignment; requires every generator to occur in L as a
/// one-letter word.
GeneratorAssignment embedded_assignment(const PreAutomaticStructure& s);

/// Rebuilds the structure with representative language K, preserving the
/// interpretation.  K may drop L-words and add finitely many new ones.
InterpretedAutomaticStructure with_representatives(const InterpretedAutomaticStructure& s,
                                                   const FiniteAutomaton& new_reps);

/// Shortlex cross-section: embeds the generators, removes the empty word
/// when an equivalent nonempty representative exists, and keeps only the
/// shortlex-least representative of every element.  The result has the
/// uniqueness flag set.
InterpretedAutomaticStructure to_cross_section(const InterpretedAutomaticStructure& s);

/// Converts only when the uniqueness and embedded-generator flags are not
/// already set.
InterpretedAutomaticStructure ensure_cross_section(const InterpretedAutomaticStructure& s);

/// Structure for the semigroup with a fresh zero adjoined.  The new
/// generator gets the first name of the form z, z1, z2, ... not already
/// in use.
InterpretedAutomaticStructure adjoin_zero(const InterpretedAutomaticStructure& s);

/// Placeholder value over the empty alphabet (describes the empty
/// semigroup); handy as a default for containers of structures.
InterpretedAutomaticStructure trivial_interpreted_structure();

}  // namespace autosemi

#endif  // AUTOSEMI_STRUCTURE_HPP_
