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

#include "autosemi/structure.hpp"

#include <algorithm>

#include "autosemi/decisions.hpp"
#include "autosemi/errors.hpp"

namespace autosemi {

PreAutomaticStructure::PreAutomaticStructure(Alphabet generators, FiniteAutomaton rep_lang,
                                             SynchronousAutomaton equality,
                                             std::vector<SynchronousAutomaton> multipliers)
    : generators_(std::move(generators)),
      rep_lang_(std::move(rep_lang)),
      equality_(std::move(equality)),
      multipliers_(std::move(multipliers)) {
  if (rep_lang_.alphabet() != generators_) {
    throw AlphabetMismatchError("representative language alphabet differs from the generators");
  }
  if (equality_.base() != generators_) {
    throw AlphabetMismatchError("equality relation base differs from the generators");
  }
  if (multipliers_.size() != generators_.size()) {
    throw Error("expected one multiplier relation per generator");
  }
  for (const SynchronousAutomaton& m : multipliers_) {
    if (m.base() != generators_) {
      throw AlphabetMismatchError("multiplier relation base differs from the generators");
    }
  }
}

InterpretedAutomaticStructure::InterpretedAutomaticStructure(PreAutomaticStructure structure,
                                                             GeneratorAssignment assignment,
                                                             StructureFlags flags)
    : structure_(std::move(structure)), assignment_(std::move(assignment)), flags_(flags) {
  if (assignment_.images.size() != structure_.generators().size()) {
    throw Error("expected one assigned representative per generator");
  }
  for (const Word& w : assignment_.images) {
    for (symbol_t s : w) {
      if (s >= structure_.generators().size()) {
        throw AlphabetMismatchError("assignment word uses a symbol outside the generators");
      }
    }
  }
}

std::vector<Diagnostic> sanity_validate(const PreAutomaticStructure& s) {
  std::vector<Diagnostic> out;
  const Alphabet& a = s.generators();
  auto lxl = product_relation(s.rep_lang(), s.rep_lang());

  if (!is_subrelation(s.equality(), lxl)) {
    out.push_back({DiagnosticCode::EqualityNotContained, std::nullopt,
                   "equality relation is not contained in L x L"});
  }
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (!is_subrelation(s.multiplier_of(g), lxl)) {
      out.push_back({DiagnosticCode::MultiplierNotContained, g,
                     "multiplier for " + a.name(g) + " is not contained in L x L"});
    }
  }
  if (!is_subrelation(diagonal(s.rep_lang()), s.equality())) {
    out.push_back({DiagnosticCode::NotReflexive, std::nullopt,
                   "equality relation is not reflexive on L"});
  }
  if (!relations_equal(s.equality(), invert(s.equality()))) {
    out.push_back({DiagnosticCode::NotSymmetric, std::nullopt,
                   "equality relation is not symmetric"});
  }
  if (!is_subrelation(compose(s.equality(), s.equality()), s.equality())) {
    out.push_back({DiagnosticCode::NotTransitive, std::nullopt,
                   "equality relation is not transitive"});
  }
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (!is_subrelation(compose(s.equality(), s.multiplier_of(g)), s.multiplier_of(g))) {
      out.push_back({DiagnosticCode::NotRightCompatible, g,
                     "equality then multiplier for " + a.name(g) + " leaves the multiplier"});
    }
    if (!is_subrelation(compose(s.multiplier_of(g), s.equality()), s.multiplier_of(g))) {
      out.push_back({DiagnosticCode::NotLeftCompatible, g,
                     "multiplier for " + a.name(g) + " then equality leaves the multiplier"});
    }
    if (!are_equivalent(project(s.multiplier_of(g), 1), s.rep_lang())) {
      out.push_back({DiagnosticCode::NotTotal, g,
                     "multiplier for " + a.name(g) + " is not total on L"});
    }
  }
  return out;
}

std::vector<Diagnostic> sanity_validate(const InterpretedAutomaticStructure& s) {
  std::vector<Diagnostic> out = sanity_validate(s.structure());
  for (symbol_t g = 0; g < s.generators().size(); ++g) {
    if (!contains(s.rep_lang(), s.assignment().of(g))) {
      out.push_back({DiagnosticCode::AssignmentOutsideL, g,
                     "assigned representative of " + s.generators().name(g) + " is outside L"});
    }
  }
  return out;
}

SynchronousAutomaton multiplier(const PreAutomaticStructure& s, const Word& w) {
  if (w.empty()) return s.equality();
  SynchronousAutomaton acc = s.multiplier_of(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) acc = compose(acc, s.multiplier_of(w[i]));
  return acc;
}

SynchronousAutomaton multiplier(const InterpretedAutomaticStructure& s, const Word& w) {
  return multiplier(s.structure(), w);
}

bool right_trans_equiv(const PreAutomaticStructure& s, const Word& u, const Word& v) {
  return relations_equal(multiplier(s, u), multiplier(s, v));
}

GeneratorAssignment find_assignment(const PreAutomaticStructure& s, std::size_t word_bound) {
  std::vector<Word> candidates = enumerate(s.rep_lang(), word_bound, kUnbounded);
  GeneratorAssignment out;
  out.images.resize(s.generators().size());
  for (symbol_t g = 0; g < s.generators().size(); ++g) {
    bool found = false;
    for (const Word& w : candidates) {
      if (relations_equal(multiplier(s, w), s.multiplier_of(g))) {
        out.images[g] = w;
        found = true;
        break;
      }
    }
    if (!found) {
      throw BoundExhaustedError("no representative for generator " + s.generators().name(g) +
                                " found among the first " + std::to_string(candidates.size()) +
                                " words of L");
    }
  }
  return out;
}

GeneratorAssignment embedded_assignment(const PreAutomaticStructure& s) {
  GeneratorAssignment out;
  out.images.resize(s.generators().size());
  for (symbol_t g = 0; g < s.generators().size(); ++g) {
    if (!contains(s.rep_lang(), Word{g})) {
      throw GeneratorNotInLError("generator " + s.generators().name(g) +
                                 " is not a one-letter word of L");
    }
    out.images[g] = Word{g};
  }
  return out;
}

namespace {

// Restriction plus finitely many fresh representatives, applied uniformly
// to the equality relation and to every multiplier.
SynchronousAutomaton rebuild_relation(const SynchronousAutomaton& rel, const FiniteAutomaton& kl,
                                      const SynchronousAutomaton& kxk,
                                      const std::vector<Word>& extra,
                                      const std::vector<Word>& extra_reps) {
  const Alphabet& a = rel.base();
  SynchronousAutomaton out = intersect(rel, kxk);
  std::vector<std::pair<Word, Word>> finite_pairs;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    const Word& x = extra[i];
    const Word& xr = extra_reps[i];
    FiniteAutomaton pre = intersect(preimage(rel, xr), kl);
    if (!is_empty(pre)) {
      out = unite(out, product_relation(pre, FiniteAutomaton::single_word(a, x)));
    }
    FiniteAutomaton img = intersect(image(rel, xr), kl);
    if (!is_empty(img)) {
      out = unite(out, product_relation(FiniteAutomaton::single_word(a, x), img));
    }
    for (std::size_t j = 0; j < extra.size(); ++j) {
      if (contains(rel, xr, extra_reps[j])) finite_pairs.emplace_back(x, extra[j]);
    }
  }
  if (!finite_pairs.empty()) out = unite(out, relation_from_pairs(a, finite_pairs));
  return out;
}

}  // namespace

InterpretedAutomaticStructure with_representatives(const InterpretedAutomaticStructure& s,
                                                   const FiniteAutomaton& new_reps) {
  const Alphabet& a = s.generators();
  if (new_reps.alphabet() != a) {
    throw AlphabetMismatchError("with_representatives: alphabet differs from the generators");
  }
  const FiniteAutomaton& old_l = s.rep_lang();
  FiniteAutomaton k = minimize(new_reps);

  FiniteAutomaton fresh = difference(k, old_l);
  if (!is_finite(fresh)) {
    throw InfiniteDifferenceError("new representative language adds infinitely many words");
  }
  std::vector<Word> extra = enumerate(fresh, kUnbounded, kUnbounded);
  // A word already in L may stay, but the empty word cannot be introduced:
  // it has no representative to look up.
  if (std::any_of(extra.begin(), extra.end(), [](const Word& w) { return w.empty(); })) {
    throw EmptyWordError("the empty word cannot be introduced as a representative");
  }
  std::vector<Word> extra_reps;
  extra_reps.reserve(extra.size());
  for (const Word& x : extra) extra_reps.push_back(find_representative(s, x));

  // Surjectivity: every L-word must be equality-related to a kept word or
  // to the representative of one of the fresh words.
  FiniteAutomaton kept = intersect(k, old_l);
  FiniteAutomaton covered =
      project(intersect(s.equality(), product_relation(old_l, kept)), 1);
  FiniteAutomaton uncovered = difference(old_l, covered);
  for (const Word& xr : extra_reps) {
    uncovered = difference(uncovered, image(s.equality(), xr));
  }
  if (!is_empty(uncovered)) {
    throw NotOntoError("new representative language misses some elements");
  }

  auto kxk = product_relation(k, k);
  SynchronousAutomaton equality = rebuild_relation(s.equality(), kept, kxk, extra, extra_reps);
  std::vector<SynchronousAutomaton> multipliers;
  multipliers.reserve(a.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    multipliers.push_back(rebuild_relation(s.multiplier_of(g), kept, kxk, extra, extra_reps));
  }

  // Reassign generators whose representative fell out of K.
  GeneratorAssignment assignment;
  assignment.images.resize(a.size());
  for (symbol_t g = 0; g < a.size(); ++g) {
    const Word& old = s.assignment().of(g);
    if (contains(k, old)) {
      assignment.images[g] = old;
      continue;
    }
    FiniteAutomaton in_k = intersect(image(s.equality(), old), kept);
    if (auto w = shortlex_first(in_k)) {
      assignment.images[g] = *w;
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (contains(s.equality(), extra_reps[i], old)) {
        assignment.images[g] = extra[i];
        found = true;
        break;
      }
    }
    if (!found) {
      throw NotOntoError("generator " + a.name(g) + " has no representative in the new language");
    }
  }

  StructureFlags flags = s.flags();
  PreAutomaticStructure rebuilt(a, k, std::move(equality), std::move(multipliers));
  flags.has_uniqueness = is_diagonal_on(rebuilt.equality(), rebuilt.rep_lang());
  flags.generators_embedded = true;
  for (symbol_t g = 0; g < a.size() && flags.generators_embedded; ++g) {
    if (!contains(k, Word{g})) flags.generators_embedded = false;
  }
  return InterpretedAutomaticStructure(std::move(rebuilt), std::move(assignment), flags);
}

InterpretedAutomaticStructure to_cross_section(const InterpretedAutomaticStructure& s) {
  const Alphabet& a = s.generators();

  // Distinct generators must name distinct elements, otherwise no language
  // can contain all of them as one-letter representatives.
  for (symbol_t g = 0; g < a.size(); ++g) {
    for (symbol_t h = g + 1; h < a.size(); ++h) {
      if (contains(s.equality(), s.assignment().of(g), s.assignment().of(h))) {
        throw GeneratorsNotInjectiveError("generators " + a.name(g) + " and " + a.name(h) +
                                          " represent the same element");
      }
    }
  }

  // Embed the generators as one-letter words.
  std::vector<Word> letters;
  for (symbol_t g = 0; g < a.size(); ++g) letters.push_back({g});
  FiniteAutomaton with_letters = unite(s.rep_lang(), FiniteAutomaton::from_words(a, letters));
  InterpretedAutomaticStructure cur = with_representatives(s, with_letters);
  {
    GeneratorAssignment identity_map;
    for (symbol_t g = 0; g < a.size(); ++g) identity_map.images.push_back({g});
    cur = InterpretedAutomaticStructure(cur.structure(), std::move(identity_map), cur.flags());
  }

  // Drop the empty word whenever an equivalent nonempty representative
  // exists; keep it only under the monoid-with-epsilon flag.
  if (contains(cur.rep_lang(), Word{})) {
    FiniteAutomaton cls = intersect(image(cur.equality(), Word{}), cur.rep_lang());
    FiniteAutomaton nonempty = difference(cls, FiniteAutomaton::epsilon_word(a));
    if (!is_empty(nonempty)) {
      cur = with_representatives(cur, difference(cur.rep_lang(), FiniteAutomaton::epsilon_word(a)));
    } else if (!cur.flags().monoid_with_epsilon) {
      throw BoundExhaustedError("the empty word has no equivalent nonempty representative");
    }
  }

  // Keep only the shortlex-least representative of every element.
  FiniteAutomaton duplicates =
      project(intersect(cur.equality(), shortlex_less(a)), 2);
  cur = with_representatives(cur, difference(cur.rep_lang(), duplicates));

  if (!cur.flags().has_uniqueness) {
    throw InconsistentStructureError(
        "equality is not the diagonal after the shortlex reduction; the input relations do not "
        "describe a semigroup");
  }
  return cur;
}

// Only uniqueness matters for the decision procedures: representative
// lookups go through the assignment, never through literal letters, so
// embedded generators are not required here.  That also keeps structures
// with non-injective generators (every maximal-subgroup structure of a
// trivial group) usable as long as they are cross-sections already.
InterpretedAutomaticStructure ensure_cross_section(const InterpretedAutomaticStructure& s) {
  if (s.flags().has_uniqueness) return s;
  return to_cross_section(s);
}

InterpretedAutomaticStructure trivial_interpreted_structure() {
  Alphabet empty;
  return InterpretedAutomaticStructure(
      PreAutomaticStructure(empty, FiniteAutomaton::none(empty), SynchronousAutomaton::none(empty),
                            {}),
      GeneratorAssignment{}, StructureFlags{});
}

InterpretedAutomaticStructure adjoin_zero(const InterpretedAutomaticStructure& s) {
  const Alphabet& a = s.generators();
  std::string fresh = "z";
  for (int i = 1; a.find(fresh); ++i) fresh = "z" + std::to_string(i);
  std::vector<std::string> names = a.names();
  names.push_back(fresh);
  Alphabet wide(std::move(names));
  const symbol_t z = static_cast<symbol_t>(wide.size() - 1);

  FiniteAutomaton zero_word = FiniteAutomaton::single_word(wide, {z});
  FiniteAutomaton rep = unite(lift_alphabet(s.rep_lang(), wide), zero_word);
  auto zz = relation_from_pairs(wide, {{{z}, {z}}});
  SynchronousAutomaton equality = unite(s.equality().with_base(wide), zz);

  std::vector<SynchronousAutomaton> multipliers;
  for (symbol_t g = 0; g < a.size(); ++g) {
    multipliers.push_back(unite(s.multiplier_of(g).with_base(wide), zz));
  }
  multipliers.push_back(product_relation(rep, zero_word));

  GeneratorAssignment assignment;
  assignment.images = s.assignment().images;
  assignment.images.push_back({z});

  return InterpretedAutomaticStructure(
      PreAutomaticStructure(wide, std::move(rep), std::move(equality), std::move(multipliers)),
      std::move(assignment), s.flags());
}

}  // namespace autosemi
