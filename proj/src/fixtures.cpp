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

#include "autosemi/fixtures.hpp"

namespace autosemi {

InterpretedAutomaticStructure bicyclic_structure() {
  Alphabet qp = Alphabet::characters("qp");
  const symbol_t q = 0, p = 1;

  // L = q*p*, including the empty word for the identity.
  FiniteAutomaton lang(qp, 2, {0}, {0, 1}, {{0, q, 0}, {0, p, 1}, {1, p, 1}});
  FiniteAutomaton qstar(qp, 1, {0}, {0}, {{0, q, 0}});
  auto lxl = product_relation(lang, lang);

  // u·p appends a p; u·q erases a trailing p, or appends a q to q^i.
  SynchronousAutomaton mult_p =
      intersect(context_rewrite_relation(qp, {}, {p}, TailSpec::none()), lxl);
  SynchronousAutomaton mult_q =
      unite(intersect(context_rewrite_relation(qp, {p}, {}, TailSpec::none()), lxl),
            intersect(context_rewrite_relation(qp, {}, {q}, TailSpec::none()),
                      product_relation(qstar, qstar)));

  GeneratorAssignment assignment;
  assignment.images = {{q}, {p}};
  StructureFlags flags;
  flags.has_uniqueness = true;
  flags.generators_embedded = true;
  flags.monoid_with_epsilon = true;
  return InterpretedAutomaticStructure(
      PreAutomaticStructure(qp, std::move(lang), diagonal(lang), {mult_q, mult_p}),
      std::move(assignment), flags);
}

InterpretedAutomaticStructure free_semigroup_structure(const Alphabet& letters) {
  FiniteAutomaton lang =
      difference(FiniteAutomaton::universal(letters), FiniteAutomaton::epsilon_word(letters));
  auto lxl = product_relation(lang, lang);
  std::vector<SynchronousAutomaton> multipliers;
  GeneratorAssignment assignment;
  for (symbol_t g = 0; g < letters.size(); ++g) {
    multipliers.push_back(
        intersect(context_rewrite_relation(letters, {}, {g}, TailSpec::none()), lxl));
    assignment.images.push_back({g});
  }
  StructureFlags flags;
  flags.has_uniqueness = true;
  flags.generators_embedded = true;
  return InterpretedAutomaticStructure(
      PreAutomaticStructure(letters, std::move(lang), diagonal(lang), std::move(multipliers)),
      std::move(assignment), flags);
}

CayleyTable trivial_table() { return CayleyTable(1, {0}, {"t"}); }

CayleyTable cyclic_group_table(std::size_t order) {
  std::vector<std::size_t> table(order * order);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < order; ++i) {
    names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    for (std::size_t j = 0; j < order; ++j) table[i * order + j] = (i + j) % order;
  }
  return CayleyTable(order, std::move(table), std::move(names));
}

CayleyTable semilattice2_table() {
  // e·e = e, everything else is z.
  return CayleyTable(2, {0, 1, 1, 1}, {"e", "z"});
}

CayleyTable left_zero_table(std::size_t n) {
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = i;
  }
  return CayleyTable(n, std::move(table));
}

CayleyTable right_zero_table(std::size_t n) {
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = j;
  }
  return CayleyTable(n, std::move(table));
}

CayleyTable rectangular_band_table(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  std::vector<std::size_t> table(n * n);
  std::vector<std::string> names;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      names.push_back("b" + std::to_string(r) + std::to_string(c));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t row = a / cols;
      std::size_t col = b % cols;
      table[a * n + b] = row * cols + col;
    }
  }
  return CayleyTable(n, std::move(table), std::move(names));
}

CayleyTable brandt_b2_table() {
  // Elements (i, j) with (i, j)(k, l) = (i, l) when j = k, zero otherwise.
  // Index order: e11, e12, e21, e22, z.
  auto idx = [](std::size_t i, std::size_t j) { return 2 * i + j; };
  const std::size_t z = 4, n = 5;
  std::vector<std::size_t> table(n * n, z);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t l = 0; l < 2; ++l) {
        table[idx(i, j) * n + idx(j, l)] = idx(i, l);
      }
    }
  }
  return CayleyTable(n, std::move(table), {"e11", "e12", "e21", "e22", "zz"});
}

}  // namespace autosemi
