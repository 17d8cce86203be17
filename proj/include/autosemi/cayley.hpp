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

#ifndef AUTOSEMI_CAYLEY_HPP_
#define AUTOSEMI_CAYLEY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autosemi/structure.hpp"

namespace autosemi {

/// A finite semigroup as its full multiplication table.  Associativity is
/// checked exhaustively at construction.
class CayleyTable {
 public:
  CayleyTable(std::size_t n, std::vector<std::size_t> products,
              std::vector<std::string> names = {});

  std::size_t size() const { return n_; }
  std::size_t product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> products_;
  std::vector<std::string> names_;
};

/// The one-letter-per-element automatic structure of a finite semigroup:
/// every element is a generator and its own representative.
InterpretedAutomaticStructure from_cayley(const CayleyTable& t);

/// Everything the decision procedures can be checked against, computed by
/// brute force from the table.
struct BruteProperties {
  std::vector<std::size_t> idempotents;
  std::vector<std::size_t> left_zeros;
  std::vector<std::size_t> right_zeros;
  std::optional<std::size_t> zero;
  std::optional<std::size_t> identity;
  std::vector<bool> is_unit;  // meaningful when identity exists
  bool right_cancellative = false;
  bool left_cancellative = false;
  bool left_reductive = false;
  std::vector<std::size_t> r_class, l_class, h_class, d_class;  // class ids per element
  bool simple = false;
  bool zero_simple = false;
  bool completely_simple = false;
  bool completely_zero_simple = false;
};

BruteProperties brute_properties(const CayleyTable& t);

/// Brute-force Rees coordinates for a completely (zero-)simple table:
/// element indices arranged by R-class and L-class, a chosen group
/// H-class, and the sandwich matrix.  Construction re-multiplies the whole
/// table through the coordinates and throws if anything disagrees.
struct BruteRees {
  std::optional<std::size_t> zero;
  std::vector<std::vector<std::size_t>> rows;  // R-classes of the nonzero part
  std::vector<std::vector<std::size_t>> cols;  // L-classes
  std::size_t group_identity = 0;
  std::vector<std::size_t> group_elements;     // the chosen H-class
  std::vector<std::size_t> r_elems, q_elems;   // translates r_i, q_lambda
  // cols x rows, element index or nullopt for zero
  std::vector<std::vector<std::optional<std::size_t>>> sandwich;
};

BruteRees brute_rees(const CayleyTable& t);

/// Subsemigroup of the full transformation monoid on `points` generated by
/// `generator_count` seeded random maps; deterministic per seed.
CayleyTable random_semigroup(std::uint64_t seed, std::size_t points, std::size_t generator_count);

/// Table of the same semigroup with a fresh zero adjoined (test helper).
CayleyTable adjoin_zero_table(const CayleyTable& t);

}  // namespace autosemi

#endif  // AUTOSEMI_CAYLEY_HPP_
