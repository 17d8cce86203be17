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

#ifndef AUTOSEMI_FIXTURES_HPP_
#define AUTOSEMI_FIXTURES_HPP_

#include "autosemi/cayley.hpp"
#include "autosemi/structure.hpp"

namespace autosemi {

/// The bicyclic monoid on generators q < p with pq = 1, representatives
/// q^i p^j and the empty word for the identity.
InterpretedAutomaticStructure bicyclic_structure();

/// The free semigroup on the given letters: representatives are all
/// nonempty words, equality is the diagonal.
InterpretedAutomaticStructure free_semigroup_structure(const Alphabet& letters);

CayleyTable trivial_table();
CayleyTable cyclic_group_table(std::size_t order);
CayleyTable semilattice2_table();                    // {e, z} with ez = z
CayleyTable left_zero_table(std::size_t n);
CayleyTable right_zero_table(std::size_t n);
CayleyTable rectangular_band_table(std::size_t rows, std::size_t cols);
CayleyTable brandt_b2_table();                       // 2x2 identity sandwich over the trivial group

}  // namespace autosemi

#endif  // AUTOSEMI_FIXTURES_HPP_
