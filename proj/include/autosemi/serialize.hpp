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

#ifndef AUTOSEMI_SERIALIZE_HPP_
#define AUTOSEMI_SERIALIZE_HPP_

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "autosemi/cayley.hpp"
#include "autosemi/decisions.hpp"
#include "autosemi/structure.hpp"

namespace autosemi {

/// Structure documents: JSON with the alphabet, the representative
/// automaton, the equality automaton, one multiplier automaton per
/// generator, the assignment, and the three flags.  Pair symbols are
/// two-element arrays with "$" for the padding.
nlohmann::json structure_to_json(const InterpretedAutomaticStructure& s);
InterpretedAutomaticStructure structure_from_json(const nlohmann::json& doc);

nlohmann::json automaton_to_json(const FiniteAutomaton& m);
FiniteAutomaton automaton_from_json(const nlohmann::json& doc, const Alphabet& alphabet);

nlohmann::json relation_to_json(const SynchronousAutomaton& r);
SynchronousAutomaton relation_from_json(const nlohmann::json& doc, const Alphabet& base);

nlohmann::json rees_to_json(const ReesRepresentation& r, const Alphabet& source);

/// Cayley table text format: first line n, then n rows of n 0-based
/// element indices; an optional leading "names:" line overrides the
/// default element names.
CayleyTable cayley_from_stream(std::istream& in);
void cayley_to_stream(const CayleyTable& t, std::ostream& out);
CayleyTable cayley_from_file(const std::string& path);

InterpretedAutomaticStructure structure_from_file(const std::string& path);
void structure_to_file(const InterpretedAutomaticStructure& s, const std::string& path);

}  // namespace autosemi

#endif  // AUTOSEMI_SERIALIZE_HPP_
