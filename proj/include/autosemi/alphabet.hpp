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

#ifndef AUTOSEMI_ALPHABET_HPP_
#define AUTOSEMI_ALPHABET_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autosemi {

using symbol_t = std::uint32_t;
using state_t = std::uint32_t;

/// A word is a sequence of symbol indices into some alphabet.
using Word = std::vector<symbol_t>;

/// Sentinel for "no bound" in enumeration and search limits.
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// An ordered finite set of named symbols.  The declaration order of the
/// names is the symbol order used everywhere shortlex comparisons are made.
/// Cheap to copy; immutable once constructed.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);

  /// One single-character symbol per character of `chars`, in order.
  static Alphabet characters(std::string_view chars);

  std::size_t size() const;
  const std::string& name(symbol_t s) const;
  const std::vector<std::string>& names() const;
  std::optional<symbol_t> find(std::string_view name) const;

  /// Like find() but throws ParseError when the name is unknown.
  symbol_t at(std::string_view name) const;

  bool operator==(const Alphabet& other) const;
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Shortlex comparison induced by symbol index order.
bool shortlex_less_than(const Word& a, const Word& b);

/// Renders a word using symbol names; multi-character names are joined
/// with '.', single-character ones are concatenated.  The empty word
/// prints as "".
std::string word_name(const Alphabet& alphabet, const Word& w);

/// Inverse of word_name: accepts either a '.'-separated list of names or,
/// when every alphabet name is a single character, a plain character
/// string.  Throws ParseError on unknown symbols.
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace autosemi

#endif  // AUTOSEMI_ALPHABET_HPP_
