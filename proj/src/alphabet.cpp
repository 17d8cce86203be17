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

#include "autosemi/alphabet.hpp"

#include <algorithm>
#include <unordered_map>

#include "autosemi/errors.hpp"

namespace autosemi {

struct Alphabet::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, symbol_t> index;
  bool all_single_char = true;
};

namespace {

std::shared_ptr<const Alphabet::Impl> make_impl(std::vector<std::string> names) {
  auto impl = std::make_shared<Alphabet::Impl>();
  impl->names = std::move(names);
  impl->index.reserve(impl->names.size());
  for (symbol_t i = 0; i < impl->names.size(); ++i) {
    const std::string& n = impl->names[i];
    if (n.empty()) {
      throw ParseError("alphabet symbol names must be nonempty");
    }
    if (n.find('.') != std::string::npos) {
      throw ParseError("alphabet symbol name may not contain '.': " + n);
    }
    if (!impl->index.emplace(n, i).second) {
      throw ParseError("duplicate symbol name in alphabet: " + n);
    }
    if (n.size() != 1) impl->all_single_char = false;
  }
  return impl;
}

}  // namespace

Alphabet::Alphabet() : impl_(make_impl({})) {}

Alphabet::Alphabet(std::vector<std::string> names) : impl_(make_impl(std::move(names))) {}

Alphabet Alphabet::characters(std::string_view chars) {
  std::vector<std::string> names;
  names.reserve(chars.size());
  for (char c : chars) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

std::size_t Alphabet::size() const { return impl_->names.size(); }

const std::string& Alphabet::name(symbol_t s) const { return impl_->names.at(s); }

const std::vector<std::string>& Alphabet::names() const { return impl_->names; }

std::optional<symbol_t> Alphabet::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

symbol_t Alphabet::at(std::string_view name) const {
  auto s = find(name);
  if (!s) throw ParseError("unknown symbol: " + std::string(name));
  return *s;
}

bool Alphabet::operator==(const Alphabet& other) const {
  return impl_ == other.impl_ || impl_->names == other.impl_->names;
}

bool shortlex_less_than(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_name(const Alphabet& alphabet, const Word& w) {
  bool single = true;
  for (symbol_t s : w) {
    if (alphabet.name(s).size() != 1) {
      single = false;
      break;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += '.';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (text.empty()) return w;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      std::string_view piece =
          dot == std::string_view::npos ? text.substr(start) : text.substr(start, dot - start);
      w.push_back(alphabet.at(piece));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return w;
  }
  // No separators: prefer the whole string as one symbol, otherwise read
  // character by character.
  if (auto whole = alphabet.find(text)) return Word{*whole};
  for (char c : text) {
    w.push_back(alphabet.at(std::string_view(&c, 1)));
  }
  return w;
}

}  // namespace autosemi
