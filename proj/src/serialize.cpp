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

#include "autosemi/serialize.hpp"

#include <fstream>
#include <sstream>

#include "autosemi/errors.hpp"

namespace autosemi {

using nlohmann::json;

namespace {

json word_to_json(const Alphabet& a, const Word& w) {
  json out = json::array();
  for (symbol_t s : w) out.push_back(a.name(s));
  return out;
}

Word word_from_json(const Alphabet& a, const json& doc) {
  if (!doc.is_array()) throw ParseError("word must be an array of symbol names");
  Word w;
  for (const auto& item : doc) w.push_back(a.at(item.get<std::string>()));
  return w;
}

json pair_label(const PaddedPairAlphabet& pa, symbol_t p) {
  auto [x, y] = pa.components(p);
  auto track = [&](symbol_t c) {
    return c == pa.pad() ? std::string("$") : pa.base().name(c);
  };
  return json::array({track(x), track(y)});
}

symbol_t pair_label_from_json(const PaddedPairAlphabet& pa, const json& doc) {
  if (!doc.is_array() || doc.size() != 2) {
    throw ParseError("pair symbol must be a two-element array");
  }
  auto track = [&](const json& j) -> symbol_t {
    std::string name = j.get<std::string>();
    if (name == "$") return pa.pad();
    return pa.base().at(name);
  };
  return pa.pair(track(doc[0]), track(doc[1]));
}

template <typename LabelOut>
json machine_to_json(const FiniteAutomaton& m, LabelOut&& label) {
  json doc;
  doc["states"] = m.num_states();
  doc["initial"] = m.initial();
  doc["accepting"] = m.accepting();
  json ts = json::array();
  for (const Transition& t : m.transitions()) {
    ts.push_back(json::array({t.from, label(t.label), t.to}));
  }
  doc["transitions"] = std::move(ts);
  if (!m.epsilon_moves().empty()) {
    json eps = json::array();
    for (auto [a, b] : m.epsilon_moves()) eps.push_back(json::array({a, b}));
    doc["epsilon"] = std::move(eps);
  }
  return doc;
}

template <typename LabelIn>
FiniteAutomaton machine_from_json(const json& doc, const Alphabet& alphabet, LabelIn&& label) {
  state_t n = doc.at("states").get<state_t>();
  std::vector<state_t> initial = doc.at("initial").get<std::vector<state_t>>();
  std::vector<state_t> accepting = doc.at("accepting").get<std::vector<state_t>>();
  std::vector<Transition> ts;
  for (const auto& t : doc.at("transitions")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("transition must be [from, label, to]");
    ts.push_back({t[0].get<state_t>(), label(t[1]), t[2].get<state_t>()});
  }
  std::vector<std::pair<state_t, state_t>> eps;
  if (doc.contains("epsilon")) {
    for (const auto& e : doc.at("epsilon")) {
      eps.emplace_back(e[0].get<state_t>(), e[1].get<state_t>());
    }
  }
  return FiniteAutomaton(alphabet, n, std::move(initial), std::move(accepting), std::move(ts),
                         std::move(eps));
}

}  // namespace

json automaton_to_json(const FiniteAutomaton& m) {
  const Alphabet& a = m.alphabet();
  return machine_to_json(m, [&](symbol_t s) { return a.name(s); });
}

FiniteAutomaton automaton_from_json(const json& doc, const Alphabet& alphabet) {
  return machine_from_json(doc, alphabet,
                           [&](const json& j) { return alphabet.at(j.get<std::string>()); });
}

json relation_to_json(const SynchronousAutomaton& r) {
  const PaddedPairAlphabet& pa = r.pair_alphabet();
  return machine_to_json(r.machine(), [&](symbol_t s) { return pair_label(pa, s); });
}

SynchronousAutomaton relation_from_json(const json& doc, const Alphabet& base) {
  PaddedPairAlphabet pa(base);
  FiniteAutomaton m = machine_from_json(doc, pa.pairs(),
                                        [&](const json& j) { return pair_label_from_json(pa, j); });
  return SynchronousAutomaton(base, std::move(m));
}

json structure_to_json(const InterpretedAutomaticStructure& s) {
  const Alphabet& a = s.generators();
  json doc;
  doc["format"] = "autosemi-structure";
  doc["version"] = 1;
  doc["alphabet"] = a.names();
  doc["rep_lang"] = automaton_to_json(s.rep_lang());
  doc["equality"] = relation_to_json(s.equality());
  json mult = json::object();
  for (symbol_t g = 0; g < a.size(); ++g) {
    mult[a.name(g)] = relation_to_json(s.multiplier_of(g));
  }
  doc["multipliers"] = std::move(mult);
  json assign = json::object();
  for (symbol_t g = 0; g < a.size(); ++g) {
    assign[a.name(g)] = word_to_json(a, s.assignment().of(g));
  }
  doc["assignment"] = std::move(assign);
  doc["flags"] = {{"uniqueness", s.flags().has_uniqueness},
                  {"generators_embedded", s.flags().generators_embedded},
                  {"monoid_with_epsilon", s.flags().monoid_with_epsilon}};
  return doc;
}

InterpretedAutomaticStructure structure_from_json(const json& doc) {
  if (doc.value("format", "") != "autosemi-structure") {
    throw ParseError("not an autosemi structure document");
  }
  Alphabet a(doc.at("alphabet").get<std::vector<std::string>>());
  FiniteAutomaton rep = automaton_from_json(doc.at("rep_lang"), a);
  SynchronousAutomaton equality = relation_from_json(doc.at("equality"), a);
  std::vector<SynchronousAutomaton> multipliers;
  const json& mult = doc.at("multipliers");
  for (symbol_t g = 0; g < a.size(); ++g) {
    if (!mult.contains(a.name(g))) {
      throw ParseError("missing multiplier for generator " + a.name(g));
    }
    multipliers.push_back(relation_from_json(mult.at(a.name(g)), a));
  }
  GeneratorAssignment assignment;
  if (doc.contains("assignment")) {
    const json& assign = doc.at("assignment");
    for (symbol_t g = 0; g < a.size(); ++g) {
      if (!assign.contains(a.name(g))) {
        throw ParseError("missing assigned representative for generator " + a.name(g));
      }
      assignment.images.push_back(word_from_json(a, assign.at(a.name(g))));
    }
  } else {
    for (symbol_t g = 0; g < a.size(); ++g) assignment.images.push_back({g});
  }
  StructureFlags flags;
  if (doc.contains("flags")) {
    const json& f = doc.at("flags");
    flags.has_uniqueness = f.value("uniqueness", false);
    flags.generators_embedded = f.value("generators_embedded", false);
    flags.monoid_with_epsilon = f.value("monoid_with_epsilon", false);
  }
  return InterpretedAutomaticStructure(
      PreAutomaticStructure(a, std::move(rep), std::move(equality), std::move(multipliers)),
      std::move(assignment), flags);
}

json rees_to_json(const ReesRepresentation& r, const Alphabet& source) {
  json doc;
  doc["zero"] = word_name(source, r.zero_word);
  json rows = json::array();
  for (const auto& row : r.row_idempotents) {
    json names = json::array();
    for (const Word& w : row) names.push_back(word_name(source, w));
    rows.push_back(std::move(names));
  }
  doc["rows"] = std::move(rows);
  json cols = json::array();
  for (const auto& col : r.col_idempotents) {
    json names = json::array();
    for (const Word& w : col) names.push_back(word_name(source, w));
    cols.push_back(std::move(names));
  }
  doc["cols"] = std::move(cols);
  doc["base_row"] = r.base_row;
  doc["base_col"] = r.base_col;
  json rt = json::array(), ct = json::array();
  for (const Word& w : r.row_translates) rt.push_back(word_name(source, w));
  for (const Word& w : r.col_translates) ct.push_back(word_name(source, w));
  doc["row_translates"] = std::move(rt);
  doc["col_translates"] = std::move(ct);

  const Alphabet& delta = r.group.generators();
  json matrix = json::array();
  for (const auto& row : r.matrix) {
    json jrow = json::array();
    for (const auto& entry : row) {
      if (entry) {
        jrow.push_back(word_name(delta, *entry));
      } else {
        jrow.push_back(nullptr);
      }
    }
    matrix.push_back(std::move(jrow));
  }
  doc["matrix"] = std::move(matrix);
  doc["group"] = structure_to_json(r.group);
  json gens = json::array();
  for (const auto& gd : r.generator_data) {
    gens.push_back({{"generator", source.name(gd.generator)},
                    {"row", gd.row},
                    {"col", gd.col},
                    {"factor", word_name(source, gd.group_factor)}});
  }
  doc["generators"] = std::move(gens);
  return doc;
}

CayleyTable cayley_from_stream(std::istream& in) {
  std::vector<std::string> names;
  std::string line;
  std::size_t n = 0;
  std::vector<std::size_t> entries;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "names:") {
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      continue;
    }
    if (n == 0) {
      try {
        n = std::stoul(first);
      } catch (...) {
        throw ParseError("expected the element count, got " + first);
      }
      continue;
    }
    entries.push_back(std::stoul(first));
    std::size_t v;
    while (ls >> v) entries.push_back(v);
  }
  if (n == 0) throw ParseError("missing element count");
  if (entries.size() != n * n) {
    throw ParseError("expected " + std::to_string(n * n) + " table entries, got " +
                     std::to_string(entries.size()));
  }
  return CayleyTable(n, std::move(entries), std::move(names));
}

void cayley_to_stream(const CayleyTable& t, std::ostream& out) {
  out << "names:";
  for (std::size_t i = 0; i < t.size(); ++i) out << ' ' << t.name(i);
  out << '\n' << t.size() << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j) out << ' ';
      out << t.product(i, j);
    }
    out << '\n';
  }
}

CayleyTable cayley_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return cayley_from_stream(in);
}

InterpretedAutomaticStructure structure_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return structure_from_json(doc);
}

void structure_to_file(const InterpretedAutomaticStructure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << structure_to_json(s).dump(1) << '\n';
}

}  // namespace autosemi
