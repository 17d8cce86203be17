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

#include "autosemi/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "autosemi/decisions.hpp"
#include "autosemi/errors.hpp"
#include "autosemi/serialize.hpp"
#include "autosemi/suite.hpp"
#include "autosemi/turing.hpp"

namespace autosemi {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

using nlohmann::json;

struct Output {
  std::ostream& out;
  bool as_json;

  // Emits a finished command result: text lines or a single JSON object.
  void emit(const json& doc, const std::string& text) {
    if (as_json) {
      out << doc.dump(1) << '\n';
    } else {
      out << text;
    }
  }
};

std::string language_summary(const Alphabet& a, const FiniteAutomaton& lang) {
  std::ostringstream text;
  if (is_empty(lang)) return "(empty)";
  bool finite = is_finite(lang);
  auto words = enumerate(lang, 12, kUnbounded);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) text << ' ';
    std::string name = word_name(a, words[i]);
    text << (name.empty() ? "(empty word)" : name);
  }
  if (!finite || words.size() == 12) text << " ...";
  text << (finite ? "" : " (infinite)");
  return text.str();
}

json language_json(const Alphabet& a, const FiniteAutomaton& lang) {
  json doc;
  doc["empty"] = is_empty(lang);
  doc["finite"] = is_finite(lang);
  json sample = json::array();
  for (const Word& w : enumerate(lang, 12, kUnbounded)) sample.push_back(word_name(a, w));
  doc["sample"] = std::move(sample);
  return doc;
}

void write_document(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc.dump(1) << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot open " + out_path + " for writing");
    f << doc.dump(1) << '\n';
  }
}

std::vector<std::string> split_input_word(const std::string& text) {
  // TM inputs share the CLI word syntax: '.'-separated or per character.
  std::vector<std::string> out;
  if (text.empty()) return out;
  if (text.find('.') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      out.push_back(dot == std::string::npos ? text.substr(start)
                                             : text.substr(start, dot - start));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : text) out.emplace_back(1, c);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decision procedures for semigroups given by synchronous automatic structures"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string structure_path;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("-s,--structure", structure_path, "structure document (JSON)");

  std::string word_u, word_v, out_path, file_path;
  std::size_t max_n = 50;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  bool simple = false;
  std::string property_name;

  auto* validate = app.add_subcommand("validate", "check the structure axioms");
  auto* repr = app.add_subcommand("repr", "representative of a word");
  repr->add_option("word", word_u)->required();
  auto* word_eq = app.add_subcommand("word-eq", "do two words name the same element");
  word_eq->add_option("u", word_u)->required();
  word_eq->add_option("v", word_v)->required();
  auto* property = app.add_subcommand("property", "decide a semigroup property");
  property->add_option("name", property_name)
      ->required()
      ->check(CLI::IsMember({"left-zeros", "zero", "identity", "right-cancellative", "czs", "cs"}));
  auto* left_inv = app.add_subcommand("left-inverses", "left inverses of a word");
  left_inv->add_option("word", word_u)->required();
  auto* unit = app.add_subcommand("unit", "is the word a unit");
  unit->add_option("word", word_u)->required();
  auto* trich = app.add_subcommand("trichotomy", "classify left inverses against an idempotent");
  trich->add_option("word", word_u)->required();
  trich->add_option("idempotent", word_v)->required();
  auto* cross = app.add_subcommand("cross-section", "rebuild with unique shortlex representatives");
  cross->add_option("--out", out_path);
  auto* azero = app.add_subcommand("adjoin-zero", "adjoin a fresh zero");
  azero->add_option("--out", out_path);
  auto* rees = app.add_subcommand("rees", "Rees matrix decomposition");
  rees->add_flag("--simple", simple, "treat the semigroup as completely simple (no zero)");
  auto* from_cayley_cmd = app.add_subcommand("from-cayley", "structure from a multiplication table");
  from_cayley_cmd->add_option("file", file_path)->required();
  from_cayley_cmd->add_option("--out", out_path);
  auto* from_tm = app.add_subcommand("from-tm", "structure of a machine's rewriting monoid");
  from_tm->add_option("file", file_path)->required();
  from_tm->add_option("--out", out_path);
  auto* rm_rules = app.add_subcommand("rm-rules", "print the rewriting rules of a machine");
  rm_rules->add_option("file", file_path)->required();
  auto* right_inv = app.add_subcommand("right-invert", "search for a right inverse exponent");
  right_inv->add_option("file", file_path)->required();
  right_inv->add_option("word", word_u)->required();
  right_inv->add_option("--max-n", max_n);
  auto* oracle = app.add_subcommand("oracle-check", "decision procedures vs. brute force");
  oracle->add_option("--seed", seed);
  oracle->add_option("--count", count);

  std::vector<const char*> ptrs;
  ptrs.push_back("autosemi");
  for (const auto& a : args) ptrs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kYes;
    }
    err << "error: " << e.what() << '\n';
    return kError;
  }

  Output output{out, as_json};
  auto need_structure = [&]() -> InterpretedAutomaticStructure {
    if (structure_path.empty()) {
      throw ParseError("this command needs --structure <file>");
    }
    return structure_from_file(structure_path);
  };

  try {
    if (validate->parsed()) {
      auto s = need_structure();
      auto diags = sanity_validate(s);
      json doc{{"command", "validate"}, {"valid", diags.empty()}};
      json list = json::array();
      std::ostringstream text;
      for (const auto& d : diags) {
        list.push_back(d.message);
        text << d.message << '\n';
      }
      doc["diagnostics"] = std::move(list);
      if (diags.empty()) text << "valid\n";
      output.emit(doc, text.str());
      return diags.empty() ? kYes : kNo;
    }

    if (repr->parsed()) {
      auto s = need_structure();
      Word w = find_representative(s, parse_word(s.generators(), word_u));
      std::string name = word_name(s.generators(), w);
      output.emit({{"command", "repr"}, {"representative", name}},
                  (name.empty() ? "(empty word)" : name) + "\n");
      return kYes;
    }

    if (word_eq->parsed()) {
      auto s = need_structure();
      bool equal = word_problem(s, parse_word(s.generators(), word_u),
                                parse_word(s.generators(), word_v));
      output.emit({{"command", "word-eq"}, {"equal", equal}},
                  equal ? "equal\n" : "different\n");
      return equal ? kYes : kNo;
    }

    if (property->parsed()) {
      auto s = need_structure();
      if (property_name == "left-zeros") {
        FiniteAutomaton lz = left_zeros(s.structure());
        bool yes = !is_empty(lz);
        output.emit({{"command", "property"},
                     {"name", property_name},
                     {"value", yes},
                     {"language", language_json(s.generators(), lz)}},
                    (yes ? "left zeros: " + language_summary(s.generators(), lz)
                         : "no left zero") +
                        "\n");
        return yes ? kYes : kNo;
      }
      if (property_name == "zero") {
        FiniteAutomaton lz = left_zeros(s.structure());
        if (is_empty(lz)) {
          output.emit({{"command", "property"}, {"name", property_name}, {"value", false}},
                      "no left zero\n");
          return kNo;
        }
        auto z = zero(s);
        if (!z) {
          output.emit({{"command", "property"}, {"name", property_name}, {"value", false}},
                      "no zero\n");
          return kNo;
        }
        output.emit({{"command", "property"},
                     {"name", property_name},
                     {"value", true},
                     {"word", word_name(s.generators(), *z)}},
                    "zero: " + word_name(s.generators(), *z) + "\n");
        return kYes;
      }
      if (property_name == "identity") {
        auto e = identity(s);
        json doc{{"command", "property"}, {"name", property_name}, {"value", e.has_value()}};
        if (e) {
          std::string name = word_name(s.generators(), *e);
          doc["word"] = name;
          output.emit(doc, "identity: " + (name.empty() ? "(empty word)" : name) + "\n");
          return kYes;
        }
        output.emit(doc, "not a monoid\n");
        return kNo;
      }
      if (property_name == "right-cancellative") {
        bool yes = is_right_cancellative(s);
        output.emit({{"command", "property"}, {"name", property_name}, {"value", yes}},
                    yes ? "right cancellative\n" : "not right cancellative\n");
        return yes ? kYes : kNo;
      }
      if (property_name == "czs") {
        auto v = is_completely_zero_simple(s);
        json doc{{"command", "property"}, {"name", property_name}, {"value", v.value}};
        if (!v.value) doc["reason"] = v.reason;
        output.emit(doc, v.value ? "completely zero-simple\n"
                                 : "not completely zero-simple: " + v.reason + "\n");
        return v.value ? kYes : kNo;
      }
      // cs
      bool yes = is_completely_simple(s);
      output.emit({{"command", "property"}, {"name", property_name}, {"value", yes}},
                  yes ? "completely simple\n" : "not completely simple\n");
      return yes ? kYes : kNo;
    }

    if (left_inv->parsed()) {
      auto s = need_structure();
      FiniteAutomaton lang = left_inverses(s, parse_word(s.generators(), word_u));
      bool yes = !is_empty(lang);
      output.emit({{"command", "left-inverses"},
                   {"value", yes},
                   {"language", language_json(s.generators(), lang)}},
                  (yes ? "left inverses: " + language_summary(s.generators(), lang)
                       : "no left inverse") +
                      "\n");
      return yes ? kYes : kNo;
    }

    if (unit->parsed()) {
      auto s = need_structure();
      bool yes = is_unit(s, parse_word(s.generators(), word_u));
      output.emit({{"command", "unit"}, {"value", yes}}, yes ? "unit\n" : "not a unit\n");
      return yes ? kYes : kNo;
    }

    if (trich->parsed()) {
      auto s = need_structure();
      Trichotomy t = inverse_trichotomy(s, parse_word(s.generators(), word_u),
                                        parse_word(s.generators(), word_v));
      const char* tag = t.tag == Trichotomy::Tag::InfinitelyManyLeftInverses ? "A"
                        : t.tag == Trichotomy::Tag::FinitelyManyWithRightInverse ? "B"
                                                                                 : "C";
      json witnesses = json::array();
      std::ostringstream text;
      text << "case " << tag;
      for (const Word& w : t.witnesses) {
        witnesses.push_back(word_name(s.generators(), w));
        text << ' ' << word_name(s.generators(), w);
      }
      text << '\n';
      output.emit({{"command", "trichotomy"}, {"case", tag}, {"witnesses", witnesses}},
                  text.str());
      return kYes;
    }

    if (cross->parsed()) {
      auto s = need_structure();
      write_document(structure_to_json(to_cross_section(s)), out_path, out);
      return kYes;
    }

    if (azero->parsed()) {
      auto s = need_structure();
      write_document(structure_to_json(adjoin_zero(s)), out_path, out);
      return kYes;
    }

    if (rees->parsed()) {
      auto s = need_structure();
      try {
        ReesRepresentation r = simple ? rees_decomposition_simple(s) : rees_decomposition(s);
        Alphabet source = simple ? adjoin_zero(s).generators() : s.generators();
        write_document(rees_to_json(r, source), out_path, out);
        return kYes;
      } catch (const NotCzsError& e) {
        output.emit({{"command", "rees"}, {"value", false}, {"reason", e.what()}},
                    std::string(e.what()) + "\n");
        return kNo;
      } catch (const NotCompletelySimpleError& e) {
        output.emit({{"command", "rees"}, {"value", false}, {"reason", e.what()}},
                    std::string(e.what()) + "\n");
        return kNo;
      }
    }

    if (from_cayley_cmd->parsed()) {
      write_document(structure_to_json(from_cayley(cayley_from_file(file_path))), out_path, out);
      return kYes;
    }

    if (from_tm->parsed()) {
      write_document(structure_to_json(tm_structure(parse_tm_file(file_path))), out_path, out);
      return kYes;
    }

    if (rm_rules->parsed()) {
      TuringMachine m = parse_tm_file(file_path);
      StringRewritingSystem r = build_rm(m);
      json rules = json::array();
      std::ostringstream text;
      for (const RewriteRule& rule : r.rules()) {
        std::string lhs = word_name(r.alphabet(), rule.lhs);
        std::string rhs = word_name(r.alphabet(), rule.rhs);
        rules.push_back({{"lhs", lhs}, {"rhs", rhs}});
        text << lhs << " -> " << (rhs.empty() ? "(empty)" : rhs) << '\n';
      }
      output.emit({{"command", "rm-rules"}, {"rules", rules}}, text.str());
      return kYes;
    }

    if (right_inv->parsed()) {
      TuringMachine m = parse_tm_file(file_path);
      auto n = right_invert_search(m, split_input_word(word_u), max_n);
      if (n) {
        output.emit({{"command", "right-invert"}, {"n", *n}},
                    "right inverse: d^" + std::to_string(*n) + "\n");
        return kYes;
      }
      output.emit({{"command", "right-invert"}, {"n", nullptr}},
                  "inconclusive up to n = " + std::to_string(max_n) + "\n");
      return kError;  // a semi-decision: absence proves nothing
    }

    if (oracle->parsed()) {
      OracleSuiteOptions options;
      options.seed = seed;
      options.random_count = count;
      OracleSuiteResult result = run_oracle_suite(options, as_json ? nullptr : &out);
      json doc{{"command", "oracle-check"},
               {"instances", result.instances},
               {"rees_checked", result.rees_checked},
               {"mismatches", result.mismatches}};
      std::ostringstream text;
      text << result.instances << " instances, " << result.rees_checked
           << " Rees round trips, " << result.mismatches.size() << " mismatches\n";
      for (const auto& m : result.mismatches) text << "  " << m << '\n';
      output.emit(doc, text.str());
      return result.ok() ? kYes : kNo;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  err << "error: no command\n";
  return kError;
}

}  // namespace autosemi
