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

#include "autosemi/suite.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "autosemi/decisions.hpp"
#include "autosemi/errors.hpp"
#include "autosemi/fixtures.hpp"

namespace autosemi {

namespace {

Word cat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<std::string> check_against_table(const CayleyTable& t, const std::string& label) {
  std::vector<std::string> bad;
  auto mismatch = [&](const std::string& what) { bad.push_back(label + ": " + what); };

  InterpretedAutomaticStructure s = from_cayley(t);
  BruteProperties p = brute_properties(t);

  // left zeros
  {
    std::set<std::size_t> expect(p.left_zeros.begin(), p.left_zeros.end());
    std::set<std::size_t> got;
    for (const Word& w : enumerate(left_zeros(s.structure()), kUnbounded, kUnbounded)) {
      if (w.size() != 1) {
        mismatch("left zero representative is not a single letter");
        continue;
      }
      got.insert(w[0]);
    }
    if (got != expect) mismatch("left zero set disagrees");
  }

  // zero
  {
    auto z = zero(s);
    if (z.has_value() != p.zero.has_value()) {
      mismatch("zero existence disagrees");
    } else if (z && *z != Word{static_cast<symbol_t>(*p.zero)}) {
      mismatch("zero representative disagrees");
    }
  }

  // identity and units
  {
    auto e = identity(s);
    if (e.has_value() != p.identity.has_value()) {
      mismatch("identity existence disagrees");
    } else if (e && *e != Word{static_cast<symbol_t>(*p.identity)}) {
      mismatch("identity representative disagrees");
    }
    if (e) {
      for (std::size_t x = 0; x < t.size(); ++x) {
        if (is_unit(s, {static_cast<symbol_t>(x)}) != p.is_unit[x]) {
          mismatch("unit verdict disagrees for " + t.name(x));
        }
      }
    }
  }

  if (is_right_cancellative(s) != p.right_cancellative) {
    mismatch("right cancellativity disagrees");
  }
  if (is_completely_simple(s) != p.completely_simple) {
    mismatch("complete simplicity disagrees");
  }
  if (is_completely_zero_simple(s).value != p.completely_zero_simple) {
    mismatch("complete zero-simplicity disagrees");
  }
  return bad;
}

std::vector<std::string> check_rees_roundtrip(const InterpretedAutomaticStructure& s, bool simple,
                                              const std::string& label) {
  std::vector<std::string> bad;
  auto mismatch = [&](const std::string& what) { bad.push_back(label + ": " + what); };

  ReesRepresentation r = simple ? rees_decomposition_simple(s) : rees_decomposition(s);
  // In the simple case the decomposition ran on the zero extension, so all
  // word problems are asked there.
  InterpretedAutomaticStructure frame = simple ? adjoin_zero(s) : s;

  std::vector<Word> group_words = enumerate(r.group.rep_lang(), 500, kUnbounded);
  if (group_words.empty()) {
    mismatch("empty subgroup language");
    return bad;
  }

  const std::size_t rows = r.row_idempotents.size();
  const std::size_t cols = r.col_idempotents.size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t l1 = 0; l1 < cols; ++l1) {
      for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t mu = 0; mu < cols; ++mu) {
          for (const Word& g : group_words) {
            for (const Word& h : group_words) {
              Word left = cat(r.element_word(i, g, l1), r.element_word(j, h, mu));
              const auto& entry = r.matrix_gamma[l1][j];
              if (!entry) {
                if (!word_problem(frame, left, r.zero_word)) {
                  mismatch("zero product disagrees");
                  return bad;
                }
              } else {
                Word middle = cat(cat(r.to_source_word(g), *entry), r.to_source_word(h));
                Word right = cat(cat(r.row_translates[i], middle), r.col_translates[mu]);
                if (!word_problem(frame, left, right)) {
                  mismatch("Rees product disagrees");
                  return bad;
                }
                Word gp = cat(cat(g, r.matrix[l1][j].value()), h);
                Word expect =
                    r.to_group_word(find_representative(frame, r.to_source_word(gp)));
                if (!word_problem(r.group, gp, expect)) {
                  mismatch("group word problem disagrees with the source");
                  return bad;
                }
              }
            }
          }
        }
      }
    }
  }
  return bad;
}

std::vector<std::pair<std::string, CayleyTable>> suite_instances(
    const OracleSuiteOptions& options) {
  std::vector<std::pair<std::string, CayleyTable>> instances = {
      {"trivial", trivial_table()},
      {"C2", cyclic_group_table(2)},
      {"semilattice", semilattice2_table()},
      {"left-zero", left_zero_table(2)},
      {"band-2x2", rectangular_band_table(2, 2)},
      {"B2", brandt_b2_table()},
  };

  std::uint64_t attempt = 0;
  std::size_t accepted = 0;
  while (accepted < options.random_count) {
    std::size_t points = 2 + attempt % 5;
    std::size_t gens = points >= 4 ? 1 : 1 + attempt % 2;
    CayleyTable t =
        random_semigroup(options.seed * 0x9e3779b97f4a7c15ull + attempt, points, gens);
    ++attempt;
    if (t.size() > options.max_order) continue;
    instances.emplace_back("random-" + std::to_string(attempt - 1), std::move(t));
    ++accepted;
  }
  return instances;
}

OracleSuiteResult run_oracle_suite(const OracleSuiteOptions& options, std::ostream* log) {
  OracleSuiteResult result;
  std::vector<std::pair<std::string, CayleyTable>> instances = suite_instances(options);

  for (const auto& [label, table] : instances) {
    ++result.instances;
    auto bad = check_against_table(table, label);
    result.mismatches.insert(result.mismatches.end(), bad.begin(), bad.end());

    if (options.check_rees && bad.empty()) {
      BruteProperties p = brute_properties(table);
      if (p.completely_zero_simple) {
        auto rb = check_rees_roundtrip(from_cayley(table), false, label);
        result.mismatches.insert(result.mismatches.end(), rb.begin(), rb.end());
        ++result.rees_checked;
      }
      if (p.completely_simple) {
        auto rb = check_rees_roundtrip(from_cayley(table), true, label);
        result.mismatches.insert(result.mismatches.end(), rb.begin(), rb.end());
        ++result.rees_checked;
      }
    }
    if (log) {
      *log << (bad.empty() ? "ok   " : "FAIL ") << label << " (order " << table.size() << ")\n";
    }
  }
  return result;
}

}  // namespace autosemi
