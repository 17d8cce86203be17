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

#include "autosemi/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "autosemi/errors.hpp"

namespace autosemi {

CayleyTable::CayleyTable(std::size_t n, std::vector<std::size_t> products,
                         std::vector<std::string> names)
    : n_(n), products_(std::move(products)), names_(std::move(names)) {
  if (products_.size() != n_ * n_) throw Error("multiplication table has the wrong shape");
  for (std::size_t p : products_) {
    if (p >= n_) throw Error("table entry out of range");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) names_.push_back("s" + std::to_string(i));
  }
  if (names_.size() != n_) throw Error("expected one name per element");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (product(product(i, j), k) != product(i, product(j, k))) {
          throw NotAssociativeError("(" + names_[i] + "·" + names_[j] + ")·" + names_[k] +
                                    " differs from " + names_[i] + "·(" + names_[j] + "·" +
                                    names_[k] + ")");
        }
      }
    }
  }
}

InterpretedAutomaticStructure from_cayley(const CayleyTable& t) {
  Alphabet a(t.names());
  std::vector<Word> letters;
  for (symbol_t g = 0; g < t.size(); ++g) letters.push_back({g});
  FiniteAutomaton lang = FiniteAutomaton::from_words(a, letters);

  SynchronousAutomaton equality = diagonal(lang);
  std::vector<SynchronousAutomaton> multipliers;
  for (std::size_t g = 0; g < t.size(); ++g) {
    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t b = 0; b < t.size(); ++b) {
      pairs.push_back({{static_cast<symbol_t>(b)},
                       {static_cast<symbol_t>(t.product(b, g))}});
    }
    multipliers.push_back(relation_from_pairs(a, pairs));
  }

  GeneratorAssignment assignment;
  for (symbol_t g = 0; g < t.size(); ++g) assignment.images.push_back({g});

  StructureFlags flags;
  flags.has_uniqueness = true;
  flags.generators_embedded = true;
  return InterpretedAutomaticStructure(
      PreAutomaticStructure(a, std::move(lang), std::move(equality), std::move(multipliers)),
      std::move(assignment), flags);
}

namespace {

// Principal two-sided ideal {a} ∪ Sa ∪ aS ∪ SaS as a bitmask.
std::vector<char> principal_ideal(const CayleyTable& t, std::size_t a) {
  const std::size_t n = t.size();
  std::vector<char> in(n, 0);
  in[a] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    in[t.product(x, a)] = 1;
    in[t.product(a, x)] = 1;
    for (std::size_t y = 0; y < n; ++y) in[t.product(t.product(x, a), y)] = 1;
  }
  return in;
}

std::vector<std::size_t> classes_from_keys(const std::vector<std::vector<char>>& keys) {
  std::vector<std::size_t> cls(keys.size());
  std::vector<const std::vector<char>*> seen;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < seen.size(); ++j) {
      if (*seen[j] == keys[i]) {
        cls[i] = j;
        found = true;
        break;
      }
    }
    if (!found) {
      cls[i] = seen.size();
      seen.push_back(&keys[i]);
    }
  }
  return cls;
}

}  // namespace

BruteProperties brute_properties(const CayleyTable& t) {
  const std::size_t n = t.size();
  BruteProperties p;

  for (std::size_t e = 0; e < n; ++e) {
    if (t.product(e, e) == e) p.idempotents.push_back(e);
  }
  for (std::size_t z = 0; z < n; ++z) {
    bool left = true, right = true;
    for (std::size_t x = 0; x < n; ++x) {
      left &= t.product(z, x) == z;
      right &= t.product(x, z) == z;
    }
    if (left) p.left_zeros.push_back(z);
    if (right) p.right_zeros.push_back(z);
    if (left && right) p.zero = z;
  }
  for (std::size_t e = 0; e < n; ++e) {
    bool left = true, right = true;
    for (std::size_t x = 0; x < n; ++x) {
      left &= t.product(e, x) == x;
      right &= t.product(x, e) == x;
    }
    if (left && right) p.identity = e;
  }
  p.is_unit.assign(n, false);
  if (p.identity) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (t.product(u, v) == *p.identity && t.product(v, u) == *p.identity) {
          p.is_unit[u] = true;
        }
      }
    }
  }

  p.right_cancellative = true;
  p.left_cancellative = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::set<std::size_t> right_img, left_img;
    for (std::size_t x = 0; x < n; ++x) {
      right_img.insert(t.product(x, a));
      left_img.insert(t.product(a, x));
    }
    if (right_img.size() != n) p.right_cancellative = false;
    if (left_img.size() != n) p.left_cancellative = false;
  }

  // Left reductive: distinct elements act differently by multiplication on
  // the right of every x, i.e. the columns x -> x·s are pairwise distinct.
  p.left_reductive = true;
  for (std::size_t s = 0; s < n && p.left_reductive; ++s) {
    for (std::size_t r = s + 1; r < n && p.left_reductive; ++r) {
      bool same = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (t.product(x, s) != t.product(x, r)) {
          same = false;
          break;
        }
      }
      if (same) p.left_reductive = false;
    }
  }

  // Green's relations via principal one-sided ideals.
  std::vector<std::vector<char>> rkeys(n, std::vector<char>(n, 0)),
      lkeys(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    rkeys[a][a] = 1;
    lkeys[a][a] = 1;
    for (std::size_t x = 0; x < n; ++x) {
      rkeys[a][t.product(a, x)] = 1;
      lkeys[a][t.product(x, a)] = 1;
    }
  }
  p.r_class = classes_from_keys(rkeys);
  p.l_class = classes_from_keys(lkeys);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hids;
  p.h_class.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto [it, fresh] = hids.emplace(std::make_pair(p.r_class[a], p.l_class[a]), hids.size());
    p.h_class[a] = it->second;
  }

  // D = join of R and L.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.r_class[a] == p.r_class[b] || p.l_class[a] == p.l_class[b]) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::map<std::size_t, std::size_t> dids;
  p.d_class.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto [it, fresh] = dids.emplace(find(a), dids.size());
    p.d_class[a] = it->second;
  }

  // Simplicity from the ideal structure.
  p.simple = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> ideal = principal_ideal(t, a);
    if (std::count(ideal.begin(), ideal.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
      p.simple = false;
      break;
    }
  }
  auto has_primitive = [&](bool with_zero) {
    for (std::size_t e : p.idempotents) {
      if (with_zero && e == *p.zero) continue;
      bool primitive = true;
      for (std::size_t f : p.idempotents) {
        if (with_zero && f == *p.zero) continue;
        if (t.product(e, f) == f && t.product(f, e) == f && f != e) {
          primitive = false;
          break;
        }
      }
      if (primitive) return true;
    }
    return false;
  };
  p.completely_simple = p.simple && has_primitive(false);

  p.zero_simple = false;
  if (p.zero) {
    bool squares_to_zero = true;
    for (std::size_t a = 0; a < n && squares_to_zero; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (t.product(a, b) != *p.zero) {
          squares_to_zero = false;
          break;
        }
      }
    }
    bool only_zero_ideal = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == *p.zero) continue;
      std::vector<char> ideal = principal_ideal(t, a);
      if (std::count(ideal.begin(), ideal.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
        only_zero_ideal = false;
        break;
      }
    }
    p.zero_simple = n > 1 && only_zero_ideal && !squares_to_zero;
  }
  p.completely_zero_simple = p.zero_simple && has_primitive(true);

  return p;
}

BruteRees brute_rees(const CayleyTable& t) {
  BruteProperties p = brute_properties(t);
  if (!p.completely_simple && !p.completely_zero_simple) {
    throw NotCzsError("table is neither completely simple nor completely zero-simple");
  }
  BruteRees r;
  r.zero = p.completely_zero_simple ? p.zero : std::nullopt;

  std::vector<std::size_t> nonzero;
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!r.zero || a != *r.zero) nonzero.push_back(a);
  }

  std::map<std::size_t, std::size_t> row_id, col_id;
  for (std::size_t a : nonzero) {
    auto [rit, rfresh] = row_id.emplace(p.r_class[a], row_id.size());
    if (rfresh) r.rows.emplace_back();
    r.rows[rit->second].push_back(a);
    auto [cit, cfresh] = col_id.emplace(p.l_class[a], col_id.size());
    if (cfresh) r.cols.emplace_back();
    r.cols[cit->second].push_back(a);
  }

  // Base point: the first nonzero idempotent.
  std::size_t e0 = t.size();
  for (std::size_t e : p.idempotents) {
    if (!r.zero || e != *r.zero) {
      e0 = e;
      break;
    }
  }
  if (e0 == t.size()) throw NotCzsError("no nonzero idempotent");
  std::size_t row0 = row_id.at(p.r_class[e0]);
  std::size_t col0 = col_id.at(p.l_class[e0]);
  r.group_identity = e0;
  for (std::size_t a : nonzero) {
    if (p.r_class[a] == p.r_class[e0] && p.l_class[a] == p.l_class[e0]) {
      r.group_elements.push_back(a);
    }
  }

  auto pick = [&](std::size_t row_cls, std::size_t col_cls) -> std::size_t {
    for (std::size_t a : nonzero) {
      if (row_id.at(p.r_class[a]) == row_cls && col_id.at(p.l_class[a]) == col_cls) return a;
    }
    throw NotCzsError("empty H-class in a completely (zero-)simple table");
  };
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    r.r_elems.push_back(i == row0 ? e0 : pick(i, col0));
  }
  for (std::size_t c = 0; c < r.cols.size(); ++c) {
    r.q_elems.push_back(c == col0 ? e0 : pick(row0, c));
  }

  r.sandwich.assign(r.cols.size(), std::vector<std::optional<std::size_t>>(r.rows.size()));
  for (std::size_t c = 0; c < r.cols.size(); ++c) {
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      std::size_t prod = t.product(r.q_elems[c], r.r_elems[i]);
      if (!r.zero || prod != *r.zero) r.sandwich[c][i] = prod;
    }
  }

  // Re-multiply everything through the coordinates and compare.
  auto coords = [&](std::size_t a) {
    std::size_t i = row_id.at(p.r_class[a]);
    std::size_t c = col_id.at(p.l_class[a]);
    // group part: g with a = r_i g q_c; search the group H-class
    for (std::size_t g : r.group_elements) {
      if (t.product(t.product(r.r_elems[i], g), r.q_elems[c]) == a) {
        return std::tuple<std::size_t, std::size_t, std::size_t>(i, g, c);
      }
    }
    throw NotCzsError("element has no Rees coordinates");
  };
  for (std::size_t a : nonzero) {
    auto [i, g, lam] = coords(a);
    for (std::size_t b : nonzero) {
      auto [j, h, mu] = coords(b);
      std::size_t direct = t.product(a, b);
      auto entry = r.sandwich[lam][j];
      if (!entry) {
        if (!r.zero || direct != *r.zero) throw NotCzsError("Rees product disagrees (zero case)");
      } else {
        std::size_t via =
            t.product(t.product(r.r_elems[i], t.product(t.product(g, *entry), h)), r.q_elems[mu]);
        if (via != direct) throw NotCzsError("Rees product disagrees");
      }
    }
  }
  return r;
}

CayleyTable random_semigroup(std::uint64_t seed, std::size_t points, std::size_t generator_count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, points - 1);

  using Map = std::vector<std::size_t>;
  std::vector<Map> elements;
  std::map<Map, std::size_t> index;
  auto intern = [&](const Map& m) {
    auto [it, fresh] = index.emplace(m, elements.size());
    if (fresh) elements.push_back(m);
    return it->second;
  };

  for (std::size_t g = 0; g < generator_count; ++g) {
    Map m(points);
    for (std::size_t i = 0; i < points; ++i) m[i] = pick(rng);
    intern(m);
  }
  auto compose_maps = [&](const Map& f, const Map& g) {
    Map out(points);
    for (std::size_t i = 0; i < points; ++i) out[i] = g[f[i]];
    return out;
  };
  for (std::size_t before = 0; before != elements.size();) {
    before = elements.size();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        Map prod = compose_maps(elements[i], elements[j]);
        intern(prod);
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at(compose_maps(elements[i], elements[j]));
    }
  }
  return CayleyTable(n, std::move(table));
}

CayleyTable adjoin_zero_table(const CayleyTable& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> table((n + 1) * (n + 1), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * (n + 1) + j] = t.product(i, j);
  }
  std::vector<std::string> names = t.names();
  names.push_back("zz");
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    if (names[i] == "zz") throw Error("name collision when adjoining a zero");
  }
  return CayleyTable(n + 1, std::move(table), std::move(names));
}

}  // namespace autosemi
