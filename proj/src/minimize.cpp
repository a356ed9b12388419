// Copyright 2026 The qsweep Authors
//
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

#include "qsweep/minimize.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "qsweep/error.hpp"

namespace qsweep {
namespace {

std::uint64_t key(std::uint32_t care, std::uint32_t value) {
  return (std::uint64_t{care} << 32) | value;
}

// Fixed-width bitset over prime implicant indices.
class IndexSet {
 public:
  explicit IndexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool intersects(const IndexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  bool subset_of(const IndexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// Drops duplicates and every set that strictly contains another one.
void absorb(std::vector<IndexSet>& sets) {
  std::vector<std::pair<std::size_t, IndexSet>> sized;
  sized.reserve(sets.size());
  for (auto& s : sets) sized.emplace_back(s.size(), std::move(s));
  std::sort(sized.begin(), sized.end());
  sized.erase(std::unique(sized.begin(), sized.end()), sized.end());
  sets.clear();
  for (auto& [n, s] : sized) {
    const bool absorbed = std::any_of(sets.begin(), sets.end(),
                                      [&](const IndexSet& kept) { return kept.subset_of(s); });
    if (!absorbed) sets.push_back(std::move(s));
  }
}

// Size of a greedy cover; any minimum cover is at most this large.
std::size_t greedy_cover_size(const std::vector<IndexSet>& clauses, std::size_t n_pis) {
  std::vector<bool> satisfied(clauses.size(), false);
  std::size_t remaining = clauses.size();
  std::size_t picked = 0;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t p = 0; p < n_pis; ++p) {
      std::size_t gain = 0;
      for (std::size_t c = 0; c < clauses.size(); ++c) {
        if (!satisfied[c] && clauses[c].contains(p)) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = p;
      }
    }
    if (best_gain == 0) throw InternalError("greedy cover stalled");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      if (!satisfied[c] && clauses[c].contains(best)) {
        satisfied[c] = true;
        --remaining;
      }
    }
    ++picked;
  }
  return picked;
}

void validate_configs(std::span<const std::uint32_t> configs, std::size_t k, const char* what) {
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (auto c : configs) {
    if (c >= limit) {
      throw DataError(std::string(what) + " configuration " + std::to_string(c) +
                      " does not fit in " + std::to_string(k) + " conditions");
    }
  }
}

}  // namespace

std::vector<Implicant> find_prime_implicants(std::span<const std::uint32_t> on,
                                             std::span<const std::uint32_t> dc,
                                             std::size_t condition_count) {
  const std::size_t k = condition_count;
  if (k == 0) throw DataError("minimization needs at least one condition");
  if (k > kMaxConditions) {
    throw DataError("too many conditions for exact minimization (limit " +
                    std::to_string(kMaxConditions) + ")");
  }
  validate_configs(on, k, "on-set");
  validate_configs(dc, k, "don't-care");
  const std::unordered_set<std::uint32_t> on_set(on.begin(), on.end());
  for (auto c : dc) {
    if (on_set.contains(c)) {
      throw DataError("configuration " + std::to_string(c) + " is both on-set and don't-care");
    }
  }
  if (on.empty()) return {};

  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::unordered_set<std::uint64_t> current;
  for (auto c : on) current.insert(key(full, c));
  for (auto c : dc) current.insert(key(full, c));

  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::unordered_set<std::uint64_t> next;
    std::unordered_set<std::uint64_t> merged;
    for (const auto entry : current) {
      const auto care = static_cast<std::uint32_t>(entry >> 32);
      const auto value = static_cast<std::uint32_t>(entry);
      for (std::uint32_t bits = care; bits != 0; bits &= bits - 1) {
        const std::uint32_t bit = bits & (~bits + 1);
        const std::uint64_t partner = key(care, value ^ bit);
        if (current.contains(partner)) {
          next.insert(key(care & ~bit, value & ~bit));
          merged.insert(entry);
        }
      }
    }
    for (const auto entry : current) {
      if (merged.contains(entry)) continue;
      Implicant imp(k, static_cast<std::uint32_t>(entry >> 32), static_cast<std::uint32_t>(entry));
      const bool useful =
          std::any_of(on.begin(), on.end(), [&](std::uint32_t c) { return imp.covers(c); });
      if (useful) primes.push_back(imp);
    }
    current = std::move(next);
  }
  std::sort(primes.begin(), primes.end(), CanonicalLess{});
  return primes;
}

std::vector<Model> enumerate_minimal_covers(std::span<const Implicant> prime_implicants,
                                            std::span<const std::uint32_t> on) {
  if (on.empty() || prime_implicants.empty()) return {};
  const std::size_t n = prime_implicants.size();

  std::vector<IndexSet> clauses;
  clauses.reserve(on.size());
  for (auto config : on) {
    IndexSet clause(n);
    for (std::size_t p = 0; p < n; ++p) {
      if (prime_implicants[p].covers(config)) clause.insert(p);
    }
    if (clause.size() == 0) return {};
    clauses.push_back(std::move(clause));
  }
  // A clause that contains another is implied by it.
  absorb(clauses);

  const std::size_t bound = greedy_cover_size(clauses, n);
  std::vector<IndexSet> products{IndexSet(n)};
  for (const auto& clause : clauses) {
    std::vector<IndexSet> expanded;
    for (const auto& product : products) {
      if (product.intersects(clause)) {
        expanded.push_back(product);
        continue;
      }
      clause.for_each([&](std::size_t p) {
        IndexSet grown = product;
        grown.insert(p);
        if (grown.size() <= bound) expanded.push_back(std::move(grown));
      });
    }
    absorb(expanded);
    products = std::move(expanded);
  }
  if (products.empty()) throw InternalError("Petrick expansion lost every product");

  std::size_t best_terms = std::numeric_limits<std::size_t>::max();
  for (const auto& p : products) best_terms = std::min(best_terms, p.size());

  std::vector<Model> models;
  std::size_t best_literals = std::numeric_limits<std::size_t>::max();
  for (const auto& product : products) {
    if (product.size() != best_terms) continue;
    Model model;
    product.for_each([&](std::size_t p) { model.terms.push_back(prime_implicants[p]); });
    model.canonicalize();
    const std::size_t literals = model.literal_count();
    if (literals < best_literals) {
      best_literals = literals;
      models.clear();
    }
    if (literals == best_literals) models.push_back(std::move(model));
  }
  std::sort(models.begin(), models.end(), model_less);
  models.erase(std::unique(models.begin(), models.end()), models.end());
  return models;
}

const char* solution_type_name(SolutionType type) {
  switch (type) {
    case SolutionType::kConservative:
      return "conservative";
    case SolutionType::kParsimonious:
      return "parsimonious";
    case SolutionType::kIntermediate:
      return "intermediate";
  }
  return "unknown";
}

Model derive_intermediate(const Model& conservative, const Model& parsimonious,
                          std::span<const Expectation> dir_exp) {
  if (conservative.terms.empty() || parsimonious.terms.empty()) {
    throw DataError("intermediate derivation needs non-empty bounding models");
  }
  const std::size_t k = conservative.terms.front().width();
  if (dir_exp.size() != k) {
    throw DataError("directional expectations have " + std::to_string(dir_exp.size()) +
                    " entries for " + std::to_string(k) + " conditions");
  }
  std::vector<Implicant> derived;
  for (const auto& c : conservative.terms) {
    bool bounded = false;
    for (const auto& p : parsimonious.terms) {
      if (!p.contains(c)) continue;
      bounded = true;
      std::uint32_t care = p.care();
      std::uint32_t value = p.value();
      for (std::size_t i = 0; i < k; ++i) {
        if (p.literal(i) != Literal::kFree) continue;
        const Literal lit = c.literal(i);
        const bool keep = (lit == Literal::kPresent && dir_exp[i] == Expectation::kPresent) ||
                          (lit == Literal::kAbsent && dir_exp[i] == Expectation::kAbsent);
        if (!keep) continue;
        const std::uint32_t bit = std::uint32_t{1} << (k - 1 - i);
        care |= bit;
        if (lit == Literal::kPresent) value |= bit;
      }
      derived.emplace_back(k, care, value);
    }
    if (!bounded) {
      throw InternalError("conservative term " + c.pattern() +
                          " is not contained in any parsimonious term");
    }
  }
  Model out;
  for (const auto& t : derived) {
    const bool absorbed = std::any_of(derived.begin(), derived.end(), [&](const Implicant& o) {
      return o != t && o.contains(t);
    });
    if (!absorbed) out.terms.push_back(t);
  }
  out.canonicalize();
  return out;
}

TermPartition identify_epi_spi(const std::vector<Model>& models) {
  if (models.empty()) throw DataError("no models: EPI/SPI are undefined without a solution");
  std::vector<Implicant> all;
  for (const auto& m : models) all.insert(all.end(), m.terms.begin(), m.terms.end());
  std::sort(all.begin(), all.end(), CanonicalLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  TermPartition out;
  for (const auto& t : all) {
    const bool everywhere = std::all_of(models.begin(), models.end(), [&](const Model& m) {
      return std::find(m.terms.begin(), m.terms.end(), t) != m.terms.end();
    });
    (everywhere ? out.epi : out.spi).push_back(t);
  }
  return out;
}

SolutionSet minimize(const TruthTable& table, bool include_remainders,
                     const std::optional<std::vector<Expectation>>& dir_exp) {
  const std::size_t k = table.condition_count();
  if (dir_exp) {
    if (!include_remainders) {
      throw DataError("directional expectations require remainder inclusion");
    }
    if (dir_exp->size() != k) {
      throw DataError("directional expectations have " + std::to_string(dir_exp->size()) +
                      " entries for " + std::to_string(k) + " conditions");
    }
  }
  SolutionSet out;
  out.type = !include_remainders ? SolutionType::kConservative
             : dir_exp           ? SolutionType::kIntermediate
                                 : SolutionType::kParsimonious;
  out.dir_exp = dir_exp;

  const std::vector<std::uint32_t> on = table.configs_with(RowOutcome::kPositive);
  const std::vector<std::uint32_t> remainders = table.configs_with(RowOutcome::kRemainder);
  auto solve = [&](std::span<const std::uint32_t> dc) {
    return enumerate_minimal_covers(find_prime_implicants(on, dc, k), on);
  };

  if (on.empty()) {
    // Still validates k.
    find_prime_implicants(on, {}, k);
    return out;
  }
  switch (out.type) {
    case SolutionType::kConservative:
      out.models = solve({});
      break;
    case SolutionType::kParsimonious:
      out.models = solve(remainders);
      break;
    case SolutionType::kIntermediate: {
      out.conservative_models = solve({});
      const std::vector<Implicant> pis = find_prime_implicants(on, remainders, k);
      out.parsimonious_models = enumerate_minimal_covers(pis, on);
      // A minimal parsimonious model can split a conservative term across
      // several of its terms; borrow a containing prime implicant for those.
      Model bound = out.parsimonious_models.front();
      for (const auto& c : out.conservative_models.front().terms) {
        const bool covered = std::any_of(bound.terms.begin(), bound.terms.end(),
                                         [&](const Implicant& p) { return p.contains(c); });
        if (covered) continue;
        auto it = std::find_if(pis.begin(), pis.end(),
                               [&](const Implicant& p) { return p.contains(c); });
        if (it == pis.end()) {
          throw InternalError("conservative term " + c.pattern() + " has no containing prime implicant");
        }
        bound.terms.push_back(*it);
      }
      out.models = {derive_intermediate(out.conservative_models.front(), bound, *dir_exp)};
      break;
    }
  }
  if (out.has_solution()) {
    auto split = identify_epi_spi(out.models);
    out.epi = std::move(split.epi);
    out.spi = std::move(split.spi);
  }
  return out;
}

}  // namespace qsweep
