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

// Brute-force reference implementations used by the tests. They share no
// code with the library beyond its plain data types.

#ifndef QSWEEP_TESTS_ORACLE_HPP_
#define QSWEEP_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsweep/data.hpp"
#include "qsweep/implicant.hpp"

namespace oracle {

using qsweep::Implicant;
using qsweep::Model;

// A subcube as (care, value); every configuration c with (c & care) == value.
struct Cube {
  std::uint32_t care;
  std::uint32_t value;
};

inline std::vector<std::uint32_t> cube_configs(Cube c, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (1u << k); ++x) {
    if ((x & c.care) == c.value) out.push_back(x);
  }
  return out;
}

inline std::vector<Cube> all_cubes(std::size_t k) {
  std::vector<Cube> out;
  // Each condition is one of three states: 0 -> absent, 1 -> present, 2 -> free.
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    Cube c{0, 0};
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t state = rest % 3;
      rest /= 3;
      std::uint32_t bit = 1u << i;
      if (state != 2) {
        c.care |= bit;
        if (state == 1) c.value |= bit;
      }
    }
    out.push_back(c);
  }
  return out;
}

inline bool cube_within(Cube inner, Cube outer, std::size_t k) {
  for (auto x : cube_configs(inner, k)) {
    if ((x & outer.care) != outer.value) return false;
  }
  return true;
}

// Maximal subcubes of on ∪ dc that contain at least one `on` configuration.
inline std::vector<Implicant> prime_implicants(const std::vector<std::uint32_t>& on,
                                               const std::vector<std::uint32_t>& dc,
                                               std::size_t k) {
  std::set<std::uint32_t> allowed(on.begin(), on.end());
  allowed.insert(dc.begin(), dc.end());
  std::vector<Cube> ok;
  for (auto c : all_cubes(k)) {
    auto xs = cube_configs(c, k);
    if (std::all_of(xs.begin(), xs.end(), [&](auto x) { return allowed.count(x) > 0; })) {
      ok.push_back(c);
    }
  }
  std::vector<Implicant> out;
  for (auto c : ok) {
    bool maximal = true;
    for (auto d : ok) {
      if ((d.care != c.care || d.value != c.value) && cube_within(c, d, k)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    bool touches_on = false;
    for (auto x : on) touches_on = touches_on || (x & c.care) == c.value;
    if (touches_on) out.emplace_back(k, c.care, c.value);
  }
  std::sort(out.begin(), out.end(), qsweep::CanonicalLess{});
  return out;
}

// Every subset of `pis` that covers `on`, minimal in size and then in total
// literal count, found by trying all subsets of increasing size.
inline std::vector<Model> minimal_covers(const std::vector<Implicant>& pis,
                                         const std::vector<std::uint32_t>& on) {
  if (on.empty()) return {};
  const std::size_t n = pis.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<Model> found;
    std::size_t best_literals = SIZE_MAX;
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      Model m;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) m.terms.push_back(pis[i]);
      }
      bool covers = std::all_of(on.begin(), on.end(), [&](std::uint32_t x) {
        return std::any_of(m.terms.begin(), m.terms.end(),
                           [&](const Implicant& t) { return (x & t.care()) == t.value(); });
      });
      if (!covers) continue;
      std::size_t lits = 0;
      for (const auto& t : m.terms) lits += static_cast<std::size_t>(__builtin_popcount(t.care()));
      if (lits < best_literals) {
        best_literals = lits;
        found.clear();
      }
      if (lits == best_literals) found.push_back(m);
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!found.empty()) {
      for (auto& m : found) std::sort(m.terms.begin(), m.terms.end(), qsweep::CanonicalLess{});
      std::sort(found.begin(), found.end(), qsweep::model_less);
      return found;
    }
  }
  return {};
}

// Fit values recomputed case by case from raw numbers.
struct CaseFit {
  std::optional<double> incl_s, cov_s;
  std::vector<std::optional<double>> incl, cov, cov_u;
  std::vector<std::optional<double>> incl_n, cov_n;  // A, ~A, B, ~B, ...
};

inline std::optional<double> ratio(std::size_t a, std::size_t b) {
  if (b == 0) return std::nullopt;
  return static_cast<double>(a) / static_cast<double>(b);
}

inline CaseFit case_fit(const std::vector<std::vector<double>>& x, const std::vector<double>& thr,
                        const std::vector<double>& y, double thr_y, bool negated,
                        const Model& model) {
  const std::size_t n = y.size();
  const std::size_t k = thr.size();
  std::vector<bool> out(n);
  std::vector<std::uint32_t> config(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    out[c] = (y[c] >= thr_y) != negated;
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i][c] >= thr[i]) config[c] |= 1u << (k - 1 - i);
    }
  }
  auto in_term = [&](const Implicant& t, std::size_t c) {
    for (std::size_t i = 0; i < k; ++i) {
      auto lit = t.literal(i);
      bool member = (config[c] >> (k - 1 - i)) & 1u;
      if (lit == qsweep::Literal::kPresent && !member) return false;
      if (lit == qsweep::Literal::kAbsent && member) return false;
    }
    return true;
  };
  CaseFit f;
  std::size_t n_y = 0, n_s = 0, n_sy = 0;
  for (std::size_t c = 0; c < n; ++c) {
    bool s = false;
    for (const auto& t : model.terms) s = s || in_term(t, c);
    n_y += out[c];
    n_s += s;
    n_sy += s && out[c];
  }
  f.incl_s = ratio(n_sy, n_s);
  f.cov_s = ratio(n_sy, n_y);
  for (std::size_t j = 0; j < model.terms.size(); ++j) {
    std::size_t nt = 0, nty = 0, nu = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!in_term(model.terms[j], c)) continue;
      ++nt;
      if (!out[c]) continue;
      ++nty;
      bool other = false;
      for (std::size_t o = 0; o < model.terms.size(); ++o) {
        if (o != j && in_term(model.terms[o], c)) other = true;
      }
      if (!other) ++nu;
    }
    f.incl.push_back(ratio(nty, nt));
    f.cov.push_back(ratio(nty, n_y));
    f.cov_u.push_back(ratio(nu, n_y));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (bool want : {true, false}) {
      std::size_t nx = 0, nxy = 0;
      for (std::size_t c = 0; c < n; ++c) {
        bool member = ((config[c] >> (k - 1 - i)) & 1u) == (want ? 1u : 0u);
        nx += member;
        nxy += member && out[c];
      }
      f.incl_n.push_back(ratio(nxy, n_y));
      f.cov_n.push_back(ratio(nxy, nx));
    }
  }
  return f;
}

inline bool close(const std::optional<double>& a, const std::optional<double>& b,
                  double tol = 1e-12) {
  if (a.has_value() != b.has_value()) return false;
  return !a || std::abs(*a - *b) <= tol;
}

// Random raw dataset: conditions X1..Xk and outcome Y, integer scores 1..5.
struct RandomData {
  qsweep::RawDataset raw;
  std::vector<std::string> conditions;
  std::vector<std::vector<double>> x;
  std::vector<double> y;
};

inline RandomData random_data(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  std::uniform_int_distribution<int> score(1, 5);
  RandomData d{qsweep::RawDataset({"1"}, {{"Y", {0}}}), {}, {}, {}};
  std::vector<std::string> ids;
  std::vector<qsweep::Column> cols;
  for (std::size_t c = 0; c < n; ++c) ids.push_back("c" + std::to_string(c + 1));
  for (std::size_t i = 0; i < k; ++i) {
    d.conditions.push_back("X" + std::to_string(i + 1));
    std::vector<double> v(n);
    for (auto& e : v) e = score(rng);
    d.x.push_back(v);
    cols.push_back({d.conditions.back(), v});
  }
  d.y.resize(n);
  for (auto& e : d.y) e = score(rng);
  cols.push_back({"Y", d.y});
  d.raw = qsweep::RawDataset(ids, cols);
  return d;
}

}  // namespace oracle

#endif  // QSWEEP_TESTS_ORACLE_HPP_
