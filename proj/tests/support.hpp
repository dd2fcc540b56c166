/*
   Copyright 2026 The wtg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"

#include "wtg/graph.hpp"
#include "wtg/matroid.hpp"
#include "wtg/weight.hpp"

namespace support {

inline oracle::EdgeList plain(const wtg::Multigraph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline wtg::EdgeLabel random_label(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return wtg::EdgeLabel(v);
}

inline wtg::Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 7), den(1, 5), sgn(0, 1);
  wtg::Rational r(num(rng) * (sgn(rng) ? -1 : 1), den(rng));
  r.canonicalize();
  return r;
}

inline wtg::WeightFn random_weight(std::mt19937_64& rng, int n, int d) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  wtg::WeightFn f(n, d);
  for (auto bits : f.subsets()) {
    wtg::Rational v(num(rng), den(rng));
    v.canonicalize();
    f.set(wtg::SubsetMask(n, bits), v);
  }
  return f;
}

/// Every standard basis element of Hom_d(n), for every d.
inline std::vector<wtg::WeightFn> hom_bases(int n) {
  std::vector<wtg::WeightFn> out;
  for (int d = 0; d <= n; ++d)
    for (std::size_t k = 0; k < wtg::binomial_u64(n, d); ++k) out.push_back(wtg::WeightFn::basis(n, d, k));
  return out;
}

/// Every harmonic basis element, for every d.
inline std::vector<wtg::WeightFn> harm_bases(int n) {
  std::vector<wtg::WeightFn> out;
  for (int d = 0; d <= n; ++d)
    for (auto& f : wtg::harmonic_basis(n, d)) out.push_back(std::move(f));
  return out;
}

inline std::function<int(std::uint32_t)> rank_of(const wtg::Matroid& m) {
  return [&m](std::uint32_t a) { return m.rank(a); };
}

}  // namespace support
