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

#include <cstdint>
#include <span>
#include <vector>

#include "wtg/execution.hpp"
#include "wtg/graph.hpp"
#include "wtg/matroid.hpp"
#include "wtg/rational.hpp"

namespace wtg {

/// k(G_A) for every edge subset A, indexed by bitmask.
std::vector<int> component_table(const Multigraph& g, Execution exec);

/// ρ(A) for every subset A of the matroid's positions.
std::vector<int> rank_table(const Matroid& m, Execution exec);

/// How the f̃ value attached to an edge subset A is read.
struct FoldWeights {
  std::span<const Rational> extension;  ///< f̃ indexed by subsets of Ω
  std::span<const int> image;           ///< position -> 0-based label bit
  bool complement = false;              ///< use f̃(s(E∖A)) instead of f̃(s(A))
  bool alternate = false;               ///< multiply by (-1)^|A|
};

/// acc[key[A]] += w(A) over all 2^m subsets A, where m = image.size().
std::vector<Rational> bucket_fold(std::span<const int> keys, int buckets, const FoldWeights& w, Execution exec);

/// For every subset A of {0..m-1}: Σ over all m! bijective labels s of
/// extension[s(A)]. Guarded at m ≤ 9.
std::vector<Rational> label_sum_table(int m, std::span<const Rational> extension, Execution exec);

}  // namespace wtg
