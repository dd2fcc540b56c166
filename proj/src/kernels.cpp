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

#include "wtg/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include <omp.h>

#include "wtg/combinatorics.hpp"
#include "wtg/error.hpp"

namespace wtg {

namespace {

std::atomic<int> g_threads{0};

int thread_budget() {
  const int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

void check_subset_guard(int m) {
  if (m > kMaxGround) throw GuardError("ground-size", "2^" + std::to_string(m) + " subsets exceeds the n ≤ 24 guard");
}

// Per-thread partial sums merged in thread order.
std::vector<Rational> merge(std::vector<std::vector<Rational>>& partial, std::size_t buckets) {
  std::vector<Rational> out(buckets, Rational(0));
  for (auto& p : partial)
    for (std::size_t i = 0; i < buckets; ++i) out[i] += p[i];
  return out;
}

}  // namespace

void set_parallelism(int threads) { g_threads.store(std::max(0, threads)); }
int parallelism() { return thread_budget(); }

std::vector<int> component_table(const Multigraph& g, Execution exec) {
  const int m = g.edge_count();
  check_subset_guard(m);
  const auto size = static_cast<std::int64_t>(std::int64_t{1} << m);
  std::vector<int> table(static_cast<std::size_t>(size));
  if (exec == Execution::Serial) {
    for (std::int64_t a = 0; a < size; ++a) table[a] = component_count(g, static_cast<std::uint32_t>(a));
    return table;
  }
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (std::int64_t a = 0; a < size; ++a) table[a] = component_count(g, static_cast<std::uint32_t>(a));
  return table;
}

std::vector<int> rank_table(const Matroid& mat, Execution exec) {
  const int m = mat.size();
  check_subset_guard(m);
  const auto size = static_cast<std::int64_t>(std::int64_t{1} << m);
  std::vector<int> table(static_cast<std::size_t>(size));
  if (exec == Execution::Serial) {
    for (std::int64_t a = 0; a < size; ++a) table[a] = mat.rank(static_cast<std::uint32_t>(a));
    return table;
  }
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (std::int64_t a = 0; a < size; ++a) table[a] = mat.rank(static_cast<std::uint32_t>(a));
  return table;
}

std::vector<Rational> bucket_fold(std::span<const int> keys, int buckets, const FoldWeights& w, Execution exec) {
  const int m = static_cast<int>(w.image.size());
  check_subset_guard(m);
  const auto size = static_cast<std::int64_t>(std::int64_t{1} << m);
  if (keys.size() != static_cast<std::size_t>(size)) throw Error("bucket_fold: key table size mismatch");
  std::uint32_t omega = 0;
  for (int b : w.image) omega |= 1u << b;

  auto accumulate = [&](std::int64_t a, std::vector<Rational>& acc) {
    std::uint32_t s = map_bits(static_cast<std::uint32_t>(a), w.image);
    if (w.complement) s = omega & ~s;
    const Rational& v = w.extension[s];
    if (v == 0) return;
    if (w.alternate && (std::popcount(static_cast<std::uint32_t>(a)) & 1))
      acc[keys[a]] -= v;
    else
      acc[keys[a]] += v;
  };

  if (exec == Execution::Serial) {
    std::vector<Rational> acc(buckets, Rational(0));
    for (std::int64_t a = 0; a < size; ++a) accumulate(a, acc);
    return acc;
  }
  const int threads = thread_budget();
  std::vector<std::vector<Rational>> partial(threads, std::vector<Rational>(buckets, Rational(0)));
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t a = 0; a < size; ++a) accumulate(a, acc);
  }
  return merge(partial, buckets);
}

std::vector<Rational> label_sum_table(int m, std::span<const Rational> extension, Execution exec) {
  if (m > 9) throw GuardError("label-sum", "label sums enumerate n! labels; n = " + std::to_string(m) + " > 9, use the closed form");
  const std::size_t subsets = std::size_t{1} << m;
  std::uint64_t total = 1;
  for (int i = 2; i <= m; ++i) total *= static_cast<std::uint64_t>(i);

  // Runs labels [begin, end) in lexicographic order.
  auto run = [&](std::uint64_t begin, std::uint64_t end, std::vector<Rational>& acc) {
    if (begin >= end) return;
    std::vector<int> perm = unrank_permutation(m, begin);
    std::vector<std::uint32_t> image(subsets, 0);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::size_t a = 1; a < subsets; ++a)
        image[a] = image[a & (a - 1)] | (1u << perm[std::countr_zero(static_cast<std::uint32_t>(a))]);
      for (std::size_t a = 0; a < subsets; ++a) acc[a] += extension[image[a]];
      std::next_permutation(perm.begin(), perm.end());
    }
  };

  if (exec == Execution::Serial) {
    std::vector<Rational> acc(subsets, Rational(0));
    run(0, total, acc);
    return acc;
  }
  const int threads = thread_budget();
  std::vector<std::vector<Rational>> partial(threads, std::vector<Rational>(subsets, Rational(0)));
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::uint64_t chunk = (total + nt - 1) / nt;
    run(std::min(total, chunk * t), std::min(total, chunk * (t + 1)), partial[t]);
  }
  return merge(partial, subsets);
}

}  // namespace wtg
