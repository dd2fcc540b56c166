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

#include "wtg/weight.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <omp.h>

#include "wtg/error.hpp"
#include "wtg/linalg.hpp"

namespace wtg {

namespace {

// Lexicographic d-subset lists and their inverse lookup, shared per (n, d).
struct SubsetIndex {
  std::vector<std::uint32_t> subsets;
  std::vector<std::pair<std::uint32_t, std::size_t>> sorted;  // (bits, lex index)
};

const SubsetIndex& subset_index(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, SubsetIndex> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, d});
  if (inserted) {
    it->second.subsets = lex_subsets(n, d);
    auto& sorted = it->second.sorted;
    for (std::size_t i = 0; i < it->second.subsets.size(); ++i) sorted.emplace_back(it->second.subsets[i], i);
    std::sort(sorted.begin(), sorted.end());
  }
  return it->second;
}

void check_shape(int n, int d) {
  if (n < 0 || n > kMaxGround)
    throw GuardError("ground-size", "weight ground set size " + std::to_string(n) + " outside [0, 24]");
  if (d < 0 || d > n) throw Error("weight degree " + std::to_string(d) + " outside [0, " + std::to_string(n) + "]");
}

}  // namespace

WeightFn::WeightFn(int n, int d) : n_(n), d_(d) {
  check_shape(n, d);
  values_.assign(subset_index(n, d).subsets.size(), Rational(0));
}

WeightFn::WeightFn(int n, int d, std::vector<Rational> values) : n_(n), d_(d), values_(std::move(values)) {
  check_shape(n, d);
  if (values_.size() != subset_index(n, d).subsets.size())
    throw Error("weight of degree " + std::to_string(d) + " on " + std::to_string(n) + " elements needs " +
                std::to_string(subset_index(n, d).subsets.size()) + " values");
  for (auto& v : values_) v.canonicalize();
}

WeightFn WeightFn::ones(int n, int d) {
  WeightFn f(n, d);
  for (auto& v : f.values_) v = 1;
  return f;
}

WeightFn WeightFn::basis(int n, int d, std::size_t k) {
  WeightFn f(n, d);
  if (k >= f.values_.size())
    throw Error("basis index " + std::to_string(k + 1) + " outside Hom_" + std::to_string(d) + "(" +
                std::to_string(n) + ") of dimension " + std::to_string(f.values_.size()));
  f.values_[k] = 1;
  return f;
}

WeightFn WeightFn::indicator(const SubsetMask& z) {
  WeightFn f(z.n(), z.size());
  f.set(z, 1);
  return f;
}

std::span<const std::uint32_t> WeightFn::subsets() const { return subset_index(n_, d_).subsets; }

std::size_t WeightFn::index_of(std::uint32_t bits) const {
  const auto& sorted = subset_index(n_, d_).sorted;
  auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair<std::uint32_t, std::size_t>(bits, 0));
  if (it == sorted.end() || it->first != bits) throw Error("subset is not in Ω_" + std::to_string(d_));
  return it->second;
}

const Rational& WeightFn::value(const SubsetMask& z) const { return values_[index_of(z.bits())]; }

void WeightFn::set(const SubsetMask& z, Rational v) {
  v.canonicalize();  // stored values are always reduced
  values_[index_of(z.bits())] = std::move(v);
}

Rational WeightFn::total() const {
  Rational s = 0;
  for (const auto& v : values_) s += v;
  return s;
}

WeightFn& WeightFn::operator+=(const WeightFn& o) {
  if (o.n_ != n_ || o.d_ != d_) throw Error("adding weights of different shape");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

WeightFn& WeightFn::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

WeightFn WeightFn::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
  WeightFn out(n_, d_);
  const auto subs = subsets();
  for (std::size_t i = 0; i < subs.size(); ++i) out.values_[out.index_of(map_bits(subs[i], perm))] = values_[i];
  return out;
}

Rational extend_tilde(const WeightFn& f, const SubsetMask& x) {
  if (x.n() != f.n()) throw Error("extend_tilde: subset and weight live on different ground sets");
  Rational s = 0;
  if (x.size() < f.d()) return s;
  const auto subs = f.subsets();
  const auto vals = f.values();
  for (std::size_t i = 0; i < subs.size(); ++i)
    if ((subs[i] & ~x.bits()) == 0) s += vals[i];
  return s;
}

std::vector<Rational> extension_table(const WeightFn& f, Execution exec) {
  const int n = f.n();
  if (n > 20) throw GuardError("extension-table", "f̃ table needs 2^n entries; n = " + std::to_string(n) + " > 20");
  const std::size_t size = std::size_t{1} << n;
  std::vector<Rational> table(size, Rational(0));
  const auto subs = f.subsets();
  const auto vals = f.values();
  for (std::size_t i = 0; i < subs.size(); ++i) table[subs[i]] = vals[i];
  // Subset-sum (zeta) transform: afterwards table[X] = Σ_{Z ⊆ X} table0[Z].
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    const auto count = static_cast<std::int64_t>(size);
    if (exec == Execution::Parallel && n >= 10) {
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < count; ++x)
        if (static_cast<std::size_t>(x) & step) table[x] += table[static_cast<std::size_t>(x) ^ step];
    } else {
      for (std::size_t x = 0; x < size; ++x)
        if (x & step) table[x] += table[x ^ step];
    }
  }
  return table;
}

std::vector<std::pair<SubsetMask, Rational>> gamma_defect(const WeightFn& f) {
  if (f.d() == 0) throw Error("gamma undefined below degree 1");
  std::vector<std::pair<SubsetMask, Rational>> out;
  const auto subs = f.subsets();
  const auto vals = f.values();
  for (std::uint32_t y : lex_subsets(f.n(), f.d() - 1)) {
    Rational s = 0;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if ((y & ~subs[i]) == 0) s += vals[i];
    out.emplace_back(SubsetMask(f.n(), y), s);
  }
  return out;
}

bool is_harmonic(const WeightFn& f) {
  if (f.d() == 0) return true;  // Harm_0(n) = Hom_0(n)
  for (const auto& [y, v] : gamma_defect(f))
    if (v != 0) return false;
  return true;
}

std::vector<WeightFn> harmonic_basis(int n, int d) {
  check_shape(n, d);
  if (d == 0) return {WeightFn::ones(n, 0)};
  const auto rows = lex_subsets(n, d - 1);
  const auto cols = lex_subsets(n, d);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if ((rows[r] & ~cols[c]) == 0) m.at(r, c) = 1;
  std::vector<WeightFn> basis;
  for (auto& v : null_space(std::move(m))) basis.emplace_back(n, d, std::move(v));
  return basis;
}

Rational level_sum(const WeightFn& f, const SubsetMask& j, int i) {
  if (i < 0 || i > f.d()) throw Error("level_sum index outside [0, d]");
  Rational s = 0;
  const auto subs = f.subsets();
  const auto vals = f.values();
  for (std::size_t k = 0; k < subs.size(); ++k)
    if (std::popcount(subs[k] & j.bits()) == i) s += vals[k];
  return s;
}

WeightFn symmetrize(const WeightFn& f) {
  const Rational c = Rational(factorial(f.d()) * factorial(f.n() - f.d())) * f.total();
  return c * WeightFn::ones(f.n(), f.d());
}

}  // namespace wtg
