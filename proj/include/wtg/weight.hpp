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
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "wtg/combinatorics.hpp"
#include "wtg/execution.hpp"
#include "wtg/rational.hpp"

namespace wtg {

/// A homogeneous weight of degree d: one rational value per d-subset of
/// Ω = {1..n}. Values are stored in lexicographic order of the d-subsets
/// (see lex_subsets). d = 0 is a single value at ∅.
class WeightFn {
 public:
  WeightFn(int n, int d);
  WeightFn(int n, int d, std::vector<Rational> values);

  static WeightFn ones(int n, int d);
  /// Standard basis element of Hom_d(n): the indicator of the k-th d-subset
  /// (0-based, lexicographic).
  static WeightFn basis(int n, int d, std::size_t k);
  static WeightFn indicator(const SubsetMask& z);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return values_.size(); }
  std::span<const std::uint32_t> subsets() const;
  std::span<const Rational> values() const { return values_; }

  const Rational& value(const SubsetMask& z) const;
  void set(const SubsetMask& z, Rational v);
  /// Σ_Z f(Z).
  Rational total() const;

  WeightFn& operator+=(const WeightFn& o);
  WeightFn& operator*=(const Rational& c);
  friend WeightFn operator+(WeightFn a, const WeightFn& b) { return a += b; }
  friend WeightFn operator*(const Rational& c, WeightFn a) { return a *= c; }
  bool operator==(const WeightFn& o) const = default;

  /// σf: (σf)(σ(Z)) = f(Z); perm is 0-based, element i+1 goes to perm[i]+1.
  WeightFn permuted(std::span<const int> perm) const;

 private:
  std::size_t index_of(std::uint32_t bits) const;

  int n_;
  int d_;
  std::vector<Rational> values_;
};

/// f̃(X) = Σ_{Z ⊆ X, |Z| = d} f(Z).
Rational extend_tilde(const WeightFn& f, const SubsetMask& x);

/// f̃ on every subset of Ω, indexed by bitmask. Guarded at n ≤ 20.
std::vector<Rational> extension_table(const WeightFn& f, Execution exec = Execution::Parallel);

/// γ applied to f: for every (d-1)-subset Y (lexicographic order) the sum of
/// f over the d-supersets of Y. Throws for d = 0.
std::vector<std::pair<SubsetMask, Rational>> gamma_defect(const WeightFn& f);
/// True for d = 0, where Harm_0(n) = Hom_0(n).
bool is_harmonic(const WeightFn& f);

/// Exact rational basis of Harm_d(n) = ker γ, from the reduced row echelon
/// form of the C(n,d-1) × C(n,d) inclusion matrix (one vector per free column).
std::vector<WeightFn> harmonic_basis(int n, int d);

/// f^{(i)}(J) = Σ_{Z : |J ∩ Z| = i} f(Z).
Rational level_sum(const WeightFn& f, const SubsetMask& j, int i);

/// R(f) = Σ_{σ ∈ S_n} σf, which is the constant d!(n-d)!·Σf on Ω_d.
WeightFn symmetrize(const WeightFn& f);

}  // namespace wtg
