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
#include <map>
#include <span>
#include <string>

#include "wtg/combinatorics.hpp"
#include "wtg/polynomial.hpp"

namespace wtg {

class WeightFn;

/// Formal sum Σ_S c_S·[S] over subsets S of Ω = {1..n}, where [S] stands
/// for the symbol f̃(S). Realizes the ∘ product on f̃-symbols:
/// f̃({j}) ∘ Σ c_S f̃(S) = Σ c_S f̃(S ∪ {j}).
class SetIndexedPoly {
 public:
  using Terms = std::map<std::uint32_t, MVPoly>;

  explicit SetIndexedPoly(int n) : n_(n) {}
  /// c·[S].
  static SetIndexedPoly single(const SubsetMask& s, const MVPoly& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MVPoly coeff(const SubsetMask& s) const;

  SetIndexedPoly& operator+=(const SetIndexedPoly& o);
  SetIndexedPoly& operator-=(const SetIndexedPoly& o);
  SetIndexedPoly& operator*=(const MVPoly& c);
  friend SetIndexedPoly operator+(SetIndexedPoly a, const SetIndexedPoly& b) { return a += b; }
  friend SetIndexedPoly operator-(SetIndexedPoly a, const SetIndexedPoly& b) { return a -= b; }
  friend SetIndexedPoly operator*(const MVPoly& c, SetIndexedPoly a) { return a *= c; }
  bool operator==(const SetIndexedPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// Keys rewritten through image: element i+1 becomes image[i]+1.
  SetIndexedPoly relabelled(std::span<const int> image) const;

  std::string to_string() const;

 private:
  void add_term(std::uint32_t key, const MVPoly& c);
  int n_;
  Terms terms_;
};

/// Left ∘ by the singleton {j}: every c_S·[S] becomes c_S·[S ∪ {j}].
SetIndexedPoly setpoly_adjoin(const SetIndexedPoly& t, int j);

/// Σ_S c_S·f̃(S). Throws when t.n() != f.n().
MVPoly setpoly_evaluate(const SetIndexedPoly& t, const WeightFn& f);

/// Same, with f̃ given as a table indexed by subset bitmask.
MVPoly setpoly_evaluate(const SetIndexedPoly& t, std::span<const Rational> extension);

}  // namespace wtg
