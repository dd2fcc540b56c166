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
#include <string>
#include <vector>

#include "wtg/graph.hpp"

namespace wtg {

/// Matrix over the prime field F_p; columns are matroid elements.
struct FpMatrix {
  std::uint32_t p = 2;
  std::vector<std::vector<std::uint32_t>> rows;

  /// Reduces entries mod p; throws if p is not prime or rows are ragged.
  FpMatrix(std::uint32_t prime, std::vector<std::vector<long>> entries);
  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

enum class Provenance { Graphic, Linear, Uniform };
enum class ElementKind { Loop, Coloop, Ordinary };

std::string to_string(Provenance p);
std::string to_string(ElementKind k);

/// Rank-oracle interface for the ground matroid a Matroid value wraps.
class RankFunction {
 public:
  virtual ~RankFunction() = default;
  virtual int size() const = 0;
  virtual int rank(std::uint32_t a) const = 0;
  virtual Provenance provenance() const = 0;
};

/// A matroid as a rank oracle. Minors share the original oracle and keep a
/// translation from their positions to original elements plus the set of
/// contracted originals, so rank″(A) = ρ(A ∪ C) - ρ(C).
class Matroid {
 public:
  static Matroid graphic(Multigraph g);
  static Matroid linear(FpMatrix m);
  static Matroid uniform(int r, int n);

  int size() const { return static_cast<int>(elements_.size()); }
  /// Rank of a subset given as a bitmask over positions 0..size()-1.
  int rank(std::uint32_t a) const;
  int full_rank() const { return rank(all()); }
  std::uint32_t all() const { return elements_.empty() ? 0u : (~0u >> (32 - elements_.size())); }
  Provenance provenance() const { return base_->provenance(); }
  /// Original element index for each current position.
  const std::vector<int>& elements() const { return elements_; }
  const RankFunction& base() const { return *base_; }

  Matroid deleted(int pos) const;
  Matroid contracted(int pos) const;

 private:
  Matroid(std::shared_ptr<const RankFunction> base);
  std::uint32_t lift(std::uint32_t a) const;

  std::shared_ptr<const RankFunction> base_;
  std::vector<int> elements_;
  std::uint32_t contracted_ = 0;
  int contracted_rank_ = 0;
};

int graphic_rank(const Multigraph& g, std::uint32_t a);
int linear_rank(const FpMatrix& m, std::uint32_t a);

ElementKind matroid_classify(const Matroid& m, int pos);
Matroid matroid_minor(const Matroid& m, int pos, MinorKind kind);

}  // namespace wtg
