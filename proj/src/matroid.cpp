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

#include "wtg/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "wtg/error.hpp"
#include "wtg/linalg.hpp"

namespace wtg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class GraphicRank final : public RankFunction {
 public:
  explicit GraphicRank(Multigraph g) : g_(std::move(g)) {}
  int size() const override { return g_.edge_count(); }
  int rank(std::uint32_t a) const override { return graphic_rank(g_, a); }
  Provenance provenance() const override { return Provenance::Graphic; }

 private:
  Multigraph g_;
};

class LinearRank final : public RankFunction {
 public:
  explicit LinearRank(FpMatrix m) : m_(std::move(m)) {}
  int size() const override { return static_cast<int>(m_.col_count()); }
  int rank(std::uint32_t a) const override { return linear_rank(m_, a); }
  Provenance provenance() const override { return Provenance::Linear; }

 private:
  FpMatrix m_;
};

class UniformRank final : public RankFunction {
 public:
  UniformRank(int r, int n) : r_(r), n_(n) {}
  int size() const override { return n_; }
  int rank(std::uint32_t a) const override { return std::min(r_, std::popcount(a)); }
  Provenance provenance() const override { return Provenance::Uniform; }

 private:
  int r_;
  int n_;
};

}  // namespace

FpMatrix::FpMatrix(std::uint32_t prime, std::vector<std::vector<long>> entries) : p(prime) {
  if (!is_prime(prime)) throw Error("field size " + std::to_string(prime) + " is not prime");
  for (const auto& row : entries) {
    if (!entries.empty() && row.size() != entries[0].size()) throw Error("ragged matrix rows");
    std::vector<std::uint32_t> r;
    for (long v : row) {
      const long m = ((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
      r.push_back(static_cast<std::uint32_t>(m));
    }
    rows.push_back(std::move(r));
  }
  if (col_count() > 32) throw GuardError("ground-size", "matrix has more than 32 columns");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Graphic: return "graphic";
    case Provenance::Linear: return "linear";
    case Provenance::Uniform: return "uniform";
  }
  return "?";
}

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Loop: return "loop";
    case ElementKind::Coloop: return "coloop";
    case ElementKind::Ordinary: return "ordinary";
  }
  return "?";
}

int graphic_rank(const Multigraph& g, std::uint32_t a) { return g.vertex_count() - component_count(g, a); }

int linear_rank(const FpMatrix& m, std::uint32_t a) {
  if (a == 0 || m.row_count() == 0) return 0;
  std::vector<std::vector<std::uint32_t>> sub(m.row_count());
  for (std::size_t r = 0; r < m.row_count(); ++r)
    for (std::uint32_t b = a; b; b &= b - 1) sub[r].push_back(m.rows[r][std::countr_zero(b)]);
  return rank_mod_p(std::move(sub), m.p);
}

Matroid::Matroid(std::shared_ptr<const RankFunction> base) : base_(std::move(base)) {
  elements_.resize(base_->size());
  std::iota(elements_.begin(), elements_.end(), 0);
}

Matroid Matroid::graphic(Multigraph g) { return Matroid(std::make_shared<GraphicRank>(std::move(g))); }

Matroid Matroid::linear(FpMatrix m) { return Matroid(std::make_shared<LinearRank>(std::move(m))); }

Matroid Matroid::uniform(int r, int n) {
  if (n < 0 || n > 32 || r < 0 || r > n) throw Error("uniform matroid needs 0 ≤ r ≤ n ≤ 32");
  return Matroid(std::make_shared<UniformRank>(r, n));
}

std::uint32_t Matroid::lift(std::uint32_t a) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = a; b; b &= b - 1) out |= 1u << elements_[std::countr_zero(b)];
  return out;
}

int Matroid::rank(std::uint32_t a) const { return base_->rank(lift(a) | contracted_) - contracted_rank_; }

Matroid Matroid::deleted(int pos) const {
  Matroid out = *this;
  out.elements_.erase(out.elements_.begin() + pos);
  return out;
}

Matroid Matroid::contracted(int pos) const {
  Matroid out = *this;
  out.contracted_ |= 1u << elements_.at(pos);
  out.contracted_rank_ = base_->rank(out.contracted_);
  out.elements_.erase(out.elements_.begin() + pos);
  return out;
}

ElementKind matroid_classify(const Matroid& m, int pos) {
  if (m.rank(1u << pos) == 0) return ElementKind::Loop;
  if (m.full_rank() - m.rank(m.all() & ~(1u << pos)) == 1) return ElementKind::Coloop;
  return ElementKind::Ordinary;
}

Matroid matroid_minor(const Matroid& m, int pos, MinorKind kind) {
  if (pos < 0 || pos >= m.size()) throw Error("matroid element outside ground set");
  return kind == MinorKind::Delete ? m.deleted(pos) : m.contracted(pos);
}

}  // namespace wtg
