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

#include "wtg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "wtg/error.hpp"

namespace wtg {

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Bridge: return "bridge";
    case EdgeKind::Ordinary: return "ordinary";
  }
  return "?";
}

Multigraph::Multigraph(int vertex_count, std::span<const std::pair<int, int>> endpoints)
    : vertex_count_(vertex_count) {
  int id = 0;
  for (auto [u, v] : endpoints) edges_.push_back({u, v, id++});
  *this = Multigraph(vertex_count, edges_);
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw Error("negative vertex count");
  if (edges_.size() > 32) throw GuardError("edge-count", "more than 32 edges");
  for (const auto& e : edges_)
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_)
      throw Error("edge endpoint outside vertex range");
}

std::uint32_t Multigraph::all_edges() const {
  return edges_.empty() ? 0u : (~0u >> (32 - edges_.size()));
}

int Multigraph::position_of(int id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return static_cast<int>(i);
  return -1;
}

DisjointSets::DisjointSets(int n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

int component_count(const Multigraph& g, std::uint32_t a) {
  DisjointSets ds(g.vertex_count());
  for (std::uint32_t b = a; b; b &= b - 1) {
    const auto& e = g.edge(std::countr_zero(b));
    ds.unite(e.u, e.v);
  }
  return ds.components();
}

int betti1(const Multigraph& g, std::uint32_t a) {
  return std::popcount(a) - g.vertex_count() + component_count(g, a);
}

std::vector<int> component_labels(const Multigraph& g, std::uint32_t a) {
  DisjointSets ds(g.vertex_count());
  for (std::uint32_t b = a; b; b &= b - 1) {
    const auto& e = g.edge(std::countr_zero(b));
    ds.unite(e.u, e.v);
  }
  std::vector<int> root_label(g.vertex_count(), -1), out(g.vertex_count());
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int& l = root_label[ds.find(v)];
    if (l < 0) l = next++;
    out[v] = l;
  }
  return out;
}

EdgeKind classify_edge(const Multigraph& g, int pos) {
  const auto& e = g.edge(pos);
  if (e.is_loop()) return EdgeKind::Loop;
  const std::uint32_t all = g.all_edges();
  if (component_count(g, all & ~(1u << pos)) > component_count(g, all)) return EdgeKind::Bridge;
  return EdgeKind::Ordinary;
}

Multigraph edge_minor(const Multigraph& g, int pos, MinorKind kind) {
  const Edge removed = g.edge(pos);
  std::vector<Edge> rest;
  rest.reserve(g.edges().size() - 1);
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != pos) rest.push_back(g.edge(i));
  if (kind == MinorKind::Delete) return Multigraph(g.vertex_count(), std::move(rest));
  if (removed.is_loop()) throw Error("contract-loop: cannot contract a loop");
  const int keep = std::min(removed.u, removed.v);
  const int drop = std::max(removed.u, removed.v);
  auto remap = [&](int w) {
    if (w == drop) w = keep;
    return w > drop ? w - 1 : w;
  };
  for (auto& e : rest) {
    e.u = remap(e.u);
    e.v = remap(e.v);
  }
  return Multigraph(g.vertex_count() - 1, std::move(rest));
}

std::uint64_t colouring_count(const Multigraph& g, std::uint32_t a, int lambda) {
  if (lambda < 1) throw Error("colouring count needs λ ≥ 1");
  const int nv = g.vertex_count();
  double space = 1;
  for (int i = 0; i < nv; ++i) space *= lambda;
  if (space > 1e7) throw GuardError("colouring-enumeration", "λ^|V| exceeds 10^7");
  std::vector<int> colour(nv, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::uint32_t b = a; b && ok; b &= b - 1) {
      const auto& e = g.edge(std::countr_zero(b));
      ok = colour[e.u] == colour[e.v];
    }
    if (ok) ++count;
    int i = 0;
    while (i < nv && ++colour[i] == lambda) colour[i++] = 0;
    if (i == nv) break;
  }
  return count;
}

EdgeLabel::EdgeLabel(std::vector<int> label) : label_(std::move(label)) {
  const int n = static_cast<int>(label_.size());
  std::vector<bool> seen(n + 1, false);
  for (int l : label_) {
    if (l < 1 || l > n) throw Error("label value " + std::to_string(l) + " outside {1.." + std::to_string(n) + "}");
    if (seen[l]) throw Error("label is not bijective: " + std::to_string(l) + " repeated");
    seen[l] = true;
  }
}

EdgeLabel EdgeLabel::identity(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 1);
  return EdgeLabel(std::move(l));
}

std::vector<int> EdgeLabel::bit_image() const {
  std::vector<int> out(label_.size());
  for (std::size_t i = 0; i < label_.size(); ++i) out[i] = label_[i] - 1;
  return out;
}

}  // namespace wtg
