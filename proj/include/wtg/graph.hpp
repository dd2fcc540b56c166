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
#include <string>
#include <vector>

namespace wtg {

/// An edge with its stable original index. Vertices are 0-based.
struct Edge {
  int u = 0;
  int v = 0;
  int id = 0;
  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

enum class EdgeKind { Loop, Bridge, Ordinary };
enum class MinorKind { Delete, Contract };

std::string to_string(EdgeKind k);

/// Finite multigraph with loops and parallel edges. Edge subsets are
/// bitmasks over positions in edges(); minors keep each surviving edge's id
/// and the relative order of edges, so the lowest position always carries
/// the lowest surviving original index.
class Multigraph {
 public:
  Multigraph() = default;
  /// Edges given as endpoint pairs; ids are positions.
  Multigraph(int vertex_count, std::span<const std::pair<int, int>> endpoints);
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int pos) const { return edges_.at(pos); }
  std::uint32_t all_edges() const;
  /// Position of the edge with the given original id, or -1.
  int position_of(int id) const;
  bool operator==(const Multigraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Union-find over vertices.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int a);
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

/// k(G_A): connected components of the spanning subgraph (V, A).
int component_count(const Multigraph& g, std::uint32_t a);
/// β₁(G_A) = |A| - |V| + k(G_A).
int betti1(const Multigraph& g, std::uint32_t a);
/// Component representative per vertex for (V, A), numbered 0.. in order of
/// each component's smallest vertex.
std::vector<int> component_labels(const Multigraph& g, std::uint32_t a);

EdgeKind classify_edge(const Multigraph& g, int pos);

/// Delete keeps every vertex. Contract merges the endpoints into the smaller
/// vertex, drops the larger one (later vertices shift down by one) and keeps
/// the remaining edges, so parallel edges may become loops.
Multigraph edge_minor(const Multigraph& g, int pos, MinorKind kind);

/// Brute-force count of colourings V → {1..λ} that agree across every edge
/// of A. Guarded at λ^|V| ≤ 10^7.
std::uint64_t colouring_count(const Multigraph& g, std::uint32_t a, int lambda);

/// A bijection from the n original edge indices (or matroid elements) onto
/// Ω = {1..n}: element i ↦ of(i).
class EdgeLabel {
 public:
  EdgeLabel() = default;
  /// label[i] ∈ {1..n}; throws unless bijective.
  explicit EdgeLabel(std::vector<int> label);
  static EdgeLabel identity(int n);

  int size() const { return static_cast<int>(label_.size()); }
  int of(int original_index) const { return label_.at(original_index); }
  const std::vector<int>& values() const { return label_; }
  /// 0-based bit image (label - 1) per original index.
  std::vector<int> bit_image() const;
  bool operator==(const EdgeLabel&) const = default;

 private:
  std::vector<int> label_;
};

}  // namespace wtg
