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

#include "wtg/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "wtg/error.hpp"

namespace wtg::fixtures {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Multigraph make(int vertices, const EdgeList& edges) { return Multigraph(vertices, edges); }

bool connected(int vertices, const EdgeList& edges) {
  DisjointSets ds(vertices);
  for (auto [u, v] : edges) ds.unite(u, v);
  return ds.components() == 1;
}

// Lexicographically least sorted edge list over all vertex relabellings.
EdgeList canonical(int vertices, const EdgeList& edges) {
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [u, v] : edges) {
      const int a = perm[u], b = perm[v];
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = std::move(mapped);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string describe(int vertices, const EdgeList& edges) {
  std::string s = "v" + std::to_string(vertices) + ":";
  for (auto [u, v] : edges) s += std::to_string(u) + std::to_string(v) + ",";
  s.pop_back();
  return s;
}

}  // namespace

Multigraph figure1() { return make(4, {{0, 1}, {1, 2}, {1, 3}, {0, 3}}); }

EdgeLabel figure1_label() { return EdgeLabel({4, 1, 2, 3}); }

Multigraph figure2_g1() {
  return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

Multigraph figure2_g2() {
  return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}, {5, 3}, {5, 4}, {0, 3}});
}

FpMatrix example61_m1() {
  return FpMatrix(2, {{1, 1, 1, 1, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 0, 1}});
}

FpMatrix example61_m2() {
  return FpMatrix(3, {{2, 1, 0, 1, 0, 1, 2}, {1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 2}});
}

Multigraph example71() { return make(4, {{0, 2}, {0, 1}, {1, 2}, {1, 3}}); }

Multigraph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }

Matroid uniform23() { return Matroid::uniform(2, 3); }

std::vector<NamedGraph> small_corpus(int max_edges) {
  if (max_edges < 1 || max_edges > 6) throw Error("small_corpus supports 1..6 edges");
  std::vector<NamedGraph> out;
  for (int m = 1; m <= max_edges; ++m)
    for (int vertices = 1; vertices <= m + 1; ++vertices) {
      EdgeList slots;
      for (int u = 0; u < vertices; ++u)
        for (int v = u; v < vertices; ++v) slots.emplace_back(u, v);
      std::set<EdgeList> seen;
      // Multisets of m slots as non-decreasing index sequences.
      std::vector<std::size_t> idx(m, 0);
      while (true) {
        EdgeList edges;
        for (auto i : idx) edges.push_back(slots[i]);
        if (connected(vertices, edges)) {
          EdgeList key = canonical(vertices, edges);
          if (seen.insert(key).second) out.push_back({describe(vertices, key), make(vertices, key)});
        }
        int pos = m - 1;
        while (pos >= 0 && idx[pos] == slots.size() - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < m; ++j) idx[j] = idx[pos];
      }
    }
  return out;
}

std::vector<NamedGraph> random_graphs(std::uint64_t seed, int count, int min_edges, int max_edges) {
  if (min_edges < 1 || max_edges < min_edges) throw Error("random_graphs: bad edge range");
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int m = std::uniform_int_distribution<int>(min_edges, max_edges)(rng);
    const int vertices = std::uniform_int_distribution<int>(1, m)(rng);
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    EdgeList edges;
    // A random spanning tree first keeps the graph connected.
    for (int v = 1; v < vertices; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    while (static_cast<int>(edges.size()) < m) edges.emplace_back(pick(rng), pick(rng));
    std::shuffle(edges.begin(), edges.end(), rng);
    out.push_back({"random" + std::to_string(out.size()) + "-" + describe(vertices, edges), make(vertices, edges)});
  }
  return out;
}

std::vector<NamedGraph> builtin_corpus(std::uint64_t seed) {
  std::vector<NamedGraph> out{{"figure1", figure1()}, {"example71", example71()}, {"triangle", triangle()}};
  for (auto& g : small_corpus(5)) out.push_back(std::move(g));
  for (auto& g : random_graphs(seed, 4, 6, 7)) out.push_back(std::move(g));
  return out;
}

}  // namespace wtg::fixtures
