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
#include <string>
#include <vector>

#include "wtg/graph.hpp"
#include "wtg/matroid.hpp"

namespace wtg::fixtures {

/// Four vertices v1..v4 (0..3), edges v1v2, v2v3, v2v4, v1v4.
Multigraph figure1();
/// The label [4,1,2,3] used with figure1().
EdgeLabel figure1_label();

/// Five outer vertices p0..p4 on a cycle and a hub h = 5.
/// G1 joins the hub to every outer vertex.
Multigraph figure2_g1();
/// G2 joins the hub to p0, p2, p3, p4 and adds the chord p0p3.
Multigraph figure2_g2();

/// The two 3×7 representations over F_2 and F_3.
FpMatrix example61_m1();
FpMatrix example61_m2();

/// Triangle on vertices 0,1,2 plus the pendant edge 1-3; edges in the order
/// a1 = 0-2, a2 = 0-1, a3 = 1-2, a4 = 1-3.
Multigraph example71();

Multigraph triangle();
Matroid uniform23();

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// Every connected multigraph (loops and parallel edges allowed) with
/// 1..max_edges edges, one representative per isomorphism class, in a fixed
/// order. max_edges ≤ 6.
std::vector<NamedGraph> small_corpus(int max_edges = 5);

/// Connected random multigraphs with edge counts in [min_edges, max_edges].
/// Deterministic for a given seed.
std::vector<NamedGraph> random_graphs(std::uint64_t seed, int count, int min_edges, int max_edges);

/// The named graphs above plus small_corpus(5) plus four seeded random
/// graphs with 6-7 edges.
std::vector<NamedGraph> builtin_corpus(std::uint64_t seed = 20260101);

}  // namespace wtg::fixtures
