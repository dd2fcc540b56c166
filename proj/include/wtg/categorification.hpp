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
#include <utility>
#include <vector>

#include "wtg/weighted.hpp"

namespace wtg {

enum class ComplexKind { Chromatic, Tutte };

/// One direct summand, indexed by an edge vector ε (bitmask over edge
/// positions). Chromatic: M^{⊗k}, qdim (1+q)^k. Tutte: A^{⊗k} ⊗ B^{⊗b1},
/// qdim (1+x)^k (1+y)^{b1}.
struct Summand {
  std::uint32_t epsilon = 0;
  int k = 0;
  int b1 = 0;
  SubsetMask weight_set;  ///< s(A) for the edges A of ε
  MVPoly qdim;

  /// Number of tensor factors carrying a basis bit.
  int factors(ComplexKind kind) const { return kind == ComplexKind::Chromatic ? k : k + b1; }
};

/// levels[q] lists the summands with |ε| = q in increasing bitmask order.
struct CochainComplex {
  ComplexKind kind = ComplexKind::Chromatic;
  Multigraph graph;
  EdgeLabel label;
  std::vector<std::vector<Summand>> levels;

  /// Offset of each summand's basis block inside level q.
  std::vector<std::size_t> offsets(int q) const;
  std::size_t dimension(int q) const;
  /// Grading of basis vector `index` of level q: (#x factors, #y factors).
  std::pair<int, int> degree(int q, std::size_t index) const;
};

/// Guarded at n ≤ 16.
CochainComplex build_complex(const LabelledGraph& g, ComplexKind kind);

/// Σ over the summands of f̃(weight_set)·qdim.
MVPoly fqdim(std::span<const Summand> summands, const WeightFn& f);
/// fqdim per level q.
std::vector<MVPoly> fqdim_complex(const CochainComplex& c, const WeightFn& f);

/// Sparse integer matrix from level q to level q+1, keyed (row, col).
struct DifferentialMatrix {
  int source_q = 0;
  std::size_t rows = 0;  ///< dimension of level q+1
  std::size_t cols = 0;  ///< dimension of level q
  std::map<std::pair<std::size_t, std::size_t>, long> entries;
};

/// d^q for q = 0..n-1. Guarded at n ≤ 12.
std::vector<DifferentialMatrix> build_differential(const CochainComplex& c);

/// d^{q+1} ∘ d^q as a sparse matrix.
DifferentialMatrix compose(const DifferentialMatrix& next, const DifferentialMatrix& d);
bool squares_to_zero(const std::vector<DifferentialMatrix>& ds);
/// Every entry maps between basis vectors of equal degree.
bool degree_preserving(const CochainComplex& c, const std::vector<DifferentialMatrix>& ds);

/// dims[q][(i, j)] = dimension over Q of H^q in degree (i, j); chromatic
/// degrees use j = 0.
using HomologyTable = std::vector<std::map<std::pair<int, int>, std::size_t>>;
HomologyTable homology_dims(const CochainComplex& c, const std::vector<DifferentialMatrix>& ds);

/// Σ_q (-1)^q Σ dim·q^i (chromatic) or x^i y^j (Tutte).
MVPoly euler_from_homology(ComplexKind kind, const HomologyTable& h);
/// Σ_q (-1)^q qdim(C^q).
MVPoly euler_from_cochains(const CochainComplex& c);

struct EulerReport {
  MVPoly s;          ///< Σ_i (-1)^{i+1} fqdim(C^i)
  MVPoly polynomial; ///< χ_f(λ = 1+q), or T_f(x, y)
  MVPoly derived;    ///< the side the derived identity equates with s
  bool derived_holds = false;
  bool literal_holds = false;  ///< s equals `polynomial` with no sign or substitution
};

/// Checks χ_f(G(s); 1+q) = (-1)^{d+1} S. Throws "harmonicity required"
/// unless f is harmonic.
EulerReport verify_chromatic_euler(const LabelledGraph& g, const WeightFn& f);

/// Checks S = (-1)^{ρ(E)+1} (1+x)^{k(G)} T_f(M_G(s); -x, -y). Throws
/// "harmonicity required" unless f is harmonic.
EulerReport verify_tutte_euler(const LabelledGraph& g, const WeightFn& f);

}  // namespace wtg
