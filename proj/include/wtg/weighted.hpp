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
#include <functional>
#include <vector>

#include "wtg/execution.hpp"
#include "wtg/graph.hpp"
#include "wtg/matroid.hpp"
#include "wtg/polynomial.hpp"
#include "wtg/setpoly.hpp"
#include "wtg/weight.hpp"

namespace wtg {

/// A graph together with a bijective edge label s: E → Ω.
struct LabelledGraph {
  Multigraph graph;
  EdgeLabel label;

  LabelledGraph(Multigraph g, EdgeLabel s);
  explicit LabelledGraph(Multigraph g);  // identity label
  int n() const { return label.size(); }
};

/// A matroid together with a bijective label of its ground set.
struct LabelledMatroid {
  Matroid matroid;
  EdgeLabel label;

  LabelledMatroid(Matroid m, EdgeLabel s);
  explicit LabelledMatroid(Matroid m);
  explicit LabelledMatroid(const LabelledGraph& g);  // graphic matroid M_G(s)
  int n() const { return label.size(); }
};

/// Deletion-contraction parameters α, β; both must be nonzero.
class TGParams {
 public:
  TGParams(Rational alpha, Rational beta);
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

 private:
  Rational alpha_;
  Rational beta_;
};

/// Bridge step of the Tutte-Grothendieck recursion.
///  Corrected: Φ = (X-β)·f̃(s(e))∘Φ(G∖e) + β·Φ(G∖e)
///  Literal:   both summands carry the extra factor Y' = (Y-α)/α.
/// Only Corrected satisfies the recipe identity (already for d = 0).
enum class BridgeRule { Corrected, Literal };

/// Φ puts the ∘ factor on the deletion summand; P puts it on the other one.
enum class TGForm { Phi, P };

/// Which f̃ value a subset A contributes: f̃(s(A)) or f̃(s(E∖A)).
enum class WeightSide { Subset, Complement };

/// Chooses the position to recurse on, given the original ids of the
/// surviving edges/elements (in position order).
using PivotRule = std::function<int(const std::vector<int>& ids)>;

/// Lowest surviving original index, i.e. position 0.
PivotRule lowest_index_pivot();
/// Uniformly random position from a seeded generator (owned by the rule).
PivotRule random_pivot(std::uint64_t seed);

// Symbolic (set-indexed) forms, before f̃ evaluation.

/// Σ_A (-1)^|A| λ^{k(G_A)} [s(E∖A)].
SetIndexedPoly chromatic_expansion(const LabelledGraph& g);
/// Deletion-contraction: edgeless ↦ λ^m[∅]; loop ↦ f̃(s(e))∘χ(G∖e) - χ(G∖e);
/// otherwise f̃(s(e))∘χ(G∖e) - χ(G/e).
SetIndexedPoly chromatic_recursion(const LabelledGraph& g, const PivotRule& pivot = lowest_index_pivot());

/// Σ_A (x-1)^{ρ(E)-ρ(A)} (y-1)^{|A|-ρ(A)} [s(A)] (or [s(E∖A)]).
SetIndexedPoly tutte_expansion(const LabelledMatroid& m, WeightSide side = WeightSide::Subset);
SetIndexedPoly tutte_recursion(const LabelledMatroid& m, const PivotRule& pivot = lowest_index_pivot());

SetIndexedPoly tg_recursion(const LabelledGraph& g, const TGParams& p, TGForm form,
                            BridgeRule rule = BridgeRule::Corrected,
                            const PivotRule& pivot = lowest_index_pivot());

// Evaluated polynomials.

/// χ_f(G(s); λ) = Σ_A f̃(s(E∖A)) (-1)^|A| λ^{k(G_A)}.
MVPoly chromatic_direct(const LabelledGraph& g, const WeightFn& f, Execution exec = Execution::Parallel);
MVPoly chromatic_recursive(const LabelledGraph& g, const WeightFn& f,
                           const PivotRule& pivot = lowest_index_pivot());

/// T_f(M(s); x, y) = Σ_A f̃(s(A)) (x-1)^{ρ(E)-ρ(A)} (y-1)^{|A|-ρ(A)}.
/// WeightSide::Complement gives the co-weighted form with f̃(s(E∖A)).
MVPoly tutte_direct(const LabelledMatroid& m, const WeightFn& f, WeightSide side = WeightSide::Subset,
                    Execution exec = Execution::Parallel);
MVPoly tutte_recursive(const LabelledMatroid& m, const WeightFn& f,
                       const PivotRule& pivot = lowest_index_pivot());

/// Φ_f(G(s); X, Y, α, β) with the given bridge rule and pivot.
MVPoly tg_phi(const LabelledGraph& g, const WeightFn& f, const TGParams& p,
              BridgeRule rule = BridgeRule::Corrected, const PivotRule& pivot = lowest_index_pivot());
/// P_f(G(s); X, Y, α, β).
MVPoly tg_p(const LabelledGraph& g, const WeightFn& f, const TGParams& p,
            BridgeRule rule = BridgeRule::Corrected, const PivotRule& pivot = lowest_index_pivot());

/// α^{|E|-|V|+k(G)} β^{|V|-k(G)} · T(x → X/β, y → Y/α) for a polynomial T in x, y.
MVPoly recipe_transform(const Multigraph& g, const TGParams& p, const MVPoly& tutte);

/// (-1)^{ρ(E)} λ^{k(G)} · T(x → 1-λ, y → 0).
MVPoly chromatic_transform(const Multigraph& g, const MVPoly& tutte);

struct ChromaticTutteCheck {
  MVPoly chromatic;   ///< χ_f(G(s); λ)
  MVPoly tutte_side;  ///< (-1)^{ρ(E)+d} λ^{k(G)} T_f(M_G(s); 1-λ, 0)
  bool holds = false;
};

/// Harmonic chromatic/Tutte relation. Throws "harmonicity required" unless
/// f is harmonic.
ChromaticTutteCheck verify_theorem_4_3(const LabelledGraph& g, const WeightFn& f);

struct RecipeCheck {
  MVPoly phi;          ///< Φ_f, corrected bridge rule
  MVPoly p;            ///< P_f, corrected bridge rule
  MVPoly tutte_side;   ///< (-1)^d α^{..} β^{..} T_f(M_G(s); X/β, Y/α)
  bool recipe_holds = false;          ///< Φ = tutte_side
  bool sign_relation_holds = false;   ///< Φ = (-1)^d P
  bool literal_rule_holds = false;    ///< recipe with the literal bridge rule
  bool cotutte_recipe_holds = false;  ///< Φ = α^{..}β^{..} T^c_f(X/β, Y/α), any f
};

/// Harmonic recipe identity. Throws "harmonicity required" unless f is
/// harmonic.
RecipeCheck verify_theorem_5_2(const LabelledGraph& g, const WeightFn& f, const TGParams& p);

/// Φ with α = 1, β = -1, X = λ-1, Y = 0, scaled by λ^{k(G)}.
MVPoly tg_as_chromatic(const LabelledGraph& g, const WeightFn& f, BridgeRule rule = BridgeRule::Corrected);

}  // namespace wtg
