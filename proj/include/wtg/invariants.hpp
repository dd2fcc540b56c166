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

#include <optional>
#include <string>
#include <vector>

#include "wtg/weighted.hpp"

namespace wtg {

enum class InvariantKind {
  Chromatic,        ///< χ̂_f
  Tutte,            ///< T̂_f, weight f̃(s(A))
  TutteComplement,  ///< T̂^c_f, weight f̃(s(E∖A))
  TG,               ///< Φ̂_f (corrected bridge rule, lowest-index pivot)
  TGP,              ///< P̂_f
};

enum class InvariantMethod { LabelSum, ClosedForm };

std::string to_string(InvariantKind k);
std::string to_string(InvariantMethod m);

/// A label-sum invariant. `polynomial` already includes the n! scale.
struct InvariantReport {
  MVPoly polynomial;
  InvariantMethod method = InvariantMethod::LabelSum;
  BigInt n_factorial;

  /// polynomial / n!.
  MVPoly normalized() const;
};

/// Σ over all n! bijective labels. TG kinds need `params`. Guarded at n ≤ 9.
InvariantReport invariant_label_sum(const Multigraph& g, const WeightFn& f, InvariantKind kind,
                                    const std::optional<TGParams>& params = std::nullopt,
                                    Execution exec = Execution::Parallel);
/// Matroid instances support the Tutte kinds only.
InvariantReport invariant_label_sum(const Matroid& m, const WeightFn& f, InvariantKind kind,
                                    Execution exec = Execution::Parallel);

/// Uses Σ_s f̃(s(A)) = n!·F·C(|A|,d)/C(n,d) with F = Σ_Z f(Z); the complement
/// side uses C(n-|A|,d). Chromatic and Tutte kinds only.
InvariantReport invariant_closed_form(const Multigraph& g, const WeightFn& f, InvariantKind kind,
                                      Execution exec = Execution::Parallel);
InvariantReport invariant_closed_form(const Matroid& m, const WeightFn& f, InvariantKind kind,
                                      Execution exec = Execution::Parallel);

/// Subset counts of a matroid by (ρ(E)-ρ(A), |A|-ρ(A), |A|). Everything the
/// closed-form Tutte invariants need, for every d and f at once.
struct TutteProfile {
  int n = 0;
  int full_rank = 0;
  /// counts[(i * (n+1) + j) * (n+1) + a]
  std::vector<std::uint64_t> counts;

  std::uint64_t count(int i, int j, int a) const { return counts[(i * (n + 1) + j) * (n + 1) + a]; }
};

TutteProfile tutte_profile(const Matroid& m, Execution exec = Execution::Parallel);
/// Closed-form T̂ (or T̂^c) for degree d and F = Σ f, scale n! included.
MVPoly profile_invariant(const TutteProfile& p, int d, const Rational& total, WeightSide side = WeightSide::Subset);
/// Σ_{|A|=a} (x-1)^{ρ(E)-ρ(A)} (y-1)^{|A|-ρ(A)}.
MVPoly profile_slice(const TutteProfile& p, int a);
/// Classical Tutte polynomial from the profile.
MVPoly profile_tutte(const TutteProfile& p);

/// Label-sum versions of the chromatic/TG corollary identities.
struct InvariantIdentityReport {
  MVPoly phi_hat, p_hat, chi_hat, t_hat, tc_hat;
  /// The forms written against T̂:
  ///   Φ̂ = α^{|E|-|V|+k} β^{|V|-k} T̂(X/β, Y/α),  χ̂ = (-1)^{ρ(E)} λ^k T̂(1-λ, 0).
  bool literal_tg = false;
  bool literal_chromatic = false;
  /// Forms that hold for every f: Φ̂ and χ̂ against T̂^c, P̂ against T̂.
  bool derived_tg = false;
  bool derived_p = false;
  bool derived_chromatic = false;
  /// d = 0 or harmonic f, where T̂ = T̂^c and the T̂ forms must hold.
  bool literal_expected = false;

  bool derived_all() const { return derived_tg && derived_p && derived_chromatic; }
  bool literal_all() const { return literal_tg && literal_chromatic; }
};

InvariantIdentityReport verify_invariant_identities(const Multigraph& g, const WeightFn& f, const TGParams& p,
                                                    Execution exec = Execution::Parallel);

struct LogConcavity {
  bool holds = true;
  std::optional<std::size_t> violated_index;
  std::vector<Rational> sequence;  ///< the |coefficients| that were checked
};

/// a_{i-1} a_{i+1} ≤ a_i² for every interior i.
LogConcavity log_concavity_check(std::vector<Rational> sequence);
/// |coefficients| of a univariate λ-polynomial from the leading term down,
/// with the trailing zeros of a λ^k factor dropped. Throws on other variables.
LogConcavity log_concavity_check(const MVPoly& p);

struct Example61Report {
  /// Per d = 1..7: T̂_f(M1) = T̂_f(M2) for every basis element of Hom_d(7).
  std::vector<bool> equal_by_degree;
  /// Per a = 0..7: equality of the size-refined rank generating sums.
  std::vector<bool> slices_equal;
  bool classical_equal = false;
  MVPoly classical_m1, classical_m2;

  bool weighted_equal() const;
};

Example61Report example_6_1_check(Execution exec = Execution::Parallel);

struct Example62Report {
  InvariantReport g1, g2;
  MVPoly classical_g1, classical_g2;  ///< d = 0, f(∅) = 1 chromatic polynomials
  bool differ = false;
};

/// Closed-form χ̂ of the two ten-edge graphs for f ≡ 1 on Ω_4.
Example62Report example_6_2_check(Execution exec = Execution::Parallel);

struct CatalogItem {
  std::string name;
  std::optional<Matroid> matroid;
  std::string error;  ///< set when the entry failed to load
};

struct CatalogPair {
  std::string first, second;
  std::vector<int> distinguishing_degrees;  ///< empty when all invariants agree
};

struct SearchReport {
  std::vector<std::pair<std::string, std::string>> errors;  ///< (item, diagnostic)
  std::vector<CatalogPair> distinguishing;
  std::vector<CatalogPair> agreeing;
};

/// Buckets by classical Tutte polynomial, then compares the closed-form
/// weighted Tutte invariants for d = 0..n within each bucket.
SearchReport distinguishing_pair_search(const std::vector<CatalogItem>& catalog,
                                        Execution exec = Execution::Parallel);

}  // namespace wtg
