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

#include "wtg/invariants.hpp"

#include <bit>
#include <map>

#include <omp.h>

#include "wtg/error.hpp"
#include "wtg/fixtures.hpp"
#include "wtg/kernels.hpp"

namespace wtg {

namespace {

const MVPoly kLambda = MVPoly::var(Var::lambda);

void check_label_sum_guard(int n) {
  if (n > 9)
    throw GuardError("label-sum", "label sum over " + std::to_string(n) +
                                      "! labels exceeds the n ≤ 9 guard; use the closed form");
}

void check_weight(int n, const WeightFn& f) {
  if (f.n() != n)
    throw Error("weight lives on " + std::to_string(f.n()) + " elements but the instance has " + std::to_string(n));
}

// Σ_s f̃(s(A)) for |A| = a, as a multiple of n!.
Rational closed_form_factor(int n, int d, int a, const Rational& total) {
  return total * Rational(binomial(a, d)) / Rational(binomial(n, d));
}

InvariantReport make_report(MVPoly p, InvariantMethod m, int n) {
  return InvariantReport{std::move(p), m, factorial(n)};
}

MVPoly label_sum_symbolic(const SetIndexedPoly& t, const WeightFn& f, Execution exec) {
  const auto ext = extension_table(f, exec);
  const auto sums = label_sum_table(f.n(), ext, exec);
  return setpoly_evaluate(t, sums);
}

}  // namespace

std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::Chromatic: return "chromatic";
    case InvariantKind::Tutte: return "tutte";
    case InvariantKind::TutteComplement: return "tutte-complement";
    case InvariantKind::TG: return "tg";
    case InvariantKind::TGP: return "tg-p";
  }
  return "?";
}

std::string to_string(InvariantMethod m) { return m == InvariantMethod::LabelSum ? "label-sum" : "closed-form"; }

MVPoly InvariantReport::normalized() const { return polynomial * Rational(1 / Rational(n_factorial)); }

InvariantReport invariant_label_sum(const Multigraph& g, const WeightFn& f, InvariantKind kind,
                                    const std::optional<TGParams>& params, Execution exec) {
  const int n = g.edge_count();
  check_weight(n, f);
  check_label_sum_guard(n);
  const LabelledGraph lg(g);
  SetIndexedPoly t(n);
  switch (kind) {
    case InvariantKind::Chromatic: t = chromatic_expansion(lg); break;
    case InvariantKind::Tutte: t = tutte_expansion(LabelledMatroid(lg), WeightSide::Subset); break;
    case InvariantKind::TutteComplement: t = tutte_expansion(LabelledMatroid(lg), WeightSide::Complement); break;
    case InvariantKind::TG:
    case InvariantKind::TGP:
      if (!params) throw Error("Tutte-Grothendieck invariants need α and β");
      t = tg_recursion(lg, *params, kind == InvariantKind::TG ? TGForm::Phi : TGForm::P);
      break;
  }
  return make_report(label_sum_symbolic(t, f, exec), InvariantMethod::LabelSum, n);
}

InvariantReport invariant_label_sum(const Matroid& m, const WeightFn& f, InvariantKind kind, Execution exec) {
  if (kind != InvariantKind::Tutte && kind != InvariantKind::TutteComplement)
    throw Error("matroid instances support the tutte invariants only");
  const int n = m.size();
  check_weight(n, f);
  check_label_sum_guard(n);
  const auto side = kind == InvariantKind::Tutte ? WeightSide::Subset : WeightSide::Complement;
  const SetIndexedPoly t = tutte_expansion(LabelledMatroid(m), side);
  return make_report(label_sum_symbolic(t, f, exec), InvariantMethod::LabelSum, n);
}

TutteProfile tutte_profile(const Matroid& m, Execution exec) {
  TutteProfile p;
  p.n = m.size();
  const int stride = p.n + 1;
  const auto ranks = rank_table(m, exec);
  p.full_rank = ranks.back();
  p.counts.assign(static_cast<std::size_t>(stride) * stride * stride, 0);
  for (std::size_t a = 0; a < ranks.size(); ++a) {
    const int size = std::popcount(static_cast<std::uint32_t>(a));
    ++p.counts[((p.full_rank - ranks[a]) * stride + (size - ranks[a])) * stride + size];
  }
  return p;
}

MVPoly profile_invariant(const TutteProfile& p, int d, const Rational& total, WeightSide side) {
  if (d < 0 || d > p.n) throw Error("degree outside [0, n]");
  MVPoly out;
  const Rational scale(factorial(p.n));
  for (int i = 0; i <= p.n; ++i)
    for (int j = 0; j <= p.n; ++j) {
      Rational c = 0;
      for (int a = 0; a <= p.n; ++a) {
        const std::uint64_t k = p.count(i, j, a);
        if (k == 0) continue;
        const int weighted = side == WeightSide::Subset ? a : p.n - a;
        c += Rational(static_cast<unsigned long>(k)) * closed_form_factor(p.n, d, weighted, total);
      }
      if (c != 0) out.add_scaled(Rational(c * scale), shifted_power(Var::x, -1, i) * shifted_power(Var::y, -1, j));
    }
  return out;
}

MVPoly profile_slice(const TutteProfile& p, int a) {
  MVPoly out;
  for (int i = 0; i <= p.n; ++i)
    for (int j = 0; j <= p.n; ++j)
      if (const auto k = p.count(i, j, a))
        out.add_scaled(Rational(static_cast<unsigned long>(k)),
                       shifted_power(Var::x, -1, i) * shifted_power(Var::y, -1, j));
  return out;
}

MVPoly profile_tutte(const TutteProfile& p) {
  MVPoly out;
  for (int a = 0; a <= p.n; ++a) out += profile_slice(p, a);
  return out;
}

InvariantReport invariant_closed_form(const Multigraph& g, const WeightFn& f, InvariantKind kind, Execution exec) {
  const int n = g.edge_count();
  check_weight(n, f);
  if (kind == InvariantKind::Tutte || kind == InvariantKind::TutteComplement)
    return invariant_closed_form(Matroid::graphic(g), f, kind, exec);
  if (kind != InvariantKind::Chromatic) throw Error("closed form offered for chromatic and tutte invariants only");
  const int v = g.vertex_count();
  const auto comps = component_table(g, exec);
  // counts[k * (n+1) + |A|]
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(v + 1) * (n + 1), 0);
  for (std::size_t a = 0; a < comps.size(); ++a)
    ++counts[comps[a] * (n + 1) + std::popcount(static_cast<std::uint32_t>(a))];
  const Rational total = f.total();
  const Rational scale(factorial(n));
  MVPoly out;
  for (int k = 0; k <= v; ++k) {
    Rational c = 0;
    for (int a = 0; a <= n; ++a) {
      const auto cnt = counts[k * (n + 1) + a];
      if (cnt == 0) continue;
      const Rational term = Rational(static_cast<unsigned long>(cnt)) * closed_form_factor(n, f.d(), n - a, total);
      if (a % 2) c -= term;
      else c += term;
    }
    if (c != 0) out += MVPoly::term(Rational(c * scale), Monomial::of(Var::lambda, k));
  }
  return make_report(std::move(out), InvariantMethod::ClosedForm, n);
}

InvariantReport invariant_closed_form(const Matroid& m, const WeightFn& f, InvariantKind kind, Execution exec) {
  if (kind != InvariantKind::Tutte && kind != InvariantKind::TutteComplement)
    throw Error("matroid instances support the tutte invariants only");
  check_weight(m.size(), f);
  const auto side = kind == InvariantKind::Tutte ? WeightSide::Subset : WeightSide::Complement;
  return make_report(profile_invariant(tutte_profile(m, exec), f.d(), f.total(), side), InvariantMethod::ClosedForm,
                     m.size());
}

InvariantIdentityReport verify_invariant_identities(const Multigraph& g, const WeightFn& f, const TGParams& p,
                                                    Execution exec) {
  InvariantIdentityReport r;
  r.phi_hat = invariant_label_sum(g, f, InvariantKind::TG, p, exec).polynomial;
  r.p_hat = invariant_label_sum(g, f, InvariantKind::TGP, p, exec).polynomial;
  r.chi_hat = invariant_label_sum(g, f, InvariantKind::Chromatic, std::nullopt, exec).polynomial;
  r.t_hat = invariant_label_sum(g, f, InvariantKind::Tutte, std::nullopt, exec).polynomial;
  r.tc_hat = invariant_label_sum(g, f, InvariantKind::TutteComplement, std::nullopt, exec).polynomial;
  r.literal_tg = r.phi_hat == recipe_transform(g, p, r.t_hat);
  r.literal_chromatic = r.chi_hat == chromatic_transform(g, r.t_hat);
  r.derived_tg = r.phi_hat == recipe_transform(g, p, r.tc_hat);
  r.derived_p = r.p_hat == recipe_transform(g, p, r.t_hat);
  r.derived_chromatic = r.chi_hat == chromatic_transform(g, r.tc_hat);
  r.literal_expected = f.d() == 0 || is_harmonic(f);
  return r;
}

LogConcavity log_concavity_check(std::vector<Rational> sequence) {
  LogConcavity out;
  for (auto& a : sequence) a = abs(a);
  out.sequence = std::move(sequence);
  const auto& s = out.sequence;
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (s[i - 1] * s[i + 1] > s[i] * s[i]) {
      out.holds = false;
      out.violated_index = i;
      break;
    }
  return out;
}

LogConcavity log_concavity_check(const MVPoly& p) {
  auto c = p.univariate_coefficients(Var::lambda);
  std::vector<Rational> seq(c.rbegin(), c.rend());
  while (!seq.empty() && seq.back() == 0) seq.pop_back();
  return log_concavity_check(std::move(seq));
}

bool Example61Report::weighted_equal() const {
  for (bool b : equal_by_degree)
    if (!b) return false;
  return !equal_by_degree.empty();
}

Example61Report example_6_1_check(Execution exec) {
  const TutteProfile p1 = tutte_profile(Matroid::linear(fixtures::example61_m1()), exec);
  const TutteProfile p2 = tutte_profile(Matroid::linear(fixtures::example61_m2()), exec);
  Example61Report r;
  for (int d = 1; d <= 7; ++d) {
    bool equal = true;
    const auto count = binomial_u64(7, d);
    for (std::size_t k = 0; k < count && equal; ++k) {
      const Rational total = WeightFn::basis(7, d, k).total();
      equal = profile_invariant(p1, d, total) == profile_invariant(p2, d, total);
    }
    r.equal_by_degree.push_back(equal);
  }
  for (int a = 0; a <= 7; ++a) r.slices_equal.push_back(profile_slice(p1, a) == profile_slice(p2, a));
  r.classical_m1 = profile_tutte(p1);
  r.classical_m2 = profile_tutte(p2);
  r.classical_equal = r.classical_m1 == r.classical_m2;
  return r;
}

Example62Report example_6_2_check(Execution exec) {
  const Multigraph g1 = fixtures::figure2_g1();
  const Multigraph g2 = fixtures::figure2_g2();
  const WeightFn f = WeightFn::ones(10, 4);
  Example62Report r{invariant_closed_form(g1, f, InvariantKind::Chromatic, exec),
                    invariant_closed_form(g2, f, InvariantKind::Chromatic, exec), {}, {}, false};
  const WeightFn one = WeightFn::ones(10, 0);
  r.classical_g1 = chromatic_direct(LabelledGraph(g1), one, exec);
  r.classical_g2 = chromatic_direct(LabelledGraph(g2), one, exec);
  r.differ = r.g1.polynomial != r.g2.polynomial;
  return r;
}

SearchReport distinguishing_pair_search(const std::vector<CatalogItem>& catalog, Execution exec) {
  SearchReport report;
  struct Loaded {
    std::size_t index;
    TutteProfile profile;
    MVPoly classical;
  };
  std::vector<Loaded> loaded;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& item = catalog[i];
    if (!item.matroid) {
      report.errors.emplace_back(item.name, item.error.empty() ? "not loaded" : item.error);
      continue;
    }
    if (item.matroid->size() > 12) {
      report.errors.emplace_back(item.name, "catalog entries are guarded at n ≤ 12");
      continue;
    }
    TutteProfile p = tutte_profile(*item.matroid, exec);
    MVPoly t = profile_tutte(p);
    loaded.push_back({i, std::move(p), std::move(t)});
  }
  // Buckets keyed by the canonical text of the classical Tutte polynomial.
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < loaded.size(); ++i) buckets[loaded[i].classical.to_string()].push_back(i);
  for (const auto& [key, members] : buckets)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto& x = loaded[members[a]];
        const auto& y = loaded[members[b]];
        CatalogPair pair{catalog[x.index].name, catalog[y.index].name, {}};
        for (int d = 0; d <= x.profile.n; ++d)
          if (profile_invariant(x.profile, d, 1) != profile_invariant(y.profile, d, 1))
            pair.distinguishing_degrees.push_back(d);
        (pair.distinguishing_degrees.empty() ? report.agreeing : report.distinguishing).push_back(std::move(pair));
      }
  return report;
}

}  // namespace wtg
