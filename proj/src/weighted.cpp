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

#include "wtg/weighted.hpp"

#include <bit>
#include <memory>
#include <random>

#include "wtg/error.hpp"
#include "wtg/kernels.hpp"

namespace wtg {

namespace {

const MVPoly kLambda = MVPoly::var(Var::lambda);

void check_size(int n) {
  if (n > kMaxGround) throw GuardError("ground-size", "n = " + std::to_string(n) + " exceeds the n ≤ 24 guard");
}

void check_weight(int n, const WeightFn& f) {
  if (f.n() != n)
    throw Error("weight lives on " + std::to_string(f.n()) + " elements but the instance has " + std::to_string(n));
}

std::vector<int> edge_ids(const Multigraph& g) {
  std::vector<int> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  return ids;
}

int choose(const PivotRule& pivot, const std::vector<int>& ids) {
  const int pos = pivot ? pivot(ids) : 0;
  if (pos < 0 || pos >= static_cast<int>(ids.size())) throw Error("pivot rule returned an invalid position");
  return pos;
}

// Label bits of the graph's current edges, by position.
std::vector<int> label_image(const Multigraph& g, const EdgeLabel& s) {
  std::vector<int> img;
  for (const auto& e : g.edges()) img.push_back(s.of(e.id) - 1);
  return img;
}

std::vector<int> label_image(const Matroid& m, const EdgeLabel& s) {
  std::vector<int> img;
  for (int id : m.elements()) img.push_back(s.of(id) - 1);
  return img;
}

MVPoly power(const MVPoly& base, unsigned e) { return base.pow(e); }

MVPoly tutte_monomial(unsigned i, unsigned j) {
  return shifted_power(Var::x, -1, i) * shifted_power(Var::y, -1, j);
}

SetIndexedPoly chromatic_rec(const Multigraph& g, const EdgeLabel& s, const PivotRule& pivot) {
  const int n = s.size();
  if (g.edge_count() == 0) return SetIndexedPoly::single(SubsetMask::empty(n), power(kLambda, g.vertex_count()));
  const int pos = choose(pivot, edge_ids(g));
  const int label = s.of(g.edge(pos).id);
  const Multigraph deleted = edge_minor(g, pos, MinorKind::Delete);
  SetIndexedPoly del = chromatic_rec(deleted, s, pivot);
  SetIndexedPoly out = setpoly_adjoin(del, label);
  if (g.edge(pos).is_loop()) return out -= del;
  return out -= chromatic_rec(edge_minor(g, pos, MinorKind::Contract), s, pivot);
}

SetIndexedPoly tutte_rec(const Matroid& m, const EdgeLabel& s, const PivotRule& pivot) {
  const int n = s.size();
  if (m.size() == 0) return SetIndexedPoly::single(SubsetMask::empty(n), MVPoly(1));
  const int pos = choose(pivot, m.elements());
  const int label = s.of(m.elements()[pos]);
  const MVPoly xm1 = MVPoly::var(Var::x) - MVPoly(1);
  const MVPoly ym1 = MVPoly::var(Var::y) - MVPoly(1);
  switch (matroid_classify(m, pos)) {
    case ElementKind::Loop: {
      SetIndexedPoly del = tutte_rec(m.deleted(pos), s, pivot);
      return del + ym1 * setpoly_adjoin(del, label);
    }
    case ElementKind::Coloop: {
      SetIndexedPoly con = tutte_rec(m.contracted(pos), s, pivot);
      return xm1 * con + setpoly_adjoin(con, label);
    }
    case ElementKind::Ordinary:
      break;
  }
  return tutte_rec(m.deleted(pos), s, pivot) + setpoly_adjoin(tutte_rec(m.contracted(pos), s, pivot), label);
}

struct TGCoefficients {
  MVPoly alpha, beta, y_minus_alpha, x_minus_beta, y_prime;
};

SetIndexedPoly tg_rec(const Multigraph& g, const EdgeLabel& s, const TGCoefficients& c, TGForm form, BridgeRule rule,
                      const PivotRule& pivot) {
  const int n = s.size();
  if (g.edge_count() == 0) return SetIndexedPoly::single(SubsetMask::empty(n), MVPoly(1));
  const int pos = choose(pivot, edge_ids(g));
  const int label = s.of(g.edge(pos).id);
  const bool phi = form == TGForm::Phi;
  // `adj` multiplies the ∘-carrying summand, `plain` the other one.
  auto combine = [&](const MVPoly& adj, const SetIndexedPoly& a, const MVPoly& plain, const SetIndexedPoly& b) {
    return adj * setpoly_adjoin(a, label) + plain * b;
  };
  switch (classify_edge(g, pos)) {
    case EdgeKind::Loop: {
      SetIndexedPoly del = tg_rec(edge_minor(g, pos, MinorKind::Delete), s, c, form, rule, pivot);
      return phi ? combine(c.alpha, del, c.y_minus_alpha, del) : combine(c.y_minus_alpha, del, c.alpha, del);
    }
    case EdgeKind::Bridge: {
      SetIndexedPoly del = tg_rec(edge_minor(g, pos, MinorKind::Delete), s, c, form, rule, pivot);
      MVPoly x_coeff = c.x_minus_beta, b_coeff = c.beta;
      if (rule == BridgeRule::Literal) {
        x_coeff *= c.y_prime;
        b_coeff *= c.y_prime;
      }
      return phi ? combine(x_coeff, del, b_coeff, del) : combine(b_coeff, del, x_coeff, del);
    }
    case EdgeKind::Ordinary:
      break;
  }
  SetIndexedPoly del = tg_rec(edge_minor(g, pos, MinorKind::Delete), s, c, form, rule, pivot);
  SetIndexedPoly con = tg_rec(edge_minor(g, pos, MinorKind::Contract), s, c, form, rule, pivot);
  return phi ? combine(c.alpha, del, c.beta, con) : combine(c.beta, con, c.alpha, del);
}

}  // namespace

LabelledGraph::LabelledGraph(Multigraph g, EdgeLabel s) : graph(std::move(g)), label(std::move(s)) {
  if (label.size() != graph.edge_count())
    throw Error("label has " + std::to_string(label.size()) + " entries but the graph has " +
                std::to_string(graph.edge_count()) + " edges");
  for (const auto& e : graph.edges())
    if (e.id < 0 || e.id >= label.size()) throw Error("edge id outside the label's domain");
}

LabelledGraph::LabelledGraph(Multigraph g) : LabelledGraph(g, EdgeLabel::identity(g.edge_count())) {}

LabelledMatroid::LabelledMatroid(Matroid m, EdgeLabel s) : matroid(std::move(m)), label(std::move(s)) {
  if (label.size() != matroid.size())
    throw Error("label has " + std::to_string(label.size()) + " entries but the matroid has " +
                std::to_string(matroid.size()) + " elements");
}

LabelledMatroid::LabelledMatroid(Matroid m) : LabelledMatroid(m, EdgeLabel::identity(m.size())) {}

LabelledMatroid::LabelledMatroid(const LabelledGraph& g) : LabelledMatroid(Matroid::graphic(g.graph), g.label) {}

TGParams::TGParams(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  alpha_.canonicalize();
  beta_.canonicalize();
  if (alpha_ == 0 || beta_ == 0) throw Error("Tutte-Grothendieck parameters must be nonzero (α, β ≠ 0)");
}

PivotRule lowest_index_pivot() {
  return [](const std::vector<int>&) { return 0; };
}

PivotRule random_pivot(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const std::vector<int>& ids) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(ids.size()) - 1);
    return pick(*rng);
  };
}

SetIndexedPoly chromatic_expansion(const LabelledGraph& g) {
  const int n = g.n();
  check_size(n);
  const auto img = label_image(g.graph, g.label);
  const std::uint32_t omega = low_bits(n);
  SetIndexedPoly out(n);
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
    const Rational sign = (std::popcount(a) & 1) ? -1 : 1;
    out += SetIndexedPoly::single(SubsetMask(n, omega & ~map_bits(a, img)),
                                  sign * power(kLambda, component_count(g.graph, a)));
  }
  return out;
}

SetIndexedPoly chromatic_recursion(const LabelledGraph& g, const PivotRule& pivot) {
  check_size(g.n());
  return chromatic_rec(g.graph, g.label, pivot);
}

SetIndexedPoly tutte_expansion(const LabelledMatroid& m, WeightSide side) {
  const int n = m.n();
  check_size(n);
  const auto img = label_image(m.matroid, m.label);
  const std::uint32_t omega = low_bits(n);
  const int full = m.matroid.full_rank();
  SetIndexedPoly out(n);
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
    const int r = m.matroid.rank(a);
    std::uint32_t key = map_bits(a, img);
    if (side == WeightSide::Complement) key = omega & ~key;
    out += SetIndexedPoly::single(SubsetMask(n, key), tutte_monomial(full - r, std::popcount(a) - r));
  }
  return out;
}

SetIndexedPoly tutte_recursion(const LabelledMatroid& m, const PivotRule& pivot) {
  check_size(m.n());
  return tutte_rec(m.matroid, m.label, pivot);
}

SetIndexedPoly tg_recursion(const LabelledGraph& g, const TGParams& p, TGForm form, BridgeRule rule,
                            const PivotRule& pivot) {
  check_size(g.n());
  const MVPoly alpha(p.alpha()), beta(p.beta());
  const MVPoly y_minus_alpha = MVPoly::var(Var::Y) - alpha;
  const TGCoefficients c{alpha, beta, y_minus_alpha, MVPoly::var(Var::X) - beta, y_minus_alpha * Rational(1 / p.alpha())};
  return tg_rec(g.graph, g.label, c, form, rule, pivot);
}

MVPoly chromatic_direct(const LabelledGraph& g, const WeightFn& f, Execution exec) {
  check_size(g.n());
  check_weight(g.n(), f);
  const auto ext = extension_table(f, exec);
  const auto keys = component_table(g.graph, exec);
  const auto img = label_image(g.graph, g.label);
  const auto acc = bucket_fold(keys, g.graph.vertex_count() + 1,
                               FoldWeights{ext, img, /*complement=*/true, /*alternate=*/true}, exec);
  MVPoly out;
  for (std::size_t k = 0; k < acc.size(); ++k) out += MVPoly::term(acc[k], Monomial::of(Var::lambda, k));
  return out;
}

MVPoly chromatic_recursive(const LabelledGraph& g, const WeightFn& f, const PivotRule& pivot) {
  check_weight(g.n(), f);
  return setpoly_evaluate(chromatic_recursion(g, pivot), f);
}

MVPoly tutte_direct(const LabelledMatroid& m, const WeightFn& f, WeightSide side, Execution exec) {
  const int n = m.n();
  check_size(n);
  check_weight(n, f);
  const auto ext = extension_table(f, exec);
  const auto ranks = rank_table(m.matroid, exec);
  const int full = m.matroid.full_rank();
  const int stride = n + 1;
  std::vector<int> keys(ranks.size());
  for (std::size_t a = 0; a < ranks.size(); ++a)
    keys[a] = (full - ranks[a]) * stride + (std::popcount(static_cast<std::uint32_t>(a)) - ranks[a]);
  const auto img = label_image(m.matroid, m.label);
  const auto acc = bucket_fold(keys, stride * stride,
                               FoldWeights{ext, img, side == WeightSide::Complement, /*alternate=*/false}, exec);
  MVPoly out;
  for (int i = 0; i < stride; ++i)
    for (int j = 0; j < stride; ++j) {
      const Rational& c = acc[i * stride + j];
      if (c != 0) out.add_scaled(c, tutte_monomial(i, j));
    }
  return out;
}

MVPoly tutte_recursive(const LabelledMatroid& m, const WeightFn& f, const PivotRule& pivot) {
  check_weight(m.n(), f);
  return setpoly_evaluate(tutte_recursion(m, pivot), f);
}

MVPoly tg_phi(const LabelledGraph& g, const WeightFn& f, const TGParams& p, BridgeRule rule,
              const PivotRule& pivot) {
  check_weight(g.n(), f);
  return setpoly_evaluate(tg_recursion(g, p, TGForm::Phi, rule, pivot), f);
}

MVPoly tg_p(const LabelledGraph& g, const WeightFn& f, const TGParams& p, BridgeRule rule,
            const PivotRule& pivot) {
  check_weight(g.n(), f);
  return setpoly_evaluate(tg_recursion(g, p, TGForm::P, rule, pivot), f);
}

MVPoly recipe_transform(const Multigraph& g, const TGParams& p, const MVPoly& tutte) {
  const int k = component_count(g, g.all_edges());
  const int nullity = g.edge_count() - g.vertex_count() + k;
  const int rank = g.vertex_count() - k;
  const Bindings b{{Var::x, MVPoly::var(Var::X) * Rational(1 / p.beta())}, {Var::y, MVPoly::var(Var::Y) * Rational(1 / p.alpha())}};
  return substitute(tutte, b) * Rational(rational_pow(p.alpha(), nullity) * rational_pow(p.beta(), rank));
}

MVPoly chromatic_transform(const Multigraph& g, const MVPoly& tutte) {
  const int k = component_count(g, g.all_edges());
  const int rank = g.vertex_count() - k;
  const Bindings b{{Var::x, MVPoly(1) - kLambda}, {Var::y, MVPoly(0)}};
  MVPoly out = substitute(tutte, b) * power(kLambda, k);
  return rank % 2 ? -out : out;
}

ChromaticTutteCheck verify_theorem_4_3(const LabelledGraph& g, const WeightFn& f) {
  check_weight(g.n(), f);
  if (!is_harmonic(f)) throw Error("harmonicity required");
  ChromaticTutteCheck out;
  out.chromatic = chromatic_direct(g, f);
  out.tutte_side = chromatic_transform(g.graph, tutte_direct(LabelledMatroid(g), f));
  if (f.d() % 2) out.tutte_side = -out.tutte_side;
  out.holds = out.chromatic == out.tutte_side;
  return out;
}

RecipeCheck verify_theorem_5_2(const LabelledGraph& g, const WeightFn& f, const TGParams& p) {
  check_weight(g.n(), f);
  if (!is_harmonic(f)) throw Error("harmonicity required");
  RecipeCheck out;
  out.phi = tg_phi(g, f, p);
  out.p = tg_p(g, f, p);
  const LabelledMatroid m(g);
  out.tutte_side = recipe_transform(g.graph, p, tutte_direct(m, f));
  if (f.d() % 2) out.tutte_side = -out.tutte_side;
  out.recipe_holds = out.phi == out.tutte_side;
  out.sign_relation_holds = out.phi == (f.d() % 2 ? -out.p : out.p);
  out.literal_rule_holds = tg_phi(g, f, p, BridgeRule::Literal) == out.tutte_side;
  out.cotutte_recipe_holds = out.phi == recipe_transform(g.graph, p, tutte_direct(m, f, WeightSide::Complement));
  return out;
}

MVPoly tg_as_chromatic(const LabelledGraph& g, const WeightFn& f, BridgeRule rule) {
  const MVPoly phi = tg_phi(g, f, TGParams(1, -1), rule);
  const Bindings b{{Var::X, kLambda - MVPoly(1)}, {Var::Y, MVPoly(0)}};
  return substitute(phi, b) * power(kLambda, component_count(g.graph, g.graph.all_edges()));
}

}  // namespace wtg
