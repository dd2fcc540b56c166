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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "wtg/categorification.hpp"
#include "wtg/error.hpp"
#include "wtg/fixtures.hpp"
#include "wtg/linalg.hpp"

using namespace wtg;

namespace {

const MVPoly q = MVPoly::var(Var::q);
const MVPoly x = MVPoly::var(Var::x);
const MVPoly y = MVPoly::var(Var::y);

std::size_t matrix_rank(const DifferentialMatrix& m) {
  std::vector<std::vector<BigInt>> dense(m.rows, std::vector<BigInt>(m.cols, 0));
  for (const auto& [rc, v] : m.entries) dense[rc.first][rc.second] = BigInt(v);
  return integer_rank(dense);
}

std::vector<int> ks(const std::vector<Summand>& level) {
  std::vector<int> out;
  for (const auto& s : level) out.push_back(s.k);
  return out;
}

}  // namespace

TEST_SUITE("categorification") {

TEST_CASE("triangle with a pendant edge: cochain groups") {
  const LabelledGraph g(fixtures::example71());
  const CochainComplex c = build_complex(g, ComplexKind::Chromatic);
  REQUIRE(c.levels.size() == 5);
  CHECK(ks(c.levels[0]) == std::vector<int>{4});
  CHECK(ks(c.levels[1]) == std::vector<int>{3, 3, 3, 3});
  CHECK(ks(c.levels[2]) == std::vector<int>{2, 2, 2, 2, 2, 2});
  // the triangle a1 a2 a3 leaves vertex 3 isolated: M⊗M ⊕ M ⊕ M ⊕ M
  auto k3 = ks(c.levels[3]);
  std::sort(k3.begin(), k3.end());
  CHECK(k3 == std::vector<int>{1, 1, 1, 2});
  CHECK(c.levels[3][0].epsilon == 0b0111u);
  CHECK(c.levels[3][0].k == 2);
  CHECK(ks(c.levels[4]) == std::vector<int>{1});
  CHECK(c.dimension(0) == 16);
  CHECK(c.dimension(3) == 4 + 2 + 2 + 2);
}

TEST_CASE("triangle with a pendant edge: weighted graded dimensions") {
  const LabelledGraph g(fixtures::example71());
  const CochainComplex c = build_complex(g, ComplexKind::Chromatic);
  for (const auto& f : harmonic_basis(4, 1)) {
    const Rational a4 = f.values()[3];
    const auto dims = fqdim_complex(c, f);
    REQUIRE(dims.size() == 5);
    CHECK(dims[0].is_zero());
    CHECK(dims[1].is_zero());
    CHECK(dims[2].is_zero());
    CHECK(dims[3] == -a4 * (1 + q).pow(2) + a4 * (1 + q));
    CHECK(dims[4].is_zero());
    const auto r = verify_chromatic_euler(g, f);
    CHECK(r.derived_holds);
    CHECK(r.literal_holds);
    CHECK(r.s == -a4 * (1 + q).pow(2) + a4 * (1 + q));
  }
}

TEST_CASE("small complexes") {
  const LabelledGraph edgeless(Multigraph(3, std::vector<Edge>{}));
  const CochainComplex e = build_complex(edgeless, ComplexKind::Chromatic);
  REQUIRE(e.levels.size() == 1);
  CHECK(e.levels[0][0].k == 3);
  const auto h = homology_dims(e, build_differential(e));
  REQUIRE(h.size() == 1);
  CHECK(h[0] == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}, {{1, 0}, 3}, {{2, 0}, 3}, {{3, 0}, 1}});
  const WeightFn c0(0, 0, {Rational(2)});
  CHECK(fqdim_complex(e, c0)[0] == 2 * (1 + q).pow(3));

  const LabelledGraph loop(Multigraph(1, std::vector<std::pair<int, int>>{{0, 0}}));
  const CochainComplex t = build_complex(loop, ComplexKind::Tutte);
  CHECK(t.levels[1][0].k == 1);
  CHECK(t.levels[1][0].b1 == 1);
  CHECK(t.levels[1][0].qdim == (1 + x) * (1 + y));

  const LabelledGraph bridge(Multigraph(2, std::vector<std::pair<int, int>>{{0, 1}}));
  const CochainComplex b = build_complex(bridge, ComplexKind::Chromatic);
  const auto ds = build_differential(b);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].rows == 2);
  CHECK(ds[0].cols == 4);
  // m: M⊗M → M is onto, kernel spanned by 1⊗x - x⊗1 and x⊗x
  CHECK(matrix_rank(ds[0]) == 2);
  CHECK(euler_from_homology(ComplexKind::Chromatic, homology_dims(b, ds)) == q * q + q);
}

TEST_CASE("differentials square to zero and preserve degree") {
  for (const auto& [name, g] : fixtures::small_corpus(5))
    for (auto kind : {ComplexKind::Chromatic, ComplexKind::Tutte}) {
      const CochainComplex c = build_complex(LabelledGraph(g), kind);
      const auto ds = build_differential(c);
      CHECK_MESSAGE(squares_to_zero(ds), name);
      CHECK_MESSAGE(degree_preserving(c, ds), name);
      for (std::size_t i = 0; i + 1 < ds.size(); ++i) CHECK(compose(ds[i + 1], ds[i]).entries.empty());
    }
}

TEST_CASE("Euler characteristic from homology equals the cochain one") {
  for (const auto& [name, g] : fixtures::small_corpus(4))
    for (auto kind : {ComplexKind::Chromatic, ComplexKind::Tutte}) {
      const CochainComplex c = build_complex(LabelledGraph(g), kind);
      CHECK_MESSAGE(euler_from_homology(kind, homology_dims(c, build_differential(c))) == euler_from_cochains(c), name);
    }
}

TEST_CASE("unweighted Euler characteristics against the classical polynomials") {
  for (const auto& [name, g] : fixtures::small_corpus(5)) {
    const LabelledGraph lg(g);
    const auto chi = oracle::chromatic(g.vertex_count(), support::plain(g), lg.label.values(), WeightFn::ones(g.edge_count(), 0));
    MVPoly chi_poly;
    for (const auto& [e, c] : chi) chi_poly += c * MVPoly::var(Var::lambda).pow(e[0]);
    CHECK_MESSAGE(euler_from_cochains(build_complex(lg, ComplexKind::Chromatic)) == substitute(chi_poly, {{Var::lambda, 1 + q}}), name);
  }
  // triangle: Σ_A (-1)^|A| (1+x)^k (1+y)^β₁ over the 8 subsets
  const LabelledGraph tri(fixtures::triangle());
  const MVPoly s = (1 + x).pow(3) - 3 * (1 + x).pow(2) + 3 * (1 + x) - (1 + x) * (1 + y);
  CHECK(euler_from_cochains(build_complex(tri, ComplexKind::Tutte)) == s);
  CHECK(s == (1 + x) * (x * x - x - y));
  const auto r = verify_tutte_euler(tri, WeightFn::ones(3, 0));
  CHECK(r.derived_holds);
  CHECK(r.s == -s);
}

TEST_CASE("weighted Euler identities on the corpus") {
  bool even_sign_seen = false;
  for (const auto& [name, g] : fixtures::small_corpus(5)) {
    const LabelledGraph lg(g);
    for (const auto& f : support::harm_bases(g.edge_count())) {
      const auto c = verify_chromatic_euler(lg, f);
      CHECK_MESSAGE(c.derived_holds, name);
      if (f.d() % 2 == 1) CHECK_MESSAGE(c.literal_holds, name);
      if (f.d() % 2 == 0 && !c.s.is_zero()) {
        CHECK_FALSE(c.literal_holds);
        even_sign_seen = true;
      }
      CHECK_MESSAGE(verify_tutte_euler(lg, f).derived_holds, name);
    }
  }
  CHECK(even_sign_seen);
  CHECK_THROWS_WITH_AS(verify_chromatic_euler(LabelledGraph(fixtures::example71()), WeightFn::basis(4, 1, 0)), "harmonicity required", Error);
  CHECK_THROWS_WITH_AS(verify_tutte_euler(LabelledGraph(fixtures::example71()), WeightFn::basis(4, 1, 0)), "harmonicity required", Error);
}

TEST_CASE("edgeless graph, Tutte side") {
  const LabelledGraph e(Multigraph(2, std::vector<Edge>{}));
  const auto r = verify_tutte_euler(e, WeightFn(0, 0, {Rational(3)}));
  CHECK(r.s == -3 * (1 + x).pow(2));
  CHECK(r.derived_holds);
}

TEST_CASE("graded dimension is additive over any split") {
  std::mt19937_64 rng(77);
  const CochainComplex c = build_complex(LabelledGraph(fixtures::figure1()), ComplexKind::Tutte);
  const WeightFn f = support::random_weight(rng, 4, 2);
  for (const auto& level : c.levels)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Summand> a, b;
      for (const auto& s : level) (rng() % 2 ? a : b).push_back(s);
      CHECK(fqdim(a, f) + fqdim(b, f) == fqdim(level, f));
    }
}

TEST_CASE("complexes are label covariant") {
  std::mt19937_64 rng(78);
  for (const auto& [name, g] : fixtures::small_corpus(4)) {
    const int n = g.edge_count();
    const EdgeLabel s = support::random_label(rng, n), t = support::random_label(rng, n);
    for (auto kind : {ComplexKind::Chromatic, ComplexKind::Tutte}) {
      const CochainComplex cs = build_complex(LabelledGraph(g, s), kind);
      const CochainComplex ct = build_complex(LabelledGraph(g, t), kind);
      for (std::size_t lvl = 0; lvl < cs.levels.size(); ++lvl)
        for (std::size_t i = 0; i < cs.levels[lvl].size(); ++i) {
          const Summand &a = cs.levels[lvl][i], &b = ct.levels[lvl][i];
          CHECK(a.epsilon == b.epsilon);
          CHECK(a.qdim == b.qdim);
          // σ = t∘s⁻¹ carries every weight set of s to the one of t
          std::uint32_t mapped = 0;
          for (int e : a.weight_set.elements())
            for (int p = 0; p < n; ++p)
              if (s.of(p) == e) mapped |= 1u << (t.of(p) - 1);
          CHECK(mapped == b.weight_set.bits());
        }
    }
  }
}

TEST_CASE("guards") {
  std::vector<std::pair<int, int>> many;
  for (int i = 0; i < 17; ++i) many.emplace_back(0, 0);
  CHECK_THROWS_AS(build_complex(LabelledGraph(Multigraph(1, many)), ComplexKind::Chromatic), GuardError);
  many.resize(13);
  const CochainComplex c = build_complex(LabelledGraph(Multigraph(1, many)), ComplexKind::Chromatic);
  CHECK_THROWS_AS(build_differential(c), GuardError);
}

}  // TEST_SUITE
