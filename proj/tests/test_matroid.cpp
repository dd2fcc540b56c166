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

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "wtg/error.hpp"
#include "wtg/fixtures.hpp"
#include "wtg/matroid.hpp"

using namespace wtg;

namespace {

oracle::EdgeList plain(const Multigraph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Normalization, bounded growth, unit increase and submodularity over all
// pairs of subsets.
void check_rank_axioms(const Matroid& m) {
  const std::uint32_t all = m.all();
  CHECK(m.rank(0) == 0);
  for (std::uint32_t a = 0; a <= all; ++a) {
    const int ra = m.rank(a);
    CHECK(ra <= std::popcount(a));
    for (int e = 0; e < m.size(); ++e) {
      if (a >> e & 1u) continue;
      const int diff = m.rank(a | 1u << e) - ra;
      CHECK((diff == 0 || diff == 1));
    }
    for (std::uint32_t b = 0; b <= all; ++b) {
      CHECK(m.rank(a | b) + m.rank(a & b) <= ra + m.rank(b));
      if (b == all) break;
    }
    if (a == all) break;
  }
}

std::vector<Matroid> constructed_matroids() {
  std::vector<Matroid> out;
  for (const auto& [name, g] : fixtures::small_corpus(4)) out.push_back(Matroid::graphic(g));
  for (int n = 0; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) out.push_back(Matroid::uniform(r, n));
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::vector<long>> rows(3, std::vector<long>(6));
      for (auto& row : rows)
        for (auto& v : row) v = static_cast<long>(rng() % p);
      out.push_back(Matroid::linear(FpMatrix(p, rows)));
    }
  out.push_back(Matroid::linear(fixtures::example61_m1()).deleted(0).contracted(2));
  out.push_back(Matroid::graphic(fixtures::figure1()).contracted(1));
  return out;
}

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("graphic rank examples") {
  const Multigraph fig1 = fixtures::figure1();
  CHECK(graphic_rank(fig1, fig1.all_edges()) == 3);
  CHECK(graphic_rank(fig1, 0) == 0);
  const Multigraph loop(1, std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(graphic_rank(loop, 1) == 0);
}

TEST_CASE("linear rank examples") {
  const FpMatrix m1 = fixtures::example61_m1();
  CHECK(linear_rank(m1, 0b1111111u) == 3);
  CHECK(linear_rank(m1, 1u << 3) == 1);
  CHECK(linear_rank(m1, 0) == 0);
  const FpMatrix m2 = fixtures::example61_m2();
  CHECK(linear_rank(m2, 0b1111111u) == 3);
}

TEST_CASE("linear rank agrees with independent row reduction") {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u, 7u})
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<long>> rows(1 + rng() % 4, std::vector<long>(6));
      for (auto& row : rows)
        for (auto& v : row) v = static_cast<long>(rng() % 11) - 5;
      const FpMatrix m(p, rows);
      for (std::uint32_t a = 0; a < 64; ++a) CHECK(linear_rank(m, a) == oracle::linear_rank(p, rows, a));
    }
  for (auto* make : {&fixtures::example61_m1, &fixtures::example61_m2}) {
    const FpMatrix m = make();
    std::vector<std::vector<long>> rows;
    for (const auto& r : m.rows) rows.emplace_back(r.begin(), r.end());
    for (std::uint32_t a = 0; a < 128; ++a) CHECK(linear_rank(m, a) == oracle::linear_rank(m.p, rows, a));
  }
}

TEST_CASE("graphic rank is the largest forest inside A") {
  for (const auto& [name, g] : fixtures::small_corpus(5)) {
    const auto edges = plain(g);
    const int v = g.vertex_count();
    for (std::uint32_t a = 0; a <= g.all_edges(); ++a) {
      int best = 0;
      for (std::uint32_t b = a;; b = (b - 1) & a) {
        if (std::popcount(b) == v - oracle::components(v, edges, b)) best = std::max(best, std::popcount(b));
        if (b == 0) break;
      }
      CHECK_MESSAGE(graphic_rank(g, a) == best, name);
      if (a == g.all_edges()) break;
    }
  }
}

TEST_CASE("rank axioms on every constructed matroid") {
  for (const auto& m : constructed_matroids()) check_rank_axioms(m);
}

TEST_CASE("element classification") {
  const Matroid fig1 = Matroid::graphic(fixtures::figure1());
  CHECK(matroid_classify(fig1, 1) == ElementKind::Coloop);
  CHECK(matroid_classify(fig1, 0) == ElementKind::Ordinary);
  const Matroid zero_col = Matroid::linear(FpMatrix(3, {{1, 0, 2}, {0, 0, 1}}));
  CHECK(matroid_classify(zero_col, 1) == ElementKind::Loop);
  CHECK(matroid_classify(Matroid::uniform(3, 3), 0) == ElementKind::Coloop);
  CHECK(matroid_classify(Matroid::uniform(0, 2), 0) == ElementKind::Loop);

  // loop ⇔ loop and bridge ⇔ coloop on every corpus graph
  for (const auto& [name, g] : fixtures::small_corpus(5)) {
    const Matroid m = Matroid::graphic(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      const EdgeKind ek = classify_edge(g, e);
      const ElementKind mk = matroid_classify(m, e);
      CHECK_MESSAGE((ek == EdgeKind::Loop) == (mk == ElementKind::Loop), name);
      CHECK_MESSAGE((ek == EdgeKind::Bridge) == (mk == ElementKind::Coloop), name);
    }
  }
}

TEST_CASE("matroid minors match graph minors") {
  for (const auto& [name, g] : fixtures::small_corpus(5))
    for (int e = 0; e < g.edge_count(); ++e)
      for (MinorKind kind : {MinorKind::Delete, MinorKind::Contract}) {
        if (kind == MinorKind::Contract && g.edge(e).is_loop()) continue;
        const Matroid mm = matroid_minor(Matroid::graphic(g), e, kind);
        const Multigraph gm = edge_minor(g, e, kind);
        REQUIRE(mm.size() == gm.edge_count());
        for (int p = 0; p < mm.size(); ++p) CHECK(mm.elements()[p] == gm.edge(p).id);
        for (std::uint32_t a = 0; a <= mm.all(); ++a) {
          CHECK_MESSAGE(mm.rank(a) == graphic_rank(gm, a), name);
          if (a == mm.all()) break;
        }
      }
}

TEST_CASE("deletion drops full rank exactly at coloops; contracting a loop changes nothing") {
  for (const auto& m : constructed_matroids())
    for (int e = 0; e < m.size(); ++e) {
      const bool coloop = matroid_classify(m, e) == ElementKind::Coloop;
      CHECK((m.deleted(e).full_rank() == m.full_rank() - 1) == coloop);
      if (matroid_classify(m, e) == ElementKind::Loop) {
        const Matroid c = m.contracted(e), d = m.deleted(e);
        for (std::uint32_t a = 0; a <= c.all(); ++a) {
          CHECK(c.rank(a) == d.rank(a));
          if (a == c.all()) break;
        }
      }
    }
}

TEST_CASE("contraction formula") {
  const Matroid m = Matroid::linear(fixtures::example61_m2());
  for (int e = 0; e < m.size(); ++e) {
    const Matroid c = m.contracted(e);
    for (std::uint32_t a = 0; a <= c.all(); ++a) {
      std::uint32_t lifted = 0;
      for (int p = 0; p < c.size(); ++p)
        if (a >> p & 1u) lifted |= 1u << c.elements()[p];
      CHECK(c.rank(a) == m.rank(lifted | 1u << e) - m.rank(1u << e));
    }
  }
}

TEST_CASE("invalid matroids") {
  CHECK_THROWS_AS(FpMatrix(4, {{1, 0}}), Error);
  CHECK_THROWS_AS(FpMatrix(1, {{1, 0}}), Error);
  CHECK_THROWS_AS(FpMatrix(3, {{1, 0}, {1}}), Error);
  CHECK_THROWS_AS(Matroid::uniform(3, 2), Error);
  CHECK(Matroid::uniform(0, 0).size() == 0);
  CHECK(Matroid::uniform(0, 0).full_rank() == 0);
}

}  // TEST_SUITE
