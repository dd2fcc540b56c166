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
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "wtg/error.hpp"
#include "wtg/linalg.hpp"
#include "wtg/weight.hpp"

using namespace wtg;

namespace {

WeightFn random_weight(std::mt19937_64& rng, int n, int d) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  WeightFn f(n, d);
  for (auto bits : f.subsets()) f.set(SubsetMask(n, bits), Rational(num(rng), den(rng)));
  return f;
}

int sign(int e) { return e % 2 ? -1 : 1; }

}  // namespace

TEST_SUITE("weight") {

TEST_CASE("extension examples") {
  CHECK(extend_tilde(WeightFn::basis(4, 1, 0), SubsetMask::of(4, {1, 3})) == 1);
  CHECK(extend_tilde(WeightFn::ones(4, 2), SubsetMask::of(4, {1, 2, 3})) == 3);
  for (int d = 1; d <= 4; ++d) CHECK(extend_tilde(WeightFn::ones(4, d), SubsetMask::empty(4)) == 0);
  CHECK(extend_tilde(WeightFn::ones(3, 0), SubsetMask::empty(3)) == 1);
  // |X| < d
  CHECK(extend_tilde(WeightFn::ones(5, 3), SubsetMask::of(5, {2, 5})) == 0);
}

TEST_CASE("extension agrees with the subset oracle and is linear") {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) {
      const WeightFn f = random_weight(rng, n, d), g = random_weight(rng, n, d);
      const Rational c(-2, 3);
      const auto table = extension_table(f);
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        CHECK(extend_tilde(f, SubsetMask(n, x)) == oracle::ftilde(f, x));
        CHECK(table[x] == oracle::ftilde(f, x));
        CHECK(extend_tilde(f + c * g, SubsetMask(n, x)) ==
              extend_tilde(f, SubsetMask(n, x)) + c * extend_tilde(g, SubsetMask(n, x)));
      }
    }
}

TEST_CASE("gamma defect") {
  const WeightFn h(4, 1, {1, 1, 1, -3});
  const auto dh = gamma_defect(h);
  REQUIRE(dh.size() == 1);
  CHECK(dh[0].first == SubsetMask::empty(4));
  CHECK(dh[0].second == 0);
  CHECK(is_harmonic(h));

  CHECK(gamma_defect(WeightFn::basis(4, 1, 0))[0].second == 1);
  CHECK_FALSE(is_harmonic(WeightFn::basis(4, 1, 0)));

  const auto d2 = gamma_defect(WeightFn::ones(4, 2));
  REQUIRE(d2.size() == 4);
  CHECK(d2[0].first == SubsetMask::of(4, {1}));
  CHECK(d2[0].second == 3);

  CHECK_THROWS_WITH_AS(gamma_defect(WeightFn::ones(3, 0)), "gamma undefined below degree 1", Error);
  CHECK(is_harmonic(WeightFn::ones(3, 0)));
}

TEST_CASE("harmonic basis dimensions") {
  CHECK(harmonic_basis(4, 1).size() == 3);
  CHECK(harmonic_basis(4, 0).size() == 1);
  CHECK(harmonic_basis(7, 4).empty());
  for (int n = 0; n <= 8; ++n)
    for (int d = 0; d <= n; ++d) {
      const auto basis = harmonic_basis(n, d);
      const long want = d == 0 ? 1
                               : std::max<long>(0, static_cast<long>(binomial_u64(n, d)) -
                                                       static_cast<long>(binomial_u64(n, d - 1)));
      CHECK_MESSAGE(static_cast<long>(basis.size()) == want, "n=", n, " d=", d);
      for (const auto& f : basis) {
        CHECK(f.n() == n);
        CHECK(f.d() == d);
        CHECK(is_harmonic(f));
      }
    }
}

TEST_CASE("harmonic basis is linearly independent") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= n; ++d) {
      const auto basis = harmonic_basis(n, d);
      std::vector<std::vector<BigInt>> rows;
      for (const auto& f : basis) {
        std::vector<BigInt> row;
        BigInt lcm = 1;
        for (const auto& v : f.values()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        for (const auto& v : f.values()) row.push_back(BigInt(v * lcm));
        rows.push_back(row);
      }
      CHECK(integer_rank(rows) == basis.size());
    }
}

TEST_CASE("level sums satisfy the harmonic identity exhaustively") {
  // f^(i)(J) = (-1)^{d-i} C(d,i) f̃(J) for harmonic f.
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= n; ++d)
      for (const auto& f : harmonic_basis(n, d))
        for (std::uint32_t j = 0; j < (1u << n); ++j) {
          const Rational ext = oracle::ftilde(f, j);
          for (int i = 0; i <= d; ++i) {
            Rational brute = 0;
            for (auto z : f.subsets())
              if (std::popcount(z & j) == i) brute += f.value(SubsetMask(n, z));
            const Rational got = level_sum(f, SubsetMask(n, j), i);
            CHECK(got == brute);
            CHECK(got == sign(d - i) * oracle::choose(d, i) * ext);
          }
        }
}

TEST_CASE("level sum examples") {
  CHECK(level_sum(WeightFn::basis(4, 1, 0), SubsetMask::of(4, {2, 3}), 0) == 1);
  CHECK(level_sum(WeightFn::ones(4, 2), SubsetMask::empty(4), 2) == 0);
}

TEST_CASE("complement identity and its corollaries") {
  for (int n = 1; n <= 7; ++n)
    for (int d = 1; d <= n; ++d)
      for (const auto& f : harmonic_basis(n, d)) {
        const std::uint32_t all = low_bits(n);
        for (std::uint32_t j = 0; j <= all; ++j) {
          const Rational a = oracle::ftilde(f, j), b = oracle::ftilde(f, all & ~j);
          CHECK(a == sign(d) * b);
          if (std::popcount(j) > n - d) CHECK(a == 0);
        }
        // every i-set with i < d has zero d-superset sum
        for (int i = 0; i < d; ++i)
          for (auto x : lex_subsets(n, i)) {
            Rational s = 0;
            for (auto z : f.subsets())
              if ((z & x) == x) s += f.value(SubsetMask(n, z));
            CHECK(s == 0);
          }
      }
}

TEST_CASE("symmetrization") {
  // explicit sum over all n! permutations for n ≤ 6
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) {
      const WeightFn f = random_weight(rng, n, d);
      WeightFn sum(n, d);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do sum += f.permuted(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      const WeightFn r = symmetrize(f);
      CHECK(r == sum);
      const Rational c = r.values()[0];
      CHECK(std::all_of(r.values().begin(), r.values().end(), [&](const Rational& v) { return v == c; }));
    }

  CHECK(symmetrize(WeightFn::basis(3, 1, 0)) == WeightFn(3, 1, {2, 2, 2}));
  for (const auto& h : harmonic_basis(5, 2)) CHECK(symmetrize(h) == WeightFn(5, 2));
  const WeightFn c = Rational(3) * WeightFn::ones(5, 2);
  CHECK(symmetrize(c) == Rational(3 * 2 * 6 * 10) * WeightFn::ones(5, 2));
}

TEST_CASE("permutation action") {
  const WeightFn f = WeightFn::indicator(SubsetMask::of(4, {1, 2}));
  const std::vector<int> perm{2, 0, 3, 1};  // 1→3, 2→1, 3→4, 4→2
  CHECK(f.permuted(perm) == WeightFn::indicator(SubsetMask::of(4, {1, 3})));
}

TEST_CASE("invalid weights") {
  CHECK_THROWS_AS(WeightFn(3, 4), Error);
  CHECK_THROWS_AS(WeightFn(3, 1, {1, 2}), Error);
  CHECK_THROWS_AS(WeightFn(25, 0), GuardError);
  WeightFn f(4, 2);
  CHECK_THROWS_AS(f.set(SubsetMask::of(4, {1}), 1), Error);
}

}  // TEST_SUITE
