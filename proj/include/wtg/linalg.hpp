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
#include <vector>

#include "wtg/rational.hpp"

namespace wtg {

/// Dense row-major matrix of exact rationals.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of the right null space, one vector per free column (free entry 1).
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

std::size_t rank(RationalMatrix m);

/// Rank of an integer matrix over Q via fraction-free (Bareiss) elimination.
std::size_t integer_rank(std::vector<std::vector<BigInt>> m);

/// Rank over F_p of a matrix with entries already reduced mod p.
/// Pivot: first nonzero entry in the lowest remaining row.
int rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p);

}  // namespace wtg
