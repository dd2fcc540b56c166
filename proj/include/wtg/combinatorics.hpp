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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wtg/rational.hpp"

namespace wtg {

/// Largest ground set handled by subset enumeration (2^n work).
inline constexpr int kMaxGround = 24;

/// A subset of Ω = {1..n}. Element i lives in bit i-1.
class SubsetMask {
 public:
  SubsetMask() = default;
  /// Throws if n is out of range or bits outside Ω are set.
  SubsetMask(int n, std::uint32_t bits);
  static SubsetMask empty(int n) { return SubsetMask(n, 0); }
  static SubsetMask full(int n);
  static SubsetMask of(int n, std::initializer_list<int> elements);
  static SubsetMask of(int n, std::span<const int> elements);

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
  bool is_subset_of(const SubsetMask& o) const { return (bits_ & ~o.bits_) == 0; }

  SubsetMask with(int element) const;
  SubsetMask operator|(const SubsetMask& o) const { return {n_, bits_ | o.bits_}; }
  SubsetMask operator&(const SubsetMask& o) const { return {n_, bits_ & o.bits_}; }
  SubsetMask complement() const;

  /// Elements in increasing order, 1-based.
  std::vector<int> elements() const;
  std::string to_string() const;

  bool operator==(const SubsetMask&) const = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

inline std::uint32_t low_bits(int n) { return n == 0 ? 0u : (~0u >> (32 - n)); }

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
/// Small-argument binomial as a machine integer.
std::uint64_t binomial_u64(unsigned n, unsigned k);

/// All d-subsets of {1..n} as bitmasks, ordered lexicographically by their
/// sorted element lists ({1,2} < {1,3} < {2,3}).
std::vector<std::uint32_t> lex_subsets(int n, int d);

/// The permutation of {0..n-1} with the given index in lexicographic order.
std::vector<int> unrank_permutation(int n, std::uint64_t index);

/// Maps a bitmask over positions 0..n-1 through `image` (position -> bit).
inline std::uint32_t map_bits(std::uint32_t bits, std::span<const int> image) {
  std::uint32_t out = 0;
  while (bits) {
    const int i = std::countr_zero(bits);
    out |= 1u << image[i];
    bits &= bits - 1;
  }
  return out;
}

}  // namespace wtg
