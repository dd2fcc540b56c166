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

#include "wtg/combinatorics.hpp"

#include <numeric>

#include "wtg/error.hpp"

namespace wtg {

SubsetMask::SubsetMask(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxGround)
    throw GuardError("ground-size", "ground set size " + std::to_string(n) + " outside [0, 24]");
  if (bits & ~low_bits(n)) throw Error("subset has elements outside {1.." + std::to_string(n) + "}");
}

SubsetMask SubsetMask::of(int n, std::initializer_list<int> elements) {
  return of(n, std::span<const int>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::of(int n, std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw Error("element " + std::to_string(e) + " outside {1.." + std::to_string(n) + "}");
    bits |= 1u << (e - 1);
  }
  return SubsetMask(n, bits);
}

SubsetMask SubsetMask::full(int n) { return SubsetMask(n, low_bits(n)); }

SubsetMask SubsetMask::complement() const { return SubsetMask(n_, ~bits_ & low_bits(n_)); }

SubsetMask SubsetMask::with(int element) const {
  if (element < 1 || element > n_) throw Error("element " + std::to_string(element) + " outside ground set");
  return SubsetMask(n_, bits_ | (1u << (element - 1)));
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint32_t> lex_subsets(int n, int d) {
  std::vector<std::uint32_t> out;
  if (d < 0 || d > n) return out;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    out.push_back(m);
    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<int> unrank_permutation(int n, std::uint64_t index) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> out;
  out.reserve(n);
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = fact[i - 1];
    const auto pick = static_cast<std::size_t>(index / f);
    index %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace wtg
