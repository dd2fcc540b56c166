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

#include "wtg/setpoly.hpp"

#include "wtg/error.hpp"
#include "wtg/weight.hpp"

namespace wtg {

SetIndexedPoly SetIndexedPoly::single(const SubsetMask& s, const MVPoly& c) {
  SetIndexedPoly t(s.n());
  t.add_term(s.bits(), c);
  return t;
}

MVPoly SetIndexedPoly::coeff(const SubsetMask& s) const {
  auto it = terms_.find(s.bits());
  return it == terms_.end() ? MVPoly() : it->second;
}

void SetIndexedPoly::add_term(std::uint32_t key, const MVPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SetIndexedPoly& SetIndexedPoly::operator+=(const SetIndexedPoly& o) {
  if (o.n_ != n_) throw Error("set-indexed polynomials over different ground sets");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SetIndexedPoly& SetIndexedPoly::operator-=(const SetIndexedPoly& o) {
  if (o.n_ != n_) throw Error("set-indexed polynomials over different ground sets");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SetIndexedPoly& SetIndexedPoly::operator*=(const MVPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

SetIndexedPoly SetIndexedPoly::relabelled(std::span<const int> image) const {
  if (static_cast<int>(image.size()) != n_) throw Error("relabel image size mismatch");
  SetIndexedPoly out(n_);
  for (const auto& [k, c] : terms_) out.add_term(map_bits(k, image), c);
  return out;
}

std::string SetIndexedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*[" + SubsetMask(n_, k).to_string() + "]";
  }
  return s;
}

SetIndexedPoly setpoly_adjoin(const SetIndexedPoly& t, int j) {
  if (j < 1 || j > t.n()) throw Error("adjoin element " + std::to_string(j) + " outside ground set");
  const std::uint32_t bit = 1u << (j - 1);
  SetIndexedPoly out(t.n());
  for (const auto& [k, c] : t.terms()) out += SetIndexedPoly::single(SubsetMask(t.n(), k | bit), c);
  return out;
}

MVPoly setpoly_evaluate(const SetIndexedPoly& t, const WeightFn& f) {
  if (t.n() != f.n())
    throw Error("dimension mismatch: set-indexed polynomial on " + std::to_string(t.n()) +
                " elements, weight on " + std::to_string(f.n()));
  MVPoly out;
  for (const auto& [k, c] : t.terms()) out.add_scaled(extend_tilde(f, SubsetMask(t.n(), k)), c);
  return out;
}

MVPoly setpoly_evaluate(const SetIndexedPoly& t, std::span<const Rational> extension) {
  if (extension.size() != (std::size_t{1} << t.n())) throw Error("dimension mismatch in f̃ table");
  MVPoly out;
  for (const auto& [k, c] : t.terms()) out.add_scaled(extension[k], c);
  return out;
}

}  // namespace wtg
