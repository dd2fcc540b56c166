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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wtg/rational.hpp"

namespace wtg {

/// The fixed variable alphabet. Enumerator order is the lexicographic
/// variable order used by the canonical form.
enum class Var : std::uint8_t { lambda = 0, x, y, X, Y, q };

inline constexpr std::size_t kVarCount = 6;

std::string_view var_name(Var v);
/// Accepts the canonical names plus "lambda" as an ASCII spelling of λ.
Var parse_var(std::string_view name);

/// Exponent vector over the alphabet.
struct Monomial {
  std::array<std::uint16_t, kVarCount> exp{};

  static Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
    return m;
  }
  unsigned degree() const;
  unsigned operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  bool is_constant() const { return degree() == 0; }
  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: higher total degree first, then lexicographically
/// larger exponent vectors first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored, so equality is term-set equality.
class MVPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MVPoly() = default;
  MVPoly(const Rational& c);  // NOLINT: constants promote implicitly
  MVPoly(long c) : MVPoly(Rational(c)) {}  // NOLINT
  MVPoly(int c) : MVPoly(Rational(c)) {}   // NOLINT

  static MVPoly var(Var v) { return term(Rational(1), Monomial::of(v)); }
  static MVPoly term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  /// Constant term value; throws if the polynomial is not constant.
  Rational constant_value() const;
  bool is_constant() const;
  unsigned degree_in(Var v) const;
  unsigned total_degree() const;
  bool uses(Var v) const { return degree_in(v) > 0; }

  MVPoly& operator+=(const MVPoly& o);
  MVPoly& operator-=(const MVPoly& o);
  MVPoly& operator*=(const MVPoly& o);
  MVPoly& operator*=(const Rational& c);
  /// this += c * o, without materializing c * o.
  void add_scaled(const Rational& c, const MVPoly& o);

  friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
  friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
  friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
  friend MVPoly operator*(MVPoly a, const Rational& c) { return a *= c; }
  friend MVPoly operator*(const Rational& c, MVPoly a) { return a *= c; }
  // Integer scalars would otherwise be ambiguous between the two conversions.
  friend MVPoly operator*(long c, MVPoly a) { return a *= Rational(c); }
  friend MVPoly operator*(int c, MVPoly a) { return a *= Rational(c); }
  friend MVPoly operator*(MVPoly a, long c) { return a *= Rational(c); }
  friend MVPoly operator*(MVPoly a, int c) { return a *= Rational(c); }
  MVPoly operator-() const;
  bool operator==(const MVPoly& o) const { return terms_ == o.terms_; }

  MVPoly pow(unsigned e) const;

  /// Coefficients c_0..c_deg of a polynomial in the single variable v.
  /// Throws if any other variable occurs.
  std::vector<Rational> univariate_coefficients(Var v) const;

  std::string to_string() const;
  static MVPoly parse(std::string_view text);

 private:
  Terms terms_;
};

/// Bindings for substitute(); unbound variables stay as they are.
using Bindings = std::map<Var, MVPoly>;

MVPoly substitute(const MVPoly& p, const Bindings& bindings);

/// (v + shift)^e expanded.
MVPoly shifted_power(Var v, const Rational& shift, unsigned e);

void to_json(nlohmann::json& j, const MVPoly& p);
void from_json(const nlohmann::json& j, MVPoly& p);

}  // namespace wtg
