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

#include "wtg/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "wtg/error.hpp"

namespace wtg {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"λ", "x", "y", "X", "Y", "q"};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error("malformed rational '" + std::string(text) + "'");
  BigInt n(num.front() == '+' ? num.substr(1) : num);
  BigInt d(den.front() == '+' ? den.substr(1) : den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var parse_var(std::string_view name) {
  if (name == "lambda" || name == "l") return Var::lambda;
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  throw Error("unknown variable '" + std::string(name) + "'");
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i)
    m.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

MVPoly::MVPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c).first->second.canonicalize();
}

MVPoly MVPoly::term(const Rational& c, const Monomial& m) {
  MVPoly p;
  if (c != 0) p.terms_.emplace(m, c).first->second.canonicalize();
  return p;
}

Rational MVPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MVPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational MVPoly::constant_value() const {
  if (!is_constant()) throw Error("polynomial " + to_string() + " is not a constant");
  return coeff(Monomial{});
}

unsigned MVPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

unsigned MVPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void MVPoly::add_scaled(const Rational& c, const MVPoly& o) {
  if (c == 0) return;
  for (const auto& [m, v] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += c * v;
    if (it->second == 0) terms_.erase(it);
  }
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
  for (const auto& [m, v] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& o) {
  for (const auto& [m, v] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second -= v;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MVPoly& MVPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MVPoly& MVPoly::operator*=(const MVPoly& o) { return *this = *this * o; }

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
  MVPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, 0);
      it->second += ca * cb;
      if (it->second == 0) out.terms_.erase(it);
    }
  return out;
}

MVPoly MVPoly::operator-() const {
  MVPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

MVPoly MVPoly::pow(unsigned e) const {
  MVPoly result(1);
  MVPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Rational> MVPoly::univariate_coefficients(Var v) const {
  std::vector<Rational> out(degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (static_cast<Var>(i) != v && m.exp[i] != 0)
        throw Error("polynomial " + to_string() + " is not univariate in " + std::string(var_name(v)));
    out[m[v]] = c;
  }
  return out;
}

std::string MVPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (m.exp[i] > 1) mono += "^" + std::to_string(m.exp[i]);
    }
    if (mono.empty()) {
      out += wtg::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += wtg::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

namespace {

// One signed term: factors separated by '*', each a rational literal or var[^e].
MVPoly parse_term(std::string_view t, bool negative) {
  if (t.empty()) throw Error("empty term in polynomial text");
  Rational coeff = negative ? -1 : 1;
  Monomial mono;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const std::size_t star = t.find('*', pos);
    const std::string_view factor = t.substr(pos, star == std::string_view::npos ? t.npos : star - pos);
    if (factor.empty()) throw Error("empty factor in term '" + std::string(t) + "'");
    if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
      coeff *= parse_rational(factor);
    } else {
      const std::size_t caret = factor.find('^');
      const Var v = parse_var(factor.substr(0, caret));
      unsigned e = 1;
      if (caret != std::string_view::npos) {
        const std::string digits(factor.substr(caret + 1));
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                           [](unsigned char c) { return std::isdigit(c); }))
          throw Error("malformed exponent in '" + std::string(factor) + "'");
        e = static_cast<unsigned>(std::stoul(digits));
      }
      mono = mono * Monomial::of(v, e);
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return MVPoly::term(coeff, mono);
}

}  // namespace

MVPoly MVPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty polynomial text");
  MVPoly out;
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  // Split at top-level '+'/'-'; a sign directly after '^' or '/' cannot occur in the grammar.
  std::size_t start = pos;
  for (std::size_t i = pos; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      out += parse_term(std::string_view(s).substr(start, i - start), negative);
      if (i < s.size()) negative = s[i] == '-';
      start = i + 1;
    }
  }
  return out;
}

MVPoly substitute(const MVPoly& p, const Bindings& bindings) {
  // Cache powers of each bound image; exponents are small.
  std::array<std::vector<MVPoly>, kVarCount> powers;
  auto power_of = [&](std::size_t var, unsigned e) -> const MVPoly& {
    auto& cache = powers[var];
    const MVPoly& base = bindings.at(static_cast<Var>(var));
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  MVPoly out;
  for (const auto& [m, c] : p.terms()) {
    MVPoly t = MVPoly::term(c, Monomial{});
    Monomial kept;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] == 0) continue;
      if (bindings.count(static_cast<Var>(i))) {
        t = t * power_of(i, m.exp[i]);
      } else {
        kept.exp[i] = m.exp[i];
      }
    }
    if (kept.degree() > 0) t = t * MVPoly::term(1, kept);
    out += t;
  }
  return out;
}

MVPoly shifted_power(Var v, const Rational& shift, unsigned e) {
  return (MVPoly::var(v) + MVPoly(shift)).pow(e);
}

void to_json(nlohmann::json& j, const MVPoly& p) {
  j = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (m.exp[i]) mono[std::string(kVarNames[i])] = m.exp[i];
    j.push_back({{"coeff", to_string(c)}, {"monomial", mono}});
  }
}

void from_json(const nlohmann::json& j, MVPoly& p) {
  if (!j.is_array()) throw Error("polynomial JSON must be a list of terms");
  p = MVPoly();
  for (const auto& t : j) {
    Monomial m;
    for (const auto& [name, e] : t.at("monomial").items())
      m = m * Monomial::of(parse_var(name), e.get<unsigned>());
    const auto& c = t.at("coeff");
    p += MVPoly::term(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()), m);
  }
}

}  // namespace wtg
