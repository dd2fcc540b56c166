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

#include "wtg/io.hpp"

#include <charconv>
#include <fstream>

#include "wtg/error.hpp"
#include "wtg/fixtures.hpp"

namespace wtg::io {

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error("weight value must be an integer or a \"p/q\" string, got " + v.dump());
}

std::string field_error(const std::string& what, const json& j) { return what + " in " + j.dump(); }

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(field_error(std::string("missing field \"") + key + "\"", j));
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(field_error(std::string("malformed field \"") + key + "\"", j));
  }
}

int parse_int(std::string_view text, const std::string& context) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error("expected an integer for " + context + ", got \"" + std::string(text) + "\"");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

constexpr std::string_view kBuiltin = "builtin:";

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

Multigraph graph_from_json(const json& j) {
  const int vertices = require<int>(j, "vertices");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : require<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(field_error("an edge must be a pair of vertex indices", e));
    const int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 1 || v < 1 || u > vertices || v > vertices)
      throw Error(field_error("edge endpoint outside 1.." + std::to_string(vertices), e));
    edges.emplace_back(u - 1, v - 1);
  }
  return Multigraph(vertices, edges);
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

EdgeLabel label_from_json(const json& j) {
  const json arr = j.is_object() ? require<json>(j, "label") : j;
  if (!arr.is_array()) throw Error(field_error("a label must be an array of integers", j));
  std::vector<int> values;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw Error(field_error("a label must be an array of integers", j));
    values.push_back(v.get<int>());
  }
  return EdgeLabel(std::move(values));
}

Matroid matroid_from_json(const json& j) {
  const auto kind = require<std::string>(j, "kind");
  if (kind == "linear")
    return Matroid::linear(FpMatrix(require<std::uint32_t>(j, "p"), require<std::vector<std::vector<long>>>(j, "matrix")));
  if (kind == "graphic") return Matroid::graphic(graph_from_json(require<json>(j, "graph")));
  if (kind == "uniform") return Matroid::uniform(require<int>(j, "r"), require<int>(j, "n"));
  throw Error("unknown matroid kind \"" + kind + "\"");
}

json matroid_to_json(const FpMatrix& m) {
  return {{"kind", "linear"}, {"p", m.p}, {"matrix", m.rows}};
}

json uniform_to_json(int r, int n) { return {{"kind", "uniform"}, {"r", r}, {"n", n}}; }

json label_to_json(const EdgeLabel& s) { return {{"label", s.values()}}; }

json matroid_to_json(const Multigraph& g) { return {{"kind", "graphic"}, {"graph", graph_to_json(g)}}; }

WeightFn weight_from_json(const json& j) {
  const int n = require<int>(j, "n");
  const int d = require<int>(j, "d");
  const json values = require<json>(j, "values");
  if (!values.is_array()) throw Error(field_error("\"values\" must be an array", j));
  if (values.empty() || !values.front().is_object()) {
    std::vector<Rational> dense;
    for (const auto& v : values) dense.push_back(rational_from_json(v));
    return WeightFn(n, d, std::move(dense));
  }
  WeightFn f(n, d);
  for (const auto& entry : values) {
    const auto set = require<std::vector<int>>(entry, "set");
    const SubsetMask z = SubsetMask::of(n, std::span<const int>(set));
    if (z.size() != d) throw Error(field_error("entry set size differs from d", entry));
    if (!entry.contains("value")) throw Error(field_error("missing field \"value\"", entry));
    f.set(z, rational_from_json(entry.at("value")));
  }
  return f;
}

json weight_to_json(const WeightFn& f) {
  json values = json::array();
  const auto subs = f.subsets();
  for (std::size_t i = 0; i < subs.size(); ++i)
    values.push_back({{"set", SubsetMask(f.n(), subs[i]).elements()}, {"value", to_string(f.values()[i])}});
  return {{"n", f.n()}, {"d", f.d()}, {"values", values}};
}

Multigraph load_graph(const std::string& source) {
  if (source.starts_with(kBuiltin)) {
    const std::string name = source.substr(kBuiltin.size());
    if (name == "figure1") return fixtures::figure1();
    if (name == "figure2-g1") return fixtures::figure2_g1();
    if (name == "figure2-g2") return fixtures::figure2_g2();
    if (name == "example71") return fixtures::example71();
    if (name == "triangle") return fixtures::triangle();
    throw Error("unknown builtin graph \"" + name + "\" (figure1, figure2-g1, figure2-g2, example71, triangle)");
  }
  return graph_from_json(read_json_file(source));
}

Matroid load_matroid(const std::string& source) {
  if (source.starts_with(kBuiltin)) {
    const std::string name = source.substr(kBuiltin.size());
    if (name == "example61-m1") return Matroid::linear(fixtures::example61_m1());
    if (name == "example61-m2") return Matroid::linear(fixtures::example61_m2());
    if (name == "u23") return fixtures::uniform23();
    return Matroid::graphic(load_graph(source));
  }
  return matroid_from_json(read_json_file(source));
}

EdgeLabel load_label(const std::string& source, int n) {
  if (source.empty()) return EdgeLabel::identity(n);
  EdgeLabel label;
  if (source.front() == '[') {
    try {
      label = label_from_json(json::parse(source));
    } catch (const json::parse_error& e) {
      throw Error("malformed inline label " + source + ": " + e.what());
    }
  } else {
    label = label_from_json(read_json_file(source));
  }
  if (label.size() != n)
    throw Error("label has " + std::to_string(label.size()) + " entries but the instance has " + std::to_string(n));
  return label;
}

WeightFn parse_weight_spec(std::string_view source, int n, std::optional<int> degree) {
  const auto parts = split(source, ':');
  if (source == "ones") return WeightFn::ones(n, degree.value_or(0));
  if (parts[0] == "basis") {
    if (parts.size() != 4 || (parts[1] != "hom" && parts[1] != "harm"))
      throw Error("weight source \"" + std::string(source) + "\": expected basis:hom:d:k or basis:harm:d:k");
    const int d = parse_int(parts[2], "the degree d");
    const int k = parse_int(parts[3], "the basis index k");
    if (k < 1) throw Error("basis indices are 1-based");
    if (parts[1] == "hom") return WeightFn::basis(n, d, static_cast<std::size_t>(k - 1));
    const auto basis = harmonic_basis(n, d);
    if (static_cast<std::size_t>(k) > basis.size())
      throw Error("Harm_" + std::to_string(d) + "(" + std::to_string(n) + ") has dimension " +
                  std::to_string(basis.size()) + ", no element " + std::to_string(k));
    return basis[k - 1];
  }
  if (parts[0] == "harmonic-basis") {
    if (parts.size() != 2) throw Error("weight source \"" + std::string(source) + "\": expected harmonic-basis:k");
    return parse_weight_spec("basis:harm:" + std::to_string(degree.value_or(1)) + ":" + std::string(parts[1]), n);
  }
  const std::string path(parts[0] == "file" ? source.substr(5) : source);
  WeightFn f = weight_from_json(read_json_file(path));
  if (f.n() != n)
    throw Error("weight in " + path + " lives on " + std::to_string(f.n()) + " elements, instance has " +
                std::to_string(n));
  return f;
}

}  // namespace wtg::io
