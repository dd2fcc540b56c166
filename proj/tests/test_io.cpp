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

#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "wtg/error.hpp"
#include "wtg/fixtures.hpp"
#include "wtg/io.hpp"

using namespace wtg;
using io::json;

namespace {

const std::string kDir = WTG_FIXTURES;

std::string path(const std::string& rel) { return kDir + "/" + rel; }

bool same_ranks(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  for (std::uint32_t s = 0; s <= a.all(); ++s) {
    if (a.rank(s) != b.rank(s)) return false;
    if (s == a.all()) break;
  }
  return true;
}

std::vector<Rational> vals(const WeightFn& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph fixtures parse to the builtin graphs") {
  CHECK(io::load_graph(path("graphs/figure1.json")) == fixtures::figure1());
  CHECK(io::load_graph(path("graphs/figure2-g1.json")) == fixtures::figure2_g1());
  CHECK(io::load_graph(path("graphs/figure2-g2.json")) == fixtures::figure2_g2());
  CHECK(io::load_graph(path("graphs/example71.json")) == fixtures::example71());
  CHECK(io::load_graph(path("graphs/triangle.json")) == fixtures::triangle());
  const Multigraph lb = io::load_graph(path("graphs/loop-and-bridge.json"));
  CHECK(lb.edge(0).is_loop());
  CHECK(classify_edge(lb, 1) == EdgeKind::Bridge);
  const Multigraph e = io::load_graph(path("graphs/edgeless.json"));
  CHECK(e.vertex_count() == 3);
  CHECK(e.edge_count() == 0);
  CHECK(io::load_graph("builtin:figure1") == fixtures::figure1());
}

TEST_CASE("vertices are 1-based on disk") {
  const Multigraph g = io::graph_from_json(json::parse(R"({"vertices": 2, "edges": [[1, 2], [2, 2]]})"));
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(1).is_loop());
  CHECK_THROWS_WITH_AS(io::graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0, 1]]})")),
                       doctest::Contains("outside 1..2"), Error);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"vertices": 2, "edges": [[1, 3]]})")), Error);
  for (const auto& [name, g2] : fixtures::small_corpus(4)) CHECK(io::graph_from_json(io::graph_to_json(g2)) == g2);
}

TEST_CASE("matroid fixtures") {
  CHECK(same_ranks(io::load_matroid(path("matroids/example61-m1.json")), Matroid::linear(fixtures::example61_m1())));
  CHECK(same_ranks(io::load_matroid(path("matroids/example61-m2.json")), Matroid::linear(fixtures::example61_m2())));
  CHECK(same_ranks(io::load_matroid(path("matroids/u23.json")), Matroid::uniform(2, 3)));
  CHECK(same_ranks(io::load_matroid(path("matroids/u24.json")), Matroid::uniform(2, 4)));
  CHECK(same_ranks(io::load_matroid(path("matroids/triangle.json")), Matroid::graphic(fixtures::triangle())));
  CHECK(same_ranks(io::load_matroid(path("matroids/figure1.json")), Matroid::graphic(fixtures::figure1())));
  const Matroid empty = io::load_matroid(path("matroids/empty.json"));
  CHECK(empty.size() == 0);
  for (const auto& entry : std::filesystem::directory_iterator(path("catalog")))
    CHECK_NOTHROW(io::load_matroid(entry.path().string()));
  CHECK(same_ranks(io::load_matroid("builtin:u23"), Matroid::uniform(2, 3)));
  CHECK(same_ranks(io::load_matroid("builtin:triangle"), Matroid::graphic(fixtures::triangle())));
}

TEST_CASE("matroid serialization round-trips") {
  const FpMatrix m = fixtures::example61_m2();
  CHECK(same_ranks(io::matroid_from_json(io::matroid_to_json(m)), Matroid::linear(m)));
  CHECK(same_ranks(io::matroid_from_json(io::matroid_to_json(fixtures::figure1())), Matroid::graphic(fixtures::figure1())));
  CHECK(same_ranks(io::matroid_from_json(io::uniform_to_json(3, 5)), Matroid::uniform(3, 5)));
}

TEST_CASE("malformed matroids") {
  CHECK_THROWS_WITH_AS(io::matroid_from_json(json::parse(R"({"kind": "transversal"})")),
                       doctest::Contains("unknown matroid kind"), Error);
  CHECK_THROWS_WITH_AS(io::matroid_from_json(json::parse(R"({"p": 2, "matrix": [[1]]})")),
                       doctest::Contains("missing field \"kind\""), Error);
  CHECK_THROWS_AS(io::load_matroid(kDir + "/../tests/data/bad-prime.json"), Error);
  CHECK_THROWS_AS(io::matroid_from_json(json::parse(R"({"kind": "linear", "p": 3, "matrix": [[1, 2], [1]]})")), Error);
  CHECK_THROWS_AS(io::matroid_from_json(json::parse(R"({"kind": "uniform", "r": 5, "n": 2})")), Error);
  CHECK_THROWS_AS(io::matroid_from_json(json::parse(R"({"kind": "linear", "p": "two", "matrix": [[1]]})")), Error);
}

TEST_CASE("labels") {
  CHECK(io::load_label(path("labels/figure1-s.json"), 4) == EdgeLabel({4, 1, 2, 3}));
  CHECK(io::load_label("[4,1,2,3]", 4) == EdgeLabel({4, 1, 2, 3}));
  CHECK(io::load_label("", 3) == EdgeLabel::identity(3));
  CHECK(io::label_from_json(io::label_to_json(EdgeLabel({2, 3, 1}))) == EdgeLabel({2, 3, 1}));
  CHECK_THROWS_AS(io::load_label("[1,2]", 3), Error);
  CHECK_THROWS_AS(io::load_label("[1,1,2]", 3), Error);
  CHECK_THROWS_AS(io::load_label("[1,2", 2), Error);
  CHECK_THROWS_AS(io::label_from_json(json::parse(R"({"labels": [1]})")), Error);
  CHECK_THROWS_AS(io::label_from_json(json::parse(R"([1, "2"])")), Error);
}

TEST_CASE("weight fixtures") {
  const WeightFn a1 = io::parse_weight_spec(path("weights/a1.json"), 4);
  CHECK(a1 == WeightFn::basis(4, 1, 0));
  const WeightFn h = io::parse_weight_spec("file:" + path("weights/harm-1-m1.json"), 4);
  CHECK(vals(h) == std::vector<Rational>{1, -1, 0, 0});
  CHECK(is_harmonic(h));
  CHECK(is_harmonic(io::parse_weight_spec(path("weights/harm-1-3.json"), 4)));
  const WeightFn e = io::parse_weight_spec(path("weights/empty-set.json"), 0);
  CHECK(e.d() == 0);
  CHECK(vals(e) == std::vector<Rational>{Rational(5, 2)});
  const WeightFn pairs = io::parse_weight_spec(path("weights/pairs-4.json"), 4);
  CHECK(pairs.d() == 2);
  const WeightFn a4 = io::parse_weight_spec(path("weights/example71-a4.json"), 4);
  CHECK(vals(a4) == std::vector<Rational>{-1, 0, 0, 1});
  CHECK(is_harmonic(a4));
  CHECK_THROWS_AS(io::parse_weight_spec(path("weights/a1.json"), 5), Error);
}

TEST_CASE("weight serialization round-trips exactly") {
  WeightFn f(5, 2);
  int i = 0;
  for (auto bits : f.subsets()) {
    Rational v(i * 7 - 30, 1 + i % 4);
    v.canonicalize();
    f.set(SubsetMask(5, bits), v);
    ++i;
  }
  CHECK(io::weight_from_json(io::weight_to_json(f)) == f);
  const json dense = json::parse(R"({"n": 3, "d": 1, "values": [1, "-2/4", 0]})");
  CHECK(vals(io::weight_from_json(dense)) == std::vector<Rational>{1, Rational(-1, 2), 0});
}

TEST_CASE("malformed weights") {
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "values": []})")), Error);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "d": 1, "values": [1, 2]})")), Error);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "d": 1, "values": [{"set": [1, 2], "value": 1}]})")), Error);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "d": 1, "values": [{"set": [4], "value": 1}]})")), Error);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "d": 1, "values": [{"set": [1]}]})")), Error);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "d": 1, "values": [1.5, 0, 0]})")), Error);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 3, "d": 1, "values": ["1/0", 0, 0]})")), Error);
  CHECK_THROWS_AS(io::read_json_file(path("does-not-exist.json")), Error);
}

TEST_CASE("weight spec language") {
  CHECK(io::parse_weight_spec("ones", 4) == WeightFn::ones(4, 0));
  CHECK(io::parse_weight_spec("ones", 4, 2) == WeightFn::ones(4, 2));
  CHECK(io::parse_weight_spec("basis:hom:1:1", 4) == WeightFn::basis(4, 1, 0));
  CHECK(io::parse_weight_spec("basis:hom:2:6", 4) == WeightFn::basis(4, 2, 5));
  CHECK(io::parse_weight_spec("basis:harm:1:2", 4) == harmonic_basis(4, 1)[1]);
  CHECK(io::parse_weight_spec("harmonic-basis:3", 4) == harmonic_basis(4, 1)[2]);
  CHECK(io::parse_weight_spec("harmonic-basis:1", 4, 2) == harmonic_basis(4, 2)[0]);
  CHECK_THROWS_AS(io::parse_weight_spec("basis:hom:1:0", 4), Error);
  CHECK_THROWS_AS(io::parse_weight_spec("basis:hom:1:5", 4), Error);
  CHECK_THROWS_AS(io::parse_weight_spec("basis:harm:1:4", 4), Error);
  CHECK_THROWS_AS(io::parse_weight_spec("basis:hom:x:1", 4), Error);
  CHECK_THROWS_AS(io::parse_weight_spec("basis:odd:1:1", 4), Error);
  CHECK_THROWS_AS(io::parse_weight_spec("harmonic-basis", 4), Error);
}

}  // TEST_SUITE
