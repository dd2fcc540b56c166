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

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "wtg/graph.hpp"
#include "wtg/matroid.hpp"
#include "wtg/weight.hpp"

namespace wtg::io {

using nlohmann::json;

json read_json_file(const std::string& path);

/// {"vertices": m, "edges": [[u, v], ...]} with vertices 1..m in the file
/// (0-based in memory). Edge order gives the original indices.
Multigraph graph_from_json(const json& j);
json graph_to_json(const Multigraph& g);

/// [s(e_1), ..., s(e_n)] or {"label": [...]}.
EdgeLabel label_from_json(const json& j);
json label_to_json(const EdgeLabel& s);

/// {"kind": "linear", "p": 2, "matrix": [[...]]}
/// {"kind": "graphic", "graph": {...}}
/// {"kind": "uniform", "r": 2, "n": 4}
Matroid matroid_from_json(const json& j);
json matroid_to_json(const FpMatrix& m);
json matroid_to_json(const Multigraph& g);
json uniform_to_json(int r, int n);

/// {"n": n, "d": d, "values": [{"set": [1, 2], "value": "1/2"}, ...]} with
/// unlisted subsets 0, or "values" as a plain list in lexicographic d-subset
/// order. Values are integers or "p/q" strings.
WeightFn weight_from_json(const json& j);
json weight_to_json(const WeightFn& f);

/// A path, "builtin:NAME", or for labels an inline JSON array "[4,1,2,3]".
Multigraph load_graph(const std::string& source);
Matroid load_matroid(const std::string& source);
/// A missing source gives the identity label on n elements.
EdgeLabel load_label(const std::string& source, int n);

/// Weight mini-language on a ground set of size n:
///   ones                 f ≡ 1 on Ω_d, d = degree (default 0)
///   basis:hom:d:k        k-th d-subset indicator (1-based, lexicographic)
///   basis:harm:d:k       k-th vector of the exact Harm_d(n) basis
///   harmonic-basis:k     same, with d = degree (default 1)
///   file:PATH or PATH    weight JSON
WeightFn parse_weight_spec(std::string_view source, int n, std::optional<int> degree = std::nullopt);

}  // namespace wtg::io
