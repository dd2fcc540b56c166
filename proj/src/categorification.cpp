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

#include "wtg/categorification.hpp"

#include <bit>

#include "wtg/error.hpp"
#include "wtg/linalg.hpp"

namespace wtg {

namespace {

std::uint32_t label_bits(const Multigraph& g, const EdgeLabel& s, std::uint32_t eps) {
  std::uint32_t out = 0;
  for (std::uint32_t b = eps; b; b &= b - 1) out |= 1u << (s.of(g.edge(std::countr_zero(b)).id) - 1);
  return out;
}

void require_harmonic(const WeightFn& f) {
  if (!is_harmonic(f)) throw Error("harmonicity required");
}

}  // namespace

std::vector<std::size_t> CochainComplex::offsets(int q) const {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (const auto& s : levels.at(q)) {
    out.push_back(at);
    at += std::size_t{1} << s.factors(kind);
  }
  return out;
}

std::size_t CochainComplex::dimension(int q) const {
  std::size_t d = 0;
  for (const auto& s : levels.at(q)) d += std::size_t{1} << s.factors(kind);
  return d;
}

std::pair<int, int> CochainComplex::degree(int q, std::size_t index) const {
  for (const auto& s : levels.at(q)) {
    const std::size_t size = std::size_t{1} << s.factors(kind);
    if (index < size) {
      const auto bits = static_cast<std::uint32_t>(index);
      const std::uint32_t a_bits = bits & low_bits(s.k);
      return {std::popcount(a_bits), std::popcount(bits >> s.k)};
    }
    index -= size;
  }
  throw Error("basis index outside level");
}

CochainComplex build_complex(const LabelledGraph& g, ComplexKind kind) {
  const int n = g.n();
  if (n > 16) throw GuardError("complex-size", "chain complexes are guarded at n ≤ 16 edges");
  CochainComplex c{kind, g.graph, g.label, std::vector<std::vector<Summand>>(n + 1)};
  const MVPoly one(1);
  const MVPoly q1 = MVPoly::var(Var::q) + one;
  const MVPoly x1 = MVPoly::var(Var::x) + one;
  const MVPoly y1 = MVPoly::var(Var::y) + one;
  for (std::uint32_t eps = 0; eps < (std::uint32_t{1} << n); ++eps) {
    Summand s;
    s.epsilon = eps;
    s.k = component_count(g.graph, eps);
    s.b1 = betti1(g.graph, eps);
    s.weight_set = SubsetMask(n, label_bits(g.graph, g.label, eps));
    s.qdim = kind == ComplexKind::Chromatic ? q1.pow(s.k) : x1.pow(s.k) * y1.pow(s.b1);
    c.levels[std::popcount(eps)].push_back(std::move(s));
  }
  return c;
}

MVPoly fqdim(std::span<const Summand> summands, const WeightFn& f) {
  MVPoly out;
  for (const auto& s : summands) {
    const Rational w = extend_tilde(f, s.weight_set);
    if (w != 0) out.add_scaled(w, s.qdim);
  }
  return out;
}

std::vector<MVPoly> fqdim_complex(const CochainComplex& c, const WeightFn& f) {
  if (f.n() != static_cast<int>(c.label.size())) throw Error("weight and complex live on different ground sets");
  std::vector<MVPoly> out;
  for (const auto& level : c.levels) out.push_back(fqdim(level, f));
  return out;
}

std::vector<DifferentialMatrix> build_differential(const CochainComplex& c) {
  const int n = c.graph.edge_count();
  if (n > 12) throw GuardError("differential-size", "differential matrices are guarded at n ≤ 12 edges");
  // Position of each ε inside its level.
  std::vector<std::size_t> slot(std::size_t{1} << n);
  for (const auto& level : c.levels)
    for (std::size_t i = 0; i < level.size(); ++i) slot[level[i].epsilon] = i;

  std::vector<DifferentialMatrix> out;
  for (int q = 0; q < n; ++q) {
    DifferentialMatrix d{q, c.dimension(q + 1), c.dimension(q), {}};
    const auto src_off = c.offsets(q);
    const auto dst_off = c.offsets(q + 1);
    for (std::size_t si = 0; si < c.levels[q].size(); ++si) {
      const Summand& src = c.levels[q][si];
      const auto src_comp = component_labels(c.graph, src.epsilon);
      for (int e = 0; e < n; ++e) {
        if (src.epsilon >> e & 1u) continue;
        const std::uint32_t target_eps = src.epsilon | (1u << e);
        const Summand& dst = c.levels[q + 1][slot[target_eps]];
        const auto dst_comp = component_labels(c.graph, target_eps);
        const int added = c.label.of(c.graph.edge(e).id);
        int below = 0;
        for (std::uint32_t b = src.epsilon; b; b &= b - 1)
          if (c.label.of(c.graph.edge(std::countr_zero(b)).id) < added) ++below;
        const long sign = below % 2 ? -1 : 1;
        // Source component index -> target component index.
        std::vector<int> comp_map(src.k, 0);
        for (int v = 0; v < c.graph.vertex_count(); ++v) comp_map[src_comp[v]] = dst_comp[v];
        for (std::uint32_t basis = 0; basis < (1u << src.factors(c.kind)); ++basis) {
          std::uint32_t image = 0;
          bool zero = false;
          for (int comp = 0; comp < src.k; ++comp) {
            if (!(basis >> comp & 1u)) continue;
            const std::uint32_t bit = 1u << comp_map[comp];
            if (image & bit) zero = true;  // m(x ⊗ x) = 0
            image |= bit;
          }
          if (zero) continue;
          // B factors keep their positions; a new cycle appends a factor in state 1.
          const std::uint32_t b_bits = basis >> src.k;
          image |= b_bits << dst.k;
          d.entries[{dst_off[slot[target_eps]] + image, src_off[si] + basis}] += sign;
        }
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

DifferentialMatrix compose(const DifferentialMatrix& next, const DifferentialMatrix& d) {
  if (next.cols != d.rows) throw Error("composing differentials with mismatched dimensions");
  // Index `next` by column for the product.
  std::map<std::size_t, std::vector<std::pair<std::size_t, long>>> by_col;
  for (const auto& [rc, v] : next.entries) by_col[rc.second].emplace_back(rc.first, v);
  DifferentialMatrix out{d.source_q, next.rows, d.cols, {}};
  for (const auto& [rc, v] : d.entries) {
    auto it = by_col.find(rc.first);
    if (it == by_col.end()) continue;
    for (const auto& [row, w] : it->second) out.entries[{row, rc.second}] += v * w;
  }
  std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool squares_to_zero(const std::vector<DifferentialMatrix>& ds) {
  for (std::size_t q = 0; q + 1 < ds.size(); ++q)
    if (!compose(ds[q + 1], ds[q]).entries.empty()) return false;
  return true;
}

bool degree_preserving(const CochainComplex& c, const std::vector<DifferentialMatrix>& ds) {
  for (const auto& d : ds)
    for (const auto& [rc, v] : d.entries)
      if (v != 0 && c.degree(d.source_q + 1, rc.first) != c.degree(d.source_q, rc.second)) return false;
  return true;
}

HomologyTable homology_dims(const CochainComplex& c, const std::vector<DifferentialMatrix>& ds) {
  const int top = static_cast<int>(c.levels.size()) - 1;
  // rank of d^q restricted to each degree; d is degree preserving.
  std::vector<std::map<std::pair<int, int>, std::size_t>> ranks(c.levels.size());
  for (const auto& d : ds) {
    const int q = d.source_q;
    std::map<std::pair<int, int>, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
    for (std::size_t col = 0; col < d.cols; ++col) blocks[c.degree(q, col)].second.push_back(col);
    for (std::size_t row = 0; row < d.rows; ++row) blocks[c.degree(q + 1, row)].first.push_back(row);
    for (const auto& [deg, rc] : blocks) {
      const auto& [rows, cols] = rc;
      if (rows.empty() || cols.empty()) continue;
      std::map<std::size_t, std::size_t> row_at, col_at;
      for (std::size_t i = 0; i < rows.size(); ++i) row_at[rows[i]] = i;
      for (std::size_t i = 0; i < cols.size(); ++i) col_at[cols[i]] = i;
      std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(cols.size(), 0));
      for (const auto& [pos, v] : d.entries) {
        auto r = row_at.find(pos.first);
        auto cl = col_at.find(pos.second);
        if (r != row_at.end() && cl != col_at.end()) m[r->second][cl->second] = v;
      }
      ranks[q][deg] = integer_rank(std::move(m));
    }
  }
  HomologyTable h(c.levels.size());
  for (int q = 0; q <= top; ++q) {
    std::map<std::pair<int, int>, std::size_t> dims;
    for (std::size_t i = 0; i < c.dimension(q); ++i) ++dims[c.degree(q, i)];
    for (const auto& [deg, dim] : dims) {
      std::size_t rk_out = 0, rk_in = 0;
      if (auto it = ranks[q].find(deg); it != ranks[q].end()) rk_out = it->second;
      if (q > 0)
        if (auto it = ranks[q - 1].find(deg); it != ranks[q - 1].end()) rk_in = it->second;
      if (const std::size_t hd = dim - rk_out - rk_in) h[q][deg] = hd;
    }
  }
  return h;
}

MVPoly euler_from_homology(ComplexKind kind, const HomologyTable& h) {
  MVPoly out;
  for (std::size_t q = 0; q < h.size(); ++q)
    for (const auto& [deg, dim] : h[q]) {
      Monomial m = kind == ComplexKind::Chromatic ? Monomial::of(Var::q, deg.first) : Monomial::of(Var::x, deg.first);
      if (kind == ComplexKind::Tutte) m.exp[static_cast<std::size_t>(Var::y)] = static_cast<std::uint16_t>(deg.second);
      const Rational c(static_cast<long>(q % 2 ? -static_cast<long>(dim) : static_cast<long>(dim)));
      out += MVPoly::term(c, m);
    }
  return out;
}

MVPoly euler_from_cochains(const CochainComplex& c) {
  MVPoly out;
  for (std::size_t q = 0; q < c.levels.size(); ++q)
    for (const auto& s : c.levels[q]) {
      if (q % 2) out -= s.qdim;
      else out += s.qdim;
    }
  return out;
}

namespace {

MVPoly alternating_fqdim(const CochainComplex& c, const WeightFn& f) {
  MVPoly s;
  const auto dims = fqdim_complex(c, f);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i % 2) s += dims[i];  // (-1)^{i+1}
    else s -= dims[i];
  }
  return s;
}

}  // namespace

EulerReport verify_chromatic_euler(const LabelledGraph& g, const WeightFn& f) {
  require_harmonic(f);
  EulerReport r;
  r.s = alternating_fqdim(build_complex(g, ComplexKind::Chromatic), f);
  const MVPoly chi = chromatic_direct(g, f);
  r.polynomial = substitute(chi, {{Var::lambda, MVPoly::var(Var::q) + MVPoly(1)}});
  r.derived = f.d() % 2 ? r.polynomial : -r.polynomial;  // (-1)^{d+1} χ_f(1+q)
  r.derived_holds = r.s == r.derived;
  r.literal_holds = r.s == r.polynomial;
  return r;
}

EulerReport verify_tutte_euler(const LabelledGraph& g, const WeightFn& f) {
  require_harmonic(f);
  EulerReport r;
  r.s = alternating_fqdim(build_complex(g, ComplexKind::Tutte), f);
  r.polynomial = tutte_direct(LabelledMatroid(g), f);
  const int k = component_count(g.graph, g.graph.all_edges());
  const int rank = g.graph.vertex_count() - k;
  const MVPoly x = MVPoly::var(Var::x), y = MVPoly::var(Var::y);
  MVPoly rhs = substitute(r.polynomial, {{Var::x, -x}, {Var::y, -y}}) * (x + MVPoly(1)).pow(k);
  r.derived = rank % 2 ? rhs : -rhs;  // (-1)^{ρ(E)+1}
  r.derived_holds = r.s == r.derived;
  r.literal_holds = r.s == r.polynomial;
  return r;
}

}  // namespace wtg
