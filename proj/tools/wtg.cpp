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

// wtg: weighted chromatic, Tutte and Tutte-Grothendieck polynomials.
//
// Exit status: 0 on success (and on every identity/check passing),
// 1 when a check or identity fails, 2 on invalid input or a tripped guard.

#include <deque>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wtg/categorification.hpp"
#include "wtg/error.hpp"
#include "wtg/fixtures.hpp"
#include "wtg/invariants.hpp"
#include "wtg/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wtg;

namespace {

struct Global {
  std::string format = "text";
  int jobs = 0;
  std::uint64_t seed = 20260101;
  bool json() const { return format == "json"; }
};

struct Instance {
  std::string graph, matroid, label, weight = "ones";
  std::optional<int> degree;
};

void add_instance_options(CLI::App* cmd, Instance& in, bool matroid) {
  cmd->add_option("--graph", in.graph, "graph JSON file or builtin:NAME");
  if (matroid) cmd->add_option("--matroid", in.matroid, "matroid JSON file or builtin:NAME");
  cmd->add_option("--label", in.label, "label JSON file or inline [s1,...,sn]; identity when omitted");
  cmd->add_option("--weight", in.weight, "ones | basis:hom:d:k | basis:harm:d:k | harmonic-basis:k | file:PATH")
      ->capture_default_str();
  cmd->add_option("--degree", in.degree, "degree d for the ones and harmonic-basis:k specs");
}

Multigraph require_graph(const Instance& in) {
  if (in.graph.empty()) throw Error("--graph is required");
  return io::load_graph(in.graph);
}

LabelledGraph labelled_graph(const Instance& in) {
  Multigraph g = require_graph(in);
  EdgeLabel s = io::load_label(in.label, g.edge_count());
  return LabelledGraph(std::move(g), std::move(s));
}

LabelledMatroid labelled_matroid(const Instance& in) {
  if (!in.matroid.empty() && !in.graph.empty()) throw Error("give either --matroid or --graph, not both");
  Matroid m = !in.matroid.empty() ? io::load_matroid(in.matroid)
              : !in.graph.empty() ? Matroid::graphic(io::load_graph(in.graph))
                                  : throw Error("--matroid or --graph is required");
  EdgeLabel s = io::load_label(in.label, m.size());
  return LabelledMatroid(std::move(m), std::move(s));
}

WeightFn weight(const Instance& in, int n) { return io::parse_weight_spec(in.weight, n, in.degree); }

Rational parse_param(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error(std::string("--") + name + ": " + e.what());
  }
}

json poly_json(const MVPoly& p) {
  json j;
  j["text"] = p.to_string();
  j["terms"] = p;
  return j;
}

void emit(const Global& g, const json& j, const std::string& text) {
  if (g.json()) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

// Verification suite ------------------------------------------------------

struct Tally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

struct Suite {
  std::vector<fixtures::NamedGraph> corpus;
  std::mt19937_64 rng;
  std::deque<Tally> tallies;  // references stay valid across additions

  Tally& tally(const std::string& name) {
    for (auto& t : tallies)
      if (t.name == name) return t;
    return tallies.emplace_back(Tally{name, 0, 0, {}});
  }

  EdgeLabel random_label(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return EdgeLabel(std::move(v));
  }

  Rational random_nonzero() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    long p = 0;
    while (p == 0) p = num(rng);
    Rational r(p, den(rng));
    r.canonicalize();
    return r;
  }
};

std::vector<WeightFn> hom_basis(int n) {
  std::vector<WeightFn> out;
  for (int d = 0; d <= n; ++d)
    for (std::size_t k = 0; k < binomial_u64(n, d); ++k) out.push_back(WeightFn::basis(n, d, k));
  return out;
}

std::vector<WeightFn> harm_basis(int n) {
  std::vector<WeightFn> out;
  for (int d = 0; d <= n; ++d)
    for (auto& f : harmonic_basis(n, d)) out.push_back(std::move(f));
  return out;
}

std::string where(const std::string& graph, const WeightFn& f) {
  return graph + " d=" + std::to_string(f.d());
}

void suite_recursions(Suite& s) {
  auto& chrom = s.tally("chromatic recursion = direct");
  auto& tutte = s.tally("tutte recursion = direct");
  auto& pivot = s.tally("recursions under random pivots");
  for (const auto& [name, g] : s.corpus) {
    if (g.edge_count() > 6) continue;
    const std::vector<EdgeLabel> labels{EdgeLabel::identity(g.edge_count()), s.random_label(g.edge_count())};
    for (const auto& label : labels) {
      const LabelledGraph lg(g, label);
      const LabelledMatroid lm(lg);
      const SetIndexedPoly cr = chromatic_recursion(lg);
      const SetIndexedPoly tr = tutte_recursion(lm);
      const SetIndexedPoly crr = chromatic_recursion(lg, random_pivot(s.rng()));
      const SetIndexedPoly trr = tutte_recursion(lm, random_pivot(s.rng()));
      for (const auto& f : hom_basis(g.edge_count())) {
        const MVPoly cd = chromatic_direct(lg, f), td = tutte_direct(lm, f);
        chrom.record(setpoly_evaluate(cr, f) == cd, where(name, f));
        tutte.record(setpoly_evaluate(tr, f) == td, where(name, f));
        pivot.record(setpoly_evaluate(crr, f) == cd && setpoly_evaluate(trr, f) == td, where(name, f));
      }
    }
  }
}

void suite_thm43(Suite& s) {
  auto& t = s.tally("chromatic-tutte relation, harmonic f");
  for (const auto& [name, g] : s.corpus) {
    const LabelledGraph lg(g, s.random_label(g.edge_count()));
    for (const auto& f : harm_basis(g.edge_count())) t.record(verify_theorem_4_3(lg, f).holds, where(name, f));
  }
}

void suite_thm52(Suite& s, int pairs) {
  auto& recipe = s.tally("recipe identity, harmonic f");
  auto& sign = s.tally("phi = (-1)^d p, harmonic f");
  auto& cotutte = s.tally("phi = recipe of co-weighted tutte, every f");
  for (const auto& [name, g] : s.corpus) {
    if (g.edge_count() > 6) continue;
    const LabelledGraph lg(g, s.random_label(g.edge_count()));
    const LabelledMatroid lm(lg);
    for (int i = 0; i < pairs; ++i) {
      const TGParams p(s.random_nonzero(), s.random_nonzero());
      const SetIndexedPoly phi = tg_recursion(lg, p, TGForm::Phi);
      const SetIndexedPoly pp = tg_recursion(lg, p, TGForm::P);
      const SetIndexedPoly phi_random = tg_recursion(lg, p, TGForm::Phi, BridgeRule::Corrected, random_pivot(s.rng()));
      for (const auto& f : hom_basis(g.edge_count())) {
        const MVPoly phif = setpoly_evaluate(phi, f);
        const MVPoly cot = recipe_transform(g, p, tutte_direct(lm, f, WeightSide::Complement));
        cotutte.record(phif == cot && setpoly_evaluate(phi_random, f) == cot, where(name, f));
        if (!is_harmonic(f)) continue;
        MVPoly rhs = recipe_transform(g, p, tutte_direct(lm, f));
        if (f.d() % 2) rhs = -rhs;
        recipe.record(phif == rhs, where(name, f));
        const MVPoly pf = setpoly_evaluate(pp, f);
        sign.record(phif == (f.d() % 2 ? -pf : pf), where(name, f));
      }
      for (const auto& f : harm_basis(g.edge_count())) {
        if (f.d() == 0 || f.size() == 1) continue;  // basis elements above already cover these
        MVPoly rhs = recipe_transform(g, p, tutte_direct(lm, f));
        if (f.d() % 2) rhs = -rhs;
        recipe.record(setpoly_evaluate(phi, f) == rhs, where(name, f));
        const MVPoly pf = setpoly_evaluate(pp, f);
        sign.record(setpoly_evaluate(phi, f) == (f.d() % 2 ? -pf : pf), where(name, f));
      }
    }
  }
}

void suite_invariants(Suite& s) {
  auto& derived = s.tally("label-sum identities (co-weighted forms), every f");
  auto& literal = s.tally("label-sum identities against T-hat, d=0 and harmonic f");
  auto& closed = s.tally("closed form = label sum");
  for (const auto& [name, g] : s.corpus) {
    const int n = g.edge_count();
    if (n > 7) continue;
    const TGParams p(s.random_nonzero(), s.random_nonzero());
    std::vector<WeightFn> weights;
    for (int d = 0; d <= n; ++d) weights.push_back(WeightFn::basis(n, d, 0));
    for (auto& f : harm_basis(n))
      if (f.d() > 0) weights.push_back(std::move(f));
    for (const auto& f : weights) {
      const auto r = verify_invariant_identities(g, f, p);
      derived.record(r.derived_all(), where(name, f));
      if (r.literal_expected) literal.record(r.literal_all(), where(name, f));
      if (n <= 6)
        closed.record(invariant_closed_form(g, f, InvariantKind::Chromatic).polynomial == r.chi_hat &&
                          invariant_closed_form(g, f, InvariantKind::Tutte).polynomial == r.t_hat &&
                          invariant_closed_form(g, f, InvariantKind::TutteComplement).polynomial == r.tc_hat,
                      where(name, f));
    }
  }
}

void suite_complexes(Suite& s) {
  auto& dd = s.tally("d∘d = 0 and degree preserving, both complexes");
  auto& euler = s.tally("homology euler = cochain euler, f = 1");
  auto& chrom = s.tally("chromatic euler identity, harmonic f");
  auto& tutte = s.tally("tutte euler identity, harmonic f");
  for (const auto& [name, g] : s.corpus) {
    if (g.edge_count() > 5) continue;
    const LabelledGraph lg(g, s.random_label(g.edge_count()));
    for (auto kind : {ComplexKind::Chromatic, ComplexKind::Tutte}) {
      const auto c = build_complex(lg, kind);
      const auto ds = build_differential(c);
      dd.record(squares_to_zero(ds) && degree_preserving(c, ds), name);
      euler.record(euler_from_homology(kind, homology_dims(c, ds)) == euler_from_cochains(c), name);
    }
    for (const auto& f : harm_basis(g.edge_count())) {
      chrom.record(verify_chromatic_euler(lg, f).derived_holds, where(name, f));
      tutte.record(verify_tutte_euler(lg, f).derived_holds, where(name, f));
    }
  }
}

// Reference values for the named examples.
const char* kG1 = "210*λ^6 - 1260*λ^5 + 2975*λ^4 - 3450*λ^3 + 1960*λ^2 - 435*λ";
const char* kG2 = "210*λ^6 - 1260*λ^5 + 2975*λ^4 - 3434*λ^3 + 1925*λ^2 - 416*λ";

bool example62_ok(const Example62Report& r) {
  return r.g1.normalized() == MVPoly::parse(kG1) && r.g2.normalized() == MVPoly::parse(kG2) && r.differ &&
         r.classical_g1 == r.classical_g2;
}

void suite_examples(Suite& s) {
  s.tally("matroid pair, equal weighted tutte invariants").record(example_6_1_check().weighted_equal(), "");
  const auto r = example_6_2_check();
  s.tally("ten-edge pair, chromatic invariants").record(example62_ok(r), "");
  s.tally("log-concavity of both invariants")
      .record(log_concavity_check(r.g1.normalized()).holds && log_concavity_check(r.g2.normalized()).holds, "");
}

std::vector<fixtures::NamedGraph> load_corpus(const std::string& dir) {
  if (dir.empty()) return fixtures::builtin_corpus();
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<fixtures::NamedGraph> out;
  for (const auto& f : files) out.push_back({f.filename().string(), io::graph_from_json(io::read_json_file(f))});
  return out;
}

int report_suite(const Global& g, const Suite& s) {
  bool ok = true;
  json j = json::array();
  std::string text;
  for (const auto& t : s.tallies) {
    ok = ok && t.failed == 0;
    j.push_back({{"check", t.name}, {"checked", t.checked}, {"failed", t.failed}, {"first_failure", t.first_failure}});
    text += (t.failed ? "FAIL " : "PASS ") + t.name + " (" + std::to_string(t.checked) + " cases";
    if (t.failed) text += ", " + std::to_string(t.failed) + " failed, first: " + t.first_failure;
    text += ")\n";
  }
  emit(g, {{"command", "verify"}, {"passed", ok}, {"checks", j}}, text);
  return ok ? 0 : 1;
}

// Catalog loading for `search`.
std::vector<CatalogItem> load_catalog(const std::vector<std::string>& specs) {
  std::vector<CatalogItem> out;
  auto add = [&](const std::string& name, auto&& load) {
    CatalogItem item{name, std::nullopt, {}};
    try {
      item.matroid = load();
    } catch (const std::exception& e) {
      item.error = e.what();
    }
    out.push_back(std::move(item));
  };
  for (const auto& spec : specs) {
    if (spec == "builtin") {
      for (const char* name : {"builtin:example61-m1", "builtin:example61-m2", "builtin:triangle", "builtin:u23"})
        add(name, [&] { return io::load_matroid(name); });
    } else if (fs::is_directory(spec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(spec))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) add(f.string(), [&] { return io::load_matroid(f.string()); });
    } else {
      add(spec, [&] { return io::load_matroid(spec); });
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted chromatic, Tutte and Tutte-Grothendieck polynomials over exact rationals"};
  app.require_subcommand(1);
  Global global;
  app.add_option("--format", global.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--jobs", global.jobs, "OpenMP threads (0 = runtime default)");
  app.add_option("--seed", global.seed, "seed for random labels, pivots and parameters")->capture_default_str();

  Instance in;
  std::string method, side = "subset", alpha = "1", beta = "1", form = "phi", bridge = "corrected", pivot = "lowest";
  std::string kind, name;
  std::string corpus;
  int pairs = 5, n = 0;
  bool homology = false;
  std::string poly_text;
  std::vector<std::string> catalog;

  auto* chromatic = app.add_subcommand("chromatic", "weighted chromatic polynomial χ_f(G(s); λ)");
  add_instance_options(chromatic, in, false);
  chromatic->add_option("--method", method, "direct | recursive")->check(CLI::IsMember({"direct", "recursive"}));

  auto* tutte = app.add_subcommand("tutte", "weighted Tutte polynomial T_f(M(s); x, y)");
  add_instance_options(tutte, in, true);
  tutte->add_option("--method", method, "direct | recursive")->check(CLI::IsMember({"direct", "recursive"}));
  tutte->add_option("--side", side, "subset: f̃(s(A)); complement: f̃(s(E∖A))")
      ->check(CLI::IsMember({"subset", "complement"}));

  auto* tg = app.add_subcommand("tg", "weighted Tutte-Grothendieck polynomial Φ_f or P_f");
  add_instance_options(tg, in, false);
  tg->add_option("--alpha", alpha, "α ≠ 0, rational")->capture_default_str();
  tg->add_option("--beta", beta, "β ≠ 0, rational")->capture_default_str();
  tg->add_option("--form", form, "phi | p")->check(CLI::IsMember({"phi", "p"}));
  tg->add_option("--bridge-rule", bridge, "corrected | literal")->check(CLI::IsMember({"corrected", "literal"}));
  tg->add_option("--pivot", pivot, "lowest | random (uses --seed)")->check(CLI::IsMember({"lowest", "random"}));

  auto* invariant = app.add_subcommand("invariant", "label-sum invariant over all bijective labels");
  add_instance_options(invariant, in, true);
  invariant->add_option("--kind", kind, "chromatic | tutte | tutte-complement | tg | tg-p")
      ->required()
      ->check(CLI::IsMember({"chromatic", "tutte", "tutte-complement", "tg", "tg-p"}));
  invariant->add_option("--method", method, "label-sum | closed-form")->check(CLI::IsMember({"label-sum", "closed-form"}));
  invariant->add_option("--alpha", alpha, "α for tg kinds");
  invariant->add_option("--beta", beta, "β for tg kinds");

  auto* categorify = app.add_subcommand("categorify", "weighted cochain complexes and Euler characteristics");
  add_instance_options(categorify, in, false);
  categorify->add_option("--kind", kind, "chromatic | tutte")->required()->check(CLI::IsMember({"chromatic", "tutte"}));
  categorify->add_flag("--homology", homology, "print rational homology dimensions");

  auto* harm = app.add_subcommand("harmonic-basis", "exact basis of Harm_d(n)");
  harm->add_option("--n", n, "ground set size")->required();
  harm->add_option("--degree", in.degree, "degree d")->required();

  auto* search = app.add_subcommand("search", "matroid pairs with equal Tutte polynomial, compared by weighted invariants");
  search->add_option("--catalog", catalog, "matroid files, directories, or 'builtin'")->required();

  auto* check = app.add_subcommand("check", "named reproduction checks");
  check->add_option("name", name, "example6.1 | example6.2 | logconcavity")
      ->required()
      ->check(CLI::IsMember({"example6.1", "example6.2", "logconcavity"}));
  check->add_option("--poly", poly_text, "logconcavity: check this λ-polynomial instead");

  auto* verify = app.add_subcommand("verify", "identity suites over a graph corpus");
  verify->add_option("suite", name, "thm4.3 | thm5.2 | all")->required()->check(CLI::IsMember({"thm4.3", "thm5.2", "all"}));
  verify->add_option("--corpus", corpus, "directory of graph JSON files (built-in corpus when omitted)");
  verify->add_option("--pairs", pairs, "random (α, β) pairs per instance")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  set_parallelism(global.jobs);

  try {
    if (chromatic->parsed()) {
      const LabelledGraph g = labelled_graph(in);
      const WeightFn f = weight(in, g.n());
      const bool rec = method == "recursive";
      const MVPoly p = rec ? chromatic_recursive(g, f) : chromatic_direct(g, f);
      emit(global, {{"command", "chromatic"}, {"method", rec ? "recursive" : "direct"}, {"polynomial", poly_json(p)}},
           p.to_string() + "\n");
    } else if (tutte->parsed()) {
      const LabelledMatroid m = labelled_matroid(in);
      const WeightFn f = weight(in, m.n());
      const bool rec = method == "recursive";
      if (rec && side == "complement") throw Error("--side complement is only available with --method direct");
      const MVPoly p = rec ? tutte_recursive(m, f)
                           : tutte_direct(m, f, side == "subset" ? WeightSide::Subset : WeightSide::Complement);
      emit(global, {{"command", "tutte"}, {"method", rec ? "recursive" : "direct"}, {"polynomial", poly_json(p)}},
           p.to_string() + "\n");
    } else if (tg->parsed()) {
      const LabelledGraph g = labelled_graph(in);
      const WeightFn f = weight(in, g.n());
      const TGParams p(parse_param(alpha, "alpha"), parse_param(beta, "beta"));
      const BridgeRule rule = bridge == "literal" ? BridgeRule::Literal : BridgeRule::Corrected;
      const PivotRule pr = pivot == "random" ? random_pivot(global.seed) : lowest_index_pivot();
      const MVPoly out = form == "p" ? tg_p(g, f, p, rule, pr) : tg_phi(g, f, p, rule, pr);
      emit(global, {{"command", "tg"}, {"form", form}, {"bridge_rule", bridge}, {"polynomial", poly_json(out)}},
           out.to_string() + "\n");
    } else if (invariant->parsed()) {
      const InvariantKind k = kind == "chromatic"          ? InvariantKind::Chromatic
                              : kind == "tutte"            ? InvariantKind::Tutte
                              : kind == "tutte-complement" ? InvariantKind::TutteComplement
                              : kind == "tg"               ? InvariantKind::TG
                                                           : InvariantKind::TGP;
      const bool is_tg = k == InvariantKind::TG || k == InvariantKind::TGP;
      if (method.empty()) method = is_tg ? "label-sum" : "closed-form";
      if (is_tg && method == "closed-form") throw Error("tg invariants are offered by label sum only");
      const bool label_sum = method == "label-sum";
      InvariantReport r;
      if (!in.matroid.empty()) {
        if (k == InvariantKind::Chromatic || is_tg) throw Error("--kind " + kind + " needs --graph");
        const Matroid m = io::load_matroid(in.matroid);
        const WeightFn f = weight(in, m.size());
        r = label_sum ? invariant_label_sum(m, f, k) : invariant_closed_form(m, f, k);
      } else {
        const Multigraph g = require_graph(in);
        const WeightFn f = weight(in, g.edge_count());
        std::optional<TGParams> params;
        if (is_tg) params.emplace(parse_param(alpha, "alpha"), parse_param(beta, "beta"));
        r = label_sum ? invariant_label_sum(g, f, k, params) : invariant_closed_form(g, f, k);
      }
      const std::string n_str = to_string(BigInt(r.n_factorial));
      const MVPoly norm = r.normalized();
      emit(global,
           {{"command", "invariant"},
            {"kind", kind},
            {"method", to_string(r.method)},
            {"n_factorial", n_str},
            {"polynomial", poly_json(r.polynomial)},
            {"per_label", poly_json(norm)}},
           n_str + " * (" + norm.to_string() + ")\n");
    } else if (categorify->parsed()) {
      const LabelledGraph g = labelled_graph(in);
      const WeightFn f = weight(in, g.n());
      const ComplexKind ck = kind == "tutte" ? ComplexKind::Tutte : ComplexKind::Chromatic;
      const auto c = build_complex(g, ck);
      const auto dims = fqdim_complex(c, f);
      MVPoly s;
      json levels = json::array();
      std::string text;
      for (std::size_t q = 0; q < dims.size(); ++q) {
        if (q % 2) s += dims[q];
        else s -= dims[q];
        levels.push_back({{"q", q}, {"summands", c.levels[q].size()}, {"fqdim", poly_json(dims[q])}});
        text += "fqdim C^" + std::to_string(q) + " = " + dims[q].to_string() + "\n";
      }
      text += "S = " + s.to_string() + "\n";
      json j{{"command", "categorify"}, {"kind", kind}, {"levels", levels}, {"alternating_sum", poly_json(s)}};
      int status = 0;
      if (is_harmonic(f)) {
        const EulerReport r = ck == ComplexKind::Chromatic ? verify_chromatic_euler(g, f) : verify_tutte_euler(g, f);
        j["derived_identity"] = r.derived_holds;
        j["literal_identity"] = r.literal_holds;
        text += std::string("derived identity: ") + (r.derived_holds ? "holds" : "FAILS") + "\n";
        text += std::string("literal identity: ") + (r.literal_holds ? "holds" : "differs") + "\n";
        if (!r.derived_holds) status = 1;
      } else {
        text += "identities: f is not harmonic, not checked\n";
      }
      if (homology) {
        const auto ds = build_differential(c);
        const auto h = homology_dims(c, ds);
        json hj = json::array();
        for (std::size_t q = 0; q < h.size(); ++q)
          for (const auto& [deg, dim] : h[q]) {
            hj.push_back({{"q", q}, {"degree", {deg.first, deg.second}}, {"dimension", dim}});
            text += "H^" + std::to_string(q) + " degree (" + std::to_string(deg.first) + "," +
                    std::to_string(deg.second) + "): " + std::to_string(dim) + "\n";
          }
        j["homology"] = hj;
      }
      emit(global, j, text);
      return status;
    } else if (harm->parsed()) {
      const auto basis = harmonic_basis(n, *in.degree);
      json arr = json::array();
      std::string text = "dim Harm_" + std::to_string(*in.degree) + "(" + std::to_string(n) +
                         ") = " + std::to_string(basis.size()) + "\n";
      for (const auto& f : basis) {
        arr.push_back(io::weight_to_json(f));
        std::string line = "[";
        for (const auto& v : f.values()) line += (line.size() > 1 ? "," : "") + to_string(v);
        text += line + "]\n";
      }
      emit(global, {{"command", "harmonic-basis"}, {"dimension", basis.size()}, {"basis", arr}}, text);
    } else if (search->parsed()) {
      const auto report = distinguishing_pair_search(load_catalog(catalog));
      json j{{"command", "search"}, {"errors", json::array()}, {"distinguishing", json::array()}, {"agreeing", json::array()}};
      std::string text;
      for (const auto& [item, err] : report.errors) {
        j["errors"].push_back({{"item", item}, {"error", err}});
        text += "error " + item + ": " + err + "\n";
      }
      for (const auto& p : report.distinguishing) {
        j["distinguishing"].push_back({{"first", p.first}, {"second", p.second}, {"degrees", p.distinguishing_degrees}});
        std::string ds;
        for (int d : p.distinguishing_degrees) ds += (ds.empty() ? "" : ",") + std::to_string(d);
        text += "distinguished " + p.first + " " + p.second + " at d=" + ds + "\n";
      }
      for (const auto& p : report.agreeing) {
        j["agreeing"].push_back({{"first", p.first}, {"second", p.second}});
        text += "agree " + p.first + " " + p.second + "\n";
      }
      if (text.empty()) text = "no pairs\n";
      emit(global, j, text);
    } else if (check->parsed()) {
      if (name == "example6.1") {
        const auto r = example_6_1_check();
        json j{{"command", "check"}, {"name", name}, {"equal_by_degree", r.equal_by_degree},
               {"slices_equal", r.slices_equal}, {"classical_equal", r.classical_equal},
               {"classical", {r.classical_m1.to_string(), r.classical_m2.to_string()}}};
        std::string text;
        for (std::size_t d = 0; d < r.equal_by_degree.size(); ++d)
          text += "d=" + std::to_string(d + 1) + ": " + (r.equal_by_degree[d] ? "equal" : "DIFFERENT") + "\n";
        text += std::string("classical tutte: ") + (r.classical_equal ? "equal" : "different") + " (" +
                r.classical_m1.to_string() + ")\n";
        emit(global, j, text);
        return r.weighted_equal() ? 0 : 1;
      }
      const auto r = example_6_2_check();
      if (name == "example6.2") {
        const bool ok = example62_ok(r);
        const std::string nf = to_string(BigInt(r.g1.n_factorial));
        emit(global,
             {{"command", "check"}, {"name", name}, {"passed", ok}, {"g1", poly_json(r.g1.normalized())},
              {"g2", poly_json(r.g2.normalized())}, {"n_factorial", nf},
              {"classical", poly_json(r.classical_g1)}, {"classical_equal", r.classical_g1 == r.classical_g2}},
             "G1: 10! * (" + r.g1.normalized().to_string() + ")\nG2: 10! * (" + r.g2.normalized().to_string() +
                 ")\nclassical: " + r.classical_g1.to_string() + (r.classical_g1 == r.classical_g2 ? " (equal)" : " (DIFFERENT)") +
                 "\n" + (ok ? "PASS" : "FAIL") + "\n");
        return ok ? 0 : 1;
      }
      std::vector<std::pair<std::string, MVPoly>> polys;
      if (!poly_text.empty()) polys.emplace_back("input", MVPoly::parse(poly_text));
      else polys = {{"G1", r.g1.normalized()}, {"G2", r.g2.normalized()}};
      bool ok = true;
      json arr = json::array();
      std::string text;
      for (const auto& [label, p] : polys) {
        const auto lc = log_concavity_check(p);
        ok = ok && lc.holds;
        std::string seq;
        for (const auto& a : lc.sequence) seq += (seq.empty() ? "" : ",") + to_string(a);
        arr.push_back({{"name", label}, {"holds", lc.holds}, {"sequence", seq},
                       {"violated_index", lc.violated_index ? json(*lc.violated_index) : json(nullptr)}});
        text += label + " (" + seq + "): " +
                (lc.holds ? "log-concave" : "violated at " + std::to_string(*lc.violated_index)) + "\n";
      }
      emit(global, {{"command", "check"}, {"name", name}, {"results", arr}}, text);
      return ok ? 0 : 1;
    } else if (verify->parsed()) {
      Suite s{load_corpus(corpus), std::mt19937_64(global.seed), {}};
      if (name == "thm4.3" || name == "all") suite_thm43(s);
      if (name == "thm5.2" || name == "all") suite_thm52(s, pairs);
      if (name == "all") {
        suite_recursions(s);
        suite_invariants(s);
        suite_complexes(s);
        suite_examples(s);
      }
      return report_suite(global, s);
    }
  } catch (const GuardError& e) {
    std::cerr << "error: guard " << e.guard() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
