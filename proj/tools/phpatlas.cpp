#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "php/atlas.hpp"
#include "php/bridges.hpp"
#include "php/core.hpp"
#include "php/designs.hpp"
#include "php/io.hpp"
#include "php/jumps.hpp"
#include "php/search.hpp"

namespace {

using nlohmann::ordered_json;

int g_exit = 0;

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

php::FieldTable field_for_order(int q) {
  switch (q) {
    case 2: return php::gf_build(2, 1);
    case 3: return php::gf_build(3, 1);
    case 4: return php::gf_build(2, 2);
    case 5: return php::gf_build(5, 1);
    case 7: return php::gf_build(7, 1);
    case 8: return php::gf_build(2, 3);
    case 9: return php::gf_build(3, 2);
    case 11: return php::gf_build(11, 1);
    case 13: return php::gf_build(13, 1);
    case 16: return php::gf_build(2, 4);
    default: throw std::invalid_argument("unsupported field order " + std::to_string(q));
  }
}

/// "php:m,n" or "id:k".
php::FiniteProblem parse_problem(const std::string& spec, bool* is_php,
                                 php::Shape* shape) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad problem spec: " + spec);
  std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
  if (kind == "id") {
    *is_php = false;
    return php::id_problem(std::stoi(args));
  }
  if (kind == "php") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad problem spec: " + spec);
    *is_php = true;
    *shape = php::Shape(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
    return php::php_problem(*shape);
  }
  throw std::invalid_argument("bad problem spec: " + spec);
}

ordered_json verdict_json(bool ok) {
  ordered_json j;
  j["ok"] = ok;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates and searches for finite pigeonhole reducibility"};
  app.require_subcommand(1);

  double budget_secs = 600.0;
  uint64_t budget_nodes = UINT64_MAX;
  app.add_option("--budget-secs", budget_secs, "wall clock budget");
  app.add_option("--budget-nodes", budget_nodes, "search node budget");
  auto budget = [&] { return php::SearchBudget{budget_secs, budget_nodes}; };

  // family
  auto* family = app.add_subcommand("family", "function families");
  auto* fam_verify = family->add_subcommand("verify", "check pairwise disjointness");
  std::string fam_file;
  fam_verify->add_option("file", fam_file, "family JSON")->required();
  fam_verify->callback([&] {
    auto f = php::family_from_json(nlohmann::json::parse(php::read_text_file(fam_file)));
    auto v = php::is_disjoint_family(f);
    ordered_json j = verdict_json(v.ok);
    if (!v.ok) {
      j["first"] = v.first;
      j["second"] = v.second;
      j["pair"] = {v.witness.i, v.witness.j};
      g_exit = 1;
    }
    emit(j);
  });
  auto* fam_builtin = family->add_subcommand("builtin", "emit a stored family");
  std::string fb_name;
  fam_builtin->add_option("name", fb_name, "warmup-4-2-3 | nine-4-6 | seven-5-10")
      ->required();
  fam_builtin->callback(
      [&] { emit(php::family_to_json(php::builtin_family(php::builtin_family_id(fb_name)))); });
  auto* fam_search = family->add_subcommand("search", "maximum disjoint family");
  int fs_m = 0, fs_n = 0, fs_k = -1;
  fam_search->add_option("-m", fs_m)->required();
  fam_search->add_option("-n", fs_n)->required();
  fam_search->add_option("--k", fs_k, "decide id_k instead of maximizing");
  fam_search->callback([&] {
    php::Shape s(fs_m, fs_n);
    ordered_json j;
    if (fs_k >= 1) {
      auto res = php::decide_id_k(s, fs_k, budget());
      j["decision"] = php::to_string(res.decision);
      j["nodes"] = res.nodes;
      if (res.witness) j["witness"] = php::family_to_json(*res.witness);
      if (res.decision == php::Decision::kNo) g_exit = 1;
      if (res.decision == php::Decision::kBudgetExhausted) g_exit = 2;
    } else {
      auto res = php::max_disjoint_family(s, budget());
      j["status"] = php::to_string(res.status);
      j["maxK"] = res.value;
      j["nodes"] = res.nodes;
      if (res.witness) j["witness"] = php::family_to_json(*res.witness);
      if (res.status == php::SearchStatus::kBudgetExhausted) g_exit = 2;
    }
    emit(j);
  });

  // design
  auto* design = app.add_subcommand("design", "classical designs");
  auto* d_mols = design->add_subcommand("mols", "MOLS from a finite field");
  int dq = 0;
  d_mols->add_option("-q", dq)->required();
  d_mols->callback([&] {
    auto squares = php::mols_from_field(field_for_order(dq));
    auto v = php::verify_mols(squares);
    if (!v.ok) throw std::runtime_error("generated MOLS failed verification");
    emit(php::mols_to_json(squares));
  });
  auto* d_plane = design->add_subcommand("plane", "affine plane");
  int dpn = 0;
  d_plane->add_option("-n", dpn)->required();
  d_plane->callback([&] { emit(php::design_to_json(php::affine_plane(dpn))); });
  auto* d_ktr = design->add_subcommand("ktr", "Kirkman triple system");
  int dv = 0;
  d_ktr->add_option("-v", dv)->required();
  d_ktr->callback([&] { emit(php::design_to_json(php::kirkman_system(dv))); });
  auto* d_fact = design->add_subcommand("factorize", "edge decompositions of K_m");
  int dm = 0;
  std::string dkind = "one";
  d_fact->add_option("-m", dm)->required();
  d_fact->add_option("--kind", dkind, "one | near | hamiltonian");
  d_fact->callback([&] {
    php::EdgeDecomposition d;
    if (dkind == "one") d = php::one_factorization(dm);
    else if (dkind == "near") d = php::near_one_factorization(dm);
    else if (dkind == "hamiltonian") d = php::hamiltonian_decomposition(dm);
    else throw std::invalid_argument("unknown kind: " + dkind);
    auto v = php::verify_decomposition(d);
    if (!v.ok) throw std::runtime_error("decomposition failed verification: " + v.reason);
    ordered_json j;
    j["m"] = d.m;
    j["kind"] = dkind;
    j["classes"] = ordered_json::array();
    for (const auto& cls : d.classes) {
      ordered_json jc = ordered_json::array();
      for (const auto& e : cls) jc.push_back({e.i, e.j});
      j["classes"].push_back(std::move(jc));
    }
    emit(j);
  });

  // bridge
  auto* bridge = app.add_subcommand("bridge", "design/family translations");
  auto* b_mols = bridge->add_subcommand("mols-to-family", "MOLS to disjoint family");
  int bq = 0;
  std::string b_in;
  b_mols->add_option("-q", bq, "field order (build the MOLS internally)");
  b_mols->add_option("--in", b_in, "latin squares JSON");
  b_mols->callback([&] {
    std::vector<php::LatinSquare> squares;
    if (!b_in.empty())
      squares = php::mols_from_json(nlohmann::json::parse(php::read_text_file(b_in)));
    else if (bq > 0)
      squares = php::mols_from_field(field_for_order(bq));
    else
      throw std::invalid_argument("need -q or --in");
    emit(php::family_to_json(php::mols_to_family(squares)));
  });
  auto* b_rbibd = bridge->add_subcommand("rbibd-to-family", "parallel classes to functions");
  std::string br_in;
  int br_plane = 0, br_ktr = 0;
  b_rbibd->add_option("--in", br_in, "design JSON");
  b_rbibd->add_option("--plane", br_plane, "use affine_plane(n)");
  b_rbibd->add_option("--ktr", br_ktr, "use kirkman_system(v)");
  b_rbibd->callback([&] {
    php::ResolvableDesign d;
    if (!br_in.empty())
      d = php::design_from_json(nlohmann::json::parse(php::read_text_file(br_in)));
    else if (br_plane > 0)
      d = php::affine_plane(br_plane);
    else if (br_ktr > 0)
      d = php::kirkman_system(br_ktr);
    else
      throw std::invalid_argument("need --in, --plane or --ktr");
    emit(php::family_to_json(php::rbibd_to_family(d)));
  });
  auto* b_prod = bridge->add_subcommand("product", "AUC witness from a disjoint family");
  std::string bp_in;
  b_prod->add_option("--in", bp_in, "family JSON")->required();
  b_prod->callback([&] {
    auto f = php::family_from_json(nlohmann::json::parse(php::read_text_file(bp_in)));
    emit(php::auc_to_json(php::product_family(f)));
  });
  auto* b_pad = bridge->add_subcommand("padding", "padding reduction witness");
  int pm = 0, pn = 0, pq = 0, pr = 0;
  b_pad->add_option("-m", pm)->required();
  b_pad->add_option("-n", pn)->required();
  b_pad->add_option("-q", pq)->required();
  b_pad->add_option("-r", pr)->required();
  b_pad->callback([&] { emit(php::witness_to_json(php::padding_witness(pm, pn, pq, pr))); });

  // bound
  auto* bound = app.add_subcommand("bound", "counting bounds for a shape");
  int bm = 0, bn = 0;
  bound->add_option("-m", bm)->required();
  bound->add_option("-n", bn)->required();
  bound->callback([&] {
    php::Shape s(bm, bn);
    ordered_json j;
    j["minSolutions"] = php::min_solution_count(s);
    j["maxKUpper"] = php::max_k_upper_bound(s);
    j["idThreshold"] = php::php_le_idk_threshold(bn);
    emit(j);
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reducibility decisions");
  auto* r_decide = reduce->add_subcommand("decide", "search for a backward map");
  std::string r_from, r_to;
  r_decide->add_option("--from", r_from, "php:m,n or id:k")->required();
  r_decide->add_option("--to", r_to, "php:m,n or id:k")->required();
  r_decide->callback([&] {
    bool from_php = false, to_php = false;
    php::Shape sf, st;
    php::FiniteProblem p = parse_problem(r_from, &from_php, &sf);
    php::FiniteProblem q = parse_problem(r_to, &to_php, &st);
    auto seed = php::php_reduction_seed();
    auto res = php::decide_reduction(p, q, budget(),
                                     from_php && to_php ? &seed : nullptr);
    ordered_json j;
    j["decision"] = php::to_string(res.decision);
    j["nodes"] = res.nodes;
    if (res.witness) j["witness"] = php::witness_to_json(*res.witness);
    if (res.decision == php::Decision::kNo) g_exit = 1;
    if (res.decision == php::Decision::kBudgetExhausted) g_exit = 2;
    emit(j);
  });

  // jump
  auto* jump = app.add_subcommand("jump", "jump-level witness checkers");
  auto* j_auc = jump->add_subcommand("check-auc", "triple-disjointness condition");
  std::string ja_file;
  j_auc->add_option("file", ja_file)->required();
  j_auc->callback([&] {
    auto w = php::auc_from_json(nlohmann::json::parse(php::read_text_file(ja_file)));
    auto v = php::check_auc_witness(w);
    ordered_json j = verdict_json(v.ok);
    if (!v.ok) {
      j["first"] = v.first;
      j["second"] = v.second;
      j["pair"] = {v.witness.i, v.witness.j};
      g_exit = 1;
    }
    emit(j);
  });
  auto* j_acc = jump->add_subcommand("check-acc", "empty common-solution condition");
  std::string jc_file;
  j_acc->add_option("file", jc_file)->required();
  j_acc->callback([&] {
    auto f = php::family_from_json(nlohmann::json::parse(php::read_text_file(jc_file)));
    auto v = php::check_acc_witness(f.shape, f.functions);
    ordered_json j = verdict_json(v.ok);
    if (!v.ok) {
      j["pair"] = {v.witness.i, v.witness.j};
      g_exit = 1;
    }
    emit(j);
  });
  auto* j_ck = jump->add_subcommand("check-ck", "finite choice tree condition");
  std::string jk_file;
  bool jk_strict = false;
  j_ck->add_option("file", jk_file)->required();
  j_ck->add_flag("--strict", jk_strict, "read 'extends' non-reflexively");
  j_ck->callback([&] {
    auto t = php::cktree_from_json(nlohmann::json::parse(php::read_text_file(jk_file)));
    auto v = php::check_ck_tree(t, /*reflexive=*/!jk_strict);
    ordered_json j = verdict_json(v.ok);
    if (!v.ok) {
      j["pair"] = {v.pair.i, v.pair.j};
      j["node"] = v.node;
      g_exit = 1;
    }
    emit(j);
  });
  auto* j_scan = jump->add_subcommand("scan", "exhaustive witness scans");
  std::string js_kind;
  int js_n = 0, js_m = 0, js_k = -1;
  j_scan->add_option("--kind", js_kind, "auc | acc")->required();
  j_scan->add_option("-n", js_n);
  j_scan->add_option("-m", js_m);
  j_scan->add_option("-k", js_k);
  j_scan->callback([&] {
    ordered_json j;
    if (js_kind == "auc") {
      auto res = php::auc_impossibility_scan(js_n, js_k);
      j["result"] = res.result == php::ScanResult::kImpossible ? "impossible" : "witness";
      j["candidates"] = res.candidates;
      if (res.witness) j["witness"] = php::auc_to_json(*res.witness);
      if (res.result == php::ScanResult::kImpossible) g_exit = 1;
    } else if (js_kind == "acc") {
      if (js_k < 2) throw std::invalid_argument("acc scan needs -k");
      auto res = php::acc_witness_scan(php::Shape(js_m, js_n), js_k);
      j["result"] = res.result == php::ScanResult::kImpossible ? "impossible" : "witness";
      j["candidates"] = res.candidates;
      if (res.witness) j["witness"] = php::family_to_json(*res.witness);
      if (res.result == php::ScanResult::kImpossible) g_exit = 1;
    } else {
      throw std::invalid_argument("unknown scan kind: " + js_kind);
    }
    emit(j);
  });

  // atlas
  auto* atlas_cmd = app.add_subcommand("atlas", "the reduction atlas");
  auto* a_build = atlas_cmd->add_subcommand("build", "compute entries and edges");
  int an = 5, am = 0;
  std::string a_cache;
  a_build->add_option("-N", an, "largest color count");
  a_build->add_option("-M", am, "largest domain size (0 = per-n cap)");
  a_build->add_option("--cache", a_cache, "cache JSON path");
  a_build->callback([&] {
    php::Atlas atlas;
    bool from_cache = false;
    if (!a_cache.empty()) {
      try {
        atlas = php::atlas_from_json(php::read_text_file(a_cache));
        from_cache = atlas.max_n == an && atlas.max_m == am;
      } catch (const std::exception&) {
        from_cache = false;
      }
    }
    if (!from_cache) atlas = php::atlas_build(am, an, budget());
    std::string text = php::emit_json(atlas);
    if (!a_cache.empty()) php::write_text_file(a_cache, text);
    std::cout << text;
  });
  auto* a_dot = atlas_cmd->add_subcommand("dot", "render as Graphviz text");
  int dn = 5, dmm = 0;
  std::string d_cache, d_out;
  bool fig2 = false, strict_only = false;
  a_dot->add_option("-N", dn, "largest color count");
  a_dot->add_option("-M", dmm, "largest domain size (0 = per-n cap)");
  a_dot->add_option("--cache", d_cache, "cache JSON path");
  a_dot->add_option("--dot", d_out, "write DOT here instead of stdout");
  a_dot->add_flag("--fig2", fig2, "annotate jump-witness levels");
  a_dot->add_flag("--strict-only", strict_only, "only strict edges");
  a_dot->callback([&] {
    php::Atlas atlas;
    bool loaded = false;
    if (!d_cache.empty()) {
      try {
        atlas = php::atlas_from_json(php::read_text_file(d_cache));
        loaded = true;
      } catch (const std::exception&) {
        loaded = false;
      }
    }
    if (!loaded) atlas = php::atlas_build(dmm, dn, budget());
    std::string text = php::emit_dot(atlas, fig2, strict_only);
    if (!d_out.empty())
      php::write_text_file(d_out, text);
    else
      std::cout << text;
  });

  // Let --budget-secs / --budget-nodes appear after any subcommand.
  auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands({})) self(sub, self);
  };
  enable_fallthrough(&app, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const php::BudgetError& e) {
    ordered_json j;
    j["error"] = e.what();
    j["kind"] = "budget";
    emit(j);
    return 2;
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = e.what();
    j["kind"] = "input";
    emit(j);
    return 2;
  }
  return g_exit;
}
