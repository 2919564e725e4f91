#include "lpwr/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lpwr/expr.hpp"
#include "lpwr/probes.hpp"
#include "lpwr/sampling.hpp"

namespace lpwr {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Field parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (spec.rfind("gf", 0) == 0)
    return Field::gf(std::stoull(spec.substr(2)));
  throw std::invalid_argument("--field must be 'q' or 'gf<p>'");
}

GraphPtr load_graph(const std::string& path) {
  return std::make_shared<const Graph>(Graph::parse(read_file(path)));
}

CoeffAlgebraPtr make_coeff(const std::string& kind, Field f) {
  if (kind == "field") return std::make_shared<const FieldCoeff>(f);
  if (kind == "poly") return std::make_shared<const PolyCoeff>(f);
  if (kind == "a0") return std::make_shared<const RatFunUnitCoeff>(f);
  throw std::invalid_argument("--coeff must be field, poly or a0");
}

int emit_report(const Report& rep, std::ostream& out) {
  out << rep.str() << "\n";
  return rep.pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Cohn and Leavitt path algebras, wreath products, affinizations"};
  app.require_subcommand(1);

  std::string field_spec = "q";
  app.add_option("--field", field_spec, "scalar field: q (default) or gf<p>");

  // common option storage
  std::string file, ext_file, expr, lhs, rhs, set_csv, vertex_name, coeff_kind = "field";
  int samples = 300, maxlen = 4, deg = 0, window = 4, degree = 6;
  int max_index = 3, max_word = 2, word_cap = 8;
  std::uint64_t seed = 0;

  auto* graph_cmd = app.add_subcommand("graph", "graph file operations");
  auto* graph_check = graph_cmd->add_subcommand("check", "parse and validate a graph file");
  graph_check->add_option("file", file)->required();

  auto* hsat = app.add_subcommand("hsat", "hereditary saturated subsets");
  auto* hsat_check = hsat->add_subcommand("check", "check a subset");
  hsat_check->add_option("file", file)->required();
  hsat_check->add_option("--set", set_csv, "comma-separated vertices")->required();
  auto* hsat_closure_cmd = hsat->add_subcommand("closure", "least hereditary saturated superset");
  hsat_closure_cmd->add_option("file", file)->required();
  hsat_closure_cmd->add_option("--set", set_csv)->required();
  auto* hsat_enum = hsat->add_subcommand("enumerate", "all hereditary saturated subsets");
  hsat_enum->add_option("file", file)->required();

  auto* cohn_cmd = app.add_subcommand("cohn", "Cohn algebra C(Gamma)");
  auto* cohn_nf = cohn_cmd->add_subcommand("nf", "canonical form of an expression");
  cohn_nf->add_option("file", file)->required();
  cohn_nf->add_option("--expr", expr)->required();
  auto* cohn_mul_cmd = cohn_cmd->add_subcommand("mul", "product of two expressions");
  cohn_mul_cmd->add_option("file", file)->required();
  cohn_mul_cmd->add_option("--lhs", lhs)->required();
  cohn_mul_cmd->add_option("--rhs", rhs)->required();

  auto* lpa_cmd = app.add_subcommand("lpa", "Leavitt path algebra L(Gamma)");
  auto* lpa_nf = lpa_cmd->add_subcommand("nf", "rewriting normal form");
  lpa_nf->add_option("file", file)->required();
  lpa_nf->add_option("--expr", expr)->required();
  auto* lpa_mul_cmd = lpa_cmd->add_subcommand("mul", "product in L(Gamma)");
  lpa_mul_cmd->add_option("file", file)->required();
  lpa_mul_cmd->add_option("--lhs", lhs)->required();
  lpa_mul_cmd->add_option("--rhs", rhs)->required();
  auto* lpa_graded = lpa_cmd->add_subcommand("graded", "graded component");
  lpa_graded->add_option("file", file)->required();
  lpa_graded->add_option("--expr", expr)->required();
  lpa_graded->add_option("--deg", deg)->required();

  auto* wreath_cmd = app.add_subcommand("wreath", "the wreath product A wr L(Gamma)");
  auto* wreath_nf = wreath_cmd->add_subcommand("nf", "wreath normal form");
  wreath_nf->add_option("file", file)->required();
  wreath_nf->add_option("--ext", ext_file, "extension file (idem/bridge lines)")->required();
  wreath_nf->add_option("--coeff", coeff_kind, "field|poly|a0");
  wreath_nf->add_option("--expr", expr)->required();
  auto* wreath_mul_cmd = wreath_cmd->add_subcommand("mul", "product in A wr L(Gamma)");
  wreath_mul_cmd->add_option("file", file)->required();
  wreath_mul_cmd->add_option("--ext", ext_file)->required();
  wreath_mul_cmd->add_option("--coeff", coeff_kind);
  wreath_mul_cmd->add_option("--lhs", lhs)->required();
  wreath_mul_cmd->add_option("--rhs", rhs)->required();

  auto* lemma = app.add_subcommand("lemma", "property probes");
  auto* lemma_probe = lemma->add_subcommand("probe", "run a lemma probe");
  std::string probe_name;
  lemma_probe->add_option("name", probe_name, "assoc|actions|ck|jcapi")->required();
  lemma_probe->add_option("--samples", samples);
  lemma_probe->add_option("--seed", seed);
  lemma_probe->add_option("--maxlen", maxlen);

  auto* prop1 = app.add_subcommand("prop1", "finite generation of the wreath product");
  auto* prop1_check_cmd = prop1->add_subcommand("check", "witness search over F[x]");
  prop1_check_cmd->add_option("--max-index", max_index);
  prop1_check_cmd->add_option("--max-word", max_word);
  prop1_check_cmd->add_option("--cap", word_cap, "maximum witness word length");

  auto* prop2 = app.add_subcommand("prop2", "L(Gamma) = L(Gamma(W)) wr L(Gamma/W)");
  auto* prop2_verify_cmd = prop2->add_subcommand("verify", "instance check");
  prop2_verify_cmd->add_option("file", file)->required();
  prop2_verify_cmd->add_option("--set", set_csv)->required();
  prop2_verify_cmd->add_option("--maxlen", maxlen);
  prop2_verify_cmd->add_option("--samples", samples);
  prop2_verify_cmd->add_option("--seed", seed);

  auto* balloon = app.add_subcommand("balloon", "balloon extensions");
  auto* balloon_check = balloon->add_subcommand("check", "L(Gamma') = L(Gamma) wr L(C)");
  balloon_check->add_option("file", file)->required();
  balloon_check->add_option("--vertex", vertex_name)->required();
  balloon_check->add_option("--maxlen", maxlen);
  balloon_check->add_option("--samples", samples);
  balloon_check->add_option("--seed", seed);

  auto* affinize = app.add_subcommand("affinize", "the loop wreath F[t,t^-1] + M(A)");
  auto* aff_rel = affinize->add_subcommand("relations", "the displayed shift relations");
  aff_rel->add_option("--seed", seed);
  auto* aff_prop3 = affinize->add_subcommand("prop3", "containment checks");
  aff_prop3->add_option("--degree", degree);
  aff_prop3->add_option("--window", window);
  auto* aff_rad = affinize->add_subcommand("radical", "quasi-inverse probes over A0");
  aff_rad->add_option("--samples", samples);
  aff_rad->add_option("--seed", seed);

  // let --field (defined on the root) appear after any subcommand
  auto enable_fallthrough = [](CLI::App* cmd, auto&& self) -> void {
    cmd->fallthrough();
    for (auto* sub : cmd->get_subcommands({})) self(sub, self);
  };
  for (auto* sub : app.get_subcommands({})) enable_fallthrough(sub, enable_fallthrough);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    out << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Field f = parse_field(field_spec);

    if (*graph_check) {
      GraphPtr g = load_graph(file);
      out << "graph OK: " << g->vertex_count() << " vertices, " << g->edge_count()
          << " edges\n";
      std::string sinks;
      for (int v = 0; v < g->vertex_count(); ++v)
        if (g->is_sink(v)) sinks += (sinks.empty() ? "" : ",") + g->vertex_name(v);
      out << "sinks: " << (sinks.empty() ? "(none)" : sinks) << "\n";
      return 0;
    }
    if (*hsat_check) {
      GraphPtr g = load_graph(file);
      auto w = g->parse_vertex_set(set_csv);
      auto r = hereditary_saturated_check(*g, w);
      out << "hereditary: " << (r.hereditary ? "yes" : "no") << "\n";
      out << "saturated: " << (r.saturated ? "yes" : "no") << "\n";
      return 0;
    }
    if (*hsat_closure_cmd) {
      GraphPtr g = load_graph(file);
      out << g->set_str(hsat_closure(*g, g->parse_vertex_set(set_csv))) << "\n";
      return 0;
    }
    if (*hsat_enum) {
      GraphPtr g = load_graph(file);
      for (const auto& w : enumerate_hsat(*g)) out << g->set_str(w) << "\n";
      return 0;
    }
    if (*cohn_nf || *cohn_mul_cmd) {
      ExprEnv env{load_graph(file), f, nullptr};
      if (*cohn_nf) {
        out << parse_cohn_expr(env, expr).str() << "\n";
      } else {
        out << cohn_mul(parse_cohn_expr(env, lhs), parse_cohn_expr(env, rhs)).str()
            << "\n";
      }
      return 0;
    }
    if (*lpa_nf || *lpa_mul_cmd || *lpa_graded) {
      ExprEnv env{load_graph(file), f, nullptr};
      if (*lpa_nf) {
        out << LeavittElement(parse_cohn_expr(env, expr)).str() << "\n";
      } else if (*lpa_mul_cmd) {
        out << lpa_mul(LeavittElement(parse_cohn_expr(env, lhs)),
                       LeavittElement(parse_cohn_expr(env, rhs)))
                   .str()
            << "\n";
      } else {
        out << LeavittElement(parse_cohn_expr(env, expr)).graded_component(deg).str()
            << "\n";
      }
      return 0;
    }
    if (*wreath_nf || *wreath_mul_cmd) {
      GraphPtr g = load_graph(file);
      auto coeff = make_coeff(coeff_kind, f);
      auto specs = ExtendedGraph::parse_extension(read_file(ext_file));
      ExtendedGraphPtr eg = extend_graph(g, coeff, specs);
      ExprEnv env{g, f, eg};
      if (*wreath_nf) {
        out << WreathElement::normal_form(parse_action_expr(env, expr)).str() << "\n";
      } else {
        WreathElement a = WreathElement::normal_form(parse_action_expr(env, lhs));
        WreathElement b = WreathElement::normal_form(parse_action_expr(env, rhs));
        out << wreath_mul(a, b).str() << "\n";
      }
      return 0;
    }
    if (*lemma_probe) {
      if (probe_name == "assoc")
        return emit_report(probe_associativity(f, samples, seed), out);
      if (probe_name == "actions")
        return emit_report(probe_actions(f, maxlen), out);
      if (probe_name == "ck")
        return emit_report(probe_ck_annihilation(f, maxlen, seed), out);
      if (probe_name == "jcapi")
        return emit_report(probe_j_reduction(f, samples, seed), out);
      out << "usage error: unknown probe '" << probe_name
          << "' (expected assoc|actions|ck|jcapi)\n";
      return 2;
    }
    if (*prop1_check_cmd)
      return emit_report(probe_prop1(f, max_index, max_word, word_cap), out);
    if (*prop2_verify_cmd) {
      GraphPtr g = load_graph(file);
      Prop2Options opt;
      opt.maxlen = maxlen;
      opt.samples = samples;
      opt.seed = seed;
      return emit_report(prop2_verify(g, f, g->parse_vertex_set(set_csv), opt), out);
    }
    if (*balloon_check) {
      GraphPtr g = load_graph(file);
      Prop2Options opt;
      opt.maxlen = maxlen;
      opt.samples = samples;
      opt.seed = seed;
      return emit_report(balloon_iso_check(g, f, g->vertex(vertex_name), opt), out);
    }
    if (*aff_rel) return emit_report(probe_loop_relations(f, seed), out);
    if (*aff_prop3) {
      auto a = std::make_shared<const RatFunUnitCoeff>(f);
      return emit_report(prop3_check(make_loop_wreath(a), degree, window), out);
    }
    if (*aff_rad) return emit_report(probe_radical(f, samples, samples / 2, 20, seed), out);

    out << "usage error: missing subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace lpwr
