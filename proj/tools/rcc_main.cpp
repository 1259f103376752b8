// Command-line front end: expand, invariants, catalog, minimizer, survey,
// classify, audit, verify-quintic.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "rcc/catalog.hpp"
#include "rcc/classifier.hpp"
#include "rcc/errors.hpp"
#include "rcc/poly.hpp"
#include "rcc/render.hpp"

namespace {

constexpr const char* kVersion = "rcc 1.0.0";

struct Common {
  std::string format = "table";
  int jobs = 1;
  std::string manifest_path;
  bool no_manifest = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs = true,
                bool with_manifest = true) {
  cmd->add_option("--format", c.format, "output format: table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  if (with_jobs)
    cmd->add_option("--jobs", c.jobs, "worker count for the search kernels")
        ->check(CLI::PositiveNumber);
  if (with_manifest) {
    cmd->add_option("--manifest", c.manifest_path, "write the run manifest to a file");
    cmd->add_flag("--no-manifest", c.no_manifest, "suppress the run manifest");
  }
}

void emit_manifest(const Common& c, const std::string& argv_line,
                   const std::vector<std::pair<std::string, std::string>>& inputs,
                   const std::string& output,
                   std::chrono::steady_clock::time_point start) {
  if (c.no_manifest) return;
  rcc::RunManifest m;
  m.version = kVersion;
  m.command_line = argv_line;
  m.input_digests = inputs;
  m.output_digest = rcc::fnv1a64_hex(output);
  m.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::string text = rcc::manifest_json(m);
  if (!c.manifest_path.empty()) {
    std::ofstream out(c.manifest_path);
    out << text << "\n";
  } else {
    std::cerr << text << "\n";
  }
}

std::string join_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rcc::malformed_forest("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Built-in expected reproductions; a mismatch exits 1.
bool audit_as_expected(const rcc::AuditReport& rep) {
  auto q = [&](const std::string& name) -> const rcc::Rat* {
    for (const auto& [n, v] : rep.quantities)
      if (n == name) return &v;
    return nullptr;
  };
  using rcc::parse_rat;
  if (!rep.contradiction) return false;
  switch (rep.id) {
    case 'c': return *q("ind(D+A)") == parse_rat("71/21");
    case 'd': return *q("ind(D+A)") == parse_rat("149/42");
    case 'e': return *q("ind(D+A)") == parse_rat("157/42");
    case 'f': return *q("ind(D+A)") == parse_rat("301/90");
    case 'g':
      return *q("ind(Q1'-C1')") == parse_rat("38/11") &&
             *q("ind(Q2'-C2')") == parse_rat("3") &&
             *q("ind(B)") == parse_rat("268/33") &&
             *q("(K+B-Bk B)^2") == parse_rat("37/33") &&
             *q("log BMY bound") == parse_rat("23/44");
    default: return false;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of rational cuspidal plane curves: dual "
               "graphs, Hamburger-Noether pairs, catalogs and the multi-cusp "
               "classification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string argv_line = join_argv(argc, argv);
  auto start = std::chrono::steady_clock::now();

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "dual graph of a pair sequence");
  std::string expand_seq;
  cmd_expand->add_option("sequence", expand_seq, "e.g. \"(15,6)(3,2)\"")->required();

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "all invariants of a pair sequence");
  std::string inv_seq;
  Common inv_common;
  cmd_inv->add_option("sequence", inv_seq)->required();
  add_common(cmd_inv, inv_common, false, false);

  // catalog
  auto* cmd_cat = app.add_subcommand("catalog", "all standard sequences with a given lambda");
  Common cat_common;
  long long cat_lambda = 0;
  std::string cat_max_ind;
  bool cat_no_delta_minus = false;
  int cat_max_components = 0;
  cmd_cat->add_option("--lambda", cat_lambda, "lambda value (1..8)")->required();
  cmd_cat->add_option("--max-ind", cat_max_ind, "keep inductance <= p/q");
  cmd_cat->add_flag("--no-delta-minus", cat_no_delta_minus,
                    "keep only types whose (-2)-twigs all meet the (-1)-curve");
  cmd_cat->add_option("--max-components", cat_max_components,
                      "component budget (default 2*lambda)");
  add_common(cmd_cat, cat_common);

  // minimizer
  auto* cmd_min = app.add_subcommand("minimizer", "inductance minimizer for a lambda");
  Common min_common;
  long long min_lambda = 0;
  cmd_min->add_option("--lambda", min_lambda)->required();
  add_common(cmd_min, min_common, false);

  // survey
  auto* cmd_survey = app.add_subcommand("survey", "divisors of inductance <= 2/3");
  Common survey_common;
  long long survey_lambda_max = 7;
  std::string survey_bound = "2/3";
  cmd_survey->add_option("--lambda-max", survey_lambda_max);
  cmd_survey->add_option("--bound", survey_bound);
  add_common(cmd_survey, survey_common, false);

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "multi-cusp configuration analysis");
  Common classify_common;
  int classify_cusps = 4;
  bool classify_strict = false;
  cmd_classify->add_option("--cusps", classify_cusps, "number of cusps (4 or 5)")
      ->check(CLI::IsMember({4, 5}));
  cmd_classify->add_flag("--strict", classify_strict,
                         "draw lambda 6/7 catalogs without side conditions");
  add_common(cmd_classify, classify_common);

  // audit
  auto* cmd_audit = app.add_subcommand("audit", "exact inductance audit of a fixture divisor");
  Common audit_common;
  std::string audit_id;
  std::string fixtures_dir = "fixtures";
  cmd_audit->add_option("--case", audit_id, "one of c, d, e, f, g")
      ->required()
      ->check(CLI::IsMember({"c", "d", "e", "f", "g"}));
  cmd_audit->add_option("--fixtures", fixtures_dir, "fixture directory");
  add_common(cmd_audit, audit_common, false);

  // verify-quintic
  auto* cmd_quintic = app.add_subcommand(
      "verify-quintic", "check the four-cusp quintic identity and its control");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_expand->parsed()) {
      auto t = rcc::expand(rcc::parse_seq(expand_seq));
      std::cout << rcc::tree_str(t) << "\n";
      return 0;
    }
    if (cmd_inv->parsed()) {
      auto t = rcc::CuspType::make(rcc::parse_seq(inv_seq));
      std::cout << rcc::render_invariants(t, rcc::parse_format(inv_common.format));
      return 0;
    }
    if (cmd_cat->parsed()) {
      rcc::CatalogQuery q;
      q.lambda = cat_lambda;
      if (!cat_max_ind.empty()) q.max_ind = rcc::parse_rat(cat_max_ind);
      q.require_delta_minus_zero = cat_no_delta_minus;
      q.max_components = cat_max_components;
      auto types = rcc::sequences_with_lambda(q, cat_common.jobs);
      std::string out = rcc::render_catalog(types, rcc::parse_format(cat_common.format));
      std::cout << out;
      emit_manifest(cat_common, argv_line, {}, out, start);
      return 0;
    }
    if (cmd_min->parsed()) {
      auto [type, value] = rcc::minimizer(min_lambda);
      auto tree = rcc::expand(type.seq);
      std::string out = "lambda " + std::to_string(min_lambda) + ": " +
                        rcc::tree_str(tree) + " pairs " + type.pairs_text() +
                        " ind " + rcc::rat_str(value) + "\n";
      std::cout << out;
      emit_manifest(min_common, argv_line, {}, out, start);
      return 0;
    }
    if (cmd_survey->parsed()) {
      auto rows = rcc::low_inductance_survey(survey_lambda_max,
                                             rcc::parse_rat(survey_bound));
      std::string out = rcc::render_survey(rows, rcc::parse_format(survey_common.format));
      std::cout << out;
      emit_manifest(survey_common, argv_line, {}, out, start);
      return 0;
    }
    if (cmd_classify->parsed()) {
      rcc::ClassifyOptions opt;
      opt.cusps = classify_cusps;
      opt.strict = classify_strict;
      opt.jobs = classify_common.jobs;
      auto res = rcc::run_classification(opt);
      std::string out = rcc::render_classification(
          res, classify_cusps, rcc::parse_format(classify_common.format));
      std::cout << out;
      emit_manifest(classify_common, argv_line, {}, out, start);
      bool ok = rcc::matches_expected(res, classify_cusps);
      if (!ok) std::cerr << "reproduction mismatch against the built-in tables\n";
      return ok ? 0 : 1;
    }
    if (cmd_audit->parsed()) {
      std::string path = fixtures_dir + "/audit_" + audit_id + ".forest";
      std::string bytes = slurp(path);
      auto forest = rcc::parse_forest_file(path);
      auto rep = rcc::audit_case(audit_id[0], forest);
      std::string out = rcc::render_audit(rep, rcc::parse_format(audit_common.format));
      std::cout << out;
      emit_manifest(audit_common, argv_line, {{path, rcc::fnv1a64_hex(bytes)}}, out,
                    start);
      bool ok = audit_as_expected(rep);
      if (!ok) std::cerr << "reproduction mismatch against the built-in tables\n";
      return ok ? 0 : 1;
    }
    if (cmd_quintic->parsed()) {
      bool main_ok = rcc::verify_quintic();
      bool control_fails = !rcc::verify_quintic_perturbed_control();
      std::cout << "identity: " << (main_ok ? "true" : "false")
                << "\nperturbed control: " << (control_fails ? "false" : "true")
                << "\n";
      return main_ok && control_fails ? 0 : 1;
    }
  } catch (const rcc::invalid_args& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const rcc::unsupported_lambda& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const rcc::invalid_pair& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
