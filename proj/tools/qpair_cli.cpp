#include <exception>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpair/expr.hpp"
#include "qpair/harness.hpp"

namespace {

struct DatumArgs {
  std::string type = "A2";
  std::string gcm_file;
};

void add_datum_options(CLI::App* cmd, DatumArgs& args) {
  auto* type = cmd->add_option("--type", args.type,
                               "Cartan preset (A1, A2, B2, G2, A1xA1)");
  auto* gcm = cmd->add_option(
      "--gcm", args.gcm_file,
      "file with a generalized Cartan matrix (overrides --type)");
  type->excludes(gcm);
}

qpair::CartanDatum load_datum(const DatumArgs& args) {
  if (!args.gcm_file.empty())
    return qpair::CartanDatum::from_file(args.gcm_file);
  return qpair::CartanDatum::preset(args.type);
}

std::vector<long> parse_coords(const std::string& text, size_t rank,
                               const char* what) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&] {
    qpair::require(!cur.empty(), std::string("empty coordinate in ") + what);
    out.push_back(std::stol(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      cur.push_back(ch);
  }
  flush();
  qpair::require(out.size() == rank,
                 std::string(what) + " must list one value per vertex");
  return out;
}

int run_verify(const DatumArgs& datum, qpair::CheckConfig cfg,
               const std::string& checks_csv) {
  if (!datum.gcm_file.empty()) {
    cfg.gcm_file = datum.gcm_file;
    cfg.type.clear();
  } else {
    cfg.type = datum.type;
  }
  if (!checks_csv.empty()) {
    cfg.checks.clear();
    std::string cur;
    for (char ch : checks_csv) {
      if (ch == ',') {
        if (!cur.empty()) cfg.checks.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) cfg.checks.push_back(cur);
  }
  const qpair::CheckReport report = qpair::run_suite(cfg);
  if (cfg.format == "json")
    std::cout << report.to_json();
  else
    std::cout << report.to_text();
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for a quantized enveloping algebra"};
  app.require_subcommand(1);

  // verify
  DatumArgs vdatum;
  qpair::CheckConfig cfg;
  std::string checks_csv;
  CLI::App* verify =
      app.add_subcommand("verify", "run identity checks and report results");
  add_datum_options(verify, vdatum);
  verify->add_option("--max-height", cfg.max_height,
                     "weight-height cutoff for algebra-level checks");
  verify->add_option("--theorem-height", cfg.theorem_height,
                     "height cutoff for the invariance check (0 = derived)");
  verify->add_option("--max-power", cfg.max_power,
                     "generator-power bound for power-indexed checks");
  verify->add_option("--max-module-weight", cfg.max_module_weight,
                     "rank-one module ladder bound");
  verify->add_option("--ds-samples", cfg.ds_samples,
                     "sample count for the projection check");
  verify->add_option("--seed", cfg.seed, "seed for all sampled instances");
  verify->add_option("--checks", checks_csv,
                     "comma-separated subset of registered checks");
  verify->add_option("--format", cfg.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", cfg.timing,
                   "include wall-clock times (breaks byte-stability)");

  // eval
  DatumArgs edatum;
  std::string eval_expr;
  CLI::App* eval =
      app.add_subcommand("eval", "normal form of an algebra expression");
  add_datum_options(eval, edatum);
  eval->add_option("expr", eval_expr, "expression to evaluate")->required();

  // tau
  DatumArgs tdatum;
  std::string tau_x, tau_y;
  CLI::App* tau = app.add_subcommand(
      "tau", "pairing value of a non-negative and a non-positive element");
  add_datum_options(tau, tdatum);
  tau->add_option("x", tau_x, "element with no lowering letters")->required();
  tau->add_option("y", tau_y, "element with no raising letters")->required();

  // gram
  DatumArgs gdatum;
  std::string gamma_csv;
  CLI::App* gram = app.add_subcommand(
      "gram", "pairing matrix of one weight space, rows by raising words");
  add_datum_options(gram, gdatum);
  gram->add_option("--gamma", gamma_csv, "weight as comma-separated root coordinates")
      ->required();

  // module
  DatumArgs mdatum;
  std::string weight_csv;
  bool lowest = false;
  CLI::App* module = app.add_subcommand(
      "module", "basis, weights, and action matrices of a simple module");
  add_datum_options(module, mdatum);
  module
      ->add_option("--weight", weight_csv,
                   "dominant weight in fundamental coordinates")
      ->required();
  module->add_flag("--lowest", lowest,
                   "build the lowest-weight module of the negated weight");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(vdatum, cfg, checks_csv);
    if (*eval) {
      const qpair::Algebra alg(load_datum(edatum));
      std::cout << qpair::render_element(qpair::parse_element(alg, eval_expr))
                << "\n";
      return 0;
    }
    if (*tau) {
      const qpair::Algebra alg(load_datum(tdatum));
      const qpair::Pairing pairing(alg);
      const qpair::Element x = qpair::parse_element(alg, tau_x);
      const qpair::Element y = qpair::parse_element(alg, tau_y);
      std::cout << qpair::render_scalar(pairing.tau(x, y)) << "\n";
      return 0;
    }
    if (*gram) {
      const qpair::Algebra alg(load_datum(gdatum));
      const qpair::Pairing pairing(alg);
      const qpair::RootVector g(
          parse_coords(gamma_csv, alg.rank(), "--gamma"));
      qpair::require(g.is_nonneg(), "--gamma must be a non-negative vector");
      const qpair::GramBlock& block = pairing.gram_block(g);
      auto word_str = [](const std::vector<int>& w) {
        std::string s;
        for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
        return s.empty() ? std::string("1") : s;
      };
      for (size_t r = 0; r < block.words.size(); ++r)
        for (size_t c = 0; c < block.words.size(); ++c)
          std::cout << "e " << word_str(block.words[r]) << " | f "
                    << word_str(block.words[c]) << " | "
                    << qpair::render_scalar(block.matrix.at(r, c)) << "\n";
      std::cout << "rank " << block.rank << "\n";
      return 0;
    }
    if (*module) {
      const qpair::Algebra alg(load_datum(mdatum));
      const qpair::Weight lambda(
          parse_coords(weight_csv, alg.rank(), "--weight"));
      const qpair::WeightModule v = lowest
                                        ? qpair::build_lowest(alg, lambda)
                                        : qpair::build_highest(alg, lambda);
      std::cout << v.dump();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
