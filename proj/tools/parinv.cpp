#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "parinv/canonical.hpp"
#include "parinv/error.hpp"
#include "parinv/generators.hpp"
#include "parinv/io.hpp"
#include "parinv/verify.hpp"

using namespace parinv;

namespace {

constexpr int kDefaultNLimit = 12;
constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string command;
  std::string blocks;
  std::string input;
  std::string output;
  std::string format;  // empty: the command's default
  std::uint64_t seed = 0;
  int n_max = 8;
  int degree_bound = 0;
  bool allow_large = false;
};

struct Outcome {
  std::string text;
  bool ok = true;
};

void check_size(int n, const RunConfig& cfg) {
  if (n <= kDefaultNLimit) return;
  if (!cfg.allow_large)
    throw Error(ErrorCode::BadInput, "n = " + std::to_string(n) + " exceeds the limit of " +
                                         std::to_string(kDefaultNLimit) + " (pass --allow-large to override)");
  spdlog::warn("n = {} is above {}; symbolic determinants may take a very long time", n, kDefaultNLimit);
}

Composition composition_of(const RunConfig& cfg) {
  if (cfg.blocks.empty()) throw Error(ErrorCode::BadComposition, "--blocks is required");
  Composition comp = Composition::parse(cfg.blocks);
  check_size(comp.n(), cfg);
  return comp;
}

Json read_json_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorCode::BadInput, "--input is required");
  std::ifstream in(cfg.input);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + cfg.input);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, cfg.input + ": " + e.what());
  }
}

bool want_json(const RunConfig& cfg, bool json_by_default) {
  if (cfg.format.empty()) return json_by_default;
  return cfg.format == "json";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Outcome cmd_diagram(const RunConfig& cfg) {
  const GeneratorSet gs(composition_of(cfg));
  const std::string grid = render_diagram(gs);
  if (!want_json(cfg, false)) return {grid};
  Json rows = Json::array();
  std::istringstream lines(grid);
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  Json out = generator_set_to_json(gs);
  out["diagram"] = rows;
  return {dump(out)};
}

Json generator_entry(const std::string& name, const Root& root, const Polynomial& p) {
  return Json{{"name", name}, {"root", root_to_json(root)}, {"text", p.to_string()}, {"terms", polynomial_to_json(p)}};
}

Outcome cmd_generators(const RunConfig& cfg) {
  const GeneratorSet gs(composition_of(cfg));
  const InvariantGenerators gens = build_generators(gs);
  Json ms = Json::array(), ls = Json::array(), ns = Json::array();
  for (const Root& xi : base_roots_in_layer_order(gs)) {
    Json e = generator_entry("M_" + to_string(xi), xi, gens.base_minors.at(xi));
    e["layer"] = gs.base.layer_of(xi);
    ms.push_back(std::move(e));
  }
  for (const auto& [phi, p] : gens.pair_invariants) {
    Json e = generator_entry("L_" + to_string(phi), phi, p);
    for (const auto& q : gs.pairs)
      if (q.phi == phi) e["pair"] = Json::array({root_to_json(q.xi), root_to_json(q.xi_prime)});
    ls.push_back(std::move(e));
  }
  // Radical generators: base roots first by layer, then the rest of T lex.
  std::vector<Root> t_order;
  for (const Root& xi : base_roots_in_layer_order(gs))
    if (gs.T.count(xi)) t_order.push_back(xi);
  for (const Root& xi : gs.T)
    if (!gs.base.all.count(xi)) t_order.push_back(xi);
  for (const Root& xi : t_order) {
    Json e = generator_entry("N_" + to_string(xi), xi, gens.radical.at(xi));
    e["remoteness"] = gs.remoteness_of(xi);
    ns.push_back(std::move(e));
  }
  if (want_json(cfg, false)) {
    return {dump(Json{{"composition", gs.composition.to_string()}, {"M", ms}, {"L", ls}, {"N", ns}})};
  }
  std::string text;
  for (const auto* family : {&ms, &ls, &ns})
    for (const auto& e : *family) text += e["name"].get<std::string>() + " = " + e["text"].get<std::string>() + "\n";
  return {text};
}

Outcome cmd_verify(const RunConfig& cfg) {
  check_size(cfg.n_max, cfg);
  if (cfg.n_max < 1) throw Error(ErrorCode::BadInput, "--n-max must be positive");
  spdlog::info("sweeping compositions with n <= {} (seed {})", cfg.n_max, cfg.seed);
  const SweepSummary summary = run_sweep({cfg.n_max, cfg.seed, 3});
  bool ok = summary.ok();

  Json failures = Json::array();
  for (const auto& f : summary.invariance_failures) {
    failures.push_back({{"composition", f.composition},
                        {"polynomial", f.polynomial_id},
                        {"group", to_string(f.group)},
                        {"generator", f.generator},
                        {"residual", f.residual}});
  }
  Json certificates = Json::array();
  for (const auto& c : summary.independence_certificates) {
    Json point = Json::object();
    for (const auto& [v, q] : c.certificate.point) point[v.name()] = format_rational(q);
    certificates.push_back({{"composition", c.composition},
                            {"family", c.family},
                            {"rank", c.certificate.rank},
                            {"expected_rank", c.certificate.expected_rank},
                            {"trials_used", c.certificate.trials_used},
                            {"valid", c.certificate.valid()},
                            {"point", point}});
  }
  Json out{{"n_max", cfg.n_max},
           {"seed", cfg.seed},
           {"compositions_checked", summary.compositions_checked},
           {"polynomials_checked", summary.polynomials_checked},
           {"invariance_failures", failures},
           {"independence_certificates", certificates},
           {"errors", summary.errors}};

  // Optional generator-free cross-check of the transcendence degree.
  if (cfg.degree_bound > 0) {
    Json dims = Json::array();
    for (int n = 1; n <= std::min(cfg.n_max, 4); ++n) {
      for (const Composition& comp : all_compositions(n)) {
        const GeneratorSet gs(comp);
        const int found = brute_force_invariant_ring_dimension(comp, cfg.degree_bound, 3, cfg.seed);
        const int expected = static_cast<int>(gs.T.size());
        // Low degree bounds can miss generators, so only an excess is a failure.
        if (found > expected) ok = false;
        dims.push_back({{"composition", comp.to_string()}, {"brute_force_rank", found}, {"generators", expected}});
      }
    }
    out["dimension_checks"] = dims;
  }
  out["ok"] = ok;

  if (want_json(cfg, true)) return {dump(out), ok};
  std::string text = "compositions checked: " + std::to_string(summary.compositions_checked) + "\n";
  text += "polynomials checked: " + std::to_string(summary.polynomials_checked) + "\n";
  text += "invariance failures: " + std::to_string(failures.size()) + "\n";
  int invalid = 0;
  for (const auto& c : summary.independence_certificates) invalid += c.certificate.valid() ? 0 : 1;
  text += "independence certificates: " + std::to_string(certificates.size()) + " (" + std::to_string(invalid) +
          " inconclusive)\n";
  for (const auto& e : summary.errors) text += "error: " + e + "\n";
  text += ok ? "ok\n" : "FAILED\n";
  return {text, ok};
}

Outcome cmd_canonicalize(const RunConfig& cfg) {
  const Canonicalizer canon(composition_of(cfg));
  const RationalMatrix x = matrix_from_json(read_json_input(cfg), canon.roots().composition);
  const InvariantVector values = canon.invariant_values(x);
  const CanonicalPoint z = canon.reconstruct(values);
  if (want_json(cfg, true))
    return {dump(Json{{"canonical", root_values_to_json(z)}, {"invariants", root_values_to_json(values)}})};
  std::string text;
  for (const auto& [xi, c] : z)
    text += to_string(xi) + "  c = " + format_rational(c) + "  N = " + format_rational(values.at(xi)) + "\n";
  return {text};
}

Outcome cmd_express(const RunConfig& cfg) {
  const Canonicalizer canon(composition_of(cfg));
  const Polynomial f = polynomial_from_json(read_json_input(cfg));
  const Expression e = canon.express(f);
  const Polynomial den = Polynomial::term(e.denominator, 1);
  if (want_json(cfg, true)) {
    return {dump(Json{{"numerator", e.numerator.to_string()},
                      {"denominator", den.to_string()},
                      {"numerator_terms", polynomial_to_json(e.numerator)},
                      {"denominator_terms", polynomial_to_json(den)}})};
  }
  return {"numerator: " + e.numerator.to_string() + "\ndenominator: " + den.to_string() + "\n"};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + cfg.output);
  out << text;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("parinv");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("PARINV_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  RunConfig cfg;
  CLI::App app{"Invariants of the unipotent radical of a parabolic subalgebra of gl(n)"};
  app.require_subcommand(1);

  auto add_blocks = [&](CLI::App* sub) {
    sub->add_option("--blocks", cfg.blocks, "Block sizes, comma separated (e.g. 2,1,3,2)")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Write to this file instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-large", cfg.allow_large, "Permit n above 12 (slow)");
  };

  auto* diagram = app.add_subcommand("diagram", "Draw the S / X / T diagram of a composition");
  add_blocks(diagram);
  add_common(diagram);
  auto* generators = app.add_subcommand("generators", "List every M, L and N generator");
  add_blocks(generators);
  add_common(generators);
  auto* verify = app.add_subcommand("verify", "Invariance and independence sweep over all compositions");
  verify->add_option("--n-max", cfg.n_max, "Largest n to sweep");
  verify->add_option("--seed", cfg.seed, "Seed for the random evaluation points");
  verify->add_option("--degree-bound", cfg.degree_bound,
                     "Also compare a brute-force invariant count up to this degree (n <= 4)");
  add_common(verify);
  auto* canonicalize = app.add_subcommand("canonicalize", "Canonical slice point of a matrix");
  add_blocks(canonicalize);
  canonicalize->add_option("--input", cfg.input, "JSON grid of \"p/q\" strings")->required();
  add_common(canonicalize);
  auto* express = app.add_subcommand("express", "Write a U-invariant in the N generators");
  add_blocks(express);
  express->add_option("--input", cfg.input, "JSON term list of the polynomial")->required();
  add_common(express);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Outcome result;
    if (cfg.command == "diagram") result = cmd_diagram(cfg);
    else if (cfg.command == "generators") result = cmd_generators(cfg);
    else if (cfg.command == "verify") result = cmd_verify(cfg);
    else if (cfg.command == "canonicalize") result = cmd_canonicalize(cfg);
    else result = cmd_express(cfg);
    emit(cfg, result.text);
    return result.ok ? 0 : kExitFailure;
  } catch (const Error& e) {
    const Json err{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    spdlog::error("{}: {}", to_string(e.code()), e.what());
    return kExitError;
  }
}
