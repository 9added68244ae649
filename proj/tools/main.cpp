// hbody: free surface actions and handlebody extension, from the shell.

#include <CLI11.hpp>

#include <iostream>

#include "hbody/error.hpp"
#include "hbody/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Handlebody extension of free surface actions"};
  app.require_subcommand(1);

  hbody::CommandOptions opts;
  long                  depth = 9;
  std::string           config_path;
  std::optional<std::string>  cache;
  std::optional<std::size_t>  coset_cap, aut_cap, closure_cap, word_cap;
  bool                  per_class = false, no_certificates = false;

  auto common = [&](CLI::App* sub, bool needs_config) {
    sub->add_option("--depth", depth, "orbit depth")->capture_default_str();
    sub->add_option("--cache", cache, "orbit cache file");
    sub->add_option("--coset-cap", coset_cap, "coset enumeration cap");
    sub->add_option("--aut-cap", aut_cap, "automorphism search node cap");
    sub->add_option("--closure-cap", closure_cap, "closure / class cap");
    sub->add_option("--word-cap", word_cap, "orbit word cap");
    if (needs_config) {
      sub->add_option("--config", config_path, "run configuration")->required();
    }
  };
  common(app.add_subcommand("orbit", "enumerate the orbit set and write the cache"), false);
  common(app.add_subcommand("check", "witness search for the configured theta"), true);
  common(app.add_subcommand("table1", "verify the fourteen published kernel words"), false);
  auto* counts = app.add_subcommand("counts", "pair counts for the configured group");
  common(counts, true);
  counts->add_flag("--per-class", per_class, "report every Aut-class of pairs");
  common(app.add_subcommand("quadruple", "commuting generating quadruple"), true);
  auto* korbit = app.add_subcommand("kernel-orbit", "kernel orbit and intersection check");
  common(korbit, true);
  korbit->add_flag("--no-certificates", no_certificates, "omit the certificate appendix");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hbody::exit_usage;
  }
  if (depth < 0) {
    std::cerr << "error: --depth must be non-negative\n";
    return hbody::exit_usage;
  }

  hbody::RunConfig config;
  if (!config_path.empty()) {
    try {
      config = hbody::load_config(config_path);
    } catch (hbody::Error const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return hbody::exit_invalid;
    }
  }
  hbody::apply_params(config.params, opts);
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--depth") > 0) {
      opts.depth = static_cast<std::size_t>(depth);
    }
  }
  if (cache) {
    opts.cache = cache;
  }
  if (coset_cap) {
    opts.coset_cap = *coset_cap;
  }
  if (aut_cap) {
    opts.aut_cap = *aut_cap;
  }
  if (closure_cap) {
    opts.closure_cap = *closure_cap;
  }
  if (word_cap) {
    opts.word_cap = *word_cap;
  }
  opts.per_class    = per_class;
  opts.certificates = !no_certificates;

  std::string const name = app.get_subcommands().front()->get_name();
  return hbody::run_command(name, config, opts, std::cout, std::cerr);
}
