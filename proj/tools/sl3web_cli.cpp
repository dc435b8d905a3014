// Command line front end: evaluate brackets and tangle invariants, normalize
// words, run the verification suites, list the builtin catalog.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sl3web/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"quantum sl(3) invariant of oriented tangles via Kuperberg webs"};
  app.require_subcommand(1);
  app.fallthrough();

  sl3web::cli::Options opts;
  app.add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cache", opts.cache_path, "result cache file");
  app.add_option("--max-crossings", opts.max_crossings, "state-sum crossing cap")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized confluence checks")
      ->capture_default_str();
  app.add_flag("--timings", opts.timings, "include timings in the output document");

  std::string word_text, scope = "all", name;

  auto* bracket = app.add_subcommand("bracket", "Kuperberg bracket of a closed web word");
  bracket->add_option("word", word_text, "web word")->required();

  auto* tangle = app.add_subcommand("tangle", "normalized invariant of a tangle word");
  tangle->add_option("word", word_text, "tangle word")->required();

  auto* normalize = app.add_subcommand("normalize", "canonical layered form of a word");
  normalize->add_option("word", word_text, "word over the merged alphabet")->required();

  auto* check = app.add_subcommand("check", "run the relation verification suites");
  check->add_option("--scope", scope, "webs, tangles or all")
      ->check(CLI::IsMember({"webs", "tangles", "all"}))
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "list builtin links");

  auto* catalog_eval = app.add_subcommand("catalog-eval", "evaluate a builtin link");
  catalog_eval->add_option("name", name, "catalog entry name")->required();

  CLI11_PARSE(app, argc, argv);

  sl3web::cli::Outcome out;
  if (bracket->parsed())
    out = sl3web::cli::run_bracket(word_text, opts);
  else if (tangle->parsed())
    out = sl3web::cli::run_tangle(word_text, opts);
  else if (normalize->parsed())
    out = sl3web::cli::run_normalize(word_text, opts);
  else if (check->parsed())
    out = sl3web::cli::run_check(scope, opts);
  else if (catalog->parsed())
    out = sl3web::cli::run_catalog(opts);
  else if (catalog_eval->parsed())
    out = sl3web::cli::run_catalog_eval(name, opts);

  if (!out.document.empty()) std::cout << out.document;
  if (!out.human.empty()) std::cerr << out.human << "\n";
  return out.exit_code;
}
