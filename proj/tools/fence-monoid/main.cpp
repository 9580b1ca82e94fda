// fence-monoid: enumeration, Green's relations, factorization and claim
// checks for monoids of fence-preserving partial injections.

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fencemonoid/error.hpp"

using namespace fencemonoid;
using namespace fencemonoid::cli;

int main(int argc, char** argv) {
  CLI::App app{"Fence-preserving partial injection monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  if (const char* env = std::getenv("FENCE_CACHE"); env && *env) common.cache_dir = env;
  std::string format_name = "text";
  app.add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", common.cache_dir, "Table cache directory (env FENCE_CACHE)");
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Build tables without reading or writing the cache");
  app.add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--huge", common.huge, "Allow n = 9 and 10");

  EnumerateArgs en;
  std::string which = "IF";
  std::string contains;
  std::string export_to;
  std::string import_from;
  auto* enumerate = app.add_subcommand("enumerate", "Count or list I_n, PFI_n or IF_n");
  enumerate->add_option("--n", en.n, "Degree")->required();
  enumerate->add_option("--which", which, "I, PFI or IF")->check(CLI::IsMember({"I", "PFI", "IF"}));
  enumerate->add_flag("--list", en.list, "List the elements");
  enumerate->add_option("--contains", contains, "Membership query for one element");
  enumerate->add_option("--export", export_to, "Write the table in cache format");
  enumerate->add_option("--import", import_from, "Read the table from a cache-format file");

  GreensArgs gr;
  std::string relation = "J";
  auto* greens = app.add_subcommand("greens", "Green's relations on IF_n");
  greens->add_option("--n", gr.n, "Degree")->required();
  greens->add_option("--element", gr.elements, "Element (repeatable)");
  greens->add_flag("--all", gr.all, "Count classes over all of IF_n");
  greens->add_option("--relation", relation, "R, L, H, J or D")->check(CLI::IsMember({"R", "L", "H", "J", "D"}));
  greens->add_flag("--witness", gr.witness, "Print gamma, delta with b = gamma a delta");
  greens->add_flag("--classes", gr.classes, "Print the J-class table of IF_n");

  FactorizeArgs fa;
  std::string target = "J";
  auto* factorize = app.add_subcommand("factorize", "Factorize an element of IF_n");
  factorize->add_option("--n", fa.n, "Degree")->required();
  factorize->add_option("--element", fa.element, "Element to factorize")->required();
  factorize->add_option("--target", target, "J or G")->check(CLI::IsMember({"J", "G"}));
  factorize->add_flag("--verify", fa.verify, "Re-evaluate the word");

  int verify_n = 0;
  std::string claim;
  auto* verify = app.add_subcommand("verify", "Check a structural claim exhaustively");
  verify->add_option("--n", verify_n, "Degree")->required();
  verify->add_option("--claim", claim, "thm1, thm2, least, rank, odd-neg, jcrit or regular")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "least", "rank", "odd-neg", "jcrit", "regular"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  common.use_cache = !no_cache;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  const Format format = formats.at(format_name);

  CommandResult result;
  std::string name;
  int n = 0;
  try {
    if (*enumerate) {
      name = "enumerate";
      n = en.n;
      en.which = parse_kind(which);
      if (!contains.empty()) en.contains = contains;
      if (!export_to.empty()) en.export_to = export_to;
      if (!import_from.empty()) en.import_from = import_from;
      result = cmd_enumerate(en, common);
    } else if (*greens) {
      name = "greens";
      n = gr.n;
      gr.relation = parse_relation(relation);
      result = cmd_greens(gr, common);
    } else if (*factorize) {
      name = "factorize";
      n = fa.n;
      fa.target_g = target == "G";
      result = cmd_factorize(fa, common);
    } else {
      name = "verify";
      n = verify_n;
      result = cmd_verify(verify_n, parse_claim(claim), common);
    }
  } catch (const std::exception& e) {
    result = error_result(name, n, e);
  }

  if (result.status == Status::Error && format != Format::Json) {
    std::cerr << result.text;
  } else {
    std::cout << render(result, format);
  }
  if (format != Format::Json && result.status != Status::Error) std::cerr << "[" << result.timing_ms << " ms]\n";
  return exit_code(result.status);
}
