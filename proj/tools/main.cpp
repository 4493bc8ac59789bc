#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pscode/cli.hpp"

int main(int argc, char** argv) {
  using pscode::Command;
  CLI::App app{"Build and exhaustively check an A2-code over a pseudo-symplectic space on GF(2^e)"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  const std::map<std::string, Command> commands{{"validate", Command::Validate}, {"build", Command::Build},
                                                {"verify", Command::Verify},     {"attack", Command::Attack},
                                                {"count", Command::Count},       {"report", Command::Report}};
  pscode::RunConfig cfg;
  std::string command;
  std::string modulus;
  std::string format = "json";
  std::string out;

  app.add_option("command", command, "validate | build | verify | attack | count | report")
      ->required()
      ->check(CLI::IsMember({"validate", "build", "verify", "attack", "count", "report"}));
  app.add_option("--q-exp", cfg.qExp, "field GF(2^e): the exponent e")->check(CLI::Range(1u, 16u));
  app.add_option("--modulus", modulus, "irreducible modulus as an integer bit-vector (decimal or 0x-prefixed)");
  auto* nu = app.add_option("--nu", cfg.nu, "nu (space dimension is 2*nu+2)");
  auto* s = app.add_option("--s", cfg.s, "source-state index s (count: Gram rank is 2s)");
  auto* m0 = app.add_option("--m0", cfg.m0, "dimension of P0");
  auto* s0 = app.add_option("--s0", cfg.s0, "P0 has form rank 2*s0");
  auto* m = app.add_option("--m", cfg.m, "count: subspace dimension");
  auto* n = app.add_option("--n", cfg.n, "count: symplectic dimension (even)");
  app.add_option("--out", out, "write the document to this file instead of stdout");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--oracle-budget", cfg.oracleBudget, "max subspaces the brute-force Anzahl oracle may enumerate");
  std::size_t pair_sample = 0;
  auto* pairs = app.add_option("--pair-sample", pair_sample, "message pairs to sample for the pair lemma (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pscode::exit_code::kUsage;
  }

  cfg.command = commands.at(command);
  cfg.format = format == "csv" ? pscode::Format::Csv : pscode::Format::Json;
  if (!out.empty()) cfg.outputPath = out;
  if (pairs->count() > 0) cfg.pairSample = pair_sample;
  if (!modulus.empty()) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(modulus, &used, 0);
      if (used != modulus.size()) throw std::invalid_argument("trailing characters");
      cfg.modulus = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      std::cerr << "error: --modulus must be an integer, got '" << modulus << "'\n" << app.help();
      return pscode::exit_code::kUsage;
    }
  }

  const auto require = [&](std::initializer_list<CLI::Option*> opts) {
    for (auto* o : opts) {
      if (o->count() == 0) {
        std::cerr << "error: " << command << " requires " << o->get_name() << "\n" << app.help();
        return false;
      }
    }
    return true;
  };
  const bool ok = cfg.command == Command::Count ? require({m, s, n}) : require({nu, s, m0, s0});
  if (!ok) return pscode::exit_code::kUsage;

  return pscode::run(cfg, std::cout, std::cerr);
}
