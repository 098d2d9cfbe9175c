// Command-line front end: ramlab <command> [--input FILE] [--output FILE] [--format json|csv] [--p P] [--seed N]

#include "ramlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RAMLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring non-numeric RAMLAB_SEED\n";
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramlab: ramification invariants in exact arithmetic"};
  app.require_subcommand(1, 1);

  std::string input_path, output_path, format = "json";
  std::optional<std::int64_t> p;
  std::uint64_t seed = default_seed();

  const char* commands[][2] = {
      {"gauss", "rank-two Gauss valuation of a Laurent polynomial"},
      {"supnorm", "sup-norm valuation over an annulus"},
      {"proot", "unit decomposition and p-th root shrink"},
      {"ram", "ramification jumps, Artin/Swan characters, discriminant value"},
      {"breakdec", "break decomposition of a filtered representation"},
      {"delta", "conductor function of a break profile"},
      {"newton", "Newton break function and asymptotic breaks"},
      {"check", "run the randomized invariant suites"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", input_path, "input JSON file (default: stdin)");
    sub->add_option("--output,-o", output_path, "output file (default: stdout)");
    sub->add_option("--format,-f", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--p", p, "residue characteristic when the input omits it");
    sub->add_option("--seed", seed, "seed for randomized suites (env RAMLAB_SEED)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ramlab::cli::kMalformed;
  }

  ramlab::cli::Command cmd;
  cmd.name = app.get_subcommands().front()->get_name();
  cmd.format = format == "csv" ? ramlab::cli::Format::Csv : ramlab::cli::Format::Json;
  cmd.p = p;
  cmd.seed = seed;

  if (cmd.name != "check") {
    std::stringstream text;
    if (input_path.empty() || input_path == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "cannot read " << input_path << '\n';
        return ramlab::cli::kMalformed;
      }
      text << in.rdbuf();
    }
    try {
      cmd.input = ramlab::io::Json::parse(text.str());
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "malformed input: " << e.what() << '\n';
      return ramlab::cli::kMalformed;
    }
  }

  if (output_path.empty() || output_path == "-") return ramlab::cli::run(cmd, std::cout, std::cerr);

  std::ostringstream buffer;
  const int rc = ramlab::cli::run(cmd, buffer, std::cerr);
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot write " << output_path << '\n';
    return ramlab::cli::kMalformed;
  }
  out << buffer.str();
  return rc;
}
