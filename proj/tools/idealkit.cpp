#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idealkit/dsl/interpreter.hpp"
#include "idealkit/dsl/parser.hpp"
#include "idealkit/fuzz.hpp"
#include "idealkit/verify.hpp"

namespace {

int run_file(const std::string& path, idealkit::Characteristic p) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return idealkit::dsl::run_script(buffer.str(), std::cout, std::cerr, p);
}

// Statements accumulate until a line ends a statement with ';'.
int repl(idealkit::Characteristic p) {
  idealkit::dsl::Interpreter interpreter(std::cout, p);
  std::string pending;
  std::string line;
  const bool tty = isatty(0);
  if (tty) std::cout << "idealkit> " << std::flush;
  while (std::getline(std::cin, line)) {
    pending += line + "\n";
    const auto end = line.find_last_not_of(" \t\r");
    if (end != std::string::npos && line[end] == ';') {
      try {
        interpreter.execute(idealkit::dsl::parse(pending));
      } catch (const idealkit::dsl::ScriptError& e) {
        std::cout << e.what() << "\n";
      }
      pending.clear();
    }
    if (tty) std::cout << (pending.empty() ? "idealkit> " : "......... ") << std::flush;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with monomial ideals"};
  app.require_subcommand(1);

  unsigned characteristic = 0;

  auto* run = app.add_subcommand("run", "Run a script file");
  std::string path;
  run->add_option("file", path, "Script file")->required();
  run->add_option("--char", characteristic, "Field characteristic (0 or a prime)");

  auto* verify = app.add_subcommand("verify", "Check the worked examples");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "Print the report as JSON");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded property checks on random ideals");
  idealkit::FuzzConfig config;
  std::vector<std::string> suites;
  bool fuzz_json = false;
  fuzz->add_option("--seed", config.seed, "Random seed");
  fuzz->add_option("--cases", config.cases, "Number of random instances");
  fuzz->add_option("--suite", suites, "Suite name (repeatable)")
      ->check(CLI::IsMember(idealkit::fuzz_suite_names()));
  fuzz->add_option("--char", config.characteristic, "Field characteristic (0 or a prime)");
  fuzz->add_option("--max-vars", config.max_vars_per_side, "Variables per side");
  fuzz->add_option("--max-gens", config.max_generators, "Generators per ideal");
  fuzz->add_option("--max-exp", config.max_exponent, "Largest exponent");
  fuzz->add_option("--max-s", config.max_s, "Largest power");
  fuzz->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  fuzz->add_flag("--json", fuzz_json, "Print the report as JSON");

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");
  repl_cmd->add_option("--char", characteristic, "Field characteristic (0 or a prime)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return run_file(path, characteristic);
    if (*repl_cmd) {
      idealkit::require_valid_characteristic(characteristic);
      return repl(characteristic);
    }
    if (*verify) {
      const idealkit::Report report = idealkit::run_verify();
      std::cout << (verify_json ? idealkit::verify_json(report) + "\n" : report.to_string());
      return report.passed() ? 0 : 1;
    }
    if (*fuzz) {
      if (!suites.empty()) config.suites = suites;
      const idealkit::FuzzReport report = idealkit::run_fuzz(config);
      std::cout << (fuzz_json ? report.to_json() + "\n" : report.to_text());
      return report.passed() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
