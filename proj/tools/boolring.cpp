// boolring: evaluate ring expressions over power sets, decompose ideals,
// and run the self-checks.
//
//   boolring                       interactive session
//   boolring --script file.br      batch mode; exit code reports the outcome
//   boolring --script - --json     read the script from stdin, JSON output

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boolring/dsl/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Boolean power-set rings: ideals, spectra and primary decompositions"};

  std::string script;
  bool json = false;
  std::size_t ground_max = 64;
  std::size_t oracle_max = boolring::OracleBound::kDefault;

  app.add_option("--script", script, "Run statements from a file ('-' for stdin) and exit");
  app.add_flag("--json", json, "Print one JSON document per statement");
  app.add_option("--ground-max", ground_max, "Largest ground set a script may declare")->capture_default_str();
  app.add_option("--oracle-max", oracle_max, "Ground-size bound for exhaustive checks (at most 5)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{0}, boolring::OracleBound::kHardCap));

  CLI11_PARSE(app, argc, argv);

  boolring::dsl::Session session({ground_max, boolring::OracleBound{oracle_max}});
  const boolring::dsl::RunOptions options{json};

  if (script.empty()) {
    boolring::dsl::run_repl(session, std::cin, std::cout, std::cerr, options, /*prompt=*/!json);
    return boolring::dsl::kExitOk;
  }

  std::string source;
  if (script == "-") {
    source.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "error: cannot open " << script << '\n';
      return boolring::dsl::kExitEval;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    source = buf.str();
  }
  return boolring::dsl::run_script(session, source, std::cout, std::cerr, options);
}
