// rdec: evaluate arithmetic expressions over infinite decimals to a number
// of certified digits.
//
//   rdec eval "<expr>" [--digits N] [--fuel F] [--display complement|signed] [--json]
//   rdec batch <file>  [same options]

#include "rdec/cli/evaluator.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace rdec;

int main(int argc, char** argv) {
  cli::EvalConfig cfg;
  try {
    cfg.fuel = cli::default_fuel_from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "rdec: " << e.what() << '\n';
    return cli::exit_code::usage;
  }

  CLI::App app{"Exact decimal arithmetic on infinite expansions"};
  app.require_subcommand(1);

  std::size_t fuel_budget = cfg.fuel.budget;
  bool json = false;
  std::string expr;
  std::string batch_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits,-n", cfg.digits, "Fractional digits to print")
        ->check(CLI::Range(std::size_t{0}, cli::EvalConfig::max_digits));
    sub->add_option("--fuel", fuel_budget,
                    std::string("Positions scanned without progress before giving up (default from ") +
                        cli::fuel_env_var + " or 10000)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--display", cfg.display, "complement or signed")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Display>{{"complement", Display::complement},
                                           {"signed", Display::signed_magnitude}},
            CLI::ignore_case));
    sub->add_flag("--json", json, "Emit one JSON object per expression");
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one expression");
  eval->add_option("expr", expr, "Expression, e.g. \"sqrt(2)*sqrt(2)\"")->required();
  add_common(eval);

  CLI::App* batch = app.add_subcommand("batch", "Evaluate one expression per line of a file");
  batch->add_option("file", batch_path, "Input file")->required();
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::exit_code::success : cli::exit_code::usage;
  }

  cfg.fuel = Fuel(fuel_budget);
  cfg.output = json ? cli::OutputFormat::json : cli::OutputFormat::text;

  if (*eval) return cli::run_expression(expr, cfg, std::cout, std::cerr);

  std::ifstream in(batch_path);
  if (!in) {
    std::cerr << "rdec: cannot open " << batch_path << '\n';
    return cli::exit_code::io;
  }
  return cli::run_batch(in, cfg, std::cout, std::cerr);
}
