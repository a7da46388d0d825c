#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ske/analysis/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitAsymmetric = 3;

void print_line_error(const ske::BatchEntry& entry) {
  if (entry.line_number == 0)
    std::cerr << "game argument: " << entry.error << '\n';
  else
    std::cerr << "line " << entry.line_number << ": " << entry.error << '\n';
}

/// Games from the input file (keeping file line numbers) followed by
/// --game arguments (line number 0).
std::vector<ske::InputLine> gather_games(const std::vector<std::string>& game_args,
                                         const std::string& input_path) {
  std::vector<ske::InputLine> lines;
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw ske::ParseError("cannot open input file: " + input_path);
    lines = ske::read_game_lines(in);
  }
  for (const std::string& arg : game_args) {
    ske::InputLine entry{0, std::string()};
    try {
      entry.content = ske::parse_game_csv(arg);
    } catch (const ske::ParseError& e) {
      entry.content = std::string(e.what());
    }
    lines.push_back(std::move(entry));
  }
  return lines;
}

int run_solve(const std::vector<ske::InputLine>& lines, ske::ReportFormat format, double tol) {
  if (lines.empty()) {
    std::cerr << "solve: no game given (use --game or --input)\n";
    return kExitMalformed;
  }
  if (lines.size() > 1) {
    std::cerr << "solve: expected exactly one game, got " << lines.size() << '\n';
    return kExitMalformed;
  }
  if (!lines.front().ok()) {
    print_line_error({lines.front().line_number, std::nullopt, lines.front().error(), true});
    return kExitMalformed;
  }

  std::optional<ske::ComparisonReport> report;
  try {
    report = ske::compare_game(lines.front().spec(), {tol});
  } catch (const ske::SymmetryError& e) {
    std::cerr << e.what() << '\n';
    return kExitAsymmetric;
  }

  switch (format) {
    case ske::ReportFormat::Human: std::cout << ske::human_detail(*report); break;
    case ske::ReportFormat::JsonLines: std::cout << ske::json_record(*report) << '\n'; break;
    case ske::ReportFormat::Csv:
      std::cout << ske::csv_header() << '\n' << ske::csv_row(*report) << '\n';
      break;
  }
  return kExitOk;
}

int run_compare(const std::vector<ske::InputLine>& lines, ske::ReportFormat format, double tol) {
  const std::vector<ske::BatchEntry> entries = ske::compare_batch(lines, {tol});

  bool any_malformed = false;
  bool any_asymmetric = false;
  std::vector<const ske::ComparisonReport*> reports;
  for (const ske::BatchEntry& entry : entries) {
    if (entry.ok()) {
      reports.push_back(&*entry.report);
    } else if (entry.malformed) {
      any_malformed = true;
    } else {
      any_asymmetric = true;
    }
  }

  switch (format) {
    case ske::ReportFormat::Human:
      std::cout << ske::human_table(reports);
      for (const ske::BatchEntry& entry : entries)
        if (!entry.ok()) print_line_error(entry);
      break;
    case ske::ReportFormat::JsonLines:
      for (const ske::BatchEntry& entry : entries) {
        if (entry.ok())
          std::cout << ske::json_record(*entry.report) << '\n';
        else
          std::cout << ske::json_error_record(entry) << '\n';
      }
      break;
    case ske::ReportFormat::Csv:
      std::cout << ske::csv_header() << '\n';
      for (const ske::ComparisonReport* report : reports) std::cout << ske::csv_row(*report) << '\n';
      for (const ske::BatchEntry& entry : entries)
        if (!entry.ok()) print_line_error(entry);
      break;
  }

  if (any_malformed) return kExitMalformed;
  if (any_asymmetric) return kExitAsymmetric;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple Kantian equilibria of symmetric 2x2 games, classical and quantum"};
  app.require_subcommand(1);

  const std::vector<std::string> format_names{"human", "json-lines", "csv"};

  std::vector<std::string> game_args;
  std::string input_path;
  std::string format_name = "human";
  double tol = 1e-9;

  auto add_game_options = [&](CLI::App* cmd, bool many) {
    auto* game_opt =
        cmd->add_option("--game", game_args, "Symmetric game payoffs \"a00,a01,a10,a11\"");
    if (!many) game_opt->expected(0, 1);
    cmd->add_option("--input", input_path, "File with one game record per line")
        ->check(CLI::ExistingFile);
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember(format_names))
        ->capture_default_str();
    cmd->add_option("--tol", tol, "Numerical tolerance")->capture_default_str();
  };

  auto* solve =
      app.add_subcommand("solve", "Solve one game: classical and quantum equilibria");
  add_game_options(solve, false);

  auto* compare = app.add_subcommand("compare", "Compare a batch of games");
  add_game_options(compare, true);

  std::uint64_t sample_n = 100000;
  std::uint64_t sample_seed = 0;
  double low = 0.0;
  double high = 1.0;
  std::string sample_format_name = "human";
  auto* sample = app.add_subcommand("sample", "Estimate how common the quantum advantage is");
  sample->add_option("--n", sample_n, "Number of games to draw")->capture_default_str();
  sample->add_option("--seed", sample_seed, "Generator seed")->capture_default_str();
  sample->add_option("--low", low, "Lower payoff bound")->capture_default_str();
  sample->add_option("--high", high, "Upper payoff bound")->capture_default_str();
  sample->add_option("--format", sample_format_name, "Output format")
      ->check(CLI::IsMember(format_names))
      ->capture_default_str();

  std::uint64_t verify_n = 100;
  std::uint64_t verify_seed = 0;
  ske::VerifyOptions verify_opts;
  std::string verify_format_name = "human";
  auto* verify =
      app.add_subcommand("verify", "Check the closed forms against numerical oracles");
  verify->add_option("--n", verify_n, "Number of random games")->capture_default_str();
  verify->add_option("--seed", verify_seed, "Generator seed")->capture_default_str();
  verify->add_option("--tol", verify_opts.tol, "Allowed oracle deviation")->capture_default_str();
  verify->add_option("--grid", verify_opts.grid_per_dim, "Optimizer grid points per dimension")
      ->check(CLI::Range(8, 1000))
      ->capture_default_str();
  verify->add_option("--low", verify_opts.low, "Lower payoff bound")->capture_default_str();
  verify->add_option("--high", verify_opts.high, "Upper payoff bound")->capture_default_str();
  verify->add_option("--format", verify_format_name, "Output format")
      ->check(CLI::IsMember(format_names))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (solve->parsed() || compare->parsed()) {
      const ske::ReportFormat format = *ske::parse_format(format_name);
      const std::vector<ske::InputLine> lines = gather_games(game_args, input_path);
      return solve->parsed() ? run_solve(lines, format, tol) : run_compare(lines, format, tol);
    }
    if (sample->parsed()) {
      const ske::SampleReport report = ske::run_sample(sample_n, sample_seed, low, high);
      std::cout << ske::render(report, *ske::parse_format(sample_format_name));
      return kExitOk;
    }
    const ske::VerifySummary summary = ske::run_verify(verify_n, verify_seed, verify_opts);
    std::cout << ske::render(summary, *ske::parse_format(verify_format_name));
    return summary.passed() ? kExitOk : kExitVerifyFailed;
  } catch (const ske::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitMalformed;
  }
}
