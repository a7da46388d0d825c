#ifndef SKE_ANALYSIS_REPORT_HPP
#define SKE_ANALYSIS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ske/analysis/game_spec.hpp"
#include "ske/ewl.hpp"
#include "ske/kantian.hpp"
#include "ske/nash.hpp"

namespace ske {

enum class GameClass { Equal, QuantumAdvantage };

inline const char* to_string(GameClass c) {
  return c == GameClass::QuantumAdvantage ? "QuantumAdvantage" : "Equal";
}

struct NashPoint {
  NashProfile<double> profile;
  double row_payoff;
  double col_payoff;
};

/// Everything known about one game: classical and quantum equilibria, the
/// payoff gap, and the Nash baseline.  classification is QuantumAdvantage
/// exactly when gap exceeds the working tolerance.
struct ComparisonReport {
  GameSpec spec;
  SymmetricGamed game;
  SkeSolutiond classical;
  QuantumSkeResultd quantum;
  double gap;
  GameClass classification;
  std::vector<NashPoint> nash_baseline;
  NashDegeneracy nash_degeneracy;
};

struct AnalysisOptions {
  double tol = 1e-9;
};

/// Solves one game both ways.  Throws SymmetryError for asymmetric
/// bimatrix input.
ComparisonReport compare_game(const GameSpec& spec, const AnalysisOptions& opts = {});

/// One input line after solving: the report, or the error that stopped it.
struct BatchEntry {
  std::size_t line_number;
  std::optional<ComparisonReport> report;
  std::string error;
  bool malformed = false;  // distinguishes parse errors from symmetry violations

  bool ok() const { return report.has_value(); }
};

std::vector<BatchEntry> compare_batch(const std::vector<InputLine>& lines,
                                      const AnalysisOptions& opts = {});

/// Monte Carlo estimate of how common the quantum advantage is under
/// i.i.d. uniform payoffs.  Identical inputs reproduce the report
/// bit-for-bit.
struct SampleReport {
  std::uint64_t seed;
  std::uint64_t n;
  double low;
  double high;
  std::uint64_t advantaged;
  double advantage_fraction;
  double mean_gap;  // over advantaged games; 0 when there are none
  double ci95_halfwidth;
};

SampleReport run_sample(std::uint64_t n, std::uint64_t seed, double low, double high);

/// Cross-check of both closed forms against their numerical oracles over
/// seeded random games.
struct VerifySummary {
  std::uint64_t n_games;
  std::uint64_t seed;
  double tol;
  double low;
  double high;
  double max_classical_deviation;
  double max_quantum_deviation;
  std::uint64_t failures;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  double tol = 1e-5;
  double low = -10.0;
  double high = 10.0;
  int grid_per_dim = 16;
  int brute_grid_points = 1001;
};

VerifySummary run_verify(std::uint64_t n_games, std::uint64_t seed,
                         const VerifyOptions& opts = {});

enum class ReportFormat { Human, JsonLines, Csv };

std::optional<ReportFormat> parse_format(std::string_view name);

/// Numbers in human and tabular output carry 12 significant digits.
std::string format_number(double v);

/// Fixed tokens: a singleton prints its probability, the endpoint pair
/// prints "{0,1}", the full interval prints "[0,1]".
std::string strategy_set_repr(const SkeStrategySet<double>& set);

std::string csv_header();
std::string csv_row(const ComparisonReport& report);
std::string json_record(const ComparisonReport& report);
std::string json_error_record(const BatchEntry& entry);
std::string human_detail(const ComparisonReport& report);
std::string human_table(const std::vector<const ComparisonReport*>& reports);

std::string render(const SampleReport& report, ReportFormat format);
std::string render(const VerifySummary& summary, ReportFormat format);

}  // namespace ske

#endif  // SKE_ANALYSIS_REPORT_HPP
