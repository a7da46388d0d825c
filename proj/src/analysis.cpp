#include "ske/analysis/report.hpp"

#include <algorithm>
#include <cmath>

#include "ske/sampling.hpp"

namespace ske {

ComparisonReport compare_game(const GameSpec& spec, const AnalysisOptions& opts) {
  const SymmetricGamed game = require_symmetric(spec, opts.tol);
  const SkeSolutiond classical = solve_ske(game, opts.tol);
  const QuantumSkeResultd quantum = quantum_ske(game, opts.tol);
  const double gap = quantum.payoff - classical.payoff;

  ComparisonReport report{spec,
                          game,
                          classical,
                          quantum,
                          gap,
                          gap > opts.tol ? GameClass::QuantumAdvantage : GameClass::Equal,
                          {},
                          NashDegeneracy::None};

  const NashEquilibriad nash = nash_equilibria(game.to_bimatrix(), opts.tol);
  report.nash_degeneracy = nash.degeneracy;
  report.nash_baseline.reserve(nash.profiles.size());
  for (const auto& profile : nash.profiles) {
    const auto [u1, u2] = expected_payoff(game.to_bimatrix(), profile.row, profile.col);
    report.nash_baseline.push_back({profile, u1, u2});
  }
  return report;
}

std::vector<BatchEntry> compare_batch(const std::vector<InputLine>& lines,
                                      const AnalysisOptions& opts) {
  std::vector<BatchEntry> entries;
  entries.reserve(lines.size());
  for (const InputLine& line : lines) {
    BatchEntry entry{line.line_number, std::nullopt, "", false};
    if (!line.ok()) {
      entry.error = line.error();
      entry.malformed = true;
    } else {
      try {
        entry.report = compare_game(line.spec(), opts);
      } catch (const SymmetryError& e) {
        entry.error = e.what();
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

SampleReport run_sample(std::uint64_t n, std::uint64_t seed, double low, double high) {
  if (n < 1) throw std::invalid_argument("run_sample: need n >= 1");
  if (!(low < high)) throw std::invalid_argument("run_sample: need low < high");

  const SplitMix64 rng(seed);
  std::uint64_t advantaged = 0;
  double gap_sum = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const SymmetricGamed g = sample_symmetric_game(rng, i, low, high);
    const double spread = g.cross_sum() - 2.0 * std::max(g.a00(), g.a11());
    if (spread > 0.0) {
      ++advantaged;
      gap_sum += quantum_ske(g).payoff - solve_ske(g).payoff;
    }
  }

  const double fraction = static_cast<double>(advantaged) / static_cast<double>(n);
  SampleReport report{seed, n, low, high, advantaged, fraction, 0.0, 0.0};
  if (advantaged > 0) report.mean_gap = gap_sum / static_cast<double>(advantaged);
  report.ci95_halfwidth = 1.96 * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(n));
  return report;
}

VerifySummary run_verify(std::uint64_t n_games, std::uint64_t seed, const VerifyOptions& opts) {
  if (n_games < 1) throw std::invalid_argument("run_verify: need n_games >= 1");
  if (!(opts.tol >= 0)) throw std::invalid_argument("run_verify: need tol >= 0");

  const SplitMix64 rng(seed);
  VerifySummary summary{n_games, seed, opts.tol, opts.low, opts.high, 0.0, 0.0, 0};
  for (std::uint64_t i = 0; i < n_games; ++i) {
    const SymmetricGamed g = sample_symmetric_game(rng, i, opts.low, opts.high);

    const double classical_dev =
        std::abs(solve_ske(g).payoff - brute_force_ske(g, opts.brute_grid_points).value);
    const double quantum_dev =
        std::abs(quantum_ske(g).payoff - optimize_diagonal(g, opts.grid_per_dim).value);

    summary.max_classical_deviation = std::max(summary.max_classical_deviation, classical_dev);
    summary.max_quantum_deviation = std::max(summary.max_quantum_deviation, quantum_dev);
    if (classical_dev > opts.tol || quantum_dev > opts.tol) ++summary.failures;
  }
  return summary;
}

}  // namespace ske
