#ifndef SKE_KANTIAN_HPP
#define SKE_KANTIAN_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>

#include "ske/game.hpp"
#include "ske/normalize.hpp"
#include "ske/optim/golden_section.hpp"

namespace ske {

/// The argmax of the diagonal payoff over [0,1] is one of three shapes:
/// a single point, the endpoint pair {0,1}, or the whole interval.  For a
/// quadratic on [0,1] no other shape can occur.
template <typename Scalar = double>
struct Singleton {
  Scalar p;
};
struct Endpoints {};     // the two-element set {0, 1}
struct FullInterval {};  // the whole interval [0, 1]

template <typename Scalar = double>
using SkeStrategySet = std::variant<Singleton<Scalar>, Endpoints, FullInterval>;

/// Which case of the closed-form solution applied.
enum class SkeBranch {
  BetterDiagonal,   // pure play of the strategy with the larger diagonal payoff
  EitherPure,       // equal diagonal, cross payoffs unattractive: {0,1}
  AnyMixture,       // diagonal payoff constant in p: [0,1]
  InteriorMixture,  // strict interior maximizer
};

inline const char* to_string(SkeBranch b) {
  switch (b) {
    case SkeBranch::BetterDiagonal: return "better-diagonal";
    case SkeBranch::EitherPure: return "either-pure";
    case SkeBranch::AnyMixture: return "any-mixture";
    case SkeBranch::InteriorMixture: return "interior-mixture";
  }
  return "?";
}

template <typename Scalar = double>
struct SkeSolution {
  SkeStrategySet<Scalar> strategies;  // with respect to the original strategy labels
  Scalar payoff;
  SkeBranch branch;
  Scalar normalized_p;  // representative probability in the normalized (possibly swapped) game
};

using SkeSolutiond = SkeSolution<double>;

/// Payoff to either player when both play (p, 1-p):
/// p^2 a00 + p(1-p)(a01+a10) + (1-p)^2 a11.
template <typename Scalar>
Scalar diagonal_payoff(const SymmetricGame<Scalar>& g, Scalar p) {
  if (!(p >= Scalar(0) && p <= Scalar(1)))
    throw std::invalid_argument("diagonal_payoff: p must lie in [0,1]");
  const Eigen::Matrix<Scalar, 2, 1> x(p, Scalar(1) - p);
  return x.dot(g.payoff_matrix() * x);
}

/// Closed-form argmax of the diagonal payoff for a normalized game.
/// DiagDistinct splits on cross_sum vs 2, DiagEqual on the sign of
/// cross_sum; comparisons within branch_tol take the boundary branch.
template <typename Scalar>
SkeStrategySet<Scalar> solve_ske_normalized(const NormalizedGame<Scalar>& n,
                                            Scalar branch_tol = Scalar(1e-9)) {
  const Scalar s = n.cross_sum();
  if (n.diag_distinct()) {
    if (s < Scalar(2) - branch_tol) return Singleton<Scalar>{Scalar(1)};
    const Scalar p = s / (Scalar(2) * (s - Scalar(1)));
    return Singleton<Scalar>{std::min(p, Scalar(1))};
  }
  if (s < -branch_tol) return Endpoints{};
  if (s <= branch_tol) return FullInterval{};
  return Singleton<Scalar>{Scalar(0.5)};
}

/// Closed-form simple Kantian equilibrium of a symmetric 2x2 game: the
/// set of common strategies maximizing the diagonal payoff, the attained
/// payoff, and the case that produced them.  Probabilities are reported
/// with respect to the original strategy labels even when normalization
/// reversed them.
template <typename Scalar>
SkeSolution<Scalar> solve_ske(const SymmetricGame<Scalar>& g, Scalar branch_tol = Scalar(1e-9)) {
  const Normalization<Scalar> norm = normalize(g, branch_tol);
  const SkeStrategySet<Scalar> set = solve_ske_normalized(norm.game, branch_tol);

  const Scalar diag_max = std::max(g.a00(), g.a11());
  const Scalar s = g.cross_sum();

  SkeBranch branch;
  Scalar payoff;
  if (std::holds_alternative<Endpoints>(set)) {
    branch = SkeBranch::EitherPure;
    payoff = diag_max;
  } else if (std::holds_alternative<FullInterval>(set)) {
    branch = SkeBranch::AnyMixture;
    payoff = diag_max;
  } else if (!norm.game.diag_distinct() || norm.game.cross_sum() > Scalar(2) + branch_tol) {
    branch = SkeBranch::InteriorMixture;
    payoff = (s * s - Scalar(4) * g.a00() * g.a11()) / (Scalar(4) * (s - g.a00() - g.a11()));
  } else {
    branch = SkeBranch::BetterDiagonal;
    payoff = diag_max;
  }

  const Scalar norm_p =
      std::holds_alternative<Singleton<Scalar>>(set) ? std::get<Singleton<Scalar>>(set).p : Scalar(1);
  SkeStrategySet<Scalar> original = set;
  if (norm.game.swapped && std::holds_alternative<Singleton<Scalar>>(set))
    original = Singleton<Scalar>{Scalar(1) - norm_p};

  return {original, payoff, branch, norm_p};
}

template <typename Scalar = double>
struct DiagonalMaximum {
  Scalar p;
  Scalar value;
};

/// Independent grid-plus-golden-section maximizer of the diagonal payoff,
/// used to cross-check the closed form.  Evaluates a uniform grid over
/// [0,1], then refines around the best grid point.
template <typename Scalar>
DiagonalMaximum<Scalar> brute_force_ske(const SymmetricGame<Scalar>& g, int grid_points,
                                        Scalar refine_tol = Scalar(1e-10)) {
  if (grid_points < 3) throw std::invalid_argument("brute_force_ske: grid_points must be >= 3");

  auto f = [&](Scalar p) { return diagonal_payoff(g, p); };

  int best = 0;
  Scalar best_value = f(Scalar(0));
  for (int i = 1; i < grid_points; ++i) {
    const Scalar p = Scalar(i) / Scalar(grid_points - 1);
    const Scalar v = f(p);
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }

  const Scalar h = Scalar(1) / Scalar(grid_points - 1);
  const Scalar lo = std::max(Scalar(0), Scalar(best) * h - h);
  const Scalar hi = std::min(Scalar(1), Scalar(best) * h + h);
  const ScalarMaximum<Scalar> refined = golden_section_maximize(f, lo, hi, refine_tol);

  if (refined.value > best_value) return {refined.x, refined.value};
  return {Scalar(best) * h, best_value};
}

}  // namespace ske

#endif  // SKE_KANTIAN_HPP
