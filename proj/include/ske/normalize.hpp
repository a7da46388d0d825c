#ifndef SKE_NORMALIZE_HPP
#define SKE_NORMALIZE_HPP

#include <cmath>
#include <variant>

#include "ske/game.hpp"

namespace ske {

/// Canonical form of a symmetric game whose diagonal payoffs differ:
/// after a positive affine rescale the payoff matrix is
///   [[1, cross], [cross_sum - cross, 0]].
template <typename Scalar = double>
struct DiagDistinctForm {
  Scalar cross;      // rescaled a01
  Scalar cross_sum;  // rescaled a01 + a10

  SymmetricGame<Scalar> game() const {
    return {Scalar(1), cross, cross_sum - cross, Scalar(0)};
  }
};

/// Canonical form of a symmetric game with equal diagonal payoffs:
/// after shifting, the payoff matrix is
///   [[0, cross], [cross_sum - cross, 0]].
template <typename Scalar = double>
struct DiagEqualForm {
  Scalar cross;      // shifted a01
  Scalar cross_sum;  // shifted a01 + a10

  SymmetricGame<Scalar> game() const {
    return {Scalar(0), cross, cross_sum - cross, Scalar(0)};
  }
};

template <typename Scalar = double>
struct NormalizedGame {
  std::variant<DiagDistinctForm<Scalar>, DiagEqualForm<Scalar>> form;
  bool swapped = false;  // strategy labels were reversed before rescaling

  bool diag_distinct() const {
    return std::holds_alternative<DiagDistinctForm<Scalar>>(form);
  }

  Scalar cross_sum() const {
    return std::visit([](const auto& f) { return f.cross_sum; }, form);
  }

  SymmetricGame<Scalar> game() const {
    return std::visit([](const auto& f) { return f.game(); }, form);
  }
};

/// A normalized game together with the payoff map that produced it.
/// payoff_map sends original payoffs to normalized ones; its inverse
/// restores original units.
template <typename Scalar = double>
struct Normalization {
  NormalizedGame<Scalar> game;
  AffineTransform<Scalar> payoff_map;
};

using NormalizedGamed = NormalizedGame<double>;
using Normalizationd = Normalization<double>;

/// Rescales a symmetric game to one of the two canonical forms.  When the
/// diagonal entries differ by more than equal_tol the larger one is moved
/// to position (0,0) (reversing strategy labels if needed, recorded in
/// swapped) and the diagonal is mapped to 1/0; otherwise the common
/// diagonal value is shifted to 0.
template <typename Scalar>
Normalization<Scalar> normalize(const SymmetricGame<Scalar>& g,
                                Scalar equal_tol = Scalar(1e-9)) {
  using std::abs;
  if (abs(g.a00() - g.a11()) <= equal_tol) {
    AffineTransform<Scalar> t(Scalar(1), -g.a00());
    DiagEqualForm<Scalar> form{t(g.a01()), t(g.a01()) + t(g.a10())};
    return {NormalizedGame<Scalar>{form, false}, t};
  }
  const bool swapped = g.a00() < g.a11();
  const SymmetricGame<Scalar> h = swapped ? g.swapped() : g;
  const Scalar scale = Scalar(1) / (h.a00() - h.a11());
  AffineTransform<Scalar> t(scale, -h.a11() * scale);
  DiagDistinctForm<Scalar> form{t(h.a01()), t(h.a01()) + t(h.a10())};
  return {NormalizedGame<Scalar>{form, swapped}, t};
}

/// Maps a payoff value of the normalized game back to original units.
template <typename Scalar>
Scalar denormalize_payoff(const Normalization<Scalar>& n, Scalar value) {
  return n.payoff_map.inverse(value);
}

}  // namespace ske

#endif  // SKE_NORMALIZE_HPP
