#ifndef SKE_NASH_HPP
#define SKE_NASH_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "ske/game.hpp"

namespace ske {

/// Continuum tag for games where a player is indifferent between her two
/// strategies no matter what the opponent does; the equilibrium set is
/// then a continuum and the enumerated profiles below are not exhaustive.
enum class NashDegeneracy { None, RowPlayer, ColumnPlayer, BothPlayers };

inline const char* to_string(NashDegeneracy d) {
  switch (d) {
    case NashDegeneracy::None: return "none";
    case NashDegeneracy::RowPlayer: return "row-player-indifferent";
    case NashDegeneracy::ColumnPlayer: return "column-player-indifferent";
    case NashDegeneracy::BothPlayers: return "both-players-indifferent";
  }
  return "?";
}

template <typename Scalar = double>
struct NashProfile {
  MixedStrategy<Scalar> row;
  MixedStrategy<Scalar> col;
};

template <typename Scalar = double>
struct NashEquilibria {
  std::vector<NashProfile<Scalar>> profiles;
  NashDegeneracy degeneracy = NashDegeneracy::None;
};

using NashEquilibriad = NashEquilibria<double>;

/// Enumerates the pure equilibria by best-response checks and adds the
/// interior mixed equilibrium from the indifference conditions when both
/// coordinates fall strictly inside (0,1).  Duplicate profiles within tol
/// are merged.  Everywhere-indifferent players are reported through the
/// degeneracy tag rather than silently dropped.
template <typename Scalar>
NashEquilibria<Scalar> nash_equilibria(const BimatrixGame<Scalar>& g, Scalar tol = Scalar(1e-9)) {
  using std::abs;
  const auto& a = g.row_payoffs();
  const auto& b = g.col_payoffs();
  NashEquilibria<Scalar> out;

  const bool row_flat = abs(a(0, 0) - a(1, 0)) <= tol && abs(a(0, 1) - a(1, 1)) <= tol;
  const bool col_flat = abs(b(0, 0) - b(0, 1)) <= tol && abs(b(1, 0) - b(1, 1)) <= tol;
  if (row_flat && col_flat)
    out.degeneracy = NashDegeneracy::BothPlayers;
  else if (row_flat)
    out.degeneracy = NashDegeneracy::RowPlayer;
  else if (col_flat)
    out.degeneracy = NashDegeneracy::ColumnPlayer;

  auto push_unique = [&](Scalar p, Scalar q) {
    for (const auto& e : out.profiles)
      if (abs(e.row.p() - p) <= tol && abs(e.col.p() - q) <= tol) return;
    out.profiles.push_back({MixedStrategy<Scalar>(p), MixedStrategy<Scalar>(q)});
  };

  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const bool row_br = a(r, c) >= a(1 - r, c) - tol;
      const bool col_br = b(r, c) >= b(r, 1 - c) - tol;
      if (row_br && col_br) push_unique(r == 0 ? Scalar(1) : Scalar(0), c == 0 ? Scalar(1) : Scalar(0));
    }

  if (out.degeneracy == NashDegeneracy::None) {
    // Row indifference pins q, column indifference pins p.
    const Scalar da = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
    const Scalar db = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
    if (abs(da) > tol && abs(db) > tol) {
      const Scalar q = (a(1, 1) - a(0, 1)) / da;
      const Scalar p = (b(1, 1) - b(1, 0)) / db;
      if (p > tol && p < Scalar(1) - tol && q > tol && q < Scalar(1) - tol) push_unique(p, q);
    }
  }

  return out;
}

}  // namespace ske

#endif  // SKE_NASH_HPP
