#ifndef SKE_GAME_HPP
#define SKE_GAME_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ske {

/// Positive affine map x -> scale*x + shift with scale > 0.  Applying the
/// same map to a player's payoffs leaves that player's preferences (and
/// hence every argmax set) unchanged.
template <typename Scalar = double>
class AffineTransform {
 public:
  AffineTransform(Scalar scale, Scalar shift) : scale_(scale), shift_(shift) {
    if (!(scale > Scalar(0)) || !std::isfinite(scale) || !std::isfinite(shift))
      throw std::invalid_argument("AffineTransform: scale must be finite and > 0");
  }

  static AffineTransform identity() { return {Scalar(1), Scalar(0)}; }

  Scalar scale() const { return scale_; }
  Scalar shift() const { return shift_; }

  Scalar operator()(Scalar x) const { return scale_ * x + shift_; }
  Scalar inverse(Scalar y) const { return (y - shift_) / scale_; }

  AffineTransform inverted() const { return {Scalar(1) / scale_, -shift_ / scale_}; }

  /// Composition (*this) after inner.
  AffineTransform compose(const AffineTransform& inner) const {
    return {scale_ * inner.scale_, scale_ * inner.shift_ + shift_};
  }

 private:
  Scalar scale_;
  Scalar shift_;
};

/// Probability weight on the first pure strategy; the second gets 1-p.
template <typename Scalar = double>
class MixedStrategy {
 public:
  explicit MixedStrategy(Scalar p) : p_(p) {
    if (!(p >= Scalar(0) && p <= Scalar(1)))
      throw std::invalid_argument("MixedStrategy: p must lie in [0,1]");
  }

  Scalar p() const { return p_; }

  Eigen::Matrix<Scalar, 2, 1> weights() const {
    return Eigen::Matrix<Scalar, 2, 1>(p_, Scalar(1) - p_);
  }

 private:
  Scalar p_;
};

/// 2x2 normal-form game.  Entry (k,l) of each matrix is the payoff at the
/// pure profile (row strategy k, column strategy l).
template <typename Scalar = double>
class BimatrixGame {
 public:
  using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

  template <typename DerivedA, typename DerivedB>
  BimatrixGame(const Eigen::MatrixBase<DerivedA>& row_payoffs,
               const Eigen::MatrixBase<DerivedB>& col_payoffs)
      : a_(row_payoffs), b_(col_payoffs) {
    if (!a_.allFinite() || !b_.allFinite())
      throw std::invalid_argument("BimatrixGame: payoffs must be finite");
  }

  const Matrix2& row_payoffs() const { return a_; }
  const Matrix2& col_payoffs() const { return b_; }

 private:
  Matrix2 a_;
  Matrix2 b_;
};

/// Symmetric 2x2 game, stored as the row player's payoffs; the column
/// player's matrix is the transpose of these.
template <typename Scalar = double>
class SymmetricGame {
 public:
  using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

  SymmetricGame(Scalar a00, Scalar a01, Scalar a10, Scalar a11)
      : a00_(a00), a01_(a01), a10_(a10), a11_(a11) {
    if (!(std::isfinite(a00) && std::isfinite(a01) && std::isfinite(a10) && std::isfinite(a11)))
      throw std::invalid_argument("SymmetricGame: payoffs must be finite");
  }

  Scalar a00() const { return a00_; }
  Scalar a01() const { return a01_; }
  Scalar a10() const { return a10_; }
  Scalar a11() const { return a11_; }

  Matrix2 payoff_matrix() const {
    Matrix2 m;
    m << a00_, a01_, a10_, a11_;
    return m;
  }

  BimatrixGame<Scalar> to_bimatrix() const {
    const Matrix2 m = payoff_matrix();
    return BimatrixGame<Scalar>(m, m.transpose());
  }

  /// Sum of the two cross payoffs a01 + a10.
  Scalar cross_sum() const { return a01_ + a10_; }

  /// The same game with both players' strategies renumbered in reverse.
  SymmetricGame swapped() const { return {a11_, a10_, a01_, a00_}; }

 private:
  Scalar a00_, a01_, a10_, a11_;
};

using AffineTransformd = AffineTransform<double>;
using MixedStrategyd = MixedStrategy<double>;
using BimatrixGamed = BimatrixGame<double>;
using SymmetricGamed = SymmetricGame<double>;

/// Expected payoffs (row, column) of the mixed profile ((p,1-p),(q,1-q)).
template <typename Scalar>
std::pair<Scalar, Scalar> expected_payoff(const BimatrixGame<Scalar>& g,
                                          const MixedStrategy<Scalar>& row,
                                          const MixedStrategy<Scalar>& col) {
  const Eigen::Matrix<Scalar, 2, 1> x = row.weights();
  const Eigen::Matrix<Scalar, 2, 1> y = col.weights();
  return {x.dot(g.row_payoffs() * y), x.dot(g.col_payoffs() * y)};
}

/// True iff the column matrix equals the transposed row matrix entrywise
/// within tol, i.e. u1(x,y) = u2(y,x) over all pure profiles.
template <typename Scalar>
bool is_symmetric(const BimatrixGame<Scalar>& g, Scalar tol) {
  if (!(tol >= Scalar(0))) throw std::invalid_argument("is_symmetric: tol must be >= 0");
  return (g.col_payoffs() - g.row_payoffs().transpose()).cwiseAbs().maxCoeff() <= tol;
}

/// Transforms each player's payoffs entrywise by that player's map.
template <typename Scalar>
BimatrixGame<Scalar> apply_affine(const BimatrixGame<Scalar>& g,
                                  const AffineTransform<Scalar>& row_map,
                                  const AffineTransform<Scalar>& col_map) {
  return BimatrixGame<Scalar>(
      (row_map.scale() * g.row_payoffs().array() + row_map.shift()).matrix(),
      (col_map.scale() * g.col_payoffs().array() + col_map.shift()).matrix());
}

/// Same map applied to both players keeps the game symmetric.
template <typename Scalar>
SymmetricGame<Scalar> apply_affine(const SymmetricGame<Scalar>& g,
                                   const AffineTransform<Scalar>& t) {
  return {t(g.a00()), t(g.a01()), t(g.a10()), t(g.a11())};
}

}  // namespace ske

#endif  // SKE_GAME_HPP
