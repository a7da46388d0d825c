#ifndef SKE_EWL_HPP
#define SKE_EWL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ske/game.hpp"
#include "ske/optim/nelder_mead.hpp"

namespace ske {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4c = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

/// Amplitudes over the computational basis |00>, |01>, |10>, |11>.
template <typename Scalar>
using TwoQubitState = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

/// SU(2) strategy parameters: theta in [0,pi], alpha and beta reduced
/// mod 2pi into [0,2pi).
template <typename Scalar = double>
class UnitaryParams {
 public:
  UnitaryParams(Scalar theta, Scalar alpha, Scalar beta)
      : theta_(theta), alpha_(wrap_angle(alpha)), beta_(wrap_angle(beta)) {
    if (!(theta >= Scalar(0) && theta <= std::numbers::pi_v<Scalar>))
      throw std::invalid_argument("UnitaryParams: theta must lie in [0,pi]");
  }

  Scalar theta() const { return theta_; }
  Scalar alpha() const { return alpha_; }
  Scalar beta() const { return beta_; }

  static Scalar wrap_angle(Scalar x) {
    if (!std::isfinite(x)) throw std::invalid_argument("UnitaryParams: angle must be finite");
    const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    Scalar r = std::fmod(x, two_pi);
    if (r < Scalar(0)) r += two_pi;
    if (r >= two_pi) r = Scalar(0);
    return r;
  }

 private:
  Scalar theta_, alpha_, beta_;
};

using UnitaryParamsd = UnitaryParams<double>;

/// The SU(2) matrix
///   [ e^{i alpha} cos(theta/2)    i e^{i beta} sin(theta/2)  ]
///   [ i e^{-i beta} sin(theta/2)  e^{-i alpha} cos(theta/2)  ].
template <typename Scalar>
Matrix2c<Scalar> unitary_matrix(const UnitaryParams<Scalar>& u) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(u.theta() / Scalar(2));
  const Scalar s = std::sin(u.theta() / Scalar(2));
  const C ea = std::polar(Scalar(1), u.alpha());
  const C eb = std::polar(Scalar(1), u.beta());
  const C i(Scalar(0), Scalar(1));
  Matrix2c<Scalar> m;
  m << ea * c, i * eb * s, i * std::conj(eb) * s, std::conj(ea) * c;
  return m;
}

template <typename Scalar>
Matrix4c<Scalar> tensor_product(const Matrix2c<Scalar>& a, const Matrix2c<Scalar>& b) {
  Matrix4c<Scalar> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// The maximally entangled start state (|00> + i|11>)/sqrt(2).
template <typename Scalar = double>
TwoQubitState<Scalar> initial_state() {
  using C = std::complex<Scalar>;
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  TwoQubitState<Scalar> psi;
  psi << C(r, 0), C(0, 0), C(0, 0), C(0, r);
  return psi;
}

/// Measurement basis state obtained by applying C_k (x) C_l to the start
/// state, where C_0 = I and C_1 = [[0,i],[i,0]].  The four results are
/// pairwise orthonormal.
template <typename Scalar = double>
TwoQubitState<Scalar> basis_state(int k, int l) {
  if ((k != 0 && k != 1) || (l != 0 && l != 1))
    throw std::invalid_argument("basis_state: indices must be 0 or 1");
  using C = std::complex<Scalar>;
  const C i(Scalar(0), Scalar(1));
  Matrix2c<Scalar> ops[2];
  ops[0] = Matrix2c<Scalar>::Identity();
  ops[1] << C(0, 0), i, i, C(0, 0);
  return tensor_product(ops[k], ops[l]) * initial_state<Scalar>();
}

/// Columns are the basis states in index order 00, 01, 10, 11.
template <typename Scalar = double>
Matrix4c<Scalar> entangled_basis() {
  Matrix4c<Scalar> basis;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) basis.col(2 * k + l) = basis_state<Scalar>(k, l);
  return basis;
}

/// Projections of the evolved state onto the measurement basis; index
/// (k,l) maps to component 2k+l.
template <typename Scalar = double>
struct AmplitudeVector {
  Eigen::Matrix<std::complex<Scalar>, 4, 1> c;

  std::complex<Scalar> operator()(int k, int l) const { return c[2 * k + l]; }

  Eigen::Matrix<Scalar, 4, 1> squared_magnitudes() const { return c.cwiseAbs2(); }

  Eigen::Matrix<Scalar, 2, 2> probabilities() const {
    Eigen::Matrix<Scalar, 2, 2> m;
    m << std::norm(c[0]), std::norm(c[1]), std::norm(c[2]), std::norm(c[3]);
    return m;
  }
};

using AmplitudeVectord = AmplitudeVector<double>;

/// Direct tensor-product evolution of the start state followed by
/// projection onto the measurement basis.  This is the module's ground
/// truth for every payoff computation.
template <typename Scalar>
AmplitudeVector<Scalar> evolve(const UnitaryParams<Scalar>& u1, const UnitaryParams<Scalar>& u2) {
  static const Matrix4c<Scalar> basis_adjoint = entangled_basis<Scalar>().adjoint();
  static const TwoQubitState<Scalar> psi0 = initial_state<Scalar>();
  const Matrix4c<Scalar> joint = tensor_product(unitary_matrix(u1), unitary_matrix(u2));
  return {basis_adjoint * (joint * psi0)};
}

/// Closed-form amplitudes.  In this basis all four inner products are
/// real trigonometric expressions; they agree with evolve to rounding.
template <typename Scalar>
AmplitudeVector<Scalar> amplitudes_closed_form(const UnitaryParams<Scalar>& u1,
                                               const UnitaryParams<Scalar>& u2) {
  const Scalar c1 = std::cos(u1.theta() / 2), s1 = std::sin(u1.theta() / 2);
  const Scalar c2 = std::cos(u2.theta() / 2), s2 = std::sin(u2.theta() / 2);
  const Scalar a1 = u1.alpha(), b1 = u1.beta();
  const Scalar a2 = u2.alpha(), b2 = u2.beta();

  AmplitudeVector<Scalar> out;
  out.c[0] = std::cos(a1 + a2) * c1 * c2 + std::sin(b1 + b2) * s1 * s2;
  out.c[1] = std::cos(a1 - b2) * c1 * s2 + std::sin(a2 - b1) * s1 * c2;
  out.c[2] = std::cos(a2 - b1) * s1 * c2 + std::sin(a1 - b2) * c1 * s2;
  out.c[3] = std::cos(b1 + b2) * s1 * s2 - std::sin(a1 + a2) * c1 * c2;
  return out;
}

/// Expected payoffs (player 1, player 2): measurement probabilities
/// weighted by the classical payoff entries.
template <typename Scalar>
std::pair<Scalar, Scalar> quantum_payoff(const BimatrixGame<Scalar>& g,
                                         const UnitaryParams<Scalar>& u1,
                                         const UnitaryParams<Scalar>& u2) {
  const Eigen::Matrix<Scalar, 2, 2> probs = evolve(u1, u2).probabilities();
  return {g.row_payoffs().cwiseProduct(probs).sum(), g.col_payoffs().cwiseProduct(probs).sum()};
}

template <typename Scalar>
std::pair<Scalar, Scalar> quantum_payoff(const SymmetricGame<Scalar>& g,
                                         const UnitaryParams<Scalar>& u1,
                                         const UnitaryParams<Scalar>& u2) {
  return quantum_payoff(g.to_bimatrix(), u1, u2);
}

/// Payoff when both players apply the same strategy; equal for the two
/// players in a symmetric game.
template <typename Scalar>
Scalar quantum_diagonal_payoff(const SymmetricGame<Scalar>& g, const UnitaryParams<Scalar>& u) {
  return quantum_payoff(g, u, u).first;
}

enum class QuantumBranch {
  BetterDiagonal,  // all weight on the better diagonal outcome, payoff max(a00,a11)
  CrossAverage,    // weight split across the cross outcomes, payoff (a01+a10)/2
};

inline const char* to_string(QuantumBranch b) {
  switch (b) {
    case QuantumBranch::BetterDiagonal: return "better-diagonal";
    case QuantumBranch::CrossAverage: return "cross-average";
  }
  return "?";
}

template <typename Scalar = double>
struct QuantumSkeResult {
  Scalar payoff;
  UnitaryParams<Scalar> witness;  // canonical strategy attaining the payoff
  QuantumBranch branch;
};

using QuantumSkeResultd = QuantumSkeResult<double>;

/// Closed-form quantum simple Kantian equilibrium payoff: max(a00,a11)
/// when the cross payoffs do not beat the better diagonal outcome, and
/// (a01+a10)/2 otherwise.  The witness is a fixed canonical strategy for
/// each branch.
template <typename Scalar>
QuantumSkeResult<Scalar> quantum_ske(const SymmetricGame<Scalar>& g,
                                     Scalar branch_tol = Scalar(1e-9)) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar diag_max = std::max(g.a00(), g.a11());
  if (g.cross_sum() - Scalar(2) * diag_max <= branch_tol) {
    const UnitaryParams<Scalar> witness = g.a00() >= g.a11()
                                              ? UnitaryParams<Scalar>(0, pi / 2, 0)
                                              : UnitaryParams<Scalar>(pi, 0, 0);
    return {diag_max, witness, QuantumBranch::BetterDiagonal};
  }
  return {g.cross_sum() / Scalar(2), UnitaryParams<Scalar>(pi / 2, pi / 4, 0),
          QuantumBranch::CrossAverage};
}

template <typename Scalar = double>
struct UnitaryMaximum {
  UnitaryParams<Scalar> params;
  Scalar value;
};

/// Derivative-free maximization of an objective over SU(2) parameters:
/// coarse grid over [0,pi] x [0,2pi)^2, then Nelder-Mead refinement from
/// the best five grid points.  Deterministic; grid argmax ties break
/// lexicographically on (theta, alpha, beta).
template <typename Scalar, typename F>
UnitaryMaximum<Scalar> maximize_over_unitaries(F&& objective, int grid_per_dim = 16,
                                               Scalar refine_tol = Scalar(1e-9)) {
  if (grid_per_dim < 8)
    throw std::invalid_argument("maximize_over_unitaries: need >= 8 grid points per dimension");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

  auto clamp_wrap = [pi](const Vec3& x) {
    return UnitaryParams<Scalar>(std::clamp(x[0], Scalar(0), pi),
                                 UnitaryParams<Scalar>::wrap_angle(x[1]),
                                 UnitaryParams<Scalar>::wrap_angle(x[2]));
  };
  auto eval = [&](const Vec3& x) { return objective(clamp_wrap(x)); };

  const Scalar theta_step = pi / Scalar(grid_per_dim - 1);
  const Scalar angle_step = Scalar(2) * pi / Scalar(grid_per_dim);

  struct Seed {
    Vec3 x;
    Scalar value;
  };
  std::vector<Seed> seeds;
  seeds.reserve(static_cast<std::size_t>(grid_per_dim) * grid_per_dim * grid_per_dim);
  for (int i = 0; i < grid_per_dim; ++i)
    for (int j = 0; j < grid_per_dim; ++j)
      for (int k = 0; k < grid_per_dim; ++k) {
        const Vec3 x(Scalar(i) * theta_step, Scalar(j) * angle_step, Scalar(k) * angle_step);
        seeds.push_back({x, eval(x)});
      }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Seed& a, const Seed& b) { return a.value > b.value; });

  const Vec3 step(theta_step / 2, angle_step / 2, angle_step / 2);
  Vec3 best_x = seeds.front().x;
  Scalar best_value = seeds.front().value;
  const std::size_t n_starts = std::min<std::size_t>(5, seeds.size());
  for (std::size_t k = 0; k < n_starts; ++k) {
    const auto result = nelder_mead_maximize<Scalar, 3>(eval, seeds[k].x, step, refine_tol);
    if (result.value > best_value) {
      best_x = result.x;
      best_value = result.value;
    }
  }
  return {clamp_wrap(best_x), best_value};
}

/// Numerical verification route for the closed-form quantum payoff.
template <typename Scalar>
UnitaryMaximum<Scalar> optimize_diagonal(const SymmetricGame<Scalar>& g, int grid_per_dim = 16,
                                         Scalar refine_tol = Scalar(1e-9)) {
  return maximize_over_unitaries<Scalar>(
      [&](const UnitaryParams<Scalar>& u) { return quantum_diagonal_payoff(g, u); }, grid_per_dim,
      refine_tol);
}

/// The strategy U(2*arccos(sqrt(p)), 0, 0) reproduces the classical mixed
/// strategy (p, 1-p): its measurement probabilities factor into the
/// product distribution, so this equals the classical diagonal payoff.
template <typename Scalar>
Scalar classical_embedding(const SymmetricGame<Scalar>& g, Scalar p) {
  if (!(p >= Scalar(0) && p <= Scalar(1)))
    throw std::invalid_argument("classical_embedding: p must lie in [0,1]");
  const Scalar theta = Scalar(2) * std::acos(std::sqrt(p));
  return quantum_diagonal_payoff(g, UnitaryParams<Scalar>(theta, Scalar(0), Scalar(0)));
}

}  // namespace ske

#endif  // SKE_EWL_HPP
