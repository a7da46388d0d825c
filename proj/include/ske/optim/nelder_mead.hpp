#ifndef SKE_OPTIM_NELDER_MEAD_HPP
#define SKE_OPTIM_NELDER_MEAD_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <numeric>

namespace ske {

template <typename Scalar, int Dim>
struct NelderMeadResult {
  Eigen::Matrix<Scalar, Dim, 1> x;
  Scalar value;
  int iterations;
};

/// Nelder-Mead simplex ascent on a fixed-dimension domain.  The initial
/// simplex places one vertex at start and one at start + step[k]*e_k per
/// coordinate.  Stops when every vertex lies within diameter_tol of the
/// best one (infinity norm) or after max_iterations.  Fully deterministic.
template <typename Scalar, int Dim, typename F>
NelderMeadResult<Scalar, Dim> nelder_mead_maximize(F&& f,
                                                   const Eigen::Matrix<Scalar, Dim, 1>& start,
                                                   const Eigen::Matrix<Scalar, Dim, 1>& step,
                                                   Scalar diameter_tol,
                                                   int max_iterations = 500) {
  using Vec = Eigen::Matrix<Scalar, Dim, 1>;
  constexpr int n_vertices = Dim + 1;
  const Scalar reflect = Scalar(1), expand = Scalar(2), contract = Scalar(0.5), shrink = Scalar(0.5);

  std::array<Vec, n_vertices> xs;
  std::array<Scalar, n_vertices> fs;
  xs[0] = start;
  for (int k = 0; k < Dim; ++k) {
    xs[k + 1] = start;
    xs[k + 1][k] += step[k];
  }
  for (int k = 0; k < n_vertices; ++k) fs[k] = f(xs[k]);

  std::array<int, n_vertices> order;
  auto sort_desc = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return fs[i] > fs[j]; });
  };

  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    sort_desc();
    const int best = order[0], worst = order[n_vertices - 1], second_worst = order[n_vertices - 2];

    Scalar diameter = Scalar(0);
    for (int k = 0; k < n_vertices; ++k)
      diameter = std::max(diameter, (xs[k] - xs[best]).template lpNorm<Eigen::Infinity>());
    if (diameter < diameter_tol) break;

    Vec centroid = Vec::Zero();
    for (int k = 0; k < n_vertices; ++k)
      if (k != worst) centroid += xs[k];
    centroid /= Scalar(Dim);

    const Vec xr = centroid + reflect * (centroid - xs[worst]);
    const Scalar fr = f(xr);

    if (fr > fs[best]) {
      const Vec xe = centroid + expand * (xr - centroid);
      const Scalar fe = f(xe);
      if (fe > fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr > fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr > fs[worst];
      const Vec base = outside ? xr : xs[worst];
      const Vec xc = centroid + contract * (base - centroid);
      const Scalar fc = f(xc);
      if (fc > (outside ? fr : fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (int k = 0; k < n_vertices; ++k) {
          if (k == best) continue;
          xs[k] = xs[best] + shrink * (xs[k] - xs[best]);
          fs[k] = f(xs[k]);
        }
      }
    }
  }

  sort_desc();
  return {xs[order[0]], fs[order[0]], iter};
}

}  // namespace ske

#endif  // SKE_OPTIM_NELDER_MEAD_HPP
