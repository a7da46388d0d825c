#ifndef SKE_OPTIM_GOLDEN_SECTION_HPP
#define SKE_OPTIM_GOLDEN_SECTION_HPP

#include <cmath>
#include <utility>

namespace ske {

template <typename Scalar = double>
struct ScalarMaximum {
  Scalar x;
  Scalar value;
};

/// Golden-section search for the maximum of f over [lo, hi].  Shrinks the
/// bracket until it is narrower than x_tol and returns the best point seen.
/// Exact on unimodal functions; on monotone sections it converges to the
/// better endpoint.
template <typename Scalar, typename F>
ScalarMaximum<Scalar> golden_section_maximize(F&& f, Scalar lo, Scalar hi, Scalar x_tol,
                                              int max_iterations = 200) {
  const Scalar invphi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);

  Scalar c = hi - invphi * (hi - lo);
  Scalar d = lo + invphi * (hi - lo);
  Scalar fc = f(c);
  Scalar fd = f(d);

  for (int i = 0; i < max_iterations && hi - lo > x_tol; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }

  ScalarMaximum<Scalar> best{c, fc};
  if (fd > best.value) best = {d, fd};
  for (Scalar x : {lo, hi}) {
    const Scalar fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

}  // namespace ske

#endif  // SKE_OPTIM_GOLDEN_SECTION_HPP
