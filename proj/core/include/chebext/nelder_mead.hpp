#ifndef CHEBEXT_NELDER_MEAD_HPP
#define CHEBEXT_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace chebext {

struct NelderMeadOptions {
  std::size_t max_evals = 10000;
  /// Stop once the simplex diameter (inf-norm) falls below this.
  double xtol = 1e-11;
  /// ... and the spread of function values below this.
  double ftol = 1e-15;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evals = 0;
};

/// Minimizes f from an explicit starting simplex of dim + 1 vertices.
///
/// Uses the dimension-adaptive coefficients of Gao and Han (reflection 1,
/// expansion 1 + 2/d, contraction 3/4 - 1/(2d), shrink 1 - 1/d), which keep
/// the method from stagnating in ten-odd dimensions.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<std::vector<double>> simplex,
                             const NelderMeadOptions& opt) {
  const std::size_t dim = simplex.size() - 1;
  const double d = static_cast<double>(dim);
  // The adaptive shrink factor degenerates to 0 in one dimension.
  const double da = std::max(d, 2.0);
  const double rho = 1.0;
  const double chi = 1.0 + 2.0 / da;
  const double gamma = 0.75 - 0.5 / da;
  const double sigma = 1.0 - 1.0 / da;

  std::size_t evals = 0;
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) {
    fv[i] = f(simplex[i]);
    ++evals;
  }

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
  auto affine = [&](std::vector<double>& out, double t) {
    // out = centroid + t * (centroid - worst)
    const auto& worst = simplex[order[dim]];
    for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (centroid[k] - worst[k]);
  };

  // Worst case per iteration: reflection, expansion or contraction, plus a shrink.
  while (evals + dim + 2 <= opt.max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

    double diameter = 0.0;
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        diameter = std::max(diameter, std::abs(simplex[order[i]][k] - simplex[order[0]][k]));
    if (diameter < opt.xtol && fv[order[dim]] - fv[order[0]] <= opt.ftol) break;
    if (diameter < opt.xtol * 1e-3) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[order[i]][k];
    for (auto& c : centroid) c /= d;

    const std::size_t worst = order[dim];
    const double f_best = fv[order[0]];
    const double f_second_worst = fv[order[dim - 1]];
    const double f_worst = fv[worst];

    affine(xr, rho);
    const double fr = f(xr);
    ++evals;

    if (fr < f_best) {
      affine(xe, rho * chi);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        simplex[worst] = xe;
        fv[worst] = fe;
      } else {
        simplex[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < f_second_worst) {
      simplex[worst] = xr;
      fv[worst] = fr;
      continue;
    }

    const bool outside = fr < f_worst;
    affine(xc, outside ? rho * gamma : -gamma);
    const double fc = f(xc);
    ++evals;
    if (outside ? fc <= fr : fc < f_worst) {
      simplex[worst] = xc;
      fv[worst] = fc;
      continue;
    }

    // Shrink toward the best vertex.
    const auto& best = simplex[order[0]];
    for (std::size_t i = 1; i <= dim; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t k = 0; k < dim; ++k) v[k] = best[k] + sigma * (v[k] - best[k]);
      fv[order[i]] = f(v);
      ++evals;
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  return {simplex[best], fv[best], evals};
}

}  // namespace chebext

#endif  // CHEBEXT_NELDER_MEAD_HPP
