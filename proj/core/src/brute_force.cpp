#include "chebext/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "chebext/errors.hpp"
#include "chebext/nelder_mead.hpp"
#include "chebext/supnorm.hpp"

namespace chebext {

namespace {

constexpr int kMaxOracleDegree = 5;

// Flat coefficient vector <-> family of polynomials with degrees from I.
class CoefficientLayout {
 public:
  explicit CoefficientLayout(const std::vector<int>& indices) : indices_(indices) {
    for (int j : indices_) {
      offsets_.push_back(dim_);
      dim_ += static_cast<std::size_t>(j) + 1;
    }
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  void unpack(const std::vector<double>& x, std::vector<Polynomial>& out) const {
    out.clear();
    for (std::size_t b = 0; b < indices_.size(); ++b) {
      const auto first = x.begin() + static_cast<std::ptrdiff_t>(offsets_[b]);
      out.emplace_back(std::vector<double>(first, first + indices_[b] + 1));
    }
  }

  [[nodiscard]] double leading_sum(const std::vector<double>& x) const noexcept {
    double s = 0.0;
    for (std::size_t b = 0; b < indices_.size(); ++b) {
      const double m = x[offsets_[b] + static_cast<std::size_t>(indices_[b])];
      s += m * m;
    }
    return s;
  }

 private:
  std::vector<int> indices_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

struct RestartOutcome {
  double value = 0.0;
  std::vector<double> x;
  std::size_t evals = 0;
};

// One restart: a random start in the unit ball (or `start` when polishing),
// then repeated Nelder-Mead runs on fresh simplices around the incumbent.
RestartOutcome run_restart(const ProblemSpec& spec, const CoefficientLayout& layout,
                           const SupNormEvaluator& sup, std::size_t budget, std::uint64_t seed,
                           std::size_t restart, const std::vector<double>* start = nullptr,
                           double initial_step = 0.5) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const std::size_t dim = layout.dim();
  std::vector<Polynomial> scratch;
  auto neg_ratio = [&](const std::vector<double>& x) {
    layout.unpack(x, scratch);
    const double denom = sup(scratch).sup;
    if (!(denom > 0.0)) return 0.0;
    return -layout.leading_sum(x) / denom;
  };

  // Uniform point in the unit ball, scaled by b^{-n}.
  const double scale = std::pow(spec.b(), -spec.n());
  std::vector<double> x0(dim);
  double norm = 0.0;
  for (auto& v : x0) {
    v = gauss(rng);
    norm += v * v;
  }
  const double radius = std::pow(unif(rng), 1.0 / static_cast<double>(dim));
  for (auto& v : x0) v *= scale * radius / std::sqrt(norm);
  if (start != nullptr) x0 = *start;

  RestartOutcome out;
  out.x = x0;
  out.value = -neg_ratio(x0);
  out.evals = 1;

  double step = initial_step;
  while (out.evals + dim + 2 < budget) {
    // The ratio is scale-invariant; keep the iterate on the unit sphere.
    double len = 0.0;
    for (double v : out.x) len += v * v;
    len = std::sqrt(len);
    if (!(len > 0.0)) break;
    std::vector<double> centre(out.x);
    for (auto& v : centre) v /= len;

    std::vector<std::vector<double>> simplex(dim + 1, centre);
    for (std::size_t k = 0; k < dim; ++k) simplex[k + 1][k] += step * (gauss(rng) >= 0 ? 1.0 : -1.0);

    NelderMeadOptions nm;
    nm.max_evals = budget - out.evals;
    const NelderMeadResult r = nelder_mead(neg_ratio, std::move(simplex), nm);
    out.evals += r.evals;

    const double improvement = -r.value - out.value;
    if (-r.value > out.value) {
      out.value = -r.value;
      out.x = r.x;
    }
    // Fresh, smaller simplices around the incumbent escape kinks of the sup.
    step = improvement > 1e-12 * std::max(1.0, out.value) ? 0.5 * step + 1e-3 : step * 0.1;
    if (step < 1e-9) step = initial_step;
  }
  return out;
}

}  // namespace

OracleResult brute_force_max(const ProblemSpec& spec, std::size_t budget, std::uint64_t seed,
                             const BruteForceOptions& opt) {
  if (spec.n() > kMaxOracleDegree) throw InvalidInput("brute_force_max: n must be at most 5");
  if (budget < 1000) throw InvalidInput("brute_force_max: budget must be at least 1000");
  const std::size_t restarts = std::max<std::size_t>(1, opt.restarts);

  const CoefficientLayout layout(spec.indices());
  const Weight weight = spec.kind() == ProblemKind::second ? Weight::second_kind : Weight::none;
  const SupNormEvaluator sup(spec.b(), static_cast<std::size_t>(spec.n()), weight);
  // Exploration gets 40% of the budget, spread over the restarts; the rest
  // polishes the best restart.
  const std::size_t explore = budget * 2 / 5;
  const std::size_t per_restart = std::max<std::size_t>(explore / restarts, layout.dim() + 3);

  std::vector<RestartOutcome> outcomes(restarts);
  if (opt.threads <= 1) {
    for (std::size_t r = 0; r < restarts; ++r)
      outcomes[r] = run_restart(spec, layout, sup, per_restart, seed, r);
  } else {
    std::vector<std::future<void>> pending;
    for (unsigned t = 0; t < opt.threads; ++t) {
      pending.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t r = t; r < restarts; r += opt.threads)
          outcomes[r] = run_restart(spec, layout, sup, per_restart, seed, r);
      }));
    }
    for (auto& f : pending) f.get();
  }

  // Highest value wins; ties go to the lowest restart index.
  std::size_t best = 0;
  OracleResult result;
  result.seed = seed;
  for (std::size_t r = 0; r < restarts; ++r) {
    result.evaluations += outcomes[r].evals;
    if (outcomes[r].value > outcomes[best].value) best = r;
  }

  const std::size_t spent = result.evaluations;
  if (spent < budget) {
    RestartOutcome polished = run_restart(spec, layout, sup, budget - spent, seed, restarts,
                                          &outcomes[best].x, 0.05);
    result.evaluations += polished.evals;
    if (polished.value > outcomes[best].value) outcomes[best] = std::move(polished);
  }

  std::vector<Polynomial> family;
  layout.unpack(outcomes[best].x, family);
  const double scale = 1.0 / std::sqrt(sup(family).sup);
  for (std::size_t b = 0; b < family.size(); ++b)
    result.best_coeffs[spec.indices()[b]] = (scale * family[b]).with_positive_leading();
  result.best_value = objective_of(result.best_coeffs);
  return result;
}

}  // namespace chebext
