#include "chebext/problem.hpp"

#include <algorithm>
#include <string>

#include "chebext/errors.hpp"

namespace chebext {

std::string_view to_string(ProblemKind kind) noexcept {
  return kind == ProblemKind::first ? "first" : "second";
}

ProblemKind parse_kind(std::string_view text) {
  if (text == "first") return ProblemKind::first;
  if (text == "second") return ProblemKind::second;
  throw InvalidInput("unknown problem kind '" + std::string(text) + "'");
}

ProblemSpec::ProblemSpec(ProblemKind kind, std::vector<int> indices, double b)
    : kind_(kind), indices_(std::move(indices)), b_(b) {
  if (indices_.empty()) throw InvalidInput("index set is empty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw InvalidInput("index set contains duplicates");
  const int lowest = kind_ == ProblemKind::first ? 1 : 0;
  if (indices_.front() < lowest)
    throw InvalidInput("index " + std::to_string(indices_.front()) + " below " +
                       std::to_string(lowest) + " for the " + std::string(to_string(kind_)) +
                       " kind");
  if (indices_.back() > kMaxDegree) throw InvalidInput("largest index exceeds 30");
  if (!(b_ > 0.0 && b_ <= 10.0)) throw InvalidInput("b must lie in (0, 10]");
}

bool ProblemSpec::contains(int j) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

bool ProblemSpec::is_full() const noexcept {
  const int lowest = kind_ == ProblemKind::first ? 1 : 0;
  return indices_.front() == lowest &&
         static_cast<int>(indices_.size()) == n() - lowest + 1;
}

bool ProblemSpec::is_pair() const noexcept {
  return indices_.size() == 2 && indices_[0] == n() - 1;
}

double objective_of(const std::map<int, Polynomial>& polys) {
  double sum = 0.0;
  for (const auto& [j, p] : polys) {
    const double m = p.coeff(static_cast<std::size_t>(j));
    sum += m * m;
  }
  return sum;
}

}  // namespace chebext
