/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/entropy.hpp"

#include <cmath>
#include <string>

#include "frod/error.hpp"

namespace frod {
namespace {

std::vector<double> row_sums(const FuzzyRelation& rel) {
  std::vector<double> sums(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i) {
    double s = 0.0;
    for (double v : rel.row(i)) s += v;
    sums[i] = s;
  }
  return sums;
}

double entropy_of(std::span<const double> cardinalities) {
  const double k = static_cast<double>(cardinalities.size());
  double sum = 0.0;
  for (double c : cardinalities) sum += std::log2(c / k);
  // -0.0 would leak into reports as "-0"
  return sum == 0.0 ? 0.0 : -sum / k;
}

}  // namespace

double fuzzy_entropy(const FuzzyRelation& rel) { return entropy_of(row_sums(rel)); }

EntropyState::EntropyState(FuzzyRelation relation)
    : relation_(std::move(relation)),
      cardinalities_(row_sums(relation_)),
      entropy_(entropy_of(cardinalities_)),
      lambda_(1.0 / static_cast<double>(relation_.size())) {}

double EntropyState::leave_one_out_entropy(std::size_t i) const {
  const std::size_t k = size();
  if (i >= k) throw Error(ErrorKind::Index, "object index " + std::to_string(i) + " out of range");
  if (k < 2) throw Error(ErrorKind::Param, "leave-one-out entropy needs at least 2 objects");
  const double rest = static_cast<double>(k - 1);
  double sum = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == i) continue;
    sum += std::log2((cardinalities_[j] - relation_(j, i)) / rest);
  }
  return sum == 0.0 ? 0.0 : -sum / rest;
}

double fuzzy_relative_entropy(const EntropyState& state, std::size_t i) {
  const double loo = state.leave_one_out_entropy(i);
  if (state.entropy() == 0.0) {
    throw Error(ErrorKind::ZeroEntropy, "relation carries no information (FE = 0)");
  }
  return loo / state.entropy() + state.lambda();
}

}  // namespace frod
