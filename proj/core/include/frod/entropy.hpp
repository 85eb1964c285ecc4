/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frod/fuzzy_relation.hpp"

namespace frod {

/// FE = -(1/k) * sum_i log2(|[o_i]| / k), |[o_i]| the row sum of i.
double fuzzy_entropy(const FuzzyRelation& rel);

/// Row sums and base entropy of one relation, computed once so that every
/// leave-one-out query costs O(k): removing o_i lowers each remaining row sum
/// by exactly r(j,i).
class EntropyState {
 public:
  explicit EntropyState(FuzzyRelation relation);

  std::size_t size() const noexcept { return relation_.size(); }
  const FuzzyRelation& relation() const noexcept { return relation_; }
  std::span<const double> cardinalities() const noexcept { return cardinalities_; }
  double entropy() const noexcept { return entropy_; }
  /// Smoothing term 1/k of this universe.
  double lambda() const noexcept { return lambda_; }

  /// Entropy of the universe with o_i removed. Error(Index) or Error(Param)
  /// when k < 2.
  double leave_one_out_entropy(std::size_t i) const;

 private:
  FuzzyRelation relation_;
  std::vector<double> cardinalities_;
  double entropy_ = 0.0;
  double lambda_ = 0.0;
};

/// FRE = FE_{-i} / FE + lambda. Throws Error(ZeroEntropy) when FE = 0.
double fuzzy_relative_entropy(const EntropyState& state, std::size_t i);

}  // namespace frod
