/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frod/dataset.hpp"
#include "frod/fuzzy_relation.hpp"

namespace frod {

/// Membership vector over an ordered object universe.
class FuzzySet {
 public:
  FuzzySet() = default;
  /// Throws Error(Param) on a size mismatch or a membership outside [0,1].
  FuzzySet(std::vector<ObjectId> universe, std::vector<double> membership);

  static FuzzySet constant(std::vector<ObjectId> universe, double value);

  std::size_t size() const noexcept { return membership_.size(); }
  const std::vector<ObjectId>& universe() const noexcept { return universe_; }
  std::span<const double> membership() const noexcept { return membership_; }
  double operator[](std::size_t i) const noexcept { return membership_[i]; }

  /// Sum of memberships, accumulated in universe order.
  double cardinality() const noexcept;

  FuzzySet complement() const;

 private:
  std::vector<ObjectId> universe_;
  std::vector<double> membership_;
};

/// Pointwise max.
FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b);

/// lower(x)(o_i) = min_o max(1 - r(o_i,o), x(o)).
FuzzySet lower_approximation(const FuzzyRelation& rel, const FuzzySet& x);
/// upper(x)(o_i) = max_o min(r(o_i,o), x(o)).
FuzzySet upper_approximation(const FuzzyRelation& rel, const FuzzySet& x);

/// |lower(x)| / |upper(x)|; Error(DegenerateSet) when |upper(x)| = 0.
double approximation_accuracy(const FuzzyRelation& rel, const FuzzySet& x);

/// Row i of the relation as a fuzzy set over the relation's subset.
FuzzySet similarity_class(const FuzzyRelation& rel, std::size_t i);

/// |union of lower approximations| / sum of |upper approximations| over the
/// decision classes.
double decision_faa(const FuzzyRelation& rel, std::span<const FuzzySet> classes);

}  // namespace frod
