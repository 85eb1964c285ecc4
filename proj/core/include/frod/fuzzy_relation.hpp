/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "frod/dataset.hpp"

namespace frod {

/// Symmetric, reflexive k x k similarity matrix over an ordered object subset,
/// stored row-major.
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  /// Takes ownership of a row-major k x k matrix. Throws Error(Param) if the
  /// matrix is not square over `subset`, not reflexive, not symmetric, or has
  /// entries outside [0,1].
  FuzzyRelation(std::vector<ObjectId> subset, std::vector<double> matrix,
                std::vector<AttributeId> attribute_ids = {});

  static FuzzyRelation identity(std::vector<ObjectId> subset);
  static FuzzyRelation all_ones(std::vector<ObjectId> subset);

  std::size_t size() const noexcept { return subset_.size(); }
  const std::vector<ObjectId>& subset() const noexcept { return subset_; }
  const std::vector<AttributeId>& attribute_ids() const noexcept { return attribute_ids_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return matrix_[i * subset_.size() + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(matrix_).subspan(i * subset_.size(), subset_.size());
  }
  std::span<const double> data() const noexcept { return matrix_; }

 private:
  struct Unchecked {};
  FuzzyRelation(Unchecked, std::vector<ObjectId> subset, std::vector<double> matrix,
                std::vector<AttributeId> attribute_ids);

  friend FuzzyRelation relation_for_attribute(const MixedTable&, AttributeId,
                                              std::span<const ObjectId>, double);
  friend FuzzyRelation relation_for_set(std::span<const FuzzyRelation>);

  std::vector<ObjectId> subset_;
  std::vector<double> matrix_;
  std::vector<AttributeId> attribute_ids_;
};

struct FuzzyRadius {
  AttributeId attribute_id = 0;
  double value = 0.0;
};

/// delta times the mean absolute difference over all k^2 ordered pairs,
/// diagonal included. Throws Error(Param) for delta <= 0 or k < 2.
double fuzzy_radius(std::span<const double> values, double delta);

/// Radius of a numerical attribute over `subset` (normalized values).
FuzzyRadius fuzzy_radius(const MixedTable& table, AttributeId attribute,
                         std::span<const ObjectId> subset, double delta);

/// Similarity relation of one attribute over `subset`. Nominal: 1 on equal
/// values, else 0. Numerical: 1 - d when d <= radius, else 0, with the
/// radius computed over this subset. Needs a normalized table.
FuzzyRelation relation_for_attribute(const MixedTable& table, AttributeId attribute,
                                     std::span<const ObjectId> subset, double delta);

/// Elementwise minimum of relations over the same subset.
/// Throws Error(SubsetMismatch) or Error(Param) when empty.
FuzzyRelation relation_for_set(std::span<const FuzzyRelation> relations);

/// Debug dump: k as little-endian uint64, then k*k little-endian doubles.
void write_relation(std::ostream& out, const FuzzyRelation& relation);
/// Inverse of write_relation; the subset is 0..k-1.
FuzzyRelation read_relation(std::istream& in);

}  // namespace frod
