/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <vector>

#include "frod/dataset.hpp"
#include "frod/fuzzy_relation.hpp"
#include "frod/rough_core.hpp"

namespace frod {

/// Crisp normal/outlier indicators over the labeled universe.
struct ClassIndicators {
  FuzzySet normal;
  FuzzySet outlier;
};

/// Builds the two crisp classes. `labels[i]` belongs to `universe[i]` and
/// must be Normal or Outlier. Throws Error(DegenerateLabels) if either class
/// is empty, Error(Label) on an Unlabeled entry.
ClassIndicators class_indicators(std::span<const ObjectId> universe,
                                 std::span<const Label> labels);
/// Indicators for `labeled` ids read from the table's labels.
ClassIndicators class_indicators(const MixedTable& table, std::span<const ObjectId> labeled);

/// The two per-class approximation accuracies; gamma(beta) = normal + beta * outlier.
struct ClassAccuracies {
  double normal = 0.0;
  double outlier = 0.0;
};

struct AttributeWeight {
  AttributeId attribute_id = 0;
  double gamma = 0.0;
};

ClassAccuracies class_accuracies(const FuzzyRelation& rel, const ClassIndicators& classes);

/// gamma = acc(normal) + beta * acc(outlier). Throws Error(Param) for beta <= 0.
AttributeWeight attribute_classification_accuracy(const FuzzyRelation& rel,
                                                  const ClassIndicators& classes, double beta);

}  // namespace frod
