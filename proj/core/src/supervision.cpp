/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/supervision.hpp"

#include "frod/error.hpp"

namespace frod {

ClassIndicators class_indicators(std::span<const ObjectId> universe,
                                 std::span<const Label> labels) {
  if (universe.size() != labels.size()) {
    throw Error(ErrorKind::Param, "labels and universe sizes differ");
  }
  std::vector<double> normal(labels.size());
  std::vector<double> outlier(labels.size());
  std::size_t n_normal = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == Label::Unlabeled) {
      throw Error(ErrorKind::Label, "labeled universe contains an unlabeled object");
    }
    const bool is_normal = labels[i] == Label::Normal;
    normal[i] = is_normal ? 1.0 : 0.0;
    outlier[i] = is_normal ? 0.0 : 1.0;
    n_normal += is_normal;
  }
  if (n_normal == 0 || n_normal == labels.size()) {
    throw Error(ErrorKind::DegenerateLabels,
                "labeled objects must include at least one normal and one outlier");
  }
  std::vector<ObjectId> ids(universe.begin(), universe.end());
  return {FuzzySet(ids, std::move(normal)), FuzzySet(ids, std::move(outlier))};
}

ClassIndicators class_indicators(const MixedTable& table, std::span<const ObjectId> labeled) {
  std::vector<Label> labels;
  labels.reserve(labeled.size());
  for (ObjectId o : labeled) {
    if (o >= table.size()) throw Error(ErrorKind::Index, "labeled id out of range");
    labels.push_back(table.labels()[o]);
  }
  return class_indicators(labeled, labels);
}

ClassAccuracies class_accuracies(const FuzzyRelation& rel, const ClassIndicators& classes) {
  return {approximation_accuracy(rel, classes.normal),
          approximation_accuracy(rel, classes.outlier)};
}

AttributeWeight attribute_classification_accuracy(const FuzzyRelation& rel,
                                                  const ClassIndicators& classes, double beta) {
  if (!(beta > 0.0)) throw Error(ErrorKind::Param, "beta must be positive");
  const auto acc = class_accuracies(rel, classes);
  const AttributeId id = rel.attribute_ids().size() == 1 ? rel.attribute_ids().front() : 0;
  return {id, acc.normal + beta * acc.outlier};
}

}  // namespace frod
