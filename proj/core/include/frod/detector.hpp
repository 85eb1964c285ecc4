/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frod/dataset.hpp"
#include "frod/entropy.hpp"
#include "frod/supervision.hpp"

namespace frod {

/// How labeled objects get an outlier degree (needed for the threshold).
enum class LabeledScoring {
  /// Each labeled object is appended alone to the unlabeled universe and
  /// scored there; the unlabeled scores are unaffected.
  AppendToUnlabeled,
  /// One universe over unlabeled and labeled objects together; only the
  /// labeled objects' scores are taken from it.
  FullUniverse,
};

struct FrodConfig {
  double delta = 1.0;
  double beta = 1.0;
  std::optional<double> threshold_override;
  LabeledScoring labeled_scoring = LabeledScoring::AppendToUnlabeled;

  /// Throws Error(Param) unless delta > 0 and beta > 0.
  void validate() const;
};

/// OF = sqrt(|[o_i]| / k) * FRE(o_i). When FE = 0 every object is
/// indistinguishable and FRE is taken as 1 + lambda.
double outlier_factor(const EntropyState& state, std::size_t i);

/// OD = 1 - (1/m) * sum_k gamma_k * OF_k. Throws Error(AttributeMismatch) on
/// differing lengths or m = 0.
double outlier_degree(std::span<const double> gammas, std::span<const double> factors);

/// Largest outlier degree among labeled normal objects.
/// Throws Error(EmptyNormals) for an empty span.
double adaptive_threshold(std::span<const double> normal_scores);

/// Per-attribute quantities that do not depend on beta.
struct AttributeEvidence {
  AttributeId attribute_id = 0;
  ClassAccuracies accuracies;
  std::vector<double> unlabeled_factors;  // in Evidence::unlabeled order
  std::vector<double> labeled_factors;    // in Evidence::labeled order
};

/// Everything detection needs for one (split, delta). Scoring it for any
/// beta is O(m * n).
struct Evidence {
  std::vector<ObjectId> labeled;
  std::vector<Label> labeled_labels;
  std::vector<ObjectId> unlabeled;
  double delta = 1.0;
  std::vector<AttributeEvidence> attributes;
};

/// Runs the per-attribute stages concurrently (one worker per attribute).
/// Needs a normalized table, disjoint id lists, >= 2 unlabeled objects and
/// both classes among the labeled ones.
Evidence collect_evidence(const MixedTable& table, std::span<const ObjectId> labeled,
                          std::span<const ObjectId> unlabeled, double delta,
                          LabeledScoring labeled_scoring = LabeledScoring::AppendToUnlabeled);

struct AttributeContribution {
  AttributeId attribute_id = 0;
  double gamma = 0.0;
  std::vector<double> factors;  // per unlabeled object
};

struct DetectionResult {
  std::vector<ObjectId> objects;  // unlabeled ids, ascending
  std::vector<double> scores;
  std::vector<bool> predictions;  // scores[i] > threshold
  double threshold = 0.0;
  std::vector<ObjectId> labeled_objects;
  std::vector<double> labeled_scores;
  std::vector<AttributeContribution> per_attribute;

  std::vector<ObjectId> outliers() const;
};

/// Combines evidence with beta: gammas, outlier degrees, threshold (from the
/// labeled normals unless overridden), predictions.
DetectionResult score_evidence(const Evidence& evidence, double beta,
                               std::optional<double> threshold_override = std::nullopt);

/// Full pipeline for one configuration.
DetectionResult detect(const MixedTable& table, std::span<const ObjectId> labeled,
                       std::span<const ObjectId> unlabeled, const FrodConfig& config);

/// Convenience: labeled = objects with a Normal/Outlier label in the table,
/// unlabeled = the rest.
DetectionResult detect(const MixedTable& table, const FrodConfig& config);

}  // namespace frod
