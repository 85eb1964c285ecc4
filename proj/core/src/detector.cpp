/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/detector.hpp"

#include <algorithm>
#include <cmath>

#include "frod/error.hpp"
#include "frod/parallel.hpp"

namespace frod {
namespace {

void check_split(const MixedTable& table, std::span<const ObjectId> labeled,
                 std::span<const ObjectId> unlabeled) {
  std::vector<char> seen(table.size(), 0);
  for (auto ids : {labeled, unlabeled}) {
    for (ObjectId o : ids) {
      if (o >= table.size()) throw Error(ErrorKind::Index, "object id out of range");
      if (seen[o]) throw Error(ErrorKind::Param, "labeled and unlabeled ids overlap");
      seen[o] = 1;
    }
  }
  if (unlabeled.size() < 2) {
    throw Error(ErrorKind::Param, "detection needs at least 2 unlabeled objects");
  }
  if (!table.is_normalized()) {
    throw Error(ErrorKind::Param, "table must be normalized before detection");
  }
}

std::vector<double> all_factors(const FuzzyRelation& rel) {
  const EntropyState state(rel);
  std::vector<double> of(state.size());
  for (std::size_t i = 0; i < of.size(); ++i) of[i] = outlier_factor(state, i);
  return of;
}

AttributeEvidence attribute_evidence(const MixedTable& table, AttributeId attribute,
                                     std::span<const ObjectId> labeled,
                                     std::span<const ObjectId> unlabeled,
                                     const ClassIndicators& classes, double delta,
                                     LabeledScoring labeled_scoring) {
  AttributeEvidence ev;
  ev.attribute_id = attribute;
  ev.accuracies =
      class_accuracies(relation_for_attribute(table, attribute, labeled, delta), classes);
  ev.unlabeled_factors = all_factors(relation_for_attribute(table, attribute, unlabeled, delta));

  ev.labeled_factors.reserve(labeled.size());
  std::vector<ObjectId> universe(unlabeled.begin(), unlabeled.end());
  if (labeled_scoring == LabeledScoring::AppendToUnlabeled) {
    universe.push_back(0);
    for (ObjectId o : labeled) {
      universe.back() = o;
      const EntropyState state(relation_for_attribute(table, attribute, universe, delta));
      ev.labeled_factors.push_back(outlier_factor(state, universe.size() - 1));
    }
  } else {
    universe.insert(universe.end(), labeled.begin(), labeled.end());
    const EntropyState state(relation_for_attribute(table, attribute, universe, delta));
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      ev.labeled_factors.push_back(outlier_factor(state, unlabeled.size() + i));
    }
  }
  return ev;
}

}  // namespace

void FrodConfig::validate() const {
  if (!(delta > 0.0)) throw Error(ErrorKind::Param, "delta must be positive");
  if (!(beta > 0.0)) throw Error(ErrorKind::Param, "beta must be positive");
  if (threshold_override && !std::isfinite(*threshold_override)) {
    throw Error(ErrorKind::Param, "threshold override must be finite");
  }
}

double outlier_factor(const EntropyState& state, std::size_t i) {
  if (i >= state.size()) throw Error(ErrorKind::Index, "object index out of range");
  const double k = static_cast<double>(state.size());
  const double weight = std::sqrt(state.cardinalities()[i] / k);
  const double fre =
      state.entropy() == 0.0 ? 1.0 + state.lambda() : fuzzy_relative_entropy(state, i);
  return weight * fre;
}

double outlier_degree(std::span<const double> gammas, std::span<const double> factors) {
  if (gammas.empty() || gammas.size() != factors.size()) {
    throw Error(ErrorKind::AttributeMismatch,
                "gamma and outlier-factor lists must cover the same attributes");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < gammas.size(); ++k) sum += gammas[k] * factors[k];
  return 1.0 - sum / static_cast<double>(gammas.size());
}

double adaptive_threshold(std::span<const double> normal_scores) {
  if (normal_scores.empty()) {
    throw Error(ErrorKind::EmptyNormals, "no labeled normal objects to set the threshold");
  }
  return *std::max_element(normal_scores.begin(), normal_scores.end());
}

Evidence collect_evidence(const MixedTable& table, std::span<const ObjectId> labeled,
                          std::span<const ObjectId> unlabeled, double delta,
                          LabeledScoring labeled_scoring) {
  if (!(delta > 0.0)) throw Error(ErrorKind::Param, "delta must be positive");
  check_split(table, labeled, unlabeled);
  if (table.attribute_count() == 0) {
    throw Error(ErrorKind::AttributeMismatch, "table has no conditional attributes");
  }
  const ClassIndicators classes = class_indicators(table, labeled);

  Evidence ev;
  ev.labeled.assign(labeled.begin(), labeled.end());
  ev.unlabeled.assign(unlabeled.begin(), unlabeled.end());
  for (ObjectId o : labeled) ev.labeled_labels.push_back(table.labels()[o]);
  ev.delta = delta;
  ev.attributes.resize(table.attribute_count());
  parallel_for(table.attribute_count(), [&](std::size_t a) {
    ev.attributes[a] =
        attribute_evidence(table, a, labeled, unlabeled, classes, delta, labeled_scoring);
  });
  return ev;
}

std::vector<ObjectId> DetectionResult::outliers() const {
  std::vector<ObjectId> out;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (predictions[i]) out.push_back(objects[i]);
  }
  return out;
}

DetectionResult score_evidence(const Evidence& evidence, double beta,
                               std::optional<double> threshold_override) {
  if (!(beta > 0.0)) throw Error(ErrorKind::Param, "beta must be positive");
  const std::size_t m = evidence.attributes.size();
  std::vector<double> gammas(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& acc = evidence.attributes[a].accuracies;
    gammas[a] = acc.normal + beta * acc.outlier;
  }

  auto degrees = [&](std::size_t count, auto factors_of) {
    std::vector<double> scores(count);
    std::vector<double> column(m);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t a = 0; a < m; ++a) column[a] = factors_of(evidence.attributes[a])[i];
      scores[i] = outlier_degree(gammas, column);
    }
    return scores;
  };

  DetectionResult result;
  result.objects = evidence.unlabeled;
  result.scores = degrees(evidence.unlabeled.size(),
                          [](const AttributeEvidence& a) -> const std::vector<double>& {
                            return a.unlabeled_factors;
                          });
  result.labeled_objects = evidence.labeled;
  result.labeled_scores = degrees(evidence.labeled.size(),
                                  [](const AttributeEvidence& a) -> const std::vector<double>& {
                                    return a.labeled_factors;
                                  });

  if (threshold_override) {
    result.threshold = *threshold_override;
  } else {
    std::vector<double> normal_scores;
    for (std::size_t i = 0; i < evidence.labeled.size(); ++i) {
      if (evidence.labeled_labels[i] == Label::Normal) {
        normal_scores.push_back(result.labeled_scores[i]);
      }
    }
    result.threshold = adaptive_threshold(normal_scores);
  }

  result.predictions.resize(result.scores.size());
  for (std::size_t i = 0; i < result.scores.size(); ++i) {
    result.predictions[i] = result.scores[i] > result.threshold;
  }

  result.per_attribute.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    result.per_attribute.push_back(
        {evidence.attributes[a].attribute_id, gammas[a], evidence.attributes[a].unlabeled_factors});
  }
  return result;
}

DetectionResult detect(const MixedTable& table, std::span<const ObjectId> labeled,
                       std::span<const ObjectId> unlabeled, const FrodConfig& config) {
  config.validate();
  const Evidence ev =
      collect_evidence(table, labeled, unlabeled, config.delta, config.labeled_scoring);
  return score_evidence(ev, config.beta, config.threshold_override);
}

DetectionResult detect(const MixedTable& table, const FrodConfig& config) {
  std::vector<ObjectId> labeled;
  std::vector<ObjectId> unlabeled;
  for (std::size_t i = 0; i < table.size(); ++i) {
    (table.labels()[i] == Label::Unlabeled ? unlabeled : labeled).push_back(i);
  }
  return detect(table, labeled, unlabeled, config);
}

}  // namespace frod
