/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frod/dataset.hpp"
#include "frod/detector.hpp"

namespace frod {

/// Probability that a random positive outscores a random negative, ties
/// counting 1/2 (Mann-Whitney with average ranks).
/// Throws Error(DegenerateTruth) without both classes or on a size mismatch.
double auc(std::span<const double> scores, const std::vector<bool>& truth);

/// Mean of precision@rank over the positives, ranking by descending score
/// with ties kept in object order. Throws Error(DegenerateTruth) without a
/// positive.
double average_precision(std::span<const double> scores, const std::vector<bool>& truth);

struct Grid {
  std::vector<double> deltas;
  std::vector<double> betas;

  /// delta in 0.1..2.6 step 0.5, beta in {0.01, 0.1, 1, 10, 100}.
  static Grid standard();
  static Grid single(double delta, double beta);
};

struct GridChoice {
  double delta = 1.0;
  double beta = 1.0;
  double labeled_auc = 0.0;
};

struct TunedDetection {
  GridChoice choice;
  DetectionResult result;
};

/// Scores the labeled objects for every grid point and keeps the one with
/// the best labeled AUC. Ties go to the point closest to (delta=1, beta=1)
/// in log scale, then to the smaller delta, then the smaller beta. Returns
/// the detection for the chosen point.
TunedDetection tune_and_detect(const MixedTable& table, std::span<const ObjectId> labeled,
                               std::span<const ObjectId> unlabeled, const Grid& grid,
                               LabeledScoring labeled_scoring = LabeledScoring::AppendToUnlabeled,
                               std::optional<double> threshold_override = std::nullopt);

struct RunResult {
  std::uint64_t seed = 0;
  double auc = 0.0;
  double ap = 0.0;
  GridChoice choice;
  double threshold = 0.0;
  std::size_t labeled_count = 0;
  std::size_t labeled_outliers = 0;
  std::vector<ObjectId> objects;  // scored (unlabeled) ids
  std::vector<double> scores;
};

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single run
  double min = 0.0;
  double max = 0.0;
};

struct ExperimentConfig {
  std::string dataset_name = "dataset";
  double labeled_fraction = 0.01;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  Grid grid = Grid::standard();
  LabeledScoring labeled_scoring = LabeledScoring::AppendToUnlabeled;
};

struct ExperimentReport {
  std::string dataset;
  double labeled_fraction = 0.0;
  std::vector<RunResult> runs;
  MetricSummary auc;
  MetricSummary ap;
  /// Most frequently chosen grid point across runs (first in grid order on ties).
  double best_delta = 1.0;
  double best_beta = 1.0;

  std::string to_json() const;
  std::string to_text() const;
};

MetricSummary summarize(std::span<const double> values);

/// One run per seed: stratified split of the ground truth, grid search on
/// the labeled part, AUC/AP of the unlabeled scores against the held-out
/// truth. Runs execute concurrently; the report does not depend on the
/// worker count.
ExperimentReport run_experiment(const MixedTable& table, const ExperimentConfig& config);

}  // namespace frod
