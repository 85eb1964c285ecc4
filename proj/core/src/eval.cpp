/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "frod/error.hpp"
#include "frod/parallel.hpp"

namespace frod {
namespace {

void check_sizes(std::span<const double> scores, const std::vector<bool>& truth) {
  if (scores.size() != truth.size()) {
    throw Error(ErrorKind::DegenerateTruth, "scores and truth have different lengths");
  }
}

std::vector<bool> truth_of(std::span<const ObjectId> ids, std::span<const Label> labels) {
  std::vector<bool> t(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) t[i] = labels[ids[i]] == Label::Outlier;
  return t;
}

// Lexicographic key used to break labeled-AUC ties.
std::tuple<double, double, double, double> tie_key(double delta, double beta) {
  return {std::abs(std::log(delta)), std::abs(std::log(beta)), delta, beta};
}

}  // namespace

double auc(std::span<const double> scores, const std::vector<bool>& truth) {
  check_sizes(scores, truth);
  const std::size_t n = scores.size();
  const auto pos = static_cast<std::size_t>(std::count(truth.begin(), truth.end(), true));
  if (pos == 0 || pos == n) {
    throw Error(ErrorKind::DegenerateTruth, "AUC needs at least one positive and one negative");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Ranks are 1-based; a tie group spanning ranks [lo, hi] gets (lo + hi) / 2.
  // Doubled ranks keep the arithmetic in integers.
  std::uint64_t doubled_rank_sum = 0;
  for (std::size_t g = 0; g < n;) {
    std::size_t h = g;
    while (h + 1 < n && scores[order[h + 1]] == scores[order[g]]) ++h;
    const std::uint64_t doubled = (g + 1) + (h + 1);
    for (std::size_t i = g; i <= h; ++i) {
      if (truth[order[i]]) doubled_rank_sum += doubled;
    }
    g = h + 1;
  }
  // 2U = doubled rank sum - P(P+1), an exact integer.
  const std::uint64_t doubled_u = doubled_rank_sum - pos * (pos + 1);
  return static_cast<double>(doubled_u) / 2.0 / static_cast<double>(pos * (n - pos));
}

double average_precision(std::span<const double> scores, const std::vector<bool>& truth) {
  check_sizes(scores, truth);
  const auto pos = static_cast<std::size_t>(std::count(truth.begin(), truth.end(), true));
  if (pos == 0) throw Error(ErrorKind::DegenerateTruth, "AP needs at least one positive");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (!truth[order[r]]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(r + 1);
  }
  return sum / static_cast<double>(pos);
}

Grid Grid::standard() {
  return {{0.1, 0.6, 1.1, 1.6, 2.1, 2.6}, {0.01, 0.1, 1.0, 10.0, 100.0}};
}

Grid Grid::single(double delta, double beta) { return {{delta}, {beta}}; }

TunedDetection tune_and_detect(const MixedTable& table, std::span<const ObjectId> labeled,
                               std::span<const ObjectId> unlabeled, const Grid& grid,
                               LabeledScoring labeled_scoring,
                               std::optional<double> threshold_override) {
  if (grid.deltas.empty() || grid.betas.empty()) {
    throw Error(ErrorKind::Param, "grid needs at least one delta and one beta");
  }
  const std::vector<bool> labeled_truth = truth_of(labeled, table.labels());

  std::optional<TunedDetection> best;
  for (double delta : grid.deltas) {
    const Evidence ev = collect_evidence(table, labeled, unlabeled, delta, labeled_scoring);
    for (double beta : grid.betas) {
      DetectionResult result = score_evidence(ev, beta, threshold_override);
      const double labeled_auc = auc(result.labeled_scores, labeled_truth);
      const bool better =
          !best || labeled_auc > best->choice.labeled_auc ||
          (labeled_auc == best->choice.labeled_auc &&
           tie_key(delta, beta) < tie_key(best->choice.delta, best->choice.beta));
      if (better) best = TunedDetection{{delta, beta, labeled_auc}, std::move(result)};
    }
  }
  return std::move(*best);
}

MetricSummary summarize(std::span<const double> values) {
  MetricSummary s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  // Guard the mean-within-range invariant against summation rounding.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

ExperimentReport run_experiment(const MixedTable& table, const ExperimentConfig& config) {
  if (config.seeds.empty()) throw Error(ErrorKind::Param, "experiment needs at least one seed");
  const MixedTable normalized = table.is_normalized() ? table : table.normalize();

  ExperimentReport report;
  report.dataset = config.dataset_name;
  report.labeled_fraction = config.labeled_fraction;
  report.runs.resize(config.seeds.size());

  // Splits first so SplitError surfaces before any heavy work.
  std::vector<Split> splits;
  for (std::uint64_t seed : config.seeds) {
    splits.push_back(stratified_split(normalized, config.labeled_fraction, seed));
  }

  parallel_for(config.seeds.size(), [&](std::size_t r) {
    const Split& split = splits[r];
    TunedDetection tuned = tune_and_detect(normalized, split.labeled, split.unlabeled,
                                           config.grid, config.labeled_scoring);
    const std::vector<bool> truth = truth_of(split.unlabeled, normalized.labels());
    RunResult& run = report.runs[r];
    run.seed = config.seeds[r];
    run.auc = auc(tuned.result.scores, truth);
    run.ap = average_precision(tuned.result.scores, truth);
    run.choice = tuned.choice;
    run.threshold = tuned.result.threshold;
    run.labeled_count = split.labeled.size();
    const std::vector<bool> labeled_truth = truth_of(split.labeled, normalized.labels());
    run.labeled_outliers =
        static_cast<std::size_t>(std::count(labeled_truth.begin(), labeled_truth.end(), true));
    run.objects = std::move(tuned.result.objects);
    run.scores = std::move(tuned.result.scores);
  });

  std::vector<double> aucs;
  std::vector<double> aps;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> votes;
  auto index_of = [](const std::vector<double>& v, double x) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
  };
  for (const auto& run : report.runs) {
    aucs.push_back(run.auc);
    aps.push_back(run.ap);
    ++votes[{index_of(config.grid.deltas, run.choice.delta),
             index_of(config.grid.betas, run.choice.beta)}];
  }
  report.auc = summarize(aucs);
  report.ap = summarize(aps);
  const auto top = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  report.best_delta = config.grid.deltas[top->first.first];
  report.best_beta = config.grid.betas[top->first.second];
  return report;
}

std::string ExperimentReport::to_json() const {
  using nlohmann::ordered_json;
  auto metric = [](const MetricSummary& m) {
    return ordered_json{{"mean", m.mean}, {"std", m.stddev}, {"min", m.min}, {"max", m.max}};
  };
  ordered_json j;
  j["dataset"] = dataset;
  j["labeled_fraction"] = labeled_fraction;
  j["runs"] = ordered_json::array();
  for (const auto& r : runs) {
    j["runs"].push_back({{"seed", r.seed},
                         {"auc", r.auc},
                         {"ap", r.ap},
                         {"delta", r.choice.delta},
                         {"beta", r.choice.beta},
                         {"labeled_auc", r.choice.labeled_auc},
                         {"threshold", r.threshold},
                         {"labeled", r.labeled_count},
                         {"labeled_outliers", r.labeled_outliers}});
  }
  j["auc"] = metric(auc);
  j["ap"] = metric(ap);
  j["best_config"] = {{"delta", best_delta}, {"beta", best_beta}};
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_text() const {
  std::ostringstream out;
  out << "dataset " << dataset << "  labeled fraction " << labeled_fraction << "\n";
  out << std::left << std::setw(8) << "seed" << std::setw(10) << "AUC" << std::setw(10) << "AP"
      << std::setw(8) << "delta" << std::setw(8) << "beta" << "labeled\n";
  out << std::fixed;
  for (const auto& r : runs) {
    out << std::setw(8) << r.seed << std::setprecision(4) << std::setw(10) << r.auc
        << std::setw(10) << r.ap << std::setprecision(2) << std::setw(8) << r.choice.delta
        << std::setw(8) << r.choice.beta << r.labeled_count << " (" << r.labeled_outliers
        << " outliers)\n";
  }
  out << std::setprecision(4);
  out << "mean AUC " << auc.mean << " +/- " << auc.stddev << "\n";
  out << "mean AP  " << ap.mean << " +/- " << ap.stddev << "\n";
  out << std::setprecision(2) << "most chosen delta " << best_delta << ", beta " << best_beta
      << "\n";
  return out.str();
}

}  // namespace frod
