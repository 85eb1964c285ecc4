/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frod/dataset.hpp"
#include "frod/detector.hpp"
#include "frod/error.hpp"
#include "frod/eval.hpp"

namespace frod::cli {
namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string input;
  std::string schema;
  std::string label_col = "label";
  double delta = 1.0;
  double beta = 1.0;
  bool grid = false;
  std::string labeled_scoring = "append";
};

struct DetectOptions {
  std::string output = "scores.csv";
  std::optional<double> threshold;
};

struct EvalOptions {
  double labeled_fraction = 0.01;
  std::vector<std::uint64_t> seeds;
  std::size_t runs = 10;
  std::string output = "report.json";
  std::string dump_scores;
  std::string name;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--input", o.input, "CSV file with a header row")->required();
  cmd->add_option("--schema", o.schema, "Schema file, one name:kind per line");
  cmd->add_option("--label-col", o.label_col, "Label column (0 normal, 1 outlier, empty unlabeled)");
  cmd->add_option("--delta", o.delta, "Fuzzy radius multiplier")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--beta", o.beta, "Outlier-class weight in attribute accuracy")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--grid", o.grid, "Tune delta and beta by grid search on the labeled objects");
  cmd->add_option("--labeled-scoring", o.labeled_scoring,
                  "How labeled objects are scored for the threshold")
      ->check(CLI::IsMember({"append", "full"}));
}

LabeledScoring scoring_of(const CommonOptions& o) {
  return o.labeled_scoring == "full" ? LabeledScoring::FullUniverse
                                     : LabeledScoring::AppendToUnlabeled;
}

MixedTable load(const CommonOptions& o) {
  CsvOptions csv;
  csv.label_column = o.label_col;
  if (!o.schema.empty()) csv.schema = load_schema(o.schema);
  return load_csv(o.input, csv).normalize();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

std::string score_csv(std::span<const ObjectId> ids, std::span<const double> scores,
                      const std::vector<bool>& predictions) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "object_id,od_score,prediction\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << ids[i] << ',' << scores[i] << ',' << (predictions[i] ? 1 : 0) << '\n';
  }
  return out.str();
}

int detect_command(const CommonOptions& common, const DetectOptions& opts, std::ostream& out) {
  const MixedTable table = load(common);
  std::vector<ObjectId> labeled;
  std::vector<ObjectId> unlabeled;
  for (std::size_t i = 0; i < table.size(); ++i) {
    (table.labels()[i] == Label::Unlabeled ? unlabeled : labeled).push_back(i);
  }

  FrodConfig config;
  config.delta = common.delta;
  config.beta = common.beta;
  config.threshold_override = opts.threshold;
  config.labeled_scoring = scoring_of(common);
  config.validate();

  DetectionResult result;
  std::optional<GridChoice> choice;
  if (common.grid) {
    TunedDetection tuned = tune_and_detect(table, labeled, unlabeled, Grid::standard(),
                                           config.labeled_scoring, config.threshold_override);
    choice = tuned.choice;
    config.delta = tuned.choice.delta;
    config.beta = tuned.choice.beta;
    result = std::move(tuned.result);
  } else {
    result = detect(table, labeled, unlabeled, config);
  }

  const fs::path output = opts.output;
  write_file(output, score_csv(result.objects, result.scores, result.predictions));

  nlohmann::ordered_json side;
  side["input"] = common.input;
  side["delta"] = config.delta;
  side["beta"] = config.beta;
  side["grid"] = common.grid;
  if (choice) side["labeled_auc"] = choice->labeled_auc;
  side["labeled_scoring"] = common.labeled_scoring;
  side["threshold"] = result.threshold;
  side["threshold_source"] = opts.threshold ? "override" : "labeled_normals";
  side["threshold_in_unit_interval"] = result.threshold > 0.0 && result.threshold < 1.0;
  side["labeled"] = labeled.size();
  side["unlabeled"] = unlabeled.size();
  side["predicted_outliers"] = result.outliers().size();
  nlohmann::ordered_json gammas = nlohmann::ordered_json::object();
  for (const auto& a : result.per_attribute) gammas[table.column(a.attribute_id).name()] = a.gamma;
  side["gamma"] = gammas;
  fs::path sidecar = output;
  sidecar.replace_extension(".json");
  write_file(sidecar, side.dump(2) + "\n");

  out << "scored " << result.objects.size() << " unlabeled objects, threshold "
      << result.threshold << ", " << result.outliers().size() << " predicted outliers\n";
  out << "wrote " << output.string() << " and " << sidecar.string() << "\n";
  return kOk;
}

int eval_command(const CommonOptions& common, const EvalOptions& opts, std::ostream& out) {
  const MixedTable table = load(common);
  ExperimentConfig config;
  config.dataset_name = opts.name.empty() ? fs::path(common.input).stem().string() : opts.name;
  config.labeled_fraction = opts.labeled_fraction;
  if (opts.seeds.empty()) {
    config.seeds.clear();
    for (std::size_t s = 0; s < opts.runs; ++s) config.seeds.push_back(s);
  } else {
    config.seeds = opts.seeds;
  }
  config.grid = common.grid ? Grid::standard() : Grid::single(common.delta, common.beta);
  config.labeled_scoring = scoring_of(common);

  const ExperimentReport report = run_experiment(table, config);
  write_file(opts.output, report.to_json());
  if (!opts.dump_scores.empty()) {
    for (const auto& run : report.runs) {
      std::vector<bool> none(run.scores.size(), false);
      write_file(fs::path(opts.dump_scores) / ("scores_seed" + std::to_string(run.seed) + ".csv"),
                 score_csv(run.objects, run.scores, none));
    }
  }
  out << report.to_text();
  out << "wrote " << opts.output << "\n";
  return kOk;
}

}  // namespace

int cmd_example(const example::Reference& ref, std::ostream& out, std::ostream& err) {
  const auto checks = example::verify(ref);
  bool ok = true;
  out << std::left << std::setw(24) << "quantity" << std::setw(12) << "expected"
      << std::setw(12) << "computed" << "status\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& c : checks) {
    out << std::setw(24) << c.name << std::setw(12) << c.expected << std::setw(12) << c.actual
        << (c.passed ? "ok" : "MISMATCH") << '\n';
    if (!c.passed) {
      err << "mismatch: " << c.name << " expected " << c.expected << ", computed " << c.actual
          << '\n';
      ok = false;
    }
  }
  out << (ok ? "all checks passed\n" : "example verification FAILED\n");
  return ok ? kOk : kExampleMismatch;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy rough outlier detection for mixed-attribute data", "frod"};
  app.require_subcommand(1);

  CommonOptions detect_common;
  DetectOptions detect_opts;
  auto* detect_cmd = app.add_subcommand("detect", "Score the unlabeled objects of a CSV");
  add_common(detect_cmd, detect_common);
  detect_cmd->add_option("--output", detect_opts.output, "Score CSV path (sidecar gets .json)");
  detect_cmd->add_option("--threshold", detect_opts.threshold, "Fixed threshold instead of the adaptive one");

  CommonOptions eval_common;
  EvalOptions eval_opts;
  auto* eval_cmd = app.add_subcommand("eval", "Repeated stratified experiments on a fully labeled CSV");
  add_common(eval_cmd, eval_common);
  eval_cmd->add_option("--labeled-fraction", eval_opts.labeled_fraction, "Fraction of labeled objects")
      ->check(CLI::Range(0.0, 1.0));
  eval_cmd->add_option("--seeds", eval_opts.seeds, "Comma-separated split seeds")->delimiter(',');
  eval_cmd->add_option("--runs", eval_opts.runs, "Number of runs (seeds 0..runs-1) when --seeds is absent")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--output", eval_opts.output, "JSON report path");
  eval_cmd->add_option("--dump-scores", eval_opts.dump_scores, "Directory for per-run score CSVs");
  eval_cmd->add_option("--name", eval_opts.name, "Dataset name in the report");

  app.add_subcommand("example", "Recompute the built-in ten-object example and check it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (detect_cmd->parsed()) return detect_command(detect_common, detect_opts, out);
    if (eval_cmd->parsed()) return eval_command(eval_common, eval_opts, out);
    return cmd_example(example::Reference::published(), out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::DegenerateLabels:
      case ErrorKind::EmptyNormals:
        return kDegenerateLabels;
      case ErrorKind::Param:
        return kUsage;
      default:
        return kDataError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace frod::cli
