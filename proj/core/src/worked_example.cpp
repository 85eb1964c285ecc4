/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/worked_example.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frod/detector.hpp"
#include "frod/entropy.hpp"
#include "frod/fuzzy_relation.hpp"
#include "frod/supervision.hpp"

namespace frod::example {
namespace {

constexpr std::array<double, 10> kC1{0.53, 0.48, 0.50, 0.48, 0.51, 0.52, 0.48, 0.47, 0.53, 0.48};
constexpr std::array<int, 10> kC2{7, 8, 7, 8, 8, 7, 9, 8, 9, 9};
constexpr std::array<const char*, 10> kC3{"C", "C", "B", "B", "B", "C", "A", "A", "A", "B"};
constexpr std::array<Label, 10> kLabels{
    Label::Outlier,   Label::Normal,    Label::Normal,    Label::Normal,    Label::Normal,
    Label::Unlabeled, Label::Unlabeled, Label::Unlabeled, Label::Unlabeled, Label::Unlabeled};

const std::vector<ObjectId> kLabeled{0, 1, 2, 3, 4};
const std::vector<ObjectId> kUnlabeled{5, 6, 7, 8, 9};

double max_deviation(const FuzzyRelation& rel, const Matrix5& expected) {
  double worst = 0.0;
  for (std::size_t e = 0; e < expected.size(); ++e) {
    worst = std::max(worst, std::abs(rel.data()[e] - expected[e]));
  }
  return worst;
}

}  // namespace

MixedTable table() {
  std::vector<double> c1(kC1.begin(), kC1.end());
  std::vector<double> c2(kC2.begin(), kC2.end());
  std::vector<std::string> c3(kC3.begin(), kC3.end());
  std::vector<Attribute> columns;
  columns.push_back(Attribute::numerical("c1", std::move(c1)));
  columns.push_back(Attribute::numerical("c2", std::move(c2)));
  columns.push_back(Attribute::nominal("c3", c3));
  return MixedTable(std::move(columns), {kLabels.begin(), kLabels.end()});
}

std::string csv() {
  std::ostringstream out;
  out << "c1,c2,c3,d\n";
  for (std::size_t i = 0; i < kC1.size(); ++i) {
    const char* label = kLabels[i] == Label::Outlier ? "1" : kLabels[i] == Label::Normal ? "0" : "";
    out << kC1[i] << ',' << kC2[i] << ',' << kC3[i] << ',' << label << '\n';
  }
  return out.str();
}

Reference Reference::published() {
  Reference r;
  r.labeled_matrices = {{
      {1, 0, 0, 0, 0.667,  0, 1, 0.667, 1, 0,  0, 0.667, 1, 0.667, 0.833,
       0, 1, 0.667, 1, 0,  0.667, 0, 0.833, 0, 1},
      {1, 0, 1, 0, 0,  0, 1, 0, 1, 1,  1, 0, 1, 0, 0,  0, 1, 0, 1, 1,  0, 1, 0, 1, 1},
      {1, 1, 0, 0, 0,  1, 1, 0, 0, 0,  0, 0, 1, 1, 1,  0, 0, 1, 1, 1,  0, 0, 1, 1, 1},
  }};
  r.unlabeled_matrices = {{
      {1, 0, 0, 0.833, 0,  0, 1, 0.833, 0, 1,  0, 0.833, 1, 0, 0.833,
       0.833, 0, 0, 1, 0,  0, 1, 0.833, 0, 1},
      {1, 0, 0, 0, 0,  0, 1, 0, 1, 1,  0, 0, 1, 0, 0,  0, 1, 0, 1, 1,  0, 1, 0, 1, 1},
      {1, 0, 0, 0, 0,  0, 1, 1, 1, 0,  0, 1, 1, 1, 0,  0, 1, 1, 1, 0,  0, 0, 0, 0, 1},
  }};
  return r;
}

std::vector<Check> verify(const Reference& ref, double tol) {
  const MixedTable t = table().normalize();
  std::vector<Check> checks;
  auto add = [&](std::string name, double expected, double actual) {
    checks.push_back({std::move(name), expected, actual, std::abs(expected - actual) <= tol});
  };

  add("r1", ref.radius_c1, fuzzy_radius(t, 0, kLabeled, 1.0).value);
  add("r2", ref.radius_c2, fuzzy_radius(t, 1, kLabeled, 1.0).value);

  const ClassIndicators classes = class_indicators(t, kLabeled);
  for (AttributeId a = 0; a < 3; ++a) {
    const std::string c = "c" + std::to_string(a + 1);
    const FuzzyRelation labeled = relation_for_attribute(t, a, kLabeled, 1.0);
    add("M'_" + c, 0.0, max_deviation(labeled, ref.labeled_matrices[a]));
    add("M_" + c, 0.0,
        max_deviation(relation_for_attribute(t, a, kUnlabeled, 1.0), ref.unlabeled_matrices[a]));
    add("gamma_" + c, ref.gamma[a], attribute_classification_accuracy(labeled, classes, 1.0).gamma);
  }

  const EntropyState c1(relation_for_attribute(t, 0, kUnlabeled, 1.0));
  const EntropyState c2(relation_for_attribute(t, 1, kUnlabeled, 1.0));
  add("FE(c1)", ref.entropy_c1, c1.entropy());
  add("FE_-6(c1)", ref.loo_entropy_c1_o6, c1.leave_one_out_entropy(0));
  add("FRE_c1(o6)", ref.fre_c1_o6, fuzzy_relative_entropy(c1, 0));
  add("OF_c1(o6)", ref.of_c1_o6, outlier_factor(c1, 0));
  add("OF_c2(o6)", ref.of_c2_o6, outlier_factor(c2, 0));

  FrodConfig config;
  config.threshold_override = ref.threshold;
  const DetectionResult result = detect(t, kLabeled, kUnlabeled, config);
  for (std::size_t i = 0; i < 5; ++i) {
    add("OD(o" + std::to_string(i + 6) + ")", ref.od[i], result.scores[i]);
  }

  const auto found = result.outliers();
  std::vector<ObjectId> mismatched;
  std::set_symmetric_difference(found.begin(), found.end(), ref.outliers.begin(),
                                ref.outliers.end(), std::back_inserter(mismatched));
  checks.push_back({"outliers(theta=" + std::to_string(ref.threshold).substr(0, 4) + ")", 0.0,
                    static_cast<double>(mismatched.size()), mismatched.empty()});
  return checks;
}

}  // namespace frod::example
