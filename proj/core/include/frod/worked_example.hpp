/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "frod/dataset.hpp"

namespace frod::example {

/// Ten objects, attributes c1 (real), c2 (integer), c3 (categorical A/B/C);
/// o1 outlier, o2..o5 normal, o6..o10 unlabeled. Not normalized.
MixedTable table();

/// The same table as CSV text (header c1,c2,c3,d).
std::string csv();

using Matrix5 = std::array<double, 25>;

/// Published intermediate values of the ten-object example. Object indices
/// below are 0-based, so o6 is 5.
struct Reference {
  double radius_c1 = 0.3467;
  double radius_c2 = 0.24;
  std::array<Matrix5, 3> labeled_matrices{};
  std::array<Matrix5, 3> unlabeled_matrices{};
  std::array<double, 3> gamma{0.914, 0.6, 0.6};
  double entropy_c1 = 1.088;
  double loo_entropy_c1_o6 = 0.895;
  double fre_c1_o6 = 1.023;
  double of_c1_o6 = 0.619;
  double of_c2_o6 = 0.3542;
  std::array<double, 5> od{0.670, 0.316, 0.467, 0.410, 0.446};
  double threshold = 0.6;
  std::vector<ObjectId> outliers{5};

  static Reference published();
};

struct Check {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  bool passed = false;
};

/// Recomputes every intermediate through the library (delta = beta = 1) and
/// compares with `ref` at absolute tolerance `tol`. Matrices are reported as
/// one check each: expected 0, actual the largest entrywise deviation. The
/// outlier-set check reports the number of mismatched ids.
std::vector<Check> verify(const Reference& ref, double tol = 1e-3);

}  // namespace frod::example
