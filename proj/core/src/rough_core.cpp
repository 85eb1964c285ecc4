/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/rough_core.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "frod/error.hpp"

namespace frod {
namespace {

void check_universe(const FuzzyRelation& rel, const FuzzySet& x) {
  if (rel.subset() != x.universe()) {
    throw Error(ErrorKind::UniverseMismatch,
                "fuzzy set universe differs from the relation's object subset");
  }
}

}  // namespace

FuzzySet::FuzzySet(std::vector<ObjectId> universe, std::vector<double> membership)
    : universe_(std::move(universe)), membership_(std::move(membership)) {
  if (universe_.size() != membership_.size()) {
    throw Error(ErrorKind::Param, "fuzzy set universe and membership sizes differ");
  }
  for (double m : membership_) {
    if (!(m >= 0.0 && m <= 1.0)) throw Error(ErrorKind::Param, "membership outside [0,1]");
  }
}

FuzzySet FuzzySet::constant(std::vector<ObjectId> universe, double value) {
  const std::size_t k = universe.size();
  return FuzzySet(std::move(universe), std::vector<double>(k, value));
}

double FuzzySet::cardinality() const noexcept {
  double sum = 0.0;
  for (double m : membership_) sum += m;
  return sum;
}

FuzzySet FuzzySet::complement() const {
  std::vector<double> out(membership_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - membership_[i];
  return FuzzySet(universe_, std::move(out));
}

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorKind::UniverseMismatch, "union of fuzzy sets over different universes");
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return FuzzySet(a.universe(), std::move(out));
}

FuzzySet lower_approximation(const FuzzyRelation& rel, const FuzzySet& x) {
  check_universe(rel, x);
  const std::size_t k = rel.size();
  const auto xm = x.membership();
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = rel.row(i);
    double m = 1.0;
    for (std::size_t j = 0; j < k; ++j) m = std::min(m, std::max(1.0 - row[j], xm[j]));
    out[i] = m;
  }
  return FuzzySet(rel.subset(), std::move(out));
}

FuzzySet upper_approximation(const FuzzyRelation& rel, const FuzzySet& x) {
  check_universe(rel, x);
  const std::size_t k = rel.size();
  const auto xm = x.membership();
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = rel.row(i);
    double m = 0.0;
    for (std::size_t j = 0; j < k; ++j) m = std::max(m, std::min(row[j], xm[j]));
    out[i] = m;
  }
  return FuzzySet(rel.subset(), std::move(out));
}

double approximation_accuracy(const FuzzyRelation& rel, const FuzzySet& x) {
  const double upper = upper_approximation(rel, x).cardinality();
  if (!(upper > 0.0)) {
    throw Error(ErrorKind::DegenerateSet, "upper approximation is empty");
  }
  return lower_approximation(rel, x).cardinality() / upper;
}

FuzzySet similarity_class(const FuzzyRelation& rel, std::size_t i) {
  if (i >= rel.size()) {
    throw Error(ErrorKind::Index, "object index " + std::to_string(i) + " out of range");
  }
  const auto row = rel.row(i);
  return FuzzySet(rel.subset(), {row.begin(), row.end()});
}

double decision_faa(const FuzzyRelation& rel, std::span<const FuzzySet> classes) {
  if (classes.empty()) throw Error(ErrorKind::DegenerateSet, "no decision classes");
  FuzzySet lower_union = FuzzySet::constant(rel.subset(), 0.0);
  double upper_sum = 0.0;
  for (const auto& c : classes) {
    lower_union = fuzzy_union(lower_union, lower_approximation(rel, c));
    upper_sum += upper_approximation(rel, c).cardinality();
  }
  if (!(upper_sum > 0.0)) {
    throw Error(ErrorKind::DegenerateSet, "decision classes have empty upper approximations");
  }
  return lower_union.cardinality() / upper_sum;
}

}  // namespace frod
