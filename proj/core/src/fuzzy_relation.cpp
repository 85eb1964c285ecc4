/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/fuzzy_relation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "frod/error.hpp"

namespace frod {
namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(sizeof(T) == 8);
  std::uint64_t bits = 0;
  std::memcpy(&bits, &value, sizeof bits);
  unsigned char bytes[8];
  for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>(bits >> (8 * b));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

template <typename T>
T get_le(std::istream& in) {
  static_assert(sizeof(T) == 8);
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
    throw Error(ErrorKind::Io, "truncated relation dump");
  }
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
  T value;
  std::memcpy(&value, &bits, sizeof value);
  return value;
}

}  // namespace

FuzzyRelation::FuzzyRelation(Unchecked, std::vector<ObjectId> subset, std::vector<double> matrix,
                             std::vector<AttributeId> attribute_ids)
    : subset_(std::move(subset)),
      matrix_(std::move(matrix)),
      attribute_ids_(std::move(attribute_ids)) {}

FuzzyRelation::FuzzyRelation(std::vector<ObjectId> subset, std::vector<double> matrix,
                             std::vector<AttributeId> attribute_ids)
    : FuzzyRelation(Unchecked{}, std::move(subset), std::move(matrix), std::move(attribute_ids)) {
  const std::size_t k = subset_.size();
  if (k == 0 || matrix_.size() != k * k) {
    throw Error(ErrorKind::Param, "relation matrix must be k x k over a nonempty subset");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if ((*this)(i, i) != 1.0) throw Error(ErrorKind::Param, "relation is not reflexive");
    for (std::size_t j = 0; j < k; ++j) {
      const double v = (*this)(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::Param, "relation entry outside [0,1]");
      }
      if (v != (*this)(j, i)) throw Error(ErrorKind::Param, "relation is not symmetric");
    }
  }
}

FuzzyRelation FuzzyRelation::identity(std::vector<ObjectId> subset) {
  const std::size_t k = subset.size();
  std::vector<double> m(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = 1.0;
  return FuzzyRelation(std::move(subset), std::move(m));
}

FuzzyRelation FuzzyRelation::all_ones(std::vector<ObjectId> subset) {
  const std::size_t k = subset.size();
  return FuzzyRelation(std::move(subset), std::vector<double>(k * k, 1.0));
}

double fuzzy_radius(std::span<const double> values, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::Param, "delta must be positive");
  const std::size_t k = values.size();
  if (k < 2) throw Error(ErrorKind::Param, "fuzzy radius needs at least 2 objects");
  // Sum over unordered pairs, doubled: every ordered pair (i,j) with i != j
  // appears once each way and the diagonal contributes zero.
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) sum += std::abs(values[i] - values[j]);
  }
  const double kk = static_cast<double>(k);
  return delta * (2.0 * sum) / (kk * kk);
}

FuzzyRadius fuzzy_radius(const MixedTable& table, AttributeId attribute,
                         std::span<const ObjectId> subset, double delta) {
  const Attribute& col = table.column(attribute);
  if (col.kind() != AttributeKind::Numerical) {
    throw Error(ErrorKind::Param, "fuzzy radius is defined for numerical attributes only");
  }
  const auto all = col.normalized();
  std::vector<double> values;
  values.reserve(subset.size());
  for (ObjectId o : subset) values.push_back(all[o]);
  return {attribute, fuzzy_radius(values, delta)};
}

FuzzyRelation relation_for_attribute(const MixedTable& table, AttributeId attribute,
                                     std::span<const ObjectId> subset, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::Param, "delta must be positive");
  if (subset.empty()) throw Error(ErrorKind::Param, "relation subset is empty");
  const Attribute& col = table.column(attribute);
  const std::size_t k = subset.size();
  for (ObjectId o : subset) {
    if (o >= table.size()) {
      throw Error(ErrorKind::Index, "object id " + std::to_string(o) + " out of range");
    }
  }

  std::vector<double> m(k * k);
  if (col.kind() == AttributeKind::Nominal) {
    const auto codes = col.values();
    for (std::size_t i = 0; i < k; ++i) {
      m[i * k + i] = 1.0;
      for (std::size_t j = i + 1; j < k; ++j) {
        const double v = codes[subset[i]] == codes[subset[j]] ? 1.0 : 0.0;
        m[i * k + j] = v;
        m[j * k + i] = v;
      }
    }
  } else {
    const auto all = col.normalized();
    std::vector<double> values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = all[subset[i]];
    const double radius = k >= 2 ? fuzzy_radius(values, delta) : 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      m[i * k + i] = 1.0;
      for (std::size_t j = i + 1; j < k; ++j) {
        const double d = std::abs(values[i] - values[j]);
        const double v = d <= radius ? 1.0 - d : 0.0;
        m[i * k + j] = v;
        m[j * k + i] = v;
      }
    }
  }
  return FuzzyRelation(FuzzyRelation::Unchecked{}, {subset.begin(), subset.end()}, std::move(m),
                       {attribute});
}

FuzzyRelation relation_for_set(std::span<const FuzzyRelation> relations) {
  if (relations.empty()) throw Error(ErrorKind::Param, "relation_for_set needs a relation");
  const FuzzyRelation& first = relations.front();
  std::vector<double> m(first.data().begin(), first.data().end());
  std::vector<AttributeId> ids = first.attribute_ids();
  for (const auto& r : relations.subspan(1)) {
    if (r.subset() != first.subset()) {
      throw Error(ErrorKind::SubsetMismatch, "relations are over different object subsets");
    }
    const auto d = r.data();
    for (std::size_t e = 0; e < m.size(); ++e) m[e] = std::min(m[e], d[e]);
    ids.insert(ids.end(), r.attribute_ids().begin(), r.attribute_ids().end());
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return FuzzyRelation(FuzzyRelation::Unchecked{}, first.subset(), std::move(m), std::move(ids));
}

void write_relation(std::ostream& out, const FuzzyRelation& relation) {
  put_le<std::uint64_t>(out, relation.size());
  for (double v : relation.data()) put_le<double>(out, v);
}

FuzzyRelation read_relation(std::istream& in) {
  const auto k = get_le<std::uint64_t>(in);
  if (k == 0 || k > (std::uint64_t{1} << 20)) {
    throw Error(ErrorKind::Io, "implausible relation size in dump");
  }
  std::vector<double> m(k * k);
  for (auto& v : m) v = get_le<double>(in);
  std::vector<ObjectId> subset(k);
  std::iota(subset.begin(), subset.end(), ObjectId{0});
  return FuzzyRelation(std::move(subset), std::move(m));
}

}  // namespace frod
