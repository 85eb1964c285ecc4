/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frod {

enum class AttributeKind { Numerical, Nominal };
enum class Label { Normal, Outlier, Unlabeled };

using ObjectId = std::size_t;
using AttributeId = std::size_t;

/// One conditional attribute. Numerical columns keep their raw values and,
/// after MixedTable::normalize(), a min-max scaled copy in [0,1]. Nominal
/// columns are dictionary encoded: values() holds dense category codes.
class Attribute {
 public:
  static Attribute numerical(std::string name, std::vector<double> values);
  static Attribute nominal(std::string name, std::span<const std::string> values);

  const std::string& name() const noexcept { return name_; }
  AttributeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Raw numbers (numerical) or category codes (nominal).
  std::span<const double> values() const noexcept { return values_; }
  /// Category names indexed by code; empty for numerical columns.
  const std::vector<std::string>& categories() const noexcept { return categories_; }

  bool has_normalized() const noexcept { return normalized_.has_value(); }
  /// Min-max scaled values. Throws Error(Param) if absent.
  std::span<const double> normalized() const;

 private:
  friend class MixedTable;
  Attribute() = default;

  std::string name_;
  AttributeKind kind_ = AttributeKind::Numerical;
  std::vector<double> values_;
  std::vector<std::string> categories_;
  std::optional<std::vector<double>> normalized_;
};

/// Column-typed object table with a per-object label state. Immutable once
/// built; normalize() returns a new table.
class MixedTable {
 public:
  /// Throws Error(Schema) unless every column has the same length n >= 2 and
  /// labels has n entries.
  MixedTable(std::vector<Attribute> columns, std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t attribute_count() const noexcept { return columns_.size(); }
  const std::vector<Attribute>& columns() const noexcept { return columns_; }
  const Attribute& column(AttributeId id) const;
  std::span<const Label> labels() const noexcept { return labels_; }

  /// True when every numerical column carries normalized values.
  bool is_normalized() const noexcept;

  /// Min-max scales every numerical column over all objects jointly.
  /// Constant columns map to all zeros.
  MixedTable normalize() const;

  /// Same columns, different label vector.
  MixedTable with_labels(std::vector<Label> labels) const;

  std::vector<ObjectId> ids_with(Label label) const;

 private:
  std::vector<Attribute> columns_;
  std::vector<Label> labels_;
};

struct LabelAliases {
  std::vector<std::string> normal{"0"};
  std::vector<std::string> outlier{"1"};
  std::vector<std::string> unlabeled{""};
};

struct CsvOptions {
  std::string label_column = "label";
  /// Declared kinds by column name; columns not listed are inferred.
  std::map<std::string, AttributeKind> schema;
  LabelAliases aliases;
};

/// Parses `name:kind` lines (kind is numerical|nominal, case-insensitive).
/// Blank lines and lines starting with '#' are skipped.
std::map<std::string, AttributeKind> parse_schema(std::istream& in);
std::map<std::string, AttributeKind> load_schema(const std::filesystem::path& path);

/// Reads an RFC-4180 CSV with a header row. A column whose every cell parses
/// as a finite number is Numerical under inference, otherwise Nominal.
/// Errors: Io, Schema (declared kind conflicts, ragged rows, empty cells,
/// missing label column), Label (value not covered by aliases).
MixedTable parse_csv(std::istream& in, const CsvOptions& options);
MixedTable load_csv(const std::filesystem::path& path, const CsvOptions& options);

struct Split {
  std::vector<ObjectId> labeled;
  std::vector<ObjectId> unlabeled;
};

/// Stratified labeled/unlabeled partition over ground-truth labels. The
/// labeled set has floor(n * fraction) objects (at least 2), of which
/// round(n_outliers * fraction) are outliers. Both id lists are ascending.
/// Deterministic for a given seed. Throws Error(Split) when the labeled set
/// would lack an outlier or a normal object, or Error(Param) for a fraction
/// outside (0,1).
Split stratified_split(std::span<const bool> is_outlier, double labeled_fraction,
                       std::uint64_t seed);
/// Uses table labels as ground truth; every object must be labeled.
Split stratified_split(const MixedTable& table, double labeled_fraction,
                       std::uint64_t seed);

}  // namespace frod
