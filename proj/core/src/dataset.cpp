/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <istream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "frod/error.hpp"

namespace frod {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// One RFC-4180 record. Returns false at end of input. Quoted fields may span
// lines; "" inside quotes is a literal quote. Unquoted fields are trimmed.
bool read_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line_no) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;

  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  char c = 0;
  ++line_no;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line_no;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && trim(field).empty()) {
      field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else if (c == '\n') {
      break;
    } else if (c != '\r' && !was_quoted) {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw Error(ErrorKind::Schema,
                "unterminated quoted field near line " + std::to_string(line_no));
  }
  fields.push_back(was_quoted ? field : std::string(trim(field)));
  return true;
}

bool is_blank_record(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields.front().empty();
}

Label parse_label(const std::string& cell, const LabelAliases& aliases, std::size_t row) {
  auto in = [&](const std::vector<std::string>& set) {
    return std::find(set.begin(), set.end(), cell) != set.end();
  };
  if (in(aliases.normal)) return Label::Normal;
  if (in(aliases.outlier)) return Label::Outlier;
  if (in(aliases.unlabeled)) return Label::Unlabeled;
  throw Error(ErrorKind::Label,
              "row " + std::to_string(row + 1) + ": unrecognized label '" + cell + "'");
}

}  // namespace

Attribute Attribute::numerical(std::string name, std::vector<double> values) {
  Attribute a;
  a.name_ = std::move(name);
  a.kind_ = AttributeKind::Numerical;
  a.values_ = std::move(values);
  return a;
}

Attribute Attribute::nominal(std::string name, std::span<const std::string> values) {
  Attribute a;
  a.name_ = std::move(name);
  a.kind_ = AttributeKind::Nominal;
  std::unordered_map<std::string, std::size_t> codes;
  a.values_.reserve(values.size());
  for (const auto& v : values) {
    auto [it, inserted] = codes.try_emplace(v, a.categories_.size());
    if (inserted) a.categories_.push_back(v);
    a.values_.push_back(static_cast<double>(it->second));
  }
  return a;
}

std::span<const double> Attribute::normalized() const {
  if (!normalized_) {
    throw Error(ErrorKind::Param, "attribute '" + name_ + "' has no normalized values");
  }
  return *normalized_;
}

MixedTable::MixedTable(std::vector<Attribute> columns, std::vector<Label> labels)
    : columns_(std::move(columns)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw Error(ErrorKind::Schema, "a table needs at least 2 objects");
  for (const auto& c : columns_) {
    if (c.size() != n) {
      throw Error(ErrorKind::Schema, "column '" + c.name() + "' has " +
                                         std::to_string(c.size()) + " values, expected " +
                                         std::to_string(n));
    }
  }
}

const Attribute& MixedTable::column(AttributeId id) const {
  if (id >= columns_.size()) {
    throw Error(ErrorKind::Index, "attribute id " + std::to_string(id) + " out of range");
  }
  return columns_[id];
}

bool MixedTable::is_normalized() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const Attribute& a) {
    return a.kind() == AttributeKind::Nominal || a.has_normalized();
  });
}

MixedTable MixedTable::normalize() const {
  MixedTable out = *this;
  for (auto& col : out.columns_) {
    if (col.kind_ != AttributeKind::Numerical) continue;
    const auto [lo, hi] = std::minmax_element(col.values_.begin(), col.values_.end());
    const double min = *lo;
    const double range = *hi - *lo;
    std::vector<double> scaled(col.values_.size(), 0.0);
    if (range > 0.0) {
      for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = std::clamp((col.values_[i] - min) / range, 0.0, 1.0);
      }
    }
    col.normalized_ = std::move(scaled);
  }
  return out;
}

MixedTable MixedTable::with_labels(std::vector<Label> labels) const {
  return MixedTable(columns_, std::move(labels));
}

std::vector<ObjectId> MixedTable::ids_with(Label label) const {
  std::vector<ObjectId> ids;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) ids.push_back(i);
  }
  return ids;
}

std::map<std::string, AttributeKind> parse_schema(std::istream& in) {
  std::map<std::string, AttributeKind> schema;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto colon = t.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::Schema,
                  "schema line " + std::to_string(line_no) + ": expected name:kind");
    }
    const std::string name(trim(t.substr(0, colon)));
    const std::string kind = lower(trim(t.substr(colon + 1)));
    if (kind == "numerical" || kind == "numeric") {
      schema[name] = AttributeKind::Numerical;
    } else if (kind == "nominal" || kind == "categorical") {
      schema[name] = AttributeKind::Nominal;
    } else {
      throw Error(ErrorKind::Schema, "schema line " + std::to_string(line_no) +
                                         ": unknown kind '" + kind + "'");
    }
  }
  return schema;
}

std::map<std::string, AttributeKind> load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open schema file " + path.string());
  return parse_schema(in);
}

MixedTable parse_csv(std::istream& in, const CsvOptions& options) {
  std::vector<std::string> header;
  std::size_t line_no = 0;
  if (!read_record(in, header, line_no) || is_blank_record(header)) {
    throw Error(ErrorKind::Schema, "missing CSV header row");
  }
  const auto label_it = std::find(header.begin(), header.end(), options.label_column);
  if (label_it == header.end()) {
    throw Error(ErrorKind::Schema, "label column '" + options.label_column + "' not in header");
  }
  const std::size_t label_col = static_cast<std::size_t>(label_it - header.begin());
  for (const auto& [name, kind] : options.schema) {
    if (name != options.label_column &&
        std::find(header.begin(), header.end(), name) == header.end()) {
      throw Error(ErrorKind::Schema, "schema names unknown column '" + name + "'");
    }
  }

  const std::size_t width = header.size();
  std::vector<std::vector<std::string>> cells(width);
  std::vector<Label> labels;
  std::vector<std::string> record;
  while (read_record(in, record, line_no)) {
    if (is_blank_record(record)) continue;
    if (record.size() != width) {
      throw Error(ErrorKind::Schema, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(width) + " fields, got " +
                                         std::to_string(record.size()));
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_col) continue;
      if (record[c].empty()) {
        throw Error(ErrorKind::Schema, "line " + std::to_string(line_no) +
                                           ": empty value in column '" + header[c] + "'");
      }
      cells[c].push_back(std::move(record[c]));
    }
    labels.push_back(parse_label(record[label_col], options.aliases, labels.size()));
  }

  std::vector<Attribute> columns;
  for (std::size_t c = 0; c < width; ++c) {
    if (c == label_col) continue;
    std::vector<double> numbers;
    numbers.reserve(cells[c].size());
    bool all_numeric = true;
    for (const auto& s : cells[c]) {
      auto v = parse_number(s);
      if (!v) {
        all_numeric = false;
        break;
      }
      numbers.push_back(*v);
    }
    AttributeKind kind = all_numeric ? AttributeKind::Numerical : AttributeKind::Nominal;
    if (auto declared = options.schema.find(header[c]); declared != options.schema.end()) {
      if (declared->second == AttributeKind::Numerical && !all_numeric) {
        throw Error(ErrorKind::Schema,
                    "column '" + header[c] + "' declared numerical but has non-numeric values");
      }
      kind = declared->second;
    }
    if (kind == AttributeKind::Numerical) {
      columns.push_back(Attribute::numerical(header[c], std::move(numbers)));
    } else {
      columns.push_back(Attribute::nominal(header[c], cells[c]));
    }
  }
  return MixedTable(std::move(columns), std::move(labels));
}

MixedTable load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return parse_csv(in, options);
}

Split stratified_split(std::span<const bool> is_outlier, double labeled_fraction,
                       std::uint64_t seed) {
  if (!(labeled_fraction > 0.0 && labeled_fraction < 1.0)) {
    throw Error(ErrorKind::Param, "labeled fraction must lie in (0,1)");
  }
  std::vector<ObjectId> outliers;
  std::vector<ObjectId> normals;
  for (std::size_t i = 0; i < is_outlier.size(); ++i) {
    (is_outlier[i] ? outliers : normals).push_back(i);
  }
  const double n = static_cast<double>(is_outlier.size());
  // The epsilon keeps exact products such as 1000 * 0.1 from flooring down.
  const auto total = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::floor(n * labeled_fraction + 1e-9)));
  const auto n_out = static_cast<std::size_t>(
      std::floor(static_cast<double>(outliers.size()) * labeled_fraction + 0.5));
  if (n_out == 0) {
    throw Error(ErrorKind::Split,
                "labeled fraction yields no labeled outliers; raise the fraction");
  }
  if (n_out >= total || total - n_out > normals.size()) {
    throw Error(ErrorKind::Split, "labeled fraction yields no labeled normal objects");
  }
  const std::size_t n_norm = total - n_out;

  std::mt19937_64 rng(seed);
  std::shuffle(outliers.begin(), outliers.end(), rng);
  std::shuffle(normals.begin(), normals.end(), rng);

  std::vector<bool> chosen(is_outlier.size(), false);
  for (std::size_t i = 0; i < n_out; ++i) chosen[outliers[i]] = true;
  for (std::size_t i = 0; i < n_norm; ++i) chosen[normals[i]] = true;

  Split split;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    (chosen[i] ? split.labeled : split.unlabeled).push_back(i);
  }
  return split;
}

Split stratified_split(const MixedTable& table, double labeled_fraction, std::uint64_t seed) {
  std::unique_ptr<bool[]> truth(new bool[table.size()]);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Label l = table.labels()[i];
    if (l == Label::Unlabeled) {
      throw Error(ErrorKind::Split, "stratified split needs ground truth for every object");
    }
    truth[i] = l == Label::Outlier;
  }
  return stratified_split(std::span<const bool>(truth.get(), table.size()), labeled_fraction,
                          seed);
}

}  // namespace frod
