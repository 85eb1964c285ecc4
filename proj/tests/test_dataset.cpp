/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "frod/dataset.hpp"
#include "frod/error.hpp"
#include "frod/worked_example.hpp"

namespace frod {
namespace {

MixedTable parse(const std::string& text, CsvOptions options = {}) {
  std::istringstream in(text);
  return parse_csv(in, options);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected frod::Error";
  return ErrorKind::Param;
}

TEST(Dataset, WorkedExampleCsvInfersKindsAndLabels) {
  CsvOptions options;
  options.label_column = "d";
  const MixedTable t = parse(example::csv(), options);
  ASSERT_EQ(t.size(), 10u);
  ASSERT_EQ(t.attribute_count(), 3u);
  EXPECT_EQ(t.column(0).kind(), AttributeKind::Numerical);
  EXPECT_EQ(t.column(1).kind(), AttributeKind::Numerical);
  EXPECT_EQ(t.column(2).kind(), AttributeKind::Nominal);
  EXPECT_EQ(t.ids_with(Label::Normal).size(), 4u);
  EXPECT_EQ(t.ids_with(Label::Outlier), std::vector<ObjectId>{0});
  EXPECT_EQ(t.ids_with(Label::Unlabeled).size(), 5u);
}

TEST(Dataset, SingleNonNumericTokenMakesColumnNominal) {
  const MixedTable t = parse("x,y,label\n1,2,0\n3,abc,1\n5,6,\n");
  EXPECT_EQ(t.column(0).kind(), AttributeKind::Numerical);
  EXPECT_EQ(t.column(1).kind(), AttributeKind::Nominal);
  EXPECT_EQ(t.column(1).categories(), (std::vector<std::string>{"2", "abc", "6"}));
}

TEST(Dataset, QuotedFieldsFollowRfc4180) {
  const MixedTable t = parse("\"name, with comma\",label\r\n\"a \"\"q\"\"\",0\r\nb,1\r\n");
  EXPECT_EQ(t.column(0).name(), "name, with comma");
  EXPECT_EQ(t.column(0).categories().front(), "a \"q\"");
  EXPECT_EQ(t.column(0).kind(), AttributeKind::Nominal);
}

TEST(Dataset, SchemaOverridesInference) {
  CsvOptions options;
  options.schema = {{"x", AttributeKind::Nominal}};
  const MixedTable t = parse("x,label\n1,0\n2,1\n1,\n", options);
  EXPECT_EQ(t.column(0).kind(), AttributeKind::Nominal);
}

TEST(Dataset, SchemaFileParses) {
  std::istringstream in("# comment\nc1:numerical\n\nc3 : Nominal\n");
  const auto schema = parse_schema(in);
  ASSERT_EQ(schema.size(), 2u);
  EXPECT_EQ(schema.at("c1"), AttributeKind::Numerical);
  EXPECT_EQ(schema.at("c3"), AttributeKind::Nominal);

  std::istringstream bad("c1:ordinal\n");
  EXPECT_EQ(kind_of([&] { parse_schema(bad); }), ErrorKind::Schema);
}

TEST(Dataset, LoadErrors) {
  EXPECT_EQ(kind_of([] { load_csv("/nonexistent/file.csv", {}); }), ErrorKind::Io);

  CsvOptions declared;
  declared.schema = {{"x", AttributeKind::Numerical}};
  EXPECT_EQ(kind_of([&] { parse("x,label\n1,0\nfoo,1\n", declared); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse("x,label\n1,0\n2,maybe\n"); }), ErrorKind::Label);
  EXPECT_EQ(kind_of([] { parse("x,label\n1,0\n,1\n"); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse("x,label\n1,0\n2\n"); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse("x,y\n1,0\n2,1\n"); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse("x,label\n1,0\n"); }), ErrorKind::Schema);
}

TEST(Dataset, LabelAliasesAreConfigurable) {
  CsvOptions options;
  options.aliases.normal = {"g"};
  options.aliases.outlier = {"b"};
  options.aliases.unlabeled = {"?"};
  const MixedTable t = parse("x,label\n1,g\n2,b\n3,?\n", options);
  EXPECT_EQ(t.labels()[0], Label::Normal);
  EXPECT_EQ(t.labels()[1], Label::Outlier);
  EXPECT_EQ(t.labels()[2], Label::Unlabeled);
}

TEST(Dataset, NormalizeUsesGlobalMinMax) {
  const MixedTable t = example::table().normalize();
  const auto c1 = t.column(0).normalized();
  // c1 spans [0.47, 0.53] over all ten objects.
  EXPECT_NEAR(c1[0], 1.0, 1e-12);
  EXPECT_NEAR(c1[1], 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(c1[5], 5.0 / 6.0, 1e-12);
  EXPECT_FALSE(t.column(2).has_normalized());
  EXPECT_TRUE(t.is_normalized());
  EXPECT_FALSE(example::table().is_normalized());
}

TEST(Dataset, NormalizeEdgeCases) {
  std::vector<Attribute> cols;
  cols.push_back(Attribute::numerical("const", {4.0, 4.0, 4.0}));
  cols.push_back(Attribute::numerical("unit", {0.0, 1.0, 1.0}));
  const MixedTable t =
      MixedTable(std::move(cols), std::vector<Label>(3, Label::Unlabeled)).normalize();
  for (double v : t.column(0).normalized()) EXPECT_EQ(v, 0.0);
  const auto unit = t.column(1).normalized();
  EXPECT_EQ(std::vector<double>(unit.begin(), unit.end()), (std::vector<double>{0.0, 1.0, 1.0}));
}

TEST(Dataset, NormalizeIsIdempotentAndSpansUnitInterval) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(25);
    for (auto& x : v) x = u(rng);
    std::vector<Attribute> cols;
    cols.push_back(Attribute::numerical("x", v));
    const MixedTable once =
        MixedTable(std::move(cols), std::vector<Label>(v.size(), Label::Unlabeled)).normalize();
    const auto a = once.column(0).normalized();
    EXPECT_EQ(*std::min_element(a.begin(), a.end()), 0.0);
    EXPECT_EQ(*std::max_element(a.begin(), a.end()), 1.0);

    std::vector<Attribute> again;
    again.push_back(Attribute::numerical("x", {a.begin(), a.end()}));
    const MixedTable twice =
        MixedTable(std::move(again), std::vector<Label>(v.size(), Label::Unlabeled)).normalize();
    const auto b = twice.column(0).normalized();
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST(Dataset, TableRejectsRaggedColumns) {
  std::vector<Attribute> cols;
  cols.push_back(Attribute::numerical("a", {1.0, 2.0}));
  cols.push_back(Attribute::numerical("b", {1.0, 2.0, 3.0}));
  EXPECT_EQ(kind_of([&] { MixedTable(cols, std::vector<Label>(2, Label::Normal)); }),
            ErrorKind::Schema);
}

std::vector<bool> truth(std::size_t n, std::size_t outliers) {
  std::vector<bool> t(n, false);
  for (std::size_t i = 0; i < outliers; ++i) t[i * (n / outliers)] = true;
  return t;
}

Split split_of(const std::vector<bool>& t, double fraction, std::uint64_t seed) {
  std::unique_ptr<bool[]> buf(new bool[t.size()]);
  std::copy(t.begin(), t.end(), buf.get());
  return stratified_split(std::span<const bool>(buf.get(), t.size()), fraction, seed);
}

std::size_t count_outliers(const std::vector<bool>& t, const std::vector<ObjectId>& ids) {
  return static_cast<std::size_t>(
      std::count_if(ids.begin(), ids.end(), [&](ObjectId o) { return t[o]; }));
}

TEST(Dataset, StratifiedSplitKeepsProportion) {
  const auto t = truth(1000, 100);
  const Split s = split_of(t, 0.1, 42);
  EXPECT_EQ(s.labeled.size(), 100u);
  EXPECT_EQ(count_outliers(t, s.labeled), 10u);
}

TEST(Dataset, StratifiedSplitArrhythmiaScale) {
  const auto t = truth(452, 66);
  const Split s = split_of(t, 0.01, 3);
  EXPECT_EQ(s.labeled.size(), 4u);
  EXPECT_EQ(count_outliers(t, s.labeled), 1u);
}

TEST(Dataset, StratifiedSplitIsDeterministicPartition) {
  const auto t = truth(300, 30);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Split a = split_of(t, 0.2, seed);
    const Split b = split_of(t, 0.2, seed);
    EXPECT_EQ(a.labeled, b.labeled);
    EXPECT_EQ(a.unlabeled, b.unlabeled);
    std::vector<ObjectId> all = a.labeled;
    all.insert(all.end(), a.unlabeled.begin(), a.unlabeled.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), t.size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
  }
}

TEST(Dataset, StratifiedSplitErrors) {
  const auto t = truth(100, 10);
  EXPECT_EQ(kind_of([&] { split_of(t, 0.01, 0); }), ErrorKind::Split);
  EXPECT_EQ(kind_of([&] { split_of(t, 0.0, 0); }), ErrorKind::Param);
  EXPECT_EQ(kind_of([&] { split_of(t, 1.0, 0); }), ErrorKind::Param);
  EXPECT_EQ(kind_of([] { stratified_split(example::table(), 0.5, 0); }), ErrorKind::Split);
}

}  // namespace
}  // namespace frod
