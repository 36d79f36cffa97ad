#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "trip_jones/jones_engine.hpp"
#include "trip_jones/knot_table.hpp"

using namespace trip_jones;

TEST(KnotTable, Lookup) {
  EXPECT_TRUE(lookup("unknot").code.is_unknot());
  EXPECT_EQ(lookup("unknot").expected_jones, LaurentPoly::one());
  EXPECT_EQ(render(lookup("trefoil+").expected_jones), "-t^-4 + t^-3 + t^-1");
  EXPECT_EQ(lookup("trefoil+").code.writhe(), 3);
  EXPECT_EQ(build_trip_matrix(lookup("figure8").code).matrix(),
            Gf2Matrix::from_rows({"0011", "0011", "1110", "1101"}));
}

TEST(KnotTable, LookupIsCaseInsensitiveAndExact) {
  EXPECT_EQ(&lookup("FIGURE8"), &lookup("figure8"));
  EXPECT_EQ(&lookup("Trefoil+"), &lookup("trefoil+"));
  EXPECT_THROW(lookup("trefoil"), UnknownKnot);
  EXPECT_THROW(lookup("figure"), UnknownKnot);
}

TEST(KnotTable, RequiredContentsAndOrder) {
  const auto& all = all_entries();
  EXPECT_GE(all.size(), 12u);
  std::set<std::string> names;
  for (const auto& e : all) names.insert(e.name);
  for (const char* required : {"unknot", "trefoil+", "trefoil-", "figure8", "5_1", "5_2", "6_1",
                               "6_2", "6_3", "granny", "square", "trefoil+#figure8#trefoil+"})
    EXPECT_TRUE(names.count(required)) << required;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    EXPECT_TRUE(a.crossing_number < b.crossing_number ||
                (a.crossing_number == b.crossing_number && a.name < b.name));
  }
}

TEST(KnotTable, ExpectedMatchesEngineAndOracle) {
  for (const auto& e : all_entries()) {
    EXPECT_EQ(jones(e.code), e.expected_jones) << e.name;
    EXPECT_EQ(oracle::jones_reference(e.code), e.expected_jones) << e.name;
    EXPECT_TRUE(e.expected_jones.is_integral_in_t()) << e.name;
    EXPECT_EQ(e.code.crossings(), e.crossing_number) << e.name;
  }
}

TEST(KnotTable, CompositesAreProducts) {
  const auto& tp = lookup("trefoil+").expected_jones;
  const auto& tm = lookup("trefoil-").expected_jones;
  EXPECT_EQ(lookup("granny").expected_jones, tp * tp);
  EXPECT_EQ(lookup("square").expected_jones, tp * tm);
  EXPECT_EQ(lookup("trefoil+#figure8#trefoil+").expected_jones,
            tp * lookup("figure8").expected_jones * tp);
}

TEST(KnotTable, CompositeMatrixHasThreeBlocks) {
  const auto t = build_trip_matrix(lookup("trefoil+#figure8#trefoil+").code);
  EXPECT_EQ(format_matrix(t.matrix()),
            "1110000000\n1110000000\n1110000000\n"
            "0000011000\n0000011000\n0001110000\n0001101000\n"
            "0000000111\n0000000111\n0000000111\n");
}

TEST(KnotTable, MirrorPairs) {
  EXPECT_EQ(lookup("trefoil-").expected_jones, lookup("trefoil+").expected_jones.mirrored());
  EXPECT_EQ(lookup("figure8").expected_jones, lookup("figure8").expected_jones.mirrored());
  EXPECT_EQ(lookup("6_3").expected_jones, lookup("6_3").expected_jones.mirrored());
}

TEST(KnotTable, CommittedFileMatchesBake) {
  std::ifstream in(std::string(TRIP_JONES_DATA_DIR) + "/knot_table.tsv");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), serialize_table(bake_entries()));
  EXPECT_EQ(ss.str(), serialize_table(all_entries()));
}

TEST(KnotTable, SerializeParseRoundTrip) {
  std::istringstream in(serialize_table(all_entries()));
  const auto records = parse_table(in);
  ASSERT_EQ(records.size(), all_entries().size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].name, all_entries()[i].name);
    EXPECT_EQ(records[i].code, all_entries()[i].code);
    EXPECT_EQ(records[i].jones, all_entries()[i].expected_jones);
  }
}

TEST(KnotTable, ParseRejectsBadLines) {
  std::istringstream missing("name\tO1+ U1+\n");
  EXPECT_THROW(parse_table(missing), ParseError);
  std::istringstream bad_json("name\tO1+ U1+\t[{]\n");
  EXPECT_THROW(parse_table(bad_json), ParseError);
}
