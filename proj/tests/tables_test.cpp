#include <gtest/gtest.h>

#include <string>

#include "nht/tables.hpp"

using namespace nht;

TEST(PublishedTables, EveryKeyIsChecked) {
  const auto checks = published_table_checks();
  std::size_t ortho = 0;
  std::size_t pairs = 0;
  for (const auto& c : checks) {
    if (c.kind == "orthogonality") ++ortho;
    if (c.kind == "transform-pair") ++pairs;
  }
  EXPECT_EQ(ortho, 14U);
  EXPECT_EQ(pairs, 9U);
}

TEST(PublishedTables, OnlyThePrintedMod19RowFails) {
  for (const auto& c : published_table_checks()) {
    if (c.label == "16pt-table-row1") {
      EXPECT_FALSE(c.pass);
      EXPECT_EQ(c.detail, "r=[1,1,10,17,1]");
    } else {
      EXPECT_TRUE(c.pass) << c.label << ' ' << c.detail;
    }
  }
}

TEST(PublishedTables, Mod19RowWithSwappedEntriesIsValid) {
  // Exchanging the sixth and seventh printed coefficients yields a valid key.
  EXPECT_TRUE(verify_solution(NhtSpec(Modulus(19), {11, 14, 7, 13, 16, 8, 4, 2})).valid());
}

TEST(PublishedTables, RegeneratesRowTwoPair) {
  for (const auto& c : published_table_checks()) {
    if (c.label == "14pt-pair-row2") EXPECT_EQ(c.detail, "g=11 16 23 4 18 9 6 17 12 5 24 10 19 22");
  }
}

TEST(PublishedTables, CsvLayout) {
  const auto csv = table_checks_csv({{"orthogonality", "x", 7, true, "r=[1,0]"}});
  EXPECT_EQ(csv, "kind,label,modulus,result,detail\northogonality,x,7,pass,r=[1,0]\n");
}
