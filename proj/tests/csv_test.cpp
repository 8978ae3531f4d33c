#include <gtest/gtest.h>

#include <sstream>

#include "transit/csv.hpp"
#include "transit/errors.hpp"

using transit::read_csv;

namespace {

transit::CsvTable parse(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in, "t.csv");
}

}  // namespace

TEST(Csv, QuotedFieldsWithCommasQuotesAndNewlines) {
  const auto t = parse("a,b\n\"x,1\",\"say \"\"hi\"\"\"\n\"two\nlines\",z\n");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "x,1");
  EXPECT_EQ(t.rows[0][1], "say \"hi\"");
  EXPECT_EQ(t.rows[1][0], "two\nlines");
  EXPECT_EQ(t.lines[0], 2u);
  EXPECT_EQ(t.lines[1], 3u);
}

TEST(Csv, CrlfBomAndBlankLines) {
  const auto t = parse("\xEF\xBB\xBFid,v\r\n1,2\r\n\r\n3,4\r\n");
  EXPECT_EQ(t.header, (std::vector<std::string>{"id", "v"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1][1], "4");
  EXPECT_EQ(t.lines[1], 4u);
}

TEST(Csv, MissingTrailingNewlineAndEmptyFields) {
  const auto t = parse("a,b,c\n,,\n1,,3");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], (std::vector<std::string>{"", "", ""}));
  EXPECT_EQ(t.rows[1][2], "3");
}

TEST(Csv, FieldCountMismatchReportsLine) {
  try {
    parse("a,b\n1,2\n1,2,3\n");
    FAIL();
  } catch (const transit::InputError& e) {
    EXPECT_EQ(e.kind(), transit::ErrorKind::BadValue);
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.file(), "t.csv");
  }
}

TEST(Csv, EmptyInputHasNoHeader) {
  try {
    parse("");
    FAIL();
  } catch (const transit::InputError& e) {
    EXPECT_EQ(e.kind(), transit::ErrorKind::MissingColumn);
  }
}

TEST(Csv, MissingColumnLookup) {
  const auto t = parse("a,b\n1,2\n");
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_FALSE(t.find_column("c").has_value());
  EXPECT_THROW(t.column("c"), transit::InputError);
}

TEST(Csv, WriterRoundTrip) {
  const std::vector<std::vector<std::string>> rows{
      {"id", "text"}, {"1", "plain"}, {"2", "a,b"}, {"3", "q\"uote"}, {"4", "new\nline"}, {"5", ""}};
  std::ostringstream out;
  for (const auto& r : rows) transit::write_csv_row(out, r);
  const auto t = parse(out.str());
  EXPECT_EQ(t.header, rows[0]);
  ASSERT_EQ(t.rows.size(), rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(t.rows[i - 1], rows[i]);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}
