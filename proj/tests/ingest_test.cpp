#include <gtest/gtest.h>

#include <sstream>

#include "transit/errors.hpp"
#include "transit/ingest.hpp"

using namespace transit;

namespace {

std::vector<Station> stations(const std::string& text) {
  std::istringstream in(text);
  return parse_stations(in, "stations.csv");
}

const std::string kStations =
    "id,name,borough,region,lines\n"
    "a,Alpha,North,1,red|blue\n"
    "b,Beta,North,2,red\n"
    "c,Gamma,South,,red | blue | red\n";

std::vector<LineBranch> branches(const std::string& text) {
  std::istringstream in(text);
  return parse_line_branches(in, "branches.csv", stations(kStations));
}

std::vector<AccessibilityRecord> access(const std::string& text) {
  std::istringstream in(text);
  return parse_accessibility(in, "access.csv", stations(kStations));
}

std::vector<BoroughRecord> boroughs(const std::string& text) {
  std::istringstream in(text);
  return parse_borough_table(in, "boroughs.csv");
}

// Runs fn and returns the InputError it raised.
template <class Fn>
InputError input_error(Fn&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e;
  }
  ADD_FAILURE() << "no InputError thrown";
  return InputError(ErrorKind::InvariantViolation, "", 0, "");
}

}  // namespace

TEST(Stations, ParsesAndSortsById) {
  const auto s = stations(
      "id,name,borough,region,lines\n"
      "z,Zed,B,3,x\n"
      "a,Ay,B,,x|y\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].id, "a");
  EXPECT_FALSE(s[0].region.has_value());
  EXPECT_EQ(s[0].lines, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s[1].region, 3);
}

TEST(Stations, LinesAreTrimmedAndDeduplicated) {
  const auto s = stations(kStations);
  EXPECT_EQ(s[2].lines, (std::vector<std::string>{"red", "blue"}));
}

TEST(Stations, DuplicateIdCitesBothLines) {
  const auto e = input_error([] { stations("id,name,borough,region,lines\na,A,B,1,x\na,A,B,1,x\n"); });
  EXPECT_EQ(e.kind(), ErrorKind::DuplicateId);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_NE(e.detail().find("line 2"), std::string::npos);
}

TEST(Stations, Errors) {
  EXPECT_EQ(input_error([] { stations("id,name,borough,region,lines\na,A,B,1,\n"); }).kind(),
            ErrorKind::EmptyLineSet);
  EXPECT_EQ(input_error([] { stations("id,name,borough,region,lines\na,A,B,1, | \n"); }).kind(),
            ErrorKind::EmptyLineSet);
  EXPECT_EQ(input_error([] { stations("id,name,borough,region,lines\na,A,B,0,x\n"); }).kind(),
            ErrorKind::BadValue);
  EXPECT_EQ(input_error([] { stations("id,name,borough,region,lines\na,A,B,two,x\n"); }).kind(),
            ErrorKind::BadValue);
  EXPECT_EQ(input_error([] { stations("id,name,borough,lines\na,A,B,x\n"); }).kind(),
            ErrorKind::MissingColumn);
  EXPECT_EQ(input_error([] { stations(""); }).kind(), ErrorKind::MissingColumn);
  EXPECT_EQ(input_error([] { stations("id,name,borough,region,lines\n,A,B,1,x\n"); }).kind(),
            ErrorKind::BadValue);
}

TEST(Stations, MissingFileIsIo) {
  EXPECT_EQ(input_error([] { parse_stations(std::filesystem::path("/nonexistent/stations.csv")); }).kind(),
            ErrorKind::Io);
}

TEST(Branches, InterleavedRowsGroupByBranch) {
  const auto b = branches(
      "line_id,branch_id,seq,station_id\n"
      "red,west,1,a\n"
      "red,east,1,c\n"
      "red,west,2,b\n"
      "red,east,5,b\n");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].branch_id, "east");
  EXPECT_EQ(b[0].stations, (std::vector<std::string>{"c", "b"}));
  EXPECT_EQ(b[1].stations, (std::vector<std::string>{"a", "b"}));
}

TEST(Branches, Errors) {
  const std::string h = "line_id,branch_id,seq,station_id\n";
  EXPECT_EQ(input_error([&] { branches(h + "red,m,1,a\nred,m,2,zz\n"); }).kind(), ErrorKind::UnknownStationRef);
  const auto nm = input_error([&] { branches(h + "red,m,1,a\nred,m,3,b\nred,m,2,c\n"); });
  EXPECT_EQ(nm.kind(), ErrorKind::NonMonotoneSequence);
  EXPECT_EQ(nm.line(), 4u);
  EXPECT_EQ(input_error([&] { branches(h + "red,m,1,a\nred,m,1,b\n"); }).kind(), ErrorKind::NonMonotoneSequence);
  EXPECT_EQ(input_error([&] { branches(h + "red,m,1,a\nred,m,2,b\nred,m,3,a\n"); }).kind(),
            ErrorKind::RepeatedStation);
  EXPECT_EQ(input_error([&] { branches(h + "red,m,1,a\nred,n,1,b\nred,n,2,c\n"); }).kind(),
            ErrorKind::BranchTooShort);
  EXPECT_EQ(input_error([&] { branches(h + "red,m,0,a\nred,m,1,b\n"); }).kind(), ErrorKind::BadValue);
  EXPECT_EQ(input_error([&] { branches(h + "red,m,x,a\nred,m,1,b\n"); }).kind(), ErrorKind::BadValue);
}

TEST(Access, ParsesModesAndDefaultsToNone) {
  const auto a = access("station_id,line_id,mode\nb,red,one_way\na,red,full\na,blue,none\n");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0].line_id, "blue");
  const AccessIndex idx(a);
  EXPECT_TRUE(idx.full("a", "red"));
  EXPECT_EQ(idx.mode("b", "red"), AccessMode::OneWay);
  EXPECT_EQ(idx.mode("c", "red"), AccessMode::None);
}

TEST(Access, Errors) {
  const std::string h = "station_id,line_id,mode\n";
  EXPECT_EQ(input_error([&] { access(h + "a,red,partial\n"); }).kind(), ErrorKind::BadMode);
  EXPECT_EQ(input_error([&] { access(h + "zz,red,full\n"); }).kind(), ErrorKind::UnknownStationRef);
  const auto dup = input_error([&] { access(h + "a,red,full\na,red,none\n"); });
  EXPECT_EQ(dup.kind(), ErrorKind::DuplicateRecord);
  EXPECT_EQ(dup.line(), 3u);
}

TEST(Boroughs, OptionalRidershipColumns) {
  const auto b = boroughs(
      "borough,median_income_k,daytime_total,daytime_workers,weekday_ridership\n"
      "West,40.5,1000,300,\n"
      "East,30,2000,500,12345\n");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].borough, "East");
  EXPECT_EQ(b[0].weekday_ridership, 12345.0);
  EXPECT_FALSE(b[1].weekday_ridership.has_value());
  EXPECT_FALSE(b[0].weekend_ridership.has_value());
}

TEST(Boroughs, Errors) {
  const std::string h = "borough,median_income_k,daytime_total,daytime_workers\n";
  EXPECT_EQ(input_error([&] { boroughs(h + "W,40,-1,0\n"); }).kind(), ErrorKind::NegativeCount);
  EXPECT_EQ(input_error([&] { boroughs(h + "W,40,10,20\n"); }).kind(), ErrorKind::NegativeCount);
  EXPECT_EQ(input_error([&] { boroughs(h + "W,40,10,5\nW,41,10,5\n"); }).kind(), ErrorKind::DuplicateRecord);
  EXPECT_EQ(input_error([&] { boroughs(h + "W,abc,10,5\n"); }).kind(), ErrorKind::BadValue);
  EXPECT_EQ(input_error([&] { boroughs("borough,median_income_k\nW,1\n"); }).kind(), ErrorKind::MissingColumn);
}

TEST(Ingest, WritersRoundTrip) {
  const auto s = stations(kStations);
  std::ostringstream so;
  write_stations(so, s);
  EXPECT_EQ(stations(so.str()), s);

  const auto b = branches("line_id,branch_id,seq,station_id\nred,m,1,a\nred,m,2,b\nblue,m,1,a\nblue,m,2,c\n");
  std::ostringstream bo;
  write_line_branches(bo, b);
  EXPECT_EQ(branches(bo.str()), b);

  const auto a = access("station_id,line_id,mode\na,red,full\nb,red,one_way\nc,blue,none\n");
  std::ostringstream ao;
  write_accessibility(ao, a);
  EXPECT_EQ(access(ao.str()), a);

  const auto br = boroughs(
      "borough,median_income_k,daytime_total,daytime_workers,weekday_ridership,weekend_ridership\n"
      "\"North, Upper\",40.25,1000,300,10,\nSouth,30,2000,500,,7\n");
  std::ostringstream bro;
  write_borough_table(bro, br);
  EXPECT_EQ(boroughs(bro.str()), br);
}

TEST(Ingest, FixturesLoad) {
  for (const char* city : {"london", "nyc", "london_tube"}) {
    const auto paths = dataset_in(std::filesystem::path(TRANSIT_DATA_DIR) / city);
    const auto d = load_dataset(paths);
    EXPECT_FALSE(d.stations.empty()) << city;
    EXPECT_FALSE(d.branches.empty()) << city;
    EXPECT_FALSE(d.access.empty()) << city;
    EXPECT_EQ(d.boroughs.empty(), !paths.boroughs.has_value()) << city;
  }
}
