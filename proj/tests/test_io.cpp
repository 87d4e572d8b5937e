#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "pslgcount/io.hpp"

using namespace pslgcount;

TEST(Io, RoundTrip) {
  Pslg g{{{0, 0}, {Rational(1, 3), Rational(-7, 2)}, {BigInt("99999999999999999999"), 1}}, {{0, 1}, {1, 2}}, true};
  std::string text = serialize_pslg(g);
  EXPECT_EQ(parse_pslg(text), g);
  EXPECT_EQ(serialize_pslg(parse_pslg(text)), text);
}

TEST(Io, AcceptsIntegerCoordinatesAndDefaultsUndirected) {
  Pslg g = parse_pslg(R"({"n":2,"points":[[0,1],["2/4","3"]],"edges":[[0,1]]})");
  EXPECT_FALSE(g.directed);
  EXPECT_EQ(g.points[1].x, Rational(1, 2));
  EXPECT_EQ(g.points[0].y, 1);
}

TEST(Io, RejectsMalformed) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"points":[],"edges":[]})",
           R"({"n":1,"points":[],"edges":[]})",
           R"({"n":1,"points":[[0]],"edges":[]})",
           R"({"n":1,"points":[["1/0",0]],"edges":[]})",
           R"({"n":2,"points":[[0,0],[1,1]],"edges":[[0,2]]})",
           R"({"n":2,"points":[[0,0],[1,1]],"edges":[[0,0]]})",
           R"({"n":2,"points":[[0,0],[1,1]],"edges":[[0,"1"]]})",
           R"({"n":1,"points":[[0.5,0]],"edges":[]})",
       })
    EXPECT_THROW(parse_pslg(bad), ParseError) << bad;
}

TEST(Io, FileRoundTrip) {
  auto path = (std::filesystem::temp_directory_path() / "pslgcount_io_test.json").string();
  Pslg g{{{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}}, false};
  write_pslg(g, path);
  EXPECT_EQ(read_pslg(path), g);
  std::remove(path.c_str());
  EXPECT_THROW(read_pslg(path), ParseError);
}
