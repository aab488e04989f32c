#include "cantor/io.hpp"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "cantor/cantor.hpp"

using namespace cantor;
namespace fs = std::filesystem;

namespace {

const fs::path kData = CANTOR_DATA_DIR;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("cantor_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ParseDigits, Basics) {
  EXPECT_EQ(io::parse_digits("1,2,0"), (std::vector<Digit>{1, 2, 0}));
  EXPECT_TRUE(io::parse_digits("").empty());
  EXPECT_EQ(io::parse_digits(" 3 , 4 "), (std::vector<Digit>{3, 4}));
  EXPECT_EQ(kind_of([] { io::parse_digits("1,,2"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_digits("1,x"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_digits("-1"); }), ErrorKind::Parse);
}

TEST(Radix, JsonRoundTrip) {
  const RadixSystem sys({5, 2, 7}, {2});
  EXPECT_EQ(io::radix_from_json(io::radix_to_json(sys)), sys);
  EXPECT_EQ(io::load_radix(kData / "systems" / "mixed527.json"), sys);
  EXPECT_EQ(io::load_radix(kData / "systems" / "sys23.json"), RadixSystem({}, {2, 3}));
  EXPECT_EQ(io::radix_from_json(nlohmann::json::parse(R"({"period":[3]})")), RadixSystem({}, {3}));
  EXPECT_EQ(kind_of([] { io::radix_from_json(nlohmann::json::parse(R"({"preperiod":[2]})")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::radix_from_json(nlohmann::json::parse(R"({"period":["a"]})")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::load_radix(kData / "no-such-file.json"); }), ErrorKind::Parse);
}

TEST(Clopen, JsonRoundTrip) {
  const RadixSystem sys({}, {2, 3});
  const std::vector<LevelPoint> pts{LevelPoint(sys, {0, 1}), LevelPoint(sys, {0, 2}), LevelPoint(sys, {1, 2})};
  const auto s = ClopenSet::from_prefixes(sys, 2, pts);
  const auto j = io::clopen_to_json(s);
  EXPECT_EQ(j.dump(), R"([{"hi":[0,2],"level":2,"lo":[0,1]},{"hi":[1,2],"level":2,"lo":[1,2]}])");
  EXPECT_EQ(io::clopen_from_json(j, sys).intervals(), s.intervals());
  EXPECT_TRUE(io::clopen_from_json(nlohmann::json::array(), sys, 3).is_empty());
}

TEST(Clopen, MixedLevelsAreUnioned) {
  const RadixSystem sys({}, {2, 3});
  const auto j = nlohmann::json::parse(R"([{"lo":[0],"hi":[0],"level":1},{"lo":[1,2],"hi":[1,2],"level":2}])");
  const auto s = io::clopen_from_json(j, sys);
  EXPECT_EQ(s.level(), 2u);
  EXPECT_EQ(haar_measure(s), BigRational(2, 3));
  const auto bad = nlohmann::json::parse(R"([{"lo":[1],"hi":[0],"level":1}])");
  EXPECT_THROW(io::clopen_from_json(bad, sys), Error);
  const auto too_long = nlohmann::json::parse(R"([{"lo":[0,0],"hi":[0,1],"level":1}])");
  EXPECT_THROW(io::clopen_from_json(too_long, sys), Error);
}

TEST(Group, TextRoundTrip) {
  const auto d4 = dihedral_group(4);
  EXPECT_EQ(io::parse_group(io::format_group(d4)), d4);
  EXPECT_EQ(io::parse_group("2 0\n0 1\n1 0\n"), cyclic_group(2));
  EXPECT_EQ(kind_of([] { io::parse_group("2 0\n0 1\n1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_group("2 0\n0 1\n1 0\n7"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_group("x"); }), ErrorKind::Parse);
  const auto f = io::parse_hom("0 1 0 1", cyclic_group(4), cyclic_group(2));
  EXPECT_EQ(f.map(), (std::vector<Element>{0, 1, 0, 1}));
  EXPECT_EQ(io::format_hom(f), "0 1 0 1\n");
  EXPECT_EQ(kind_of([] { io::parse_hom("0 1 0", cyclic_group(4), cyclic_group(2)); }), ErrorKind::Parse);
}

TEST(Tower, LoadsShippedTowers) {
  const std::vector<std::pair<std::string, std::vector<Digit>>> expected{
      {"z4tower", {2, 2}}, {"d4tower", {2, 4}}, {"z12tower", {3, 2, 2}}, {"q8tower", {2, 4}}};
  for (const auto& [name, radices] : expected) {
    const Tower t = io::load_tower(kData / "towers" / name);
    EXPECT_EQ(abelianize_tower(t).preperiod(), radices) << name;
  }
}

TEST(Tower, SaveThenLoad) {
  const auto dir = scratch_dir("save");
  const Tower t({cyclic_group(3), cyclic_group(6), cyclic_group(12)}, {cyclic_reduction(6, 3), cyclic_reduction(12, 6)});
  io::save_tower(t, dir);
  EXPECT_TRUE(fs::exists(dir / "tower.json"));
  EXPECT_TRUE(fs::exists(dir / "level3.grp"));
  EXPECT_TRUE(fs::exists(dir / "step2.hom"));
  const Tower back = io::load_tower(dir);
  ASSERT_EQ(back.levels().size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back.levels()[k], t.levels()[k]);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(back.steps()[k].map(), t.steps()[k].map());
  fs::remove_all(dir);
}

TEST(Tower, BrokenManifest) {
  const auto dir = scratch_dir("broken");
  std::ofstream(dir / "tower.json") << R"({"levels": ["missing.grp"], "steps": []})";
  EXPECT_EQ(kind_of([&] { io::load_tower(dir); }), ErrorKind::Parse);
  std::ofstream(dir / "tower.json") << "not json";
  EXPECT_EQ(kind_of([&] { io::load_tower(dir); }), ErrorKind::Parse);
  fs::remove_all(dir);
}
