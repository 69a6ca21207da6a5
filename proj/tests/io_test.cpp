#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "shelf/fixtures.hpp"
#include "shelf/io.hpp"
#include "test_support.hpp"

using namespace shelf;
namespace fs = std::filesystem;

namespace {

std::string error_of(auto &&fn) {
  try {
    fn();
  } catch (const io::SchemaError &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(Io, TableRoundTrip) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 50; ++i) {
    const OpTable op = oracle::random_table(rng, 1 + i % 7);
    const std::string text = io::dump_table(op);
    EXPECT_EQ(io::parse_table(text), op);
    EXPECT_EQ(io::dump_table(io::parse_table(text)), text);
  }
}

TEST(Io, TableLayout) {
  EXPECT_EQ(io::dump_table(make_table(2, {{1, 1}, {0, 0}})),
            "{\n  \"n\": 2,\n  \"table\": [\n    [1, 1],\n    [0, 0]\n  ]\n}\n");
}

TEST(Io, SetRoundTrip) {
  const std::vector<OpTable> ops{fixtures::berman_tau(), fixtures::berman_sigma()};
  const auto family = io::parse_set(io::dump_set(6, ops));
  EXPECT_EQ(family.n, 6u);
  EXPECT_EQ(family.ops, ops);
  const auto empty = io::parse_set(io::dump_set(3, {}));
  EXPECT_EQ(empty.n, 3u);
  EXPECT_TRUE(empty.ops.empty());
}

TEST(Io, SchemaErrorsNameTheField) {
  // six rows, one of them five long
  std::string ragged = "{\"n\": 6, \"table\": [[0,0,0,0,0,0],[1,1,1,1,1,1],[2,2,2,2,2,2],"
                       "[3,3,3,3,3],[4,4,4,4,4,4],[5,5,5,5,5,5]]}";
  EXPECT_NE(error_of([&] { io::parse_table(ragged); }).find("table[3]"), std::string::npos);
  EXPECT_NE(error_of([&] { io::parse_table("{\"n\": 2, \"table\": [[0, 7], [1, 1]]}"); }).find("table[0][1]"),
            std::string::npos);
  EXPECT_NE(error_of([&] { io::parse_table("{\"table\": [[0]]}"); }).find("n"), std::string::npos);
  EXPECT_NE(error_of([&] { io::parse_table("{\"n\": 1, \"table\": [[0]"); }).find("line"), std::string::npos);
  EXPECT_NE(error_of([&] { io::parse_set("{\"n\": 1, \"ops\": [[[0]], [[1]]]}"); }).find("ops[1]"),
            std::string::npos);
  EXPECT_THROW(io::parse_table("[]"), io::SchemaError);
  EXPECT_THROW(io::parse_table("{\"n\": -1, \"table\": []}"), io::SchemaError);
}

TEST(Io, Groups) {
  const FiniteGroup s3 = symmetric(3);
  EXPECT_EQ(io::parse_group(io::dump_group(s3)), s3);
  EXPECT_EQ(io::resolve_group("cyclic:4"), cyclic(4));
  EXPECT_EQ(io::resolve_group("dihedral:3"), dihedral(3));
  EXPECT_EQ(io::resolve_group("symmetric:3"), s3);
  EXPECT_THROW(io::resolve_group("cyclic:x"), std::invalid_argument);
  EXPECT_THROW(io::parse_group("{\"m\": 2, \"mul\": [[0,1],[1,1]], \"identity\": 0}"), io::SchemaError);

  const fs::path dir = fs::temp_directory_path() / "shelf_io_test";
  fs::create_directories(dir);
  io::write_file(dir / "d4.json", io::dump_group(dihedral(4)));
  EXPECT_EQ(io::resolve_group((dir / "d4.json").string()), dihedral(4));
  EXPECT_THROW(io::load_group(dir / "missing.json"), std::runtime_error);
  fs::remove_all(dir);
}

TEST(Io, Files) {
  const fs::path dir = fs::temp_directory_path() / "shelf_io_files";
  fs::create_directories(dir);
  io::save_table(dir / "t.json", fixtures::berman_sigma());
  EXPECT_EQ(io::load_table(dir / "t.json"), fixtures::berman_sigma());
  io::save_set(dir / "s.json", 2, {right_trivial(2), fixtures::xor_table()});
  EXPECT_EQ(io::load_set(dir / "s.json").ops[1], fixtures::xor_table());
  fs::remove_all(dir);
}

TEST(Fixtures, BundledFilesMatchChecksums) {
  for (const auto &f : fixtures::all()) {
    const std::string on_disk = io::read_file(fs::path(SHELF_SOURCE_DIR) / "fixtures" / (f.name + ".json"));
    EXPECT_EQ(on_disk, fixtures::document(f)) << f.name;
    EXPECT_EQ(fixtures::checksum(on_disk), fixtures::checksum(fixtures::document(f)));
    EXPECT_NO_THROW(fixtures::revalidate(f));
  }
  EXPECT_EQ(fixtures::checksum(""), "cbf29ce484222325");
  EXPECT_THROW(fixtures::get("nope"), std::invalid_argument);
}

TEST(Fixtures, BermanMatricesAreBundledExactly) {
  const auto &f = fixtures::get("berman-d6");
  EXPECT_TRUE(f.distributive);
  ASSERT_EQ(f.ops.size(), 2u);
  EXPECT_EQ(f.ops[0], fixtures::berman_tau());
  EXPECT_EQ(f.ops[1], fixtures::berman_sigma());
  EXPECT_FALSE(fixtures::get("xor").distributive);
}
