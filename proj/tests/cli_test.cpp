#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "shelf/cli.hpp"
#include "shelf/fixtures.hpp"
#include "shelf/io.hpp"

using namespace shelf;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "shelf");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("shelf_cli_" + std::string(
        ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    io::save_set(dir / "berman.json", 6, {fixtures::berman_tau(), fixtures::berman_sigma()});
    io::save_set(dir / "xor.json", 2, {fixtures::xor_table()});
    io::save_table(dir / "tau.json", fixtures::berman_tau());
    io::save_table(dir / "sigma.json", fixtures::berman_sigma());
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const char *name) const { return (dir / name).string(); }
  fs::path dir;
};

} // namespace

TEST_F(Cli, Validate) {
  const auto ok = run({"validate", "--set", path("berman.json")});
  EXPECT_EQ(ok.code, cli::kOk);
  const auto doc = json::parse(ok.out);
  EXPECT_TRUE(doc["distributive"]);
  EXPECT_TRUE(doc["invertible"]);

  const auto bad = run({"validate", "--set", path("xor.json")});
  EXPECT_EQ(bad.code, cli::kWitness);
  const auto w = json::parse(bad.out)["witness"]["triple"];
  EXPECT_EQ(w, (json{{"a", 0}, {"b", 0}, {"c", 1}}));
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"validate"}).code, cli::kInputError);
  EXPECT_EQ(run({"validate", "--set", path("missing.json")}).code, cli::kInputError);
  io::write_file(dir / "ragged.json", "{\"n\": 2, \"ops\": [[[0, 1], [1]]]}");
  const auto r = run({"validate", "--set", path("ragged.json")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("ops[0]"), std::string::npos);
  EXPECT_EQ(run({"fixtures", "nope"}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(Cli, ComposeAndAlpha) {
  const auto r = run({"compose", "--ops", path("tau.json"), path("tau.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(io::parse_table(r.out), right_trivial(6));

  const auto a = run({"alpha", "--op", path("tau.json")});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "1 0 3 2 5 4");

  io::save_table(dir / "const.json", make_table(2, {{0, 0}, {0, 0}}));
  EXPECT_EQ(run({"alpha", "--op", path("const.json")}).code, cli::kInputError);
}

TEST_F(Cli, CheckConjugation) {
  const auto r = run({"check-conjugation", "--ops", path("tau.json"), path("sigma.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(json::parse(r.out)["condition_holds"]);
  io::save_table(dir / "x.json", fixtures::xor_table());
  const auto bad = run({"check-conjugation", "--ops", path("x.json"), path("x.json")});
  EXPECT_EQ(bad.code, cli::kWitness);
  EXPECT_TRUE(json::parse(bad.out)["agrees_with_table_check"]);
}

TEST_F(Cli, EmbedRegular) {
  const auto out = dir / "s3";
  const auto r = run({"embed-regular", "--group", "symmetric:3", "--out", out.string()});
  EXPECT_EQ(r.code, cli::kOk);
  const auto manifest = json::parse(io::read_file(out / "manifest.json"));
  EXPECT_EQ(manifest["elements"].size(), 6u);
  for (std::size_t h = 0; h < 6; ++h)
    EXPECT_TRUE(fs::exists(out / ("element-" + std::to_string(h) + ".json")));
  EXPECT_EQ(io::load_table(out / "element-0.json"), right_trivial(6));
  EXPECT_EQ(run({"embed-regular", "--group", "cyclic:0", "--out", out.string()}).code, cli::kInputError);
}

TEST_F(Cli, Search) {
  EXPECT_EQ(run({"search", "--n", "3", "--prune", "--report", path("r3.json")}).code, cli::kOk);
  const auto doc = json::parse(io::read_file(dir / "r3.json"));
  EXPECT_EQ(doc["conclusion"], "commutative-only");
  EXPECT_FALSE(doc.contains("wall_seconds"));

  const auto seeded = run({"search", "--n", "6", "--prune", "--seed-pair", path("tau.json"), path("sigma.json"),
                           "--report", path("r6.json")});
  EXPECT_EQ(seeded.code, cli::kWitness);
  EXPECT_EQ(json::parse(io::read_file(dir / "r6.json"))["conclusion"], "nonabelian-found");

  const auto a = run({"search", "--n", "4", "--prune", "--report", "-"});
  const auto b = run({"search", "--n", "4", "--prune", "--report", "-", "--jobs", "2"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, Homology) {
  const auto r = run({"homology", "--set", path("berman.json"), "--weights", "1,-1", "--max-degree", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  const auto doc = json::parse(r.out);
  EXPECT_TRUE(doc["differential_squares_to_zero"]);
  EXPECT_EQ(doc["homology"].size(), 2u);

  EXPECT_EQ(run({"homology", "--set", path("xor.json"), "--weights", "1"}).code, cli::kWitness);
  EXPECT_EQ(run({"homology", "--set", path("berman.json"), "--weights", "1"}).code, cli::kInputError);
  EXPECT_EQ(run({"homology", "--set", path("berman.json"), "--weights", "1,-1", "--max-degree", "5", "--max-dim",
                 "100"})
                .code,
            cli::kPartial);
}

TEST_F(Cli, Fixtures) {
  const auto list = run({"fixtures", "--list"});
  EXPECT_EQ(list.code, cli::kOk);
  EXPECT_NE(list.out.find("berman-d6"), std::string::npos);
  const auto doc = run({"fixtures", "berman-d6"});
  EXPECT_EQ(doc.out, fixtures::document(fixtures::get("berman-d6")));
  io::write_file(dir / "copy.json", doc.out);
  EXPECT_EQ(run({"fixtures", "berman-d6", "--verify", path("copy.json")}).code, cli::kOk);
  io::write_file(dir / "copy.json", doc.out + " ");
  EXPECT_EQ(run({"fixtures", "berman-d6", "--verify", path("copy.json")}).code, cli::kWitness);
}
