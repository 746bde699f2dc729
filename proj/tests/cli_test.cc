#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "doily/catalog.hpp"
#include "doily/structure_json.hpp"
#include "doily/symmetry.hpp"
#include "verification.hpp"

namespace doily::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "doily");
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                        std::sregex_iterator()));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("doily_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hyperplanes"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hyperplanes", "--catalog", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hyperplanes", "--catalog", "fano", "--input", "x.json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "--v", "10", "--filter", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "--v", "12"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "--v", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, VerifyPaperPasses) {
  const auto r = invoke({"verify-paper", "--json", path("report.json")});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("overall: PASS"), std::string::npos);
  EXPECT_EQ(count_matches(r.out, R"(\[PASS\])"), 12);
  EXPECT_EQ(count_matches(r.out, R"(\[SKIP\])"), 2);
  EXPECT_NE(r.out.find("hyperplanes: 15"), std::string::npos);

  const auto report = nlohmann::json::parse(slurp(path("report.json")));
  EXPECT_EQ(report["overall"], true);
  ASSERT_EQ(report["claims"].size(), kClaimIds.size());
  for (std::size_t i = 0; i < kClaimIds.size(); ++i) {
    const auto& c = report["claims"][i];
    EXPECT_EQ(c["id"], kClaimIds[i]);
    for (const char* key : {"description", "expected", "observed", "pass"}) {
      EXPECT_TRUE(c.contains(key)) << kClaimIds[i] << " lacks " << key;
    }
  }
  EXPECT_EQ(report["claims"][12]["pass"], "skipped");
  EXPECT_EQ(report["claims"][1]["pass"], true);
  EXPECT_TRUE(report.contains("timings_ms"));
}

TEST_F(CliTest, CorruptedDesarguesFailsFirstClaim) {
  auto j = structure_to_json(desargues().structure);
  // Move one point so that a line no longer matches the catalog.
  j["lines"][0] = {0, 1, 9};
  write_text_file(path("bad.json"), render_json(j));
  const auto r = invoke({"verify-paper", "--desargues-input", path("bad.json"), "--json",
                         path("report.json")});
  EXPECT_EQ(r.code, kExitClaimFailure) << r.out << r.err;
  EXPECT_NE(r.out.find("first failing claim: catalog-integrity"), std::string::npos) << r.out;
  const auto report = nlohmann::json::parse(slurp(path("report.json")));
  EXPECT_EQ(report["overall"], false);
  EXPECT_EQ(report["claims"][0]["pass"], false);
}

TEST_F(CliTest, HyperplaneListings) {
  const auto d = invoke({"hyperplanes", "--catalog", "desargues", "--json", path("h.json")});
  ASSERT_EQ(d.code, kExitOk);
  EXPECT_NE(d.out.find("desargues: 15 hyperplanes (10 perp, 5 triangle, 0 other)"),
            std::string::npos)
      << d.out;
  EXPECT_EQ(count_matches(d.out, R"(\n\d+ +\d+ +(perp|triangle|other) )"), 15);
  const auto j = nlohmann::json::parse(slurp(path("h.json")));
  EXPECT_EQ(j.size(), 15u);

  const auto f = invoke({"hyperplanes", "--catalog", "fano"});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_EQ(count_matches(f.out, R"(\n\d+ +\d+ +(perp|triangle|other) )"), 7);

  // Two lines sharing two points and a third: no hyperplanes.
  write_text_file(path("free.json"),
                  R"({"name": "free", "points": 4, "lines": [[0,1],[2,3],[0,1,2,3]]})");
  const auto z = invoke({"hyperplanes", "--input", path("free.json")});
  EXPECT_EQ(z.code, kExitOk);
  EXPECT_NE(z.out.find("free: 0 hyperplanes"), std::string::npos) << z.out;
}

TEST_F(CliTest, EncodeExportRoundTrip) {
  const auto r = invoke({"encode", "--check-isomorphism", "--export", path("derived.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("15 points / 15 lines, 3 points per line, 3 lines per point"),
            std::string::npos);
  EXPECT_NE(r.out.find("35 (15 accepted, 20 rejected"), std::string::npos);
  EXPECT_NE(r.out.find("isomorphic to doily"), std::string::npos);
  const auto loaded = load_structure(path("derived.json"));
  EXPECT_EQ(loaded.structure.num_points(), 15);
  EXPECT_EQ(loaded.structure.num_lines(), 15);
  EXPECT_TRUE(find_isomorphism(loaded.structure, doily().structure).has_value());
}

TEST_F(CliTest, EnumerateOutputs) {
  const auto all = invoke({"enumerate", "--v", "10", "--json", path("c.json")});
  ASSERT_EQ(all.code, kExitOk);
  EXPECT_NE(all.out.find("v=10: 10 classes"), std::string::npos);
  EXPECT_EQ(count_matches(all.out, "  v3-10-"), 10);
  EXPECT_EQ(count_matches(all.out, "isomorphic-to=desargues"), 1);
  EXPECT_EQ(nlohmann::json::parse(slurp(path("c.json"))).size(), 10u);

  for (const char* filter : {"flag-transitive", "noncollinear-line"}) {
    const auto r = invoke({"enumerate", "--v", "10", "--filter", filter});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find(std::string("1 class matches --filter ") + filter), std::string::npos)
        << r.out;
    EXPECT_EQ(count_matches(r.out, "  v3-10-"), 1);
    EXPECT_EQ(count_matches(r.out, "isomorphic-to=desargues"), 1);
  }
  const auto seven = invoke({"enumerate", "--v", "7"});
  EXPECT_NE(seven.out.find("v=7: 1 class\n"), std::string::npos);
  EXPECT_NE(seven.out.find("isomorphic-to=fano"), std::string::npos);
}

TEST_F(CliTest, ExportDot) {
  ASSERT_EQ(invoke({"export", "--catalog", "desargues", "--format", "dot", "--out",
                    path("d.dot")})
                .code,
            kExitOk);
  const auto d = slurp(path("d.dot"));
  EXPECT_EQ(count_matches(d, R"(\[shape=(circle|box))"), 20);
  EXPECT_EQ(count_matches(d, " -- "), 30);
  ASSERT_EQ(invoke({"export", "--catalog", "doily", "--format", "dot", "--out", path("g.dot")})
                .code,
            kExitOk);
  const auto g = slurp(path("g.dot"));
  EXPECT_EQ(count_matches(g, R"(\[shape=(circle|box))"), 30);
  EXPECT_EQ(count_matches(g, " -- "), 45);
}

TEST_F(CliTest, ExportJsonIsAFixpoint) {
  ASSERT_EQ(invoke({"export", "--catalog", "desargues", "--format", "json", "--out",
                    path("a.json")})
                .code,
            kExitOk);
  ASSERT_EQ(invoke({"export", "--input", path("a.json"), "--format", "json", "--out",
                    path("b.json")})
                .code,
            kExitOk);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(load_structure(path("a.json")).structure, desargues().structure);
}

TEST_F(CliTest, ExportErrors) {
  EXPECT_EQ(invoke({"export", "--catalog", "fano", "--format", "svg", "--out", path("x")}).code,
            kExitUsage);
  write_text_file(path("broken.json"), "{\"points\": 3, \"lines\": [[0, 1, 7]]}");
  EXPECT_EQ(invoke({"export", "--input", path("broken.json"), "--format", "json", "--out",
                    path("y.json")})
                .code,
            kExitUsage);
  write_text_file(path("garbage.json"), "not json");
  EXPECT_EQ(invoke({"hyperplanes", "--input", path("garbage.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"hyperplanes", "--input", path("missing.json")}).code, kExitUsage);
}

}  // namespace
}  // namespace doily::cli
