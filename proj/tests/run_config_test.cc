#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "mftk/run_config.h"
#include "test_util.h"

namespace mftk {
namespace {

std::vector<ConfigEntry> Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseConfig(in);
}

TEST_CASE("config grammar") {
  const auto e = Parse(
      "# comment\n"
      "\n"
      "method = mfd2\n"
      "  out_csv=\"a b.csv\"  \n"
      "model = m1.json\n"
      "model = m2.json\n");
  REQUIRE(e.size() == 4);
  CHECK(e[0].key == "method");
  CHECK(e[0].value == "mfd2");
  CHECK(e[0].line == 3);
  CHECK(e[1].key == "out-csv");
  CHECK(e[1].value == "a b.csv");
  CHECK(e[3].value == "m2.json");

  try {
    Parse("a = 1\nno equals here\n");
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kMalformedLine);
    CHECK(err.line() == std::optional<std::size_t>(2));
  }
  CHECK(testing::CodeOf([] { Parse("Bad Key = 1\n"); }) == ErrorCode::kMalformedLine);
  CHECK(testing::CodeOf([] { Parse("= 1\n"); }) == ErrorCode::kMalformedLine);
}

TEST_CASE("command-line flags win over config entries") {
  const auto e = Parse("method = mfd\nout = cfg.csv\nhaldane = yes\nmodel = a\nmodel = b\n");
  const auto merged = MergeConfigIntoArgs({"score", "--method", "ddr"}, e, {"haldane"});
  CHECK(merged == std::vector<std::string>{"score", "--method", "ddr", "--out", "cfg.csv",
                                           "--haldane", "--model", "a", "--model", "b"});
  const auto eq_form = MergeConfigIntoArgs({"score", "--out=x"}, e, {"haldane"});
  CHECK(std::count(eq_form.begin(), eq_form.end(), "--out") == 0);
  const auto off = MergeConfigIntoArgs({}, Parse("haldane = false\n"), {"haldane"});
  CHECK(off.empty());
}

TEST_CASE("config hash is stable and order independent") {
  RunConfig a;
  a.command = "score";
  a.Set("method", "mfd2");
  a.Set("lexicon", "x.tsv");
  RunConfig b;
  b.command = "score";
  b.Set("lexicon", "x.tsv");
  b.Set("method", "mfd2");
  CHECK(a.Canonical() == b.Canonical());
  CHECK(a.Hash() == b.Hash());
  CHECK(a.Hash().size() == 16);
  b.Set("seed", "1");
  CHECK(a.Hash() != b.Hash());
  RunConfig c = a;
  c.command = "train";
  CHECK(a.Hash() != c.Hash());
}

TEST_CASE("fnv-1a reference values") {
  CHECK(Fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(Fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(Fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("missing inputs are reported before work starts") {
  testing::TempDir dir;
  RunConfig r;
  r.AddInput(dir.Write("present.txt", "x"));
  r.CheckInputsExist();
  r.AddInput(dir.File("absent.txt"));
  CHECK(testing::CodeOf([&] { r.CheckInputsExist(); }) == ErrorCode::kFileNotFound);
}

}  // namespace
}  // namespace mftk
