#include <doctest.h>

#include <sstream>

#include "mftk/corpus_io.h"
#include "test_util.h"

namespace mftk {
namespace {

std::vector<CorpusRecord> Corpus(const std::string& text) {
  std::istringstream in(text);
  return ReadCorpus(in);
}

std::vector<ScoreRecord> Scores(const std::string& text) {
  std::istringstream in(text);
  return ReadScores(in);
}

std::string Written(std::span<const CorpusRecord> records) {
  std::ostringstream out;
  WriteCorpus(records, out);
  return out.str();
}

TEST_CASE("read corpus basics") {
  const auto c = Corpus(
      "# header\n"
      "{\"id\": \"a\", \"text\": \"Hello\", \"labels\": {\"care\": 1, \"loyalty\": false}, \"topic\": \"x\"}\n"
      "\n"
      "{\"id\": \"b\", \"text\": \"\"}\n");
  REQUIRE(c.size() == 2);
  CHECK(c[0].labels.has_value());
  CHECK((*c[0].labels)[Foundation::kCare] == true);
  CHECK((*c[0].labels)[Foundation::kLoyalty] == false);
  CHECK_FALSE((*c[0].labels)[Foundation::kSanctity].has_value());
  CHECK(c[0].extra["topic"] == "x");
  CHECK_FALSE(c[1].labels.has_value());
  CHECK(c[1].text.empty());
}

TEST_CASE("read corpus errors carry line numbers") {
  CHECK(testing::CodeOf([] { Corpus("{\"id\":\"a\",\"text\":\"\"}\n{\"id\":\"a\",\"text\":\"\"}\n"); }) ==
        ErrorCode::kDuplicateId);
  try {
    Corpus("{\"id\":\"a\",\"text\":\"\"}\n{\"id\":\"\",\"text\":\"x\"}\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSchemaViolation);
    CHECK(e.line() == std::optional<std::size_t>(2));
  }
  CHECK(testing::CodeOf([] { Corpus("{\"id\":\"a\",\"text\":\"\",\"labels\":{\"care\":2}}\n"); }) ==
        ErrorCode::kSchemaViolation);
  CHECK(testing::CodeOf([] { Corpus("{\"id\":\"a\",\"text\":\"\",\"labels\":{\"liberty\":1}}\n"); }) ==
        ErrorCode::kSchemaViolation);
  CHECK(testing::CodeOf([] { Corpus("not json\n"); }) == ErrorCode::kSchemaViolation);
  CHECK(testing::CodeOf([] { ReadCorpusFile("/nonexistent/corpus.jsonl"); }) == ErrorCode::kFileNotFound);
}

TEST_CASE("canonical corpus line") {
  CorpusRecord r;
  r.id = "x1";
  r.text = "caf\xC3\xA9 \"q\"";
  r.labels = FoundationLabels::FromSet({});
  (*r.labels)[Foundation::kCare] = true;
  (*r.labels)[Foundation::kSanctity] = std::nullopt;
  r.extra["zeta"] = 1;
  r.extra["alpha"] = "b";
  CHECK(CorpusLine(r) ==
        "{\"id\":\"x1\",\"text\":\"caf\xC3\xA9 \\\"q\\\"\",\"labels\":{\"authority\":0,\"care\":1,"
        "\"fairness\":0,\"loyalty\":0,\"sanctity\":null},\"zeta\":1,\"alpha\":\"b\"}");
}

TEST_CASE("property: 10k-line corpus round-trips byte-identically") {
  Rng rng(81);
  std::vector<CorpusRecord> records;
  const std::string alphabet = "abc XYZ\"\\\t\n.,!";
  for (int i = 0; i < 10000; ++i) {
    CorpusRecord r;
    r.id = "doc-" + std::to_string(i);
    for (std::size_t k = 0; k < rng.UniformIndex(40); ++k) {
      // Pick whole multi-byte sequences so the text stays valid UTF-8.
      const std::size_t pick = rng.UniformIndex(alphabet.size() + 2);
      if (pick == alphabet.size()) {
        r.text += "\xC3\xA9";
      } else if (pick == alphabet.size() + 1) {
        r.text += "\xE2\x80\x99";
      } else {
        r.text += alphabet[pick];
      }
    }
    if (rng.UniformIndex(4) != 0) {
      FoundationLabels l;
      for (Foundation f : kAllFoundations) {
        const auto v = rng.UniformIndex(3);
        if (v < 2) l[f] = v == 1;
      }
      r.labels = l;
    }
    if (rng.UniformIndex(3) == 0) r.extra["group"] = static_cast<int>(rng.UniformIndex(5));
    if (rng.UniformIndex(5) == 0) r.extra["score"] = rng.Uniform01();
    records.push_back(std::move(r));
  }
  const std::string first = Written(records);
  const auto reread = Corpus(first);
  REQUIRE(reread.size() == records.size());
  CHECK(Written(reread) == first);
  for (std::size_t i = 0; i < records.size(); i += 997) {
    CHECK(reread[i].text == records[i].text);
    CHECK(reread[i].extra == records[i].extra);
  }
}

TEST_CASE("labeled example conversion") {
  CorpusRecord r;
  r.id = "a";
  r.text = "t";
  const auto ex = ToLabeledExample(r);
  CHECK(ex.labels == FoundationLabels{});
  const auto back = FromLabeledExample(ex);
  CHECK(back.id == "a");
  CHECK(back.labels == FoundationLabels{});
}

TEST_CASE("annotation records") {
  std::istringstream in(
      "{\"id\":\"t1\",\"text\":\"x\",\"schema\":\"twitter\",\"annotations\":[[\"harm\"],[\"care\",\"fairness\"]]}\n"
      "{\"id\":\"r1\",\"text\":\"y\",\"annotations\":[[\"thin morality\"]]}\n"
      "{\"id\":\"n1\",\"text\":\"One. Two.\",\"highlights\":[{\"start\":5,\"end\":9,\"foundation\":\"care\"}],"
      "\"assigned\":[\"care\"]}\n");
  const auto records = ReadAnnotations(in);
  REQUIRE(records.size() == 3);
  const auto labeled = LabelAnnotations(records, AnnotationSchema::kReddit);
  REQUIRE(labeled.size() == 4);
  CHECK(labeled[0].labels[Foundation::kFairness] == true);
  CHECK(labeled[1].labels == FoundationLabels::FromSet({}));
  CHECK(labeled[2].id == "n1:0");
  CHECK(labeled[2].labels[Foundation::kCare] == false);
  CHECK(labeled[3].labels[Foundation::kCare] == true);
  CHECK_FALSE(labeled[3].labels[Foundation::kLoyalty].has_value());
  CHECK(testing::CodeOf([&] { LabelAnnotations(std::span(records).subspan(1, 1), std::nullopt); }) ==
        ErrorCode::kSchemaViolation);
}

TEST_CASE("read scores") {
  const auto s = Scores(
      "# mftk header\n"
      "id,foundation,score,source\n"
      "a,care,0.5,mfd\n"
      "a,loyalty,0.25,mfd\n"
      "\"b,c\",care,1e-3,mfd\n"
      "\"say \"\"hi\"\"\",care,0,mfd\n"
      "d,sanctity,-0.5,ddr\n");
  REQUIRE(s.size() == 5);
  CHECK(s[2].doc_id == "b,c");
  CHECK(s[3].doc_id == "say \"hi\"");
  CHECK(*s[2].score == 1e-3);
  CHECK(s[4].source == "ddr");

  const auto e = Scores("id,foundation,score,source,error\nx,care,,ddr,ZeroVector\n");
  CHECK_FALSE(e[0].score.has_value());
  CHECK(e[0].error == "ZeroVector");
}

TEST_CASE("read scores errors") {
  const std::string h = "id,foundation,score,source\n";
  try {
    Scores(h + "a,care,0.1,m\na,liberty,0.2,m\n");
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kUnknownFoundation);
    CHECK(err.line() == std::optional<std::size_t>(3));
  }
  CHECK(testing::CodeOf([&] { Scores(h + "a,care,nan,m\n"); }) == ErrorCode::kMalformedRow);
  CHECK(testing::CodeOf([&] { Scores(h + "a,care,abc,m\n"); }) == ErrorCode::kMalformedRow);
  CHECK(testing::CodeOf([&] { Scores(h + "a,care,0.1\n"); }) == ErrorCode::kMalformedRow);
  CHECK(testing::CodeOf([&] { Scores(h + "a,care,0.1,m\na,care,0.2,m\n"); }) == ErrorCode::kDuplicateRecord);
  CHECK(testing::CodeOf([] { Scores("id,foundation,score,source,error\na,care,0.1,m,Oops\n"); }) ==
        ErrorCode::kMalformedRow);
  CHECK(testing::CodeOf([] { Scores("doc,foundation,score,source\n"); }) == ErrorCode::kMalformedRow);
}

TEST_CASE("property: score write/read round trip keeps every bit") {
  Rng rng(82);
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 500; ++i) {
    ScoreRecord r;
    r.doc_id = i % 7 == 0 ? "id,\"" + std::to_string(i) + "\"" : "d" + std::to_string(i);
    r.foundation = kAllFoundations[i % 5];
    r.source = "s";
    if (i % 11 == 0) {
      r.error = "ZeroVector";
    } else {
      r.score = (rng.Uniform01() - 0.5) * std::pow(10.0, static_cast<double>(rng.UniformIndex(20)) - 10.0);
    }
    records.push_back(r);
  }
  std::ostringstream out;
  WriteScores(records, out, "hdr");
  CHECK(out.str().rfind("# hdr\n", 0) == 0);
  const auto back = Scores(out.str());
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].doc_id == records[i].doc_id);
    CHECK(back[i].score == records[i].score);
    CHECK(back[i].error == records[i].error);
  }
  std::ostringstream again;
  WriteScores(back, again, "hdr");
  CHECK(again.str() == out.str());
}

TEST_CASE("join scores with labels") {
  const auto corpus = Corpus(
      "{\"id\":\"c\",\"text\":\"\",\"labels\":{\"care\":1}}\n"
      "{\"id\":\"a\",\"text\":\"\",\"labels\":{\"care\":0}}\n"
      "{\"id\":\"b\",\"text\":\"\",\"labels\":{\"care\":1}}\n"
      "{\"id\":\"d\",\"text\":\"\",\"labels\":{\"loyalty\":1}}\n");
  const auto scores = Scores(
      "id,foundation,score,source\n"
      "a,care,0.1,m\nb,care,0.7,m\nc,care,0.9,m\nd,care,0.3,m\n");
  const auto j = JoinScoresLabels(scores, corpus, Foundation::kCare);
  CHECK(j.doc_ids == std::vector<std::string>{"a", "b", "c"});
  CHECK(j.set.scores == std::vector<double>{0.1, 0.7, 0.9});
  CHECK(j.set.labels == std::vector<int>{0, 1, 1});
  CHECK(j.dropped_missing_label == 1);
  CHECK(j.source == "m");

  const auto partial = Scores("id,foundation,score,source\na,care,0.1,m\nc,care,0.9,m\n");
  CHECK(testing::CodeOf([&] { JoinScoresLabels(partial, corpus, Foundation::kCare); }) ==
        ErrorCode::kMissingScore);

  auto two = scores;
  two.push_back({"a", Foundation::kCare, 0.5, "other", std::nullopt});
  CHECK(testing::CodeOf([&] { JoinScoresLabels(two, corpus, Foundation::kCare); }) ==
        ErrorCode::kAmbiguousSource);
  CHECK(JoinScoresLabels(two, corpus, Foundation::kCare, std::string("m")).set.size() == 3);

  auto with_error = scores;
  with_error[1].score.reset();
  with_error[1].error = "ZeroVector";
  const auto je = JoinScoresLabels(with_error, corpus, Foundation::kCare);
  CHECK(je.set.size() == 2);
  CHECK(je.dropped_error == 1);
}

TEST_CASE("output header and CSV quoting") {
  CHECK(OutputHeader(7, "abc") == std::string("mftk ") + MFTK_VERSION + " seed=7 config=abc");
  CHECK(OutputHeader(std::nullopt, "abc").find("seed=none") != std::string::npos);
  CHECK(QuoteCsvField("plain") == "plain");
  CHECK(QuoteCsvField("a,b") == "\"a,b\"");
  CHECK(QuoteCsvField("say \"x\"") == "\"say \"\"x\"\"\"");
}

}  // namespace
}  // namespace mftk
