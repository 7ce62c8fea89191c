#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mftk/dataset.h"
#include "test_util.h"

namespace mftk {
namespace {

using Raw = std::vector<std::vector<std::string>>;

FoundationSet Set(std::initializer_list<Foundation> fs) {
  FoundationSet s;
  for (auto f : fs) s.Insert(f);
  return s;
}

TEST_CASE("raw label mapping per schema") {
  CHECK(MapRawLabel("Harm", AnnotationSchema::kTwitter) == Foundation::kCare);
  CHECK(MapRawLabel("degradation", AnnotationSchema::kTwitter) == Foundation::kSanctity);
  CHECK(MapRawLabel("cheating", AnnotationSchema::kTwitter) == Foundation::kFairness);
  CHECK(MapRawLabel("betrayal", AnnotationSchema::kTwitter) == Foundation::kLoyalty);
  CHECK(MapRawLabel("subversion", AnnotationSchema::kTwitter) == Foundation::kAuthority);
  CHECK(MapRawLabel("non-moral", AnnotationSchema::kTwitter) == std::nullopt);
  CHECK(MapRawLabel("Proportionality", AnnotationSchema::kReddit) == Foundation::kFairness);
  CHECK(MapRawLabel("thin_morality", AnnotationSchema::kReddit) == std::nullopt);
  CHECK(MapRawLabel("purity", AnnotationSchema::kReddit) == Foundation::kSanctity);
  CHECK(testing::CodeOf([] { MapRawLabel("equality", AnnotationSchema::kTwitter); }) ==
        ErrorCode::kUnknownRawLabel);
  CHECK(testing::CodeOf([] { MapRawLabel("liberty", AnnotationSchema::kReddit); }) ==
        ErrorCode::kUnknownRawLabel);
}

TEST_CASE("aggregation uses the any-annotator rule") {
  const auto a = AggregateAnnotations({"t", "text", Raw{{"harm"}, {"care", "fairness"}, {"harm"}}},
                                      AnnotationSchema::kTwitter);
  CHECK(a.labels.Positives() == Set({Foundation::kCare, Foundation::kFairness}));
  CHECK_FALSE(a.labels.HasMissing());

  const auto thin = AggregateAnnotations({"r", "", Raw{{"thin morality"}}}, AnnotationSchema::kReddit);
  CHECK(thin.labels == FoundationLabels::FromSet({}));

  const auto fair = AggregateAnnotations({"r", "", Raw{{"equality"}, {"proportionality"}}},
                                         AnnotationSchema::kReddit);
  CHECK(fair.labels.Positives() == Set({Foundation::kFairness}));
  CHECK(testing::CodeOf([] { AggregateAnnotations({"x", "", Raw{}}, AnnotationSchema::kReddit); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("property: aggregation ignores annotator order") {
  Rng rng(71);
  const std::vector<std::string> vocab{"care", "harm", "fairness", "cheating", "loyalty",
                                       "betrayal", "authority", "subversion", "purity",
                                       "degradation", "non-moral"};
  for (int iter = 0; iter < 300; ++iter) {
    Raw raw(1 + rng.UniformIndex(5));
    for (auto& set : raw) {
      for (std::size_t k = 0; k < 1 + rng.UniformIndex(3); ++k) set.push_back(vocab[rng.UniformIndex(vocab.size())]);
    }
    const auto base = AggregateAnnotations({"x", "", raw}, AnnotationSchema::kTwitter);
    rng.Shuffle(std::span(raw));
    CHECK(AggregateAnnotations({"x", "", raw}, AnnotationSchema::kTwitter).labels == base.labels);
  }
}

TEST_CASE("sentence labels from overlapping highlights") {
  HighlightedArticle art;
  art.id = "a";
  art.text = std::string(200, 'x');
  art.highlights = {{{40, 120}, Foundation::kSanctity}, {{150, 160}, Foundation::kCare}};
  const std::vector<TextSpan> sentences{{0, 50}, {50, 150}, {150, 160}, {160, 200}};
  const auto out = LabelSentences(art, sentences);
  REQUIRE(out.size() == 4);
  CHECK(out[0].id == "a:0");
  CHECK(out[0].labels.Positives() == Set({Foundation::kSanctity}));
  CHECK(out[1].labels.Positives() == Set({Foundation::kSanctity}));
  CHECK(out[2].labels.Positives() == Set({Foundation::kCare}));
  CHECK(out[3].labels == FoundationLabels::FromSet({}));

  art.assigned = Set({Foundation::kSanctity});
  const auto partial = LabelSentences(art, sentences);
  CHECK(partial[3].labels[Foundation::kSanctity] == false);
  CHECK_FALSE(partial[3].labels[Foundation::kCare].has_value());

  const std::vector<TextSpan> past_end{{0, 201}};
  CHECK(testing::CodeOf([&] { LabelSentences(art, past_end); }) == ErrorCode::kSpanOutOfBounds);
  const std::vector<TextSpan> overlap{{0, 50}, {40, 60}};
  CHECK(testing::CodeOf([&] { LabelSentences(art, overlap); }) == ErrorCode::kOverlappingSpans);
}

TEST_CASE("offsets count code points") {
  HighlightedArticle art;
  art.id = "u";
  art.text = "\xC3\xA9t\xC3\xA9 ok";  // 6 code points, 8 bytes
  art.highlights = {{{5, 6}, Foundation::kCare}};
  const std::vector<TextSpan> sentences{{0, 3}, {4, 6}};
  const auto out = LabelSentences(art, sentences);
  CHECK(out[0].text == "\xC3\xA9t\xC3\xA9");
  CHECK(out[1].text == "ok");
  CHECK(out[1].labels[Foundation::kCare] == true);
}

TEST_CASE("property: adding a highlight never clears a label") {
  Rng rng(72);
  for (int iter = 0; iter < 300; ++iter) {
    HighlightedArticle art;
    art.id = "p";
    art.text = std::string(100, 'y');
    std::vector<TextSpan> sentences;
    for (std::size_t s = 0; s < 100; s += 10 + rng.UniformIndex(10)) {
      sentences.push_back({s, std::min<std::size_t>(100, s + 10)});
    }
    for (int h = 0; h < 3; ++h) {
      const std::size_t a = rng.UniformIndex(99);
      art.highlights.push_back({{a, a + 1 + rng.UniformIndex(99 - a)}, kAllFoundations[rng.UniformIndex(5)]});
    }
    const auto before = LabelSentences(art, sentences);
    const std::size_t a = rng.UniformIndex(99);
    art.highlights.push_back({{a, a + 1}, kAllFoundations[rng.UniformIndex(5)]});
    const auto after = LabelSentences(art, sentences);
    for (std::size_t s = 0; s < before.size(); ++s) {
      for (Foundation f : kAllFoundations) {
        if (*before[s].labels[f]) CHECK(*after[s].labels[f]);
      }
    }
  }
}

TEST_CASE("naive sentence splitting") {
  const auto spans = SplitSentences("One. Two?  Three!Four. ");
  REQUIRE(spans.size() == 2 + 1);
  CHECK(spans[0].start == 0);
  CHECK(spans[0].end == 4);
  CHECK(spans[1].start == 5);
  CHECK(spans[1].end == 9);
  CHECK(spans[2].start == 11);
  CHECK(spans[2].end == 22);
  CHECK(SplitSentences("   ").empty());
  CHECK(SplitSentences("no terminator").size() == 1);
}

std::vector<LabeledExample> SingleLabelCorpus(std::size_t n, std::size_t positives, Foundation f) {
  std::vector<LabeledExample> out;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledExample ex{"e" + std::to_string(i), "", FoundationLabels::FromSet({})};
    ex.labels[f] = i < positives;
    out.push_back(ex);
  }
  return out;
}

// Every index appears exactly once across the parts.
bool IsPartition(const std::vector<std::vector<std::size_t>>& parts, std::size_t n) {
  std::vector<std::size_t> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (all.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (all[i] != i) return false;
  }
  return true;
}

TEST_CASE("stratified split examples") {
  const auto corpus = SingleLabelCorpus(100, 30, Foundation::kCare);
  const auto s = StratifiedSplit(corpus, Foundation::kCare, 0.1, 5);
  CHECK(s.test.size() == 10);
  const auto pos = std::count_if(s.test.begin(), s.test.end(),
                                 [&](std::size_t i) { return *corpus[i].labels[Foundation::kCare]; });
  CHECK(pos == 3);
  CHECK(IsPartition({s.train, s.test}, 100));
  CHECK(std::is_sorted(s.test.begin(), s.test.end()));
  const auto again = StratifiedSplit(corpus, Foundation::kCare, 0.1, 5);
  CHECK(again.test == s.test);
  CHECK(testing::CodeOf([] {
          StratifiedSplit(SingleLabelCorpus(10, 10, Foundation::kCare), Foundation::kCare, 0.1, 1);
        }) == ErrorCode::kDegenerateLabels);
  CHECK(testing::CodeOf([&] { StratifiedSplit(corpus, Foundation::kCare, 1.0, 1); }) ==
        ErrorCode::kBadFractions);
}

TEST_CASE("stratified split excludes missing labels") {
  auto corpus = SingleLabelCorpus(20, 5, Foundation::kLoyalty);
  corpus[3].labels[Foundation::kLoyalty] = std::nullopt;
  const auto s = StratifiedSplit(corpus, Foundation::kLoyalty, 0.25, 2);
  CHECK(s.excluded_missing == 1);
  CHECK(s.train.size() + s.test.size() == 19);
  CHECK(std::find(s.train.begin(), s.train.end(), 3) == s.train.end());
  CHECK(std::find(s.test.begin(), s.test.end(), 3) == s.test.end());
}

TEST_CASE("property: stratified test fraction is within one example") {
  Rng rng(73);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng.UniformIndex(300);
    const std::size_t p = 1 + rng.UniformIndex(n - 1);
    const auto corpus = SingleLabelCorpus(n, p, Foundation::kFairness);
    const double f = 0.05 + 0.9 * rng.Uniform01();
    const auto s = StratifiedSplit(corpus, Foundation::kFairness, f, iter);
    CHECK(s.test.size() == static_cast<std::size_t>(std::floor(f * n + 0.5)));
    const double pos = static_cast<double>(std::count_if(s.test.begin(), s.test.end(), [&](std::size_t i) {
      return *corpus[i].labels[Foundation::kFairness];
    }));
    CHECK(std::abs(pos - static_cast<double>(s.test.size()) * p / n) <= 1.0);
    CHECK(IsPartition({s.train, s.test}, n));
  }
}

std::vector<LabeledExample> RandomMultiLabel(Rng& rng, std::size_t n,
                                             const std::array<double, 5>& prevalence) {
  std::vector<LabeledExample> out;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledExample ex{"m" + std::to_string(i), "", FoundationLabels::FromSet({})};
    for (Foundation f : kAllFoundations) ex.labels[f] = rng.Uniform01() < prevalence[Index(f)];
    out.push_back(ex);
  }
  return out;
}

// Largest |positives of f in subset j - fraction_j * positives of f|.
double MaxQuotaDeviation(const std::vector<LabeledExample>& corpus,
                         const std::vector<std::vector<std::size_t>>& parts,
                         const std::vector<double>& fractions) {
  double worst = 0.0;
  for (Foundation f : kAllFoundations) {
    double total = 0.0;
    for (const auto& ex : corpus) total += *ex.labels[f] ? 1.0 : 0.0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      double count = 0.0;
      for (std::size_t i : parts[j]) count += *corpus[i].labels[f] ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(count - fractions[j] * total));
    }
  }
  return worst;
}

TEST_CASE("iterative stratification examples") {
  Rng rng(74);
  const auto corpus = RandomMultiLabel(rng, 20, {0.5, 0.2, 0.0, 0.0, 0.0});
  const std::vector<double> half{0.5, 0.5};
  const auto parts = IterativeStratifiedSplit(corpus, half, 3);
  CHECK(IsPartition(parts, 20));
  CHECK(MaxQuotaDeviation(corpus, parts, half) <= 1.0);
  CHECK(IterativeStratifiedSplit(corpus, half, 3) == parts);

  const std::vector<double> bad{0.6, 0.5};
  CHECK(testing::CodeOf([&] { IterativeStratifiedSplit(corpus, bad, 1); }) == ErrorCode::kBadFractions);
  auto missing = corpus;
  missing[0].labels[Foundation::kCare] = std::nullopt;
  CHECK(testing::CodeOf([&] { IterativeStratifiedSplit(missing, half, 1); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("property: iterative split partitions and keeps quotas within one example") {
  Rng rng(75);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 1 + rng.UniformIndex(200);
    std::array<double, 5> prev{};
    for (auto& p : prev) p = 0.05 + 0.45 * rng.Uniform01();
    const auto corpus = RandomMultiLabel(rng, n, prev);
    std::vector<double> fractions;
    switch (rng.UniformIndex(3)) {
      case 0: fractions = {0.9, 0.1}; break;
      case 1: fractions = {0.5, 0.5}; break;
      default: fractions = {0.6, 0.2, 0.2}; break;
    }
    const auto parts = IterativeStratifiedSplit(corpus, fractions, iter);
    REQUIRE(parts.size() == fractions.size());
    CHECK(IsPartition(parts, n));
    INFO("n=" << n << " iter=" << iter);
    CHECK(MaxQuotaDeviation(corpus, parts, fractions) <= 1.0);
  }
}

TEST_CASE("single-label iterative split matches stratified proportions") {
  Rng rng(76);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 10 + rng.UniformIndex(190);
    const std::size_t p = 1 + rng.UniformIndex(n - 1);
    const auto corpus = SingleLabelCorpus(n, p, Foundation::kCare);
    const std::vector<double> fr{0.9, 0.1};
    const auto parts = IterativeStratifiedSplit(corpus, fr, iter);
    const auto s = StratifiedSplit(corpus, Foundation::kCare, 0.1, iter);
    const auto positives = [&](const std::vector<std::size_t>& idx) {
      return static_cast<double>(std::count_if(idx.begin(), idx.end(), [&](std::size_t i) {
        return *corpus[i].labels[Foundation::kCare];
      }));
    };
    CHECK(std::abs(positives(parts[1]) - positives(s.test)) <= 1.0);
  }
}

}  // namespace
}  // namespace mftk
