#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mftk/ddr.h"
#include "test_util.h"

namespace mftk {
namespace {

EmbeddingTable Table(const std::string& text) {
  std::istringstream in(text);
  return LoadEmbeddings(in);
}

TokenizedDoc Doc(std::vector<std::string> tokens) {
  TokenizedDoc d;
  d.doc_id = "d";
  d.lemmas = tokens;
  d.tokens = std::move(tokens);
  return d;
}

std::vector<double> Vec(std::span<const double> s) { return {s.begin(), s.end()}; }

TEST_CASE("embedding loading") {
  const auto t = Table("a 1.0 0.0\nb 0.0 1.0\n");
  CHECK(t.dimension() == 2);
  CHECK(t.size() == 2);
  CHECK(Vec(t.Find("b")) == std::vector<double>{0.0, 1.0});
  CHECK(t.Find("zzz").empty());
  CHECK(testing::CodeOf([] { Table("a 1 0\nb 0 1\nc 1 2 3\n"); }) ==
        ErrorCode::kInconsistentDimension);
}

TEST_CASE("embedding write/load round trip is byte-exact") {
  Rng rng(31);
  std::ostringstream src;
  for (int i = 0; i < 10; ++i) {
    src << "w" << i;
    for (int k = 0; k < 4; ++k) src << ' ' << (rng.Uniform01() * 2.0 - 1.0) / 3.0;
    src << '\n';
  }
  const auto t = Table(src.str());
  CHECK(t.size() == 10);
  std::ostringstream once;
  WriteEmbeddings(t, once);
  const auto t2 = Table(once.str());
  std::ostringstream twice;
  WriteEmbeddings(t2, twice);
  CHECK(once.str() == twice.str());
  for (const auto& w : t.words()) CHECK(Vec(t.Find(w)) == Vec(t2.Find(w)));
}

TEST_CASE("centroid examples") {
  const auto t = Table("w 2 0\nw1 1 1\nw2 1 -1\n");
  const std::vector<std::string> one{"w"}, two{"w1", "w2"}, oov{"w", "oov"};
  CHECK(Centroid(one, t) == std::vector<double>{2.0, 0.0});
  CHECK(Centroid(two, t) == std::vector<double>{1.0, 0.0});
  CHECK(Centroid(oov, t) == std::vector<double>{1.0, 0.0});
  CHECK(testing::CodeOf([&] { Centroid(std::vector<std::string>{}, t); }) ==
        ErrorCode::kEmptyWordList);
}

TEST_CASE("cosine examples") {
  const std::vector<double> x{1, 0}, y{0, 1}, d{1, 1}, z{0, 0};
  CHECK(CosineSimilarity(x, y) == 0.0);
  CHECK(CosineSimilarity(d, x) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(CosineSimilarity(d, d) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(testing::CodeOf([&] { CosineSimilarity(z, x); }) == ErrorCode::kZeroVector);
}

TEST_CASE("ddr score examples") {
  const auto t = Table("good 1 0\nkind 1 0\nbad 0 1\nmixed 1 1\n");
  const SeedSet care(Foundation::kCare, {"good", "kind"});
  CHECK(DdrScore(Doc({"good"}), care, t) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(DdrScore(Doc({"bad"}), care, t) == 0.0);
  CHECK(DdrScore(Doc({"mixed"}), care, t) == doctest::Approx(0.7071067811865476).epsilon(1e-9));
  CHECK(testing::CodeOf([&] { DdrScore(Doc({"unknown"}), care, t); }) == ErrorCode::kZeroVector);
}

TEST_CASE("default seed sets") {
  const auto seeds = DefaultSeedSets();
  CHECK(seeds[Index(Foundation::kAuthority)].words() ==
        std::vector<std::string>{"authority", "obey", "respect", "tradition", "subversion",
                                 "disobey", "disrespect", "chaos"});
  for (Foundation f : kAllFoundations) {
    CHECK(seeds[Index(f)].foundation() == f);
    CHECK(!seeds[Index(f)].words().empty());
  }
  std::istringstream in("care\tHelp,help,aid\n");
  const auto custom = LoadSeedSets(in);
  CHECK(custom[Index(Foundation::kCare)].words() == std::vector<std::string>{"help", "aid"});
  CHECK(custom[Index(Foundation::kLoyalty)].words() == seeds[Index(Foundation::kLoyalty)].words());
}

TEST_CASE("ddr scorer rejects zero centroids and counts in-vocabulary tokens") {
  const auto t = Table("authority 1 0\ncare 0 1\n");
  std::istringstream in("authority\tauthority\ncare\tcare\nfairness\tcare\nloyalty\tcare\nsanctity\tcare\n");
  const DdrScorer scorer(t, LoadSeedSets(in));
  CHECK(scorer.CountMatches(Doc({"care", "x", "authority"})) == 2);
  const auto s = scorer.Score(Doc({"authority"}));
  CHECK(s[Foundation::kAuthority] == doctest::Approx(1.0));
  CHECK(s[Foundation::kCare] == 0.0);
  CHECK(testing::CodeOf([&] { scorer.Score(Doc({"x"})); }) == ErrorCode::kZeroVector);
  CHECK(testing::CodeOf([&] { DdrScorer bad(t, DefaultSeedSets()); }) == ErrorCode::kZeroVector);
}

TEST_CASE("property: scale invariance, symmetry and range") {
  Rng rng(32);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t k = 1 + rng.UniformIndex(6);
    EmbeddingTable t(k), scaled(k);
    const double factor = std::exp(rng.Uniform01() * 10.0 - 5.0);
    std::vector<std::string> words;
    for (int w = 0; w < 6; ++w) {
      std::vector<double> v(k), sv(k);
      for (std::size_t j = 0; j < k; ++j) {
        v[j] = rng.Uniform01() * 2.0 - 1.0;
        sv[j] = v[j] * factor;
      }
      words.push_back("w" + std::to_string(w));
      t.Set(words.back(), v);
      scaled.Set(words.back(), sv);
    }
    const SeedSet seeds(Foundation::kCare, {words[0], words[1]});
    const auto d = Doc({words[2], words[3], words[rng.UniformIndex(6)]});
    const double s = DdrScore(d, seeds, t);
    CHECK(DdrScore(d, seeds, scaled) == doctest::Approx(s).epsilon(1e-12));
    CHECK(s >= -1.0);
    CHECK(s <= 1.0);
    const auto a = Vec(t.Find(words[4]));
    const auto b = Vec(t.Find(words[5]));
    CHECK(CosineSimilarity(a, b) == CosineSimilarity(b, a));
  }
}

}  // namespace
}  // namespace mftk
