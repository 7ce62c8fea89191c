#include "mftk/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mftk/error.h"
#include "mftk/special_functions.h"

namespace mftk {
namespace {

constexpr double kZ95 = 1.96;

GroupMean MeanWithCi(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  if (std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); })) {
    return GroupMean{values.front(), values.front(), values.front()};
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  const double half = kZ95 * sd / std::sqrt(n);
  return GroupMean{mean, mean - half, mean + half};
}

bool ContainsWord(const TokenizedDoc& tdoc, const std::string& word) {
  return std::find(tdoc.tokens.begin(), tdoc.tokens.end(), word) != tdoc.tokens.end() ||
         std::find(tdoc.lemmas.begin(), tdoc.lemmas.end(), word) != tdoc.lemmas.end();
}

}  // namespace

PrevalenceReport Prevalence(std::span<const FoundationLabels> labels, std::string group) {
  if (labels.empty()) throw Error(ErrorCode::kEmptyGroup, "group '" + group + "' is empty");
  PrevalenceReport report;
  report.group = std::move(group);
  report.documents = labels.size();
  for (const auto& doc : labels) {
    for (Foundation f : kAllFoundations) {
      if (!doc[f].has_value()) continue;
      ++report.labeled[Index(f)];
      if (*doc[f]) ++report.positives[Index(f)];
    }
  }
  for (std::size_t i = 0; i < kNumFoundations; ++i) {
    if (report.labeled[i] > 0) {
      report.fraction[i] = static_cast<double>(report.positives[i]) /
                           static_cast<double>(report.labeled[i]);
    }
  }
  return report;
}

Contingency2x2 CrossTabulate(std::span<const int> present, std::span<const int> outcome) {
  if (present.size() != outcome.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "indicator vectors differ in length");
  }
  Contingency2x2 t;
  for (std::size_t i = 0; i < present.size(); ++i) {
    const bool f = present[i] != 0;
    const bool o = outcome[i] != 0;
    if (f && o) ++t.n11;
    if (f && !o) ++t.n10;
    if (!f && o) ++t.n01;
    if (!f && !o) ++t.n00;
  }
  return t;
}

OddsRatioResult OddsRatio(const Contingency2x2& t, bool haldane) {
  OddsRatioResult r;
  r.cells = t;
  const bool any_zero = t.n11 <= 0 || t.n10 <= 0 || t.n01 <= 0 || t.n00 <= 0;
  if (any_zero) {
    if (!haldane) {
      throw Error(ErrorCode::kZeroCell, "odds ratio undefined with a zero cell");
    }
    r.cells.n11 += 0.5;
    r.cells.n10 += 0.5;
    r.cells.n01 += 0.5;
    r.cells.n00 += 0.5;
    r.haldane = true;
  }
  const auto& c = r.cells;
  r.odds_ratio = (c.n11 * c.n00) / (c.n10 * c.n01);
  r.log_or = std::log(r.odds_ratio);
  r.se_log_or = std::sqrt(1.0 / c.n11 + 1.0 / c.n10 + 1.0 / c.n01 + 1.0 / c.n00);
  r.ci_low = std::exp(r.log_or - kZ95 * r.se_log_or);
  r.ci_high = std::exp(r.log_or + kZ95 * r.se_log_or);
  r.significant = r.ci_low > 1.0 || r.ci_high < 1.0;
  return r;
}

ChiSquareResult ChiSquareYates(const Contingency2x2& t) {
  const double a = t.n11;
  const double b = t.n10;
  const double c = t.n01;
  const double d = t.n00;
  const double r1 = a + b;
  const double r2 = c + d;
  const double c1 = a + c;
  const double c2 = b + d;
  if (r1 <= 0 || r2 <= 0 || c1 <= 0 || c2 <= 0) {
    throw Error(ErrorCode::kZeroMargin, "chi-square needs every margin positive");
  }
  const double n = r1 + r2;
  const double corrected = std::max(std::abs(a * d - b * c) - n / 2.0, 0.0);
  ChiSquareResult r;
  r.statistic = n * corrected * corrected / (r1 * r2 * c1 * c2);
  r.p_value = ChiSquareSurvival(r.statistic, 1.0);
  return r;
}

MannWhitneyResult MannWhitneyU(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorCode::kEmptySample, "Mann-Whitney needs two nonempty samples");
  }
  const std::size_t n1 = x.size();
  const std::size_t n2 = y.size();
  const std::size_t n = n1 + n2;
  std::vector<std::pair<double, bool>> pooled;  // (value, from x)
  pooled.reserve(n);
  for (double v : x) pooled.emplace_back(v, true);
  for (double v : y) pooled.emplace_back(v, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });

  double rank_sum_x = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[j + 1].first == pooled[i].first) ++j;
    const double avg_rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (std::size_t k = i; k <= j; ++k) {
      if (pooled[k].second) rank_sum_x += avg_rank;
    }
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }

  const double dn1 = static_cast<double>(n1);
  const double dn2 = static_cast<double>(n2);
  const double dn = static_cast<double>(n);
  MannWhitneyResult r;
  r.u = rank_sum_x - dn1 * (dn1 + 1.0) / 2.0;
  const double variance =
      dn1 * dn2 / 12.0 * ((dn + 1.0) - (n > 1 ? tie_term / (dn * (dn - 1.0)) : 0.0));
  if (!(variance > 0.0)) {
    r.degenerate = true;
    return r;
  }
  const double diff = r.u - dn1 * dn2 / 2.0;
  const double corrected = std::copysign(std::max(std::abs(diff) - 0.5, 0.0), diff);
  r.z = corrected / std::sqrt(variance);
  r.p_two_sided = std::clamp(2.0 * NormalCdf(-std::abs(r.z)), 0.0, 1.0);
  return r;
}

double PearsonCorrelation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "correlation inputs differ in length");
  }
  if (x.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw Error(ErrorCode::kDegenerateVariance, "correlation with a constant variable");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

LengthBiasReport LengthBias(std::span<const TokenizedDoc> corpus, const Scorer& scorer) {
  std::vector<double> lengths;
  std::vector<double> raw;
  std::vector<double> normalized;
  for (const auto& tdoc : corpus) {
    if (tdoc.empty()) continue;
    const double len = static_cast<double>(tdoc.size());
    const double matches = static_cast<double>(scorer.CountMatches(tdoc));
    lengths.push_back(len);
    raw.push_back(matches);
    normalized.push_back(matches / len);
  }
  if (lengths.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "length bias needs three nonempty documents");
  }
  LengthBiasReport r;
  r.documents = lengths.size();
  r.r_raw = PearsonCorrelation(lengths, raw);
  r.r_normalized = PearsonCorrelation(lengths, normalized);
  return r;
}

KeywordGroupReport KeywordGroupMeans(std::span<const TokenizedDoc> corpus,
                                     const Scorer& scorer, std::string_view keyword_a,
                                     std::string_view keyword_b) {
  const std::string a = LowercaseUtf8(keyword_a);
  const std::string b = LowercaseUtf8(keyword_b);
  KeywordGroupReport report;
  report.groups[0].name = "contains:" + a;
  report.groups[1].name = "contains:" + b;
  report.groups[2].name = "neither";

  // scores[group][foundation] -> per-document values
  std::array<std::array<std::vector<double>, kNumFoundations>, 3> scores;
  for (const auto& tdoc : corpus) {
    FoundationScores s;
    try {
      s = scorer.Score(tdoc);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroVector) throw;
      ++report.skipped;
      continue;
    }
    const bool in_a = ContainsWord(tdoc, a);
    const bool in_b = ContainsWord(tdoc, b);
    std::array<bool, 3> member = {in_a, in_b, !in_a && !in_b};
    for (std::size_t g = 0; g < 3; ++g) {
      if (!member[g]) continue;
      for (Foundation f : kAllFoundations) scores[g][Index(f)].push_back(s[f]);
    }
  }
  for (std::size_t g = 0; g < 3; ++g) {
    auto& group = report.groups[g];
    group.documents = scores[g][0].size();
    if (group.documents == 0) {
      throw Error(ErrorCode::kEmptyGroup, "group '" + group.name + "' is empty");
    }
    for (std::size_t f = 0; f < kNumFoundations; ++f) {
      group.by_foundation[f] = MeanWithCi(scores[g][f]);
    }
  }
  return report;
}

}  // namespace mftk
