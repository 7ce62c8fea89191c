#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "mftk/corpus_io.h"
#include "mftk/dataset.h"
#include "mftk/ddr.h"
#include "mftk/error.h"
#include "mftk/features.h"
#include "mftk/lexicon.h"
#include "mftk/linear_model.h"
#include "mftk/metrics.h"
#include "mftk/model_io.h"
#include "mftk/run_config.h"
#include "mftk/stats.h"
#include "mftk/text.h"
#include "mftk/tfidf.h"

namespace mftk::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kScoreFormatVersion = 1;

// Flag misuse detected after parsing; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  return in;
}

// Writes to `path`, or to `fallback` when path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  void Close() {
    stream_->flush();
    if (file_) {
      file_->close();
      if (file_->fail()) throw Error(ErrorCode::kIoError, "write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::optional<std::uint64_t> ParseSeed(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("seed '" + text + "' is not a non-negative integer");
  }
  return v;
}

// --seed, else MFTK_SEED, else an error when required.
std::optional<std::uint64_t> ResolveSeed(const std::string& flag, bool required,
                                         std::string_view command) {
  if (auto s = ParseSeed(flag)) return s;
  if (const char* env = std::getenv("MFTK_SEED"); env != nullptr && *env != '\0') {
    return ParseSeed(env);
  }
  if (required) {
    throw UsageError(std::string(command) + " needs --seed (or MFTK_SEED)");
  }
  return std::nullopt;
}

Foundation RequireFoundation(const std::string& name) {
  const auto f = ParseFoundation(name);
  if (!f) throw UsageError("unknown foundation '" + name + "'");
  return *f;
}

std::vector<Foundation> FoundationsOrAll(const std::string& name) {
  if (name.empty() || name == "all") {
    return std::vector<Foundation>(kAllFoundations.begin(), kAllFoundations.end());
  }
  return {RequireFoundation(name)};
}

std::vector<double> ParseDoubleList(const std::string& text, std::string_view what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
      throw UsageError(std::string(what) + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

// Dense features: "id,x1,...,xk" per line after a header; no quoting.
std::map<std::string, std::vector<double>> ReadDenseFeatures(const std::string& path) {
  auto in = OpenIn(path);
  std::map<std::string, std::vector<double>> out;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> width;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line_no == 1 || !width) {
      width = static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
      continue;  // header
    }
    std::stringstream ss(line);
    std::string id;
    std::getline(ss, id, ',');
    std::vector<double> row;
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::kMalformedRow, "bad feature value '" + cell + "'", line_no);
      }
      row.push_back(v);
    }
    if (row.size() != *width) {
      throw Error(ErrorCode::kInconsistentDimension,
                  "expected " + std::to_string(*width) + " features", line_no);
    }
    if (!out.emplace(id, std::move(row)).second) {
      throw Error(ErrorCode::kDuplicateId, "features for '" + id + "' repeat", line_no);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scorers

class LinearScorer : public Scorer {
 public:
  LinearScorer(std::vector<TrainedModel> models,
               std::map<std::string, std::vector<double>> dense)
      : dense_(std::move(dense)) {
    for (auto& m : models) {
      if (!m.foundation) throw UsageError("model has no foundation recorded");
      auto& slot = models_[Index(*m.foundation)];
      if (slot) {
        throw UsageError("two models for " + std::string(FoundationName(*m.foundation)));
      }
      if (!m.tfidf && dense_.empty()) {
        throw UsageError("dense-feature model needs --features");
      }
      covered_.Insert(*m.foundation);
      slot = std::move(m);
    }
  }

  FoundationSet covered() const { return covered_; }

  FoundationScores Score(const TokenizedDoc& tdoc) const override {
    FoundationScores s;
    for (Foundation f : kAllFoundations) {
      const auto& m = models_[Index(f)];
      if (!m) continue;
      if (m->tfidf) {
        s[f] = m->Predict(tdoc);
      } else {
        const auto it = dense_.find(tdoc.doc_id);
        if (it == dense_.end()) {
          throw Error(ErrorCode::kSchemaViolation, "no features for '" + tdoc.doc_id + "'");
        }
        s[f] = m->Predict(it->second);
      }
    }
    return s;
  }

  std::size_t CountMatches(const TokenizedDoc& tdoc) const override {
    std::size_t n = 0;
    for (const auto& t : tdoc.lemmas) {
      for (const auto& m : models_) {
        if (m && m->tfidf && m->tfidf->ColumnOf(t)) {
          ++n;
          break;
        }
      }
    }
    return n;
  }

 private:
  std::array<std::optional<TrainedModel>, kNumFoundations> models_;
  std::map<std::string, std::vector<double>> dense_;
  FoundationSet covered_;
};

struct ScorerOptions {
  std::string method;
  std::string lexicon;
  std::string embeddings;
  std::string seeds;
  std::vector<std::string> models;
  std::string features;
};

void AddScorerOptions(CLI::App* sub, ScorerOptions& o, bool required) {
  auto* m = sub->add_option("--method", o.method, "mfd | mfd2 | emfd | ddr | linear")
                ->check(CLI::IsMember({"mfd", "mfd2", "emfd", "ddr", "linear"}));
  if (required) m->required();
  sub->add_option("--lexicon", o.lexicon, "lexicon file (mfd, mfd2, emfd)");
  sub->add_option("--embeddings", o.embeddings, "word vectors, text format (ddr)");
  sub->add_option("--seeds", o.seeds, "seed word lists (ddr; default built in)");
  sub->add_option("--model", o.models, "trained model JSON (linear; repeatable)");
  sub->add_option("--features", o.features, "dense feature CSV for dense models");
}

void RecordScorerInputs(const ScorerOptions& o, RunConfig& config) {
  config.Set("method", o.method);
  for (const auto* path : {&o.lexicon, &o.embeddings, &o.seeds, &o.features}) {
    if (!path->empty()) config.AddInput(*path);
  }
  if (!o.lexicon.empty()) config.Set("lexicon", o.lexicon);
  if (!o.embeddings.empty()) config.Set("embeddings", o.embeddings);
  if (!o.seeds.empty()) config.Set("seeds", o.seeds);
  if (!o.features.empty()) config.Set("features", o.features);
  for (const auto& m : o.models) {
    config.AddInput(m);
    config.Set("model", m);
  }
}

// Owns whatever the chosen scorer references.
struct ScorerBundle {
  std::optional<AnyLexicon> lexicon;
  std::optional<EmbeddingTable> table;
  std::unique_ptr<DdrScorer> ddr;
  std::unique_ptr<LinearScorer> linear;
  FoundationSet covered;

  const Scorer& scorer() const {
    if (lexicon) return AsScorer(*lexicon);
    if (ddr) return *ddr;
    return *linear;
  }
};

std::unique_ptr<ScorerBundle> BuildScorer(const ScorerOptions& o) {
  auto b = std::make_unique<ScorerBundle>();
  for (Foundation f : kAllFoundations) b->covered.Insert(f);
  if (o.method == "mfd" || o.method == "mfd2" || o.method == "emfd") {
    if (o.lexicon.empty()) throw UsageError("--method " + o.method + " needs --lexicon");
    const LexiconKind kind = o.method == "mfd"    ? LexiconKind::kPrefix
                             : o.method == "mfd2" ? LexiconKind::kWord
                                                  : LexiconKind::kWeighted;
    auto in = OpenIn(o.lexicon);
    b->lexicon = LoadLexicon(kind, in);
  } else if (o.method == "ddr") {
    if (o.embeddings.empty()) throw UsageError("--method ddr needs --embeddings");
    auto in = OpenIn(o.embeddings);
    b->table = LoadEmbeddings(in);
    SeedSets seeds = DefaultSeedSets();
    if (!o.seeds.empty()) {
      auto sin = OpenIn(o.seeds);
      seeds = LoadSeedSets(sin);
    }
    b->ddr = std::make_unique<DdrScorer>(*b->table, seeds);
  } else if (o.method == "linear") {
    if (o.models.empty()) throw UsageError("--method linear needs --model");
    std::vector<TrainedModel> models;
    for (const auto& path : o.models) models.push_back(LoadModelFile(path));
    std::map<std::string, std::vector<double>> dense;
    if (!o.features.empty()) dense = ReadDenseFeatures(o.features);
    b->linear = std::make_unique<LinearScorer>(std::move(models), std::move(dense));
    b->covered = b->linear->covered();
  } else {
    throw UsageError("--method is required");
  }
  return b;
}

std::vector<TokenizedDoc> TokenizeCorpus(std::span<const CorpusRecord> corpus) {
  std::vector<TokenizedDoc> out;
  out.reserve(corpus.size());
  for (const auto& r : corpus) out.push_back(Tokenize(Document{r.id, r.text}));
  return out;
}

// ---------------------------------------------------------------------------
// Per-foundation score lookup shared by the analyses.

std::map<std::string, const ScoreRecord*> ScoresFor(std::span<const ScoreRecord> scores,
                                                     Foundation f,
                                                     const std::string& source) {
  std::map<std::string, const ScoreRecord*> out;
  std::set<std::string> sources;
  for (const auto& s : scores) {
    if (s.foundation != f || (!source.empty() && s.source != source)) continue;
    sources.insert(s.source);
    out.emplace(s.doc_id, &s);
  }
  if (source.empty() && sources.size() > 1) {
    throw Error(ErrorCode::kAmbiguousSource,
                std::string(FoundationName(f)) + " has scores from several sources; pass --source");
  }
  return out;
}

std::string ValueText(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::optional<std::string> ExtraField(const CorpusRecord& r, const std::string& field) {
  if (!r.extra.is_object()) return std::nullopt;
  const auto it = r.extra.find(field);
  if (it == r.extra.end() || it->is_null()) return std::nullopt;
  return ValueText(*it);
}

bool MatchesPositive(const std::string& value, const std::string& positive) {
  if (value == positive) return true;
  return value == "true" && positive == "1";
}

// ---------------------------------------------------------------------------
// score

struct ScoreOptions {
  ScorerOptions scorer;
  std::string in;
  std::string out;
  std::string source;
  int threads = 1;
};

int CmdScore(const ScoreOptions& o, RunConfig& config, std::ostream& out) {
  config.AddInput(o.in);
  config.Set("in", o.in);
  RecordScorerInputs(o.scorer, config);
  config.Set("source", o.source);
  config.CheckInputsExist();

  const auto bundle = BuildScorer(o.scorer);
  const auto corpus = ReadCorpusFile(o.in);
  const Scorer& scorer = bundle->scorer();

  struct Row {
    std::optional<FoundationScores> scores;
    std::string error;
  };
  std::vector<Row> rows(corpus.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const TokenizedDoc tdoc = Tokenize(Document{corpus[i].id, corpus[i].text});
      try {
        rows[i].scores = scorer.Score(tdoc);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kZeroVector) throw;
        rows[i].error = std::string(ErrorCodeName(e.code()));
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(o.threads, 1)), 1,
                              std::max<std::size_t>(corpus.size(), 1));
  if (threads == 1) {
    work(0, corpus.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    const std::size_t chunk = (corpus.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = std::min(corpus.size(), t * chunk);
      const std::size_t e = std::min(corpus.size(), b + chunk);
      pool.emplace_back([&, t, b, e] {
        try {
          work(b, e);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  std::vector<ScoreRecord> records;
  records.reserve(corpus.size() * kNumFoundations);
  const std::string source = o.source.empty() ? o.scorer.method : o.source;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (Foundation f : kAllFoundations) {
      if (!bundle->covered.Contains(f)) continue;
      ScoreRecord r;
      r.doc_id = corpus[i].id;
      r.foundation = f;
      r.source = source;
      if (rows[i].scores) {
        r.score = (*rows[i].scores)[f];
      } else {
        r.error = rows[i].error;
      }
      records.push_back(std::move(r));
    }
  }
  Output sink(o.out, out);
  WriteScores(records, sink.stream(), OutputHeader(config.seed, config.Hash()));
  sink.Close();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOptions {
  std::string scores;
  std::string corpus;
  std::string foundation;
  std::string source;
  std::string out;
  std::string out_csv;
};

int CmdEvaluate(const EvaluateOptions& o, RunConfig& config, std::ostream& out) {
  config.AddInput(o.scores);
  config.AddInput(o.corpus);
  config.Set("scores", o.scores);
  config.Set("corpus", o.corpus);
  config.Set("foundation", o.foundation);
  config.Set("source", o.source);
  config.CheckInputsExist();
  const auto foundations = FoundationsOrAll(o.foundation);

  const auto scores = ReadScoresFile(o.scores);
  const auto corpus = ReadCorpusFile(o.corpus);
  ojson report = ojson::object();
  report["header"] = OutputHeader(config.seed, config.Hash());
  ojson per = ojson::object();
  std::ostringstream csv;
  csv << "foundation,percentile,threshold,tp,fp,fn,tn,precision,recall,f1,accuracy\n";
  for (Foundation f : foundations) {
    const std::string name(FoundationName(f));
    const auto joined = JoinScoresLabels(
        scores, corpus, f, o.source.empty() ? std::nullopt : std::optional(o.source));
    ojson entry = ojson::object();
    entry["source"] = joined.source;
    entry["n"] = joined.set.size();
    entry["positives"] = std::count(joined.set.labels.begin(), joined.set.labels.end(), 1);
    entry["dropped_missing_label"] = joined.dropped_missing_label;
    entry["dropped_error"] = joined.dropped_error;
    try {
      entry["auc"] = Auc(joined.set);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kSingleClass || e.code() == ErrorCode::kEmptyScores) {
        throw Error(e.code(), "foundation " + name + ": labels contain a single class");
      }
      throw;
    }
    try {
      const auto cal = CalibrationCurve(joined.set);
      ojson bins = ojson::array();
      for (const auto& b : cal.bins) {
        bins.push_back({{"lower", b.lower},
                        {"upper", b.upper},
                        {"count", b.count},
                        {"mean_score", b.mean_score ? ojson(*b.mean_score) : ojson(nullptr)},
                        {"positive_fraction",
                         b.positive_fraction ? ojson(*b.positive_fraction) : ojson(nullptr)}});
      }
      entry["calibration"] = {{"bins", bins}, {"max_gap", cal.MaxGap()}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kScoreOutOfRange) throw;
      entry["calibration"] = nullptr;  // scores are not probabilities
    }
    ojson rows = ojson::array();
    for (const auto& row : ThresholdMetricsTable(joined.set).rows) {
      rows.push_back({{"percentile", row.percentile},
                      {"threshold", row.threshold},
                      {"tp", row.tp},
                      {"fp", row.fp},
                      {"fn", row.fn},
                      {"tn", row.tn},
                      {"precision", row.precision},
                      {"recall", row.recall},
                      {"f1", row.f1},
                      {"accuracy", row.accuracy},
                      {"no_positive_predictions", row.no_positive_predictions}});
      csv << name << ',' << row.percentile << ',' << ojson(row.threshold).dump() << ','
          << row.tp << ',' << row.fp << ',' << row.fn << ',' << row.tn << ','
          << ojson(row.precision).dump() << ',' << ojson(row.recall).dump() << ','
          << ojson(row.f1).dump() << ',' << ojson(row.accuracy).dump() << '\n';
    }
    entry["thresholds"] = rows;
    per[name] = entry;
  }
  report["foundations"] = per;
  Output sink(o.out, out);
  sink.stream() << report.dump(2) << '\n';
  sink.Close();
  if (!o.out_csv.empty()) {
    Output c(o.out_csv, out);
    c.stream() << "# " << OutputHeader(config.seed, config.Hash()) << '\n' << csv.str();
    c.Close();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// split

struct SplitOptions {
  std::string in;
  std::string annotations;
  std::string schema;
  std::string strategy = "stratified";
  std::string foundation;
  std::string fractions = "0.9,0.1";
  double test_fraction = 0.1;
  std::string seed;
  std::string out_prefix;
};

void WriteExamples(const std::string& path, std::span<const LabeledExample> all,
                   std::span<const std::size_t> indices, const std::string& header,
                   const std::vector<CorpusRecord>* originals) {
  Output sink(path, std::cout);
  sink.stream() << "# " << header << '\n';
  for (std::size_t i : indices) {
    sink.stream() << CorpusLine(originals ? (*originals)[i] : FromLabeledExample(all[i]))
                  << '\n';
  }
  sink.Close();
}

int CmdSplit(const SplitOptions& o, RunConfig& config, std::ostream& out) {
  if (o.in.empty() == o.annotations.empty()) {
    throw UsageError("split needs exactly one of --in or --annotations");
  }
  config.seed = ResolveSeed(o.seed, true, "split");
  const std::string input = o.in.empty() ? o.annotations : o.in;
  config.AddInput(input);
  config.Set("input", input);
  config.Set("strategy", o.strategy);
  config.Set("foundation", o.foundation);
  config.Set("fractions", o.fractions);
  config.Set("test-fraction", ojson(o.test_fraction).dump());
  config.Set("seed", std::to_string(*config.seed));
  config.CheckInputsExist();

  std::vector<LabeledExample> examples;
  std::vector<CorpusRecord> records;
  if (!o.in.empty()) {
    records = ReadCorpusFile(o.in);
    for (const auto& r : records) examples.push_back(ToLabeledExample(r));
  } else {
    std::optional<AnnotationSchema> schema;
    if (!o.schema.empty()) {
      schema = ParseAnnotationSchema(o.schema);
      if (!schema) throw UsageError("unknown schema '" + o.schema + "'");
    }
    auto in = OpenIn(o.annotations);
    const auto ann = ReadAnnotations(in);
    examples = LabelAnnotations(ann, schema);
  }
  const std::vector<CorpusRecord>* originals = records.empty() ? nullptr : &records;
  const std::string header = OutputHeader(config.seed, config.Hash());

  ojson summary = ojson::object();
  summary["header"] = header;
  summary["strategy"] = o.strategy;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> parts;
  if (o.strategy == "stratified") {
    if (o.foundation.empty()) throw UsageError("stratified split needs --foundation");
    const Foundation f = RequireFoundation(o.foundation);
    const auto split = StratifiedSplit(examples, f, o.test_fraction, *config.seed);
    summary["excluded_missing"] = split.excluded_missing;
    parts.emplace_back("train", split.train);
    parts.emplace_back("test", split.test);
  } else {
    const auto fractions = ParseDoubleList(o.fractions, "--fractions");
    std::vector<LabeledExample> complete;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < examples.size(); ++i) {
      if (examples[i].labels.HasMissing()) continue;
      complete.push_back(examples[i]);
      origin.push_back(i);
    }
    summary["excluded_missing"] = examples.size() - complete.size();
    auto subsets = IterativeStratifiedSplit(complete, fractions, *config.seed);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      for (auto& idx : subsets[j]) idx = origin[idx];
      std::string name = subsets.size() == 2 ? (j == 0 ? "train" : "test")
                                             : "part" + std::to_string(j);
      parts.emplace_back(std::move(name), std::move(subsets[j]));
    }
  }
  ojson sizes = ojson::object();
  for (const auto& [name, idx] : parts) {
    const std::string path = o.out_prefix + "." + name + ".jsonl";
    WriteExamples(path, examples, idx, header, originals);
    sizes[name] = {{"path", path}, {"size", idx.size()}};
  }
  summary["outputs"] = sizes;
  out << summary.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// train

struct TrainOptionsCli {
  std::string in;
  std::string foundation;
  std::string loss = "logistic";
  std::string c;
  std::string cv_grid;
  int folds = 10;
  std::string seed;
  std::string out;
  std::string features;
  std::string stopwords;
};

int CmdTrain(const TrainOptionsCli& o, RunConfig& config, std::ostream& out) {
  config.seed = ResolveSeed(o.seed, true, "train");
  const Foundation f = RequireFoundation(o.foundation);
  const auto loss = ParseLossKind(o.loss);
  if (!loss) throw UsageError("unknown loss '" + o.loss + "'");
  if (!o.c.empty() && !o.cv_grid.empty()) throw UsageError("give --C or --cv-grid, not both");
  config.AddInput(o.in);
  for (const auto* p : {&o.features, &o.stopwords}) {
    if (!p->empty()) config.AddInput(*p);
  }
  config.Set("in", o.in);
  config.Set("foundation", o.foundation);
  config.Set("loss", o.loss);
  config.Set("C", o.c);
  config.Set("cv-grid", o.cv_grid);
  config.Set("folds", std::to_string(o.folds));
  config.Set("features", o.features);
  config.Set("stopwords", o.stopwords);
  config.Set("seed", std::to_string(*config.seed));
  config.CheckInputsExist();

  std::vector<double> grid;
  std::optional<double> fixed_c;
  if (!o.c.empty()) {
    fixed_c = ParseDoubleList(o.c, "--C").front();
    if (!(*fixed_c > 0.0)) throw UsageError("--C must be positive");
  } else if (o.cv_grid == "default" || (o.cv_grid.empty() && *loss == LossKind::kLogistic)) {
    grid = DefaultCGrid();
  } else if (!o.cv_grid.empty()) {
    grid = ParseDoubleList(o.cv_grid, "--cv-grid");
  } else {
    fixed_c = 1.0;
  }

  const auto corpus = ReadCorpusFile(o.in);
  std::vector<const CorpusRecord*> used;
  std::vector<int> labels;
  for (const auto& r : corpus) {
    if (!r.labels || !(*r.labels)[f].has_value()) continue;
    used.push_back(&r);
    labels.push_back(*(*r.labels)[f] ? 1 : 0);
  }

  TrainedModel model;
  model.foundation = f;
  model.seed = *config.seed;
  FeatureMatrix x;
  if (o.features.empty()) {
    model.stopwords = DefaultStopwords();
    if (!o.stopwords.empty()) {
      auto sin = OpenIn(o.stopwords);
      model.stopwords = LoadStopwords(sin);
    }
    std::vector<std::vector<std::string>> docs;
    docs.reserve(used.size());
    for (const auto* r : used) {
      docs.push_back(FilterTokens(Tokenize(Document{r->id, r->text}), model.stopwords));
    }
    model.tfidf = TfIdfModel::Fit(docs);
    x = FeatureMatrix(model.tfidf->dimension());
    for (const auto& d : docs) x.AppendRow(model.tfidf->Transform(d));
  } else {
    const auto dense = ReadDenseFeatures(o.features);
    std::vector<std::vector<double>> rows;
    for (const auto* r : used) {
      const auto it = dense.find(r->id);
      if (it == dense.end()) {
        throw Error(ErrorCode::kSchemaViolation, "no features for '" + r->id + "'");
      }
      rows.push_back(it->second);
    }
    if (rows.empty()) throw Error(ErrorCode::kEmptyCorpus, "no labeled documents");
    x = FeatureMatrix::FromDense(rows);
  }

  double chosen = fixed_c.value_or(0.0);
  if (!fixed_c) {
    model.cv = CrossValidateC(x, labels, grid, *loss, o.folds, *config.seed);
    chosen = model.cv->chosen_C;
  }
  TrainingTrace trace;
  model.classifier = TrainLinear(x, labels, *loss, chosen, *config.seed, {}, &trace);

  Output sink(o.out, out);
  SaveModel(model, sink.stream());
  sink.Close();
  ojson summary = {{"header", OutputHeader(config.seed, config.Hash())},
                   {"foundation", FoundationName(f)},
                   {"documents", labels.size()},
                   {"C", chosen},
                   {"iterations", trace.iterations},
                   {"converged", trace.converged}};
  if (!o.out.empty() && o.out != "-") out << summary.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::string kind;
  ScorerOptions scorer;
  std::string scores;
  std::string corpus;
  std::string in;
  std::string source;
  double percentile = 80.0;
  bool haldane = false;
  std::string outcome_field = "outcome";
  std::string positive_value = "1";
  std::string group_field;
  std::string group_a;
  std::string group_b;
  std::string group_by;
  std::string keyword_a;
  std::string keyword_b;
  std::string out;
  std::string out_csv;
};

ojson CellsJson(const Contingency2x2& t) {
  return {{"n11", t.n11}, {"n10", t.n10}, {"n01", t.n01}, {"n00", t.n00}};
}

// Scores for one foundation over the corpus documents that pass `keep`, in
// corpus order. Error rows are skipped and counted.
struct FoundationColumn {
  std::vector<const CorpusRecord*> docs;
  std::vector<double> scores;
  std::size_t skipped_error = 0;
};

template <typename Keep>
FoundationColumn CollectScores(std::span<const ScoreRecord> scores,
                               std::span<const CorpusRecord> corpus, Foundation f,
                               const std::string& source, Keep keep) {
  const auto lookup = ScoresFor(scores, f, source);
  FoundationColumn col;
  for (const auto& r : corpus) {
    if (!keep(r)) continue;
    const auto it = lookup.find(r.id);
    if (it == lookup.end()) {
      throw Error(ErrorCode::kMissingScore,
                  "no " + std::string(FoundationName(f)) + " score for '" + r.id + "'");
    }
    if (!it->second->score) {
      ++col.skipped_error;
      continue;
    }
    col.docs.push_back(&r);
    col.scores.push_back(*it->second->score);
  }
  return col;
}

std::string Num(double v) { return ojson(v).dump(); }

int CmdAnalyze(const AnalyzeOptions& o, RunConfig& config, std::ostream& out) {
  config.Set("kind", o.kind);
  config.Set("percentile", Num(o.percentile));
  config.Set("haldane", o.haldane ? "true" : "false");
  for (const auto& [k, v] : std::vector<std::pair<std::string, std::string>>{
           {"scores", o.scores}, {"corpus", o.corpus}, {"in", o.in}}) {
    if (v.empty()) continue;
    config.AddInput(v);
    config.Set(k, v);
  }
  config.Set("source", o.source);
  config.Set("outcome-field", o.outcome_field);
  config.Set("positive-value", o.positive_value);
  config.Set("group-field", o.group_field);
  config.Set("group-a", o.group_a);
  config.Set("group-b", o.group_b);
  config.Set("group-by", o.group_by);
  config.Set("keyword-a", o.keyword_a);
  config.Set("keyword-b", o.keyword_b);
  if (!o.scorer.method.empty()) RecordScorerInputs(o.scorer, config);
  config.CheckInputsExist();

  const std::string header = OutputHeader(config.seed, config.Hash());
  ojson report = ojson::object();
  report["header"] = header;
  report["kind"] = o.kind;
  std::ostringstream csv;
  csv << "# " << header << '\n';

  const auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError("analyze " + o.kind + " needs " + flag);
  };

  if (o.kind == "odds" || o.kind == "chi2") {
    need(o.scores, "--scores");
    need(o.corpus, "--corpus");
    if (!(o.percentile > 0.0 && o.percentile < 100.0)) {
      throw UsageError("--percentile must lie in (0, 100)");
    }
    const auto scores = ReadScoresFile(o.scores);
    const auto corpus = ReadCorpusFile(o.corpus);
    report["percentile"] = o.percentile;
    report["outcome_field"] = o.outcome_field;
    report["positive_value"] = o.positive_value;
    csv << (o.kind == "odds" ? "foundation,log_or,ci_low,ci_high,significant\n"
                             : "foundation,statistic,p_value\n");
    ojson per = ojson::object();
    for (Foundation f : kAllFoundations) {
      const std::string name(FoundationName(f));
      const auto col = CollectScores(scores, corpus, f, o.source, [&](const CorpusRecord& r) {
        return ExtraField(r, o.outcome_field).has_value();
      });
      if (col.scores.empty()) {
        throw Error(ErrorCode::kEmptyGroup, "no documents carry '" + o.outcome_field + "'");
      }
      const auto present = BinarizeAtPercentile(col.scores, o.percentile);
      std::vector<int> outcome;
      for (const auto* r : col.docs) {
        outcome.push_back(MatchesPositive(*ExtraField(*r, o.outcome_field), o.positive_value));
      }
      const auto table = CrossTabulate(present, outcome);
      ojson entry = ojson::object();
      entry["n"] = col.scores.size();
      entry["skipped_error"] = col.skipped_error;
      entry["threshold"] = ThresholdAtPercentile(col.scores, o.percentile);
      entry["cells"] = CellsJson(table);
      if (o.kind == "odds") {
        OddsRatioResult r;
        try {
          r = OddsRatio(table, o.haldane);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kZeroCell) throw;
          throw Error(ErrorCode::kZeroCell,
                      "foundation " + name + " has a zero cell; rerun with --haldane");
        }
        entry["cells_used"] = CellsJson(r.cells);
        entry["odds_ratio"] = r.odds_ratio;
        entry["log_or"] = r.log_or;
        entry["se_log_or"] = r.se_log_or;
        entry["ci_low"] = r.ci_low;
        entry["ci_high"] = r.ci_high;
        entry["significant"] = r.significant;
        entry["haldane"] = r.haldane;
        csv << name << ',' << Num(r.log_or) << ',' << Num(std::log(r.ci_low)) << ','
            << Num(std::log(r.ci_high)) << ',' << (r.significant ? "true" : "false") << '\n';
      } else {
        const auto r = ChiSquareYates(table);
        entry["statistic"] = r.statistic;
        entry["p_value"] = r.p_value;
        csv << name << ',' << Num(r.statistic) << ',' << Num(r.p_value) << '\n';
      }
      per[name] = entry;
    }
    report["foundations"] = per;
  } else if (o.kind == "mwu") {
    need(o.scores, "--scores");
    need(o.corpus, "--corpus");
    need(o.group_field, "--group-field");
    need(o.group_a, "--group-a");
    need(o.group_b, "--group-b");
    const auto scores = ReadScoresFile(o.scores);
    const auto corpus = ReadCorpusFile(o.corpus);
    report["group_field"] = o.group_field;
    report["group_a"] = o.group_a;
    report["group_b"] = o.group_b;
    csv << "foundation,u,z,p_value,degenerate\n";
    ojson per = ojson::object();
    for (Foundation f : kAllFoundations) {
      const std::string name(FoundationName(f));
      const auto in_group = [&](const std::string& g) {
        return CollectScores(scores, corpus, f, o.source, [&](const CorpusRecord& r) {
          const auto v = ExtraField(r, o.group_field);
          return v && *v == g;
        });
      };
      const auto a = in_group(o.group_a);
      const auto b = in_group(o.group_b);
      const auto r = MannWhitneyU(a.scores, b.scores);
      per[name] = {{"n_a", a.scores.size()}, {"n_b", b.scores.size()}, {"u", r.u},
                   {"z", r.z},           {"p_value", r.p_two_sided},
                   {"degenerate", r.degenerate}};
      csv << name << ',' << Num(r.u) << ',' << Num(r.z) << ',' << Num(r.p_two_sided) << ','
          << (r.degenerate ? "true" : "false") << '\n';
    }
    report["foundations"] = per;
  } else if (o.kind == "prevalence") {
    const std::string corpus_path = o.corpus.empty() ? o.in : o.corpus;
    need(corpus_path, "--corpus");
    const auto corpus = ReadCorpusFile(corpus_path);
    // Per-document labels, from scores binarized over the whole corpus when
    // scores are given, else from the corpus itself.
    std::vector<FoundationLabels> labels(corpus.size());
    if (!o.scores.empty()) {
      const auto scores = ReadScoresFile(o.scores);
      report["percentile"] = o.percentile;
      for (Foundation f : kAllFoundations) {
        const auto lookup = ScoresFor(scores, f, o.source);
        std::vector<double> values;
        for (const auto& r : corpus) {
          const auto it = lookup.find(r.id);
          if (it != lookup.end() && it->second->score) values.push_back(*it->second->score);
        }
        if (values.empty()) continue;
        const double threshold = ThresholdAtPercentile(values, o.percentile);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          const auto it = lookup.find(corpus[i].id);
          if (it != lookup.end() && it->second->score) {
            labels[i][f] = *it->second->score > threshold;
          }
        }
      }
    } else {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        labels[i] = corpus[i].labels.value_or(FoundationLabels{});
      }
    }
    std::map<std::string, std::vector<FoundationLabels>> groups;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::string g = "all";
      if (!o.group_by.empty()) {
        const auto v = ExtraField(corpus[i], o.group_by);
        if (!v) continue;
        g = *v;
      }
      groups[g].push_back(labels[i]);
    }
    if (groups.empty()) throw Error(ErrorCode::kEmptyGroup, "no documents to summarize");
    csv << "group,foundation,fraction,positives,labeled\n";
    ojson per = ojson::object();
    for (const auto& [g, l] : groups) {
      const auto p = Prevalence(l, g);
      ojson entry = {{"documents", p.documents}};
      ojson fr = ojson::object();
      for (Foundation f : kAllFoundations) {
        const auto i = Index(f);
        const std::string name(FoundationName(f));
        fr[name] = p.fraction[i] ? ojson(*p.fraction[i]) : ojson(nullptr);
        csv << QuoteCsvField(g) << ',' << name << ','
            << (p.fraction[i] ? Num(*p.fraction[i]) : std::string()) << ','
            << p.positives[i] << ',' << p.labeled[i] << '\n';
      }
      entry["fraction"] = fr;
      per[g] = entry;
    }
    report["groups"] = per;
  } else if (o.kind == "length-bias" || o.kind == "keyword-bias") {
    const std::string corpus_path = o.in.empty() ? o.corpus : o.in;
    need(corpus_path, "--in");
    if (o.scorer.method.empty()) throw UsageError("analyze " + o.kind + " needs --method");
    const auto bundle = BuildScorer(o.scorer);
    const auto corpus = ReadCorpusFile(corpus_path);
    const auto docs = TokenizeCorpus(corpus);
    if (o.kind == "length-bias") {
      const auto r = LengthBias(docs, bundle->scorer());
      report["documents"] = r.documents;
      report["r_raw"] = r.r_raw;
      report["r_normalized"] = r.r_normalized;
      csv << "r_raw,r_normalized,documents\n"
          << Num(r.r_raw) << ',' << Num(r.r_normalized) << ',' << r.documents << '\n';
    } else {
      need(o.keyword_a, "--keyword-a");
      need(o.keyword_b, "--keyword-b");
      const auto r = KeywordGroupMeans(docs, bundle->scorer(), o.keyword_a, o.keyword_b);
      report["skipped"] = r.skipped;
      csv << "group,foundation,mean,ci_low,ci_high,documents\n";
      ojson groups = ojson::object();
      for (const auto& g : r.groups) {
        ojson entry = {{"documents", g.documents}};
        for (Foundation f : kAllFoundations) {
          const auto& m = g.by_foundation[Index(f)];
          entry[std::string(FoundationName(f))] = {
              {"mean", m.mean}, {"ci_low", m.ci_low}, {"ci_high", m.ci_high}};
          csv << QuoteCsvField(g.name) << ',' << FoundationName(f) << ',' << Num(m.mean) << ','
              << Num(m.ci_low) << ',' << Num(m.ci_high) << ',' << g.documents << '\n';
        }
        groups[g.name] = entry;
      }
      report["groups"] = groups;
    }
  } else {
    throw UsageError("unknown analysis kind '" + o.kind + "'");
  }

  Output sink(o.out, out);
  sink.stream() << report.dump(2) << '\n';
  sink.Close();
  if (!o.out_csv.empty()) {
    Output c(o.out_csv, out);
    c.stream() << csv.str();
    c.Close();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lexicon-stats

struct LexiconStatsOptions {
  std::vector<std::string> files;
  std::string kinds;
  std::string out;
};

int CmdLexiconStats(const LexiconStatsOptions& o, RunConfig& config, std::ostream& out) {
  for (const auto& f : o.files) {
    config.AddInput(f);
    config.Set("lexicon", f);
  }
  config.Set("kinds", o.kinds);
  config.CheckInputsExist();
  std::vector<LexiconKind> kinds;
  if (!o.kinds.empty()) {
    std::stringstream ss(o.kinds);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto k = ParseLexiconKind(item);
      if (!k) throw UsageError("unknown lexicon kind '" + item + "'");
      kinds.push_back(*k);
    }
    if (kinds.size() != o.files.size()) throw UsageError("--kinds needs one kind per file");
  }
  std::vector<Vocabulary> vocabs;
  ojson files = ojson::array();
  for (std::size_t i = 0; i < o.files.size(); ++i) {
    const std::string content = ReadFile(o.files[i]);
    const LexiconKind kind = kinds.empty() ? DetectLexiconKind(content) : kinds[i];
    std::istringstream in(content);
    vocabs.push_back(VocabularyOf(LoadLexicon(kind, in)));
    files.push_back({{"path", o.files[i]}, {"kind", LexiconKindName(kind)}});
  }
  const auto r = LexiconStats(vocabs[0], vocabs[1], vocabs[2]);
  ojson report = {{"header", OutputHeader(config.seed, config.Hash())},
                  {"files", files},
                  {"sizes", r.sizes},
                  {"ab", r.ab},
                  {"ac", r.ac},
                  {"bc", r.bc},
                  {"abc", r.abc},
                  {"ab_fraction_of_a", r.ab_fraction_of_a},
                  {"ab_fraction_of_b", r.ab_fraction_of_b},
                  {"unique_fraction", r.unique_fraction}};
  Output sink(o.out, out);
  sink.stream() << report.dump(2) << '\n';
  sink.Close();
  return kExitOk;
}

// ---------------------------------------------------------------------------

// Splices config-file entries into the arguments after the subcommand name.
std::vector<std::string> ApplyConfigFile(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;
  auto in = OpenIn(path);
  const auto entries = ParseConfig(in);
  return MergeConfigIntoArgs(std::move(args), entries, {"haldane"});
}

}  // namespace

int Run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moral foundations text toolkit", "mftk"};
  app.set_version_flag("--version", std::string("mftk ") + MFTK_VERSION +
                                        " (model format " +
                                        std::to_string(kModelFormatVersion) +
                                        ", score format " +
                                        std::to_string(kScoreFormatVersion) + ")");
  app.require_subcommand(1);
  std::string config_path;
  std::string seed_flag;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value settings; flags win");
    sub->add_option("--seed", seed_flag, "seed for every random choice");
  };

  ScoreOptions score;
  auto* s_score = app.add_subcommand("score", "Score a corpus with one method");
  AddScorerOptions(s_score, score.scorer, true);
  s_score->add_option("--in", score.in, "corpus JSONL")->required();
  s_score->add_option("--out", score.out, "score CSV (default stdout)");
  s_score->add_option("--source", score.source, "source tag (default: method)");
  s_score->add_option("--threads", score.threads, "worker threads")->check(CLI::Range(1, 256));
  common(s_score);

  EvaluateOptions evaluate;
  auto* s_eval = app.add_subcommand("evaluate", "AUC, calibration and thresholds");
  s_eval->add_option("--scores", evaluate.scores, "score CSV")->required();
  s_eval->add_option("--corpus", evaluate.corpus, "labeled corpus JSONL")->required();
  s_eval->add_option("--foundation", evaluate.foundation, "one foundation (default all)");
  s_eval->add_option("--source", evaluate.source, "score source to use");
  s_eval->add_option("--out", evaluate.out, "report JSON (default stdout)");
  s_eval->add_option("--out-csv", evaluate.out_csv, "threshold table CSV");
  common(s_eval);

  SplitOptions split;
  auto* s_split = app.add_subcommand("split", "Train/test splits");
  s_split->add_option("--in", split.in, "labeled corpus JSONL");
  s_split->add_option("--annotations", split.annotations, "raw annotation JSONL");
  s_split->add_option("--schema", split.schema, "twitter | reddit for annotation records");
  s_split->add_option("--strategy", split.strategy, "stratified | iterative")
      ->check(CLI::IsMember({"stratified", "iterative"}));
  s_split->add_option("--foundation", split.foundation, "stratification foundation");
  s_split->add_option("--fractions", split.fractions, "iterative subset fractions");
  s_split->add_option("--test-fraction", split.test_fraction, "stratified test fraction");
  s_split->add_option("--out-prefix", split.out_prefix, "output path prefix")->required();
  common(s_split);

  TrainOptionsCli train;
  auto* s_train = app.add_subcommand("train", "Train a tf-idf linear classifier");
  s_train->add_option("--in", train.in, "labeled corpus JSONL")->required();
  s_train->add_option("--foundation", train.foundation, "target foundation")->required();
  s_train->add_option("--loss", train.loss, "logistic | hinge")
      ->check(CLI::IsMember({"logistic", "hinge"}));
  s_train->add_option("--C", train.c, "fixed inverse regularization strength");
  s_train->add_option("--cv-grid", train.cv_grid, "'default' or comma-separated C values");
  s_train->add_option("--folds", train.folds, "cross-validation folds")->check(CLI::Range(2, 1000));
  s_train->add_option("--out", train.out, "model JSON")->required();
  s_train->add_option("--features", train.features, "dense feature CSV instead of tf-idf");
  s_train->add_option("--stopwords", train.stopwords, "stop-word list (default built in)");
  common(s_train);

  AnalyzeOptions analyze;
  auto* s_an = app.add_subcommand("analyze", "Downstream statistics");
  s_an->add_option("--kind", analyze.kind, "odds | chi2 | mwu | prevalence | length-bias | keyword-bias")
      ->required()
      ->check(CLI::IsMember({"odds", "chi2", "mwu", "prevalence", "length-bias", "keyword-bias"}));
  AddScorerOptions(s_an, analyze.scorer, false);
  s_an->add_option("--scores", analyze.scores, "score CSV");
  s_an->add_option("--corpus", analyze.corpus, "corpus JSONL with outcome/group fields");
  s_an->add_option("--in", analyze.in, "corpus JSONL to score (length-bias, keyword-bias)");
  s_an->add_option("--source", analyze.source, "score source to use");
  s_an->add_option("--percentile", analyze.percentile, "binarization percentile");
  s_an->add_flag("--haldane", analyze.haldane, "add 0.5 to every cell when one is zero");
  s_an->add_option("--outcome-field", analyze.outcome_field, "corpus field holding the outcome");
  s_an->add_option("--positive-value", analyze.positive_value, "outcome value counted positive");
  s_an->add_option("--group-field", analyze.group_field, "corpus field for mwu groups");
  s_an->add_option("--group-a", analyze.group_a, "first mwu group value");
  s_an->add_option("--group-b", analyze.group_b, "second mwu group value");
  s_an->add_option("--group-by", analyze.group_by, "corpus field grouping prevalence");
  s_an->add_option("--keyword-a", analyze.keyword_a, "first keyword");
  s_an->add_option("--keyword-b", analyze.keyword_b, "second keyword");
  s_an->add_option("--out", analyze.out, "report JSON (default stdout)");
  s_an->add_option("--out-csv", analyze.out_csv, "plot-ready CSV");
  common(s_an);

  LexiconStatsOptions lstats;
  auto* s_lex = app.add_subcommand("lexicon-stats", "Vocabulary overlap of three lexicons");
  s_lex->add_option("files", lstats.files, "three lexicon files")->required()->expected(3);
  s_lex->add_option("--kinds", lstats.kinds, "prefix|word|weighted per file (default: detect)");
  s_lex->add_option("--out", lstats.out, "report JSON (default stdout)");
  common(s_lex);

  try {
    std::vector<std::string> args = ApplyConfigFile(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "mftk: " << e.what() << '\n';
    return kExitData;
  }

  try {
    RunConfig config;
    CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    if (config.command != "split" && config.command != "train") {
      config.seed = ResolveSeed(seed_flag, false, config.command);
    }
    if (sub == s_score) return CmdScore(score, config, out);
    if (sub == s_eval) return CmdEvaluate(evaluate, config, out);
    if (sub == s_split) {
      split.seed = seed_flag;
      return CmdSplit(split, config, out);
    }
    if (sub == s_train) {
      train.seed = seed_flag;
      return CmdTrain(train, config, out);
    }
    if (sub == s_an) return CmdAnalyze(analyze, config, out);
    return CmdLexiconStats(lstats, config, out);
  } catch (const UsageError& e) {
    err << "mftk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "mftk: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "mftk: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace mftk::cli
