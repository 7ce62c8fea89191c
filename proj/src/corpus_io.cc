#include "mftk/corpus_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "mftk/error.h"
#include "parse_util.h"

namespace mftk {
namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void Schema(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kSchemaViolation, msg, line);
}

BinaryLabel ParseLabelValue(const ojson& v, std::size_t line, std::string_view key) {
  if (v.is_null()) return std::nullopt;
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer() || v.is_number_unsigned()) {
    const auto i = v.get<std::int64_t>();
    if (i == 0 || i == 1) return i == 1;
  }
  Schema(line, "label '" + std::string(key) + "' must be 0, 1 or null");
}

FoundationLabels ParseLabels(const ojson& obj, std::size_t line) {
  if (!obj.is_object()) Schema(line, "'labels' must be an object");
  FoundationLabels labels;
  for (const auto& [key, value] : obj.items()) {
    const auto f = ParseFoundation(key);
    if (!f) Schema(line, "unknown foundation '" + key + "' in labels");
    labels[*f] = ParseLabelValue(value, line, key);
  }
  return labels;
}

ojson LabelsJson(const FoundationLabels& labels) {
  ojson out = ojson::object();
  for (Foundation f : kAllFoundations) {
    const auto& v = labels[f];
    out[std::string(FoundationName(f))] = v ? ojson(*v ? 1 : 0) : ojson(nullptr);
  }
  return out;
}

std::string Dump(const ojson& j) {
  return j.dump(-1, ' ', false, ojson::error_handler_t::replace);
}

const std::string& RequireString(const ojson& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    Schema(line, std::string("'") + key + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

std::size_t RequireIndex(const ojson& v, std::size_t line, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    Schema(line, std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  return in;
}

// Reads one RFC 4180 record; quoted fields may span lines. Returns false at
// end of input. `line_no` counts physical lines consumed so far and
// `record_line` receives the line the record starts on.
bool ReadCsvRecord(std::istream& in, std::vector<std::string>& fields, std::size_t& line_no,
                   std::size_t& record_line) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;
  ++line_no;
  record_line = line_no;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  for (;; c = in.get()) {
    if (c == EOF) {
      if (quoted) throw Error(ErrorCode::kMalformedRow, "unterminated quote", record_line);
      break;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++line_no;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (ch == '\n') {
      break;
    } else if (ch == '\r' && in.peek() == '\n') {
      // CRLF: the '\n' ends the record next iteration.
    } else if (ch == '"' && field.empty() && !after_quote) {
      quoted = true;
    } else {
      if (after_quote) {
        throw Error(ErrorCode::kMalformedRow, "text after closing quote", record_line);
      }
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return true;
}

bool IsBlankRecord(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields[0].empty();
}

}  // namespace

std::vector<CorpusRecord> ReadCorpus(std::istream& in) {
  internal::LineReader reader(in);
  std::vector<CorpusRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  while (reader.Next(line)) {
    const std::size_t ln = reader.line_no();
    if (internal::Trim(line).empty() || line[0] == '#') continue;
    ojson obj;
    try {
      obj = ojson::parse(line);
    } catch (const ojson::parse_error& e) {
      Schema(ln, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) Schema(ln, "record must be a JSON object");
    CorpusRecord rec;
    rec.id = RequireString(obj, "id", ln);
    if (rec.id.empty()) Schema(ln, "'id' must be nonempty");
    rec.text = RequireString(obj, "text", ln);
    for (auto& [key, value] : obj.items()) {
      if (key == "id" || key == "text") continue;
      if (key == "labels") {
        if (!value.is_null()) rec.labels = ParseLabels(value, ln);
        continue;
      }
      rec.extra[key] = value;
    }
    if (!seen.insert(rec.id).second) {
      throw Error(ErrorCode::kDuplicateId, "id '" + rec.id + "' repeats", ln);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CorpusRecord> ReadCorpusFile(const std::string& path) {
  auto in = OpenInput(path);
  return ReadCorpus(in);
}

std::string CorpusLine(const CorpusRecord& record) {
  ojson obj = ojson::object();
  obj["id"] = record.id;
  obj["text"] = record.text;
  if (record.labels) obj["labels"] = LabelsJson(*record.labels);
  if (record.extra.is_object()) {
    for (const auto& [key, value] : record.extra.items()) obj[key] = value;
  }
  return Dump(obj);
}

void WriteCorpus(std::span<const CorpusRecord> records, std::ostream& out,
                 const std::optional<std::string>& header) {
  if (header) out << "# " << *header << '\n';
  for (const auto& r : records) out << CorpusLine(r) << '\n';
}

LabeledExample ToLabeledExample(const CorpusRecord& record) {
  return LabeledExample{record.id, record.text, record.labels.value_or(FoundationLabels{})};
}

CorpusRecord FromLabeledExample(const LabeledExample& ex) {
  CorpusRecord rec;
  rec.id = ex.id;
  rec.text = ex.text;
  rec.labels = ex.labels;
  return rec;
}

std::vector<AnnotationRecord> ReadAnnotations(std::istream& in) {
  internal::LineReader reader(in);
  std::vector<AnnotationRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  while (reader.Next(line)) {
    const std::size_t ln = reader.line_no();
    if (internal::Trim(line).empty() || line[0] == '#') continue;
    ojson obj;
    try {
      obj = ojson::parse(line);
    } catch (const ojson::parse_error& e) {
      Schema(ln, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) Schema(ln, "record must be a JSON object");
    AnnotationRecord rec;
    rec.example.id = RequireString(obj, "id", ln);
    if (rec.example.id.empty()) Schema(ln, "'id' must be nonempty");
    rec.example.text = RequireString(obj, "text", ln);
    if (!seen.insert(rec.example.id).second) {
      throw Error(ErrorCode::kDuplicateId, "id '" + rec.example.id + "' repeats", ln);
    }
    if (const auto it = obj.find("schema"); it != obj.end()) {
      if (!it->is_string()) Schema(ln, "'schema' must be a string");
      rec.schema = ParseAnnotationSchema(it->get<std::string>());
      if (!rec.schema) Schema(ln, "unknown schema '" + it->get<std::string>() + "'");
    }
    const auto ann = obj.find("annotations");
    const auto hl = obj.find("highlights");
    if ((ann == obj.end()) == (hl == obj.end())) {
      Schema(ln, "record needs exactly one of 'annotations' or 'highlights'");
    }
    if (ann != obj.end()) {
      if (!ann->is_array() || ann->empty()) Schema(ln, "'annotations' must be a nonempty array");
      for (const auto& set : *ann) {
        if (!set.is_array()) Schema(ln, "each annotation set must be an array");
        auto& labels = rec.example.annotations.emplace_back();
        for (const auto& raw : set) {
          if (!raw.is_string()) Schema(ln, "raw labels must be strings");
          labels.push_back(raw.get<std::string>());
        }
      }
    } else {
      if (!hl->is_array()) Schema(ln, "'highlights' must be an array");
      HighlightedArticle article;
      article.id = rec.example.id;
      article.text = rec.example.text;
      for (const auto& h : *hl) {
        if (!h.is_object() || !h.contains("start") || !h.contains("end") ||
            !h.contains("foundation") || !h["foundation"].is_string()) {
          Schema(ln, "highlight needs start, end and foundation");
        }
        const auto f = ParseFoundation(h["foundation"].get<std::string>());
        if (!f) Schema(ln, "unknown foundation '" + h["foundation"].get<std::string>() + "'");
        article.highlights.push_back(Highlight{
            TextSpan{RequireIndex(h["start"], ln, "start"), RequireIndex(h["end"], ln, "end")},
            *f});
      }
      if (const auto it = obj.find("assigned"); it != obj.end() && !it->is_null()) {
        if (!it->is_array()) Schema(ln, "'assigned' must be an array");
        FoundationSet assigned;
        for (const auto& name : *it) {
          const auto f = name.is_string() ? ParseFoundation(name.get<std::string>())
                                          : std::nullopt;
          if (!f) Schema(ln, "'assigned' holds an unknown foundation");
          assigned.Insert(*f);
        }
        article.assigned = assigned;
      }
      if (const auto it = obj.find("sentences"); it != obj.end() && !it->is_null()) {
        if (!it->is_array()) Schema(ln, "'sentences' must be an array");
        std::vector<TextSpan> spans;
        for (const auto& s : *it) {
          if (!s.is_array() || s.size() != 2) Schema(ln, "sentence spans are [start, end]");
          spans.push_back(TextSpan{RequireIndex(s[0], ln, "start"), RequireIndex(s[1], ln, "end")});
        }
        rec.sentences = std::move(spans);
      }
      rec.article = std::move(article);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<LabeledExample> LabelAnnotations(std::span<const AnnotationRecord> records,
                                             std::optional<AnnotationSchema> default_schema) {
  std::vector<LabeledExample> out;
  for (const auto& rec : records) {
    if (rec.article) {
      const auto spans = rec.sentences ? *rec.sentences : SplitSentences(rec.article->text);
      auto sentences = LabelSentences(*rec.article, spans);
      for (auto& s : sentences) out.push_back(std::move(s));
      continue;
    }
    const auto schema = rec.schema ? rec.schema : default_schema;
    if (!schema) {
      throw Error(ErrorCode::kSchemaViolation,
                  "record '" + rec.example.id + "' has no schema and none was given");
    }
    out.push_back(AggregateAnnotations(rec.example, *schema));
  }
  return out;
}

std::vector<ScoreRecord> ReadScores(std::istream& in) {
  std::vector<std::string> fields;
  std::size_t line_no = 0;
  std::size_t record_line = 0;
  bool have_header = false;
  bool has_error_column = false;
  std::vector<ScoreRecord> out;
  std::set<std::tuple<std::string, int, std::string>> seen;
  while (ReadCsvRecord(in, fields, line_no, record_line)) {
    if (IsBlankRecord(fields)) continue;
    if (!have_header) {
      if (!fields.empty() && !fields[0].empty() && fields[0][0] == '#') continue;
      const bool base = fields.size() >= 4 && fields[0] == "id" &&
                        fields[1] == "foundation" && fields[2] == "score" &&
                        fields[3] == "source";
      if (!base || fields.size() > 5 || (fields.size() == 5 && fields[4] != "error")) {
        throw Error(ErrorCode::kMalformedRow,
                    "expected header id,foundation,score,source[,error]", record_line);
      }
      has_error_column = fields.size() == 5;
      have_header = true;
      continue;
    }
    const std::size_t expected = has_error_column ? 5 : 4;
    if (fields.size() != expected) {
      throw Error(ErrorCode::kMalformedRow,
                  "expected " + std::to_string(expected) + " fields, got " +
                      std::to_string(fields.size()),
                  record_line);
    }
    ScoreRecord rec;
    rec.doc_id = fields[0];
    const auto f = ParseFoundation(fields[1]);
    if (!f) {
      throw Error(ErrorCode::kUnknownFoundation, "'" + fields[1] + "'", record_line);
    }
    rec.foundation = *f;
    rec.source = fields[3];
    if (has_error_column && !fields[4].empty()) rec.error = fields[4];
    if (!fields[2].empty()) {
      const auto v = internal::ParseDouble(fields[2]);
      if (!v || !std::isfinite(*v)) {
        throw Error(ErrorCode::kMalformedRow, "score '" + fields[2] + "' is not a finite number",
                    record_line);
      }
      rec.score = *v;
    }
    if (rec.score.has_value() == rec.error.has_value()) {
      throw Error(ErrorCode::kMalformedRow, "a row needs exactly one of score or error",
                  record_line);
    }
    if (!seen.emplace(rec.doc_id, static_cast<int>(Index(rec.foundation)), rec.source).second) {
      throw Error(ErrorCode::kDuplicateRecord,
                  "(" + rec.doc_id + ", " + fields[1] + ", " + rec.source + ") repeats",
                  record_line);
    }
    out.push_back(std::move(rec));
  }
  if (!have_header) throw Error(ErrorCode::kMalformedRow, "missing header");
  return out;
}

std::vector<ScoreRecord> ReadScoresFile(const std::string& path) {
  auto in = OpenInput(path);
  return ReadScores(in);
}

std::string QuoteCsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void WriteScores(std::span<const ScoreRecord> records, std::ostream& out,
                 const std::optional<std::string>& header) {
  if (header) out << "# " << *header << '\n';
  out << "id,foundation,score,source,error\n";
  for (const auto& r : records) {
    out << QuoteCsvField(r.doc_id) << ',' << FoundationName(r.foundation) << ','
        << (r.score ? internal::Format17(*r.score) : std::string()) << ','
        << QuoteCsvField(r.source) << ',' << QuoteCsvField(r.error.value_or("")) << '\n';
  }
}

JoinResult JoinScoresLabels(std::span<const ScoreRecord> scores,
                            std::span<const CorpusRecord> corpus, Foundation foundation,
                            const std::optional<std::string>& source) {
  JoinResult result;
  std::map<std::string, const ScoreRecord*> by_doc;
  std::set<std::string> sources;
  for (const auto& s : scores) {
    if (s.foundation != foundation) continue;
    if (source && s.source != *source) continue;
    sources.insert(s.source);
    by_doc.emplace(s.doc_id, &s);
  }
  if (!source && sources.size() > 1) {
    std::string list;
    for (const auto& s : sources) list += (list.empty() ? "" : ", ") + s;
    throw Error(ErrorCode::kAmbiguousSource,
                std::string(FoundationName(foundation)) + " has scores from " + list);
  }
  result.source = source ? *source : (sources.empty() ? "" : *sources.begin());

  std::vector<const CorpusRecord*> labeled;
  for (const auto& rec : corpus) {
    if (!rec.labels || !(*rec.labels)[foundation].has_value()) {
      ++result.dropped_missing_label;
      continue;
    }
    labeled.push_back(&rec);
  }
  std::sort(labeled.begin(), labeled.end(),
            [](const CorpusRecord* a, const CorpusRecord* b) { return a->id < b->id; });
  for (const CorpusRecord* rec : labeled) {
    const auto it = by_doc.find(rec->id);
    if (it == by_doc.end()) {
      throw Error(ErrorCode::kMissingScore,
                  "no " + std::string(FoundationName(foundation)) + " score for '" + rec->id +
                      "'");
    }
    if (!it->second->score) {
      ++result.dropped_error;
      continue;
    }
    result.doc_ids.push_back(rec->id);
    result.set.scores.push_back(*it->second->score);
    result.set.labels.push_back(*(*rec->labels)[foundation] ? 1 : 0);
  }
  return result;
}

std::string OutputHeader(std::optional<std::uint64_t> seed, std::string_view config_hash) {
  return std::string("mftk ") + MFTK_VERSION +
         " seed=" + (seed ? std::to_string(*seed) : std::string("none")) +
         " config=" + std::string(config_hash);
}

}  // namespace mftk
