#include "mftk/text.h"

#include <array>
#include <cstdint>

namespace mftk {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at s[i]; advances i. Returns kInvalid for a
// malformed sequence (consuming one byte).
char32_t DecodeUtf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kInvalid;
  }
  if (i + extra >= s.size()) {
    ++i;
    return kInvalid;
  }
  for (int k = 1; k <= extra; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr std::array<char32_t, 4> kMin = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++i;
    return kInvalid;
  }
  i += extra + 1;
  return cp;
}

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

// Non-ASCII punctuation, symbol, space and private-use blocks. Every other
// non-ASCII code point is treated as a letter; this approximates the Unicode
// letter/mark/number classes without a property database.
bool IsNonAsciiSeparator(char32_t cp) {
  return InRange(cp, 0x0080, 0x00BF) ? !(cp == 0xAA || cp == 0xB5 || cp == 0xBA)
         : cp == 0x00D7 || cp == 0x00F7 || cp == 0x037E || cp == 0x0387 ||
               InRange(cp, 0x055A, 0x055F) || cp == 0x0589 || cp == 0x05BE ||
               cp == 0x05C0 || cp == 0x05C3 || InRange(cp, 0x05F3, 0x05F4) ||
               cp == 0x060C || cp == 0x061B || cp == 0x061F ||
               InRange(cp, 0x066A, 0x066D) || cp == 0x06D4 ||
               InRange(cp, 0x0964, 0x0965) || InRange(cp, 0x2000, 0x2BFF) ||
               InRange(cp, 0x2E00, 0x2E7F) || InRange(cp, 0x3000, 0x303F) ||
               InRange(cp, 0xE000, 0xF8FF) || InRange(cp, 0xFE10, 0xFE1F) ||
               InRange(cp, 0xFE30, 0xFE6F) || InRange(cp, 0xFF01, 0xFF0F) ||
               InRange(cp, 0xFF1A, 0xFF20) || InRange(cp, 0xFF3B, 0xFF40) ||
               InRange(cp, 0xFF5B, 0xFF65) || InRange(cp, 0xFFF0, 0xFFFF) ||
               InRange(cp, 0x1F000, 0x1FAFF);
}

enum class CharClass { kSeparator, kAlnum, kJoiner };

// Folds typographic variants and classifies.
CharClass Classify(char32_t& cp) {
  if (cp == 0x2019 || cp == 0x02BC) cp = U'\'';
  if (cp == 0x2010 || cp == 0x2011) cp = U'-';
  if (cp == U'\'' || cp == U'-') return CharClass::kJoiner;
  if (cp < 0x80) {
    const bool alnum = (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
                       (cp >= U'0' && cp <= U'9');
    return alnum ? CharClass::kAlnum : CharClass::kSeparator;
  }
  if (cp == kInvalid || IsNonAsciiSeparator(cp)) return CharClass::kSeparator;
  return CharClass::kAlnum;
}

char32_t ToLower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  // Latin-1.
  if (InRange(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A.
  if (InRange(cp, 0x0100, 0x0137) || InRange(cp, 0x014A, 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (InRange(cp, 0x0139, 0x0148) || InRange(cp, 0x0179, 0x017E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x0178) return 0xFF;
  // Greek.
  if (InRange(cp, 0x0391, 0x03A9) && cp != 0x03A2) return cp + 0x20;
  if (cp == 0x0386) return 0x03AC;
  if (InRange(cp, 0x0388, 0x038A)) return cp + 0x25;
  if (cp == 0x038C) return 0x03CC;
  if (InRange(cp, 0x038E, 0x038F)) return cp + 0x3F;
  // Cyrillic.
  if (InRange(cp, 0x0410, 0x042F)) return cp + 0x20;
  if (InRange(cp, 0x0400, 0x040F)) return cp + 0x50;
  if (InRange(cp, 0x0460, 0x0481) || InRange(cp, 0x048A, 0x04BF)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  // Fullwidth Latin.
  if (InRange(cp, 0xFF21, 0xFF3A)) return cp + 0x20;
  return cp;
}

void FlushRun(std::string& run, bool has_alnum, std::vector<std::string>& out) {
  if (has_alnum) {
    std::size_t b = 0;
    std::size_t e = run.size();
    while (b < e && (run[b] == '\'' || run[b] == '-')) ++b;
    while (e > b && (run[e - 1] == '\'' || run[e - 1] == '-')) --e;
    out.emplace_back(run.substr(b, e - b));
  }
  run.clear();
}

// ---- Lemmatizer ----------------------------------------------------------

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsAsciiVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Letters for the purpose of suffix rules: ASCII a-z or any byte of a
// multi-byte sequence.
bool IsStemLetter(char c) {
  return (c >= 'a' && c <= 'z') || static_cast<unsigned char>(c) >= 0x80;
}

bool IsConsonantAt(std::string_view w, std::size_t i) {
  const char c = w[i];
  if (!(c >= 'a' && c <= 'z')) return false;
  if (IsAsciiVowel(c)) return false;
  if (c == 'y') return i == 0 || !IsConsonantAt(w, i - 1);
  return true;
}

bool HasVowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((w[i] >= 'a' && w[i] <= 'z') && !IsConsonantAt(w, i)) return true;
  }
  return false;
}

// Number of vowel-consonant sequences, as in [C](VC)^m[V].
int Measure(std::string_view w) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool consonant = IsConsonantAt(w, i);
    if (consonant && prev_vowel) ++m;
    prev_vowel = !consonant;
  }
  return m;
}

bool EndsCvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  const char last = w[n - 1];
  return IsConsonantAt(w, n - 3) && !IsConsonantAt(w, n - 2) &&
         IsConsonantAt(w, n - 1) && last != 'w' && last != 'x' && last != 'y';
}

// Restores the base form after an -ed / -ing suffix was removed.
std::string RepairStem(std::string stem) {
  const std::size_t n = stem.size();
  if ((EndsWith(stem, "at") && n >= 3 && IsConsonantAt(stem, n - 3)) ||
      EndsWith(stem, "bl") || EndsWith(stem, "iz")) {
    return stem + "e";
  }
  if (n >= 2 && stem[n - 1] == stem[n - 2] && IsConsonantAt(stem, n - 1) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
    return stem;
  }
  // No English base form ends in these; the final e was dropped.
  if (stem.back() == 'v' || stem.back() == 'u' ||
      (stem.back() == 'c' && n >= 2 &&
       (stem[n - 2] == 'n' || stem[n - 2] == 'r' || stem[n - 2] == 'u'))) {
    return stem + "e";
  }
  if (Measure(stem) == 1 && EndsCvc(stem)) return stem + "e";
  return stem;
}

// Words the suffix rules would mangle.
const std::unordered_set<std::string_view>& LemmaExceptions() {
  static const std::unordered_set<std::string_view> kWords = {
      "always",  "anything", "bias",     "ceiling",   "crooked",  "during",
      "evening", "everything", "hundred", "kindred",  "morning",  "naked",
      "news",    "nothing",  "perhaps",  "pudding",   "rugged",   "sacred",
      "series",  "sibling",  "something", "species",  "whereas",  "wicked",
      "wretched", "beloved", "thus",     "this",      "his",      "yes",
  };
  return kWords;
}

// One rule application; returns the input unchanged when no rule fires.
std::string LemmaStep(const std::string& w) {
  const std::size_t n = w.size();
  if (LemmaExceptions().contains(w)) return w;
  if (EndsWith(w, "ly") || EndsWith(w, "ss")) return w;

  if ((EndsWith(w, "ies") || EndsWith(w, "ied")) && n > 4 &&
      IsStemLetter(w[n - 4])) {
    return w.substr(0, n - 3) + "y";
  }
  for (std::string_view suffix : {"sses", "shes", "ches", "zzes", "xes"}) {
    if (EndsWith(w, suffix) && n >= suffix.size() + 1 &&
        IsStemLetter(w[n - suffix.size()])) {
      return w.substr(0, n - 2);
    }
  }
  if (EndsWith(w, "s")) {
    if (n > 3 && IsStemLetter(w[n - 2]) && !EndsWith(w, "us") &&
        !EndsWith(w, "is")) {
      return w.substr(0, n - 1);
    }
    return w;
  }
  if (EndsWith(w, "eed")) return w;
  if (EndsWith(w, "ed") && n >= 5) {
    const std::string_view stem(w.data(), n - 2);
    if (HasVowel(stem) && IsStemLetter(stem.back())) {
      return RepairStem(std::string(stem));
    }
    return w;
  }
  if (EndsWith(w, "ing") && n >= 6) {
    const std::string_view stem(w.data(), n - 3);
    if (HasVowel(stem) && IsStemLetter(stem.back())) {
      return RepairStem(std::string(stem));
    }
  }
  return w;
}

bool IsAlphabeticToken(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = DecodeUtf8(s, i);
    if (cp < 0x80) {
      const bool letter = (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
      if (!letter) return false;
    } else if (Classify(cp) != CharClass::kAlnum) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> TokenizeText(std::string_view text) {
  std::vector<std::string> tokens;
  std::string run;
  bool has_alnum = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = DecodeUtf8(text, i);
    const CharClass cls = Classify(cp);
    if (cls == CharClass::kSeparator) {
      FlushRun(run, has_alnum, tokens);
      has_alnum = false;
      continue;
    }
    if (cls == CharClass::kAlnum) has_alnum = true;
    AppendUtf8(run, ToLower(cp));
  }
  FlushRun(run, has_alnum, tokens);
  return tokens;
}

TokenizedDoc Tokenize(const Document& doc) {
  TokenizedDoc out;
  out.doc_id = doc.id;
  out.tokens = TokenizeText(doc.text);
  out.lemmas.reserve(out.tokens.size());
  for (const auto& t : out.tokens) out.lemmas.push_back(Lemmatize(t));
  return out;
}

std::string Lemmatize(std::string_view token) {
  std::string w(token);
  for (;;) {
    std::string next = LemmaStep(w);
    if (next == w) return w;
    w = std::move(next);
  }
}

const StopwordSet& DefaultStopwords() {
  static const StopwordSet kWords = {
#include "stopwords.inc"
  };
  return kWords;
}

StopwordSet LoadStopwords(std::istream& in) {
  StopwordSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.insert(line);
  }
  return out;
}

std::vector<std::string> FilterTokens(const TokenizedDoc& tdoc,
                                      const StopwordSet& stopwords) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tdoc.lemmas.size(); ++i) {
    const std::string& lemma = tdoc.lemmas[i];
    if (stopwords.contains(lemma) || stopwords.contains(tdoc.tokens[i])) continue;
    if (!IsAlphabeticToken(lemma)) continue;
    if (CodepointCount(lemma) < 3) continue;
    out.push_back(lemma);
  }
  return out;
}

std::string LowercaseUtf8(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t start = i;
    const char32_t cp = DecodeUtf8(s, i);
    if (cp == kInvalid) {
      out.append(s.substr(start, i - start));
    } else {
      AppendUtf8(out, ToLower(cp));
    }
  }
  return out;
}

std::size_t CodepointCount(std::string_view s) {
  std::size_t count = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

}  // namespace mftk
