#ifndef MFTK_TEXT_H_
#define MFTK_TEXT_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace mftk {

struct Document {
  std::string id;
  std::string text;  // UTF-8, may be empty
};

// Tokens and their lemmas, index-aligned. The token count is the length used
// by every length normalization.
struct TokenizedDoc {
  std::string doc_id;
  std::vector<std::string> tokens;
  std::vector<std::string> lemmas;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Splits text into maximal runs of letters, digits, apostrophes and hyphens,
// lowercased. Apostrophes and hyphens at either end of a run are trimmed and
// runs with no letter or digit are dropped. Typographic apostrophes (U+2019,
// U+02BC) and hyphens (U+2010, U+2011) are folded to their ASCII forms.
// Invalid UTF-8 bytes act as separators.
TokenizedDoc Tokenize(const Document& doc);

// Token list only, for callers that do not need lemmas.
std::vector<std::string> TokenizeText(std::string_view text);

// Rule-based suffix stripping: plural -s/-es, -ies -> y, -ied -> y, verbal
// -ed/-ing with doubled-consonant undoubling and silent-e restoration. Words
// ending in -ly are left alone. Rules are applied to a fixed point so the
// function is idempotent.
std::string Lemmatize(std::string_view token);

using StopwordSet = std::unordered_set<std::string>;

// The bundled 179-word English list (same content as data/stopwords.txt).
const StopwordSet& DefaultStopwords();

// One lowercase word per line; blank lines ignored.
StopwordSet LoadStopwords(std::istream& in);

// The tf-idf preprocessing chain: lemmas, minus stop words (matched on either
// the token or its lemma), minus anything containing a non-alphabetic
// character, minus anything shorter than three characters.
std::vector<std::string> FilterTokens(const TokenizedDoc& tdoc,
                                      const StopwordSet& stopwords);

// Lowercases with the same case mapping the tokenizer uses.
std::string LowercaseUtf8(std::string_view s);

// Number of UTF-8 code points.
std::size_t CodepointCount(std::string_view s);

}  // namespace mftk

#endif  // MFTK_TEXT_H_
