#ifndef XLING_EMOLEX_H_
#define XLING_EMOLEX_H_

// Emotion lexicon loading and lexicon-based emotion tagging.
//
// Lexicon files are UTF-8 TSV with four columns:
//   synset_id <TAB> emotion <TAB> lang <TAB> space-separated words
// Lines starting with '#' and blank lines are ignored. A single file may
// carry several languages; loading keeps the rows of the requested one.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "xling/labels.h"
#include "xling/metrics.h"

namespace xling {

struct LexiconEntry {
  std::string synset_id;
  Emotion emotion = Emotion::kAnger;
  Language lang = Language::kEnglish;
  std::vector<std::string> words;  // distinct, non-empty
};

class EmotionLexicon {
 public:
  // Throws LexiconError(kEmptyLexicon) when `entries` is empty and
  // LexiconError(kMalformedRow) for entries that break an invariant.
  EmotionLexicon(Language lang, std::vector<LexiconEntry> entries);

  Language lang() const { return lang_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  // Stem -> every emotion some word with that stem belongs to.
  const std::map<std::string, EmotionVector>& stem_index() const { return stem_index_; }

  EmotionVector lookup(const std::string& stem) const;

 private:
  Language lang_;
  std::vector<LexiconEntry> entries_;
  std::map<std::string, EmotionVector> stem_index_;
};

struct EmotionCounts {
  std::size_t synsets = 0;
  std::size_t words = 0;
};

struct LexiconCounts {
  std::array<EmotionCounts, kNumEmotions> per_emotion{};
  EmotionCounts total;
};

// Distinct synset ids and word totals per emotion.
LexiconCounts lexicon_counts(const EmotionLexicon& lexicon);

EmotionLexicon load_lexicon(const std::filesystem::path& path, Language lang);
EmotionLexicon read_lexicon(std::istream& in, Language lang);

// Bag-of-words of `text` in the lexicon's language, each stem looked up in
// the lexicon; every matched emotion is flagged.
EmotionVector tag_emotions(std::string_view text, const EmotionLexicon& lexicon);

struct EmotionGold {
  std::string text;
  EmotionVector emotions;
};

// Per-emotion binary metrics of tag_emotions against gold annotations.
std::array<BinaryMetrics, kNumEmotions> evaluate_lexicon(const std::vector<EmotionGold>& gold,
                                                         const EmotionLexicon& lexicon);

// JSON lines: {"text": ..., "emotions": [names...]}. Both fields required.
std::vector<EmotionGold> load_emotion_gold(const std::filesystem::path& path);
std::vector<EmotionGold> read_emotion_gold(std::istream& in);

}  // namespace xling

#endif  // XLING_EMOLEX_H_
