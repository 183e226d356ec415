#include "xling/emolex.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xling/error.h"
#include "xling/textproc.h"

namespace xling {

namespace {

[[noreturn]] void malformed_row(std::size_t line, const std::string& what) {
  throw LexiconError(LexiconError::Kind::kMalformedRow, line,
                     "lexicon line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

EmotionLexicon::EmotionLexicon(Language lang, std::vector<LexiconEntry> entries)
    : lang_(lang), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw LexiconError(LexiconError::Kind::kEmptyLexicon, 0,
                       "lexicon has no " + std::string(language_name(lang)) + " entries");
  }
  for (const auto& e : entries_) {
    if (e.lang != lang_) {
      malformed_row(0, "entry '" + e.synset_id + "' is not " + std::string(language_name(lang_)));
    }
    if (e.words.empty()) malformed_row(0, "entry '" + e.synset_id + "' has no words");
    EmotionVector v;
    v.set(e.emotion);
    for (const auto& w : e.words) {
      // Indexing the word's own bag-of-words keeps lookups consistent with
      // how text is processed in tag_emotions.
      const auto stems = bag_of_words(w, lang_);
      if (stems.empty()) malformed_row(0, "word '" + w + "' has no usable characters");
      for (const auto& s : stems) stem_index_[s].merge(v);
    }
  }
}

EmotionVector EmotionLexicon::lookup(const std::string& stem) const {
  auto it = stem_index_.find(stem);
  return it == stem_index_.end() ? EmotionVector{} : it->second;
}

LexiconCounts lexicon_counts(const EmotionLexicon& lexicon) {
  LexiconCounts counts;
  std::array<std::set<std::string>, kNumEmotions> synsets;
  for (const auto& e : lexicon.entries()) {
    synsets[index_of(e.emotion)].insert(e.synset_id);
    counts.per_emotion[index_of(e.emotion)].words += e.words.size();
  }
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    counts.per_emotion[i].synsets = synsets[i].size();
    counts.total.synsets += counts.per_emotion[i].synsets;
    counts.total.words += counts.per_emotion[i].words;
  }
  return counts;
}

EmotionLexicon read_lexicon(std::istream& in, Language lang) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    const auto fields = split(line, '\t');
    if (fields.size() != 4) {
      malformed_row(lineno, "expected 4 tab-separated fields, got " +
                                std::to_string(fields.size()));
    }
    LexiconEntry entry;
    entry.synset_id = fields[0];
    if (entry.synset_id.empty()) malformed_row(lineno, "empty synset id");
    try {
      entry.emotion = parse_emotion(fields[1]);
      entry.lang = parse_language(fields[2]);
    } catch (const ValidationError& e) {
      malformed_row(lineno, e.what());
    }
    std::set<std::string> seen;
    std::istringstream ws(fields[3]);
    std::string word;
    while (ws >> word) {
      if (seen.insert(word).second) entry.words.push_back(word);
    }
    if (entry.words.empty()) malformed_row(lineno, "no words");
    if (entry.lang != lang) continue;
    for (const auto& w : entry.words) {
      if (bag_of_words(w, lang).empty()) {
        malformed_row(lineno, "word '" + w + "' has no usable characters");
      }
    }
    entries.push_back(std::move(entry));
  }
  if (in.bad()) throw IoError("read error in lexicon");
  return EmotionLexicon(lang, std::move(entries));
}

EmotionLexicon load_lexicon(const std::filesystem::path& path, Language lang) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_lexicon(in, lang);
}

EmotionVector tag_emotions(std::string_view text, const EmotionLexicon& lexicon) {
  EmotionVector out;
  for (const auto& stem : bag_of_words(text, lexicon.lang())) out.merge(lexicon.lookup(stem));
  return out;
}

std::array<BinaryMetrics, kNumEmotions> evaluate_lexicon(const std::vector<EmotionGold>& gold,
                                                         const EmotionLexicon& lexicon) {
  if (gold.empty()) throw ValidationError("lexicon evaluation needs at least one gold sentence");
  std::array<Confusion, kNumEmotions> confusion;
  for (const auto& g : gold) {
    const EmotionVector predicted = tag_emotions(g.text, lexicon);
    for (Emotion e : kEmotions) confusion[index_of(e)].add(g.emotions[e], predicted[e]);
  }
  std::array<BinaryMetrics, kNumEmotions> out;
  for (std::size_t i = 0; i < kNumEmotions; ++i) out[i] = binary_metrics(confusion[i]);
  return out;
}

std::vector<EmotionGold> read_emotion_gold(std::istream& in) {
  std::vector<EmotionGold> gold;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& what) {
      throw ValidationError("gold line " + std::to_string(lineno) + ": " + what);
    };
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("record must be an object");
    auto text = j.find("text");
    auto emotions = j.find("emotions");
    if (text == j.end() || !text->is_string()) fail("missing string field 'text'");
    if (emotions == j.end() || !emotions->is_array()) fail("missing array field 'emotions'");
    std::vector<std::string> names;
    for (const auto& n : *emotions) {
      if (!n.is_string()) fail("emotion names must be strings");
      names.push_back(n.get<std::string>());
    }
    EmotionGold g;
    g.text = text->get<std::string>();
    try {
      g.emotions = EmotionVector::from_names(names);
    } catch (const ValidationError& e) {
      fail(e.what());
    }
    gold.push_back(std::move(g));
  }
  if (gold.empty()) throw ValidationError("gold file has no records");
  return gold;
}

std::vector<EmotionGold> load_emotion_gold(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_emotion_gold(in);
}

}  // namespace xling
