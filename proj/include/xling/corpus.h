#ifndef XLING_CORPUS_H_
#define XLING_CORPUS_H_

// Bilingual corpora: data model, JSON-lines I/O, statistics and splitting.
//
// A corpus file holds one JSON object per line:
//   {"pair_id": ..., "source": {"id", "lang", "text"}, "target": {...}}
// Annotated corpora add "source_label"/"target_label" and optionally
// "source_emotions"/"target_emotions" (arrays of emotion names).

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xling/labels.h"

namespace xling {

struct Document {
  std::string id;
  Language lang = Language::kEnglish;
  std::string text;

  bool operator==(const Document&) const = default;
};

struct DocumentPair {
  std::string pair_id;
  Document source;
  Document target;

  bool operator==(const DocumentPair&) const = default;
};

enum class CorpusKind { kParallel, kComparable };

CorpusKind parse_corpus_kind(std::string_view name);
std::string_view corpus_kind_name(CorpusKind kind);

struct Corpus {
  std::string name;
  CorpusKind kind = CorpusKind::kParallel;
  std::vector<DocumentPair> pairs;

  bool operator==(const Corpus&) const = default;
};

// A classifier decision for one document. `score` is the log-posterior
// margin of the chosen label over the other one (0 for projected labels).
struct LabeledDocument {
  Document doc;
  SentimentLabel label = SentimentLabel::kObjective;
  double score = 0.0;
};

// A corpus pair with whatever annotations have been attached to it.
struct AnnotatedPair {
  DocumentPair pair;
  std::optional<SentimentLabel> source_label;
  std::optional<SentimentLabel> target_label;
  std::optional<EmotionVector> source_emotions;
  std::optional<EmotionVector> target_emotions;

  bool operator==(const AnnotatedPair&) const = default;
};

struct AnnotatedCorpus {
  std::string name;
  CorpusKind kind = CorpusKind::kComparable;
  std::vector<AnnotatedPair> pairs;

  bool operator==(const AnnotatedCorpus&) const = default;
};

struct SideStats {
  std::uint64_t word_count = 0;
  std::uint64_t vocab_size = 0;
};

struct CorpusStats {
  std::uint64_t pair_count = 0;
  SideStats source;
  SideStats target;
};

// Checks every Document/DocumentPair/Corpus invariant; throws CorpusError.
void validate_corpus(const Corpus& corpus);

// Parses and validates. The corpus name is the file stem. Throws IoError if
// the file cannot be read and CorpusError for content problems.
Corpus load_corpus(const std::filesystem::path& path, CorpusKind kind);
Corpus read_corpus(std::istream& in, std::string name, CorpusKind kind);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

AnnotatedCorpus load_annotated(const std::filesystem::path& path, CorpusKind kind);
AnnotatedCorpus read_annotated(std::istream& in, std::string name, CorpusKind kind);
void save_annotated(const AnnotatedCorpus& corpus, const std::filesystem::path& path);
void write_annotated(const AnnotatedCorpus& corpus, std::ostream& out);

CorpusStats corpus_stats(const Corpus& corpus);

// Seeded shuffle, then the first round(fraction * N) pairs go to the first
// part. Throws ValidationError unless 0 < fraction < 1 and N >= 2.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double fraction, std::uint64_t seed);

// Monolingual labeled documents (training and gold data), one JSON object
// per line: {"id", "lang", "text", "label"}.
struct TrainingExample {
  Document doc;
  SentimentLabel label = SentimentLabel::kObjective;

  bool operator==(const TrainingExample&) const = default;
};

std::vector<TrainingExample> load_labeled_documents(const std::filesystem::path& path);
std::vector<TrainingExample> read_labeled_documents(std::istream& in);
void save_labeled_documents(const std::vector<TrainingExample>& docs,
                            const std::filesystem::path& path);

}  // namespace xling

#endif  // XLING_CORPUS_H_
