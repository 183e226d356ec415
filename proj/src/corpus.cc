#include "xling/corpus.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "utf8.h"
#include "xling/error.h"
#include "xling/textproc.h"

namespace xling {

using ordered_json = nlohmann::ordered_json;

namespace {

bool is_blank(std::string_view text) {
  for (char32_t c : utf8::decode(text)) {
    if (!utf8::is_space(c)) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw CorpusError(CorpusError::Kind::kMalformedRecord, line,
                    "line " + std::to_string(line) + ": " + what);
}

const ordered_json& require(const ordered_json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(line, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const ordered_json& obj, const char* key, std::size_t line) {
  const auto& v = require(obj, key, line);
  if (!v.is_string()) malformed(line, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Document parse_document(const ordered_json& obj, std::size_t line) {
  if (!obj.is_object()) malformed(line, "document must be an object");
  Document doc;
  doc.id = require_string(obj, "id", line);
  try {
    doc.lang = parse_language(require_string(obj, "lang", line));
  } catch (const CorpusError&) {
    throw;
  } catch (const ValidationError& e) {
    malformed(line, e.what());
  }
  doc.text = require_string(obj, "text", line);
  return doc;
}

ordered_json document_json(const Document& doc) {
  ordered_json j;
  j["id"] = doc.id;
  j["lang"] = language_name(doc.lang);
  j["text"] = doc.text;
  return j;
}

ordered_json pair_json(const DocumentPair& p) {
  ordered_json j;
  j["pair_id"] = p.pair_id;
  j["source"] = document_json(p.source);
  j["target"] = document_json(p.target);
  return j;
}

// Parses one JSON object per non-blank line and hands it to `fn` with its
// 1-based line number.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    ordered_json obj;
    try {
      obj = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      malformed(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) malformed(lineno, "record must be a JSON object");
    fn(obj, lineno);
  }
  if (in.bad()) throw IoError("read error");
}

DocumentPair parse_pair(const ordered_json& obj, std::size_t line) {
  DocumentPair p;
  p.pair_id = require_string(obj, "pair_id", line);
  p.source = parse_document(require(obj, "source", line), line);
  p.target = parse_document(require(obj, "target", line), line);
  return p;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

// Validation shared by plain and annotated corpora; `lines` maps pair index
// to source line (empty when validating an in-memory corpus).
void validate_pairs(const std::vector<const DocumentPair*>& pairs,
                    const std::vector<std::size_t>& lines) {
  auto line_of = [&](std::size_t i) { return lines.empty() ? 0 : lines[i]; };
  auto where = [&](std::size_t i) {
    return lines.empty() ? "pair " + std::to_string(i) : "line " + std::to_string(lines[i]);
  };
  if (pairs.empty()) throw CorpusError(CorpusError::Kind::kEmptyCorpus, 0, "corpus is empty");

  std::unordered_set<std::string> pair_ids, source_ids, target_ids;
  const Language src_lang = pairs.front()->source.lang;
  const Language tgt_lang = pairs.front()->target.lang;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const DocumentPair& p = *pairs[i];
    if (p.pair_id.empty()) {
      throw CorpusError(CorpusError::Kind::kMalformedRecord, line_of(i),
                        where(i) + ": empty pair_id");
    }
    for (const Document* d : {&p.source, &p.target}) {
      if (d->id.empty()) {
        throw CorpusError(CorpusError::Kind::kMalformedRecord, line_of(i),
                          where(i) + ": empty document id");
      }
      if (is_blank(d->text)) {
        throw CorpusError(CorpusError::Kind::kMalformedRecord, line_of(i),
                          where(i) + ": document '" + d->id + "' has no text");
      }
    }
    if (p.source.lang == p.target.lang) {
      throw CorpusError(CorpusError::Kind::kLanguageMismatch, line_of(i),
                        where(i) + ": source and target share language " +
                            std::string(language_name(p.source.lang)));
    }
    if (p.source.lang != src_lang || p.target.lang != tgt_lang) {
      throw CorpusError(CorpusError::Kind::kLanguageMismatch, line_of(i),
                        where(i) + ": language order differs from the first pair");
    }
    if (!pair_ids.insert(p.pair_id).second) {
      throw CorpusError(CorpusError::Kind::kDuplicateId, line_of(i),
                        where(i) + ": duplicate pair_id '" + p.pair_id + "'");
    }
    if (!source_ids.insert(p.source.id).second) {
      throw CorpusError(CorpusError::Kind::kDuplicateId, line_of(i),
                        where(i) + ": duplicate source id '" + p.source.id + "'");
    }
    if (!target_ids.insert(p.target.id).second) {
      throw CorpusError(CorpusError::Kind::kDuplicateId, line_of(i),
                        where(i) + ": duplicate target id '" + p.target.id + "'");
    }
  }
}

std::optional<SentimentLabel> parse_optional_label(const ordered_json& obj, const char* key,
                                                   std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) malformed(line, std::string("field '") + key + "' must be a string");
  try {
    return parse_sentiment(it->get<std::string>());
  } catch (const ValidationError& e) {
    malformed(line, e.what());
  }
}

std::optional<EmotionVector> parse_optional_emotions(const ordered_json& obj, const char* key,
                                                     std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_array()) malformed(line, std::string("field '") + key + "' must be an array");
  std::vector<std::string> names;
  for (const auto& v : *it) {
    if (!v.is_string()) malformed(line, std::string("field '") + key + "' holds a non-string");
    names.push_back(v.get<std::string>());
  }
  try {
    return EmotionVector::from_names(names);
  } catch (const ValidationError& e) {
    malformed(line, e.what());
  }
}

}  // namespace

CorpusKind parse_corpus_kind(std::string_view name) {
  if (name == "parallel") return CorpusKind::kParallel;
  if (name == "comparable") return CorpusKind::kComparable;
  throw ValidationError("unknown corpus kind '" + std::string(name) + "'");
}

std::string_view corpus_kind_name(CorpusKind kind) {
  return kind == CorpusKind::kParallel ? "parallel" : "comparable";
}

void validate_corpus(const Corpus& corpus) {
  std::vector<const DocumentPair*> ptrs;
  ptrs.reserve(corpus.pairs.size());
  for (const auto& p : corpus.pairs) ptrs.push_back(&p);
  validate_pairs(ptrs, {});
}

Corpus read_corpus(std::istream& in, std::string name, CorpusKind kind) {
  Corpus c{std::move(name), kind, {}};
  std::vector<std::size_t> lines;
  for_each_record(in, [&](const ordered_json& obj, std::size_t line) {
    c.pairs.push_back(parse_pair(obj, line));
    lines.push_back(line);
  });
  std::vector<const DocumentPair*> ptrs;
  for (const auto& p : c.pairs) ptrs.push_back(&p);
  validate_pairs(ptrs, lines);
  return c;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusKind kind) {
  auto in = open_input(path);
  return read_corpus(in, path.stem().string(), kind);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& p : corpus.pairs) out << pair_json(p).dump() << '\n';
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_corpus(corpus, out);
  finish_output(out, path);
}

AnnotatedCorpus read_annotated(std::istream& in, std::string name, CorpusKind kind) {
  AnnotatedCorpus c{std::move(name), kind, {}};
  std::vector<std::size_t> lines;
  for_each_record(in, [&](const ordered_json& obj, std::size_t line) {
    AnnotatedPair ap;
    ap.pair = parse_pair(obj, line);
    ap.source_label = parse_optional_label(obj, "source_label", line);
    ap.target_label = parse_optional_label(obj, "target_label", line);
    ap.source_emotions = parse_optional_emotions(obj, "source_emotions", line);
    ap.target_emotions = parse_optional_emotions(obj, "target_emotions", line);
    c.pairs.push_back(std::move(ap));
    lines.push_back(line);
  });
  std::vector<const DocumentPair*> ptrs;
  for (const auto& p : c.pairs) ptrs.push_back(&p.pair);
  validate_pairs(ptrs, lines);
  return c;
}

AnnotatedCorpus load_annotated(const std::filesystem::path& path, CorpusKind kind) {
  auto in = open_input(path);
  return read_annotated(in, path.stem().string(), kind);
}

void write_annotated(const AnnotatedCorpus& corpus, std::ostream& out) {
  for (const auto& ap : corpus.pairs) {
    ordered_json j = pair_json(ap.pair);
    if (ap.source_label) j["source_label"] = sentiment_name(*ap.source_label);
    if (ap.target_label) j["target_label"] = sentiment_name(*ap.target_label);
    if (ap.source_emotions) j["source_emotions"] = ap.source_emotions->names();
    if (ap.target_emotions) j["target_emotions"] = ap.target_emotions->names();
    out << j.dump() << '\n';
  }
}

void save_annotated(const AnnotatedCorpus& corpus, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_annotated(corpus, out);
  finish_output(out, path);
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.pair_count = corpus.pairs.size();
  std::unordered_set<std::string> src_vocab, tgt_vocab;
  for (const auto& p : corpus.pairs) {
    for (auto& tok : tokenize(p.source.text, p.source.lang)) {
      ++stats.source.word_count;
      src_vocab.insert(std::move(tok));
    }
    for (auto& tok : tokenize(p.target.text, p.target.lang)) {
      ++stats.target.word_count;
      tgt_vocab.insert(std::move(tok));
    }
  }
  stats.source.vocab_size = src_vocab.size();
  stats.target.vocab_size = tgt_vocab.size();
  return stats;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw ValidationError("split fraction must lie strictly between 0 and 1");
  }
  const std::size_t n = corpus.pairs.size();
  if (n < 2) throw ValidationError("splitting needs at least two pairs");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Fisher-Yates with an explicit reduction so the permutation does not
  // depend on the standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  const auto head = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  std::pair<Corpus, Corpus> parts{Corpus{corpus.name + ".a", corpus.kind, {}},
                                  Corpus{corpus.name + ".b", corpus.kind, {}}};
  for (std::size_t k = 0; k < n; ++k) {
    (k < head ? parts.first : parts.second).pairs.push_back(corpus.pairs[order[k]]);
  }
  return parts;
}

std::vector<TrainingExample> read_labeled_documents(std::istream& in) {
  std::vector<TrainingExample> docs;
  std::unordered_set<std::string> ids;
  for_each_record(in, [&](const ordered_json& obj, std::size_t line) {
    TrainingExample ex;
    ex.doc = parse_document(obj, line);
    auto label = parse_optional_label(obj, "label", line);
    if (!label) malformed(line, "missing field 'label'");
    ex.label = *label;
    if (ex.doc.id.empty()) malformed(line, "empty document id");
    if (is_blank(ex.doc.text)) malformed(line, "document '" + ex.doc.id + "' has no text");
    if (!ids.insert(ex.doc.id).second) {
      throw CorpusError(CorpusError::Kind::kDuplicateId, line,
                        "line " + std::to_string(line) + ": duplicate id '" + ex.doc.id + "'");
    }
    docs.push_back(std::move(ex));
  });
  if (docs.empty()) throw CorpusError(CorpusError::Kind::kEmptyCorpus, 0, "no labeled documents");
  return docs;
}

std::vector<TrainingExample> load_labeled_documents(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_labeled_documents(in);
}

void save_labeled_documents(const std::vector<TrainingExample>& docs,
                            const std::filesystem::path& path) {
  auto out = open_output(path);
  for (const auto& ex : docs) {
    ordered_json j = document_json(ex.doc);
    j["label"] = sentiment_name(ex.label);
    out << j.dump() << '\n';
  }
  finish_output(out, path);
}

}  // namespace xling
