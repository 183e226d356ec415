#include "xling/agreement.h"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

namespace xling {

ContingencyTable ContingencyTable::transposed() const {
  ContingencyTable t;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) t.counts[j][i] = counts[i][j];
  }
  return t;
}

ContingencyTable build_table(const std::vector<SentimentLabel>& labels_a,
                             const std::vector<SentimentLabel>& labels_b) {
  return build_table(labels_a, labels_b, kSentimentLabels);
}

KappaResult kappa(const ContingencyTable& table) {
  const std::uint64_t n = table.n();
  if (n == 0) throw AgreementError(AgreementError::Kind::kLengthMismatch, "empty table");
  if (n >= (std::uint64_t{1} << 31)) {
    throw AgreementError(AgreementError::Kind::kOutOfRange, "table too large");
  }
  const auto sn = static_cast<std::int64_t>(n);
  const auto diag = static_cast<std::int64_t>(table.counts[0][0] + table.counts[1][1]);
  std::int64_t chance = 0;  // sum_i row_i * col_i = A_e * n^2
  for (std::size_t i = 0; i < 2; ++i) {
    chance += static_cast<std::int64_t>(table.row_total(i) * table.col_total(i));
  }
  const std::int64_t n2 = sn * sn;

  KappaResult r;
  r.observed = static_cast<double>(diag) / static_cast<double>(sn);
  r.expected = static_cast<double>(chance) / static_cast<double>(n2);
  const std::int64_t denom = n2 - chance;
  if (denom == 0) {
    r.degenerate = true;
    r.kappa = diag == sn ? 1.0 : 0.0;
  } else {
    r.kappa = static_cast<double>(sn * diag - chance) / static_cast<double>(denom);
  }
  return r;
}

KappaResult sentiment_agreement(const std::vector<SentimentPair>& annotated) {
  std::vector<SentimentLabel> a, b;
  a.reserve(annotated.size());
  b.reserve(annotated.size());
  for (const auto& [x, y] : annotated) {
    a.push_back(x);
    b.push_back(y);
  }
  return kappa(build_table(a, b));
}

EmotionKappas emotion_agreement(const std::vector<EmotionPair>& annotated) {
  EmotionKappas out;
  for (Emotion e : kEmotions) {
    std::vector<int> a, b;
    a.reserve(annotated.size());
    b.reserve(annotated.size());
    for (const auto& [x, y] : annotated) {
      a.push_back(x[e] ? 1 : 0);
      b.push_back(y[e] ? 1 : 0);
    }
    out[index_of(e)] = kappa(build_table(a, b, std::array<int, 2>{1, 0}));
  }
  return out;
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kLandisKoch:
      return "landis_koch";
    case Scheme::kKrippendorff:
      return "krippendorff";
    case Scheme::kGreenFleiss:
      return "green_fleiss";
  }
  return "";
}

ScaleBand interpret(double k, Scheme scheme) {
  if (!(k >= -1.0 && k <= 1.0)) {
    throw AgreementError(AgreementError::Kind::kOutOfRange, "kappa outside [-1, 1]");
  }
  ScaleBand b{scheme, {}};
  switch (scheme) {
    case Scheme::kLandisKoch:
      if (k < 0.0) {
        b.band = "none";
      } else if (k < 0.2) {
        b.band = "slight";
      } else if (k < 0.4) {
        b.band = "fair";
      } else if (k < 0.6) {
        b.band = "moderate";
      } else if (k < 0.8) {
        b.band = "substantial";
      } else {
        b.band = "perfect";
      }
      break;
    case Scheme::kKrippendorff:
      b.band = k < 0.67 ? "discard" : k < 0.8 ? "tentative" : "good";
      break;
    case Scheme::kGreenFleiss:
      b.band = k < 0.4 ? "low/poor" : k < 0.75 ? "fair/good" : "high/excellent";
      break;
  }
  return b;
}

AgreementReport make_report(const AnnotatedCorpus& corpus) {
  AgreementReport report;
  report.corpus_name = corpus.name;
  report.n_pairs = corpus.pairs.size();
  if (corpus.pairs.empty()) throw ValidationError("annotated corpus is empty");

  std::vector<SentimentPair> sentiments;
  std::vector<EmotionPair> emotions;
  std::size_t with_emotions = 0;
  for (const auto& ap : corpus.pairs) {
    if (!ap.source_label || !ap.target_label) {
      throw ValidationError("pair '" + ap.pair.pair_id + "' lacks a sentiment label");
    }
    sentiments.emplace_back(*ap.source_label, *ap.target_label);
    if (ap.source_emotions && ap.target_emotions) {
      ++with_emotions;
      emotions.emplace_back(*ap.source_emotions, *ap.target_emotions);
    } else if (ap.source_emotions || ap.target_emotions) {
      throw ValidationError("pair '" + ap.pair.pair_id + "' has emotions on one side only");
    }
  }
  if (with_emotions != 0 && with_emotions != corpus.pairs.size()) {
    throw ValidationError("emotion annotations present on only some pairs");
  }
  report.sentiment = sentiment_agreement(sentiments);
  if (with_emotions != 0) report.per_emotion = emotion_agreement(emotions);
  return report;
}

namespace {

nlohmann::ordered_json result_json(const KappaResult& r) {
  nlohmann::ordered_json j;
  j["observed"] = r.observed;
  j["expected"] = r.expected;
  j["kappa"] = r.kappa;
  j["degenerate"] = r.degenerate;
  nlohmann::ordered_json bands;
  for (Scheme s : kSchemes) bands[std::string(scheme_name(s))] = interpret(r.kappa, s).band;
  j["bands"] = bands;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void csv_row(std::ostream& out, const AgreementReport& report, std::string_view category,
             const KappaResult& r) {
  out << csv_field(report.corpus_name) << ',' << category << ',' << report.n_pairs << ','
      << format_double(r.observed) << ',' << format_double(r.expected) << ','
      << format_double(r.kappa) << ',' << (r.degenerate ? "true" : "false");
  for (Scheme s : kSchemes) out << ',' << csv_field(interpret(r.kappa, s).band);
  out << '\n';
}

}  // namespace

void write_report_json(const AgreementReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["corpus"] = report.corpus_name;
  j["n_pairs"] = report.n_pairs;
  j["sentiment"] = result_json(report.sentiment);
  nlohmann::ordered_json emotions = nlohmann::ordered_json::object();
  if (report.per_emotion) {
    for (Emotion e : kEmotions) {
      emotions[std::string(emotion_name(e))] = result_json((*report.per_emotion)[index_of(e)]);
    }
  }
  j["emotions"] = emotions;
  out << j.dump(2) << '\n';
}

void write_report_csv(const AgreementReport& report, std::ostream& out) {
  out << "corpus,category,n_pairs,observed,expected,kappa,degenerate";
  for (Scheme s : kSchemes) out << ',' << scheme_name(s);
  out << '\n';
  csv_row(out, report, "sentiment", report.sentiment);
  if (report.per_emotion) {
    for (Emotion e : kEmotions) csv_row(out, report, emotion_name(e), (*report.per_emotion)[index_of(e)]);
  }
}

}  // namespace xling
