#ifndef XLING_AGREEMENT_H_
#define XLING_AGREEMENT_H_

// Cohen's Kappa between two annotators over binary categories, its
// qualitative interpretation scales, and corpus-level agreement reports.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "xling/corpus.h"
#include "xling/error.h"
#include "xling/labels.h"

namespace xling {

// counts[i][j] = items that annotator A labeled category i and annotator B
// labeled category j.
struct ContingencyTable {
  std::array<std::array<std::uint64_t, 2>, 2> counts{};

  std::uint64_t n() const { return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1]; }
  std::uint64_t row_total(std::size_t i) const { return counts[i][0] + counts[i][1]; }
  std::uint64_t col_total(std::size_t j) const { return counts[0][j] + counts[1][j]; }
  ContingencyTable transposed() const;

  bool operator==(const ContingencyTable&) const = default;
};

// Tallies two equally long label sequences over a shared two-category set.
// Throws AgreementError(kLengthMismatch) for unequal or empty inputs and
// AgreementError(kUnknownCategory) for labels outside `categories`.
template <std::ranges::input_range A, std::ranges::input_range B, typename L>
ContingencyTable build_table(const A& labels_a, const B& labels_b,
                             const std::array<L, 2>& categories) {
  auto slot = [&](const auto& label) -> std::size_t {
    if (label == categories[0]) return 0;
    if (label == categories[1]) return 1;
    throw AgreementError(AgreementError::Kind::kUnknownCategory,
                         "label outside the two agreement categories");
  };
  ContingencyTable t;
  auto ia = std::ranges::begin(labels_a);
  auto ib = std::ranges::begin(labels_b);
  for (; ia != std::ranges::end(labels_a) && ib != std::ranges::end(labels_b); ++ia, ++ib) {
    ++t.counts[slot(*ia)][slot(*ib)];
  }
  if (ia != std::ranges::end(labels_a) || ib != std::ranges::end(labels_b)) {
    throw AgreementError(AgreementError::Kind::kLengthMismatch,
                         "annotators labeled different numbers of items");
  }
  if (t.n() == 0) {
    throw AgreementError(AgreementError::Kind::kLengthMismatch, "no items to compare");
  }
  return t;
}

ContingencyTable build_table(const std::vector<SentimentLabel>& labels_a,
                             const std::vector<SentimentLabel>& labels_b);

struct KappaResult {
  double observed = 0.0;  // A_o
  double expected = 0.0;  // A_e
  double kappa = 0.0;
  // A_e == 1: both annotators used one identical category throughout.
  // Kappa is then 1 when A_o == 1 and 0 otherwise.
  bool degenerate = false;
};

// A_o = diagonal / n, A_e = sum_i p_A(i) * p_B(i),
// kappa = (A_o - A_e) / (1 - A_e). Evaluated from integer counts so the
// only rounding is the final division. Requires 1 <= n < 2^31.
KappaResult kappa(const ContingencyTable& table);

using SentimentPair = std::pair<SentimentLabel, SentimentLabel>;
using EmotionPair = std::pair<EmotionVector, EmotionVector>;
using EmotionKappas = std::array<KappaResult, kNumEmotions>;

// Annotator A is the source-side classifier, B the target side.
KappaResult sentiment_agreement(const std::vector<SentimentPair>& annotated);

// One presence/absence Kappa per emotion.
EmotionKappas emotion_agreement(const std::vector<EmotionPair>& annotated);

enum class Scheme { kLandisKoch, kKrippendorff, kGreenFleiss };

inline constexpr std::array<Scheme, 3> kSchemes = {Scheme::kLandisKoch, Scheme::kKrippendorff,
                                                   Scheme::kGreenFleiss};

std::string_view scheme_name(Scheme scheme);

struct ScaleBand {
  Scheme scheme = Scheme::kLandisKoch;
  std::string band;

  bool operator==(const ScaleBand&) const = default;
};

// Bands are left-closed: a value on a boundary belongs to the upper band.
//   landis_koch:  <0 none | slight | 0.2 fair | 0.4 moderate | 0.6 substantial | 0.8 perfect
//   krippendorff: <0.67 discard | tentative | 0.8 good
//   green_fleiss: <0.4 low/poor | fair/good | 0.75 high/excellent
// Throws AgreementError(kOutOfRange) unless -1 <= k <= 1.
ScaleBand interpret(double k, Scheme scheme);

struct AgreementReport {
  std::string corpus_name;
  std::size_t n_pairs = 0;
  KappaResult sentiment;
  std::optional<EmotionKappas> per_emotion;
};

// Every pair must carry both sentiment labels. Emotions are included when
// every pair carries both emotion arrays and must be all-or-nothing.
// Throws ValidationError otherwise.
AgreementReport make_report(const AnnotatedCorpus& corpus);

void write_report_json(const AgreementReport& report, std::ostream& out);
// Header plus one row for sentiment and one per emotion when present.
void write_report_csv(const AgreementReport& report, std::ostream& out);

}  // namespace xling

#endif  // XLING_AGREEMENT_H_
