#ifndef XLING_PROJECTION_H_
#define XLING_PROJECTION_H_

// Cross-lingual annotation projection: label one side of a parallel corpus
// with a classifier, copy the labels to the aligned side and train a
// classifier for the other language from them.

#include <utility>
#include <vector>

#include "xling/corpus.h"
#include "xling/nbayes.h"

namespace xling {

enum class Side { kSource, kTarget };

// One LabeledDocument per pair, in corpus order.
// Throws LanguageMismatchError if the side's language differs from the model's.
std::vector<LabeledDocument> annotate_side(const NaiveBayesModel& model, const Corpus& corpus,
                                           Side side);

// Target document i receives the label of source document i. Scores are
// reset to 0 since they belong to the source model. Throws AlignmentError
// when counts or source ids do not line up with the corpus.
std::vector<LabeledDocument> project_labels(const Corpus& corpus,
                                            const std::vector<LabeledDocument>& source_labels);

// `source` with its language replaced by the corpus target language.
FeatureConfig target_config_for(const FeatureConfig& source, Language target_lang);

// annotate_side -> project_labels -> train. Requires a parallel corpus.
NaiveBayesModel bootstrap_target(const Corpus& corpus, const NaiveBayesModel& source_model,
                                 const FeatureConfig& target_config);

using LabelPair = std::pair<SentimentLabel, SentimentLabel>;

// Labels each side with its own model; pair i is (source label, target label).
std::vector<LabelPair> transfer_check(const Corpus& corpus, const NaiveBayesModel& source_model,
                                      const NaiveBayesModel& target_model);

}  // namespace xling

#endif  // XLING_PROJECTION_H_
