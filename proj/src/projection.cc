#include "xling/projection.h"

#include "xling/error.h"

namespace xling {

std::vector<LabeledDocument> annotate_side(const NaiveBayesModel& model, const Corpus& corpus,
                                           Side side) {
  std::vector<LabeledDocument> out;
  out.reserve(corpus.pairs.size());
  for (const auto& p : corpus.pairs) {
    const Document& doc = side == Side::kSource ? p.source : p.target;
    if (doc.lang != model.config().lang) {
      throw LanguageMismatchError(std::string(side == Side::kSource ? "source" : "target") +
                                  " side is " + std::string(language_name(doc.lang)) +
                                  " but the model is " +
                                  std::string(language_name(model.config().lang)));
    }
    const Prediction pred = model.predict(doc);
    out.push_back(LabeledDocument{doc, pred.label, pred.margin()});
  }
  return out;
}

std::vector<LabeledDocument> project_labels(const Corpus& corpus,
                                            const std::vector<LabeledDocument>& source_labels) {
  if (source_labels.size() != corpus.pairs.size()) {
    throw AlignmentError("got " + std::to_string(source_labels.size()) + " source labels for " +
                         std::to_string(corpus.pairs.size()) + " pairs");
  }
  std::vector<LabeledDocument> out;
  out.reserve(corpus.pairs.size());
  for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
    const auto& p = corpus.pairs[i];
    if (source_labels[i].doc.id != p.source.id) {
      throw AlignmentError("label " + std::to_string(i) + " is for '" + source_labels[i].doc.id +
                           "', pair '" + p.pair_id + "' has source '" + p.source.id + "'");
    }
    out.push_back(LabeledDocument{p.target, source_labels[i].label, 0.0});
  }
  return out;
}

FeatureConfig target_config_for(const FeatureConfig& source, Language target_lang) {
  FeatureConfig cfg = source;
  cfg.lang = target_lang;
  return cfg;
}

NaiveBayesModel bootstrap_target(const Corpus& corpus, const NaiveBayesModel& source_model,
                                 const FeatureConfig& target_config) {
  if (corpus.kind != CorpusKind::kParallel) {
    throw ValidationError("projection requires a parallel corpus, '" + corpus.name +
                          "' is comparable");
  }
  if (corpus.pairs.empty()) throw ValidationError("projection corpus is empty");
  if (target_config.lang != corpus.pairs.front().target.lang) {
    throw LanguageMismatchError("target config language does not match the corpus target side");
  }
  const auto projected = project_labels(corpus, annotate_side(source_model, corpus, Side::kSource));
  std::vector<TrainingExample> examples;
  examples.reserve(projected.size());
  for (const auto& ld : projected) examples.push_back(TrainingExample{ld.doc, ld.label});
  return train(examples, target_config, corpus.name);
}

std::vector<LabelPair> transfer_check(const Corpus& corpus, const NaiveBayesModel& source_model,
                                      const NaiveBayesModel& target_model) {
  const auto src = annotate_side(source_model, corpus, Side::kSource);
  const auto tgt = annotate_side(target_model, corpus, Side::kTarget);
  std::vector<LabelPair> out;
  out.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out.emplace_back(src[i].label, tgt[i].label);
  return out;
}

}  // namespace xling
