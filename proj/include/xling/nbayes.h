#ifndef XLING_NBAYES_H_
#define XLING_NBAYES_H_

// Bernoulli Naive Bayes subjectivity classifier over binary 1/2/3-gram
// presence features.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "xling/corpus.h"
#include "xling/labels.h"
#include "xling/metrics.h"
#include "xling/textproc.h"

namespace xling {

struct FeatureConfig {
  std::set<int> orders = {1, 2, 3};
  // Minimum total occurrence count across the training corpus.
  int min_count = 2;
  Language lang = Language::kEnglish;

  // Throws ValidationError for empty or out-of-range orders, min_count < 1.
  void validate() const;

  bool operator==(const FeatureConfig&) const = default;
};

// Log-probabilities of one feature being present / absent given a class.
struct FeatureLogProb {
  double present = 0.0;
  double absent = 0.0;
};

using PerClass = std::array<double, 2>;  // indexed by index_of(SentimentLabel)

struct Prediction {
  SentimentLabel label = SentimentLabel::kObjective;
  PerClass log_posterior{};

  double log_posterior_of(SentimentLabel l) const { return log_posterior[index_of(l)]; }
  // Winning log-posterior minus the losing one; never negative.
  double margin() const;
};

class NaiveBayesModel {
 public:
  struct Feature {
    std::string key;  // NGram::key()
    std::array<FeatureLogProb, 2> given;  // indexed by class
  };

  // `features` must be sorted by key without duplicates.
  NaiveBayesModel(FeatureConfig config, PerClass class_log_prior, std::vector<Feature> features,
                  std::string trained_on);

  const FeatureConfig& config() const { return config_; }
  const std::string& trained_on() const { return trained_on_; }
  double class_log_prior(SentimentLabel l) const { return class_log_prior_[index_of(l)]; }
  const std::vector<Feature>& features() const { return features_; }
  std::size_t vocabulary_size() const { return features_.size(); }
  std::set<NGram> vocabulary() const;
  const Feature* find(const std::string& key) const;

  // Full-vocabulary Bernoulli scoring; ties go to objective.
  // Throws LanguageMismatchError if doc.lang differs from the model's.
  Prediction predict(const Document& doc) const;

 private:
  FeatureConfig config_;
  PerClass class_log_prior_;
  std::vector<Feature> features_;
  std::string trained_on_;
  std::unordered_map<std::string, std::size_t> index_;
  // Prior plus the sum of every feature's absent term, per class.
  PerClass all_absent_{};
};

// Distinct feature keys present in a document under `config`.
std::set<std::string> document_features(const Document& doc, const FeatureConfig& config);

// N-grams whose total occurrence count across `docs` reaches min_count.
std::set<NGram> build_vocabulary(const std::vector<Document>& docs, const FeatureConfig& config);

// Laplace-smoothed Bernoulli estimates:
//   p(present | c) = (docs of c containing f + 1) / (docs of c + 2).
// Throws MissingClassError if a class has no documents and
// LanguageMismatchError if a document is not in config.lang.
NaiveBayesModel train(const std::vector<TrainingExample>& examples, const FeatureConfig& config,
                      std::string trained_on = {});

struct ClassificationMetrics {
  double accuracy = 0.0;
  std::size_t total = 0;
  std::size_t correct = 0;
  // One-vs-rest metrics with each class taken as positive.
  std::array<BinaryMetrics, 2> per_class;
};

ClassificationMetrics evaluate(const NaiveBayesModel& model,
                               const std::vector<TrainingExample>& gold);

inline constexpr int kModelFormatVersion = 1;

void save_model(const NaiveBayesModel& model, const std::filesystem::path& path);
void write_model(const NaiveBayesModel& model, std::ostream& out);
// Throws IoError if unreadable, SchemaError on any format problem.
NaiveBayesModel load_model(const std::filesystem::path& path);
NaiveBayesModel read_model(std::istream& in);

}  // namespace xling

#endif  // XLING_NBAYES_H_
