#include "xling/nbayes.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xling/error.h"

namespace xling {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kModelFormat = "xling.naive_bayes";
constexpr double kProbabilityTolerance = 1e-9;

std::vector<std::string> feature_keys(const Document& doc, const FeatureConfig& config) {
  std::vector<std::string> keys;
  for (const auto& g : extract_ngrams(tokenize(doc.text, config.lang), config.orders)) {
    keys.push_back(g.key());
  }
  return keys;
}

void check_language(const Document& doc, Language expected) {
  if (doc.lang != expected) {
    throw LanguageMismatchError("document '" + doc.id + "' is " +
                                std::string(language_name(doc.lang)) + ", model expects " +
                                std::string(language_name(expected)));
  }
}

}  // namespace

void FeatureConfig::validate() const {
  if (orders.empty()) throw ValidationError("feature orders must not be empty");
  for (int n : orders) {
    if (n < 1 || n > kMaxNGramOrder) {
      throw ValidationError("feature order " + std::to_string(n) + " outside 1..3");
    }
  }
  if (min_count < 1) throw ValidationError("min_count must be at least 1");
}

double Prediction::margin() const {
  return std::abs(log_posterior[0] - log_posterior[1]);
}

NaiveBayesModel::NaiveBayesModel(FeatureConfig config, PerClass class_log_prior,
                                 std::vector<Feature> features, std::string trained_on)
    : config_(std::move(config)),
      class_log_prior_(class_log_prior),
      features_(std::move(features)),
      trained_on_(std::move(trained_on)) {
  config_.validate();
  index_.reserve(features_.size());
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (i > 0 && !(features_[i - 1].key < features_[i].key)) {
      throw ValidationError("model features must be sorted and unique");
    }
    index_.emplace(features_[i].key, i);
  }
  for (std::size_t c = 0; c < 2; ++c) {
    double sum = class_log_prior_[c];
    for (const auto& f : features_) sum += f.given[c].absent;
    all_absent_[c] = sum;
  }
}

std::set<NGram> NaiveBayesModel::vocabulary() const {
  std::set<NGram> out;
  for (const auto& f : features_) out.insert(NGram::from_key(f.key));
  return out;
}

const NaiveBayesModel::Feature* NaiveBayesModel::find(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &features_[it->second];
}

Prediction NaiveBayesModel::predict(const Document& doc) const {
  check_language(doc, config_.lang);
  Prediction p;
  p.log_posterior = all_absent_;
  for (const auto& key : document_features(doc, config_)) {
    const Feature* f = find(key);
    if (f == nullptr) continue;
    for (std::size_t c = 0; c < 2; ++c) {
      p.log_posterior[c] += f->given[c].present - f->given[c].absent;
    }
  }
  const double subj = p.log_posterior_of(SentimentLabel::kSubjective);
  const double obj = p.log_posterior_of(SentimentLabel::kObjective);
  p.label = subj > obj ? SentimentLabel::kSubjective : SentimentLabel::kObjective;
  return p;
}

std::set<std::string> document_features(const Document& doc, const FeatureConfig& config) {
  auto keys = feature_keys(doc, config);
  return {std::make_move_iterator(keys.begin()), std::make_move_iterator(keys.end())};
}

std::set<NGram> build_vocabulary(const std::vector<Document>& docs, const FeatureConfig& config) {
  config.validate();
  std::unordered_map<std::string, long long> counts;
  for (const auto& doc : docs) {
    for (auto& key : feature_keys(doc, config)) ++counts[std::move(key)];
  }
  std::set<NGram> vocab;
  for (const auto& [key, n] : counts) {
    if (n >= config.min_count) vocab.insert(NGram::from_key(key));
  }
  return vocab;
}

NaiveBayesModel train(const std::vector<TrainingExample>& examples, const FeatureConfig& config,
                      std::string trained_on) {
  config.validate();
  std::array<long long, 2> class_docs{};
  std::vector<Document> docs;
  docs.reserve(examples.size());
  for (const auto& ex : examples) {
    check_language(ex.doc, config.lang);
    ++class_docs[index_of(ex.label)];
    docs.push_back(ex.doc);
  }
  for (SentimentLabel l : kSentimentLabels) {
    if (class_docs[index_of(l)] == 0) {
      throw MissingClassError("training data has no " + std::string(sentiment_name(l)) +
                              " documents");
    }
  }

  std::vector<std::string> keys;
  for (const auto& g : build_vocabulary(docs, config)) keys.push_back(g.key());
  std::sort(keys.begin(), keys.end());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

  std::vector<std::array<long long, 2>> doc_freq(keys.size(), {0, 0});
  for (const auto& ex : examples) {
    for (const auto& key : document_features(ex.doc, config)) {
      auto it = index.find(key);
      if (it != index.end()) ++doc_freq[it->second][index_of(ex.label)];
    }
  }

  const double total = static_cast<double>(class_docs[0] + class_docs[1]);
  PerClass priors{};
  for (std::size_t c = 0; c < 2; ++c) {
    priors[c] = std::log(static_cast<double>(class_docs[c]) / total);
  }

  std::vector<NaiveBayesModel::Feature> features;
  features.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    NaiveBayesModel::Feature f{keys[i], {}};
    for (std::size_t c = 0; c < 2; ++c) {
      const double denom = static_cast<double>(class_docs[c] + 2);
      const auto df = doc_freq[i][c];
      f.given[c].present = std::log(static_cast<double>(df + 1) / denom);
      f.given[c].absent = std::log(static_cast<double>(class_docs[c] - df + 1) / denom);
    }
    features.push_back(std::move(f));
  }
  return NaiveBayesModel(config, priors, std::move(features), std::move(trained_on));
}

ClassificationMetrics evaluate(const NaiveBayesModel& model,
                               const std::vector<TrainingExample>& gold) {
  if (gold.empty()) throw ValidationError("evaluation needs at least one gold document");
  ClassificationMetrics m;
  std::array<Confusion, 2> confusion;
  for (const auto& ex : gold) {
    const SentimentLabel predicted = model.predict(ex.doc).label;
    ++m.total;
    if (predicted == ex.label) ++m.correct;
    for (SentimentLabel l : kSentimentLabels) {
      confusion[index_of(l)].add(ex.label == l, predicted == l);
    }
  }
  m.accuracy = static_cast<double>(m.correct) / static_cast<double>(m.total);
  for (std::size_t c = 0; c < 2; ++c) m.per_class[c] = binary_metrics(confusion[c]);
  return m;
}

void write_model(const NaiveBayesModel& model, std::ostream& out) {
  ordered_json j;
  j["format"] = kModelFormat;
  j["version"] = kModelFormatVersion;
  j["trained_on"] = model.trained_on();
  ordered_json cfg;
  cfg["lang"] = language_name(model.config().lang);
  cfg["orders"] = model.config().orders;
  cfg["min_count"] = model.config().min_count;
  j["config"] = cfg;
  ordered_json priors;
  for (SentimentLabel l : kSentimentLabels) {
    priors[std::string(sentiment_name(l))] = model.class_log_prior(l);
  }
  j["class_log_prior"] = priors;
  ordered_json features = ordered_json::array();
  for (const auto& f : model.features()) {
    ordered_json fj;
    fj["ngram"] = f.key;
    for (SentimentLabel l : kSentimentLabels) {
      const auto& lp = f.given[index_of(l)];
      fj[std::string(sentiment_name(l))] = {lp.present, lp.absent};
    }
    features.push_back(std::move(fj));
  }
  j["features"] = std::move(features);
  out << j.dump(1) << '\n';
}

void save_model(const NaiveBayesModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_model(model, out);
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

namespace {

const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object()) throw SchemaError("model: expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("model: missing field '") + key + "'");
  return *it;
}

double number(const ordered_json& v, const char* what) {
  if (!v.is_number()) throw SchemaError(std::string("model: '") + what + "' must be a number");
  return v.get<double>();
}

}  // namespace

NaiveBayesModel read_model(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("model: invalid JSON: ") + e.what());
  }
  const auto& format = field(j, "format");
  if (!format.is_string() || format.get<std::string>() != kModelFormat) {
    throw SchemaError("model: unexpected format tag");
  }
  const auto& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kModelFormatVersion) {
    throw SchemaError("model: unsupported version");
  }
  const auto& trained_on = field(j, "trained_on");
  if (!trained_on.is_string()) throw SchemaError("model: 'trained_on' must be a string");

  FeatureConfig config;
  const auto& cfg = field(j, "config");
  try {
    const auto& lang = field(cfg, "lang");
    if (!lang.is_string()) throw SchemaError("model: 'lang' must be a string");
    config.lang = parse_language(lang.get<std::string>());
    const auto& orders = field(cfg, "orders");
    if (!orders.is_array()) throw SchemaError("model: 'orders' must be an array");
    config.orders.clear();
    for (const auto& o : orders) {
      if (!o.is_number_integer()) throw SchemaError("model: orders must be integers");
      config.orders.insert(o.get<int>());
    }
    const auto& mc = field(cfg, "min_count");
    if (!mc.is_number_integer()) throw SchemaError("model: 'min_count' must be an integer");
    config.min_count = mc.get<int>();
    config.validate();
  } catch (const SchemaError&) {
    throw;
  } catch (const ValidationError& e) {
    throw SchemaError(std::string("model: bad config: ") + e.what());
  }

  PerClass priors{};
  const auto& pj = field(j, "class_log_prior");
  double prior_mass = 0.0;
  for (SentimentLabel l : kSentimentLabels) {
    priors[index_of(l)] = number(field(pj, std::string(sentiment_name(l)).c_str()), "prior");
    prior_mass += std::exp(priors[index_of(l)]);
  }
  if (std::abs(prior_mass - 1.0) > kProbabilityTolerance) {
    throw SchemaError("model: class priors do not sum to 1");
  }

  const auto& fj = field(j, "features");
  if (!fj.is_array()) throw SchemaError("model: 'features' must be an array");
  std::vector<NaiveBayesModel::Feature> features;
  features.reserve(fj.size());
  for (const auto& item : fj) {
    NaiveBayesModel::Feature f;
    const auto& key = field(item, "ngram");
    if (!key.is_string()) throw SchemaError("model: 'ngram' must be a string");
    f.key = key.get<std::string>();
    const int order = NGram::from_key(f.key).order();
    if (f.key.empty() || !config.orders.contains(order)) {
      throw SchemaError("model: feature '" + f.key + "' has an order outside the config");
    }
    for (SentimentLabel l : kSentimentLabels) {
      const auto& pair = field(item, std::string(sentiment_name(l)).c_str());
      if (!pair.is_array() || pair.size() != 2) {
        throw SchemaError("model: feature probabilities must be [present, absent]");
      }
      auto& lp = f.given[index_of(l)];
      lp.present = number(pair[0], "present");
      lp.absent = number(pair[1], "absent");
      if (std::abs(std::exp(lp.present) + std::exp(lp.absent) - 1.0) > kProbabilityTolerance) {
        throw SchemaError("model: probabilities of '" + f.key + "' do not sum to 1");
      }
    }
    if (!features.empty() && !(features.back().key < f.key)) {
      throw SchemaError("model: features must be sorted and unique");
    }
    features.push_back(std::move(f));
  }
  return NaiveBayesModel(std::move(config), priors, std::move(features),
                         trained_on.get<std::string>());
}

NaiveBayesModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_model(in);
}

}  // namespace xling
