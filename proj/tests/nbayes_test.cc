#include "xling/nbayes.h"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "xling/error.h"

namespace xling {
namespace {

using testing::en;
using testing::fixture;
using testing::obj;
using testing::subj;

constexpr double kTol = 1e-9;

FeatureConfig config(std::set<int> orders, int min_count,
                     Language lang = Language::kEnglish) {
  FeatureConfig c;
  c.orders = std::move(orders);
  c.min_count = min_count;
  c.lang = lang;
  return c;
}

std::vector<TrainingExample> toy_corpus() {
  return {subj("1", "good fun film"), subj("2", "good film"), obj("3", "film released today"),
          obj("4", "report released")};
}

TEST(BuildVocabulary, MinCountFiltersTotalOccurrences) {
  const auto v = build_vocabulary({en("1", "a b"), en("2", "a c")}, config({1}, 2));
  EXPECT_EQ(v, (std::set<NGram>{NGram{{"a"}}}));
  EXPECT_EQ(build_vocabulary({en("1", "a b"), en("2", "a c")}, config({1}, 1)).size(), 3u);
  // Two occurrences inside one document count too.
  EXPECT_EQ(build_vocabulary({en("1", "x x")}, config({1}, 2)).size(), 1u);
}

// Sizes from tests/oracles/nb_oracles.py.
TEST(BuildVocabulary, MatchesCounterOracleOnFixture) {
  std::vector<Document> docs;
  for (const auto& ex : load_labeled_documents(fixture("seed_en.jsonl"))) docs.push_back(ex.doc);
  EXPECT_EQ(build_vocabulary(docs, config({1, 2, 3}, 2)).size(), 360u);
  EXPECT_EQ(build_vocabulary(docs, config({1, 2, 3}, 1)).size(), 792u);
  EXPECT_EQ(build_vocabulary(docs, config({1}, 2)).size(), 81u);
}

TEST(Train, LaplaceEstimates) {
  const auto m = train({subj("1", "good"), obj("2", "fact")}, config({1}, 1));
  const auto* good = m.find("good");
  ASSERT_NE(good, nullptr);
  const auto s = index_of(SentimentLabel::kSubjective);
  const auto o = index_of(SentimentLabel::kObjective);
  EXPECT_NEAR(std::exp(good->given[s].present), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(std::exp(good->given[o].present), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(std::exp(m.class_log_prior(SentimentLabel::kSubjective)), 0.5, 1e-15);
}

TEST(Train, BalancedPriors) {
  std::vector<TrainingExample> docs;
  for (int i = 0; i < 5000; ++i) docs.push_back(subj("s" + std::to_string(i), "w"));
  for (int i = 0; i < 5000; ++i) docs.push_back(obj("o" + std::to_string(i), "w"));
  const auto m = train(docs, config({1}, 2));
  EXPECT_DOUBLE_EQ(std::exp(m.class_log_prior(SentimentLabel::kSubjective)), 0.5);
  EXPECT_DOUBLE_EQ(std::exp(m.class_log_prior(SentimentLabel::kObjective)), 0.5);
}

TEST(Train, MissingClass) {
  EXPECT_THROW(train({subj("1", "a"), subj("2", "b")}, config({1}, 1)), MissingClassError);
  EXPECT_THROW(train({obj("1", "a")}, config({1}, 1)), MissingClassError);
}

TEST(Train, LanguageMismatch) {
  EXPECT_THROW(train(toy_corpus(), config({1}, 1, Language::kArabic)), LanguageMismatchError);
}

TEST(Train, RejectsBadConfig) {
  EXPECT_THROW(train(toy_corpus(), config({}, 1)), ValidationError);
  EXPECT_THROW(train(toy_corpus(), config({4}, 1)), ValidationError);
  EXPECT_THROW(train(toy_corpus(), config({1}, 0)), ValidationError);
}

TEST(Train, ProbabilityPairsSumToOne) {
  const auto m = train(load_labeled_documents(fixture("seed_en.jsonl")), FeatureConfig{});
  double prior = 0.0;
  for (SentimentLabel l : kSentimentLabels) prior += std::exp(m.class_log_prior(l));
  EXPECT_NEAR(prior, 1.0, kTol);
  for (const auto& f : m.features()) {
    for (const auto& lp : f.given) ASSERT_NEAR(std::exp(lp.present) + std::exp(lp.absent), 1.0, kTol);
  }
}

TEST(Predict, DominantFeaturesWin) {
  const auto m = train(toy_corpus(), config({1, 2}, 1));
  EXPECT_EQ(m.predict(en("p", "good fun")).label, SentimentLabel::kSubjective);
  EXPECT_EQ(m.predict(en("p", "report released")).label, SentimentLabel::kObjective);
}

TEST(Predict, NoVocabularyFeatures) {
  const auto m = train(toy_corpus(), config({1, 2}, 1));
  const auto p = m.predict(en("p", "zzz qqq"));
  const auto again = m.predict(en("q", "unrelated words"));
  EXPECT_EQ(p.label, again.label);
  EXPECT_EQ(p.log_posterior, again.log_posterior);
}

TEST(Predict, TiesGoToObjective) {
  // Both classes see the same single feature, so every posterior ties.
  const auto m = train({subj("1", "a"), obj("2", "a")}, config({1}, 1));
  const auto p = m.predict(en("p", "c"));
  EXPECT_EQ(p.log_posterior[0], p.log_posterior[1]);
  EXPECT_EQ(p.label, SentimentLabel::kObjective);
}

TEST(Predict, LanguageMismatch) {
  const auto m = train(toy_corpus(), config({1}, 1));
  EXPECT_THROW(m.predict(testing::ar("x", "فيلم")), LanguageMismatchError);
}

// Values from tests/oracles/nb_oracles.py (exact Fraction arithmetic).
TEST(Predict, ToyModelMatchesFrozenOracle) {
  const auto m = train(toy_corpus(), config({1, 2}, 1));
  EXPECT_EQ(m.vocabulary_size(), 12u);
  struct Case {
    const char* text;
    double subj;
    double obj;
  };
  const Case cases[] = {
      {"good film", -5.767192482413973, -9.873959564634632},
      {"report released today", -13.457478503090742, -6.578122698630302},
      {"nothing here", -7.964417059750192, -7.676734987298412},
      {"fun report", -9.063029348418304, -8.77534727596652},
  };
  for (const auto& c : cases) {
    const auto p = m.predict(en("p", c.text));
    EXPECT_NEAR(p.log_posterior_of(SentimentLabel::kSubjective), c.subj, kTol) << c.text;
    EXPECT_NEAR(p.log_posterior_of(SentimentLabel::kObjective), c.obj, kTol) << c.text;
  }
}

TEST(Predict, MatchesBruteForceOnRandomTinyCorpora) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 300; ++trial) {
    const int n_docs = 2 + static_cast<int>(rng() % 5);
    std::vector<TrainingExample> train_docs;
    std::vector<testing::ToyDoc> toy;
    for (int d = 0; d < n_docs; ++d) {
      std::string text;
      const int len = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < len; ++k) text += (k ? " " : "") + alphabet[rng() % alphabet.size()];
      const int label = d < 2 ? d : static_cast<int>(rng() % 2);
      toy.push_back({text, label});
      train_docs.push_back(label == 0 ? subj(std::to_string(d), text) : obj(std::to_string(d), text));
    }
    const std::set<int> orders = rng() % 2 ? std::set<int>{1} : std::set<int>{1, 2};
    const int min_count = 1 + static_cast<int>(rng() % 2);
    const auto model = train(train_docs, config(orders, min_count));
    std::string probe;
    for (int k = 0; k < 3; ++k) probe += (k ? " " : "") + alphabet[rng() % alphabet.size()];
    const auto expected = testing::brute_force_log_posterior(toy, probe, orders, min_count);
    const auto got = model.predict(en("probe", probe));
    ASSERT_NEAR(got.log_posterior[0], expected[0], kTol);
    ASSERT_NEAR(got.log_posterior[1], expected[1], kTol);
  }
}

TEST(Predict, UnigramModelIgnoresWordOrder) {
  const auto m = train(load_labeled_documents(fixture("seed_en.jsonl")), config({1}, 2));
  std::mt19937_64 rng(8);
  for (const auto& ex : load_labeled_documents(fixture("seed_en.jsonl"))) {
    auto toks = tokenize(ex.doc.text, Language::kEnglish);
    std::shuffle(toks.begin(), toks.end(), rng);
    std::string shuffled;
    for (const auto& t : toks) shuffled += t + " ";
    const auto a = m.predict(ex.doc);
    const auto b = m.predict(en("x", shuffled));
    ASSERT_EQ(a.label, b.label);
    ASSERT_NEAR(a.log_posterior[0], b.log_posterior[0], 1e-9);
  }
}

TEST(Predict, DuplicatingTrainingDocumentNeverHurtsItsClass) {
  auto docs = toy_corpus();
  const auto base = train(docs, config({1, 2}, 1));
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto more = docs;
    auto dup = docs[i];
    dup.doc.id += "-dup";
    more.push_back(dup);
    const auto m = train(more, config({1, 2}, 1));
    const auto c = docs[i].label;
    const auto other = c == SentimentLabel::kSubjective ? SentimentLabel::kObjective
                                                        : SentimentLabel::kSubjective;
    const auto before = base.predict(docs[i].doc);
    const auto after = m.predict(docs[i].doc);
    EXPECT_GE(after.log_posterior_of(c) - after.log_posterior_of(other),
              before.log_posterior_of(c) - before.log_posterior_of(other) - 1e-12);
  }
}

TEST(Evaluate, PerfectAndConstant) {
  const auto m = train(toy_corpus(), config({1, 2}, 1));
  const auto perfect = evaluate(m, toy_corpus());
  EXPECT_DOUBLE_EQ(perfect.accuracy, 1.0);
  for (const auto& pc : perfect.per_class) EXPECT_DOUBLE_EQ(pc.f1, 1.0);

  // A model that always says objective on balanced gold.
  const auto constant = train({subj("1", "q"), obj("2", "z"), obj("3", "z"), obj("4", "z")},
                              config({1}, 1));
  std::vector<TrainingExample> gold = {subj("a", "x"), subj("b", "y"), obj("c", "x"),
                                       obj("d", "y")};
  const auto m2 = evaluate(constant, gold);
  EXPECT_DOUBLE_EQ(m2.accuracy, 0.5);
  EXPECT_TRUE(m2.per_class[index_of(SentimentLabel::kSubjective)].precision_undefined);
}

TEST(Evaluate, AccuracyIsOneMinusHammingError) {
  const auto m = train(load_labeled_documents(fixture("seed_en.jsonl")), config({1}, 2));
  std::vector<TrainingExample> gold = load_labeled_documents(fixture("seed_en.jsonl"));
  // Corrupt a third of the gold labels so the accuracy is not trivially 1.
  for (std::size_t i = 0; i < gold.size(); i += 3) {
    gold[i].label = gold[i].label == SentimentLabel::kSubjective ? SentimentLabel::kObjective
                                                                 : SentimentLabel::kSubjective;
  }
  std::size_t errors = 0;
  std::array<std::array<int, 2>, 2> confusion{};  // [gold][pred]
  for (const auto& g : gold) {
    const auto pred = m.predict(g.doc).label;
    errors += pred != g.label;
    ++confusion[index_of(g.label)][index_of(pred)];
  }
  const auto metrics = evaluate(m, gold);
  EXPECT_DOUBLE_EQ(metrics.accuracy, 1.0 - static_cast<double>(errors) / gold.size());
  const auto s = index_of(SentimentLabel::kSubjective);
  const auto o = index_of(SentimentLabel::kObjective);
  const double p = static_cast<double>(confusion[s][s]) / (confusion[s][s] + confusion[o][s]);
  const double r = static_cast<double>(confusion[s][s]) / (confusion[s][s] + confusion[s][o]);
  EXPECT_DOUBLE_EQ(metrics.per_class[s].precision, p);
  EXPECT_DOUBLE_EQ(metrics.per_class[s].recall, r);
  EXPECT_NEAR(metrics.per_class[s].f1, 2 * p * r / (p + r), 1e-15);
}

TEST(ModelIo, RoundTripPreservesPredictions) {
  testing::TempDir dir;
  const auto m = train(toy_corpus(), config({1, 2}, 1), "toy");
  save_model(m, dir / "m.json");
  const auto loaded = load_model(dir / "m.json");
  EXPECT_EQ(loaded.config(), m.config());
  EXPECT_EQ(loaded.trained_on(), "toy");
  const char* probes[] = {"good film", "report", "", "film film film", "released today good",
                          "x", "fun", "good fun film", "report released", "today"};
  for (const char* p : probes) {
    const auto a = m.predict(en("p", p));
    const auto b = loaded.predict(en("p", p));
    EXPECT_NEAR(a.log_posterior[0], b.log_posterior[0], 1e-12);
    EXPECT_NEAR(a.log_posterior[1], b.log_posterior[1], 1e-12);
  }
  save_model(loaded, dir / "m2.json");
  EXPECT_EQ(testing::read_file(dir / "m.json"), testing::read_file(dir / "m2.json"));
}

TEST(ModelIo, PreservesUnigramConfig) {
  std::stringstream ss;
  write_model(train(toy_corpus(), config({1}, 1)), ss);
  const auto loaded = read_model(ss);
  EXPECT_EQ(loaded.config().orders, std::set<int>{1});
  EXPECT_EQ(loaded.config().min_count, 1);
}

TEST(ModelIo, SchemaErrors) {
  std::stringstream ss;
  write_model(train(toy_corpus(), config({1, 2}, 1)), ss);
  const std::string text = ss.str();

  std::istringstream truncated(text.substr(0, text.size() / 2));
  EXPECT_THROW(read_model(truncated), SchemaError);

  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    const auto pos = t.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    t.replace(pos, from.size(), to);
    std::istringstream in(t);
    return in.str();
  };
  for (const auto& bad : {mutate("\"version\": 1", "\"version\": 2"),
                          mutate("\"format\"", "\"fmt\""),
                          mutate("\"english\"", "\"klingon\""),
                          mutate("\"min_count\": 1", "\"min_count\": \"1\"")}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_model(in), SchemaError);
  }
  EXPECT_THROW(load_model("/nonexistent/model.json"), IoError);
}

}  // namespace
}  // namespace xling
