#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xling/agreement.h"
#include "xling/corpus.h"
#include "xling/emolex.h"
#include "xling/error.h"
#include "xling/nbayes.h"
#include "xling/projection.h"

namespace xling::cli {

namespace {

struct Options {
  std::string corpus;
  std::string kind;
  std::string model;
  std::string target_model;
  std::string lexicon_en;
  std::string lexicon_ar;
  std::string gold;
  std::string out;
  std::string format;
  std::vector<int> orders;
  int min_count = 2;
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void close_out(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw IoError("error writing '" + path + "'");
}

FeatureConfig apply_feature_flags(FeatureConfig cfg, const Options& o, const CLI::App& sub) {
  if (sub.count("--orders") > 0) cfg.orders = {o.orders.begin(), o.orders.end()};
  if (sub.count("--min-count") > 0) cfg.min_count = o.min_count;
  cfg.validate();
  return cfg;
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

int cmd_train(const Options& o, const CLI::App& sub, std::ostream& out) {
  const auto examples = load_labeled_documents(o.corpus);
  FeatureConfig cfg;
  cfg.lang = examples.front().doc.lang;
  cfg = apply_feature_flags(cfg, o, sub);
  const auto model = train(examples, cfg, std::filesystem::path(o.corpus).stem().string());
  save_model(model, o.out);

  std::size_t subjective = 0;
  for (const auto& ex : examples) subjective += ex.label == SentimentLabel::kSubjective;
  out << "trained " << language_name(cfg.lang) << " model on " << examples.size()
      << " documents (subjective " << subjective << ", objective "
      << examples.size() - subjective << "), vocabulary " << model.vocabulary_size() << '\n';
  return kExitOk;
}

int cmd_project(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Corpus corpus = load_corpus(o.corpus, parse_corpus_kind(o.kind));
  const NaiveBayesModel source = load_model(o.model);
  FeatureConfig cfg = target_config_for(source.config(), corpus.pairs.front().target.lang);
  cfg = apply_feature_flags(cfg, o, sub);
  const NaiveBayesModel target = bootstrap_target(corpus, source, cfg);
  save_model(target, o.out);
  out << "projected labels over " << corpus.pairs.size() << " pairs, "
      << language_name(cfg.lang) << " vocabulary " << target.vocabulary_size() << '\n';
  return kExitOk;
}

int cmd_annotate(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus, parse_corpus_kind(o.kind));
  if (o.fraction > 0.0) {
    const std::string name = corpus.name;
    corpus = split_corpus(corpus, o.fraction, o.seed).first;
    corpus.name = name;
  }
  if (o.lexicon_en.empty() != o.lexicon_ar.empty()) {
    throw ValidationError("--lexicon-en and --lexicon-ar must be given together");
  }
  const NaiveBayesModel source_model = load_model(o.model);
  const NaiveBayesModel target_model = load_model(o.target_model);
  const auto src = annotate_side(source_model, corpus, Side::kSource);
  const auto tgt = annotate_side(target_model, corpus, Side::kTarget);

  std::optional<EmotionLexicon> source_lex, target_lex;
  if (!o.lexicon_en.empty()) {
    auto path_for = [&](Language l) { return l == Language::kEnglish ? o.lexicon_en : o.lexicon_ar; };
    const Language sl = corpus.pairs.front().source.lang;
    const Language tl = corpus.pairs.front().target.lang;
    source_lex.emplace(load_lexicon(path_for(sl), sl));
    target_lex.emplace(load_lexicon(path_for(tl), tl));
  }

  AnnotatedCorpus annotated{corpus.name, corpus.kind, {}};
  for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
    AnnotatedPair ap{corpus.pairs[i], src[i].label, tgt[i].label, std::nullopt, std::nullopt};
    if (source_lex) {
      ap.source_emotions = tag_emotions(ap.pair.source.text, *source_lex);
      ap.target_emotions = tag_emotions(ap.pair.target.text, *target_lex);
    }
    annotated.pairs.push_back(std::move(ap));
  }
  save_annotated(annotated, o.out);
  out << "annotated " << annotated.pairs.size() << " pairs"
      << (source_lex ? " with sentiment and emotions" : " with sentiment") << '\n';
  return kExitOk;
}

int cmd_agree(const Options& o, std::ostream& out) {
  const AnnotatedCorpus corpus = load_annotated(o.corpus, parse_corpus_kind(o.kind));
  const AgreementReport report = make_report(corpus);
  if (o.format.empty() || o.format == "json") {
    const std::string path = o.format.empty() ? o.out + ".json" : o.out;
    auto f = open_out(path);
    write_report_json(report, f);
    close_out(f, path);
  }
  if (o.format.empty() || o.format == "csv") {
    const std::string path = o.format.empty() ? o.out + ".csv" : o.out;
    auto f = open_out(path);
    write_report_csv(report, f);
    close_out(f, path);
  }
  out << report.corpus_name << ": sentiment kappa " << fixed(report.sentiment.kappa) << " ("
      << interpret(report.sentiment.kappa, Scheme::kLandisKoch).band << ")\n";
  if (report.per_emotion) {
    for (Emotion e : kEmotions) {
      const double k = (*report.per_emotion)[index_of(e)].kappa;
      out << "  " << emotion_name(e) << " kappa " << fixed(k) << " ("
          << interpret(k, Scheme::kLandisKoch).band << ")\n";
    }
  }
  return kExitOk;
}

nlohmann::ordered_json metrics_json(const BinaryMetrics& m) {
  nlohmann::ordered_json j;
  j["accuracy"] = m.accuracy;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["tp"] = m.counts.tp;
  j["fp"] = m.counts.fp;
  j["fn"] = m.counts.fn;
  j["tn"] = m.counts.tn;
  j["precision_undefined"] = m.precision_undefined;
  j["recall_undefined"] = m.recall_undefined;
  return j;
}

void metrics_row(std::ostream& out, std::string_view name, const BinaryMetrics& m) {
  out << std::left << std::setw(12) << name << ' ' << fixed(m.accuracy) << "  "
      << fixed(m.precision) << (m.precision_undefined ? "*" : " ") << ' ' << fixed(m.recall)
      << (m.recall_undefined ? "*" : " ") << ' ' << fixed(m.f1) << '\n';
}

int cmd_eval(const Options& o, std::ostream& out) {
  const bool json = o.format == "json";
  if (!o.model.empty()) {
    const NaiveBayesModel model = load_model(o.model);
    const auto m = evaluate(model, load_labeled_documents(o.gold));
    if (json) {
      nlohmann::ordered_json j;
      j["accuracy"] = m.accuracy;
      j["correct"] = m.correct;
      j["total"] = m.total;
      for (SentimentLabel l : kSentimentLabels) {
        j["classes"][std::string(sentiment_name(l))] = metrics_json(m.per_class[index_of(l)]);
      }
      out << j.dump(2) << '\n';
    } else {
      out << "accuracy " << fixed(m.accuracy) << " (" << m.correct << "/" << m.total << ")\n";
      out << "class        acc     P       R       F1\n";
      for (SentimentLabel l : kSentimentLabels) {
        metrics_row(out, sentiment_name(l), m.per_class[index_of(l)]);
      }
    }
    return kExitOk;
  }
  if (o.lexicon_en.empty() == o.lexicon_ar.empty()) {
    throw ValidationError("eval needs --model, or exactly one of --lexicon-en / --lexicon-ar");
  }
  const Language lang = o.lexicon_en.empty() ? Language::kArabic : Language::kEnglish;
  const EmotionLexicon lexicon =
      load_lexicon(lang == Language::kEnglish ? o.lexicon_en : o.lexicon_ar, lang);
  const auto metrics = evaluate_lexicon(load_emotion_gold(o.gold), lexicon);
  if (json) {
    nlohmann::ordered_json j;
    for (Emotion e : kEmotions) {
      j[std::string(emotion_name(e))] = metrics_json(metrics[index_of(e)]);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "emotion      acc     P       R       F1\n";
    for (Emotion e : kEmotions) metrics_row(out, emotion_name(e), metrics[index_of(e)]);
  }
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const Corpus corpus = load_corpus(o.corpus, parse_corpus_kind(o.kind));
  const CorpusStats s = corpus_stats(corpus);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["corpus"] = corpus.name;
    j["pairs"] = s.pair_count;
    j["source"] = {{"words", s.source.word_count}, {"vocabulary", s.source.vocab_size}};
    j["target"] = {{"words", s.target.word_count}, {"vocabulary", s.target.vocab_size}};
    out << j.dump(2) << '\n';
  } else {
    out << corpus.name << ": " << s.pair_count << " pairs\n"
        << "  source " << language_name(corpus.pairs.front().source.lang) << ": "
        << s.source.word_count << " words, " << s.source.vocab_size << " distinct\n"
        << "  target " << language_name(corpus.pairs.front().target.lang) << ": "
        << s.target.word_count << " words, " << s.target.vocab_size << " distinct\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-lingual subjectivity and emotion annotation with agreement analysis",
               "xling"};
  app.set_config("--config", "", "TOML-style configuration file; flags take precedence");
  app.require_subcommand(1);

  Options o;
  const std::vector<std::string> kinds = {"parallel", "comparable"};
  auto add_orders = [&](CLI::App* sub) {
    sub->add_option("--orders", o.orders, "n-gram orders, e.g. 1,2,3")
        ->delimiter(',')
        ->check(CLI::Range(1, 3));
    sub->add_option("--min-count", o.min_count, "minimum total n-gram count")
        ->check(CLI::PositiveNumber);
  };

  auto* train_cmd = app.add_subcommand("train", "train a classifier on labeled documents");
  train_cmd->add_option("--corpus", o.corpus, "labeled documents (JSON lines)")->required();
  train_cmd->add_option("--out", o.out, "model file to write")->required();
  add_orders(train_cmd);

  auto* project_cmd =
      app.add_subcommand("project", "bootstrap a target-language model over a parallel corpus");
  project_cmd->add_option("--corpus", o.corpus, "parallel corpus")->required();
  project_cmd->add_option("--kind", o.kind)->check(CLI::IsMember(kinds))->default_val("parallel");
  project_cmd->add_option("--model", o.model, "source-language model")->required();
  project_cmd->add_option("--out", o.out, "target model file to write")->required();
  add_orders(project_cmd);

  auto* annotate_cmd = app.add_subcommand("annotate", "label both sides of a corpus");
  annotate_cmd->add_option("--corpus", o.corpus)->required();
  annotate_cmd->add_option("--kind", o.kind)->check(CLI::IsMember(kinds))->default_val("comparable");
  annotate_cmd->add_option("--model", o.model, "source-language model")->required();
  annotate_cmd->add_option("--target-model", o.target_model, "target-language model")->required();
  annotate_cmd->add_option("--lexicon-en", o.lexicon_en, "English emotion lexicon");
  annotate_cmd->add_option("--lexicon-ar", o.lexicon_ar, "Arabic emotion lexicon");
  annotate_cmd->add_option("--fraction", o.fraction, "annotate a seeded random subset")
      ->check(CLI::Range(0.0, 1.0));
  annotate_cmd->add_option("--seed", o.seed)->default_val(0);
  annotate_cmd->add_option("--out", o.out, "annotated corpus to write")->required();

  auto* agree_cmd = app.add_subcommand("agree", "Cohen's Kappa between the two sides");
  agree_cmd->add_option("--corpus", o.corpus, "annotated corpus")->required();
  agree_cmd->add_option("--kind", o.kind)->check(CLI::IsMember(kinds))->default_val("comparable");
  agree_cmd->add_option("--out", o.out, "report path (prefix when --format is omitted)")
      ->required();
  agree_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a model or lexicon against gold data");
  eval_cmd->add_option("--model", o.model);
  eval_cmd->add_option("--lexicon-en", o.lexicon_en);
  eval_cmd->add_option("--lexicon-ar", o.lexicon_ar);
  eval_cmd->add_option("--gold", o.gold)->required();
  eval_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* stats_cmd = app.add_subcommand("stats", "corpus size and vocabulary");
  stats_cmd->add_option("--corpus", o.corpus)->required();
  stats_cmd->add_option("--kind", o.kind)->check(CLI::IsMember(kinds))->default_val("parallel");
  stats_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(o, *train_cmd, out);
    if (project_cmd->parsed()) return cmd_project(o, *project_cmd, out);
    if (annotate_cmd->parsed()) return cmd_annotate(o, out);
    if (agree_cmd->parsed()) return cmd_agree(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (stats_cmd->parsed()) return cmd_stats(o, out);
  } catch (const IoError& e) {
    err << "xling: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "xling: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace xling::cli
