#include "xling/labels.h"

#include "xling/error.h"

namespace xling {

namespace {

constexpr std::array<std::string_view, kNumEmotions> kEmotionNames = {
    "anger", "disgust", "fear", "joy", "sadness", "surprise"};

}  // namespace

Language parse_language(std::string_view code) {
  if (code == "english") return Language::kEnglish;
  if (code == "arabic") return Language::kArabic;
  throw ValidationError("unknown language code '" + std::string(code) + "'");
}

std::string_view language_name(Language lang) {
  return lang == Language::kEnglish ? "english" : "arabic";
}

SentimentLabel parse_sentiment(std::string_view name) {
  if (name == "subjective") return SentimentLabel::kSubjective;
  if (name == "objective") return SentimentLabel::kObjective;
  throw ValidationError("unknown sentiment label '" + std::string(name) + "'");
}

std::string_view sentiment_name(SentimentLabel label) {
  return label == SentimentLabel::kSubjective ? "subjective" : "objective";
}

Emotion parse_emotion(std::string_view name) {
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    if (kEmotionNames[i] == name) return kEmotions[i];
  }
  throw ValidationError("unknown emotion '" + std::string(name) + "'");
}

std::string_view emotion_name(Emotion emotion) { return kEmotionNames[index_of(emotion)]; }

std::vector<std::string> EmotionVector::names() const {
  std::vector<std::string> out;
  for (Emotion e : kEmotions) {
    if ((*this)[e]) out.emplace_back(emotion_name(e));
  }
  return out;
}

EmotionVector EmotionVector::from_names(const std::vector<std::string>& names) {
  EmotionVector v;
  for (const auto& n : names) v.set(parse_emotion(n));
  return v;
}

}  // namespace xling
