#ifndef XLING_LABELS_H_
#define XLING_LABELS_H_

// Enumerations shared by every module: languages, sentiment labels and the
// six basic emotions.

#include <array>
#include <bitset>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xling {

enum class Language { kEnglish, kArabic };

// Accepts "english" / "arabic"; throws ValidationError otherwise.
Language parse_language(std::string_view code);
std::string_view language_name(Language lang);

enum class SentimentLabel { kSubjective = 0, kObjective = 1 };

inline constexpr std::array<SentimentLabel, 2> kSentimentLabels = {SentimentLabel::kSubjective,
                                                                   SentimentLabel::kObjective};

SentimentLabel parse_sentiment(std::string_view name);
std::string_view sentiment_name(SentimentLabel label);

inline constexpr std::size_t index_of(SentimentLabel label) {
  return static_cast<std::size_t>(label);
}

enum class Emotion { kAnger = 0, kDisgust, kFear, kJoy, kSadness, kSurprise };

inline constexpr std::size_t kNumEmotions = 6;
inline constexpr std::array<Emotion, kNumEmotions> kEmotions = {
    Emotion::kAnger, Emotion::kDisgust, Emotion::kFear,
    Emotion::kJoy,   Emotion::kSadness, Emotion::kSurprise};

Emotion parse_emotion(std::string_view name);
std::string_view emotion_name(Emotion emotion);

inline constexpr std::size_t index_of(Emotion emotion) { return static_cast<std::size_t>(emotion); }

// Presence flag for each of the six emotions. All six are always defined.
class EmotionVector {
 public:
  EmotionVector() = default;

  bool operator[](Emotion e) const { return bits_[index_of(e)]; }
  void set(Emotion e, bool present = true) { bits_.set(index_of(e), present); }
  void merge(const EmotionVector& other) { bits_ |= other.bits_; }

  bool any() const { return bits_.any(); }
  std::size_t count() const { return bits_.count(); }

  // Names of the present emotions in canonical order.
  std::vector<std::string> names() const;
  static EmotionVector from_names(const std::vector<std::string>& names);

  bool operator==(const EmotionVector&) const = default;

 private:
  std::bitset<kNumEmotions> bits_;
};

}  // namespace xling

#endif  // XLING_LABELS_H_
