#include "xling/emolex.h"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "xling/error.h"
#include "xling/textproc.h"

namespace xling {
namespace {

using testing::fixture;

EmotionLexicon parse(const std::string& tsv, Language lang = Language::kEnglish) {
  std::istringstream in(tsv);
  return read_lexicon(in, lang);
}

EmotionVector of(std::initializer_list<Emotion> emotions) {
  EmotionVector v;
  for (Emotion e : emotions) v.set(e);
  return v;
}

TEST(LexiconParse, SingleRow) {
  const auto lex = parse("a#1\tanger\tenglish\tanger rage\n");
  ASSERT_EQ(lex.entries().size(), 1u);
  const auto& e = lex.entries()[0];
  EXPECT_EQ(e.synset_id, "a#1");
  EXPECT_EQ(e.emotion, Emotion::kAnger);
  EXPECT_EQ(e.lang, Language::kEnglish);
  EXPECT_EQ(e.words, (std::vector<std::string>{"anger", "rage"}));
  EXPECT_EQ(lex.lookup("rage"), of({Emotion::kAnger}));
  EXPECT_FALSE(lex.lookup("calm").any());
}

TEST(LexiconParse, CommentsBlankLinesAndOtherLanguages) {
  const auto lex = parse(
      "# header\n\n"
      "j#1\tjoy\tenglish\tjoy\n"
      "j#1\tjoy\tarabic\tفرح\n");
  EXPECT_EQ(lex.entries().size(), 1u);
  const auto ar = parse("j#1\tjoy\tenglish\tjoy\nj#1\tjoy\tarabic\tفرح\n", Language::kArabic);
  ASSERT_EQ(ar.entries().size(), 1u);
  EXPECT_EQ(ar.entries()[0].words[0], "فرح");
}

TEST(LexiconParse, MalformedRows) {
  for (const std::string bad : {"a#1\tboredom\tenglish\tdull\n", "a#1\tanger\tenglish\n",
                                "a#1\tanger\tklingon\trage\n", "a#1\tanger\tenglish\t   \n",
                                "a#1\tanger\tenglish\trage\textra\n"}) {
    try {
      parse("# ok\n" + bad);
      FAIL() << bad;
    } catch (const LexiconError& e) {
      EXPECT_EQ(e.kind(), LexiconError::Kind::kMalformedRow) << bad;
      EXPECT_EQ(e.line(), 2u) << bad;
    }
  }
}

TEST(LexiconParse, EmptyLexicon) {
  for (const std::string empty : {"", "# nothing\n\n", "j#1\tjoy\tarabic\tفرح\n"}) {
    try {
      parse(empty);
      FAIL();
    } catch (const LexiconError& e) {
      EXPECT_EQ(e.kind(), LexiconError::Kind::kEmptyLexicon);
    }
  }
}

TEST(LexiconParse, MissingFileIsIoError) {
  EXPECT_THROW(load_lexicon("/nonexistent/lexicon.tsv", Language::kEnglish), IoError);
}

TEST(LexiconCounts, FixtureTotals) {
  const auto en = lexicon_counts(load_lexicon(fixture("lexicon.tsv"), Language::kEnglish));
  const auto ar = lexicon_counts(load_lexicon(fixture("lexicon.tsv"), Language::kArabic));
  EXPECT_EQ(en.total.synsets, 12u);
  EXPECT_EQ(en.total.words, 37u);
  EXPECT_EQ(ar.total.synsets, 12u);
  EXPECT_EQ(ar.total.words, 33u);

  // emotion -> {synsets, english words, arabic words}
  const std::array<std::array<std::size_t, 3>, kNumEmotions> expected = {{
      {2, 7, 6},  // anger
      {2, 5, 4},  // disgust
      {2, 7, 6},  // fear
      {2, 7, 6},  // joy
      {2, 6, 6},  // sadness
      {2, 5, 5},  // surprise
  }};
  for (Emotion e : kEmotions) {
    const auto i = index_of(e);
    EXPECT_EQ(en.per_emotion[i].synsets, expected[i][0]) << emotion_name(e);
    EXPECT_EQ(en.per_emotion[i].words, expected[i][1]) << emotion_name(e);
    EXPECT_EQ(ar.per_emotion[i].words, expected[i][2]) << emotion_name(e);
  }
}

TEST(LexiconCounts, SynsetsCountedOnce) {
  const auto lex = parse("a#1\tanger\tenglish\trage\na#1\tanger\tenglish\tfury\n");
  const auto c = lexicon_counts(lex);
  EXPECT_EQ(c.total.synsets, 1u);
  EXPECT_EQ(c.total.words, 2u);
}

class TaggerTest : public ::testing::Test {
 protected:
  EmotionLexicon en_ = load_lexicon(fixture("lexicon.tsv"), Language::kEnglish);
  EmotionLexicon ar_ = load_lexicon(fixture("lexicon.tsv"), Language::kArabic);
};

TEST_F(TaggerTest, HeadlineWithTwoEmotions) {
  EXPECT_EQ(tag_emotions("Shock and deep sadness in the country due to the sudden death of "
                         "President",
                         en_),
            of({Emotion::kSadness, Emotion::kSurprise}));
}

TEST_F(TaggerTest, NoEmotionWords) {
  EXPECT_FALSE(tag_emotions("", en_).any());
  EXPECT_FALSE(tag_emotions("The committee met on Tuesday.", en_).any());
}

TEST_F(TaggerTest, OneWordPerEmotion) {
  EXPECT_EQ(tag_emotions("rage disgust fear joy grief surprise", en_).count(), 6u);
}

TEST_F(TaggerTest, ArabicInflectedForms) {
  EXPECT_EQ(tag_emotions("وعبر الناس عن الغضب.", ar_), of({Emotion::kAnger}));
  EXPECT_EQ(tag_emotions("شعور بالسعادة", ar_), of({Emotion::kJoy}));
}

TEST_F(TaggerTest, EveryLexiconWordTagsItsOwnEmotion) {
  for (const auto* lex : {&en_, &ar_}) {
    for (const auto& entry : lex->entries()) {
      for (const auto& word : entry.words) {
        EXPECT_TRUE(tag_emotions(word, *lex)[entry.emotion]) << word;
      }
    }
  }
}

TEST_F(TaggerTest, AddingWordsNeverRemovesEmotions) {
  const std::vector<std::string> texts = {"the crowd", "pure joy", "panic", "grief and rage"};
  const std::vector<std::string> extra = {"weather", "terror", "gladness", "x y z"};
  for (const auto& t : texts) {
    for (const auto& x : extra) {
      const auto before = tag_emotions(t, en_);
      auto after = tag_emotions(t + " " + x, en_);
      EmotionVector merged = before;
      merged.merge(after);
      EXPECT_EQ(merged, after) << t << " + " << x;
    }
  }
}

TEST_F(TaggerTest, DuplicationInvariant) {
  const std::string t = "Fans celebrated with joy and delight after the shock";
  EXPECT_EQ(tag_emotions(t, en_), tag_emotions(t + " " + t, en_));
}

TEST_F(TaggerTest, EvaluateOnHandLabeledGold) {
  const auto gold = load_emotion_gold(fixture("emotion_gold_en.jsonl"));
  ASSERT_EQ(gold.size(), 13u);
  const auto m = evaluate_lexicon(gold, en_);

  const auto& anger = m[index_of(Emotion::kAnger)];
  EXPECT_EQ(anger.counts.tp, 2u);
  EXPECT_EQ(anger.counts.fp, 0u);
  EXPECT_EQ(anger.counts.fn, 1u);
  EXPECT_DOUBLE_EQ(anger.precision, 1.0);
  EXPECT_DOUBLE_EQ(anger.recall, 2.0 / 3.0);

  const auto& joy = m[index_of(Emotion::kJoy)];
  EXPECT_EQ(joy.counts.tp, 1u);
  EXPECT_EQ(joy.counts.fp, 1u);
  EXPECT_DOUBLE_EQ(joy.precision, 0.5);
  EXPECT_DOUBLE_EQ(joy.recall, 1.0);

  for (Emotion e : {Emotion::kDisgust, Emotion::kFear, Emotion::kSadness, Emotion::kSurprise}) {
    EXPECT_DOUBLE_EQ(m[index_of(e)].precision, 1.0) << emotion_name(e);
    EXPECT_DOUBLE_EQ(m[index_of(e)].recall, 1.0) << emotion_name(e);
  }
  for (const auto& b : m) {
    EXPECT_EQ(b.counts.total(), 13u);
    if (b.precision + b.recall > 0) {
      EXPECT_NEAR(b.f1, 2 * b.precision * b.recall / (b.precision + b.recall), 1e-12);
    }
  }
}

TEST_F(TaggerTest, SelfLabeledGoldScoresPerfectly) {
  std::vector<EmotionGold> gold;
  for (const auto& entry : en_.entries()) {
    for (const auto& w : entry.words) gold.push_back({w, of({entry.emotion})});
  }
  for (const auto& b : evaluate_lexicon(gold, en_)) {
    EXPECT_DOUBLE_EQ(b.precision, 1.0);
    EXPECT_DOUBLE_EQ(b.recall, 1.0);
  }
}

TEST(EmotionGold, ValidationErrors) {
  for (const std::string bad : {"{\"text\":\"x\"}\n", "{\"emotions\":[]}\n",
                                "{\"text\":\"x\",\"emotions\":[\"boredom\"]}\n", "not json\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_emotion_gold(in), ValidationError) << bad;
  }
}

}  // namespace
}  // namespace xling
