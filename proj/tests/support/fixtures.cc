#include "support/fixtures.h"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace xling::testing {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(XLING_FIXTURE_DIR) / name;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("xling-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
}

Document en(const std::string& id, const std::string& text) {
  return Document{id, Language::kEnglish, text};
}

Document ar(const std::string& id, const std::string& text) {
  return Document{id, Language::kArabic, text};
}

TrainingExample subj(const std::string& id, const std::string& text) {
  return TrainingExample{en(id, text), SentimentLabel::kSubjective};
}

TrainingExample obj(const std::string& id, const std::string& text) {
  return TrainingExample{en(id, text), SentimentLabel::kObjective};
}

namespace {

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::string random_unicode_text(std::mt19937_64& rng, std::size_t max_len) {
  static const std::vector<char32_t> pool = {
      'a', 'B', 'z', '0', '9', '!', '.', ',', '-', '\'', '"', '(', ')', ' ', '\t', '\n', 0xA0,
      0x2003, 0x3000, 0x2028, 0x0627, 0x0644, 0x0643, 0x0629, 0x064E, 0x0640, 0x060C, 0x061F,
      0x00C9, 0x00E9, 0x2014, 0x201C, 0x00AB, 0x4E2D, 0x1F600, 0x0301, 0x200B};
  const std::size_t len = rng() % (max_len + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    char32_t cp;
    if (rng() % 8 == 0) {
      // Arbitrary scalar value outside the surrogate range.
      do {
        cp = static_cast<char32_t>(rng() % 0x110000);
      } while ((cp >= 0xD800 && cp <= 0xDFFF) || cp == 0);
    } else {
      cp = pool[rng() % pool.size()];
    }
    append_utf8(s, cp);
  }
  return s;
}

}  // namespace xling::testing
