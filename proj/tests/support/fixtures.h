#ifndef XLING_TESTS_SUPPORT_FIXTURES_H_
#define XLING_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "xling/corpus.h"

namespace xling::testing {

std::filesystem::path fixture(const std::string& name);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

Document en(const std::string& id, const std::string& text);
Document ar(const std::string& id, const std::string& text);
TrainingExample subj(const std::string& id, const std::string& text);
TrainingExample obj(const std::string& id, const std::string& text);

// Random text drawn from `alphabet` code points, 0..max_len long, words
// separated by random Unicode whitespace.
std::string random_unicode_text(std::mt19937_64& rng, std::size_t max_len);

}  // namespace xling::testing

#endif  // XLING_TESTS_SUPPORT_FIXTURES_H_
