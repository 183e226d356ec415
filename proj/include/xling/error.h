#ifndef XLING_ERROR_H_
#define XLING_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xling {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input that is readable but violates a format or domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class LanguageMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CorpusError : public ValidationError {
 public:
  enum class Kind { kMalformedRecord, kDuplicateId, kEmptyCorpus, kLanguageMismatch };

  CorpusError(Kind kind, std::size_t line, const std::string& what)
      : ValidationError(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based line of the offending record, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// Training data lacks one of the two sentiment classes.
class MissingClassError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Model file does not match the expected schema or version.
class SchemaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Projected labels do not line up with the corpus pairs.
class AlignmentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LexiconError : public ValidationError {
 public:
  enum class Kind { kMalformedRow, kEmptyLexicon };

  LexiconError(Kind kind, std::size_t line, const std::string& what)
      : ValidationError(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class AgreementError : public ValidationError {
 public:
  enum class Kind { kLengthMismatch, kUnknownCategory, kOutOfRange };

  AgreementError(Kind kind, const std::string& what) : ValidationError(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace xling

#endif  // XLING_ERROR_H_
