#ifndef KPAS_ERRORS_HPP
#define KPAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpas {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text is not valid UTF-8.
struct InvalidEncoding : Error {
  explicit InvalidEncoding(std::size_t byte_offset)
      : Error("invalid UTF-8 sequence at byte " + std::to_string(byte_offset)),
        byte_offset(byte_offset) {}
  std::size_t byte_offset;
};

// Malformed line in a structured text input (token file, CSV, rules file).
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line_no(line_no) {}
  std::size_t line_no;
};

// POS tag outside the closed tag set.
struct UnknownTag : Error {
  UnknownTag(std::size_t line_no, const std::string& tag)
      : Error("line " + std::to_string(line_no) + ": unknown POS tag '" + tag + "'"),
        line_no(line_no),
        tag(tag) {}
  std::size_t line_no;
  std::string tag;
};

// A feature denominator is zero for the given document.
struct InconsistentStats : Error {
  using Error::Error;
};

// Training classes are unusable (a class empty/too small, or no separation).
struct DegenerateClasses : Error {
  using Error::Error;
};

// Within-class scatter not invertible and no regularization requested.
struct SingularScatter : Error {
  using Error::Error;
};

// Model file has the wrong version, missing fields, or is truncated.
struct ModelFormatError : Error {
  using Error::Error;
};

struct ArgumentEmpty : Error {
  using Error::Error;
};

struct EmptyDocument : Error {
  using Error::Error;
};

struct EmptyGold : Error {
  using Error::Error;
};

struct EmptySummary : Error {
  using Error::Error;
};

}  // namespace kpas

#endif  // KPAS_ERRORS_HPP
