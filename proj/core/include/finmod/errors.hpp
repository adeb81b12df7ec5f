#ifndef FINMOD_ERRORS_HPP
#define FINMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finmod {

// Construction or search would exceed a configured bound.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Operation is not defined for this backend (e.g. element enumeration on the
// integer backend).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// An axiom or structural invariant failed; message names the violated law and
// the witnessing tuple.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument to an operation (e.g. a set that is not a submodule).
class ArgumentError : public std::runtime_error {
 public:
  explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

// Instance-spec text did not conform to the grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace finmod

#endif
