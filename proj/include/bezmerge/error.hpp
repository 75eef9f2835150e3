#pragma once

#include <stdexcept>
#include <string>

namespace bezmerge {

enum class ErrorKind {
  kDegreeBound,
  kDomain,
  kRange,
  kParameter,
  kIndex,
  kShape,
  kDegenerateSegment,
  kValidation,
  kParse,
  kUnsupportedDimension,
  kInternal,
  kIo,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bezmerge
