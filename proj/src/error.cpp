#include "bezmerge/error.hpp"

namespace bezmerge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegreeBound: return "degree-bound";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kDegenerateSegment: return "degenerate-segment";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kUnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::kInternal: return "internal";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace bezmerge
