#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bezmerge/curve.hpp"
#include "bezmerge/merge.hpp"

namespace bezmerge {

struct CurveMetadata {
  std::string name;
  std::string source;
};

/// On-disk description of a composite curve. JSON layout:
///
///   {
///     "dimension": 2,
///     "segments": [ {"degree": 5, "points": [[x, y], ...]}, ... ],
///     "partition": [0, 0.45, 0.76, 1],          // optional
///     "metadata": {"name": "...", "source": "..."}  // optional
///   }
struct CurveDocument {
  int dimension = 0;
  std::vector<BezierSegment> segments;
  std::optional<Partition> partition;
  CurveMetadata metadata;

  /// True when no partition was stored and one must be derived.
  bool needs_partition() const { return !partition.has_value(); }
};

enum class PartitionMethod {
  kAuto,       ///< stored partition if present, otherwise arc length
  kArcLength,
  kUniform,
  kFile,       ///< stored partition; error when absent
};

PartitionMethod parse_partition_method(const std::string& name);

/// Throws kParse with line/column or field-path context.
CurveDocument parse_curve(const std::string& text);
CurveDocument load_curve(const std::filesystem::path& path);

std::string serialize_curve(const CurveDocument& doc);
void save_curve(const CurveDocument& doc, const std::filesystem::path& path);

Partition resolve_partition(const CurveDocument& doc, PartitionMethod method);
CompositeBezierCurve to_composite(const CurveDocument& doc,
                                  PartitionMethod method = PartitionMethod::kAuto);

struct MergeReport {
  std::string name;
  int segments = 0;
  std::vector<int> degrees;
  std::vector<double> partition;
  MergeParams params;
  std::vector<ControlPoint> controls;
  double e2 = 0.0;
  double e_inf = 0.0;
  int samples = 0;
  double merge_ms = 0.0;   ///< constraint rows, tables and free block
  double errors_ms = 0.0;  ///< E2 and E_inf evaluation
  std::vector<std::string> warnings;

  MergedCurve merged() const { return {params.m, controls}; }
};

/// Full pipeline: partition, validate, merge, then error evaluation, timed
/// separately.
MergeReport run_merge(const CurveDocument& doc, const MergeParams& params, int n_samples = 500,
                      PartitionMethod method = PartitionMethod::kAuto);

std::string serialize_report(const MergeReport& report);
std::string serialize_reports(const std::vector<MergeReport>& reports);
MergeReport parse_report(const std::string& text);

}  // namespace bezmerge
