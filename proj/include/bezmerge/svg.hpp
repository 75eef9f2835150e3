#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bezmerge/curve.hpp"
#include "bezmerge/merge.hpp"

namespace bezmerge {

/// One original composite curve with an optional merged overlay.
struct SvgLayer {
  CompositeBezierCurve original;
  std::optional<MergedCurve> merged;
};

struct SvgOptions {
  int samples = 256;  ///< polyline vertices per curve
  bool control_polygons = false;
  double width_px = 600.0;
};

/// Original curves as solid blue polylines, merged curves dashed red. The y
/// axis points up. Throws kUnsupportedDimension unless every curve is planar.
std::string render_svg(const std::vector<SvgLayer>& layers, const SvgOptions& options = {});

void emit_svg(const std::vector<SvgLayer>& layers, const std::filesystem::path& path,
              const SvgOptions& options = {});

}  // namespace bezmerge
