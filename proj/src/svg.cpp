#include "bezmerge/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "bezmerge/error.hpp"

namespace bezmerge {
namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(const ControlPoint& p) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void require_planar(int dim) {
  if (dim != 2) {
    throw Error(ErrorKind::kUnsupportedDimension,
                "SVG output needs planar curves, got dimension " + std::to_string(dim));
  }
}

// y is negated so the picture is upright in SVG's y-down space.
std::string polyline(const std::vector<ControlPoint>& pts, const std::string& style) {
  std::ostringstream out;
  out << "  <polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << num(pts[i][0]) << ',' << num(-pts[i][1]);
  }
  out << "\"/>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, const SvgOptions& options) {
  const int samples = std::max(options.samples, 2);
  std::vector<std::vector<ControlPoint>> originals;
  std::vector<std::vector<ControlPoint>> merged;
  std::vector<std::vector<ControlPoint>> polygons;
  Box box;

  for (const auto& layer : layers) {
    require_planar(layer.original.dimension());
    std::vector<ControlPoint> pts;
    for (int q = 0; q < samples; ++q) {
      const double t = static_cast<double>(q) / (samples - 1);
      pts.push_back(eval_composite(layer.original, t));
      box.add(pts.back());
    }
    originals.push_back(std::move(pts));
    if (options.control_polygons) {
      for (const auto& seg : layer.original.segments()) polygons.push_back(seg.points());
    }
    if (layer.merged) {
      const BezierSegment r = layer.merged->as_segment();
      require_planar(r.dimension());
      std::vector<ControlPoint> mp;
      for (int q = 0; q < samples; ++q) {
        mp.push_back(eval_segment(r, static_cast<double>(q) / (samples - 1)));
        box.add(mp.back());
      }
      merged.push_back(std::move(mp));
      if (options.control_polygons) polygons.push_back(r.points());
    }
  }
  for (const auto& poly : polygons) {
    for (const auto& p : poly) box.add(p);
  }
  if (layers.empty()) box = Box{0.0, 0.0, 1.0, 1.0};

  const double w = std::max(box.x1 - box.x0, 1e-12);
  const double h = std::max(box.y1 - box.y0, 1e-12);
  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  const double vb_x = box.x0 - mx;
  const double vb_y = -box.y1 - my;
  const double vb_w = w + 2 * mx;
  const double vb_h = h + 2 * my;
  const double stroke = 0.004 * std::max(vb_w, vb_h);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width_px)
      << "\" height=\"" << num(options.width_px * vb_h / vb_w) << "\" viewBox=\"" << num(vb_x)
      << ' ' << num(vb_y) << ' ' << num(vb_w) << ' ' << num(vb_h) << "\">\n";
  const std::string sw = "stroke-width=\"" + num(stroke) + "\"";
  for (const auto& poly : polygons) {
    out << polyline(poly, "stroke=\"#999999\" " + sw + " stroke-opacity=\"0.6\"");
  }
  for (const auto& pts : originals) out << polyline(pts, "stroke=\"blue\" " + sw);
  for (const auto& pts : merged) {
    out << polyline(pts, "stroke=\"red\" " + sw + " stroke-dasharray=\"" + num(4 * stroke) +
                             "," + num(3 * stroke) + "\"");
  }
  out << "</svg>\n";
  return out.str();
}

void emit_svg(const std::vector<SvgLayer>& layers, const std::filesystem::path& path,
              const SvgOptions& options) {
  const std::string text = render_svg(layers, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << text;
}

}  // namespace bezmerge
