#include "bezmerge/io.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bezmerge/dual_bernstein.hpp"
#include "bezmerge/error.hpp"
#include "bezmerge/metrics.hpp"
#include "bezmerge/subdivision.hpp"
#include "json.hpp"

namespace bezmerge {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParse, where + ": " + what);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, "malformed JSON at " + line_col(text, e.byte) + ": " +
                                       e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << text;
}

json points_json(const std::vector<ControlPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(p);
  return arr;
}

json report_json(const MergeReport& r) {
  json j;
  j["name"] = r.name;
  j["input"] = {{"segments", r.segments}, {"degrees", r.degrees}, {"partition", r.partition}};
  j["params"] = {{"m", r.params.m},
                 {"k", r.params.k},
                 {"l", r.params.l},
                 {"convention", to_string(r.params.convention)}};
  j["controls"] = points_json(r.controls);
  j["errors"] = {{"e2", r.e2}, {"e_inf", r.e_inf}, {"samples", r.samples}};
  j["timing_ms"] = {{"merge", r.merge_ms}, {"errors", r.errors_ms}};
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

PartitionMethod parse_partition_method(const std::string& name) {
  if (name == "auto") return PartitionMethod::kAuto;
  if (name == "arc") return PartitionMethod::kArcLength;
  if (name == "uniform") return PartitionMethod::kUniform;
  if (name == "file") return PartitionMethod::kFile;
  throw Error(ErrorKind::kParameter, "unknown partition method '" + name + "'");
}

CurveDocument parse_curve(const std::string& text) {
  const json root = parse_json(text);
  CurveDocument doc;
  doc.dimension = integer(field(root, "dimension", "document"), "dimension");
  if (doc.dimension < 1) fail("dimension", "must be >= 1");

  const json& segs = field(root, "segments", "document");
  if (!segs.is_array() || segs.empty()) fail("segments", "expected a non-empty array");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string where = "segments[" + std::to_string(i) + "]";
    const int degree = integer(field(segs[i], "degree", where), where + ".degree");
    const json& pts = field(segs[i], "points", where);
    if (!pts.is_array()) fail(where + ".points", "expected an array");
    if (degree < 0 || pts.size() != static_cast<std::size_t>(degree) + 1) {
      fail(where + ".points", "degree " + std::to_string(degree) + " needs " +
                                  std::to_string(degree + 1) + " points, found " +
                                  std::to_string(pts.size()));
    }
    std::vector<ControlPoint> points;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const std::string pw = where + ".points[" + std::to_string(j) + "]";
      ControlPoint p = numbers(pts[j], pw);
      if (static_cast<int>(p.size()) != doc.dimension) {
        fail(pw, "has " + std::to_string(p.size()) + " coordinates, dimension is " +
                     std::to_string(doc.dimension));
      }
      points.push_back(std::move(p));
    }
    try {
      doc.segments.emplace_back(std::move(points));
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }

  if (auto it = root.find("partition"); it != root.end() && !it->is_null()) {
    std::vector<double> knots = numbers(*it, "partition");
    if (knots.size() != doc.segments.size() + 1) {
      fail("partition", std::to_string(knots.size()) + " knots given for " +
                            std::to_string(doc.segments.size()) + " segments (need " +
                            std::to_string(doc.segments.size() + 1) + ")");
    }
    try {
      doc.partition = Partition(std::move(knots));
    } catch (const Error& e) {
      fail("partition", e.what());
    }
  }
  if (auto it = root.find("metadata"); it != root.end() && it->is_object()) {
    doc.metadata.name = it->value("name", "");
    doc.metadata.source = it->value("source", "");
  }
  return doc;
}

CurveDocument load_curve(const std::filesystem::path& path) {
  try {
    return parse_curve(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kParse) throw;
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
}

std::string serialize_curve(const CurveDocument& doc) {
  json root;
  root["dimension"] = doc.dimension;
  json segs = json::array();
  for (const auto& seg : doc.segments) {
    segs.push_back({{"degree", seg.degree()}, {"points", points_json(seg.points())}});
  }
  root["segments"] = std::move(segs);
  if (doc.partition) root["partition"] = doc.partition->knots();
  if (!doc.metadata.name.empty() || !doc.metadata.source.empty()) {
    root["metadata"] = {{"name", doc.metadata.name}, {"source", doc.metadata.source}};
  }
  return root.dump(2) + "\n";
}

void save_curve(const CurveDocument& doc, const std::filesystem::path& path) {
  write_file(path, serialize_curve(doc));
}

Partition resolve_partition(const CurveDocument& doc, PartitionMethod method) {
  switch (method) {
    case PartitionMethod::kAuto:
      return doc.partition ? *doc.partition : arc_length_partition(doc.segments);
    case PartitionMethod::kArcLength:
      return arc_length_partition(doc.segments);
    case PartitionMethod::kUniform:
      return Partition::uniform(static_cast<int>(doc.segments.size()));
    case PartitionMethod::kFile:
      if (!doc.partition) {
        throw Error(ErrorKind::kParameter, "document has no stored partition");
      }
      return *doc.partition;
  }
  throw Error(ErrorKind::kParameter, "unknown partition method");
}

CompositeBezierCurve to_composite(const CurveDocument& doc, PartitionMethod method) {
  return CompositeBezierCurve(doc.segments, resolve_partition(doc, method));
}

MergeReport run_merge(const CurveDocument& doc, const MergeParams& params, int n_samples,
                      PartitionMethod method) {
  using Clock = std::chrono::steady_clock;
  const CompositeBezierCurve curve = to_composite(doc, method);
  validate(curve, params);

  MergeReport report;
  report.name = doc.metadata.name;
  report.segments = curve.segment_count();
  for (const auto& seg : curve.segments()) report.degrees.push_back(seg.degree());
  report.partition = curve.partition().knots();
  report.params = params;
  report.warnings = continuity_warnings(curve);

  const auto t0 = Clock::now();
  const CTable c = c_table(params.m, params.k, params.l);
  const DTable d = d_table(params.m, curve.partition());
  const MergedCurve merged = merge(curve, params, c, d);
  const auto t1 = Clock::now();
  const ErrorReport errors = evaluate_errors(curve, merged, d, n_samples);
  const auto t2 = Clock::now();

  report.controls = merged.controls;
  report.e2 = errors.e2;
  report.e_inf = errors.e_inf;
  report.samples = errors.samples;
  report.merge_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.errors_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  if (c.max_abs() > kCTableWarnMagnitude) {
    std::ostringstream msg;
    msg << "c-table entries reach " << c.max_abs()
        << "; binary64 results for this degree carry visible rounding error";
    report.warnings.push_back(msg.str());
  }
  return report;
}

std::string serialize_report(const MergeReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string serialize_reports(const std::vector<MergeReport>& reports) {
  if (reports.size() == 1) return serialize_report(reports.front());
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

MergeReport parse_report(const std::string& text) {
  const json j = parse_json(text);
  MergeReport r;
  try {
    r.name = j.at("name").get<std::string>();
    const json& in = j.at("input");
    r.segments = in.at("segments").get<int>();
    r.degrees = in.at("degrees").get<std::vector<int>>();
    r.partition = in.at("partition").get<std::vector<double>>();
    const json& p = j.at("params");
    r.params.m = p.at("m").get<int>();
    r.params.k = p.at("k").get<int>();
    r.params.l = p.at("l").get<int>();
    r.params.convention = parse_convention(p.at("convention").get<std::string>());
    r.controls = j.at("controls").get<std::vector<ControlPoint>>();
    const json& e = j.at("errors");
    r.e2 = e.at("e2").get<double>();
    r.e_inf = e.at("e_inf").get<double>();
    r.samples = e.at("samples").get<int>();
    const json& t = j.at("timing_ms");
    r.merge_ms = t.at("merge").get<double>();
    r.errors_ms = t.at("errors").get<double>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("report: ") + e.what());
  }
  return r;
}

}  // namespace bezmerge
