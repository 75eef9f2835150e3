// bezmerge: merge adjacent Bezier segments into one constrained least-squares
// Bezier curve, and inspect the tables behind it.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bezmerge/bench.hpp"
#include "bezmerge/dual_bernstein.hpp"
#include "bezmerge/error.hpp"
#include "bezmerge/io.hpp"
#include "bezmerge/subdivision.hpp"
#include "bezmerge/svg.hpp"

namespace {

using namespace bezmerge;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// A flag given once applies to every input; otherwise one value per input.
int pick(const std::vector<int>& values, std::size_t i, const char* flag) {
  if (values.size() == 1) return values.front();
  if (i < values.size()) return values[i];
  throw Error(ErrorKind::kParameter,
              std::string("--") + flag + " needs one value or one per input file");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  out << text;
}

struct MergeArgs {
  std::vector<std::string> files;
  std::vector<int> m;
  std::vector<int> k{0};
  std::vector<int> l{0};
  std::string convention = "local";
  int samples = 500;
  std::string partition = "auto";
  std::string report;
  std::string svg;
  bool control_polygons = false;
};

int run_merge_cmd(const MergeArgs& args) {
  std::vector<MergeReport> reports;
  std::vector<SvgLayer> layers;
  const PartitionMethod method = parse_partition_method(args.partition);
  for (std::size_t i = 0; i < args.files.size(); ++i) {
    const CurveDocument doc = load_curve(args.files[i]);
    MergeParams params;
    params.m = pick(args.m, i, "m");
    params.k = pick(args.k, i, "k");
    params.l = pick(args.l, i, "l");
    params.convention = parse_convention(args.convention);
    MergeReport report = run_merge(doc, params, args.samples, method);
    for (const auto& w : report.warnings) std::cerr << "warning: " << args.files[i] << ": " << w << "\n";
    if (!args.svg.empty()) {
      layers.push_back({to_composite(doc, method), report.merged()});
    }
    reports.push_back(std::move(report));
  }

  const std::string text = serialize_reports(reports);
  if (args.report.empty()) {
    std::cout << text;
  } else {
    write_text(args.report, text);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      std::cout << args.files[i] << ": m=" << r.params.m << " k=" << r.params.k
                << " l=" << r.params.l << " E2=" << fmt17(r.e2) << " Einf=" << fmt17(r.e_inf)
                << "\n";
    }
  }
  if (!args.svg.empty()) {
    SvgOptions options;
    options.control_polygons = args.control_polygons;
    emit_svg(layers, args.svg, options);
  }
  return 0;
}

std::vector<double> parse_knots(const std::string& text) {
  std::vector<double> knots;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
    try {
      knots.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "bad knot value '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return knots;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Merge segments of a composite Bezier curve into one constrained Bezier curve"};
  app.require_subcommand(1);

  MergeArgs margs;
  auto* merge_cmd = app.add_subcommand("merge", "merge every segment of each input curve");
  merge_cmd->add_option("files", margs.files, "curve documents (JSON)")->required()
      ->check(CLI::ExistingFile);
  merge_cmd->add_option("--m", margs.m, "target degree (comma list for several inputs)")
      ->required()->delimiter(',');
  merge_cmd->add_option("--k", margs.k, "derivatives matched at the start")->delimiter(',')
      ->capture_default_str();
  merge_cmd->add_option("--l", margs.l, "derivatives matched at the end")->delimiter(',')
      ->capture_default_str();
  merge_cmd->add_option("--convention", margs.convention, "derivative parameter")
      ->check(CLI::IsMember({"local", "global"}))->capture_default_str();
  merge_cmd->add_option("--samples", margs.samples, "grid intervals for E_inf")
      ->check(CLI::PositiveNumber)->capture_default_str();
  merge_cmd->add_option("--partition", margs.partition, "knot source")
      ->check(CLI::IsMember({"auto", "arc", "uniform", "file"}))->capture_default_str();
  merge_cmd->add_option("--report", margs.report, "write the JSON report here instead of stdout");
  merge_cmd->add_option("--svg", margs.svg, "write an SVG overlay");
  merge_cmd->add_flag("--control-polygons", margs.control_polygons, "draw control polygons");

  std::string part_file;
  std::string part_method = "arc";
  auto* part_cmd = app.add_subcommand("partition", "print the knots of a curve document");
  part_cmd->add_option("file", part_file)->required()->check(CLI::ExistingFile);
  part_cmd->add_option("--method", part_method)
      ->check(CLI::IsMember({"auto", "arc", "uniform", "file"}))->capture_default_str();

  int cm = 0, ck = 0, cl = 0;
  auto* ctab_cmd = app.add_subcommand("dump-ctable", "print c_ij(m, k, l) as CSV");
  ctab_cmd->add_option("--m", cm)->required();
  ctab_cmd->add_option("--k", ck)->capture_default_str();
  ctab_cmd->add_option("--l", cl)->capture_default_str();

  int dm = 0;
  std::string dfile;
  std::string dknots;
  std::string dscheme = "column";
  auto* dtab_cmd = app.add_subcommand("dump-dtable", "print d^(i)_jh as CSV");
  dtab_cmd->add_option("--m", dm)->required();
  auto* dfile_opt = dtab_cmd->add_option("--curve", dfile, "take knots from a curve document")
                        ->check(CLI::ExistingFile);
  dtab_cmd->add_option("--knots", dknots, "comma-separated knots, e.g. 0,0.5,1")
      ->excludes(dfile_opt);
  dtab_cmd->add_option("--scheme", dscheme)->check(CLI::IsMember({"column", "row"}))
      ->capture_default_str();

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "time merge() and fit scaling exponents");
  bench_cmd->add_option("--s", bench.s_values, "segment counts")->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--m", bench.m_values, "degrees")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*merge_cmd) return run_merge_cmd(margs);

    if (*part_cmd) {
      const CurveDocument doc = load_curve(part_file);
      const Partition part = resolve_partition(doc, parse_partition_method(part_method));
      for (double t : part.knots()) {
        std::cout << fmt17(t) << "\n";
      }
      return 0;
    }

    if (*ctab_cmd) {
      const CTable c = c_table(cm, ck, cl);
      std::cout << "i";
      for (int j = c.first(); j <= c.last(); ++j) std::cout << ",c" << j;
      std::cout << "\n";
      for (int i = c.first(); i <= c.last(); ++i) {
        std::cout << i;
        for (int j = c.first(); j <= c.last(); ++j) std::cout << "," << fmt17(c(i, j));
        std::cout << "\n";
      }
      if (c.max_abs() > kCTableWarnMagnitude) {
        std::cerr << "warning: max |c_ij| = " << c.max_abs() << "\n";
      }
      return 0;
    }

    if (*dtab_cmd) {
      Partition part = Partition::uniform(1);
      if (!dfile.empty()) {
        part = resolve_partition(load_curve(dfile), PartitionMethod::kAuto);
      } else if (!dknots.empty()) {
        part = Partition(parse_knots(dknots));
      }
      const DTable d = d_table(
          dm, part, dscheme == "row" ? DTableScheme::kRowRecurrence : DTableScheme::kColumnSweep);
      std::cout << "segment,j,h,value\n";
      for (int s = 0; s < d.segments(); ++s) {
        for (int j = 0; j <= dm; ++j) {
          for (int h = 0; h <= dm; ++h) {
            std::cout << s + 1 << "," << j << "," << h << "," << fmt17(d(s, j, h)) << "\n";
          }
        }
      }
      return 0;
    }

    if (*bench_cmd) {
      const BenchResult r = bench_scaling(bench);
      std::cout << "s,m,median_us\n";
      for (const auto& row : r.s_sweep) {
        std::cout << row.s << "," << row.m << "," << row.median_seconds * 1e6 << "\n";
      }
      for (const auto& row : r.m_sweep) {
        std::cout << row.s << "," << row.m << "," << row.median_seconds * 1e6 << "\n";
      }
      std::cout << "slope_s," << r.slope_s << "\nslope_m," << r.slope_m << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  }
  return 0;
}
