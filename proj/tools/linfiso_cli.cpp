// linfiso: command-line front end for the l-infinity lattice isoperimetry
// library. See README.md for usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linfiso/linfiso.hpp"

namespace {

using namespace linfiso;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFalsified = 2,
  kBudget = 3,
};

struct DomainFlags {
  std::size_t z = 0;
  std::size_t n = 0;

  void add_to(CLI::App& app) {
    app.add_option("--z", z, "number of integer-type coordinates (K)");
    app.add_option("--n", n, "number of natural-type coordinates (D)");
  }
  DomainSignature signature() const { return DomainSignature(z, n); }
};

Box parse_box(const std::vector<std::string>& intervals_text, const DomainSignature& sig) {
  std::vector<Interval> intervals;
  for (const auto& text : intervals_text) {
    auto colon = text.find(':', text.empty() ? 0 : 1);
    if (colon == std::string::npos) throw ParseError("box interval '" + text + "' is not LO:HI");
    try {
      auto whole = [](const std::string& field) {
        std::size_t used = 0;
        const Coord v = std::stoll(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
      };
      intervals.push_back({whole(text.substr(0, colon)), whole(text.substr(colon + 1))});
    } catch (const std::exception&) {
      throw ParseError("box interval '" + text + "' is not LO:HI");
    }
  }
  if (intervals.size() == 1) return Box(sig.dim(), intervals.front());
  if (intervals.size() != sig.dim()) {
    throw ParseError("--box needs one interval or one per coordinate (" +
                     std::to_string(sig.dim()) + ")");
  }
  return intervals;
}

void write_set(const std::string& path, const PointSet& s) {
  if (path == "-") {
    write_point_set(std::cout, s);
  } else {
    write_point_set_file(path, s);
  }
}

int run_order(const DomainFlags& domain, std::size_t count) {
  const auto sig = domain.signature();
  const auto points = first_points(sig, count);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::cout << i + 1;
    for (Coord c : points[i]) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return kOk;
}

int run_boundary(const DomainFlags& domain, const std::string& input, const std::string& method,
                 std::optional<std::size_t> segment_size, const std::string& output) {
  if (segment_size) {
    const auto sig = domain.signature();
    std::cout << initial_segment_boundary_size(sig, *segment_size) << '\n';
    if (!output.empty()) write_set(output, vertex_boundary(initial_segment(sig, *segment_size)));
    return kOk;
  }
  if (input.empty()) throw ParseError("boundary needs --input or --segment-size");
  const PointSet s = read_point_set_file(input);
  if (method == "formula") {
    std::cout << boundary_via_projections(s) << '\n';
  } else {
    std::cout << vertex_boundary_size(s) << '\n';
  }
  if (!output.empty()) write_set(output, vertex_boundary(s));
  return kOk;
}

int run_compress(const std::string& input, const std::string& kind,
                 std::optional<std::size_t> coordinate, bool all, const std::string& output) {
  const PointSet s = read_point_set_file(input);
  PointSet result = s;
  if (all) {
    result = centralize(s);
  } else {
    if (!coordinate || *coordinate == 0) throw ParseError("compress needs --coord I (1-based) or --all");
    result = apply_compression(s, {parse_compression_kind(kind), *coordinate - 1});
  }
  std::cout << "size " << s.size() << '\n';
  std::cout << "boundary_before " << vertex_boundary_size(s) << '\n';
  std::cout << "boundary_after " << vertex_boundary_size(result) << '\n';
  write_set(output, result);
  return kOk;
}

int run_verify(const DomainFlags& domain, std::size_t max_n, const std::string& mode_name,
               const std::vector<std::string>& box_specs, const OracleOptions& base,
               const std::string& format, bool timing) {
  const auto sig = domain.signature();
  OracleOptions options = base;
  if (!box_specs.empty()) options.box = parse_box(box_specs, sig);
  const SearchMode mode = parse_search_mode(mode_name);
  const ReportFormatOptions fmt{.timing = timing};
  bool falsified = false;
  bool over_budget = false;
  for (const auto& r : verify_segment_minimality(sig, max_n, mode, options)) {
    if (format == "structured") {
      std::cout << report_to_json(r, fmt) << '\n';
    } else {
      write_report_text(std::cout, r, fmt);
    }
    std::cout.flush();
    falsified = falsified || r.falsified();
    over_budget = over_budget || r.status == ReportStatus::budget_exceeded;
  }
  if (falsified) return kFalsified;
  if (over_budget) return kBudget;
  return kOk;
}

int run_render(const std::string& input, const std::string& output, const SvgStyle& style) {
  const PointSet s = read_point_set_file(input);
  const std::string svg = render_svg(s, style);
  if (output == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ParseError("cannot write " + output);
    out << svg;
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex boundaries, compressions and exhaustive minimality checks on "
               "Z^K x N^D with l-infinity adjacency"};
  app.require_subcommand(1);

  DomainFlags domain;
  std::string input;
  std::string output;
  OracleOptions oracle;
  std::string format = "text";

  auto* order = app.add_subcommand("order", "list the first points of the well-ordering");
  domain.add_to(*order);
  std::size_t count = 0;
  order->add_option("-c,--count", count, "number of points")->required()->check(CLI::PositiveNumber);

  auto* boundary = app.add_subcommand("boundary", "vertex boundary size of a set");
  domain.add_to(*boundary);
  std::string method = "direct";
  std::optional<std::size_t> segment_size;
  boundary->add_option("--input", input, "point-set file");
  boundary->add_option("--method", method, "direct or formula (projection sum)")
      ->check(CLI::IsMember({"direct", "formula"}));
  boundary->add_option("--segment-size", segment_size,
                       "size of the initial segment of --z/--n instead of a file")
      ->check(CLI::PositiveNumber);
  boundary->add_option("--output", output, "write the boundary set here ('-' for stdout)");

  auto* compress = app.add_subcommand("compress", "apply a compression operator");
  std::string kind = "central";
  std::optional<std::size_t> coordinate;
  bool all = false;
  compress->add_option("--input", input, "point-set file")->required();
  compress->add_option("--kind", kind, "initial-segment-sections, central or downward")
      ->check(CLI::IsMember({"initial-segment-sections", "central", "downward"}));
  compress->add_option("--coord", coordinate, "coordinate (1-based)");
  compress->add_flag("--all", all, "compress every coordinate until nothing changes");
  compress->add_option("--output", output, "result point-set file ('-' for stdout)")->required();

  auto* verify = app.add_subcommand("verify", "exhaustively check that initial segments minimise the boundary");
  domain.add_to(*verify);
  std::size_t max_n = 0;
  std::string mode = "full";
  std::vector<std::string> box_specs;
  bool timing = false;
  verify->add_option("--max-n", max_n, "check set sizes 1..N")->required()->check(CLI::PositiveNumber);
  verify->add_option("--mode", mode, "full or compressed_only")
      ->check(CLI::IsMember({"full", "compressed_only", "compressed"}));
  verify->add_option("--box", box_specs, "search interval LO:HI, once for all coordinates or once per coordinate");
  verify->add_option("--budget", oracle.budget, "maximum subsets enumerated per size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--witness-cap", oracle.witness_cap, "maximum witnesses reported per size")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", oracle.threads, "worker threads (0 = all cores)");
  verify->add_option("--format", format, "text or structured (JSON lines)")
      ->check(CLI::IsMember({"text", "structured"}));
  verify->add_flag("--timing", timing, "include elapsed time in reports");

  auto* render = app.add_subcommand("render", "draw a 2-D set and its boundary as SVG");
  SvgStyle style;
  render->add_option("--input", input, "point-set file")->required();
  render->add_option("--output", output, "SVG file ('-' for stdout)")->required();
  render->add_option("--cell-size", style.cell_size, "pixels per lattice step")->check(CLI::PositiveNumber);
  render->add_option("--set-color", style.set_color, "fill colour of set points");
  render->add_option("--boundary-color", style.boundary_color, "fill colour of boundary points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*order) return run_order(domain, count);
    if (*boundary) return run_boundary(domain, input, method, segment_size, output);
    if (*compress) return run_compress(input, kind, coordinate, all, output);
    if (*verify) return run_verify(domain, max_n, mode, box_specs, oracle, format, timing);
    if (*render) return run_render(input, output, style);
  } catch (const BudgetExceeded& e) {
    std::cerr << "linfiso: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "linfiso: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
