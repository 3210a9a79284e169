#include "linfiso/report_io.hpp"

#include <ostream>

#include <json.hpp>

#include "linfiso/point_set_io.hpp"

namespace linfiso {

void write_report_text(std::ostream& out, const VerificationReport& r,
                       const ReportFormatOptions& options) {
  out << "report domain " << r.sig.integer_dims() << ' ' << r.sig.natural_dims() << " n " << r.n
      << " mode " << to_string(r.mode) << '\n';
  out << "status " << to_string(r.status) << '\n';
  if (!r.box.empty()) {
    out << "box";
    for (const auto& iv : r.box) out << ' ' << iv.lo << ':' << iv.hi;
    out << '\n';
  }
  if (r.status == ReportStatus::budget_exceeded) {
    out << "initial_segment_boundary " << r.initial_segment_boundary << '\n';
    out << "note " << r.note << '\n';
  } else {
    out << "min_boundary_found " << r.min_boundary_found << '\n';
    out << "initial_segment_boundary " << r.initial_segment_boundary << '\n';
    out << "witness_count " << r.witness_count << '\n';
    out << "search_space_size " << r.search_space_size << '\n';
  }
  if (options.timing) out << "elapsed_seconds " << r.elapsed.count() << '\n';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    out << "witness " << i + 1 << '\n';
    write_point_set(out, r.witnesses[i]);
    out << "end\n";
  }
  out << "end report\n";
}

std::string report_to_json(const VerificationReport& r, const ReportFormatOptions& options) {
  nlohmann::ordered_json j;
  j["domain"] = {{"k", r.sig.integer_dims()}, {"d", r.sig.natural_dims()}};
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["status"] = to_string(r.status);
  if (r.status != ReportStatus::budget_exceeded) {
    j["min_boundary_found"] = r.min_boundary_found;
    j["witness_count"] = r.witness_count;
    j["search_space_size"] = r.search_space_size;
  }
  j["initial_segment_boundary"] = r.initial_segment_boundary;
  if (!r.box.empty()) {
    auto& box = j["box"] = nlohmann::ordered_json::array();
    for (const auto& iv : r.box) box.push_back({iv.lo, iv.hi});
  }
  if (!r.note.empty()) j["note"] = r.note;
  if (options.timing) j["elapsed_seconds"] = r.elapsed.count();
  auto& witnesses = j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(format_point_set(w));
  return j.dump();
}

} // namespace linfiso
