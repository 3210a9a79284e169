#ifndef LINFISO_REPORT_IO_HPP
#define LINFISO_REPORT_IO_HPP

#include <iosfwd>
#include <string>

#include "linfiso/oracle.hpp"

namespace linfiso {

struct ReportFormatOptions {
  /// Include the elapsed time. Off by default so output is reproducible.
  bool timing = false;
};

/// Line-oriented text record. Witnesses are inlined in point-set text format
/// between `witness <i>` and `end` lines.
void write_report_text(std::ostream& out, const VerificationReport& report,
                       const ReportFormatOptions& options = {});

/// One JSON object on a single line.
std::string report_to_json(const VerificationReport& report,
                           const ReportFormatOptions& options = {});

} // namespace linfiso

#endif
