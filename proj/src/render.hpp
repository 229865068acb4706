#pragma once

#include <string>
#include <vector>

#include "types.hpp"
#include "verify.hpp"

namespace ginkit {

// Everything one parameter tuple produces, ready for serialization.
struct OutputRecord {
  CIParams params;
  CaseTag tag = CaseTag::Far;
  long long k = 0;
  std::vector<long long> lambdas;
  std::vector<long long> gap_values;
  std::vector<PhaseTag> phases;
  std::vector<std::string> generators;
  std::vector<CheckResult> checks;
};

OutputRecord make_record(const CIParams& p);

// Record built from an externally computed lambda list (oracle read-off);
// phases stay empty.
OutputRecord make_record_from_ideal(const CIParams& p, const StableIdeal& ideal);

// Single-line JSON with the stable key set
// {params, case, k, lambdas, gaps, phases, generators, checks}.
std::string render_json(const OutputRecord& rec);

// Plain-text block; gap groups are separated by phase.
std::string render_text(const OutputRecord& rec);

// CAS-pasteable: R = QQ[x,y,z_3..z_m]; J = ideal(...);
std::string render_m2(const OutputRecord& rec);

// Gap chart, one glyph per gap and one labeled line per phase segment.
std::string render_chart(const OutputRecord& rec);

// Human-readable check report.
std::string render_report(const OutputRecord& rec);

}  // namespace ginkit
