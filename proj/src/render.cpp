#include "render.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "algorithms.hpp"

namespace ginkit {

namespace {

using ordered_json = nlohmann::ordered_json;

// Contiguous runs of identical phase tags over gap indices 1..k-1.
struct Segment {
  PhaseTag phase;
  std::size_t first = 0;  // first gap index (1-based over lambdas)
  std::size_t last = 0;   // inclusive
};

std::vector<Segment> phase_segments(const OutputRecord& rec) {
  std::vector<Segment> segs;
  for (std::size_t i = 1; i < rec.phases.size(); ++i) {
    if (segs.empty() || !(segs.back().phase == rec.phases[i]))
      segs.push_back({rec.phases[i], i, i});
    else
      segs.back().last = i;
  }
  return segs;
}

}  // namespace

OutputRecord make_record(const CIParams& p) {
  OutputRecord rec;
  rec.params = p;
  rec.tag = dispatch_case(p);
  InvariantSequence seq = compute_invariants(p);
  rec.k = static_cast<long long>(seq.lambdas.size());
  rec.gap_values = gaps(seq);
  rec.generators = to_generators(seq).generators();
  rec.lambdas = std::move(seq.lambdas);
  rec.phases = std::move(seq.phases);
  return rec;
}

OutputRecord make_record_from_ideal(const CIParams& p, const StableIdeal& ideal) {
  OutputRecord rec;
  rec.params = p;
  rec.tag = dispatch_case(p);
  rec.k = ideal.k;
  rec.lambdas = ideal.lambdas;
  for (std::size_t i = 1; i < ideal.lambdas.size(); ++i)
    rec.gap_values.push_back(ideal.lambdas[i - 1] - ideal.lambdas[i]);
  rec.generators = ideal.generators();
  return rec;
}

std::string render_json(const OutputRecord& rec) {
  ordered_json j;
  j["params"] = {{"alpha", rec.params.alpha},
                 {"beta", rec.params.beta},
                 {"n", rec.params.n},
                 {"m", rec.params.m}};
  j["case"] = to_string(rec.tag);
  j["k"] = rec.k;
  j["lambdas"] = rec.lambdas;
  j["gaps"] = rec.gap_values;
  ordered_json phase_array = ordered_json::array();
  for (const auto& ph : rec.phases) phase_array.push_back(to_string(ph));
  j["phases"] = std::move(phase_array);
  j["generators"] = rec.generators;
  ordered_json checks = ordered_json::object();
  for (const auto& c : rec.checks)
    checks[c.name] = {{"pass", c.pass}, {"detail", c.detail}, {"ms", c.ms}};
  j["checks"] = std::move(checks);
  return j.dump();
}

std::string render_text(const OutputRecord& rec) {
  std::ostringstream out;
  out << "case:    " << to_string(rec.tag) << "  (alpha=" << rec.params.alpha
      << ", beta=" << rec.params.beta << ", n=" << rec.params.n << ", m=" << rec.params.m
      << ")\n";
  out << "k:       " << rec.k << "\n";
  out << "lambda:  ";
  for (std::size_t i = 0; i < rec.lambdas.size(); ++i)
    out << (i ? "," : "") << rec.lambdas[i];
  out << "\n";
  out << "gaps:    ";
  const auto segs = phase_segments(rec);
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (s) out << "  ";
    for (std::size_t i = segs[s].first; i <= segs[s].last; ++i)
      out << (i > segs[s].first ? "," : "") << rec.gap_values[i - 1];
  }
  out << "\n";
  out << "gens:    ";
  for (std::size_t i = 0; i < rec.generators.size(); ++i)
    out << (i ? ", " : "") << rec.generators[i];
  out << "\n";
  if (!rec.checks.empty()) out << render_report(rec);
  return out.str();
}

std::string render_m2(const OutputRecord& rec) {
  std::ostringstream out;
  out << "R = QQ[x,y";
  if (rec.params.m == 3)
    out << ",z_3";
  else if (rec.params.m > 3)
    out << ",z_3..z_" << rec.params.m;
  out << "]; J = ideal(";
  for (std::size_t i = 0; i < rec.generators.size(); ++i)
    out << (i ? ", " : "") << rec.generators[i];
  out << ");";
  return out.str();
}

std::string render_chart(const OutputRecord& rec) {
  const long long far_gap = rec.params.beta - 2 * rec.params.alpha + 2;
  auto glyph = [](long long g) {
    if (g == 1) return std::string("·");
    if (g == 2) return std::string(":");
    return std::string("#");
  };
  std::ostringstream out;
  out << "gap chart  (alpha=" << rec.params.alpha << ", beta=" << rec.params.beta
      << ", n=" << rec.params.n << ", case " << to_string(rec.tag) << ")\n";
  out << "legend: ·=1  :=2";
  if (std::any_of(rec.gap_values.begin(), rec.gap_values.end(),
                  [](long long g) { return g > 2; }))
    out << "  #=" << far_gap;
  out << "\n";
  const auto segs = phase_segments(rec);
  if (segs.empty()) {
    out << "(no gaps: k = 1)\n";
    return out.str();
  }
  std::size_t width = 0;
  for (const auto& s : segs) width = std::max(width, to_string(s.phase).size());
  for (const auto& s : segs) {
    const std::string label = to_string(s.phase);
    out << "[" << label << "] " << std::string(width - label.size(), ' ');
    for (std::size_t i = s.first; i <= s.last; ++i) out << glyph(rec.gap_values[i - 1]);
    out << "\n";
  }
  return out.str();
}

std::string render_report(const OutputRecord& rec) {
  std::ostringstream out;
  for (const auto& c : rec.checks) {
    out << "check " << c.name;
    for (std::size_t pad = c.name.size(); pad < 12; ++pad) out << ' ';
    out << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "  (" << c.ms << " ms)\n";
  }
  return out.str();
}

}  // namespace ginkit
