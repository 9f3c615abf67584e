#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "filtralab/hilbert.hpp"
#include "filtralab/reduction.hpp"
#include "filtralab/theorems.hpp"

namespace filtralab {

using ordered_json = nlohmann::ordered_json;

// One executed task. Timing lives outside the payload so the deterministic
// part of a report is byte-stable across runs.
struct TaskResult {
  std::string text;
  std::string status = "ok"; // ok | inapplicable | expectation-mismatch
  std::optional<std::string> verdict;
  bool expectation_failed = false;
  ordered_json payload;
  double seconds = 0.0;
};

struct ReportDocument {
  std::string instance; // file basename, or "-" for ad-hoc input
  std::string digest;
  std::vector<TaskResult> tasks;
  std::optional<std::string> hard_error;
};

// Serializers for result fragments; integers are rendered as decimal
// strings so consumers never overflow.
ordered_json summary_json(const HilbertSummary& s);
ordered_json defect_json(const DefectTable& t);
ordered_json cohomology_json(const CohomologyTable& t);
ordered_json gtorsion_json(const GTorsionTable& t);
ordered_json ideal_json(const MonomialIdeal& I, const MultiIndex& n);
ordered_json reduction_json(const std::string& name, const ReductionReport& r);
ordered_json theorem_json(const TheoremReport& r);

ordered_json report_json(const ReportDocument& doc, bool timings);

enum class EmitFormat { json, csv, text };
EmitFormat parse_format(const std::string& name);

std::string emit(const ReportDocument& doc, EmitFormat format, bool timings);
// Corpus document assembled from per-instance reports.
std::string emit_corpus(const std::vector<ReportDocument>& docs,
                        EmitFormat format, bool timings);

} // namespace filtralab
