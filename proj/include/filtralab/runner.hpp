#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "filtralab/instance.hpp"
#include "filtralab/report.hpp"

namespace filtralab {

struct RunConfig {
  std::optional<long long> window; // overrides per-task default
  std::optional<int> kmax;         // Ratliff-Rush chain bound
  FitOptions fit;
  int jobs = 1;
  bool timings = false;
};

// Filtration declarations materialized with a concrete RR configuration;
// pieces are memoized per materialization.
class MaterializedInstance {
 public:
  MaterializedInstance(const InstanceFile& file, RRConfig rr);

  const InstanceFile& file() const { return *file_; }
  const RRConfig& rr() const { return rr_; }
  // Filtration by name; an ideal name yields its adic filtration.
  const Filtration& filtration(const std::string& name);
  const MonomialIdeal& ideal(const std::string& name) const;
  std::vector<MonomialIdeal> candidate_ideals(const std::string& set) const;
  std::vector<std::string> candidate_names(const std::string& set) const;

 private:
  Filtration build(const FiltrationExpr& e);
  const InstanceFile* file_;
  RRConfig rr_;
  std::map<std::string, Filtration> built_;
};

TaskResult run_task(MaterializedInstance& inst, const TaskSpec& task,
                    const RunConfig& cfg);

ReportDocument run_instance(const InstanceFile& file,
                            const std::string& display_name,
                            const std::string& digest, const RunConfig& cfg);

struct CorpusOutcome {
  std::vector<ReportDocument> documents; // sorted by instance name
  int exit_code = 0;                     // 0 clean, 2 violated, 1 hard error
  std::vector<std::string> witnesses;
};

CorpusOutcome corpus_run(const std::filesystem::path& directory,
                         const RunConfig& cfg);

} // namespace filtralab
