#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "filtralab/errors.hpp"
#include "filtralab/runner.hpp"
#include "filtralab/version.hpp"

namespace {

using namespace filtralab;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Common {
  std::string format = "json";
  bool timings = false;
  std::optional<long long> window;
  std::optional<int> kmax;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_flag("--timings", c.timings, "include wall-clock timings");
  cmd->add_option("--window", c.window,
                  "verification / table window override");
  cmd->add_option("--kmax", c.kmax, "Ratliff-Rush stabilization bound");
}

RunConfig make_config(const Common& c) {
  RunConfig cfg;
  cfg.window = c.window;
  cfg.kmax = c.kmax;
  cfg.timings = c.timings;
  if (!cfg.kmax) {
    if (const char* env = std::getenv("FILTRALAB_KMAX"))
      cfg.kmax = std::atoi(env);
  }
  return cfg;
}

// Exit contract: 0 all verified/conditional/inapplicable, 2 a violated
// verdict or expectation mismatch, 1 hard error.
int finish(const ReportDocument& doc, const Common& c) {
  std::cout << emit(doc, parse_format(c.format), c.timings);
  for (const auto& t : doc.tasks) {
    if (t.expectation_failed) return 2;
    if (t.verdict && *t.verdict == "violated") return 2;
  }
  return 0;
}

int run_single_task(const std::string& file, TaskSpec task, const Common& c) {
  const std::string text = slurp(file);
  InstanceFile parsed = parse_instance(text);
  RunConfig cfg = make_config(c);
  RRConfig rr;
  if (cfg.kmax) rr.k_max = *cfg.kmax;
  MaterializedInstance inst(parsed, rr);
  ReportDocument doc;
  doc.instance = std::filesystem::path(file).filename().string();
  doc.digest = fnv1a_digest(text);
  doc.tasks.push_back(run_task(inst, task, cfg));
  return finish(doc, c);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert functions, filtrations and theorem checkers "
               "for m-primary monomial ideals"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  struct SubState {
    Common common;
    std::string file;
    std::string name;
    std::string second;
    std::string with_set;
    std::optional<long long> n_index;
    std::optional<int> axis;
  };

  std::vector<std::pair<std::string, TaskSpec::Kind>> simple = {
      {"coeffs", TaskSpec::Kind::coeffs},
      {"mixed", TaskSpec::Kind::mixed},
      {"defect", TaskSpec::Kind::defect},
      {"postulation", TaskSpec::Kind::postulation},
      {"rr", TaskSpec::Kind::rr},
      {"intclosure", TaskSpec::Kind::intclosure},
      {"cohomology", TaskSpec::Kind::cohomology},
      {"gtorsion", TaskSpec::Kind::gtorsion},
      {"reduction", TaskSpec::Kind::reduction},
  };
  std::map<std::string, std::shared_ptr<SubState>> states;

  for (auto& [name, kind] : simple) {
    auto st = std::make_shared<SubState>();
    states[name] = st;
    CLI::App* cmd = app.add_subcommand(
        name, name == "rr"          ? "Ratliff-Rush closure of a graded piece"
              : name == "intclosure" ? "integral closure of an ideal power"
              : name == "reduction"  ? "reduction-number report for a candidate"
                                     : "compute " + name);
    cmd->add_option("file", st->file, "instance file")->required();
    cmd->add_option("name", st->name, "declared filtration or ideal")
        ->required();
    if (name == "reduction")
      cmd->add_option("candidate", st->second, "candidate ideal")->required();
    if (name == "rr" || name == "intclosure")
      cmd->add_option("--n", st->n_index, "graded index (default 1)");
    if (name == "gtorsion")
      cmd->add_option("--axis", st->axis, "axis (1-based, default 1)");
    add_common(cmd, st->common);
  }

  auto verify_st = std::make_shared<SubState>();
  std::string theorem;
  {
    CLI::App* cmd = app.add_subcommand("verify", "run a theorem checker");
    cmd->add_option("theorem", theorem,
                    "northcott | huneke-ooishi | sally | nonneg | itoh-e2 | "
                    "dim2-cohomology | mgho | e2zero-multi | itoh-e3")
        ->required();
    cmd->add_option("file", verify_st->file, "instance file")->required();
    cmd->add_option("name", verify_st->name, "target filtration or ideal")
        ->required();
    cmd->add_option("candidate", verify_st->second,
                    "reduction candidate (sally)");
    cmd->add_option("--with", verify_st->with_set, "candidate-set name");
    add_common(cmd, verify_st->common);
  }

  auto run_st = std::make_shared<SubState>();
  {
    CLI::App* cmd =
        app.add_subcommand("run", "run an instance file's task list");
    cmd->add_option("file", run_st->file, "instance file")->required();
    add_common(cmd, run_st->common);
  }

  auto fmt_st = std::make_shared<SubState>();
  {
    CLI::App* cmd =
        app.add_subcommand("fmt", "re-print an instance in canonical form");
    cmd->add_option("file", fmt_st->file, "instance file")->required();
  }

  auto corpus_st = std::make_shared<SubState>();
  int jobs = 1;
  {
    CLI::App* cmd = app.add_subcommand(
        "corpus", "run every .flab instance in a directory");
    cmd->add_option("directory", corpus_st->file, "corpus directory")
        ->required();
    cmd->add_option("--jobs", jobs, "worker threads");
    add_common(cmd, corpus_st->common);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& [name, kind] : simple) {
      if (!app.get_subcommand(name)->parsed()) continue;
      auto st = states[name];
      TaskSpec t;
      t.kind = kind;
      t.target = st->name;
      t.second = st->second;
      t.window = st->common.window;
      if (st->common.kmax) t.kmax = st->common.kmax;
      if (st->n_index) t.index = MultiIndex{static_cast<int>(*st->n_index)};
      if (st->axis) t.axis = st->axis;
      return run_single_task(st->file, t, st->common);
    }
    if (app.get_subcommand("verify")->parsed()) {
      TaskSpec t;
      t.kind = TaskSpec::Kind::verify;
      t.verify_name = theorem;
      t.target = verify_st->name;
      t.second = verify_st->second;
      t.with_set = verify_st->with_set;
      t.window = verify_st->common.window;
      if (verify_st->common.kmax) t.kmax = verify_st->common.kmax;
      if (theorem == "sally" && t.second.empty())
        throw input_error("verify sally needs a reduction candidate argument");
      return run_single_task(verify_st->file, t, verify_st->common);
    }
    if (app.get_subcommand("run")->parsed()) {
      const std::string text = slurp(run_st->file);
      InstanceFile parsed = parse_instance(text);
      ReportDocument doc = run_instance(
          parsed, std::filesystem::path(run_st->file).filename().string(),
          fnv1a_digest(text), make_config(run_st->common));
      return finish(doc, run_st->common);
    }
    if (app.get_subcommand("fmt")->parsed()) {
      std::cout << parse_instance(slurp(fmt_st->file)).to_text();
      return 0;
    }
    if (app.get_subcommand("corpus")->parsed()) {
      RunConfig cfg = make_config(corpus_st->common);
      cfg.jobs = jobs;
      CorpusOutcome outcome = corpus_run(corpus_st->file, cfg);
      std::cout << emit_corpus(outcome.documents,
                               parse_format(corpus_st->common.format),
                               corpus_st->common.timings);
      if (!outcome.witnesses.empty()) {
        std::cerr << "witnesses:\n";
        for (const auto& w : outcome.witnesses) std::cerr << "  " << w << "\n";
      }
      return outcome.exit_code;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
