#include "filtralab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "filtralab/errors.hpp"
#include "filtralab/newton.hpp"

namespace filtralab {

MaterializedInstance::MaterializedInstance(const InstanceFile& file,
                                           RRConfig rr)
    : file_(&file), rr_(rr) {}

const MonomialIdeal& MaterializedInstance::ideal(
    const std::string& name) const {
  const MonomialIdeal* I = file_->find_ideal(name);
  if (!I) throw input_error("'" + name + "' is not a declared ideal");
  return *I;
}

Filtration MaterializedInstance::build(const FiltrationExpr& e) {
  switch (e.kind) {
    case FiltrationExpr::Kind::adic:
    case FiltrationExpr::Kind::normal: {
      std::vector<MonomialIdeal> base;
      for (const auto& n : e.ideal_args) base.push_back(ideal(n));
      return e.kind == FiltrationExpr::Kind::adic
                 ? Filtration::adic(std::move(base), rr_)
                 : Filtration::normal(std::move(base), rr_);
    }
    case FiltrationExpr::Kind::rr: {
      if (!e.name_arg.empty())
        return Filtration::ratliff_rush_closure(filtration(e.name_arg));
      return Filtration::ratliff_rush_closure(
          Filtration::adic({ideal(e.ideal_args.at(0))}, rr_));
    }
    case FiltrationExpr::Kind::product: {
      std::vector<Filtration> axes;
      for (const auto& sub : e.sub) axes.push_back(build(sub));
      return Filtration::product(std::move(axes));
    }
    case FiltrationExpr::Kind::ref:
      return filtration(e.name_arg);
  }
  throw input_error("unreachable filtration expression");
}

const Filtration& MaterializedInstance::filtration(const std::string& name) {
  auto it = built_.find(name);
  if (it != built_.end()) return it->second;
  if (const FiltrationExpr* expr = file_->find_filtration(name))
    return built_.emplace(name, build(*expr)).first->second;
  if (const MonomialIdeal* I = file_->find_ideal(name))
    return built_.emplace(name, Filtration::adic({*I}, rr_)).first->second;
  throw input_error("'" + name + "' is not a declared filtration or ideal");
}

std::vector<MonomialIdeal> MaterializedInstance::candidate_ideals(
    const std::string& set) const {
  std::vector<MonomialIdeal> out;
  if (set.empty()) return out;
  const auto* names = file_->find_candidates(set);
  if (!names) throw input_error("'" + set + "' is not a candidate set");
  for (const auto& n : *names) out.push_back(ideal(n));
  return out;
}

std::vector<std::string> MaterializedInstance::candidate_names(
    const std::string& set) const {
  if (set.empty()) return {};
  const auto* names = file_->find_candidates(set);
  if (!names) throw input_error("'" + set + "' is not a candidate set");
  return *names;
}

namespace {

long long default_table_window(const HilbertSummary& s) {
  return s.arity == 1 ? s.fit_base.at(0) + s.margin : s.dimension + 2;
}

void check_expectation(TaskResult& out, const TaskSpec& task) {
  const Expectation& e = task.expect;
  if (e.kind == Expectation::Kind::none) return;
  bool ok = true;
  std::string detail;
  switch (e.kind) {
    case Expectation::Kind::ints: {
      std::vector<std::string> got;
      if (out.payload.contains("e"))
        for (const auto& c : out.payload["e"])
          got.push_back(c.get<std::string>());
      else if (out.payload.contains("e_alpha"))
        for (const auto& row : out.payload["e_alpha"])
          got.push_back(row["e"].get<std::string>());
      std::vector<std::string> want;
      for (const auto& v : e.ints) want.push_back(to_decimal(v));
      ok = got == want;
      if (!ok) {
        std::ostringstream os;
        os << "expected [";
        for (size_t i = 0; i < want.size(); ++i)
          os << (i ? ", " : "") << want[i];
        os << "], got [";
        for (size_t i = 0; i < got.size(); ++i) os << (i ? ", " : "") << got[i];
        os << "]";
        detail = os.str();
      }
      break;
    }
    case Expectation::Kind::monomials: {
      std::vector<std::string> want;
      for (const auto& m : e.monomials)
        want.push_back(e.ring->monomial_string(m));
      std::sort(want.begin(), want.end());
      std::vector<std::string> got;
      if (out.payload.contains("generators"))
        for (const auto& g : out.payload["generators"])
          got.push_back(g.get<std::string>());
      std::sort(got.begin(), got.end());
      ok = got == want;
      if (!ok) detail = "generator sets differ";
      break;
    }
    case Expectation::Kind::integer: {
      std::string got = out.payload.contains("postulation") &&
                                !out.payload["postulation"].is_null()
                            ? out.payload["postulation"].get<std::string>()
                            : std::string("<none>");
      ok = got == std::to_string(e.integer);
      if (!ok) detail = "expected " + std::to_string(e.integer) + ", got " + got;
      break;
    }
    case Expectation::Kind::verdict: {
      ok = out.verdict && *out.verdict == e.verdict;
      if (!ok)
        detail = "expected verdict " + e.verdict + ", got " +
                 (out.verdict ? *out.verdict : std::string("<none>"));
      break;
    }
    case Expectation::Kind::r_value: {
      ok = !out.payload["r"].is_null() &&
           out.payload["r"].get<std::string>() == std::to_string(e.integer);
      if (!ok) detail = "reduction number differs";
      break;
    }
    case Expectation::Kind::none:
      break;
  }
  if (!ok) {
    out.expectation_failed = true;
    out.status = "expectation-mismatch";
    out.payload["expectation"] = detail.empty() ? "mismatch" : detail;
  }
}

} // namespace

TaskResult run_task(MaterializedInstance& inst, const TaskSpec& task,
                    const RunConfig& cfg) {
  TaskResult out;
  out.text = task_text(task);
  const auto start = std::chrono::steady_clock::now();

  CheckOptions copts;
  copts.fit = cfg.fit;
  copts.rr = inst.rr();
  if (task.kmax) copts.rr.k_max = *task.kmax;
  if (task.window)
    copts.window = *task.window;
  else if (cfg.window)
    copts.window = *cfg.window;

  auto table_window = [&](const HilbertSummary& s) {
    if (task.window) return *task.window;
    if (cfg.window) return *cfg.window;
    return default_table_window(s);
  };

  try {
    switch (task.kind) {
      case TaskSpec::Kind::coeffs: {
        const Filtration& F = inst.filtration(task.target);
        out.payload = summary_json(fit_polynomial(F, cfg.fit));
        break;
      }
      case TaskSpec::Kind::mixed: {
        const Filtration& F = inst.filtration(task.target);
        out.payload = summary_json(fit_polynomial_multi(F, cfg.fit));
        break;
      }
      case TaskSpec::Kind::defect: {
        const Filtration& F = inst.filtration(task.target);
        HilbertSummary s = fit(F, cfg.fit);
        long long hi = table_window(s);
        out.payload = defect_json(defect_table(F, s, 0, hi));
        break;
      }
      case TaskSpec::Kind::postulation: {
        const Filtration& F = inst.filtration(task.target);
        HilbertSummary s = fit_polynomial(F, cfg.fit);
        ordered_json j;
        j["kind"] = "postulation";
        j["postulation"] = s.postulation
                               ? ordered_json(std::to_string(*s.postulation))
                               : ordered_json(nullptr);
        if (!s.postulation) j["note"] = "P = H on all of Z";
        out.payload = j;
        break;
      }
      case TaskSpec::Kind::rr: {
        MultiIndex n = task.index ? *task.index : MultiIndex{1};
        // An ideal target means its adic filtration, so breve F(n) is the
        // Ratliff-Rush closure of I^n.
        const Filtration& F = inst.filtration(task.target);
        if (static_cast<int>(n.size()) != F.arity())
          throw input_error("index arity mismatch in rr task");
        out.payload = ideal_json(ratliff_rush_piece(F, n, copts.rr), n);
        break;
      }
      case TaskSpec::Kind::intclosure: {
        const MonomialIdeal& I = inst.ideal(task.target);
        int n = task.index ? task.index->at(0) : 1;
        out.payload = ideal_json(integral_closure_power(I, n), MultiIndex{n});
        break;
      }
      case TaskSpec::Kind::cohomology: {
        const Filtration& F = inst.filtration(task.target);
        HilbertSummary s = fit(F, cfg.fit);
        out.payload =
            cohomology_json(cohomology_table_dim2(F, s, table_window(s)));
        break;
      }
      case TaskSpec::Kind::gtorsion: {
        const Filtration& F = inst.filtration(task.target);
        int axis = task.axis ? *task.axis - 1 : 0;
        long long w = task.window ? *task.window
                                  : (cfg.window ? *cfg.window : 4);
        out.payload = gtorsion_json(g_torsion_table(F, axis, w));
        break;
      }
      case TaskSpec::Kind::reduction: {
        const Filtration& F = inst.filtration(task.target);
        const MonomialIdeal& J = inst.ideal(task.second);
        out.payload =
            reduction_json(task.second, is_reduction(J, F, copts.window));
        break;
      }
      case TaskSpec::Kind::verify: {
        TheoremReport r;
        auto cands = inst.candidate_ideals(task.with_set);
        auto names = inst.candidate_names(task.with_set);
        if (task.verify_name == "northcott")
          r = check_northcott(inst.filtration(task.target), copts);
        else if (task.verify_name == "huneke-ooishi")
          r = check_huneke_ooishi(inst.filtration(task.target), cands, names,
                                  copts);
        else if (task.verify_name == "sally")
          r = check_sally_postulation(inst.filtration(task.target),
                                      inst.ideal(task.second), task.second,
                                      copts);
        else if (task.verify_name == "nonneg")
          r = check_nonnegativity(inst.filtration(task.target), copts);
        else if (task.verify_name == "dim2-cohomology")
          r = check_dim2_cohomology_identities(inst.filtration(task.target),
                                               copts);
        else if (task.verify_name == "itoh-e2")
          r = check_itoh_e2(inst.ideal(task.target), cands, names, copts);
        else if (task.verify_name == "mgho")
          r = check_multigraded_ho(inst.filtration(task.target), cands, names,
                                   copts);
        else if (task.verify_name == "e2zero-multi")
          r = check_e2_zero_multi(inst.filtration(task.target), copts);
        else if (task.verify_name == "itoh-e3")
          r = check_normal_e3(inst.ideal(task.target), copts);
        else
          throw input_error("unknown theorem '" + task.verify_name + "'");
        out.verdict = to_string(r.verdict);
        out.payload = theorem_json(r);
        break;
      }
    }
  } catch (const unsupported_error& e) {
    out.status = "inapplicable";
    out.payload = ordered_json{{"error", e.what()}};
  }

  check_expectation(out, task);
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

ReportDocument run_instance(const InstanceFile& file,
                            const std::string& display_name,
                            const std::string& digest, const RunConfig& cfg) {
  ReportDocument doc;
  doc.instance = display_name;
  doc.digest = digest;
  RRConfig rr;
  if (cfg.kmax) rr.k_max = *cfg.kmax;
  MaterializedInstance inst(file, rr);
  for (const auto& task : file.tasks)
    doc.tasks.push_back(run_task(inst, task, cfg));
  return doc;
}

CorpusOutcome corpus_run(const std::filesystem::path& directory,
                         const RunConfig& cfg) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::exists(directory))
    for (const auto& entry : std::filesystem::directory_iterator(directory))
      if (entry.is_regular_file() && entry.path().extension() == ".flab")
        files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<ReportDocument> docs(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      ReportDocument doc;
      doc.instance = files[i].filename().string();
      try {
        std::ifstream in(files[i]);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        doc.digest = fnv1a_digest(text);
        InstanceFile parsed = parse_instance(text);
        doc = run_instance(parsed, doc.instance, doc.digest, cfg);
      } catch (const std::exception& e) {
        doc.hard_error = e.what();
      }
      docs[i] = std::move(doc);
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CorpusOutcome out;
  out.documents = std::move(docs);
  bool violated = false, hard = false;
  for (const auto& doc : out.documents) {
    if (doc.hard_error) hard = true;
    for (const auto& t : doc.tasks) {
      if (t.verdict && *t.verdict == "violated") {
        violated = true;
        out.witnesses.push_back(doc.instance + ": " + t.text);
      }
      if (t.expectation_failed) {
        violated = true;
        out.witnesses.push_back(doc.instance + ": " + t.text +
                                " (expectation mismatch)");
      }
    }
  }
  out.exit_code = hard ? 1 : (violated ? 2 : 0);
  return out;
}

} // namespace filtralab
