#include "filtralab/report.hpp"

#include <map>
#include <sstream>

#include "filtralab/errors.hpp"
#include "filtralab/version.hpp"

namespace filtralab {

namespace {

ordered_json index_json(const MultiIndex& n) {
  ordered_json a = ordered_json::array();
  for (int c : n) a.push_back(c);
  return a;
}

std::string csv_index(const MultiIndex& n) {
  std::ostringstream os;
  for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  return os.str();
}

} // namespace

ordered_json summary_json(const HilbertSummary& s) {
  ordered_json j;
  j["kind"] = "hilbert_summary";
  j["arity"] = s.arity;
  j["dimension"] = s.dimension;
  if (s.arity == 1) {
    ordered_json e = ordered_json::array();
    for (const auto& c : s.e) e.push_back(to_decimal(c));
    j["e"] = e;
    j["postulation"] =
        s.postulation ? ordered_json(std::to_string(*s.postulation))
                      : ordered_json(nullptr);
  } else {
    ordered_json table = ordered_json::array();
    for (const auto& [alpha, c] : s.e_alpha) {
      ordered_json row;
      row["alpha"] = index_json(alpha);
      row["e"] = to_decimal(c);
      table.push_back(row);
    }
    j["e_alpha"] = table;
  }
  j["fit_base"] = index_json(s.fit_base);
  j["margin"] = s.margin;
  ordered_json ft = ordered_json::array();
  for (const auto& [n, h] : s.function_table) {
    ordered_json row;
    row["n"] = index_json(n);
    row["h"] = to_decimal(h);
    ft.push_back(row);
  }
  j["function_table"] = ft;
  return j;
}

ordered_json defect_json(const DefectTable& t) {
  ordered_json j;
  j["kind"] = "defect_table";
  ordered_json rows = ordered_json::array();
  for (const auto& [n, chi] : t.rows) {
    ordered_json row;
    row["n"] = index_json(n);
    row["chi"] = to_decimal(chi);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

ordered_json cohomology_json(const CohomologyTable& t) {
  ordered_json j;
  j["kind"] = "cohomology_table";
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json row;
    row["n"] = index_json(r.n);
    row["h1"] = to_decimal(r.h1);
    row["h2"] = to_decimal(r.h2);
    rows.push_back(row);
  }
  j["rows"] = rows;
  if (t.h2_minus_one) {
    j["h2_minus_one"] = to_decimal(*t.h2_minus_one);
    j["h2_minus_one_note"] = "identity-derived, not measured";
  }
  return j;
}

ordered_json gtorsion_json(const GTorsionTable& t) {
  ordered_json j;
  j["kind"] = "g_torsion_table";
  j["axis"] = t.axis + 1;
  ordered_json rows = ordered_json::array();
  for (const auto& [n, v] : t.rows) {
    ordered_json row;
    row["n"] = index_json(n);
    row["lambda"] = to_decimal(v);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

ordered_json ideal_json(const MonomialIdeal& I, const MultiIndex& n) {
  ordered_json j;
  j["kind"] = "ideal";
  j["n"] = index_json(n);
  ordered_json gens = ordered_json::array();
  for (const auto& g : I.generators())
    gens.push_back(I.ring()->monomial_string(g));
  j["generators"] = gens;
  return j;
}

ordered_json reduction_json(const std::string& name,
                            const ReductionReport& r) {
  ordered_json j;
  j["kind"] = "reduction_report";
  j["candidate"] = name;
  j["precondition_ok"] = r.precondition_ok;
  j["is_reduction"] = r.is_reduction;
  j["r"] = r.r ? ordered_json(std::to_string(*r.r)) : ordered_json(nullptr);
  j["window"] = r.window;
  j["certificate"] = r.adic_certificate ? "adic-closed-form" : "windowed";
  j["generator_count"] = r.generator_count;
  j["parameter_sized"] = r.parameter_sized;
  j["trail"] = r.trail;
  return j;
}

ordered_json theorem_json(const TheoremReport& r) {
  ordered_json j;
  j["kind"] = "theorem_report";
  j["theorem"] = r.theorem;
  j["verdict"] = to_string(r.verdict);
  j["hypotheses_checked"] = r.hypotheses_checked;
  j["hypotheses_assumed"] = r.hypotheses_assumed;
  ordered_json q = ordered_json::array();
  for (const auto& [k, v] : r.quantities) {
    ordered_json row;
    row["name"] = k;
    row["value"] = v;
    q.push_back(row);
  }
  j["quantities"] = q;
  j["trail"] = r.trail;
  ordered_json cands = ordered_json::array();
  for (const auto& [name, rep] : r.candidates)
    cands.push_back(reduction_json(name, rep));
  j["candidates"] = cands;
  return j;
}

ordered_json report_json(const ReportDocument& doc, bool timings) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["instance"] = doc.instance;
  j["digest"] = doc.digest;
  if (doc.hard_error) j["error"] = *doc.hard_error;
  ordered_json tasks = ordered_json::array();
  for (size_t i = 0; i < doc.tasks.size(); ++i) {
    const TaskResult& t = doc.tasks[i];
    ordered_json row;
    row["index"] = i;
    row["task"] = t.text;
    row["status"] = t.status;
    if (t.verdict) row["verdict"] = *t.verdict;
    row["result"] = t.payload;
    tasks.push_back(row);
  }
  j["tasks"] = tasks;
  if (timings) {
    ordered_json ts = ordered_json::array();
    for (size_t i = 0; i < doc.tasks.size(); ++i) {
      ordered_json row;
      row["index"] = i;
      row["seconds"] = doc.tasks[i].seconds;
      ts.push_back(row);
    }
    j["timings"] = ts;
  }
  return j;
}

EmitFormat parse_format(const std::string& name) {
  if (name == "json") return EmitFormat::json;
  if (name == "csv") return EmitFormat::csv;
  if (name == "text") return EmitFormat::text;
  throw input_error("unknown format '" + name + "'");
}

namespace {

void csv_payload(std::ostringstream& os, const ordered_json& p) {
  const std::string kind = p.value("kind", "");
  if (kind == "hilbert_summary") {
    if (p.contains("e")) {
      os << "i,e_i\n";
      int i = 0;
      for (const auto& c : p["e"])
        os << i++ << "," << c.get<std::string>() << "\n";
      os << "n,h\n";
      for (const auto& row : p["function_table"])
        os << csv_index(row["n"].get<MultiIndex>()) << ","
           << row["h"].get<std::string>() << "\n";
    } else {
      size_t s = p["e_alpha"].empty() ? 0 : p["e_alpha"][0]["alpha"].size();
      for (size_t i = 1; i <= s; ++i) os << "alpha_" << i << ",";
      os << "e_alpha\n";
      for (const auto& row : p["e_alpha"]) {
        for (const auto& a : row["alpha"]) os << a.get<int>() << ",";
        os << row["e"].get<std::string>() << "\n";
      }
    }
    return;
  }
  if (kind == "defect_table") {
    size_t s = p["rows"].empty() ? 1 : p["rows"][0]["n"].size();
    if (s == 1)
      os << "n,chi\n";
    else {
      for (size_t i = 1; i <= s; ++i) os << "n_" << i << ",";
      os << "chi\n";
    }
    for (const auto& row : p["rows"]) {
      for (const auto& c : row["n"]) os << c.get<int>() << ",";
      os << row["chi"].get<std::string>() << "\n";
    }
    return;
  }
  if (kind == "cohomology_table") {
    os << "n,h1,h2\n";
    if (p.contains("h2_minus_one"))
      os << "-1,," << p["h2_minus_one"].get<std::string>() << "\n";
    for (const auto& row : p["rows"]) {
      os << csv_index(row["n"].get<MultiIndex>()) << ","
         << row["h1"].get<std::string>() << "," << row["h2"].get<std::string>()
         << "\n";
    }
    return;
  }
  if (kind == "g_torsion_table") {
    os << "n,lambda\n";
    for (const auto& row : p["rows"])
      os << csv_index(row["n"].get<MultiIndex>()) << ","
         << row["lambda"].get<std::string>() << "\n";
    return;
  }
  if (kind == "ideal") {
    os << "generator\n";
    for (const auto& g : p["generators"]) os << g.get<std::string>() << "\n";
    return;
  }
  if (kind == "theorem_report") {
    os << "name,value\n";
    os << "theorem," << p["theorem"].get<std::string>() << "\n";
    os << "verdict," << p["verdict"].get<std::string>() << "\n";
    for (const auto& q : p["quantities"])
      os << q["name"].get<std::string>() << ","
         << "\"" << q["value"].get<std::string>() << "\"\n";
    return;
  }
  if (kind == "reduction_report") {
    os << "name,value\n";
    os << "candidate," << p["candidate"].get<std::string>() << "\n";
    os << "is_reduction," << (p["is_reduction"].get<bool>() ? 1 : 0) << "\n";
    os << "r," << (p["r"].is_null() ? "" : p["r"].get<std::string>()) << "\n";
    os << "certificate," << p["certificate"].get<std::string>() << "\n";
    return;
  }
  os << "json\n" << p.dump() << "\n";
}

void text_payload(std::ostringstream& os, const ordered_json& p) {
  const std::string kind = p.value("kind", "");
  if (kind == "hilbert_summary") {
    if (p.contains("e")) {
      os << "  e = [";
      bool first = true;
      for (const auto& c : p["e"]) {
        os << (first ? "" : ", ") << c.get<std::string>();
        first = false;
      }
      os << "]";
      if (!p["postulation"].is_null())
        os << ", postulation = " << p["postulation"].get<std::string>();
      os << "\n";
    } else {
      for (const auto& row : p["e_alpha"]) {
        os << "  e_(";
        bool first = true;
        for (const auto& a : row["alpha"]) {
          os << (first ? "" : ",") << a.get<int>();
          first = false;
        }
        os << ") = " << row["e"].get<std::string>() << "\n";
      }
    }
    return;
  }
  if (kind == "defect_table") {
    for (const auto& row : p["rows"])
      os << "  chi(" << csv_index(row["n"].get<MultiIndex>())
         << ") = " << row["chi"].get<std::string>() << "\n";
    return;
  }
  if (kind == "cohomology_table") {
    if (p.contains("h2_minus_one"))
      os << "  n=-1: h2 = " << p["h2_minus_one"].get<std::string>()
         << " (identity-derived)\n";
    for (const auto& row : p["rows"])
      os << "  n=" << csv_index(row["n"].get<MultiIndex>())
         << ": h1 = " << row["h1"].get<std::string>()
         << ", h2 = " << row["h2"].get<std::string>() << "\n";
    return;
  }
  if (kind == "g_torsion_table") {
    for (const auto& row : p["rows"])
      os << "  n=" << csv_index(row["n"].get<MultiIndex>())
         << ": lambda = " << row["lambda"].get<std::string>() << "\n";
    return;
  }
  if (kind == "ideal") {
    os << "  generators: ";
    bool first = true;
    for (const auto& g : p["generators"]) {
      os << (first ? "" : ", ") << g.get<std::string>();
      first = false;
    }
    if (first) os << "(zero ideal)";
    os << "\n";
    return;
  }
  if (kind == "theorem_report") {
    os << "  " << p["theorem"].get<std::string>() << ": "
       << p["verdict"].get<std::string>() << "\n";
    for (const auto& q : p["quantities"])
      os << "    " << q["name"].get<std::string>() << " = "
         << q["value"].get<std::string>() << "\n";
    for (const auto& l : p["trail"])
      os << "    " << l.get<std::string>() << "\n";
    return;
  }
  if (kind == "reduction_report") {
    os << "  candidate " << p["candidate"].get<std::string>() << ": "
       << (p["is_reduction"].get<bool>() ? "reduction" : "not a reduction");
    if (!p["r"].is_null()) os << ", r = " << p["r"].get<std::string>();
    os << " (" << p["certificate"].get<std::string>() << ")\n";
    return;
  }
  if (p.contains("error"))
    os << "  error: " << p["error"].get<std::string>() << "\n";
}

} // namespace

std::string emit(const ReportDocument& doc, EmitFormat format, bool timings) {
  if (format == EmitFormat::json)
    return report_json(doc, timings).dump(2) + "\n";
  std::ostringstream os;
  if (format == EmitFormat::csv) {
    for (size_t i = 0; i < doc.tasks.size(); ++i) {
      os << "# task " << i << ": " << doc.tasks[i].text << " ["
         << doc.tasks[i].status << "]\n";
      csv_payload(os, doc.tasks[i].payload);
    }
    return os.str();
  }
  os << kToolName << " " << kVersion << " — " << doc.instance << " ("
     << doc.digest << ")\n";
  if (doc.hard_error) os << "error: " << *doc.hard_error << "\n";
  for (size_t i = 0; i < doc.tasks.size(); ++i) {
    const TaskResult& t = doc.tasks[i];
    os << "task " << i << ": " << t.text << " — " << t.status;
    if (t.verdict) os << " (" << *t.verdict << ")";
    os << "\n";
    text_payload(os, t.payload);
    if (timings) os << "  [" << t.seconds << "s]\n";
  }
  return os.str();
}

std::string emit_corpus(const std::vector<ReportDocument>& docs,
                        EmitFormat format, bool timings) {
  // Aggregate verdict counts per theorem and overall.
  std::map<std::string, std::map<std::string, int>> by_theorem;
  std::map<std::string, int> verdicts;
  int expectation_failures = 0, hard_errors = 0, task_count = 0;
  std::vector<std::string> witnesses;
  for (const auto& doc : docs) {
    if (doc.hard_error) ++hard_errors;
    for (const auto& t : doc.tasks) {
      ++task_count;
      if (t.verdict) {
        ++verdicts[*t.verdict];
        std::string thm = t.payload.value("theorem", "");
        if (!thm.empty()) ++by_theorem[thm][*t.verdict];
        if (*t.verdict == "violated")
          witnesses.push_back(doc.instance + ": " + t.text);
      }
      if (t.expectation_failed) {
        ++expectation_failures;
        witnesses.push_back(doc.instance + ": " + t.text +
                            " (expectation mismatch)");
      }
    }
  }

  if (format == EmitFormat::json) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["kind"] = "corpus_report";
    ordered_json docs_json = ordered_json::array();
    for (const auto& d : docs) docs_json.push_back(report_json(d, timings));
    j["instances"] = docs_json;
    ordered_json s;
    s["instances"] = docs.size();
    s["tasks"] = task_count;
    ordered_json v;
    for (const char* name : {"verified", "conditional", "violated",
                             "inapplicable"})
      v[name] = verdicts.count(name) ? verdicts[name] : 0;
    s["verdicts"] = v;
    s["expectation_failures"] = expectation_failures;
    s["hard_errors"] = hard_errors;
    ordered_json bt = ordered_json::array();
    for (const auto& [thm, counts] : by_theorem) {
      ordered_json row;
      row["theorem"] = thm;
      for (const auto& [verdict, c] : counts) row[verdict] = c;
      bt.push_back(row);
    }
    s["by_theorem"] = bt;
    s["witnesses"] = witnesses;
    j["summary"] = s;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == EmitFormat::csv) {
    os << "instance,task,status,verdict\n";
    for (const auto& doc : docs)
      for (const auto& t : doc.tasks)
        os << doc.instance << ",\"" << t.text << "\"," << t.status << ","
           << (t.verdict ? *t.verdict : "") << "\n";
    return os.str();
  }
  os << kToolName << " " << kVersion << " corpus report: " << docs.size()
     << " instances, " << task_count << " tasks\n";
  os << "verdicts:";
  for (const char* name : {"verified", "conditional", "violated",
                           "inapplicable"})
    os << " " << name << "=" << (verdicts.count(name) ? verdicts[name] : 0);
  os << "; expectation failures: " << expectation_failures
     << "; hard errors: " << hard_errors << "\n";
  os << "theorem-by-instance verdicts:\n";
  for (const auto& [thm, counts] : by_theorem) {
    os << "  " << thm << ":";
    for (const auto& [verdict, c] : counts) os << " " << verdict << "=" << c;
    os << "\n";
  }
  for (const auto& doc : docs) {
    os << "  " << doc.instance << ":";
    if (doc.hard_error) {
      os << " ERROR " << *doc.hard_error << "\n";
      continue;
    }
    for (const auto& t : doc.tasks) {
      os << " [" << (t.verdict ? *t.verdict : t.status) << "]";
    }
    os << "\n";
  }
  if (!witnesses.empty()) {
    os << "witnesses:\n";
    for (const auto& w : witnesses) os << "  " << w << "\n";
  }
  return os.str();
}

} // namespace filtralab
