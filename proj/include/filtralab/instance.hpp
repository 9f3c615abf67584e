#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "filtralab/filtration.hpp"
#include "filtralab/ints.hpp"

namespace filtralab {

// Declarative filtration expression; materialized into a Filtration once a
// Ratliff-Rush configuration is known.
struct FiltrationExpr {
  enum class Kind { adic, normal, rr, product, ref };
  Kind kind = Kind::adic;
  std::vector<std::string> ideal_args; // adic/normal base, or rr(ideal)
  std::vector<FiltrationExpr> sub;     // product arguments
  std::string name_arg;                // rr(filtration) / ref
};

struct Expectation {
  enum class Kind { none, ints, monomials, integer, verdict, r_value };
  Kind kind = Kind::none;
  std::vector<Int> ints;
  std::vector<ExponentVector> monomials;
  long long integer = 0;
  std::string verdict;
  RingPtr ring; // ring in scope when the expectation was parsed
};

struct TaskSpec {
  enum class Kind {
    coeffs,
    mixed,
    defect,
    postulation,
    rr,
    intclosure,
    cohomology,
    gtorsion,
    reduction,
    verify
  };
  Kind kind = Kind::coeffs;
  std::string verify_name; // northcott, huneke-ooishi, ...
  std::string target;      // filtration or ideal name
  std::string second;      // J for sally / reduction
  std::string with_set;    // candidate set name
  std::optional<MultiIndex> index;
  std::optional<long long> window;
  std::optional<int> kmax;
  std::optional<int> axis;
  Expectation expect;
  std::string text; // normalized task line
};

struct InstanceFile {
  std::vector<std::pair<std::string, RingPtr>> rings;
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;
  std::vector<std::pair<std::string, FiltrationExpr>> filtrations;
  std::vector<std::pair<std::string, std::vector<std::string>>> candidate_sets;
  std::vector<TaskSpec> tasks;

  const MonomialIdeal* find_ideal(const std::string& name) const;
  const FiltrationExpr* find_filtration(const std::string& name) const;
  const std::vector<std::string>* find_candidates(const std::string& name) const;

  // Canonical re-print; parsing the result yields the same structure.
  std::string to_text() const;
};

InstanceFile parse_instance(const std::string& text);

// Normalized one-line rendering of a task, used in reports and by to_text.
std::string task_text(const TaskSpec& t);

std::string fnv1a_digest(const std::string& bytes);

} // namespace filtralab
