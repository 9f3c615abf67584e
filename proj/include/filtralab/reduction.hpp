#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filtralab/filtration.hpp"

namespace filtralab {

// Outcome of testing a monomial candidate J against J F(n) = F(n+1).
// For an adic filtration one success propagates to all larger n, so the
// certificate is closed-form; otherwise it only covers the verified window.
struct ReductionReport {
  bool precondition_ok = false; // J contained in F(1)
  bool is_reduction = false;
  std::optional<long long> r;   // set only when is_reduction
  long long window = 0;
  bool adic_certificate = false;
  int generator_count = 0;
  // mu(J) = dim R: J can be a minimal reduction (k is treated as infinite).
  bool parameter_sized = false;
  std::vector<std::string> trail;
};

ReductionReport is_reduction(const MonomialIdeal& J, const Filtration& F,
                             long long window = 8);

} // namespace filtralab
