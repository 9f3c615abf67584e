#include "filtralab/ints.hpp"

#include <stdexcept>

namespace filtralab {

Int binomial(long long a, int k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be nonnegative");
  if (k == 0) return 1;
  Int num = 1;
  for (int j = 0; j < k; ++j) num *= Int(a - j);
  Int den = 1;
  for (int j = 2; j <= k; ++j) den *= j;
  return num / den;
}

std::string to_decimal(const Int& v) { return v.str(); }

bool is_integer(const Rat& q) { return denominator(q) == 1; }

Int numerator_if_integer(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("value is not an integer");
  return numerator(q);
}

} // namespace filtralab
