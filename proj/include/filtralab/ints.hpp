#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace filtralab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Generalized binomial coefficient C(a, k) for any integer a and k >= 0.
// Integer-valued on integer arguments (k! divides any product of k
// consecutive integers).
Int binomial(long long a, int k);

std::string to_decimal(const Int& v);

bool is_integer(const Rat& q);
Int numerator_if_integer(const Rat& q);

} // namespace filtralab
