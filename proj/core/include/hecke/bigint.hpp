#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace hecke
