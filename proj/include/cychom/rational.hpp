#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace cychom {

using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace cychom
