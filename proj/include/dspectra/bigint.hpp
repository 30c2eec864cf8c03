#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dspectra {

// All library arithmetic is exact. No floating point anywhere in the
// decision paths; floats are allowed only as test oracles.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

}  // namespace dspectra
