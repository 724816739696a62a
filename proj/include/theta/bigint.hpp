#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRat& x) { return x.sign(); }

}  // namespace theta
