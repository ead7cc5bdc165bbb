#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mws {

// Multiplicities and characters exceed 64 bits already at modest parameters
// (the geometric construction uses m(P) up to 2^{theta-1}).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace mws
